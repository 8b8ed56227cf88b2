#include "nscale/csv.hpp"

#include <cstdio>
#include <sstream>

#include "nscale/error.hpp"

namespace nscale {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw UsageError("CSV table needs a header");
}

void CsvTable::add_comment(const std::string& line) { comments_.push_back(line); }

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw UsageError("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                     std::to_string(header_.size()));
  }
  rows_.push_back(std::move(cells));
}

namespace {

void write_line(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
  write_line(os, header_);
  for (const auto& c : comments_) os << "# " << c << '\n';
  for (const auto& r : rows_) write_line(os, r);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

CsvTable packet_table(const WavePacket& psi) {
  static const char* axes[] = {"x", "y", "z"};
  const Grid& g = psi.grid();
  std::vector<std::string> header;
  for (int a = 0; a < g.dim(); ++a) header.push_back(std::string("i") + axes[a]);
  for (int a = 0; a < g.dim(); ++a) header.push_back(axes[a]);
  header.push_back("re");
  header.push_back("im");
  CsvTable table(header);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const Index3 idx = g.index(i);
    const Point y = g.point(i);
    std::vector<std::string> row;
    for (int a = 0; a < g.dim(); ++a) row.push_back(std::to_string(idx[static_cast<std::size_t>(a)]));
    for (int a = 0; a < g.dim(); ++a) row.push_back(format_double(y[a]));
    row.push_back(format_double(psi[i].real()));
    row.push_back(format_double(psi[i].imag()));
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace nscale
