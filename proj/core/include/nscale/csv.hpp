#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "nscale/grid.hpp"

namespace nscale {

/// Decimal text with 17 significant digits; round-trips every double.
std::string format_double(double v);

/// Header row, optional '#' comment lines after it, then data rows.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_comment(const std::string& line);
  void add_row(std::vector<std::string> cells);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> comments_;
  std::vector<std::vector<std::string>> rows_;
};

/// Packet dump: index per axis, coordinate per axis, re, im.
CsvTable packet_table(const WavePacket& psi);

}  // namespace nscale
