#include "nscale_tools/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nscale::tools {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(what + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

long long parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  long long v = 0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(what + ": expected an integer, got '" + text + "'");
  }
  return v;
}

Config::Config(std::map<std::string, std::string> defaults) : values_(std::move(defaults)) {}

void Config::set(const std::string& key, const std::string& value) {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  it->second = value;
}

void Config::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    set(key, trim(t.substr(eq + 1)));
  }
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  load_text(buf.str(), path);
}

void Config::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

const std::string& Config::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

double Config::num(const std::string& key) const { return parse_double(str(key), key); }

int Config::integer(const std::string& key) const {
  const long long v = parse_int(str(key), key);
  if (v < -1000000000LL || v > 1000000000LL) throw ConfigError(key + ": integer out of range");
  return static_cast<int>(v);
}

std::uint64_t Config::natural(const std::string& key) const {
  const long long v = parse_int(str(key), key);
  if (v < 0) throw ConfigError(key + ": must not be negative");
  return static_cast<std::uint64_t>(v);
}

bool Config::flag(const std::string& key) const {
  const std::string& v = str(key);
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

std::vector<double> Config::list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_commas(str(key))) out.push_back(parse_double(item, key));
  return out;
}

std::vector<int> Config::int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : split_commas(str(key))) out.push_back(static_cast<int>(parse_int(item, key)));
  return out;
}

}  // namespace nscale::tools
