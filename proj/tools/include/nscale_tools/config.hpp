#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nscale::tools {

// Anything wrong with the user's configuration. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key=value settings. Every experiment declares its keys up front with
/// defaults; files and overrides may only touch declared keys.
class Config {
 public:
  explicit Config(std::map<std::string, std::string> defaults);

  /// Lines are `key = value`; blank lines and lines starting with '#' are skipped.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin = "config");
  /// "key=value" as given to --set.
  void apply_override(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& str(const std::string& key) const;
  double num(const std::string& key) const;
  int integer(const std::string& key) const;
  std::uint64_t natural(const std::string& key) const;
  bool flag(const std::string& key) const;
  /// Comma-separated numbers; the empty string is the empty list.
  std::vector<double> list(const std::string& key) const;
  std::vector<int> int_list(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

double parse_double(const std::string& text, const std::string& what);
long long parse_int(const std::string& text, const std::string& what);

}  // namespace nscale::tools
