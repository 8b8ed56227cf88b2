#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "nscale_tools/config.hpp"

using namespace nscale::tools;

namespace {

Config sample() {
  return Config({{"a", "1"}, {"b", "0.5,1.5"}, {"c", ""}, {"flag", "true"}, {"name", "x"}});
}

}  // namespace

TEST_CASE("defaults, text and overrides") {
  Config cfg = sample();
  CHECK(cfg.integer("a") == 1);
  CHECK(cfg.list("b") == std::vector<double>{0.5, 1.5});
  CHECK(cfg.list("c").empty());
  CHECK(cfg.flag("flag"));

  cfg.load_text("# comment\n\n  a = 7 \nname=hello world\n");
  CHECK(cfg.integer("a") == 7);
  CHECK(cfg.str("name") == "hello world");
  cfg.apply_override("b=1e-3, -2");
  CHECK(cfg.list("b") == std::vector<double>{1e-3, -2.0});
  cfg.apply_override("a=+3");
  CHECK(cfg.integer("a") == 3);
  CHECK(cfg.num("a") == 3.0);
}

TEST_CASE("malformed input is a config error") {
  Config cfg = sample();
  CHECK_THROWS_AS(cfg.load_text("nokey\n"), ConfigError);
  CHECK_THROWS_AS(cfg.load_text("=3\n"), ConfigError);
  CHECK_THROWS_AS(cfg.load_text("zzz=3\n"), ConfigError);
  CHECK_THROWS_AS(cfg.apply_override("a"), ConfigError);
  CHECK_THROWS_AS(cfg.apply_override("unknown=1"), ConfigError);
  CHECK_THROWS_AS(cfg.load_file("/nonexistent/dir/cfg.txt"), ConfigError);

  cfg.set("a", "1.5");
  CHECK_THROWS_AS(cfg.integer("a"), ConfigError);
  cfg.set("a", "abc");
  CHECK_THROWS_AS(cfg.num("a"), ConfigError);
  cfg.set("a", "nan");
  CHECK_THROWS_AS(cfg.num("a"), ConfigError);
  cfg.set("a", "-1");
  CHECK_THROWS_AS(cfg.natural("a"), ConfigError);
  cfg.set("b", "1,,2");
  CHECK_THROWS_AS(cfg.list("b"), ConfigError);
  cfg.set("b", "1,2,");
  CHECK_THROWS_AS(cfg.list("b"), ConfigError);
  cfg.set("flag", "maybe");
  CHECK_THROWS_AS(cfg.flag("flag"), ConfigError);
  CHECK_THROWS_AS(cfg.str("missing"), ConfigError);
}

TEST_CASE("config files") {
  const std::string path = "test_config_tmp.cfg";
  {
    std::ofstream out(path);
    out << "a=42\n# b=9\nflag = no\n";
  }
  Config cfg = sample();
  cfg.load_file(path);
  CHECK(cfg.integer("a") == 42);
  CHECK(cfg.list("b").size() == 2u);
  CHECK_FALSE(cfg.flag("flag"));
  std::remove(path.c_str());
}
