#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "nscale_tools/experiments.hpp"

using namespace nscale::tools;

namespace {

RunReport run(const std::string& name, std::vector<std::string> sets) {
  return run_experiment(find_experiment(name), "", sets);
}

const Assertion* assertion(const RunReport& r, const std::string& name) {
  for (const auto& a : r.assertions) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

// Column `col` of every row whose first cell is `key`.
std::vector<std::string> column(const RunReport& r, const std::string& key, std::size_t col) {
  std::vector<std::string> out;
  for (const auto& row : r.table.rows()) {
    if (row[0] == key) out.push_back(row[col]);
  }
  return out;
}

const std::vector<std::string> kSmallDetector = {"grid.lo=-4", "grid.hi=4", "grid.n=32",
                                                 "detector.deltas=1,0.5,0.25"};

}  // namespace

TEST_CASE("registry") {
  CHECK(experiments().size() == 6u);
  for (const char* name : {"axioms", "paths", "packet", "detector-sweep", "gauge-check", "commerce-demo"}) {
    CHECK(find_experiment(name).name == name);
    CHECK(find_experiment(name).defaults.count("seed") == 1u);
  }
  CHECK_THROWS_AS(find_experiment("nope"), ConfigError);
}

TEST_CASE("axioms") {
  const auto r = run("axioms", {"axioms.cases=500", "axioms.polynomials=100"});
  CHECK(r.passed());
  CHECK(r.assertions.size() == 14u);
  CHECK(r.table.header() == std::vector<std::string>{"law", "cases", "max_rel_error", "tolerance"});

  const auto fixed = run("axioms", {"axioms.cases=300", "axioms.scales=0.1,1,10", "axioms.polynomials=0"});
  CHECK(fixed.passed());
  CHECK(fixed.assertions.size() == 13u);

  CHECK_FALSE(run("axioms", {"axioms.cases=300", "axioms.tol=0", "axioms.polynomials=0"}).passed());
  CHECK_THROWS_AS(run("axioms", {"axioms.r_min=0"}), ConfigError);
  CHECK_THROWS_AS(run("axioms", {"axioms.cases=ten"}), ConfigError);
}

TEST_CASE("paths") {
  const auto grad = run("paths", {});
  CHECK(grad.passed());
  CHECK(column(grad, "integrability", 1) == std::vector<std::string>{"integrable"});

  const auto zero = run("paths", {"field.kind=zero"});
  CHECK(zero.passed());
  for (const auto& v : column(zero, "loop", 2)) CHECK(v == "0");
  for (const auto& v : column(zero, "reciprocity", 2)) CHECK(v == "1");
  CHECK(assertion(zero, "quadrature_order")->detail == "exact");

  const auto rot = run("paths", {"field.kind=rotational", "field.curl=0.5"});
  CHECK(rot.passed());
  CHECK(column(rot, "integrability", 1) == std::vector<std::string>{"non-integrable"});
  CHECK_THROWS_AS(run("paths", {"field.kind=spiral"}), ConfigError);
  CHECK_THROWS_AS(run("paths", {"field.kind=rotational", "dim=1", "grid.lo=0"}), ConfigError);
}

TEST_CASE("packet") {
  const auto r = run("packet", {});
  CHECK(r.passed());
  CHECK(column(r, "scaled_amp", 1).size() == 256u);
  CHECK(column(r, "standard_mean", 4).size() == 1u);

  // Zero coupling reproduces the standard mean exactly.
  const auto off = run("packet", {"field.coupling=0", "packet.dump=false"});
  CHECK(off.passed());
  CHECK(assertion(off, "reduces_to_standard") != nullptr);
  CHECK(column(off, "scaled_mean_normalized", 4) == column(off, "standard_mean", 4));
  CHECK(column(off, "scaled_amp", 1).empty());

  CHECK_THROWS_WITH_AS(run("packet", {"dim=2", "grid.n=64", "field.kind=rotational", "field.curl=0.2",
                                      "packet.mu=0,0", "packet.k0=0,0", "packet.anchor=-10,-10",
                                      "packet.volume.lo=-8,-8", "packet.volume.hi=8,8"}),
                       doctest::Contains("refused"), ConfigError);
  CHECK_THROWS_AS(run("packet", {"packet.mu=0,0"}), ConfigError);
  CHECK_THROWS_AS(run("packet", {"packet.sigma=0.01"}), ConfigError);
}

TEST_CASE("detector sweep") {
  std::vector<std::string> sets = kSmallDetector;
  const auto r = run("detector-sweep", sets);
  CHECK(r.passed());
  CHECK(r.table.rows().size() == 4u);  // whole volume + three sizes

  sets.push_back("field.coupling=0");
  const auto off = run("detector-sweep", sets);
  CHECK(off.passed());
  for (const auto& row : off.table.rows()) CHECK(row[2] == "0");

  auto bad = kSmallDetector;
  bad.push_back("detector.deltas=3");  // 8 / 3 cubes
  CHECK_THROWS_AS(run("detector-sweep", bad), ConfigError);
  auto face = kSmallDetector;
  face.push_back("detector.anchor=face-center");
  face.push_back("detector.mode=normalized");
  CHECK(assertion(run("detector-sweep", face), "whole_volume")->passed);
}

TEST_CASE("gauge check") {
  const auto sine = run("gauge-check", {});
  CHECK(sine.passed());
  const auto lin = run("gauge-check", {"gauge.phi=linear", "gauge.phi.periods=2"});
  CHECK(lin.passed());
  CHECK(assertion(lin, "linear_xi_shift")->passed);

  const auto none = run("gauge-check", {"gauge.phi=identity"});
  CHECK(none.passed());
  for (const auto& row : none.table.rows()) {
    if (row[2] != "unitarity_defect") CHECK(row[3] == "0");
  }

  const auto su2 = run("gauge-check", {"dim=2", "gauge.n_list=32,64,128", "gauge.components=2", "gauge.g2=1.1",
                                       "gauge.omega1=0.5,0.2", "gauge.omega3=-0.4,0.1", "field.c=0.2,0",
                                       "xi.linear=0.3,0.1", "packet.mu=4,4", "packet.k0=1,0"});
  CHECK(su2.passed());

  CHECK_THROWS_AS(run("gauge-check", {"gauge.g1=0"}), ConfigError);
  CHECK(run("gauge-check", {"gauge.g1=0", "gauge.phi=identity"}).passed());
  CHECK_THROWS_AS(run("gauge-check", {"gauge.omega1=0.3"}), ConfigError);
  CHECK_THROWS_AS(run("gauge-check", {"dim=3"}), ConfigError);
}

TEST_CASE("commerce demo") {
  const auto same = run("commerce-demo", {});
  CHECK(same.passed());
  CHECK(same.table.rows().size() == 6u);
  for (const auto& row : same.table.rows()) CHECK(row[6] == "equal");

  const auto differ = run("commerce-demo", {"commerce.experiment=1.25"});
  CHECK(differ.passed());
  for (const auto& row : differ.table.rows()) {
    CHECK(row[4] == "1.5");
    CHECK(row[5] == "1.25");
    CHECK(row[6] == "unequal");
  }
  // The scale factors themselves do depend on coupling and path.
  std::vector<std::string> r_theory;
  for (const auto& row : differ.table.rows()) r_theory.push_back(row[2]);
  std::sort(r_theory.begin(), r_theory.end());
  CHECK(std::unique(r_theory.begin(), r_theory.end()) - r_theory.begin() >= 4);
}

TEST_CASE("reports are deterministic and carry the config echo") {
  for (const auto& e : experiments()) {
    std::vector<std::string> sets;
    if (e.name == "detector-sweep") sets = kSmallDetector;
    if (e.name == "axioms") sets = {"axioms.cases=200", "axioms.polynomials=50"};
    const auto a = run_experiment(e, "", sets, "7").to_csv().str();
    const auto b = run_experiment(e, "", sets, "7").to_csv().str();
    CHECK(a == b);
    CHECK(a.find("\n# seed=7\n") != std::string::npos);
    CHECK(a.find("\n# experiment=" + e.name + "\n") != std::string::npos);
    CHECK(a.find("# assert ") != std::string::npos);
  }
}
