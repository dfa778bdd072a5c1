#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "indep/bounds.hpp"
#include "support/subprocess.hpp"

using nlohmann::json;
using testutil::fields_of;
using testutil::lines_of;
using testutil::run_cli;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/indep_cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("transform and invert round trip on the command line") {
  auto r = run_cli("transform --x 1/2,1/2 --exact");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1/2,1/4\n");

  auto back = run_cli("invert --t 1/2,1/4 --exact");
  CHECK(back.exit_code == 0);
  CHECK(back.out == "1/2,1/2\n");

  auto f = run_cli("transform --x 0.5,0.5");
  CHECK(f.exit_code == 0);
  CHECK(f.out == "0.5,0.25\n");

  auto fb = run_cli("invert --t 0.5,0.25");
  CHECK(fb.exit_code == 0);
  CHECK(fb.out == "0.5,0.5\n");
}

TEST_CASE("union and sym-sums output") {
  auto u = run_cli("union --x 1/2,1/3,1/4 --exact");
  CHECK(u.exit_code == 0);
  CHECK(u.out == "3/4\n");

  auto s = run_cli("sym-sums --x 1/2,1/3,1/4 --exact");
  CHECK(s.exit_code == 0);
  auto lines = lines_of(s.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "k,S_k,partial alternating sum");
  CHECK(lines[1] == "1,13/12,13/12");
  CHECK(lines[2] == "2,3/8,17/24");
  CHECK(lines[3] == "3,1/24,3/4");
}

TEST_CASE("bonferroni and tail-cert verbs") {
  auto b = run_cli("bonferroni --x 1/2,1/2,1/2 --exact --r 1");
  CHECK(b.exit_code == 0);
  auto lines = lines_of(b.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "lower_raw,upper_raw,lower,upper");
  CHECK(lines[1] == "3/4,3/2,3/4,1/1");

  auto tc = run_cli("tail-cert --family geometric --a 1/2 --ratio 1/2 --K 3");
  CHECK(tc.exit_code == 0);
  auto tl = lines_of(tc.out);
  REQUIRE(tl.size() == 2);
  CHECK(tl[0] == "next_sum_upper,remainder_bound,decay_ratio");
  auto vals = fields_of(tl[1]);
  REQUIRE(vals.size() == 3);
  CHECK(std::stod(vals[0]) == doctest::Approx(0.005952380952).epsilon(1e-9));
  CHECK(std::stod(vals[1]) == doctest::Approx(0.006802721088).epsilon(1e-9));
  CHECK(std::stod(vals[2]) == doctest::Approx(0.125));
}

TEST_CASE("malformed input exits 2, domain violations exit 1") {
  CHECK(run_cli("transform --x abc --exact").exit_code == 2);
  CHECK(run_cli("transform --x abc").exit_code == 2);
  CHECK(run_cli("transform --bogus 3").exit_code == 2);
  CHECK(run_cli("bounds-table --kind bogus").exit_code == 2);
  CHECK(run_cli("sample --x 0.5 --format yaml").exit_code == 2);
  std::string bad = temp_file("bad.json", "{ not json");
  CHECK(run_cli("transform --in " + bad + " --exact").exit_code == 2);
  // Inline and file input at once contradict each other.
  CHECK(run_cli("transform --x 1/2 --in " + bad + " --exact").exit_code == 2);
  // A float file under --exact is a mode clash.
  std::string floats = temp_file("floats.json", "[0.5,0.25]");
  CHECK(run_cli("transform --in " + floats + " --exact").exit_code == 2);
  CHECK(run_cli("transform --in " + floats).exit_code == 0);

  CHECK(run_cli("invert --t 1/2,3/4 --exact").exit_code == 1);         // prefix > 1
  CHECK(run_cli("bonferroni --x 1/2 --exact --r 5").exit_code == 1);   // 2r-1 > N
  CHECK(run_cli("tail-cert --family shifted-harmonic --K 3").exit_code == 1);
  CHECK(run_cli("union --x 1/2,3/2 --exact").exit_code == 1);          // outside [0,1]

  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("bounds-table spot rows") {
  auto r = run_cli("bounds-table --kind U --N 5 --from 2 --to 2 --step 1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "kind,N,arg,value");
  CHECK(lines[1] == "U,5,2,0.92224");

  auto s1 = run_cli("bounds-table --kind S --N inf --from 1 --to 1 --step 1");
  CHECK(lines_of(s1.out)[1] == "S,inf,1,inf");

  auto bb = run_cli("best-bound --s 1.5");
  CHECK(lines_of(bb.out)[1] == "Uenv,2,1.5,0.9375");

  auto sup = run_cli("bounds-table --kind supT --N 3 --from 0.5 --to 2.5 --step 2");
  auto sl = lines_of(sup.out);
  REQUIRE(sl.size() == 3);
  CHECK(sl[1] == "supT,3,0.5,0.5");
  CHECK(sl[2] == "supT,3,2.5,1");

  auto inf = run_cli("bounds-table --kind infX --N inf --from 0.4 --to 0.4 --step 1");
  CHECK(lines_of(inf.out)[1] == "infX,inf,0.4,0.4");
}

TEST_CASE("bounds-table infinite column tracks the closed forms") {
  auto r = run_cli("bounds-table --kind U --N inf");
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 102);  // header + s grid 0..5 step 0.05
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == "U");
    CHECK(f[1] == "inf");
    double arg = std::stod(f[2]);
    CHECK(std::abs(std::stod(f[3]) - indep::lower_union_given_sum_infinite(arg)) <=
          1e-11);
  }

  auto s = run_cli("bounds-table --kind S --N inf");
  auto sl = lines_of(s.out);
  REQUIRE(sl.size() == 101);  // header + u grid 0..0.99 step 0.01
  for (std::size_t i = 1; i < sl.size(); ++i) {
    auto f = fields_of(sl[i]);
    double arg = std::stod(f[2]);
    CHECK(std::abs(std::stod(f[3]) - indep::upper_sum_given_union_infinite(arg)) <=
          1e-11);
  }

  // Out-of-domain (s > N) rows are skipped for finite N.
  auto u2 = run_cli("bounds-table --kind U --N 2");
  for (const auto& line : lines_of(u2.out))
    if (!line.empty() && line[0] == 'U') CHECK(std::stod(fields_of(line)[2]) <= 2.0);
}

TEST_CASE("identical runs are byte-identical") {
  auto a = run_cli("bounds-table");
  auto b = run_cli("bounds-table");
  CHECK(a.out == b.out);

  auto s1 = run_cli("bc-scan --family shifted-harmonic --n-max 6 --samples 5000 --seed 7");
  auto s2 = run_cli("bc-scan --family shifted-harmonic --n-max 6 --samples 5000 --seed 7");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);

  auto m1 = run_cli("sample --x 0.5,0.25 --samples 4000 --seed 3 --streams 2");
  auto m2 = run_cli("sample --x 0.5,0.25 --samples 4000 --seed 3 --streams 2");
  CHECK(m1.out == m2.out);
}

TEST_CASE("realize then verify, on disk") {
  std::string path = "/tmp/indep_cli_test_construction.json";
  auto r = run_cli("realize --x 1/2,1/3,1/4 --out " + path);
  CHECK(r.exit_code == 0);

  auto v = run_cli("verify --in " + path);
  CHECK(v.exit_code == 0);
  CHECK(v.out == "ok\n");

  // Verification of a dependent construction names the offending subset.
  std::string dep = temp_file("dependent.json", R"({
    "probs": ["1/2", "1/2"],
    "events": [
      [{"x_lo": "0/1", "x_hi": "1/1", "y_lo": "0/1", "y_hi": "1/2"}],
      [{"x_lo": "0/1", "x_hi": "1/1", "y_lo": "0/1", "y_hi": "1/2"}]
    ],
    "atoms": {
      "3": [{"x_lo": "0/1", "x_hi": "1/1", "y_lo": "0/1", "y_hi": "1/2"}],
      "0": [{"x_lo": "0/1", "x_hi": "1/1", "y_lo": "1/2", "y_hi": "1/1"}]
    }
  })");
  auto bad = run_cli("verify --in " + dep);
  CHECK(bad.exit_code == 1);
  auto bl = lines_of(bad.out);
  REQUIRE(bl.size() == 2);
  CHECK(bl[0] == "independence fails for 1 subset(s)");
  CHECK(bl[1] == "events 1,2: measure 1/2");

  // A structurally broken document is a parse failure, not a verify failure.
  std::string torn = temp_file("torn.json", R"({"probs": ["1/2"], "events": [[]]})");
  CHECK(run_cli("verify --in " + torn).exit_code == 2);

  // The construction file also feeds the samplers.
  auto geo = run_cli("sample --method geometric --in " + path +
                     " --samples 20000 --seed 9 --streams 2");
  CHECK(geo.exit_code == 0);
  auto gl = lines_of(geo.out);
  REQUIRE(gl.size() == 2);
  CHECK(gl[0] == "method,samples,estimate,stderr");
  auto gf = fields_of(gl[1]);
  CHECK(gf[0] == "geometric");
  CHECK(gf[1] == "20000");
  CHECK(std::stod(gf[2]) == doctest::Approx(0.75).epsilon(0.05));

  auto ber = run_cli("sample --method bernoulli --in " + path +
                     " --samples 20000 --seed 9");
  CHECK(fields_of(lines_of(ber.out)[1])[0] == "bernoulli");
}

TEST_CASE("scan output shape") {
  auto r = run_cli("bc-scan --family shifted-harmonic --n-max 5 --samples 4000 --seed 1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "N,exact,empirical,stderr");
  CHECK(fields_of(lines[1])[1] == "0.5");
  CHECK(fields_of(lines[2])[1] == "0.666666666667");
  CHECK(fields_of(lines[5])[1] == "0.833333333333");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::to_string(i));
    double exact = std::stod(f[1]);
    double emp = std::stod(f[2]);
    double se = std::stod(f[3]);
    CHECK(std::abs(emp - exact) <= 6.0 * se + 1e-9);
  }
}

TEST_CASE("counterexample verb") {
  auto r = run_cli("counterexample --x 0.5 --N 3");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "union,bound_rhs,violated");
  CHECK(lines[1] == "0.5,0.875,true");

  auto one = run_cli("counterexample --x 0.5 --N 1");
  CHECK(lines_of(one.out)[1] == "0.5,0.5,false");
}

TEST_CASE("json format variants parse as JSON") {
  auto u = run_cli("union --x 1/2,1/3 --exact --format json");
  CHECK(json::parse(u.out) == json("2/3"));

  auto t = run_cli("transform --x 1/2,1/2 --exact --format json");
  CHECK(json::parse(t.out) == json::parse(R"(["1/2","1/4"])"));

  auto bt = run_cli("bounds-table --kind U --N 2 --from 1 --to 1 --step 1 --format json");
  json rows = json::parse(bt.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["kind"] == "U");
  CHECK(rows[0]["N"] == "2");
  CHECK(std::stod(rows[0]["value"].get<std::string>()) == doctest::Approx(0.75));

  auto ce = run_cli("counterexample --x 0.5 --N 3 --format json");
  json rep = json::parse(ce.out);
  CHECK(rep["violated"] == true);
  CHECK(rep["bound_rhs"].get<double>() == doctest::Approx(0.875));

  auto bc = run_cli(
      "bc-scan --family shifted-harmonic --n-max 3 --samples 2000 --seed 4 --format json");
  json scan = json::parse(bc.out);
  REQUIRE(scan.size() == 3);
  CHECK(scan[0]["exact"] == "1/2");
  CHECK(scan[2]["exact"] == "3/4");

  auto sy = run_cli("sym-sums --x 1/2,1/3 --exact --format json");
  json sums = json::parse(sy.out);
  CHECK(sums[0]["S_k"] == "5/6");
  CHECK(sums[1]["partial"] == "2/3");
}
