#include <doctest.h>

#include <cmath>
#include <string>

#include "racahlab/panels.hpp"
#include "racahlab/report.hpp"
#include "racahlab/suites.hpp"
#include "racahlab/wilson_functions.hpp"

using namespace racahlab;

TEST_CASE("panel generator") {
  PanelRng r(5489);
  CHECK(r.uniform() == 0.7868209548678019);
  PanelRng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  PanelRng c(11);
  for (int i = 0; i < 200; ++i) {
    int v = c.integer(10, 11);
    CHECK((v == 10 || v == 11));
  }
}

TEST_CASE("panels respect their windows") {
  for (const auto& k : k_panel(3, 20)) {
    CHECK(k.k1 > 0);
    CHECK(k.k3 <= 2.0);
  }
  for (const auto& k : k_panel(3, 5, 1.0, 2.5)) CHECK(k.k2 > 1.0);
  for (const auto& w : wilson_function_panel(4, 20)) CHECK(in_convergence_window(w));
  for (const auto& w : wilson_sum_panel(5, 10)) CHECK(in_wilson_sum_window(w));
  CHECK(k_panel(9, 3)[2].k1 == k_panel(9, 3)[2].k1);
  CHECK(suite_seed(1, 0) == 1u);
  CHECK(suite_seed(1, 1) != suite_seed(1, 2));
}

TEST_CASE("checks and report rendering") {
  Check ok = make_check("b.second", "x = y", 1e-8, 3e-9);
  Check bad = make_check("a.first", "u = v", 1e-8, 2e-8);
  Check nan = make_check("c.nan", "u = v", 1e-8, NAN);
  Check info = make_info("d.info", "w", 1.5);
  CHECK(ok.pass());
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(nan.pass());
  CHECK(info.pass());
  Report r;
  r.command = "test";
  r.add(ok);
  r.add(bad);
  CHECK_FALSE(r.all_pass());
  std::string j = to_json(r, false);
  CHECK(j.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j.find("a.first") < j.find("b.second"));
  CHECK(j.find("metadata") == std::string::npos);
  CHECK(to_json(r, true).find("timings_seconds") != std::string::npos);
  CHECK(to_json(r, false) == j);
  std::string csv = to_csv(r);
  CHECK(csv.rfind("name,status,residual,tolerance,anchor\na.first,FAIL,", 0) == 0);
  CHECK(to_text(r).find("FAILURES PRESENT") != std::string::npos);
}

TEST_CASE("number formatting") {
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(1e-20) == "9.9999999999999995e-21");
  CHECK(format_double(NAN) == "nan");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  MaxTracker m;
  m.add(-3.0, "x");
  m.add(2.0, "y");
  CHECK(m.value == 3.0);
  CHECK(m.where == "x");
}
