#include <doctest.h>

#include "edgepoly/sweep.hpp"
#include "helpers.hpp"

using namespace edgepoly;

namespace {

// Decomposability census for labeled connected graphs, frozen from an
// independent exhaustive recount.
struct Expected {
  int n;
  std::uint64_t graphs, skipped, decomposable, i_only, ii_only, both, neither;
};
constexpr Expected kExpected[] = {
    {1, 1, 1, 0, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0, 0, 1},
    {3, 4, 0, 0, 0, 0, 0, 4},
    {4, 38, 0, 10, 7, 0, 3, 28},
    {5, 728, 0, 426, 266, 0, 160, 302},
};

void check_rows(const SweepSummary& sum, int max_n) {
  REQUIRE(sum.rows.size() == static_cast<size_t>(max_n));
  for (const Expected& e : kExpected) {
    if (e.n > max_n) break;
    const SweepRow& r = sum.rows[static_cast<size_t>(e.n - 1)];
    CAPTURE(e.n);
    CHECK(r.graphs == e.graphs);
    CHECK(r.skipped == e.skipped);
    CHECK(r.decomposable == e.decomposable);
    CHECK(r.type_i_only == e.i_only);
    CHECK(r.type_ii_only == e.ii_only);
    CHECK(r.both == e.both);
    CHECK(r.neither == e.neither);
  }
}

}  // namespace

TEST_CASE("serial sweep up to n=5 with oracle: expected census, no violations") {
  SweepOptions opts;
  opts.max_n = 5;
  opts.oracle = true;
  SweepSummary sum = run_sweep_serial(opts);
  check_rows(sum, 5);
  CHECK(sum.violations.empty());
  CHECK(sum.findings.empty());
}

TEST_CASE("parallel sweep matches the serial reference for any thread count") {
  SweepOptions opts;
  opts.max_n = 5;
  opts.oracle = true;
  SweepSummary serial = run_sweep_serial(opts);
  for (int jobs : {1, 2, 3}) {
    opts.jobs = jobs;
    SweepSummary par = run_sweep(opts);
    REQUIRE(par.rows.size() == serial.rows.size());
    for (size_t k = 0; k < serial.rows.size(); ++k) {
      CHECK(par.rows[k].graphs == serial.rows[k].graphs);
      CHECK(par.rows[k].skipped == serial.rows[k].skipped);
      CHECK(par.rows[k].decomposable == serial.rows[k].decomposable);
      CHECK(par.rows[k].type_i_only == serial.rows[k].type_i_only);
      CHECK(par.rows[k].type_ii_only == serial.rows[k].type_ii_only);
      CHECK(par.rows[k].both == serial.rows[k].both);
      CHECK(par.rows[k].neither == serial.rows[k].neither);
    }
    CHECK(par.violations.size() == serial.violations.size());
    CHECK(par.findings.size() == serial.findings.size());
  }
}

TEST_CASE("sweep without oracle still runs the structural checks") {
  SweepOptions opts;
  opts.max_n = 4;
  SweepSummary sum = run_sweep(opts);
  check_rows(sum, 4);
  CHECK(sum.violations.empty());
}

TEST_CASE("sweep caps") {
  SweepOptions opts;
  opts.max_n = 8;
  CHECK_THROWS_AS(run_sweep(opts), InputError);
  opts.max_n = 0;
  CHECK_THROWS_AS(run_sweep(opts), InputError);
}

// Frozen enumeration census at the cap; no oracle (3^7 scans per graph would
// add nothing the n<=6 comparison has not already established), but all
// structural checks stay on.
TEST_CASE("n=7 census regression") {
  SweepOptions opts;
  opts.max_n = 7;
  SweepSummary sum = run_sweep(opts);
  const SweepRow& r = sum.rows[6];
  CHECK(r.graphs == 1866256);
  CHECK(r.decomposable == 1630094);
  CHECK(r.type_i_only == 1040638);
  CHECK(r.type_ii_only == 16170);
  CHECK(r.both == 573286);
  CHECK(r.neither == 236162);
  CHECK(sum.violations.empty());
  CHECK(sum.findings.empty());
}
