#include <doctest.h>

#include "birkhoff/io.hpp"
#include "birkhoff/sweep.hpp"

using namespace birkhoff;

TEST_CASE("parallel classification sweep is bitwise identical to serial") {
  ClassifyGrid grid;
  grid.phi_samples = 9;
  grid.a_samples = 8;
  grid.b_samples = 8;
  const auto serial = classification_sweep(grid, ExecMode::kSerial);
  const auto parallel = classification_sweep(grid, ExecMode::kParallel);
  REQUIRE(serial.size() == parallel.size());
  CHECK(serial.size() > 100);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].phi == parallel[i].phi);
    CHECK(serial[i].a == parallel[i].a);
    CHECK(serial[i].b == parallel[i].b);
    CHECK(serial[i].verdict == parallel[i].verdict);
    CHECK(serial[i].oracle_divisible == parallel[i].oracle_divisible);
    CHECK(serial[i].agree == parallel[i].agree);
  }
  CHECK(classify_sweep_csv(serial) == classify_sweep_csv(parallel));
}

TEST_CASE("parallel boundary sweep is bitwise identical to serial") {
  const auto serial = boundary_sweep(90, ExecMode::kSerial);
  const auto parallel = boundary_sweep(90, ExecMode::kParallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i] == parallel[i]);
  }
}

TEST_CASE("consistency rule") {
  CHECK(verdicts_consistent(MarkovClass::kMarkovInterior, 0.6, 0.2, true, 1e-9));
  CHECK(!verdicts_consistent(MarkovClass::kMarkovInterior, 0.6, 0.2, false, 1e-9));
  CHECK(!verdicts_consistent(MarkovClass::kNotMarkov, 0.2, 0.6, true, 1e-9));
  CHECK(verdicts_consistent(MarkovClass::kNotMarkov, 0.2, 0.6, false, 1e-9));
  // NOT_MARKOV with a > b is outside the truncated oracle's reach.
  CHECK(verdicts_consistent(MarkovClass::kNotMarkov, 0.6, 0.2, true, 1e-9));
}
