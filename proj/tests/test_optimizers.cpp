#include "doctest.h"

#include <cmath>

#include "armijo/optimizers.hpp"
#include "armijo/testfns.hpp"
#include "test_objectives.hpp"

using namespace armijo;
using armijo::testing::pt;

namespace {

const LineSearchConfig kPaperSearch{0.5, 0.7, 1.0, CapFunction::none()};
const LineSearchConfig kPaperCapped{0.5, 0.7, 1.0, CapFunction::paper_sqrt(1.0)};

double max_delta(const Trajectory& t) {
  double m = 0.0;
  for (const auto& r : t.records) m = std::max(m, r.delta);
  return m;
}

void check_armijo_and_monotone(const Trajectory& t) {
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const auto& r = t.records[i];
    REQUIRE(r.armijo_lhs.has_value());
    REQUIRE(r.armijo_rhs.has_value());
    CHECK(*r.armijo_lhs <= *r.armijo_rhs);
    CHECK(r.delta > 0.0);
    if (i > 0) CHECK(r.f_value <= t.records[i - 1].f_value);
  }
}

}  // namespace

TEST_CASE("delta_schedule_value") {
  CHECK(delta_schedule_value({DiminishingSchedule::Kind::Harmonic, 1.0}, 0) == 1.0);
  CHECK(delta_schedule_value({DiminishingSchedule::Kind::Harmonic, 1.0}, 9) == 0.1);
  CHECK(delta_schedule_value({DiminishingSchedule::Kind::Harmonic, 2.0}, 3) == 0.5);
  CHECK_THROWS_AS(delta_schedule_value({}, -1), std::invalid_argument);
}

TEST_CASE("Example 1: both Armijo optimizers reach the same point in 10 steps") {
  const Objective f = example1().objective;
  const StoppingRule ten{10, 1e-10};
  const Trajectory bt = run(f, BacktrackingGD{kPaperSearch}, pt({4.0, -5.0}), ten);
  const Trajectory ub = run(f, UnboundedGD{kPaperCapped}, pt({4.0, -5.0}), ten);
  for (const Trajectory* t : {&bt, &ub}) {
    CHECK(t->steps == 10);
    CHECK(t->termination == Termination::MaxItersReached);
    CHECK(std::abs(t->final_point(0) - 0.09325947) <= 1e-4);
    CHECK(std::abs(t->final_point(1) + 0.09325947) <= 1e-4);
    check_armijo_and_monotone(*t);
  }
  CHECK((bt.final_point - ub.final_point).norm() <= 1e-8);
}

TEST_CASE("Example 1 with the default budget stalls on round-off after the limit is reached") {
  const Objective f = example1().objective;
  try {
    (void)run(f, BacktrackingGD{kPaperSearch}, pt({4.0, -5.0}));
    FAIL("expected RunAborted");
  } catch (const RunAborted& e) {
    CHECK(e.reason() == RunAborted::Reason::LineSearchStalled);
    const Trajectory& t = e.partial();
    CHECK(t.steps >= 10);
    CHECK(std::abs(t.final_point(0) - 0.09325947) <= 1e-4);
    CHECK(std::abs(t.final_point(1) + 0.09325947) <= 1e-4);
    // Gradient floor from cancellation in f(x - delta g) - f(x), above 1e-10.
    CHECK(f.gradient(t.final_point).norm() < 1e-8);
  }
}

TEST_CASE("Example 2: Unbounded GD reaches the grid rate beta^-32") {
  const Trajectory t = run(example2().objective, UnboundedGD{kPaperCapped}, pt({0.1, 15.0}));
  CHECK(t.termination == Termination::GradientTolReached);
  CHECK(t.steps >= 87);
  CHECK(t.steps <= 91);
  const double final_delta = t.records.back().delta;
  double grid = 1.0;
  for (int i = 0; i < 32; ++i) grid /= 0.7;
  CHECK(final_delta == grid);
  CHECK(std::abs(final_delta - 90544.63441298596) <= 1e-9 * 90544.63441298596);
  CHECK(std::abs(t.final_point(0) - 0.00025327) <= 1e-5);
  CHECK(std::abs(t.final_point(1) - 0.00025327) <= 1e-5);
  check_armijo_and_monotone(t);

  // Each delta_n stays below max(delta0, h(|grad f(x_n)|)).
  for (const auto& r : t.records) {
    CHECK(r.delta <= std::max(1.0, cap_value(kPaperCapped.cap, r.grad_norm)));
  }
}

TEST_CASE("Unbounded GD grows far beyond Backtracking GD at a degenerate minimum") {
  const Objective f = example2().objective;
  const Trajectory ub = run(f, UnboundedGD{kPaperCapped}, pt({0.1, 15.0}));
  const Trajectory bt = run(f, BacktrackingGD{kPaperSearch}, pt({0.1, 15.0}), {5000, 1e-10});
  CHECK(max_delta(bt) <= 1.0);
  CHECK(max_delta(ub) > 1e3 * max_delta(bt));
}

TEST_CASE("trajectory records reproduce every update bit-for-bit") {
  const Objective f = example2().objective;
  const Trajectory t = run(f, UnboundedGD{kPaperCapped}, pt({0.1, 15.0}));
  for (std::size_t i = 0; i + 1 < t.records.size(); ++i) {
    const auto& r = t.records[i];
    const Point next = r.x - r.delta * r.grad;
    CHECK((next.array() == t.records[i + 1].x.array()).all());
    CHECK(f.value(next) == t.records[i + 1].f_value);
    CHECK(f.value(r.x) == r.f_value);
  }
  const auto& last = t.records.back();
  CHECK(((last.x - last.delta * last.grad).array() == t.final_point.array()).all());
}

TEST_CASE("runs are deterministic") {
  const Objective f = example1().objective;
  const Trajectory a = run(f, UnboundedGD{kPaperCapped}, pt({4.0, -5.0}), {10, 1e-10});
  const Trajectory b = run(f, UnboundedGD{kPaperCapped}, pt({4.0, -5.0}), {10, 1e-10});
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK((a.records[i].x.array() == b.records[i].x.array()).all());
    CHECK(a.records[i].delta == b.records[i].delta);
    CHECK(a.records[i].f_value == b.records[i].f_value);
  }
}

TEST_CASE("stopping test happens before stepping") {
  const Trajectory t = run(testing::square(), BacktrackingGD{kPaperSearch}, pt({0.0}));
  CHECK(t.steps == 0);
  CHECK(t.records.empty());
  CHECK(t.termination == Termination::GradientTolReached);
  CHECK(t.final_point(0) == 0.0);
}

TEST_CASE("Standard GD with too large a rate diverges") {
  try {
    (void)run(testing::square(), StandardGD{1.5}, pt({1.0}));
    FAIL("expected RunAborted");
  } catch (const RunAborted& e) {
    CHECK(e.reason() == RunAborted::Reason::Divergence);
    const Trajectory& t = e.partial();
    REQUIRE(t.records.size() > 10);
    // x <- x - 1.5 * 2x = -2x
    for (std::size_t i = 0; i < 10; ++i) CHECK(t.records[i].x(0) == std::pow(-2.0, double(i)));
    CHECK_FALSE(t.records.front().armijo_lhs.has_value());
    CHECK_FALSE(unbounded_product_check(t).vanishes);
  }
}

TEST_CASE("Diminishing GD uses the harmonic schedule") {
  const Trajectory t = run(testing::square(), DiminishingGD{{DiminishingSchedule::Kind::Harmonic, 0.25}},
                           pt({1.0}), {20, 1e-10});
  REQUIRE(t.records.size() == 20);
  for (const auto& r : t.records) CHECK(r.delta == 0.25 / double(r.n + 1));
  CHECK(std::abs(t.final_point(0)) < 1.0);
}

TEST_CASE("uncapped two-way GD reports growth-limit hits") {
  // Linear f: Armijo never stops growth.
  const Trajectory t = run(testing::linear(1.0), UncappedTwoWayGD{kPaperSearch}, pt({0.0}), {3, 0.0});
  CHECK(t.growth_limit_hits == 3);
}

TEST_CASE("backtracking delta never exceeds delta0; unbounded respects its cap") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Point x0 = testing::uniform_point(rng, 2, -3.0, 3.0);
    const Objective f = example2().objective;
    const Trajectory bt = run(f, BacktrackingGD{kPaperSearch}, x0, {2000, 1e-10});
    for (const auto& r : bt.records) CHECK(r.delta <= 1.0);
    check_armijo_and_monotone(bt);
    const Trajectory ub = run(f, UnboundedGD{kPaperCapped}, x0, {2000, 1e-10});
    for (const auto& r : ub.records) {
      CHECK(r.delta <= std::max(1.0, cap_value(kPaperCapped.cap, r.grad_norm)));
    }
    check_armijo_and_monotone(ub);
  }
}

TEST_CASE("thinned recording keeps head, every m-th step and tail") {
  const Objective f = example2().objective;
  const Recording rec{100, 10, 10};
  const Trajectory thin = run(f, BacktrackingGD{kPaperSearch}, pt({0.1, 15.0}), {1000, 1e-10}, rec);
  const Trajectory full = run(f, BacktrackingGD{kPaperSearch}, pt({0.1, 15.0}), {1000, 1e-10});
  CHECK(thin.steps == 1000);
  // 0..9, 100..900 by 100, 990..999
  CHECK(thin.records.size() == 10 + 9 + 10);
  CHECK(thin.records.back().n == 999);
  CHECK(thin.records.back().delta == full.records.back().delta);
  CHECK((thin.final_point.array() == full.final_point.array()).all());
}

TEST_CASE("unbounded_product_check") {
  Trajectory one;
  StepRecord r;
  r.n = 0;
  r.x = pt({1.0});
  r.delta = 1.0;
  r.grad_norm = 5.0;
  one.records.push_back(r);
  const ProductCheck single = unbounded_product_check(one);
  CHECK(single.max_tail_product == 5.0);
  CHECK_FALSE(single.vanishes);
  CHECK_THROWS_AS(unbounded_product_check(Trajectory{}), std::invalid_argument);

  // The step length delta_n |grad f(x_n)| on Example 2 shrinks from O(10) to
  // O(1e-5) by the time |grad| reaches 1e-10.
  const Trajectory t = run(example2().objective, UnboundedGD{kPaperCapped}, pt({0.1, 15.0}));
  const ProductCheck tail = unbounded_product_check(t);
  const double first = t.records.front().delta * t.records.front().grad_norm;
  CHECK(tail.max_tail_product < 1e-5 * first);
  CHECK(tail.max_tail_product < 2e-5);
  CHECK(unbounded_product_check(t, 1e-4).vanishes);
}

TEST_CASE("run validates its inputs") {
  CHECK_THROWS_AS(run(example2().objective, BacktrackingGD{kPaperSearch}, pt({1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(run(example2().objective, UnboundedGD{kPaperSearch}, pt({1.0, 1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(run(testing::square(), StandardGD{0.0}, pt({1.0})), std::invalid_argument);
  CHECK_THROWS_AS(run(testing::square(), StandardGD{0.1}, pt({NAN})), std::invalid_argument);
  CHECK_THROWS_AS(run(testing::square(), StandardGD{0.1}, pt({1.0}), {0, 1e-10}),
                  std::invalid_argument);
}

TEST_CASE("observer sees every step, including thinned ones") {
  const Objective f = example2().objective;
  std::vector<StepRecord> seen;
  const Trajectory full = run(f, UnboundedGD{kPaperCapped}, pt({0.1, 15.0}));
  const Trajectory thin = run(f, UnboundedGD{kPaperCapped}, pt({0.1, 15.0}), {}, {7, 3, 3},
                              [&](const StepRecord& r) { seen.push_back(r); });
  REQUIRE(seen.size() == full.records.size());
  CHECK(thin.records.size() < seen.size());
  double largest = 0.0;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(seen[i].n == static_cast<long long>(i));
    CHECK(seen[i].delta == full.records[i].delta);
    largest = std::max(largest, seen[i].delta);
  }
  CHECK(thin.max_delta == largest);
  CHECK(full.max_delta == largest);
}
