#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "ordkit/error.hpp"
#include "ordkit/exact_lp.hpp"
#include "ordkit/representation.hpp"

using namespace ordkit;
using namespace testing_support;

namespace {

using Q = Rational;

PointVerdict pv(BoxPoint a, BoxPoint b, PairVerdict v) { return {std::move(a), std::move(b), v}; }

// Verdict from the oracle's own dot product.
PairVerdict naive_verdict(const std::vector<Q>& p, const BoxPoint& x, const BoxPoint& y) {
  const std::vector<long> xl(x.begin(), x.end()), yl(y.begin(), y.end());
  const Q d = naive::dot(p, xl) - naive::dot(p, yl);
  return d > 0 ? PairVerdict::succ : d < 0 ? PairVerdict::prec : PairVerdict::sim;
}

// Weak clause only, straight from the definition.
bool all_rows_hold(const VerdictSet& vs, const std::vector<Q>& p) {
  for (const auto& row : vs.pairs())
    if (naive_verdict(p, row.lhs, row.rhs) != row.verdict) return false;
  return true;
}

}  // namespace

TEST_SUITE("representation") {

TEST_CASE("verdicts induced by (1/3, 2/3) round-trip") {
  const VerdictSet vs(2, {pv({0, 1}, {1, 0}, PairVerdict::succ), pv({1, 1}, {2, 0}, PairVerdict::succ)});
  const auto res = solve_linear_representation(vs);
  REQUIRE(res.feasible());
  const auto& w = *res.witness;
  CHECK(w.weights[1] > w.weights[0]);
  CHECK(w.weights[0] + w.weights[1] == 1);
  CHECK(w.slack > 0);
  CHECK(all_rows_hold(vs, w.weights));
  CHECK(verify_witness(vs, w));
  CHECK(induced_verdicts(w.weights, vs) == std::vector<PairVerdict>{PairVerdict::succ, PairVerdict::succ});
}

TEST_CASE("two indifferences force (1/2, 1/2)") {
  const VerdictSet vs(2, {pv({2, 0}, {0, 2}, PairVerdict::sim), pv({1, 1}, {2, 0}, PairVerdict::sim)});
  const auto res = solve_linear_representation(vs);
  REQUIRE(res.feasible());
  CHECK(res.witness->weights == std::vector<Q>{Q(1, 2), Q(1, 2)});
  CHECK(res.witness->slack == Q(1, 2));
}

TEST_CASE("opposite strict verdicts are infeasible with a certificate") {
  const VerdictSet vs(2, {pv({1, 0}, {0, 1}, PairVerdict::succ), pv({0, 1}, {1, 0}, PairVerdict::succ)});
  const auto res = solve_linear_representation(vs);
  REQUIRE_FALSE(res.feasible());
  REQUIRE(res.certificate);
  CHECK(verify_certificate(vs, *res.certificate));
  Q verdict_sum = 0;
  for (const auto& t : res.certificate->terms) {
    if (t.kind == RowKind::verdict) verdict_sum += t.coefficient;
    CHECK(t.coefficient >= 0);
  }
  CHECK(verdict_sum > 0);

  // A tampered certificate fails.
  auto bad = *res.certificate;
  bad.terms.front().coefficient *= 3;
  CHECK_FALSE(verify_certificate(vs, bad));
}

TEST_CASE("input errors are not infeasibility") {
  CHECK_THROWS_AS(VerdictSet(2, {pv({1, 0}, {0, 1}, PairVerdict::succ), pv({1, 0}, {0, 1}, PairVerdict::prec)}),
                  InputError);
  CHECK_THROWS_AS(VerdictSet(2, {}), InputError);
  CHECK_THROWS_AS(VerdictSet(2, {pv({1}, {0, 1}, PairVerdict::succ)}), InputError);
  CHECK_THROWS_AS(VerdictSet(1, {pv({1}, {0}, PairVerdict::none)}), InputError);
  // The same pair in both orders, consistently, is fine.
  CHECK_NOTHROW(VerdictSet(2, {pv({1, 0}, {0, 1}, PairVerdict::succ), pv({0, 1}, {1, 0}, PairVerdict::prec)}));
}

TEST_CASE("positivity configurations") {
  // (1,0) ~ (0,0) forces p1 = 0.
  const VerdictSet vs(2, {pv({1, 0}, {0, 0}, PairVerdict::sim)});
  CHECK_FALSE(solve_linear_representation(vs, Positivity::strict).feasible());
  const auto relaxed = solve_linear_representation(vs, Positivity::relaxed);
  REQUIRE(relaxed.feasible());
  CHECK(relaxed.witness->weights == std::vector<Q>{Q(0), Q(1)});
  CHECK(verify_witness(vs, *relaxed.witness, Positivity::relaxed));
  CHECK_FALSE(verify_witness(vs, *relaxed.witness, Positivity::strict));
  CHECK(verify_certificate(vs, *solve_linear_representation(vs).certificate, Positivity::strict));
}

TEST_CASE("induced linear relations") {
  const auto half = induced_linear_relation({Q(1, 2), Q(1, 2)}, {{1, 0}, {0, 1}});
  CHECK(half.holds(0, 1));
  CHECK(half.holds(1, 0));
  CHECK(half.carrier()->label(0) == "(1,0)");

  const auto third = induced_linear_relation({Q(1, 3), Q(2, 3)}, {{3, 0}, {0, 2}});
  CHECK(third.holds(1, 0));
  CHECK_FALSE(third.holds(0, 1));

  const auto dom = induced_linear_relation({Q(1, 5), Q(4, 5)}, {{2, 1}, {2, 0}});
  CHECK(dom.holds(0, 1));
  CHECK_FALSE(dom.holds(1, 0));

  CHECK_THROWS_AS(induced_linear_relation({Q(1), Q(0)}, {{1, 0}}), InputError);
  CHECK_THROWS_AS(induced_linear_relation({Q(1, 2), Q(1, 3)}, {{1, 0}}), InputError);
}

TEST_CASE("linear relations on boxes") {
  const auto a = verify_definetti_properties({Q(1, 2), Q(1, 2)}, IntegerBox({0, 0}, {2, 2}));
  CHECK(a.all());
  CHECK(a.quadruples_checked > 0);
  const auto b = verify_definetti_properties({Q(1, 3), Q(2, 3)}, IntegerBox({0, 0}, {3, 3}));
  CHECK(b.monotone);
  CHECK(b.all());
  CHECK(b.dominance_pairs_checked > 0);
  CHECK_THROWS_AS(verify_definetti_properties({Q(1), Q(0)}, IntegerBox({0, 0}, {2, 2})), InputError);
  CHECK_THROWS_AS(verify_definetti_properties({Q(1, 2), Q(1, 2)}, IntegerBox({0, 0}, {9, 9})), CapExceeded);
}

TEST_CASE("measure representations") {
  const EventAlgebra a2(2);
  const auto rel = measure_relation(a2, {Q(1, 4), Q(3, 4)});
  const auto res = solve_qualitative_probability(rel, a2);
  REQUIRE(res.feasible());
  const auto& w = res.witness->weights;
  CHECK(w[0] + w[1] == 1);
  CHECK(measure_relation(a2, w) == rel);
  CHECK(res.witness->event_values.size() == 4);
  CHECK(res.rows.size() == 6);

  const auto total = solve_qualitative_probability(BinaryRelation::full(a2.carrier()), a2);
  CHECK_FALSE(total.feasible());
  REQUIRE(total.certificate);
  std::vector<std::pair<Event, Event>> rows;
  const auto vs = event_verdicts(BinaryRelation::full(a2.carrier()), a2, &rows);
  CHECK(verify_certificate(vs, *total.certificate, Positivity::relaxed));

  const EventAlgebra a1(1);
  const auto one = solve_qualitative_probability(measure_relation(a1, {Q(1)}), a1);
  REQUIRE(one.feasible());
  CHECK(one.witness->weights == std::vector<Q>{Q(1)});

  CHECK_THROWS_AS(solve_qualitative_probability(BinaryRelation::identity(a2.carrier()), a2), InputError);
}

TEST_CASE("measure witnesses are monotone and Villegas-additive") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 4; ++n) {
    const EventAlgebra alg(n);
    for (int t = 0; t < 10; ++t) {
      std::vector<Q> w(n);
      Q total = 0;
      for (auto& x : w) total += (x = Q(static_cast<long>(rng() % 5)));
      if (total == 0) w[0] = total = 1;
      for (auto& x : w) x /= total;
      const auto rel = measure_relation(alg, w);
      const auto res = solve_qualitative_probability(rel, alg);
      REQUIRE(res.feasible());
      const auto& mw = *res.witness;
      const auto back = measure_relation(alg, mw.weights);
      CHECK(back == rel);
      CHECK(is_villegas_additive(back, alg).holds);
      CHECK(check_properties(back, 32)[Property::transitive].holds);
      for (Event e = 0; e <= alg.omega(); ++e) {
        CHECK(mw.event_values[e] == event_measure(mw.weights, e));
        for (Event f = 0; f <= alg.omega(); ++f)
          if ((e & f) == f) CHECK(mw.event_values[e] >= mw.event_values[f]);
      }
    }
  }
}

TEST_CASE("random round-trips with box linkage") {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 1 + rng() % 4;
    std::vector<Q> p(d);
    Q total = 0;
    for (auto& x : p) total += (x = Q(static_cast<long>(1 + rng() % 9)));
    for (auto& x : p) x /= total;
    std::vector<PointVerdict> rows;
    const std::size_t count = 1 + rng() % 10;
    for (std::size_t k = 0; k < count; ++k) {
      BoxPoint x(d), y(d);
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % 7) - 3;
      for (auto& v : y) v = static_cast<std::int64_t>(rng() % 7) - 3;
      if (x == y) continue;
      rows.push_back(pv(x, y, naive_verdict(p, x, y)));
    }
    if (rows.empty()) continue;
    const VerdictSet vs(d, rows);
    const auto res = solve_linear_representation(vs);
    REQUIRE(res.feasible());
    CHECK(res.witness->slack > 0);
    CHECK(all_rows_hold(vs, res.witness->weights));
    CHECK(verify_witness(vs, *res.witness));
    if (d <= 2) {
      const IntegerBox box(BoxPoint(d, 0), BoxPoint(d, 2));
      CHECK(verify_definetti_properties(res.witness->weights, box).all());
    }
  }
}

TEST_CASE("exact simplex on small programs") {
  // max x + y, x <= 1, y <= 2, x + y <= 2.5.
  const auto r = maximize({{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}}, {Q(1), Q(2), Q(5, 2)}, {Q(1), Q(1)});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Q(5, 2));
  Q primal = r.x[0] + r.x[1];
  CHECK(primal == r.value);
  Q dual = r.y[0] * 1 + r.y[1] * 2 + r.y[2] * Q(5, 2);
  CHECK(dual == r.value);
  for (const auto& y : r.y) CHECK(y >= 0);

  const auto u = maximize({{Q(-1)}}, {Q(0)}, {Q(1)});
  CHECK(u.status == LpStatus::unbounded);

  const auto z = maximize({{Q(1)}}, {Q(0)}, {Q(-1)});
  CHECK(z.value == 0);
  CHECK_THROWS_AS(maximize({{Q(1)}}, {Q(-1)}, {Q(1)}), InputError);
}

TEST_CASE("rational formatting") {
  CHECK(format_rational(Q(0)) == "0/1");
  CHECK(format_rational(Q(1)) == "1/1");
  CHECK(format_rational(Q(-2, 4)) == "-1/2");
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-4") == Q(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}

}
