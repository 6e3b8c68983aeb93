#include "ordkit/representation.hpp"

#include <map>
#include <set>

#include "ordkit/error.hpp"
#include "ordkit/exact_lp.hpp"

namespace ordkit {

namespace {

std::string point_label(const BoxPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::vector<Rational> difference(const BoxPoint& x, const BoxPoint& y) {
  std::vector<Rational> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = Rational(x[i]) - Rational(y[i]);
  return d;
}

Rational utility(const std::vector<Rational>& w, const BoxPoint& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

void require_positive_normalized(const std::vector<Rational>& w, std::size_t dimension) {
  if (w.size() != dimension)
    throw InputError("expected " + std::to_string(dimension) + " weights, got " + std::to_string(w.size()));
  Rational sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) <= 0) throw InputError("weight " + std::to_string(i + 1) + " is not positive");
    sum += w[i];
  }
  if (sum != 1) throw InputError("weights must sum to 1");
}

struct StrictRow {
  RowKind kind;
  std::size_t index;
  std::vector<Rational> a;
};

struct EqualityRow {
  std::size_t index;
  std::vector<Rational> e;
};

}  // namespace

VerdictSet::VerdictSet(std::size_t dimension, std::vector<PointVerdict> pairs)
    : dimension_(dimension), pairs_(std::move(pairs)) {
  if (dimension_ < 1) throw InputError("dimension must be at least 1");
  if (pairs_.empty()) throw InputError("at least one verdict is required");
  std::map<std::pair<BoxPoint, BoxPoint>, PairVerdict> seen;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto& pv = pairs_[k];
    if (pv.lhs.size() != dimension_ || pv.rhs.size() != dimension_)
      throw InputError("verdict " + std::to_string(k + 1) + " has points of the wrong dimension");
    if (pv.verdict == PairVerdict::none) throw InputError("verdict " + std::to_string(k + 1) + " is 'none'");
    auto [it, inserted] = seen.emplace(std::make_pair(pv.lhs, pv.rhs), pv.verdict);
    if (!inserted && it->second != pv.verdict)
      throw InputError("inconsistent verdict table: pair " + point_label(pv.lhs) + " vs " + point_label(pv.rhs) +
                       " is marked both " + std::string(pair_verdict_name(it->second)) + " and " +
                       std::string(pair_verdict_name(pv.verdict)));
  }
}

std::string_view positivity_name(Positivity p) { return p == Positivity::strict ? "strict" : "relaxed"; }

std::string_view row_kind_name(RowKind k) {
  switch (k) {
    case RowKind::verdict: return "verdict";
    case RowKind::positivity: return "positivity";
    case RowKind::normalization: return "normalization";
  }
  return "?";
}

RepresentationResult solve_linear_representation(const VerdictSet& vs, Positivity positivity) {
  const std::size_t d = vs.dimension();
  std::vector<StrictRow> strict;
  std::vector<EqualityRow> equal;
  for (std::size_t k = 0; k < vs.pairs().size(); ++k) {
    const auto& pv = vs.pairs()[k];
    switch (pv.verdict) {
      case PairVerdict::succ: strict.push_back({RowKind::verdict, k, difference(pv.lhs, pv.rhs)}); break;
      case PairVerdict::prec: strict.push_back({RowKind::verdict, k, difference(pv.rhs, pv.lhs)}); break;
      case PairVerdict::sim: equal.push_back({k, difference(pv.lhs, pv.rhs)}); break;
      case PairVerdict::none: break;
    }
  }
  if (positivity == Positivity::strict)
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> unit(d, 0);
      unit[i] = 1;
      strict.push_back({RowKind::positivity, i, std::move(unit)});
    }
  strict.push_back({RowKind::normalization, 0, std::vector<Rational>(d, 1)});

  // Columns: p_1..p_d, eps. Homogeneous rows plus sum(p) <= 1.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& r : strict) {
    std::vector<Rational> row(d + 1);
    for (std::size_t i = 0; i < d; ++i) row[i] = -r.a[i];
    row[d] = 1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  for (const auto& r : equal) {
    std::vector<Rational> plus(d + 1), minus(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
      plus[i] = r.e[i];
      minus[i] = -r.e[i];
    }
    a.push_back(std::move(plus));
    a.push_back(std::move(minus));
    b.emplace_back(0);
    b.emplace_back(0);
  }
  a.emplace_back(d + 1, Rational(1));
  a.back()[d] = 0;
  b.emplace_back(1);
  std::vector<Rational> c(d + 1, 0);
  c[d] = 1;

  const auto lp = maximize(a, b, c);
  if (lp.status != LpStatus::optimal) throw std::logic_error("representation LP reported unbounded");

  RepresentationResult out;
  out.positivity = positivity;
  out.pivots = lp.pivots;
  if (sgn(lp.value) > 0) {
    Rational sum = 0;
    for (std::size_t i = 0; i < d; ++i) sum += lp.x[i];
    RepresentationWitness w;
    for (std::size_t i = 0; i < d; ++i) w.weights.push_back(lp.x[i] / sum);
    w.slack = lp.value / sum;
    out.witness = std::move(w);
    return out;
  }

  InfeasibilityCertificate cert;
  Rational total = 0;
  for (std::size_t r = 0; r < strict.size(); ++r) total += lp.y[r];
  for (std::size_t r = 0; r < strict.size(); ++r)
    if (sgn(lp.y[r]) != 0) cert.terms.push_back({strict[r].kind, strict[r].index, lp.y[r] / total});
  for (std::size_t q = 0; q < equal.size(); ++q) {
    const Rational nu = (lp.y[strict.size() + 2 * q + 1] - lp.y[strict.size() + 2 * q]) / total;
    if (sgn(nu) != 0) cert.terms.push_back({RowKind::verdict, equal[q].index, nu});
  }
  cert.combination.assign(d, 0);
  for (const auto& t : cert.terms) {
    const std::vector<Rational>* row = nullptr;
    for (const auto& r : strict)
      if (r.kind == t.kind && r.index == t.index) row = &r.a;
    for (const auto& r : equal)
      if (t.kind == RowKind::verdict && r.index == t.index) row = &r.e;
    for (std::size_t i = 0; i < d; ++i) cert.combination[i] += t.coefficient * (*row)[i];
  }
  out.certificate = std::move(cert);
  return out;
}

bool verify_witness(const VerdictSet& vs, const RepresentationWitness& w, Positivity positivity) {
  if (w.weights.size() != vs.dimension() || sgn(w.slack) <= 0) return false;
  Rational sum = 0;
  for (const auto& p : w.weights) {
    if (positivity == Positivity::strict ? p < w.slack : sgn(p) < 0) return false;
    sum += p;
  }
  if (sum != 1 || w.slack > 1) return false;
  for (const auto& pv : vs.pairs()) {
    const Rational m = utility(w.weights, pv.lhs) - utility(w.weights, pv.rhs);
    if (pv.verdict == PairVerdict::succ && m < w.slack) return false;
    if (pv.verdict == PairVerdict::prec && -m < w.slack) return false;
    if (pv.verdict == PairVerdict::sim && sgn(m) != 0) return false;
  }
  return true;
}

bool verify_certificate(const VerdictSet& vs, const InfeasibilityCertificate& cert, Positivity positivity) {
  const std::size_t d = vs.dimension();
  std::vector<Rational> v(d, 0);
  Rational strict_total = 0;
  for (const auto& t : cert.terms) {
    std::vector<Rational> row(d, 0);
    bool strict_row = true;
    switch (t.kind) {
      case RowKind::verdict: {
        if (t.index >= vs.pairs().size()) return false;
        const auto& pv = vs.pairs()[t.index];
        for (std::size_t i = 0; i < d; ++i) {
          row[i] = pv.lhs[i] - pv.rhs[i];
          if (pv.verdict == PairVerdict::prec) row[i] = -row[i];
        }
        strict_row = pv.verdict != PairVerdict::sim;
        break;
      }
      case RowKind::positivity:
        if (positivity != Positivity::strict || t.index >= d) return false;
        row[t.index] = 1;
        break;
      case RowKind::normalization:
        for (auto& x : row) x = 1;
        break;
    }
    if (strict_row) {
      if (sgn(t.coefficient) < 0) return false;
      strict_total += t.coefficient;
    }
    for (std::size_t i = 0; i < d; ++i) v[i] += t.coefficient * row[i];
  }
  if (sgn(strict_total) <= 0) return false;
  for (const auto& x : v)
    if (sgn(x) > 0) return false;
  return cert.combination.empty() || cert.combination == v;
}

PairVerdict linear_verdict(const std::vector<Rational>& weights, const BoxPoint& x, const BoxPoint& y) {
  const int s = sgn(Rational(utility(weights, x) - utility(weights, y)));
  return s > 0 ? PairVerdict::succ : s < 0 ? PairVerdict::prec : PairVerdict::sim;
}

std::vector<PairVerdict> induced_verdicts(const std::vector<Rational>& weights, const VerdictSet& vs) {
  std::vector<PairVerdict> out;
  for (const auto& pv : vs.pairs()) out.push_back(linear_verdict(weights, pv.lhs, pv.rhs));
  return out;
}

BinaryRelation induced_linear_relation(const std::vector<Rational>& weights, const std::vector<BoxPoint>& points) {
  if (points.empty()) throw InputError("at least one point is required");
  require_positive_normalized(weights, points.front().size());
  std::vector<std::string> labels;
  std::vector<Rational> u;
  for (const auto& p : points) {
    if (p.size() != weights.size()) throw InputError("point " + point_label(p) + " has the wrong dimension");
    labels.push_back(point_label(p));
    u.push_back(utility(weights, p));
  }
  BinaryRelation rel(make_carrier(std::move(labels)));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) rel.set(i, j, u[i] >= u[j]);
  return rel;
}

DefinettiReport verify_definetti_properties(const std::vector<Rational>& weights, const IntegerBox& box,
                                            std::size_t cap) {
  require_positive_normalized(weights, box.dimension());
  const auto pts = box.points(cap);
  const std::size_t n = pts.size();
  std::map<BoxPoint, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(pts[i], i);
  std::vector<Rational> u;
  for (const auto& p : pts) u.push_back(utility(weights, p));
  std::vector<char> ge(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ge[i * n + j] = u[i] >= u[j];
  auto at = [&](std::size_t i, std::size_t j) { return ge[i * n + j] != 0; };

  DefinettiReport r;
  auto fail = [&](bool& flag, std::initializer_list<std::size_t> idx) {
    flag = false;
    if (r.witness.empty())
      for (auto i : idx) r.witness.push_back(pts[i]);
  };
  for (std::size_t i = 0; i < n && r.complete; ++i)
    for (std::size_t j = 0; j < n && r.complete; ++j)
      if (!at(i, j) && !at(j, i)) fail(r.complete, {i, j});
  for (std::size_t i = 0; i < n && r.transitive; ++i)
    for (std::size_t j = 0; j < n && r.transitive; ++j) {
      if (!at(i, j)) continue;
      for (std::size_t k = 0; k < n && r.transitive; ++k)
        if (at(j, k) && !at(i, k)) fail(r.transitive, {i, j, k});
    }

  constexpr std::size_t kOutside = static_cast<std::size_t>(-1);
  std::vector<std::size_t> sum(n * n, kOutside);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BoxPoint s(box.dimension());
      for (std::size_t c = 0; c < s.size(); ++c) s[c] = pts[i][c] + pts[j][c];
      if (auto it = index.find(s); it != index.end()) sum[i * n + j] = it->second;
    }
  for (std::size_t x1 = 0; x1 < n && r.strongly_additive; ++x1)
    for (std::size_t x2 = 0; x2 < n && r.strongly_additive; ++x2) {
      const auto sx = sum[x1 * n + x2];
      if (sx == kOutside) continue;
      for (std::size_t y1 = 0; y1 < n && r.strongly_additive; ++y1) {
        if (!at(x1, y1)) continue;
        for (std::size_t y2 = 0; y2 < n && r.strongly_additive; ++y2) {
          const auto sy = sum[y1 * n + y2];
          if (sy == kOutside || !at(x2, y2)) continue;
          ++r.quadruples_checked;
          if (!at(sx, sy)) fail(r.strongly_additive, {x1, x2, y1, y2});
        }
      }
    }
  for (std::size_t i = 0; i < n && r.monotone; ++i)
    for (std::size_t j = 0; j < n && r.monotone; ++j) {
      if (i == j || !IntegerBox::leq(pts[j], pts[i])) continue;
      ++r.dominance_pairs_checked;
      if (!(at(i, j) && !at(j, i))) fail(r.monotone, {i, j});
    }
  return r;
}

VerdictSet event_verdicts(const BinaryRelation& rel, const EventAlgebra& algebra,
                          std::vector<std::pair<Event, Event>>* rows) {
  if (!same_carrier(rel.carrier(), algebra.carrier()))
    throw InputError("relation carrier is not the event set of the algebra");
  const auto count = static_cast<Event>(algebra.event_count());
  for (Event a = 0; a < count; ++a)
    for (Event b = a; b < count; ++b)
      if (!rel.holds(a, b) && !rel.holds(b, a))
        throw InputError("relation is not complete: neither " + algebra.label(a) + " >= " + algebra.label(b) +
                         " nor the converse");
  auto indicator = [&](Event e) {
    BoxPoint p(algebra.atoms());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = (e >> k) & 1U;
    return p;
  };
  std::vector<PointVerdict> pairs;
  if (rows) rows->clear();
  for (Event a = 0; a < count; ++a)
    for (Event b = a + 1; b < count; ++b) {
      const bool ab = rel.holds(a, b);
      const bool ba = rel.holds(b, a);
      pairs.push_back({indicator(a), indicator(b), ab && ba ? PairVerdict::sim : ab ? PairVerdict::succ : PairVerdict::prec});
      if (rows) rows->emplace_back(a, b);
    }
  if (pairs.empty()) throw InputError("the algebra has a single event");
  return VerdictSet(algebra.atoms(), std::move(pairs));
}

MeasureResult solve_qualitative_probability(const BinaryRelation& rel, const EventAlgebra& algebra,
                                            Positivity positivity) {
  MeasureResult out;
  out.positivity = positivity;
  const auto vs = event_verdicts(rel, algebra, &out.rows);
  auto res = solve_linear_representation(vs, positivity);
  if (res.witness) {
    MeasureWitness w{res.witness->weights, res.witness->slack, {}};
    for (Event e = 0; e <= algebra.omega(); ++e) w.event_values.push_back(event_measure(w.weights, e));
    out.witness = std::move(w);
  }
  out.certificate = std::move(res.certificate);
  return out;
}

}  // namespace ordkit
