#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordkit/events.hpp"
#include "ordkit/monotone.hpp"
#include "ordkit/rational.hpp"
#include "ordkit/relation.hpp"

namespace ordkit {

struct PointVerdict {
  BoxPoint lhs;
  BoxPoint rhs;
  /// succ, sim or prec; `none` is rejected.
  PairVerdict verdict = PairVerdict::succ;
};

/// Verdicts on selected ordered pairs of lattice points in Z^d.
class VerdictSet {
 public:
  /// Throws InputError on a dimension mismatch, an empty list, a `none`
  /// verdict, or one ordered pair listed twice with different verdicts.
  VerdictSet(std::size_t dimension, std::vector<PointVerdict> pairs);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<PointVerdict>& pairs() const noexcept { return pairs_; }

 private:
  std::size_t dimension_;
  std::vector<PointVerdict> pairs_;
};

/// strict: p_i >= eps for every coordinate. relaxed: p_i >= 0.
enum class Positivity { strict, relaxed };

std::string_view positivity_name(Positivity p);

struct RepresentationWitness {
  std::vector<Rational> weights;
  /// Optimal shared margin: every strict row holds with at least this slack.
  Rational slack;
};

/// One row of the constraint system, as used by certificates.
enum class RowKind { verdict, positivity, normalization };

std::string_view row_kind_name(RowKind k);

struct CertificateTerm {
  RowKind kind = RowKind::verdict;
  /// Verdict position, or coordinate for positivity rows.
  std::size_t index = 0;
  /// Nonnegative for strict rows, any sign for indifference rows.
  Rational coefficient;
};

/// Multipliers making sum(coefficient * row) <= 0 componentwise while the
/// strict multipliers sum to 1. Every weight vector satisfying the strict
/// rows with margin eps > 0 would give the combination a value >= eps, so
/// no representation exists.
struct InfeasibilityCertificate {
  std::vector<CertificateTerm> terms;
  std::vector<Rational> combination;
};

struct RepresentationResult {
  std::optional<RepresentationWitness> witness;
  std::optional<InfeasibilityCertificate> certificate;
  Positivity positivity = Positivity::strict;
  std::size_t pivots = 0;

  bool feasible() const noexcept { return witness.has_value(); }
};

/// Maximizes eps subject to sum(p) = 1, positivity, p.(x - y) >= eps for
/// strict verdicts and p.(x - y) = 0 for indifference.
RepresentationResult solve_linear_representation(const VerdictSet& vs, Positivity positivity = Positivity::strict);

/// Exact re-checks against the input, independent of the solver.
bool verify_witness(const VerdictSet& vs, const RepresentationWitness& w, Positivity positivity = Positivity::strict);
bool verify_certificate(const VerdictSet& vs, const InfeasibilityCertificate& cert,
                        Positivity positivity = Positivity::strict);

/// Verdict of (x, y) under u(x) = p.x.
PairVerdict linear_verdict(const std::vector<Rational>& weights, const BoxPoint& x, const BoxPoint& y);
/// Verdicts re-induced on the pairs of `vs`.
std::vector<PairVerdict> induced_verdicts(const std::vector<Rational>& weights, const VerdictSet& vs);

/// x >= y iff p.x >= p.y on the given points (labels "(1,0)"). Weights must
/// be positive and sum to 1.
BinaryRelation induced_linear_relation(const std::vector<Rational>& weights, const std::vector<BoxPoint>& points);

struct DefinettiReport {
  bool complete = true;
  bool transitive = true;
  bool strongly_additive = true;
  bool monotone = true;
  std::size_t quadruples_checked = 0;
  std::size_t dominance_pairs_checked = 0;
  /// First failing tuple of points, if any.
  std::vector<BoxPoint> witness;

  bool all() const noexcept { return complete && transitive && strongly_additive && monotone; }
};

/// The relation induced on the box: complete, transitive, strongly additive
/// on quadruples whose sums stay in the box, and x > y componentwise
/// (x != y) implies x strictly above y.
DefinettiReport verify_definetti_properties(const std::vector<Rational>& weights, const IntegerBox& box,
                                            std::size_t cap = kBoxPointCap);

struct MeasureWitness {
  std::vector<Rational> weights;
  Rational slack;
  /// P(A) for every event, by mask.
  std::vector<Rational> event_values;
};

struct MeasureResult {
  std::optional<MeasureWitness> witness;
  std::optional<InfeasibilityCertificate> certificate;
  /// Event pairs (A, B) behind each verdict row, A < B by mask.
  std::vector<std::pair<Event, Event>> rows;
  Positivity positivity = Positivity::relaxed;

  bool feasible() const noexcept { return witness.has_value(); }
};

/// Verdicts of a complete relation on events as a linear system over
/// indicator vectors, one row per unordered pair A < B.
VerdictSet event_verdicts(const BinaryRelation& rel, const EventAlgebra& algebra,
                          std::vector<std::pair<Event, Event>>* rows = nullptr);

/// Atom weights reproducing every verdict of a complete relation on events.
MeasureResult solve_qualitative_probability(const BinaryRelation& rel, const EventAlgebra& algebra,
                                            Positivity positivity = Positivity::relaxed);

}  // namespace ordkit
