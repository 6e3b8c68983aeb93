#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordkit/carrier.hpp"
#include "ordkit/limits.hpp"
#include "ordkit/rational.hpp"
#include "ordkit/relation.hpp"
#include "ordkit/verification.hpp"

namespace ordkit {

/// An event is a bitmask over atoms; bit k is atom k+1.
using Event = std::uint32_t;

/// The power-set algebra on n atoms. Events are numbered by their mask, so
/// event i of the carrier is the mask i. Labels list atoms 1-indexed:
/// "{}", "{1}", "{1,2}".
class EventAlgebra {
 public:
  explicit EventAlgebra(std::size_t atoms, std::size_t cap = kProbeAtomCap);

  std::size_t atoms() const noexcept { return atoms_; }
  std::uint64_t event_count() const noexcept { return std::uint64_t{1} << atoms_; }
  Event omega() const noexcept { return static_cast<Event>(event_count() - 1); }
  bool contains(Event e) const noexcept { return (e & ~omega()) == 0; }
  Event complement(Event e) const noexcept { return omega() & ~e; }

  std::string label(Event e) const;
  /// Event from 1-indexed atom numbers.
  Event from_atoms(const std::vector<std::size_t>& atoms) const;
  std::vector<std::size_t> atoms_of(Event e) const;

  /// Carrier of all events, for relation work. Requires atoms() <= 7.
  const CarrierPtr& carrier() const;

 private:
  std::size_t atoms_;
  CarrierPtr carrier_;
};

enum class VillegasClause { weak, strict };

struct VillegasResult {
  bool holds = true;
  /// Least violating (A1, A2, B1, B2) in lexicographic event order.
  std::optional<std::array<Event, 4>> quadruple;
  VillegasClause clause = VillegasClause::weak;

  explicit operator bool() const noexcept { return holds; }
};

/// Both clauses over all quadruples with A1, A2 disjoint and B1, B2
/// disjoint; for each quadruple the weak clause is checked first.
VillegasResult is_villegas_additive(const BinaryRelation& rel, const EventAlgebra& algebra);
VillegasResult villegas_failure(const BitMatrix& m, const EventAlgebra& algebra);

/// P(A) for nonnegative atom weights.
Rational event_measure(const std::vector<Rational>& weights, Event e);
/// A >= B iff P(A) >= P(B).
BinaryRelation measure_relation(const EventAlgebra& algebra, const std::vector<Rational>& weights);

/// Complete and Villegas-additive implies transitive. Exhaustive runs need
/// at most 2 atoms; sampled runs draw complete relations by default.
VerificationReport verify_degroot(const EventAlgebra& algebra, const Budget& budget);

}  // namespace ordkit
