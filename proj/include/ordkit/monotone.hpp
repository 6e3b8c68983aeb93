#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordkit/error.hpp"
#include "ordkit/events.hpp"
#include "ordkit/limits.hpp"
#include "ordkit/rational.hpp"

namespace ordkit {

using BoxPoint = std::vector<std::int64_t>;

/// Integer window [lo_1, hi_1] x ... x [lo_d, hi_d] of Z^d under the
/// componentwise order. Every bounded subset has a componentwise sup/inf.
class IntegerBox {
 public:
  IntegerBox(BoxPoint lo, BoxPoint hi);

  std::size_t dimension() const noexcept { return lo_.size(); }
  const BoxPoint& lo() const noexcept { return lo_; }
  const BoxPoint& hi() const noexcept { return hi_; }
  bool contains(const BoxPoint& p) const;
  static bool leq(const BoxPoint& a, const BoxPoint& b);

  /// Componentwise max / min of a nonempty set.
  BoxPoint sup(const std::vector<BoxPoint>& s) const;
  BoxPoint inf(const std::vector<BoxPoint>& s) const;
  static BoxPoint negate(const BoxPoint& p);

  /// All points in lexicographic order. Throws CapExceeded beyond `cap`.
  std::vector<BoxPoint> points(std::size_t cap = kBoxPointCap) const;

  std::string label(const BoxPoint& p) const;

 private:
  BoxPoint lo_;
  BoxPoint hi_;
};

enum class Direction { increasing, decreasing };

std::string_view direction_name(Direction d);

/// A finite window standing for a monotone sequence. `against` is the
/// comparison element (y in the primed axioms, B in the set axioms).
/// A non-exhaustive probe only requires `limit` to bound the window.
template <class T>
struct ChainProbe {
  std::string name;
  Direction direction = Direction::increasing;
  std::vector<T> window;
  T limit{};
  bool exhaustive = true;
  T against{};
};

using BoxProbe = ChainProbe<BoxPoint>;
using EventProbe = ChainProbe<Event>;

/// Decreasing event chain with vanishing limit, F > G and, per 1-based
/// index i, alterations (F', G') that agree with F and G outside A_i.
struct C4Probe {
  std::string name;
  std::vector<Event> window;
  bool exhaustive = true;
  Event f = 0;
  Event g = 0;
  std::map<std::size_t, std::vector<std::pair<Event, Event>>> alterations;
};

/// a >= b. May throw MalformedProbe when a pair is not covered.
template <class T>
using RelationOracle = std::function<bool(const T&, const T&)>;

enum class PairVerdict { succ, sim, prec, none };

std::string_view pair_verdict_name(PairVerdict v);
PairVerdict parse_pair_verdict(std::string_view s);

/// Explicit verdicts for unordered pairs; a pair listed as (a, b) also
/// answers (b, a). Missing pairs raise MalformedProbe("oracle-coverage").
template <class T>
class OracleTable {
 public:
  void set(const T& a, const T& b, PairVerdict v) {
    auto [it, inserted] = table_.emplace(std::make_pair(a, b), v);
    if (!inserted && it->second != v) throw InputError("conflicting oracle verdicts for one pair");
    const PairVerdict flipped = v == PairVerdict::succ ? PairVerdict::prec
                                : v == PairVerdict::prec ? PairVerdict::succ
                                                         : v;
    auto [jt, ins2] = table_.emplace(std::make_pair(b, a), flipped);
    if (!ins2 && jt->second != flipped) throw InputError("conflicting oracle verdicts for one pair");
  }

  std::optional<PairVerdict> find(const T& a, const T& b) const {
    auto it = table_.find({a, b});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  bool weakly_above(const T& a, const T& b) const {
    auto v = find(a, b);
    if (!v) throw MalformedProbe("oracle-coverage", "the relation oracle has no verdict for a required pair");
    return *v == PairVerdict::succ || *v == PairVerdict::sim;
  }

  RelationOracle<T> oracle() const {
    return [this](const T& a, const T& b) { return weakly_above(a, b); };
  }

  const std::map<std::pair<T, T>, PairVerdict>& entries() const noexcept { return table_; }

 private:
  std::map<std::pair<T, T>, PairVerdict> table_;
};

/// x >= y iff w.x >= w.y.
RelationOracle<BoxPoint> utility_oracle(std::vector<Rational> weights);
/// A >= B iff P(A) >= P(B).
RelationOracle<Event> measure_oracle(std::vector<Rational> weights);
/// Reads a relation on the events of an algebra with at most 7 atoms.
RelationOracle<Event> relation_oracle(const BinaryRelation& rel);

enum class Axiom { c1_primed, c2_primed, c3_primed, c1, c2, c3, c4 };

std::string_view axiom_name(Axiom a);

enum class AxiomVerdict { holds_on_probes, violated, vacuous };

std::string_view axiom_verdict_name(AxiomVerdict v);

struct ProbeOutcome {
  std::size_t probe = 0;
  AxiomVerdict verdict = AxiomVerdict::vacuous;
  /// 1-based window position tied to a violation (the last element for
  /// the eventual-tail axioms); unset when the limit is at fault.
  std::optional<std::size_t> index;
  /// C4: least N such that every alteration at an index >= N keeps F' > G'.
  std::optional<std::size_t> n;
  bool exhaustive = true;
};

struct AxiomEntry {
  Axiom axiom = Axiom::c1;
  AxiomVerdict verdict = AxiomVerdict::vacuous;
  std::size_t applicable = 0;
  std::size_t hypothesis_held = 0;
  /// First violating probe.
  std::optional<ProbeOutcome> violation;
  std::vector<ProbeOutcome> trace;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomEntry> axioms;

  const AxiomEntry& operator[](Axiom a) const;
  bool any_violated() const;
};

void validate_probe(const IntegerBox& box, const BoxProbe& probe);
void validate_probe(const EventAlgebra& algebra, const EventProbe& probe);
void validate_probe(const EventAlgebra& algebra, const C4Probe& probe);

/// Decreasing probes feed C1', increasing probes feed C2' and C3'.
AxiomReport check_primed_axioms(const IntegerBox& box, const RelationOracle<BoxPoint>& rel,
                                const std::vector<BoxProbe>& probes);
/// Decreasing probes feed C1, increasing probes feed C2 and C3.
AxiomReport check_set_axioms(const EventAlgebra& algebra, const RelationOracle<Event>& rel,
                             const std::vector<EventProbe>& probes, const std::vector<C4Probe>& c4 = {});

/// Evaluates one axiom's implication on one probe from its definition.
/// Returns true iff the probe violates it.
bool probe_violates(Axiom a, const RelationOracle<BoxPoint>& rel, const BoxProbe& probe);
bool probe_violates(Axiom a, const RelationOracle<Event>& rel, const EventProbe& probe);
bool probe_violates(const RelationOracle<Event>& rel, const C4Probe& probe);

/// From an increasing probe violating C3 (y < limit yet not y < x_last),
/// keeps the positions j with y >= x_j. The result has the same limit and
/// violates C2; throws InputError if the probe does not violate C3.
template <class T>
ChainProbe<T> c3_violation_subprobe(const RelationOracle<T>& rel, const ChainProbe<T>& probe) {
  auto strictly = [&](const T& a, const T& b) { return rel(a, b) && !rel(b, a); };
  if (probe.direction != Direction::increasing || probe.window.empty() || !strictly(probe.limit, probe.against) ||
      strictly(probe.window.back(), probe.against))
    throw InputError("probe does not violate the eventual-strictness axiom");
  ChainProbe<T> sub = probe;
  sub.name = probe.name + "/sub";
  sub.window.clear();
  sub.exhaustive = false;
  for (const auto& x : probe.window)
    if (rel(probe.against, x)) sub.window.push_back(x);
  if (sub.window.empty()) throw InputError("no position with y >= x_j; the relation is not complete on this probe");
  return sub;
}

/// inf(-S) == -sup(S) in the box. S must be nonempty, inside the box, and
/// -S must lie in the box too.
bool neg_sup_inf_lemma(const IntegerBox& box, const std::vector<BoxPoint>& s);

}  // namespace ordkit
