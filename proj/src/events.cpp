#include "ordkit/events.hpp"

#include "ordkit/error.hpp"

namespace ordkit {

EventAlgebra::EventAlgebra(std::size_t atoms, std::size_t cap) : atoms_(atoms) {
  if (atoms < 1) throw InputError("an event algebra needs at least one atom");
  if (atoms > std::min(cap, kProbeAtomCap))
    throw CapExceeded("event algebra has " + std::to_string(atoms) + " atoms; cap is " +
                      std::to_string(std::min(cap, kProbeAtomCap)));
  if (atoms <= 7) {
    std::vector<std::string> labels;
    for (std::uint64_t e = 0; e < event_count(); ++e) labels.push_back(label(static_cast<Event>(e)));
    carrier_ = make_carrier(std::move(labels));
  }
}

std::string EventAlgebra::label(Event e) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t a = 0; a < atoms_; ++a)
    if (e >> a & 1U) {
      if (!first) s += ",";
      s += std::to_string(a + 1);
      first = false;
    }
  return s + "}";
}

Event EventAlgebra::from_atoms(const std::vector<std::size_t>& atoms) const {
  Event e = 0;
  for (auto a : atoms) {
    if (a < 1 || a > atoms_)
      throw InputError("atom " + std::to_string(a) + " outside 1.." + std::to_string(atoms_));
    e |= Event{1} << (a - 1);
  }
  return e;
}

std::vector<std::size_t> EventAlgebra::atoms_of(Event e) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < atoms_; ++a)
    if (e >> a & 1U) out.push_back(a + 1);
  return out;
}

const CarrierPtr& EventAlgebra::carrier() const {
  if (!carrier_) throw CapExceeded("relations on events need at most 7 atoms");
  return carrier_;
}

namespace {

std::vector<std::pair<Event, Event>> disjoint_pairs(const EventAlgebra& algebra) {
  std::vector<std::pair<Event, Event>> out;
  for (Event a = 0; a <= algebra.omega(); ++a)
    for (Event b = 0; b <= algebra.omega(); ++b)
      if ((a & b) == 0) out.emplace_back(a, b);
  return out;
}

template <class At>
VillegasResult villegas_scan(const EventAlgebra& algebra, At at) {
  const auto pairs = disjoint_pairs(algebra);
  auto strict = [&](Event x, Event y) { return at(x, y) && !at(y, x); };
  for (const auto& [a1, a2] : pairs)
    for (const auto& [b1, b2] : pairs) {
      if (!at(a1, b1) || !at(a2, b2)) continue;
      const Event u = a1 | a2;
      const Event v = b1 | b2;
      if (!at(u, v)) return {false, std::array<Event, 4>{a1, a2, b1, b2}, VillegasClause::weak};
      if ((strict(a1, b1) || strict(a2, b2)) && !strict(u, v))
        return {false, std::array<Event, 4>{a1, a2, b1, b2}, VillegasClause::strict};
    }
  return {};
}

}  // namespace

VillegasResult is_villegas_additive(const BinaryRelation& rel, const EventAlgebra& algebra) {
  if (!same_carrier(rel.carrier(), algebra.carrier()))
    throw InputError("relation carrier is not the event set of the algebra");
  return villegas_scan(algebra, [&](Event x, Event y) { return rel.holds(x, y); });
}

VillegasResult villegas_failure(const BitMatrix& m, const EventAlgebra& algebra) {
  if (m.n != algebra.event_count()) throw InputError("matrix size does not match the algebra");
  return villegas_scan(algebra, [&](Event x, Event y) { return m.at(x, y); });
}

Rational event_measure(const std::vector<Rational>& weights, Event e) {
  Rational s = 0;
  for (std::size_t a = 0; a < weights.size(); ++a)
    if (e >> a & 1U) s += weights[a];
  return s;
}

BinaryRelation measure_relation(const EventAlgebra& algebra, const std::vector<Rational>& weights) {
  if (weights.size() != algebra.atoms()) throw InputError("one weight per atom is required");
  for (const auto& w : weights)
    if (w < 0) throw InputError("atom weights must be nonnegative");
  BinaryRelation rel(algebra.carrier());
  std::vector<Rational> mu;
  for (Event e = 0; e <= algebra.omega(); ++e) mu.push_back(event_measure(weights, e));
  for (Event a = 0; a <= algebra.omega(); ++a)
    for (Event b = 0; b <= algebra.omega(); ++b) rel.set(a, b, mu[a] >= mu[b]);
  return rel;
}

VerificationReport verify_degroot(const EventAlgebra& algebra, const Budget& budget) {
  static const std::vector<ClaimSpec> claims = {
      {"degroot", "complete and Villegas-additive implies transitive"}};
  auto reports = verify_claims(algebra.carrier(), claims, budget,
                               [&algebra](const BitMatrix& m, std::vector<ClaimOutcome>& out) {
                                 if (completeness_failure(m)) return;
                                 if (!villegas_failure(m, algebra).holds) return;
                                 out[0].antecedent = true;
                                 if (auto t = transitivity_failure(m)) out[0] = {true, true, *t};
                               });
  return reports.front();
}

}  // namespace ordkit
