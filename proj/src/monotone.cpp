#include "ordkit/monotone.hpp"

#include <algorithm>

namespace ordkit {

IntegerBox::IntegerBox(BoxPoint lo, BoxPoint hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size()) throw InputError("box bounds need equal, nonzero dimension");
  for (std::size_t i = 0; i < lo_.size(); ++i)
    if (lo_[i] > hi_[i]) throw InputError("box lower bound exceeds upper bound in coordinate " + std::to_string(i + 1));
}

bool IntegerBox::contains(const BoxPoint& p) const {
  if (p.size() != dimension()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  return true;
}

bool IntegerBox::leq(const BoxPoint& a, const BoxPoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

BoxPoint IntegerBox::sup(const std::vector<BoxPoint>& s) const {
  if (s.empty()) throw InputError("sup of an empty set");
  BoxPoint out = s.front();
  for (const auto& p : s)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], p[i]);
  return out;
}

BoxPoint IntegerBox::inf(const std::vector<BoxPoint>& s) const {
  if (s.empty()) throw InputError("inf of an empty set");
  BoxPoint out = s.front();
  for (const auto& p : s)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], p[i]);
  return out;
}

BoxPoint IntegerBox::negate(const BoxPoint& p) {
  BoxPoint out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = -p[i];
  return out;
}

std::vector<BoxPoint> IntegerBox::points(std::size_t cap) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    count *= static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1);
    if (count > cap) throw CapExceeded("box has more than " + std::to_string(cap) + " points");
  }
  std::vector<BoxPoint> out;
  BoxPoint cur = lo_;
  for (std::uint64_t k = 0; k < count; ++k) {
    out.push_back(cur);
    for (std::size_t i = dimension(); i-- > 0;) {
      if (++cur[i] <= hi_[i]) break;
      cur[i] = lo_[i];
    }
  }
  return out;
}

std::string IntegerBox::label(const BoxPoint& p) const {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string_view direction_name(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

std::string_view pair_verdict_name(PairVerdict v) {
  switch (v) {
    case PairVerdict::succ: return "succ";
    case PairVerdict::sim: return "sim";
    case PairVerdict::prec: return "prec";
    case PairVerdict::none: return "none";
  }
  return "?";
}

PairVerdict parse_pair_verdict(std::string_view s) {
  if (s == "succ") return PairVerdict::succ;
  if (s == "sim") return PairVerdict::sim;
  if (s == "prec") return PairVerdict::prec;
  if (s == "none") return PairVerdict::none;
  throw InputError("unknown verdict '" + std::string(s) + "' (expected succ, sim, prec or none)");
}

RelationOracle<BoxPoint> utility_oracle(std::vector<Rational> weights) {
  return [w = std::move(weights)](const BoxPoint& a, const BoxPoint& b) {
    if (a.size() != w.size() || b.size() != w.size()) throw InputError("utility dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * (a[i] - b[i]);
    return s >= 0;
  };
}

RelationOracle<Event> measure_oracle(std::vector<Rational> weights) {
  for (const auto& w : weights)
    if (w < 0) throw InputError("measure weights must be nonnegative");
  return [w = std::move(weights)](const Event& a, const Event& b) {
    return event_measure(w, a) >= event_measure(w, b);
  };
}

RelationOracle<Event> relation_oracle(const BinaryRelation& rel) {
  return [rel](const Event& a, const Event& b) {
    if (a >= rel.size() || b >= rel.size()) throw InputError("event outside the relation's carrier");
    return rel.holds(a, b);
  };
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::c1_primed: return "C1'";
    case Axiom::c2_primed: return "C2'";
    case Axiom::c3_primed: return "C3'";
    case Axiom::c1: return "C1";
    case Axiom::c2: return "C2";
    case Axiom::c3: return "C3";
    case Axiom::c4: return "C4";
  }
  return "?";
}

std::string_view axiom_verdict_name(AxiomVerdict v) {
  switch (v) {
    case AxiomVerdict::holds_on_probes: return "holds-on-probes";
    case AxiomVerdict::violated: return "violated";
    case AxiomVerdict::vacuous: return "vacuous";
  }
  return "?";
}

const AxiomEntry& AxiomReport::operator[](Axiom a) const {
  for (const auto& e : axioms)
    if (e.axiom == a) return e;
  throw InputError("axiom " + std::string(axiom_name(a)) + " not in this report");
}

bool AxiomReport::any_violated() const {
  return std::any_of(axioms.begin(), axioms.end(), [](const auto& e) { return e.verdict == AxiomVerdict::violated; });
}

namespace {

struct BoxOps {
  const IntegerBox& box;
  bool contains(const BoxPoint& p) const { return box.contains(p); }
  bool leq(const BoxPoint& a, const BoxPoint& b) const { return IntegerBox::leq(a, b); }
  BoxPoint join(const std::vector<BoxPoint>& s) const { return box.sup(s); }
  BoxPoint meet(const std::vector<BoxPoint>& s) const { return box.inf(s); }
  std::string label(const BoxPoint& p) const { return box.label(p); }
};

struct EventOps {
  const EventAlgebra& algebra;
  bool contains(Event e) const { return algebra.contains(e); }
  bool leq(Event a, Event b) const { return (a & ~b) == 0; }
  Event join(const std::vector<Event>& s) const {
    Event e = 0;
    for (auto x : s) e |= x;
    return e;
  }
  Event meet(const std::vector<Event>& s) const {
    Event e = algebra.omega();
    for (auto x : s) e &= x;
    return e;
  }
  std::string label(Event e) const { return algebra.label(e); }
};

template <class Ops, class T>
void validate_chain(const Ops& ops, const ChainProbe<T>& p) {
  const std::string who = "probe '" + p.name + "'";
  if (p.window.empty()) throw MalformedProbe("window-nonempty", who + " has an empty window");
  for (std::size_t i = 0; i < p.window.size(); ++i)
    if (!ops.contains(p.window[i]))
      throw MalformedProbe("in-structure", who + " element " + std::to_string(i + 1) + " lies outside the structure");
  if (!ops.contains(p.limit)) throw MalformedProbe("in-structure", who + " limit lies outside the structure");
  if (!ops.contains(p.against)) throw MalformedProbe("in-structure", who + " comparison element lies outside the structure");
  const bool up = p.direction == Direction::increasing;
  for (std::size_t i = 0; i + 1 < p.window.size(); ++i) {
    const bool ok = up ? ops.leq(p.window[i], p.window[i + 1]) : ops.leq(p.window[i + 1], p.window[i]);
    if (!ok)
      throw MalformedProbe("window-monotone", who + " is not " + std::string(direction_name(p.direction)) +
                                                  " at positions " + std::to_string(i + 1) + "," +
                                                  std::to_string(i + 2));
  }
  for (std::size_t i = 0; i < p.window.size(); ++i) {
    const bool ok = up ? ops.leq(p.window[i], p.limit) : ops.leq(p.limit, p.window[i]);
    if (!ok)
      throw MalformedProbe("limit-bound", who + " limit " + ops.label(p.limit) + " does not bound element " +
                                              std::to_string(i + 1));
  }
  if (p.exhaustive) {
    const T computed = up ? ops.join(p.window) : ops.meet(p.window);
    if (!(computed == p.limit))
      throw MalformedProbe("exhaustive-limit", who + " is exhaustive but its " + (up ? "sup " : "inf ") +
                                                   ops.label(computed) + " differs from the declared limit " +
                                                   ops.label(p.limit));
  }
}

// Shared evaluation for the three chain axioms. `kind` 1: lower limit
// preserves x_i >= y; 2: upper limit preserves y >= x_i; 3: eventual strictness.
template <class T>
ProbeOutcome evaluate_chain(int kind, const RelationOracle<T>& rel, const ChainProbe<T>& p, std::size_t idx) {
  ProbeOutcome o;
  o.probe = idx;
  o.exhaustive = p.exhaustive;
  auto strictly = [&](const T& a, const T& b) { return rel(a, b) && !rel(b, a); };
  bool hyp = true;
  bool concl = true;
  if (kind == 1) {
    for (const auto& x : p.window) hyp = hyp && rel(x, p.against);
    if (hyp) concl = rel(p.limit, p.against);
  } else if (kind == 2) {
    for (const auto& x : p.window) hyp = hyp && rel(p.against, x);
    if (hyp) concl = rel(p.against, p.limit);
  } else {
    hyp = strictly(p.limit, p.against);
    if (hyp) concl = strictly(p.window.back(), p.against);
    if (!concl) o.index = p.window.size();
  }
  o.verdict = !hyp ? AxiomVerdict::vacuous : concl ? AxiomVerdict::holds_on_probes : AxiomVerdict::violated;
  return o;
}

void finish(AxiomEntry& e) {
  bool any_hold = false;
  bool all_exhaustive = true;
  for (const auto& o : e.trace) {
    if (o.verdict == AxiomVerdict::vacuous) continue;
    ++e.hypothesis_held;
    if (!o.exhaustive) all_exhaustive = false;
    if (o.verdict == AxiomVerdict::violated && !e.violation) e.violation = o;
    if (o.verdict == AxiomVerdict::holds_on_probes) any_hold = true;
  }
  if (e.violation) {
    e.verdict = AxiomVerdict::violated;
  } else if (any_hold) {
    e.verdict = AxiomVerdict::holds_on_probes;
    if (e.axiom == Axiom::c4)
      e.note = "checked only against the supplied alterations";
    else if (all_exhaustive)
      e.note = "exhaustive probes only: finite monotone chains attain their limits, so this holds vacuously";
    else
      e.note = "falsification only: holding on the supplied probes is not a proof";
  } else {
    e.verdict = AxiomVerdict::vacuous;
    e.note = e.applicable == 0 ? "no probe of the required direction" : "hypothesis never held on the supplied probes";
  }
}

template <class T>
void run_chain_axioms(std::vector<AxiomEntry>& entries, const std::array<Axiom, 3>& ids,
                      const RelationOracle<T>& rel, const std::vector<ChainProbe<T>>& probes) {
  for (int k = 0; k < 3; ++k) {
    AxiomEntry e;
    e.axiom = ids[k];
    const Direction need = k == 0 ? Direction::decreasing : Direction::increasing;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (probes[i].direction != need) continue;
      ++e.applicable;
      e.trace.push_back(evaluate_chain(k + 1, rel, probes[i], i));
    }
    finish(e);
    entries.push_back(std::move(e));
  }
}

ProbeOutcome evaluate_c4(const RelationOracle<Event>& rel, const C4Probe& p, std::size_t idx) {
  ProbeOutcome o;
  o.probe = idx;
  o.exhaustive = p.exhaustive;
  auto strictly = [&](Event a, Event b) { return rel(a, b) && !rel(b, a); };
  if (!strictly(p.f, p.g)) return o;
  std::size_t last_fail = 0;
  for (const auto& [i, alts] : p.alterations)
    for (const auto& [f2, g2] : alts)
      if (!strictly(f2, g2)) last_fail = std::max(last_fail, i);
  if (last_fail == p.window.size()) {
    o.verdict = AxiomVerdict::violated;
    o.index = last_fail;
  } else {
    o.verdict = AxiomVerdict::holds_on_probes;
    o.n = last_fail + 1;
  }
  return o;
}

}  // namespace

void validate_probe(const IntegerBox& box, const BoxProbe& probe) {
  auto dim_ok = [&](const BoxPoint& p) { return p.size() == box.dimension(); };
  bool ok = dim_ok(probe.limit) && dim_ok(probe.against);
  for (const auto& x : probe.window) ok = ok && dim_ok(x);
  if (!ok) throw MalformedProbe("dimension", "probe '" + probe.name + "' has points of the wrong dimension");
  validate_chain(BoxOps{box}, probe);
}

void validate_probe(const EventAlgebra& algebra, const EventProbe& probe) { validate_chain(EventOps{algebra}, probe); }

void validate_probe(const EventAlgebra& algebra, const C4Probe& p) {
  const std::string who = "C4 probe '" + p.name + "'";
  if (p.window.empty()) throw MalformedProbe("window-nonempty", who + " has an empty window");
  for (auto a : p.window)
    if (!algebra.contains(a)) throw MalformedProbe("in-structure", who + " has an event outside the algebra");
  if (!algebra.contains(p.f) || !algebra.contains(p.g))
    throw MalformedProbe("in-structure", who + " has F or G outside the algebra");
  for (std::size_t i = 0; i + 1 < p.window.size(); ++i)
    if ((p.window[i + 1] & ~p.window[i]) != 0)
      throw MalformedProbe("window-monotone", who + " is not decreasing at positions " + std::to_string(i + 1) + "," +
                                                  std::to_string(i + 2));
  if (p.exhaustive) {
    Event meet = algebra.omega();
    for (auto a : p.window) meet &= a;
    if (meet != 0) throw MalformedProbe("vanishing-limit", who + " is exhaustive but its intersection is not empty");
  }
  for (const auto& [i, alts] : p.alterations) {
    if (i < 1 || i > p.window.size())
      throw MalformedProbe("alteration-index", who + " has alterations at index " + std::to_string(i) +
                                                   " outside 1.." + std::to_string(p.window.size()));
    const Event outside = algebra.complement(p.window[i - 1]);
    for (const auto& [f2, g2] : alts) {
      if (!algebra.contains(f2) || !algebra.contains(g2))
        throw MalformedProbe("in-structure", who + " has an alteration outside the algebra");
      if ((f2 & outside) != (p.f & outside))
        throw MalformedProbe("alteration-agreement", who + " alteration at index " + std::to_string(i) +
                                                         " changes F outside A_" + std::to_string(i));
      if ((g2 & outside) != (p.g & outside))
        throw MalformedProbe("alteration-agreement", who + " alteration at index " + std::to_string(i) +
                                                         " changes G outside A_" + std::to_string(i));
    }
  }
}

AxiomReport check_primed_axioms(const IntegerBox& box, const RelationOracle<BoxPoint>& rel,
                                const std::vector<BoxProbe>& probes) {
  for (const auto& p : probes) validate_probe(box, p);
  AxiomReport report;
  run_chain_axioms(report.axioms, {Axiom::c1_primed, Axiom::c2_primed, Axiom::c3_primed}, rel, probes);
  return report;
}

AxiomReport check_set_axioms(const EventAlgebra& algebra, const RelationOracle<Event>& rel,
                             const std::vector<EventProbe>& probes, const std::vector<C4Probe>& c4) {
  for (const auto& p : probes) validate_probe(algebra, p);
  for (const auto& p : c4) validate_probe(algebra, p);
  AxiomReport report;
  run_chain_axioms(report.axioms, {Axiom::c1, Axiom::c2, Axiom::c3}, rel, probes);
  AxiomEntry e;
  e.axiom = Axiom::c4;
  for (std::size_t i = 0; i < c4.size(); ++i) {
    ++e.applicable;
    e.trace.push_back(evaluate_c4(rel, c4[i], i));
  }
  finish(e);
  report.axioms.push_back(std::move(e));
  return report;
}

namespace {

template <class T>
bool violates_chain(Axiom a, const RelationOracle<T>& rel, const ChainProbe<T>& p) {
  const bool lower = a == Axiom::c1 || a == Axiom::c1_primed;
  const bool upper = a == Axiom::c2 || a == Axiom::c2_primed;
  const bool tail = a == Axiom::c3 || a == Axiom::c3_primed;
  if (lower) {
    if (p.direction != Direction::decreasing) return false;
    return std::all_of(p.window.begin(), p.window.end(), [&](const T& x) { return rel(x, p.against); }) &&
           !rel(p.limit, p.against);
  }
  if (upper) {
    if (p.direction != Direction::increasing) return false;
    return std::all_of(p.window.begin(), p.window.end(), [&](const T& x) { return rel(p.against, x); }) &&
           !rel(p.against, p.limit);
  }
  if (tail) {
    if (p.direction != Direction::increasing) return false;
    const bool y_below_limit = rel(p.limit, p.against) && !rel(p.against, p.limit);
    // Some N with y < x_i for all i >= N exists iff it holds from the last position on.
    bool exists_n = false;
    for (std::size_t n = 0; n < p.window.size() && !exists_n; ++n) {
      bool all = true;
      for (std::size_t i = n; i < p.window.size(); ++i)
        all = all && rel(p.window[i], p.against) && !rel(p.against, p.window[i]);
      exists_n = all;
    }
    return y_below_limit && !exists_n;
  }
  return false;
}

}  // namespace

bool probe_violates(Axiom a, const RelationOracle<BoxPoint>& rel, const BoxProbe& probe) {
  return violates_chain(a, rel, probe);
}

bool probe_violates(Axiom a, const RelationOracle<Event>& rel, const EventProbe& probe) {
  return violates_chain(a, rel, probe);
}

bool probe_violates(const RelationOracle<Event>& rel, const C4Probe& p) {
  auto strictly = [&](Event a, Event b) { return rel(a, b) && !rel(b, a); };
  if (!strictly(p.f, p.g)) return false;
  // No N works iff the tail position itself has a reversing alteration.
  auto it = p.alterations.find(p.window.size());
  if (it == p.alterations.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const auto& fg) { return !strictly(fg.first, fg.second); });
}

bool neg_sup_inf_lemma(const IntegerBox& box, const std::vector<BoxPoint>& s) {
  if (s.empty()) throw InputError("the set must be nonempty");
  std::vector<BoxPoint> neg;
  for (const auto& x : s) {
    if (!box.contains(x)) throw InputError("point " + box.label(x) + " lies outside the box");
    auto nx = IntegerBox::negate(x);
    if (!box.contains(nx)) throw InputError("negated point " + box.label(nx) + " lies outside the box");
    neg.push_back(std::move(nx));
  }
  return box.inf(neg) == IntegerBox::negate(box.sup(s));
}

}  // namespace ordkit
