#include "ordkit/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace ordkit::cli {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json labels_json(const Carrier& carrier, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(carrier.label(i));
  return out;
}

Json set_json(const Carrier& carrier, const ElementSet& s) {
  return labels_json(carrier, members(s, carrier.size()));
}

Json relation_json(const BinaryRelation& rel) {
  const auto& c = *rel.carrier();
  Json pairs = Json::array();
  for (const auto& [i, j] : rel.pairs()) pairs.push_back({c.label(i), c.label(j)});
  Json matrix = Json::array();
  for (std::size_t i = 0; i < rel.size(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < rel.size(); ++j) row += rel.holds(i, j) ? '1' : '0';
    matrix.push_back(row);
  }
  return {{"elements", c.labels()}, {"pairs", pairs}, {"matrix", matrix}};
}

Json properties_json(const BinaryRelation& rel, const PropertyReport& report) {
  Json out = Json::object();
  for (auto p : kAllProperties) {
    const auto& v = report[p];
    Json e = {{"holds", v.holds}};
    if (!v.holds) e["witness"] = labels_json(*rel.carrier(), v.witness);
    out[std::string(property_name(p))] = e;
  }
  return out;
}

Json continuity_json(const BinaryRelation& rel, const ContinuityResult& result) {
  Json out = {{"continuous", result.continuous}};
  if (result.violation) {
    const auto& v = *result.violation;
    const auto& c = *rel.carrier();
    out["violation"] = {{"element", c.label(v.element)},
                        {"section", std::string(section_name(v.kind))},
                        {"set", set_json(c, v.section)}};
  }
  return out;
}

Json topology_json(const FiniteTopology& top) {
  const auto& c = *top.carrier();
  Json nbhd = Json::object();
  for (std::size_t x = 0; x < top.size(); ++x) nbhd[c.label(x)] = set_json(c, top.min_neighborhood(x));
  return {{"elements", c.labels()}, {"min_nbhd", nbhd}};
}

Json criterion_json(const FiniteTopology& top, const CriterionReport& report) {
  const auto comps = components(top);
  Json list = Json::array();
  for (const auto& v : report.components) {
    Json e = {{"component", set_json(*top.carrier(), comps.block(v.component))}, {"size", v.size}};
    if (v.exempt) {
      e["exempt"] = true;
    } else {
      e["punctured_square_disconnected"] = *v.punctured_disconnected;
    }
    list.push_back(e);
  }
  return {{"satisfied", report.satisfied}, {"component_count", report.component_count}, {"components", list}};
}

Json witness_json(const OrderWitness& w) {
  Json out = {{"kind", w.kind == OrderKind::order ? "order" : "weak-order"}, {"relation", relation_json(w.relation)}};
  if (w.equivalence) {
    Json classes = Json::array();
    for (const auto& b : w.equivalence->blocks()) classes.push_back(set_json(*w.relation.carrier(), b));
    out["classes"] = classes;
  }
  out["properties"] = properties_json(w.relation, w.properties);
  out["continuity"] = continuity_json(w.relation, w.continuity);
  return out;
}

Json verification_json(const VerificationReport& report) {
  Json universe = {{"exhaustive", report.universe.exhaustive},
                   {"size", report.universe.size},
                   {"description", report.universe.describe()}};
  if (report.universe.seed) universe["seed"] = *report.universe.seed;
  Json cxs = Json::array();
  for (const auto& cx : report.counterexamples)
    cxs.push_back({{"position", cx.position},
                   {"index", cx.relation.index()},
                   {"relation", relation_json(cx.relation)},
                   {"witness", labels_json(*cx.relation.carrier(), cx.witness)}});
  return {{"claim", report.claim},
          {"statement", report.statement},
          {"universe", universe},
          {"checked", report.checked},
          {"antecedent_held", report.antecedent_held},
          {"counterexample_count", report.counterexample_count},
          {"passed", report.passed()},
          {"counterexamples", cxs}};
}

Json additivity_json(const BinaryRelation& rel, const AdditivityResult& result) {
  Json out = {{"holds", result.holds}};
  if (!result.holds) out["witness"] = labels_json(*rel.carrier(), result.witness);
  return out;
}

Json villegas_json(const EventAlgebra& algebra, const VillegasResult& result) {
  Json out = {{"holds", result.holds}};
  if (result.quadruple) {
    const auto& q = *result.quadruple;
    out["clause"] = result.clause == VillegasClause::weak ? "weak" : "strict";
    out["witness"] = {{"A1", algebra.label(q[0])}, {"A2", algebra.label(q[1])},
                      {"B1", algebra.label(q[2])}, {"B2", algebra.label(q[3])}};
  }
  return out;
}

namespace {

Json outcome_json(const ProbeOutcome& o, const std::vector<std::string>& names) {
  Json e = {{"probe", o.probe + 1}};
  if (o.probe < names.size() && !names[o.probe].empty()) e["name"] = names[o.probe];
  e["verdict"] = std::string(axiom_verdict_name(o.verdict));
  if (o.index) e["index"] = *o.index;
  if (o.n) e["n"] = *o.n;
  e["exhaustive"] = o.exhaustive;
  return e;
}

}  // namespace

Json axiom_report_json(const AxiomReport& report, const std::vector<std::string>& probe_names,
                       const std::vector<std::string>& c4_names) {
  Json list = Json::array();
  for (const auto& a : report.axioms) {
    const auto& names = a.axiom == Axiom::c4 ? c4_names : probe_names;
    Json e = {{"axiom", std::string(axiom_name(a.axiom))},
              {"verdict", std::string(axiom_verdict_name(a.verdict))},
              {"applicable", a.applicable},
              {"hypothesis_held", a.hypothesis_held}};
    if (a.violation) e["violation"] = outcome_json(*a.violation, names);
    Json trace = Json::array();
    for (const auto& o : a.trace) trace.push_back(outcome_json(o, names));
    e["trace"] = trace;
    if (!a.note.empty()) e["note"] = a.note;
    list.push_back(e);
  }
  return {{"any_violated", report.any_violated()}, {"axioms", list}};
}

namespace {

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

Json certificate_json(const InfeasibilityCertificate& cert) {
  Json terms = Json::array();
  for (const auto& t : cert.terms)
    terms.push_back({{"row", std::string(row_kind_name(t.kind))},
                     {"index", t.kind == RowKind::normalization ? 0 : t.index + 1},
                     {"coefficient", format_rational(t.coefficient)}});
  return {{"terms", terms}, {"combination", rationals_json(cert.combination)}};
}

}  // namespace

Json representation_json(const VerdictSet& vs, const RepresentationResult& result) {
  Json out = {{"feasible", result.feasible()},
              {"positivity", std::string(positivity_name(result.positivity))},
              {"pivots", result.pivots},
              {"note", "represents = reproduces every supplied verdict, not a relation on all of Z^d"}};
  if (result.witness) {
    const auto& w = *result.witness;
    const auto induced = induced_verdicts(w.weights, vs);
    bool match = true;
    for (std::size_t k = 0; k < induced.size(); ++k) match = match && induced[k] == vs.pairs()[k].verdict;
    out["witness"] = {{"weights", rationals_json(w.weights)},
                      {"slack", format_rational(w.slack)},
                      {"verified", verify_witness(vs, w, result.positivity)},
                      {"verdicts_reproduced", match}};
  }
  if (result.certificate) {
    out["certificate"] = certificate_json(*result.certificate);
    out["certificate"]["verified"] = verify_certificate(vs, *result.certificate, result.positivity);
  }
  return out;
}

Json measure_json(const EventAlgebra& algebra, const MeasureResult& result) {
  Json out = {{"feasible", result.feasible()},
              {"positivity", std::string(positivity_name(result.positivity))},
              {"rows", result.rows.size()},
              {"note", "represents = reproduces every verdict of the relation on the events"}};
  if (result.witness) {
    const auto& w = *result.witness;
    Json values = Json::object();
    for (Event e = 0; e < w.event_values.size(); ++e) values[algebra.label(e)] = format_rational(w.event_values[e]);
    out["witness"] = {{"weights", rationals_json(w.weights)}, {"slack", format_rational(w.slack)}, {"events", values}};
  }
  if (result.certificate) {
    Json cert = certificate_json(*result.certificate);
    // Verdict rows are event pairs here.
    for (auto& t : cert["terms"]) {
      if (t["row"] != "verdict") continue;
      const auto& [a, b] = result.rows[t["index"].get<std::size_t>() - 1];
      t["pair"] = {algebra.label(a), algebra.label(b)};
    }
    out["certificate"] = cert;
  }
  return out;
}

Json report_json(const RunReport& r) {
  Json out = {{"tool", kToolName},
              {"version", kToolVersion},
              {"schema", kReportSchema},
              {"operation", r.operation},
              {"input_digest", r.input_digest},
              {"params", r.params},
              {"verdict", r.verdict},
              {"result", r.result}};
  if (r.timing_ms) out["timing_ms"] = *r.timing_ms;
  return out;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!scalar(e) && !(e.is_array() && e.size() <= 4 && flat_array(e))) return false;
  return true;
}

std::string inline_text(const Json& j) {
  if (scalar(j)) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
  return s + "]";
}

void walk(const Json& j, std::ostringstream& os, const std::string& indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      if (scalar(v) || flat_array(v)) {
        os << indent << it.key() << ": " << inline_text(v) << "\n";
      } else if (v.empty()) {
        os << indent << it.key() << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        os << indent << it.key() << ":\n";
        walk(v, os, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (scalar(e) || flat_array(e)) {
        os << indent << "- " << inline_text(e) << "\n";
      } else {
        os << indent << "-\n";
        walk(e, os, indent + "  ");
      }
    }
  } else {
    os << indent << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  walk(j, os, "");
  return os.str();
}

}  // namespace ordkit::cli
