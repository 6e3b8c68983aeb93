#include "ordkit/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "ordkit/cli/instance.hpp"
#include "ordkit/cli/report.hpp"
#include "ordkit/error.hpp"
#include "ordkit/parallel.hpp"

namespace ordkit::cli {

namespace {

struct Common {
  bool text = false;
  bool json = false;
  unsigned threads = 0;
  std::size_t max_size = 0;
  bool timing = false;

  std::optional<std::size_t> cap() const {
    if (max_size == 0) return std::nullopt;
    return max_size;
  }
};

struct Outcome {
  RunReport report;
  int code = 0;
};

// Files are read once; their bytes feed both the parser and the digest.
class Inputs {
 public:
  InstanceDocument load(const std::string& path) {
    auto bytes = read_file(path);
    buffer_ += '\0';
    buffer_ += bytes;
    return parse_instance_text(bytes, path);
  }

  std::string digest(const Json& params) const { return fnv1a_hex(params.dump() + buffer_); }

 private:
  std::string buffer_;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == '+') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::size_t> parse_moduli(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& part : split_list(s)) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || part.empty() || part[0] == '-') throw InputError("--moduli: bad modulus '" + part + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw InputError("--moduli: at least one modulus is required");
  return out;
}

void require_size(std::size_t n, std::optional<std::size_t> cap, const std::string& what) {
  if (cap && n > *cap)
    throw CapExceeded(what + ": size " + std::to_string(n) + " exceeds --max-size " + std::to_string(*cap));
}

Positivity parse_positivity(const std::string& s) {
  if (s == "strict") return Positivity::strict;
  if (s == "relaxed") return Positivity::relaxed;
  throw InputError("positivity must be strict or relaxed, got '" + s + "'");
}

// --- check ---------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::string topology;
  std::string require;
};

Outcome cmd_check(const CheckArgs& a, const Common& c) {
  Inputs in;
  const auto doc = in.load(a.input);
  const auto rel = build_relation(payload_as<RelationDoc>(doc, a.input));
  std::optional<FiniteTopology> top;
  if (!a.topology.empty()) {
    const auto tdoc = in.load(a.topology);
    top = build_topology(payload_as<TopologyDoc>(tdoc, a.topology));
  }
  std::vector<Property> required;
  for (const auto& name : split_list(a.require)) required.push_back(parse_property(name));

  const auto props = check_properties(rel, c.cap().value_or(kPropertyCheckCap));
  Outcome o;
  o.report.operation = "check";
  o.report.params = {{"require", Json::array()}};
  for (auto p : required) o.report.params["require"].push_back(std::string(property_name(p)));
  o.report.params["topology"] = top.has_value();
  o.report.input_digest = in.digest(o.report.params);

  Json failed = Json::array();
  for (auto p : required)
    if (!props[p].holds) failed.push_back(std::string(property_name(p)));
  auto& r = o.report.result;
  r["relation"] = relation_json(rel);
  r["properties"] = properties_json(rel, props);
  r["required_failed"] = failed;
  bool ok = failed.empty();
  if (top) {
    const auto cont = is_continuous(rel, *top);
    r["continuity"] = continuity_json(rel, cont);
    ok = ok && cont.continuous;
  }
  o.report.verdict = ok ? "pass" : "fail";
  o.code = ok ? 0 : 1;
  return o;
}

// --- orderable -----------------------------------------------------------

struct OrderableArgs {
  std::string topology;
  std::string mode = "criterion,search";
};

Outcome cmd_orderable(const OrderableArgs& a, const Common& c) {
  if (a.topology.empty()) throw InputError("orderable: --topology is required");
  Inputs in;
  const auto doc = in.load(a.topology);
  const auto top = build_topology(payload_as<TopologyDoc>(doc, a.topology));

  std::vector<std::string> modes;
  for (const auto& m : split_list(a.mode)) {
    if (m != "criterion" && m != "search" && m != "weak" && m != "brute")
      throw InputError("--mode: unknown mode '" + m + "' (expected criterion, search, weak or brute)");
    if (std::find(modes.begin(), modes.end(), m) == modes.end()) modes.push_back(m);
  }
  if (modes.empty()) throw InputError("--mode: no mode given");
  auto has = [&](const char* m) { return std::find(modes.begin(), modes.end(), m) != modes.end(); };

  Outcome o;
  o.report.operation = "orderable";
  o.report.params = {{"modes", modes}};
  if (c.cap()) o.report.params["max_size"] = *c.cap();
  o.report.input_digest = in.digest(o.report.params);
  auto& r = o.report.result;
  const auto comps = components(top);
  r["topology"] = topology_json(top);
  r["size"] = top.size();
  r["connected"] = comps.count() <= 1;
  r["component_count"] = comps.count();

  std::vector<std::string> verdicts;
  std::optional<bool> criterion, ordered, weak, brute;
  if (has("criterion")) {
    require_size(top.size(), c.cap(), "criterion");
    const auto rep = eilenberg_criterion(top);
    criterion = rep.satisfied;
    r["criterion"] = criterion_json(top, rep);
    verdicts.push_back(rep.satisfied ? "criterion satisfied" : "criterion not satisfied");
  }
  if (has("search")) {
    const auto w = find_order(top, c.cap().value_or(kOrderSearchCap));
    ordered = w.has_value();
    r["search"] = {{"found", *ordered}};
    if (w) r["search"]["witness"] = witness_json(*w);
    verdicts.push_back(*ordered ? "orderable" : "not orderable");
  }
  if (has("weak")) {
    const auto w = find_weak_order(top, c.cap().value_or(kWeakOrderSearchCap));
    weak = w.has_value();
    r["weak"] = {{"found", *weak}};
    if (w) r["weak"]["witness"] = witness_json(*w);
    verdicts.push_back(*weak ? "weakly orderable" : "not weakly orderable");
  }
  if (has("brute")) {
    const auto w = brute_force_weak_order(top, c.cap().value_or(kBruteForceCap));
    brute = w.has_value();
    r["brute"] = {{"found", *brute}};
    if (w) r["brute"]["witness"] = witness_json(*w);
    if (!weak) verdicts.push_back(*brute ? "weakly orderable" : "not weakly orderable");
  }

  Json flags = Json::array();
  const bool gap = criterion && ordered && *criterion != *ordered;
  if (gap) flags.push_back("criterion-witness gap");
  if (weak && brute && *weak != *brute) flags.push_back("weak-brute disagreement");
  r["flags"] = flags;
  if (criterion && top.size() >= 2 && comps.count() == 1 && *criterion)
    r["note"] = "a connected finite space with two or more points has no continuous linear order";

  std::string verdict;
  for (std::size_t i = 0; i < verdicts.size(); ++i) verdict += (i ? "; " : "") + verdicts[i];
  if (gap) verdict += "; criterion-witness gap";
  o.report.verdict = verdict;
  o.code = 0;
  return o;
}

// --- group ---------------------------------------------------------------

struct SweepArgs {
  std::string input;
  bool exhaustive = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::string claim;
  std::string sample_space;
};

Budget make_budget(const SweepArgs& a, SampleSpace space) {
  if (a.exhaustive) return Budget::exhaustive_budget();
  if (a.sample == 0) throw InputError("give --input, --exhaustive or --sample N");
  return Budget::sampled(a.sample, a.seed, space);
}

Json sweep_params(const SweepArgs& a, const Budget& b) {
  Json p = {{"exhaustive", b.exhaustive}};
  if (!b.exhaustive) {
    p["samples"] = b.samples;
    p["seed"] = b.seed;
    p["sample_space"] = b.space == SampleSpace::all_relations ? "all" : "complete";
  }
  p["claims"] = split_list(a.claim);
  return p;
}

Outcome finish_sweep(std::vector<VerificationReport> reports, const std::string& filter, Outcome o) {
  const auto wanted = split_list(filter);
  for (const auto& w : wanted)
    if (std::none_of(reports.begin(), reports.end(), [&](const auto& r) { return r.claim == w; }))
      throw InputError("--claim: unknown claim '" + w + "'");
  std::uint64_t total = 0;
  Json list = Json::array();
  for (const auto& rep : reports) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), rep.claim) == wanted.end()) continue;
    total += rep.counterexample_count;
    list.push_back(verification_json(rep));
  }
  o.report.result["claims"] = list;
  o.report.result["counterexample_total"] = total;
  o.report.verdict = total == 0 ? "no counterexamples" : "counterexamples found";
  o.code = total == 0 ? 0 : 1;
  return o;
}

Outcome cmd_group(const SweepArgs& a, const std::string& moduli, const Common& c) {
  const auto g = FiniteAbelianGroup::build(parse_moduli(moduli), c.cap().value_or(kGroupOrderCap));
  Outcome o;
  o.report.operation = "group";
  Inputs in;
  if (!a.input.empty()) {
    const auto doc = in.load(a.input);
    const auto rel = build_group_relation(payload_as<GroupRelationDoc>(doc, a.input), g);
    o.report.params = {{"moduli", g.moduli()}};
    o.report.input_digest = in.digest(o.report.params);
    const auto add = is_additive(rel, g);
    const auto strong = is_strongly_additive(rel, g);
    const auto props = check_properties(rel, std::max(g.order(), kPropertyCheckCap));
    auto& r = o.report.result;
    r["group"] = {{"moduli", g.moduli()}, {"order", g.order()}};
    r["relation"] = relation_json(rel);
    r["additive"] = additivity_json(rel, add);
    r["strongly_additive"] = additivity_json(rel, strong);
    r["properties"] = properties_json(rel, props);
    o.report.verdict = std::string(add.holds ? "additive" : "not additive") + "; " +
                       (strong.holds ? "strongly additive" : "not strongly additive");
    o.code = add.holds && strong.holds ? 0 : 1;
    return o;
  }
  const auto budget = make_budget(a, SampleSpace::all_relations);
  o.report.params = sweep_params(a, budget);
  o.report.params["moduli"] = g.moduli();
  o.report.input_digest = in.digest(o.report.params);
  o.report.result["group"] = {{"moduli", g.moduli()}, {"order", g.order()}};
  return finish_sweep(verify_additivity_theorems(g, budget), a.claim, std::move(o));
}

// --- sigma ---------------------------------------------------------------

Outcome cmd_sigma(const SweepArgs& a, std::size_t atoms, const Common& c) {
  Outcome o;
  o.report.operation = "sigma";
  Inputs in;
  if (!a.input.empty()) {
    require_size(atoms, c.cap().value_or(kEventRelationAtomCap), "sigma --input");
    const EventAlgebra alg(atoms);
    const auto doc = in.load(a.input);
    const auto rel = build_event_relation(payload_as<EventRelationDoc>(doc, a.input), alg);
    o.report.params = {{"atoms", atoms}};
    o.report.input_digest = in.digest(o.report.params);
    const auto vil = is_villegas_additive(rel, alg);
    const auto props = check_properties(rel, alg.event_count());
    auto& r = o.report.result;
    r["atoms"] = atoms;
    r["relation"] = relation_json(rel);
    r["villegas_additive"] = villegas_json(alg, vil);
    r["properties"] = properties_json(rel, props);
    const bool complete = props[Property::complete].holds;
    r["degroot"] = {{"antecedent", complete && vil.holds},
                    {"transitive", props[Property::transitive].holds}};
    o.report.verdict = vil.holds ? "Villegas-additive" : "not Villegas-additive";
    o.code = vil.holds ? 0 : 1;
    return o;
  }
  SampleSpace space = SampleSpace::complete_relations;
  if (a.sample_space == "all") space = SampleSpace::all_relations;
  else if (!a.sample_space.empty() && a.sample_space != "complete")
    throw InputError("--sample-space must be all or complete");
  const EventAlgebra alg(atoms);
  if (atoms > 7) throw CapExceeded("sigma: relation sweeps need at most 7 atoms");
  const auto budget = make_budget(a, space);
  o.report.params = sweep_params(a, budget);
  o.report.params["atoms"] = atoms;
  o.report.input_digest = in.digest(o.report.params);
  o.report.result["atoms"] = atoms;
  return finish_sweep({verify_degroot(alg, budget)}, a.claim, std::move(o));
}

// --- represent -----------------------------------------------------------

struct RepresentArgs {
  std::string input;
  std::string positivity;
};

Outcome cmd_represent(const RepresentArgs& a, const Common& c) {
  Inputs in;
  const auto doc = in.load(a.input);
  Outcome o;
  o.report.operation = "represent";
  auto& r = o.report.result;
  if (const auto* vd = std::get_if<VerdictsDoc>(&doc.payload)) {
    const auto vs = build_verdicts(*vd);
    const auto pos = parse_positivity(!a.positivity.empty() ? a.positivity : vd->positivity.value_or("strict"));
    o.report.params = {{"positivity", std::string(positivity_name(pos))}};
    o.report.input_digest = in.digest(o.report.params);
    const auto res = solve_linear_representation(vs, pos);
    r["dimension"] = vs.dimension();
    r["verdict_count"] = vs.pairs().size();
    r["representation"] = representation_json(vs, res);
    o.report.verdict = res.feasible() ? "representable" : "infeasible";
    o.code = res.feasible() ? 0 : 1;
    return o;
  }
  if (const auto* ed = std::get_if<EventRelationDoc>(&doc.payload)) {
    require_size(ed->atoms, c.cap().value_or(kEventRelationAtomCap), "represent");
    const EventAlgebra alg(ed->atoms);
    const auto rel = build_event_relation(*ed, alg);
    const auto pos = parse_positivity(a.positivity.empty() ? "relaxed" : a.positivity);
    o.report.params = {{"positivity", std::string(positivity_name(pos))}};
    o.report.input_digest = in.digest(o.report.params);
    const auto res = solve_qualitative_probability(rel, alg, pos);
    r["atoms"] = ed->atoms;
    r["measure"] = measure_json(alg, res);
    o.report.verdict = res.feasible() ? "representable" : "infeasible";
    o.code = res.feasible() ? 0 : 1;
    return o;
  }
  throw InputError(a.input + ": represent expects a verdicts or event-relation document, got '" + doc.kind + "'");
}

// --- probe ---------------------------------------------------------------

struct ProbeArgs {
  std::string input;
  std::string relation;
};

Outcome cmd_probe(const ProbeArgs& a, const Common&) {
  Inputs in;
  const auto doc = in.load(a.input);
  const auto& pd = payload_as<ProbesDoc>(doc, a.input);
  std::optional<BinaryRelation> override_rel;
  if (!a.relation.empty()) {
    if (pd.structure != "events") throw InputError("--relation needs an events structure");
    const auto rdoc = in.load(a.relation);
    const EventAlgebra alg(pd.atoms);
    override_rel = build_event_relation(payload_as<EventRelationDoc>(rdoc, a.relation), alg);
  }
  const auto setup = build_probes(pd, override_rel);
  Outcome o;
  o.report.operation = "probe";
  o.report.params = {{"structure", pd.structure}, {"relation_override", override_rel.has_value()}};
  o.report.input_digest = in.digest(o.report.params);
  auto& r = o.report.result;
  AxiomReport rep;
  std::vector<std::string> names, c4_names;
  if (setup.box) {
    for (const auto& p : setup.box_probes) names.push_back(p.name);
    rep = check_primed_axioms(*setup.box, setup.box_oracle, setup.box_probes);
    r["structure"] = {{"type", "box"}, {"lo", setup.box->lo()}, {"hi", setup.box->hi()}};
  } else {
    for (const auto& p : setup.event_probes) names.push_back(p.name);
    for (const auto& p : setup.c4_probes) c4_names.push_back(p.name);
    rep = check_set_axioms(*setup.algebra, setup.event_oracle, setup.event_probes, setup.c4_probes);
    r["structure"] = {{"type", "events"}, {"atoms", setup.algebra->atoms()}};
  }
  r["report"] = axiom_report_json(rep, names, c4_names);
  o.report.verdict = rep.any_violated() ? "violated" : "no violations";
  o.code = rep.any_violated() ? 1 : 0;
  return o;
}

void add_common(CLI::App& app, Common& c) {
  auto* json = app.add_flag("--json", c.json, "JSON report (default)");
  auto* text = app.add_flag("--text", c.text, "Plain-text report");
  json->excludes(text);
  app.add_option("--threads", c.threads, "Worker threads (0 = hardware)");
  app.add_option("--max-size", c.max_size, "Size cap for the operation (0 = default)");
  app.add_flag("--timing", c.timing, "Add wall-clock timing to the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite order, topology and additivity checks", "ordkit"};
  app.require_subcommand(1);
  Common common;
  add_common(app, common);

  auto* check = app.add_subcommand("check", "Relation properties and continuity");
  CheckArgs check_args;
  check->add_option("--input", check_args.input, "Relation file")->required();
  check->add_option("--topology", check_args.topology, "Topology file");
  check->add_option("--require", check_args.require, "Comma list of properties that must hold");

  auto* orderable = app.add_subcommand("orderable", "Orderability of a finite space");
  OrderableArgs ord_args;
  orderable->add_option("--topology,--input", ord_args.topology, "Topology file")->required();
  orderable->add_option("--mode", ord_args.mode, "Comma list of criterion, search, weak, brute");

  auto* group = app.add_subcommand("group", "Additivity on finite Abelian groups");
  SweepArgs group_args;
  std::string moduli;
  group->add_option("--moduli", moduli, "Comma list of moduli")->required();
  group->add_option("--input", group_args.input, "Group relation file");
  auto* gex = group->add_flag("--exhaustive", group_args.exhaustive, "Every relation on the group");
  auto* gs = group->add_option("--sample", group_args.sample, "Number of random relations");
  gex->excludes(gs);
  group->add_option("--seed", group_args.seed, "Sampling seed");
  group->add_option("--claim", group_args.claim, "Comma list of claims to report");

  auto* sigma = app.add_subcommand("sigma", "Qualitative probability on event algebras");
  SweepArgs sigma_args;
  std::size_t atoms = 0;
  sigma->add_option("--atoms", atoms, "Number of atoms")->required()->check(CLI::Range(1, 16));
  sigma->add_option("--input", sigma_args.input, "Event relation file");
  auto* sex = sigma->add_flag("--exhaustive", sigma_args.exhaustive, "Every relation on the algebra");
  auto* ss = sigma->add_option("--sample", sigma_args.sample, "Number of random relations");
  sex->excludes(ss);
  sigma->add_option("--seed", sigma_args.seed, "Sampling seed");
  sigma->add_option("--claim", sigma_args.claim, "Comma list of claims to report");
  sigma->add_option("--sample-space", sigma_args.sample_space, "all or complete (default complete)");

  auto* represent = app.add_subcommand("represent", "Exact linear or measure representation");
  RepresentArgs rep_args;
  represent->add_option("--input", rep_args.input, "Verdicts or event relation file")->required();
  represent->add_option("--positivity", rep_args.positivity, "strict or relaxed");

  auto* probe = app.add_subcommand("probe", "Monotone continuity axioms on chain probes");
  ProbeArgs probe_args;
  probe->add_option("--input", probe_args.input, "Probes file")->required();
  probe->add_option("--relation", probe_args.relation, "Event relation file replacing the embedded relation");

  auto* version = app.add_subcommand("version", "Print the tool version");

  for (auto* sub : {check, orderable, group, sigma, represent, probe, version}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<ScopedWorkerThreads> threads;
    if (common.threads > 0) threads.emplace(common.threads);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (check->parsed()) o = cmd_check(check_args, common);
    else if (orderable->parsed()) o = cmd_orderable(ord_args, common);
    else if (group->parsed()) o = cmd_group(group_args, moduli, common);
    else if (sigma->parsed()) o = cmd_sigma(sigma_args, atoms, common);
    else if (represent->parsed()) o = cmd_represent(rep_args, common);
    else if (probe->parsed()) o = cmd_probe(probe_args, common);
    else {
      o.report.operation = "version";
      o.report.input_digest = fnv1a_hex("");
      o.report.verdict = kToolVersion;
    }
    if (common.timing)
      o.report.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto doc = report_json(o.report);
    out << (common.text ? render_text(doc) : render_json(doc));
    return o.code;
  } catch (const MalformedProbe& e) {
    err << "ordkit: error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "ordkit: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "ordkit: internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ordkit::cli
