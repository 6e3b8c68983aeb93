#include "ordkit/cli/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ordkit/error.hpp"
#include "ordkit/rational.hpp"

namespace ordkit::cli {

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw InputError(source_ + ": " + (path.empty() ? "/" : path) + ": " + msg);
  }

  const Json& require(const Json& obj, const std::string& path, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  const Json* optional(const Json& obj, const char* key) const {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }

  void object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || it.key() == a;
      if (!ok) fail(path, "unknown field '" + it.key() + "'");
    }
  }

  const Json& array(const Json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  std::string string(const Json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  std::int64_t integer(const Json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
  }

  std::size_t natural(const Json& j, const std::string& path) const {
    const auto v = integer(j, path);
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  bool boolean(const Json& j, const std::string& path) const {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
  }

  std::vector<std::string> strings(const Json& j, const std::string& path) const {
    std::vector<std::string> out;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  std::vector<std::int64_t> integers(const Json& j, const std::string& path) const {
    std::vector<std::int64_t> out;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  std::vector<std::size_t> naturals(const Json& j, const std::string& path) const {
    std::vector<std::size_t> out;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(natural(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  std::vector<std::string> rationals(const Json& j, const std::string& path) const {
    std::vector<std::string> out;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto p = path + "/" + std::to_string(i);
      std::string s = j[i].is_number_integer() ? std::to_string(j[i].get<std::int64_t>()) : string(j[i], p);
      try {
        parse_rational(s);
      } catch (const InputError& e) {
        fail(p, e.what());
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
};

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

RelationDoc parse_relation(const Reader& r, const Json& j) {
  r.object(j, "", {"kind", "version", "name", "elements", "pairs"});
  RelationDoc d;
  d.elements = r.strings(r.require(j, "", "elements"), "/elements");
  std::set<std::string> known(d.elements.begin(), d.elements.end());
  if (known.size() != d.elements.size()) r.fail("/elements", "duplicate label");
  const auto& pairs = r.array(r.require(j, "", "pairs"), "/pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto path = at("/pairs", i);
    const auto two = r.strings(pairs[i], path);
    if (two.size() != 2) r.fail(path, "a pair needs exactly two labels");
    for (std::size_t k = 0; k < 2; ++k)
      if (!known.count(two[k])) r.fail(at(path, k), "unknown label '" + two[k] + "'");
    d.pairs.emplace_back(two[0], two[1]);
  }
  return d;
}

TopologyDoc parse_topology(const Reader& r, const Json& j) {
  r.object(j, "", {"kind", "version", "name", "elements", "opens", "min_nbhd"});
  TopologyDoc d;
  d.elements = r.strings(r.require(j, "", "elements"), "/elements");
  std::set<std::string> known(d.elements.begin(), d.elements.end());
  if (known.size() != d.elements.size()) r.fail("/elements", "duplicate label");
  auto check_labels = [&](const std::vector<std::string>& labels, const std::string& path) {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (!known.count(labels[k])) r.fail(at(path, k), "unknown label '" + labels[k] + "'");
  };
  const Json* opens = r.optional(j, "opens");
  const Json* nbhd = r.optional(j, "min_nbhd");
  if ((opens == nullptr) == (nbhd == nullptr)) r.fail("", "give exactly one of 'opens' and 'min_nbhd'");
  if (opens) {
    r.array(*opens, "/opens");
    d.opens.emplace();
    for (std::size_t i = 0; i < opens->size(); ++i) {
      auto labels = r.strings((*opens)[i], at("/opens", i));
      check_labels(labels, at("/opens", i));
      d.opens->push_back(std::move(labels));
    }
  } else {
    if (!nbhd->is_object()) r.fail("/min_nbhd", "expected an object mapping labels to label lists");
    d.min_nbhd.emplace();
    for (auto it = nbhd->begin(); it != nbhd->end(); ++it) {
      const auto path = "/min_nbhd/" + it.key();
      if (!known.count(it.key())) r.fail(path, "unknown label '" + it.key() + "'");
      auto labels = r.strings(it.value(), path);
      check_labels(labels, path);
      (*d.min_nbhd)[it.key()] = std::move(labels);
    }
  }
  return d;
}

Residues parse_residues(const Reader& r, const Json& j, const std::string& path, const std::vector<std::size_t>& moduli) {
  Residues t;
  if (j.is_number_integer()) {
    t.push_back(r.natural(j, path));
  } else {
    t = r.naturals(j, path);
  }
  if (t.size() != moduli.size())
    r.fail(path, "expected " + std::to_string(moduli.size()) + " residues, got " + std::to_string(t.size()));
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t[c] >= moduli[c]) r.fail(path, "residue " + std::to_string(t[c]) + " out of range for modulus " +
                                            std::to_string(moduli[c]));
  return t;
}

Json emit_residues(const Residues& t) {
  if (t.size() == 1) return t[0];
  return Json(t);
}

GroupRelationDoc parse_group_relation(const Reader& r, const Json& j) {
  r.object(j, "", {"kind", "version", "name", "moduli", "pairs", "difference_set"});
  GroupRelationDoc d;
  d.moduli = r.naturals(r.require(j, "", "moduli"), "/moduli");
  if (d.moduli.empty()) r.fail("/moduli", "at least one modulus is required");
  for (std::size_t i = 0; i < d.moduli.size(); ++i)
    if (d.moduli[i] < 1) r.fail(at("/moduli", i), "modulus must be at least 1");
  const Json* pairs = r.optional(j, "pairs");
  const Json* diffs = r.optional(j, "difference_set");
  if ((pairs == nullptr) == (diffs == nullptr)) r.fail("", "give exactly one of 'pairs' and 'difference_set'");
  if (pairs) {
    r.array(*pairs, "/pairs");
    d.pairs.emplace();
    for (std::size_t i = 0; i < pairs->size(); ++i) {
      const auto path = at("/pairs", i);
      const auto& p = r.array((*pairs)[i], path);
      if (p.size() != 2) r.fail(path, "a pair needs exactly two elements");
      d.pairs->emplace_back(parse_residues(r, p[0], at(path, 0), d.moduli), parse_residues(r, p[1], at(path, 1), d.moduli));
    }
  } else {
    r.array(*diffs, "/difference_set");
    d.difference_set.emplace();
    for (std::size_t i = 0; i < diffs->size(); ++i)
      d.difference_set->push_back(parse_residues(r, (*diffs)[i], at("/difference_set", i), d.moduli));
  }
  return d;
}

AtomList parse_atoms(const Reader& r, const Json& j, const std::string& path, std::size_t atoms) {
  auto list = r.naturals(j, path);
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] < 1 || list[k] > atoms)
      r.fail(at(path, k), "atom " + std::to_string(list[k]) + " outside 1.." + std::to_string(atoms));
  return list;
}

EventRelationDoc parse_event_relation(const Reader& r, const Json& j) {
  r.object(j, "", {"kind", "version", "name", "atoms", "pairs", "measure"});
  EventRelationDoc d;
  d.atoms = r.natural(r.require(j, "", "atoms"), "/atoms");
  if (d.atoms < 1) r.fail("/atoms", "at least one atom is required");
  const Json* pairs = r.optional(j, "pairs");
  const Json* measure = r.optional(j, "measure");
  if ((pairs == nullptr) == (measure == nullptr)) r.fail("", "give exactly one of 'pairs' and 'measure'");
  if (pairs) {
    r.array(*pairs, "/pairs");
    d.pairs.emplace();
    for (std::size_t i = 0; i < pairs->size(); ++i) {
      const auto path = at("/pairs", i);
      const auto& p = r.array((*pairs)[i], path);
      if (p.size() != 2) r.fail(path, "a pair needs exactly two events");
      d.pairs->emplace_back(parse_atoms(r, p[0], at(path, 0), d.atoms), parse_atoms(r, p[1], at(path, 1), d.atoms));
    }
  } else {
    d.measure = r.rationals(*measure, "/measure");
    if (d.measure->size() != d.atoms) r.fail("/measure", "one weight per atom is required");
    for (std::size_t i = 0; i < d.atoms; ++i)
      if (parse_rational((*d.measure)[i]) < 0) r.fail(at("/measure", i), "weights must be nonnegative");
  }
  return d;
}

VerdictsDoc parse_verdicts(const Reader& r, const Json& j) {
  r.object(j, "", {"kind", "version", "name", "dimension", "pairs", "positivity"});
  VerdictsDoc d;
  d.dimension = r.natural(r.require(j, "", "dimension"), "/dimension");
  if (d.dimension < 1) r.fail("/dimension", "dimension must be at least 1");
  const auto& pairs = r.array(r.require(j, "", "pairs"), "/pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto path = at("/pairs", i);
    r.object(pairs[i], path, {"lhs", "rhs", "verdict"});
    VerdictEntry e;
    e.lhs = r.integers(r.require(pairs[i], path, "lhs"), path + "/lhs");
    e.rhs = r.integers(r.require(pairs[i], path, "rhs"), path + "/rhs");
    if (e.lhs.size() != d.dimension) r.fail(path + "/lhs", "expected " + std::to_string(d.dimension) + " coordinates");
    if (e.rhs.size() != d.dimension) r.fail(path + "/rhs", "expected " + std::to_string(d.dimension) + " coordinates");
    e.verdict = r.string(r.require(pairs[i], path, "verdict"), path + "/verdict");
    if (e.verdict != "succ" && e.verdict != "sim" && e.verdict != "prec")
      r.fail(path + "/verdict", "expected succ, sim or prec");
    d.pairs.push_back(std::move(e));
  }
  if (const Json* p = r.optional(j, "positivity")) {
    d.positivity = r.string(*p, "/positivity");
    if (*d.positivity != "strict" && *d.positivity != "relaxed") r.fail("/positivity", "expected strict or relaxed");
  }
  return d;
}

ProbesDoc parse_probes(const Reader& r, const Json& j) {
  r.object(j, "", {"kind", "version", "name", "structure", "relation", "probes", "c4"});
  ProbesDoc d;
  const auto& s = r.require(j, "", "structure");
  if (!s.is_object()) r.fail("/structure", "expected an object");
  d.structure = r.string(r.require(s, "/structure", "type"), "/structure/type");
  if (d.structure == "box") {
    r.object(s, "/structure", {"type", "lo", "hi"});
    d.lo = r.integers(r.require(s, "/structure", "lo"), "/structure/lo");
    d.hi = r.integers(r.require(s, "/structure", "hi"), "/structure/hi");
    if (d.lo.empty() || d.lo.size() != d.hi.size()) r.fail("/structure", "lo and hi need equal, nonzero length");
  } else if (d.structure == "events") {
    r.object(s, "/structure", {"type", "atoms"});
    d.atoms = r.natural(r.require(s, "/structure", "atoms"), "/structure/atoms");
    if (d.atoms < 1) r.fail("/structure/atoms", "at least one atom is required");
  } else {
    r.fail("/structure/type", "expected 'box' or 'events'");
  }
  const bool box = d.structure == "box";

  auto element = [&](const Json& e, const std::string& path) {
    if (box) {
      const auto p = r.integers(e, path);
      if (p.size() != d.lo.size()) r.fail(path, "expected " + std::to_string(d.lo.size()) + " coordinates");
    } else {
      parse_atoms(r, e, path, d.atoms);
    }
    return e;
  };

  if (const Json* rel = r.optional(j, "relation")) {
    r.object(*rel, "/relation", {"utility", "measure", "verdicts"});
    if (rel->size() != 1) r.fail("/relation", "give exactly one of 'utility', 'measure' and 'verdicts'");
    if (const Json* u = r.optional(*rel, "utility")) {
      if (!box) r.fail("/relation/utility", "utility relations need a box structure");
      d.utility = r.rationals(*u, "/relation/utility");
      if (d.utility->size() != d.lo.size()) r.fail("/relation/utility", "one weight per coordinate is required");
    } else if (const Json* m = r.optional(*rel, "measure")) {
      if (box) r.fail("/relation/measure", "measure relations need an events structure");
      d.measure = r.rationals(*m, "/relation/measure");
      if (d.measure->size() != d.atoms) r.fail("/relation/measure", "one weight per atom is required");
      for (std::size_t i = 0; i < d.atoms; ++i)
        if (parse_rational((*d.measure)[i]) < 0) r.fail(at("/relation/measure", i), "weights must be nonnegative");
    } else {
      const Json& v = r.array(r.require(*rel, "/relation", "verdicts"), "/relation/verdicts");
      d.verdicts.emplace();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto path = at("/relation/verdicts", i);
        r.object(v[i], path, {"lhs", "rhs", "verdict"});
        OracleEntry e;
        e.lhs = element(r.require(v[i], path, "lhs"), path + "/lhs");
        e.rhs = element(r.require(v[i], path, "rhs"), path + "/rhs");
        e.verdict = r.string(r.require(v[i], path, "verdict"), path + "/verdict");
        try {
          parse_pair_verdict(e.verdict);
        } catch (const InputError& err) {
          r.fail(path + "/verdict", err.what());
        }
        d.verdicts->push_back(std::move(e));
      }
    }
  }

  if (const Json* probes = r.optional(j, "probes")) {
    r.array(*probes, "/probes");
    for (std::size_t i = 0; i < probes->size(); ++i) {
      const auto path = at("/probes", i);
      const auto& p = (*probes)[i];
      r.object(p, path, {"name", "direction", "window", "limit", "exhaustive", "against"});
      ProbeEntry e;
      if (const Json* n = r.optional(p, "name")) e.name = r.string(*n, path + "/name");
      e.direction = r.string(r.require(p, path, "direction"), path + "/direction");
      if (e.direction != "increasing" && e.direction != "decreasing")
        r.fail(path + "/direction", "expected increasing or decreasing");
      const auto& w = r.array(r.require(p, path, "window"), path + "/window");
      for (std::size_t k = 0; k < w.size(); ++k) e.window.push_back(element(w[k], at(path + "/window", k)));
      e.limit = element(r.require(p, path, "limit"), path + "/limit");
      e.exhaustive = r.boolean(r.require(p, path, "exhaustive"), path + "/exhaustive");
      e.against = element(r.require(p, path, "against"), path + "/against");
      d.probes.push_back(std::move(e));
    }
  }

  if (const Json* c4 = r.optional(j, "c4")) {
    if (box) r.fail("/c4", "C4 probes need an events structure");
    r.array(*c4, "/c4");
    for (std::size_t i = 0; i < c4->size(); ++i) {
      const auto path = at("/c4", i);
      const auto& p = (*c4)[i];
      r.object(p, path, {"name", "window", "exhaustive", "f", "g", "alterations"});
      C4Entry e;
      if (const Json* n = r.optional(p, "name")) e.name = r.string(*n, path + "/name");
      const auto& w = r.array(r.require(p, path, "window"), path + "/window");
      for (std::size_t k = 0; k < w.size(); ++k) e.window.push_back(parse_atoms(r, w[k], at(path + "/window", k), d.atoms));
      e.exhaustive = r.boolean(r.require(p, path, "exhaustive"), path + "/exhaustive");
      e.f = parse_atoms(r, r.require(p, path, "f"), path + "/f", d.atoms);
      e.g = parse_atoms(r, r.require(p, path, "g"), path + "/g", d.atoms);
      if (const Json* alts = r.optional(p, "alterations")) {
        r.array(*alts, path + "/alterations");
        for (std::size_t k = 0; k < alts->size(); ++k) {
          const auto ap = at(path + "/alterations", k);
          r.object((*alts)[k], ap, {"index", "f", "g"});
          AlterationEntry a;
          a.index = r.natural(r.require((*alts)[k], ap, "index"), ap + "/index");
          a.f = parse_atoms(r, r.require((*alts)[k], ap, "f"), ap + "/f", d.atoms);
          a.g = parse_atoms(r, r.require((*alts)[k], ap, "g"), ap + "/g", d.atoms);
          e.alterations.push_back(std::move(a));
        }
      }
      d.c4.push_back(std::move(e));
    }
  }
  return d;
}

}  // namespace

InstanceDocument parse_instance(const Json& j, const std::string& source) {
  Reader r(source);
  if (!j.is_object()) r.fail("", "expected a JSON object");
  InstanceDocument doc;
  doc.kind = r.string(r.require(j, "", "kind"), "/kind");
  const auto version = r.integer(r.require(j, "", "version"), "/version");
  if (version != kInstanceVersion)
    r.fail("/version", "unsupported version " + std::to_string(version) + " (expected " +
                           std::to_string(kInstanceVersion) + ")");
  doc.version = static_cast<int>(version);
  if (const Json* n = r.optional(j, "name")) doc.name = r.string(*n, "/name");
  if (doc.kind == "relation") doc.payload = parse_relation(r, j);
  else if (doc.kind == "topology") doc.payload = parse_topology(r, j);
  else if (doc.kind == "group-relation") doc.payload = parse_group_relation(r, j);
  else if (doc.kind == "event-relation") doc.payload = parse_event_relation(r, j);
  else if (doc.kind == "verdicts") doc.payload = parse_verdicts(r, j);
  else if (doc.kind == "probes") doc.payload = parse_probes(r, j);
  else r.fail("/kind", "unknown kind '" + doc.kind + "'");
  return doc;
}

InstanceDocument parse_instance_text(const std::string& text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": invalid JSON at byte " + std::to_string(e.byte));
  }
  return parse_instance(j, source);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstanceDocument load_instance(const std::string& path) { return parse_instance_text(read_file(path), path); }

namespace {

struct Emitter {
  Json& j;

  void operator()(const RelationDoc& d) const {
    j["elements"] = d.elements;
    j["pairs"] = Json::array();
    for (const auto& [a, b] : d.pairs) j["pairs"].push_back({a, b});
  }
  void operator()(const TopologyDoc& d) const {
    j["elements"] = d.elements;
    if (d.opens) j["opens"] = *d.opens;
    if (d.min_nbhd) {
      Json m = Json::object();
      for (const auto& [k, v] : *d.min_nbhd) m[k] = v;
      j["min_nbhd"] = m;
    }
  }
  void operator()(const GroupRelationDoc& d) const {
    j["moduli"] = d.moduli;
    if (d.pairs) {
      j["pairs"] = Json::array();
      for (const auto& [a, b] : *d.pairs) j["pairs"].push_back({emit_residues(a), emit_residues(b)});
    }
    if (d.difference_set) {
      j["difference_set"] = Json::array();
      for (const auto& t : *d.difference_set) j["difference_set"].push_back(emit_residues(t));
    }
  }
  void operator()(const EventRelationDoc& d) const {
    j["atoms"] = d.atoms;
    if (d.pairs) {
      j["pairs"] = Json::array();
      for (const auto& [a, b] : *d.pairs) j["pairs"].push_back({Json(a), Json(b)});
    }
    if (d.measure) j["measure"] = *d.measure;
  }
  void operator()(const VerdictsDoc& d) const {
    j["dimension"] = d.dimension;
    j["pairs"] = Json::array();
    for (const auto& e : d.pairs) j["pairs"].push_back({{"lhs", e.lhs}, {"rhs", e.rhs}, {"verdict", e.verdict}});
    if (d.positivity) j["positivity"] = *d.positivity;
  }
  void operator()(const ProbesDoc& d) const {
    Json s = {{"type", d.structure}};
    if (d.structure == "box") {
      s["lo"] = d.lo;
      s["hi"] = d.hi;
    } else {
      s["atoms"] = d.atoms;
    }
    j["structure"] = s;
    if (d.utility) j["relation"] = {{"utility", *d.utility}};
    if (d.measure) j["relation"] = {{"measure", *d.measure}};
    if (d.verdicts) {
      Json v = Json::array();
      for (const auto& e : *d.verdicts) v.push_back({{"lhs", e.lhs}, {"rhs", e.rhs}, {"verdict", e.verdict}});
      j["relation"] = {{"verdicts", v}};
    }
    j["probes"] = Json::array();
    for (const auto& p : d.probes) {
      Json o;
      if (!p.name.empty()) o["name"] = p.name;
      o["direction"] = p.direction;
      o["window"] = p.window;
      o["limit"] = p.limit;
      o["exhaustive"] = p.exhaustive;
      o["against"] = p.against;
      j["probes"].push_back(o);
    }
    if (!d.c4.empty()) {
      j["c4"] = Json::array();
      for (const auto& p : d.c4) {
        Json o;
        if (!p.name.empty()) o["name"] = p.name;
        o["window"] = p.window;
        o["exhaustive"] = p.exhaustive;
        o["f"] = p.f;
        o["g"] = p.g;
        o["alterations"] = Json::array();
        for (const auto& a : p.alterations) o["alterations"].push_back({{"index", a.index}, {"f", a.f}, {"g", a.g}});
        j["c4"].push_back(o);
      }
    }
  }
};

}  // namespace

Json emit_instance(const InstanceDocument& doc) {
  Json j;
  j["kind"] = doc.kind;
  j["version"] = doc.version;
  if (doc.name) j["name"] = *doc.name;
  std::visit(Emitter{j}, doc.payload);
  return j;
}

BinaryRelation build_relation(const RelationDoc& doc) {
  return BinaryRelation::from_pairs(make_carrier(doc.elements), doc.pairs);
}

FiniteTopology build_topology(const TopologyDoc& doc) {
  auto carrier = make_carrier(doc.elements);
  auto to_set = [&](const std::vector<std::string>& labels) {
    ElementSet s;
    for (const auto& l : labels) s.set(carrier->index_of(l));
    return s;
  };
  if (doc.opens) {
    std::vector<ElementSet> opens;
    for (const auto& o : *doc.opens) opens.push_back(to_set(o));
    return FiniteTopology::from_open_sets(carrier, opens);
  }
  std::vector<ElementSet> nbhd(carrier->size());
  for (std::size_t x = 0; x < carrier->size(); ++x) {
    auto it = doc.min_nbhd->find(carrier->label(x));
    if (it == doc.min_nbhd->end()) throw InputError("min_nbhd has no entry for '" + carrier->label(x) + "'");
    nbhd[x] = to_set(it->second);
  }
  return FiniteTopology::from_min_neighborhoods(carrier, std::move(nbhd));
}

namespace {
std::size_t group_index(const FiniteAbelianGroup& g, const Residues& t) {
  if (t.size() != g.moduli().size()) throw InputError("residue tuple has the wrong length");
  std::size_t idx = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (t[c] >= g.moduli()[c]) throw InputError("residue out of range");
    idx = idx * g.moduli()[c] + t[c];
  }
  return idx;
}
}  // namespace

BinaryRelation build_group_relation(const GroupRelationDoc& doc, const FiniteAbelianGroup& g) {
  if (doc.moduli != g.moduli()) throw InputError("relation file moduli differ from the requested group");
  if (doc.difference_set) {
    std::vector<std::size_t> diffs;
    for (const auto& t : *doc.difference_set) diffs.push_back(group_index(g, t));
    return difference_set_relation(g, diffs);
  }
  BinaryRelation rel(g.carrier());
  for (const auto& [a, b] : *doc.pairs) rel.set(group_index(g, a), group_index(g, b));
  return rel;
}

BinaryRelation build_event_relation(const EventRelationDoc& doc, const EventAlgebra& algebra) {
  if (doc.atoms != algebra.atoms()) throw InputError("relation file atom count differs from the algebra");
  if (doc.measure) {
    std::vector<Rational> w;
    for (const auto& s : *doc.measure) w.push_back(parse_rational(s));
    return measure_relation(algebra, w);
  }
  BinaryRelation rel(algebra.carrier());
  for (const auto& [a, b] : *doc.pairs) rel.set(algebra.from_atoms(a), algebra.from_atoms(b));
  return rel;
}

VerdictSet build_verdicts(const VerdictsDoc& doc) {
  std::vector<PointVerdict> pairs;
  for (const auto& e : doc.pairs) pairs.push_back({e.lhs, e.rhs, parse_pair_verdict(e.verdict)});
  return VerdictSet(doc.dimension, std::move(pairs));
}

ProbeSetup build_probes(const ProbesDoc& doc, const std::optional<BinaryRelation>& override_relation) {
  ProbeSetup s;
  if (doc.structure == "box") {
    s.box.emplace(doc.lo, doc.hi);
    auto point = [](const Json& j) { return j.get<BoxPoint>(); };
    for (const auto& p : doc.probes) {
      BoxProbe probe;
      probe.name = p.name;
      probe.direction = p.direction == "increasing" ? Direction::increasing : Direction::decreasing;
      for (const auto& w : p.window) probe.window.push_back(point(w));
      probe.limit = point(p.limit);
      probe.exhaustive = p.exhaustive;
      probe.against = point(p.against);
      s.box_probes.push_back(std::move(probe));
    }
    if (override_relation) throw InputError("a relation file can only replace the relation of an events structure");
    if (doc.utility) {
      std::vector<Rational> w;
      for (const auto& x : *doc.utility) w.push_back(parse_rational(x));
      s.box_oracle = utility_oracle(std::move(w));
    } else if (doc.verdicts) {
      s.box_table = std::make_shared<OracleTable<BoxPoint>>();
      for (const auto& e : *doc.verdicts) s.box_table->set(point(e.lhs), point(e.rhs), parse_pair_verdict(e.verdict));
      s.box_oracle = [t = s.box_table](const BoxPoint& a, const BoxPoint& b) { return t->weakly_above(a, b); };
    } else {
      throw InputError("the probe file has no relation");
    }
    return s;
  }

  s.algebra.emplace(doc.atoms);
  const auto& alg = *s.algebra;
  auto event = [&](const Json& j) { return alg.from_atoms(j.get<AtomList>()); };
  for (const auto& p : doc.probes) {
    EventProbe probe;
    probe.name = p.name;
    probe.direction = p.direction == "increasing" ? Direction::increasing : Direction::decreasing;
    for (const auto& w : p.window) probe.window.push_back(event(w));
    probe.limit = event(p.limit);
    probe.exhaustive = p.exhaustive;
    probe.against = event(p.against);
    s.event_probes.push_back(std::move(probe));
  }
  for (const auto& p : doc.c4) {
    C4Probe probe;
    probe.name = p.name;
    for (const auto& w : p.window) probe.window.push_back(alg.from_atoms(w));
    probe.exhaustive = p.exhaustive;
    probe.f = alg.from_atoms(p.f);
    probe.g = alg.from_atoms(p.g);
    for (const auto& a : p.alterations) probe.alterations[a.index].emplace_back(alg.from_atoms(a.f), alg.from_atoms(a.g));
    s.c4_probes.push_back(std::move(probe));
  }
  if (override_relation) {
    s.event_oracle = relation_oracle(*override_relation);
  } else if (doc.measure) {
    std::vector<Rational> w;
    for (const auto& x : *doc.measure) w.push_back(parse_rational(x));
    s.event_oracle = measure_oracle(std::move(w));
  } else if (doc.verdicts) {
    s.event_table = std::make_shared<OracleTable<Event>>();
    for (const auto& e : *doc.verdicts) s.event_table->set(event(e.lhs), event(e.rhs), parse_pair_verdict(e.verdict));
    s.event_oracle = [t = s.event_table](const Event& a, const Event& b) { return t->weakly_above(a, b); };
  } else {
    throw InputError("the probe file has no relation");
  }
  return s;
}

}  // namespace ordkit::cli
