#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordkit/events.hpp"
#include "ordkit/group.hpp"
#include "ordkit/monotone.hpp"
#include "ordkit/relation.hpp"
#include "ordkit/representation.hpp"
#include "ordkit/topology.hpp"

namespace ordkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceVersion = 1;

using LabelPair = std::pair<std::string, std::string>;

struct RelationDoc {
  std::vector<std::string> elements;
  std::vector<LabelPair> pairs;
  bool operator==(const RelationDoc&) const = default;
};

struct TopologyDoc {
  std::vector<std::string> elements;
  /// Exactly one of the two is set.
  std::optional<std::vector<std::vector<std::string>>> opens;
  std::optional<std::map<std::string, std::vector<std::string>>> min_nbhd;
  bool operator==(const TopologyDoc&) const = default;
};

using Residues = std::vector<std::size_t>;

struct GroupRelationDoc {
  std::vector<std::size_t> moduli;
  std::optional<std::vector<std::pair<Residues, Residues>>> pairs;
  std::optional<std::vector<Residues>> difference_set;
  bool operator==(const GroupRelationDoc&) const = default;
};

using AtomList = std::vector<std::size_t>;

struct EventRelationDoc {
  std::size_t atoms = 1;
  std::optional<std::vector<std::pair<AtomList, AtomList>>> pairs;
  /// Atom weights as exact fractions; A >= B iff P(A) >= P(B).
  std::optional<std::vector<std::string>> measure;
  bool operator==(const EventRelationDoc&) const = default;
};

struct VerdictEntry {
  BoxPoint lhs;
  BoxPoint rhs;
  std::string verdict;
  bool operator==(const VerdictEntry&) const = default;
};

struct VerdictsDoc {
  std::size_t dimension = 1;
  std::vector<VerdictEntry> pairs;
  std::optional<std::string> positivity;
  bool operator==(const VerdictsDoc&) const = default;
};

/// Structure elements are kept as JSON: integer arrays for box points,
/// atom lists for events.
struct ProbeEntry {
  std::string name;
  std::string direction;
  std::vector<Json> window;
  Json limit;
  bool exhaustive = true;
  Json against;
  bool operator==(const ProbeEntry&) const = default;
};

struct AlterationEntry {
  std::size_t index = 1;
  AtomList f;
  AtomList g;
  bool operator==(const AlterationEntry&) const = default;
};

struct C4Entry {
  std::string name;
  std::vector<AtomList> window;
  bool exhaustive = true;
  AtomList f;
  AtomList g;
  std::vector<AlterationEntry> alterations;
  bool operator==(const C4Entry&) const = default;
};

struct OracleEntry {
  Json lhs;
  Json rhs;
  std::string verdict;
  bool operator==(const OracleEntry&) const = default;
};

struct ProbesDoc {
  /// "box" (lo, hi) or "events" (atoms).
  std::string structure;
  BoxPoint lo;
  BoxPoint hi;
  std::size_t atoms = 0;
  /// Relation: one of utility (box), measure (events) or explicit verdicts.
  std::optional<std::vector<std::string>> utility;
  std::optional<std::vector<std::string>> measure;
  std::optional<std::vector<OracleEntry>> verdicts;
  std::vector<ProbeEntry> probes;
  std::vector<C4Entry> c4;
  bool operator==(const ProbesDoc&) const = default;
};

using Payload = std::variant<RelationDoc, TopologyDoc, GroupRelationDoc, EventRelationDoc, VerdictsDoc, ProbesDoc>;

struct InstanceDocument {
  std::string kind;
  int version = kInstanceVersion;
  std::optional<std::string> name;
  Payload payload;
  bool operator==(const InstanceDocument&) const = default;
};

/// Throws InputError with a JSON-pointer style location on schema errors.
InstanceDocument parse_instance(const Json& j, const std::string& source = "input");
InstanceDocument parse_instance_text(const std::string& text, const std::string& source = "input");
Json emit_instance(const InstanceDocument& doc);

std::string read_file(const std::string& path);
InstanceDocument load_instance(const std::string& path);

template <class T>
const T& payload_as(const InstanceDocument& doc, const std::string& source) {
  if (const auto* p = std::get_if<T>(&doc.payload)) return *p;
  throw InputError(source + ": unexpected instance kind '" + doc.kind + "'");
}

BinaryRelation build_relation(const RelationDoc& doc);
FiniteTopology build_topology(const TopologyDoc& doc);
BinaryRelation build_group_relation(const GroupRelationDoc& doc, const FiniteAbelianGroup& g);
BinaryRelation build_event_relation(const EventRelationDoc& doc, const EventAlgebra& algebra);
VerdictSet build_verdicts(const VerdictsDoc& doc);

struct ProbeSetup {
  std::optional<IntegerBox> box;
  std::optional<EventAlgebra> algebra;
  std::vector<BoxProbe> box_probes;
  std::vector<EventProbe> event_probes;
  std::vector<C4Probe> c4_probes;
  std::shared_ptr<OracleTable<BoxPoint>> box_table;
  std::shared_ptr<OracleTable<Event>> event_table;
  RelationOracle<BoxPoint> box_oracle;
  RelationOracle<Event> event_oracle;
};

/// Builds structure, probes and relation oracle. `override_relation`
/// replaces the embedded relation for event structures.
ProbeSetup build_probes(const ProbesDoc& doc, const std::optional<BinaryRelation>& override_relation = std::nullopt);

}  // namespace ordkit::cli
