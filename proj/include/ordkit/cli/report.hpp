#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordkit/cli/instance.hpp"
#include "ordkit/continuity.hpp"
#include "ordkit/orderability.hpp"
#include "ordkit/verification.hpp"

namespace ordkit::cli {

inline constexpr const char* kToolName = "ordkit";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "ordkit-report/1";

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

Json labels_json(const Carrier& carrier, const std::vector<std::size_t>& indices);
Json set_json(const Carrier& carrier, const ElementSet& s);
/// {"elements", "pairs", "matrix"}; matrix rows are "0"/"1" strings.
Json relation_json(const BinaryRelation& rel);
Json properties_json(const BinaryRelation& rel, const PropertyReport& report);
Json continuity_json(const BinaryRelation& rel, const ContinuityResult& result);
Json topology_json(const FiniteTopology& top);
Json criterion_json(const FiniteTopology& top, const CriterionReport& report);
Json witness_json(const OrderWitness& w);
Json verification_json(const VerificationReport& report);
Json additivity_json(const BinaryRelation& rel, const AdditivityResult& result);
Json villegas_json(const EventAlgebra& algebra, const VillegasResult& result);
Json axiom_report_json(const AxiomReport& report, const std::vector<std::string>& probe_names,
                       const std::vector<std::string>& c4_names = {});
Json representation_json(const VerdictSet& vs, const RepresentationResult& result);
Json measure_json(const EventAlgebra& algebra, const MeasureResult& result);

struct RunReport {
  std::string operation;
  std::string input_digest;
  Json params = Json::object();
  std::string verdict;
  Json result = Json::object();
  std::optional<double> timing_ms;
};

Json report_json(const RunReport& r);
/// Pretty JSON with a trailing newline.
std::string render_json(const Json& j);
/// Indented key: value listing of the same document.
std::string render_text(const Json& j);

}  // namespace ordkit::cli
