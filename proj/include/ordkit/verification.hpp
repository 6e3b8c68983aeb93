#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordkit/carrier.hpp"
#include "ordkit/group.hpp"
#include "ordkit/relation.hpp"

namespace ordkit {

enum class SampleSpace { all_relations, complete_relations };

struct Budget {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  SampleSpace space = SampleSpace::all_relations;
  std::size_t max_counterexamples = 16;

  static Budget exhaustive_budget() { return {}; }
  static Budget sampled(std::uint64_t samples, std::uint64_t seed,
                        SampleSpace space = SampleSpace::all_relations) {
    return {false, samples, seed, space, 16};
  }
};

struct Universe {
  bool exhaustive = true;
  /// Number of relations visited (2^(n*n) when exhaustive).
  std::uint64_t size = 0;
  std::optional<std::uint64_t> seed;
  SampleSpace space = SampleSpace::all_relations;

  std::string describe() const;
};

struct Counterexample {
  /// Matrix index when exhaustive, sample number otherwise.
  std::uint64_t position = 0;
  BinaryRelation relation;
  std::vector<std::size_t> witness;
};

struct VerificationReport {
  std::string claim;
  std::string statement;
  Universe universe;
  std::uint64_t checked = 0;
  /// Relations on which the claim's hypothesis held.
  std::uint64_t antecedent_held = 0;
  std::uint64_t counterexample_count = 0;
  /// The least counterexamples in enumeration order, at most the budget's cap.
  std::vector<Counterexample> counterexamples;

  bool passed() const noexcept { return counterexample_count == 0; }
};

/// Dense n x n boolean matrix (n <= 64); bit j of rows[i] is (i, j).
struct BitMatrix {
  std::size_t n = 0;
  std::array<std::uint64_t, 64> rows{};

  bool at(std::size_t i, std::size_t j) const { return (rows[i] >> j) & 1U; }
  static BitMatrix from_index(std::size_t n, std::uint64_t index);
  static BitMatrix from_relation(const BinaryRelation& rel);
  BinaryRelation to_relation(CarrierPtr carrier) const;
};

/// Per-claim verdict on one relation.
struct ClaimOutcome {
  bool antecedent = false;
  bool violated = false;
  std::vector<std::size_t> witness;
};

struct ClaimSpec {
  std::string id;
  std::string statement;
};

/// Evaluates every claim on every relation of the universe over `carrier`.
/// Exhaustive runs need n*n <= 16. Results do not depend on the worker
/// count: samples come from per-chunk generators seeded by (seed, chunk).
std::vector<VerificationReport> verify_claims(
    const CarrierPtr& carrier, const std::vector<ClaimSpec>& claims, const Budget& budget,
    const std::function<void(const BitMatrix&, std::vector<ClaimOutcome>&)>& evaluate);

/// Fast checks on bit matrices; witnesses are lexicographically least.
std::optional<std::vector<std::size_t>> reflexivity_failure(const BitMatrix& m);
std::optional<std::vector<std::size_t>> completeness_failure(const BitMatrix& m);
std::optional<std::vector<std::size_t>> transitivity_failure(const BitMatrix& m);

/// prop1, additivity-theorem-fwd, additivity-theorem-bwd, cor1.
std::vector<VerificationReport> verify_additivity_theorems(const FiniteAbelianGroup& g, const Budget& budget);

/// Re-checks a reported counterexample against its claim from scratch.
bool recheck_additivity_counterexample(const FiniteAbelianGroup& g, const std::string& claim,
                                       const Counterexample& cx);

}  // namespace ordkit
