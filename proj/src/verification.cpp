#include "ordkit/verification.hpp"

#include <random>

#include "ordkit/error.hpp"
#include "ordkit/parallel.hpp"

namespace ordkit {

namespace {

constexpr std::uint64_t kChunk = 4096;

std::uint64_t row_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

BitMatrix sample_matrix(std::size_t n, SampleSpace space, std::mt19937_64& rng) {
  BitMatrix m;
  m.n = n;
  if (space == SampleSpace::all_relations) {
    for (std::size_t i = 0; i < n; ++i) m.rows[i] = rng() & row_mask(n);
    return m;
  }
  for (std::size_t i = 0; i < n; ++i) m.rows[i] |= std::uint64_t{1} << i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // 0: i above j only, 1: j above i only, 2: both.
      const auto state = rng() % 3;
      if (state != 1) m.rows[i] |= std::uint64_t{1} << j;
      if (state != 0) m.rows[j] |= std::uint64_t{1} << i;
    }
  return m;
}

struct ChunkResult {
  std::vector<std::uint64_t> antecedent;
  std::vector<std::uint64_t> violations;
  std::vector<std::vector<std::pair<std::uint64_t, BitMatrix>>> found;
  std::vector<std::vector<std::vector<std::size_t>>> witnesses;
};

}  // namespace

std::string Universe::describe() const {
  if (exhaustive) return "exhaustive: all " + std::to_string(size) + " relations";
  std::string s = "sampled: " + std::to_string(size) + " relations uniform over ";
  s += space == SampleSpace::all_relations ? "all relations" : "complete relations";
  if (seed) s += ", seed " + std::to_string(*seed);
  return s;
}

BitMatrix BitMatrix::from_index(std::size_t n, std::uint64_t index) {
  BitMatrix m;
  m.n = n;
  const std::size_t bits = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((index >> (bits - 1 - (i * n + j))) & 1U) m.rows[i] |= std::uint64_t{1} << j;
  return m;
}

BitMatrix BitMatrix::from_relation(const BinaryRelation& rel) {
  if (rel.size() > 64) throw CapExceeded("bit matrices hold at most 64 elements");
  BitMatrix m;
  m.n = rel.size();
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (rel.holds(i, j)) m.rows[i] |= std::uint64_t{1} << j;
  return m;
}

BinaryRelation BitMatrix::to_relation(CarrierPtr carrier) const {
  BinaryRelation rel(std::move(carrier));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j)) rel.set(i, j);
  return rel;
}

std::optional<std::vector<std::size_t>> reflexivity_failure(const BitMatrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    if (!m.at(i, i)) return std::vector<std::size_t>{i};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> completeness_failure(const BitMatrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (!m.at(i, j) && !m.at(j, i)) return std::vector<std::size_t>{i, j};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> transitivity_failure(const BitMatrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      if (!m.at(i, j)) continue;
      const auto bad = m.rows[j] & ~m.rows[i];
      if (bad) return std::vector<std::size_t>{i, j, static_cast<std::size_t>(__builtin_ctzll(bad))};
    }
  return std::nullopt;
}

std::vector<VerificationReport> verify_claims(
    const CarrierPtr& carrier, const std::vector<ClaimSpec>& claims, const Budget& budget,
    const std::function<void(const BitMatrix&, std::vector<ClaimOutcome>&)>& evaluate) {
  const std::size_t n = carrier->size();
  if (n == 0 || n > 64) throw CapExceeded("verification needs between 1 and 64 elements");
  std::uint64_t total = 0;
  if (budget.exhaustive) {
    if (n * n > 16)
      throw CapExceeded("exhaustive verification needs at most 16 matrix entries; this carrier has " +
                        std::to_string(n * n));
    total = std::uint64_t{1} << (n * n);
  } else {
    if (budget.samples == 0) throw InputError("sample budget must be positive");
    total = budget.samples;
  }
  const std::size_t k = claims.size();
  const std::size_t keep = budget.max_counterexamples;

  auto chunks = map_chunks<ChunkResult>(total, kChunk, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
    ChunkResult r;
    r.antecedent.assign(k, 0);
    r.violations.assign(k, 0);
    r.found.resize(k);
    r.witnesses.resize(k);
    std::optional<std::mt19937_64> rng;
    if (!budget.exhaustive) {
      std::seed_seq seq{static_cast<std::uint32_t>(budget.seed), static_cast<std::uint32_t>(budget.seed >> 32),
                        static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
      rng.emplace(seq);
    }
    std::vector<ClaimOutcome> out(k);
    for (std::uint64_t i = begin; i < end; ++i) {
      const BitMatrix m = budget.exhaustive ? BitMatrix::from_index(n, i) : sample_matrix(n, budget.space, *rng);
      for (auto& o : out) o = ClaimOutcome{};
      evaluate(m, out);
      for (std::size_t q = 0; q < k; ++q) {
        if (!out[q].antecedent) continue;
        ++r.antecedent[q];
        if (!out[q].violated) continue;
        ++r.violations[q];
        if (r.found[q].size() < keep) {
          r.found[q].emplace_back(i, m);
          r.witnesses[q].push_back(std::move(out[q].witness));
        }
      }
    }
    return r;
  });

  std::vector<VerificationReport> reports(k);
  for (std::size_t q = 0; q < k; ++q) {
    auto& rep = reports[q];
    rep.claim = claims[q].id;
    rep.statement = claims[q].statement;
    rep.universe = Universe{budget.exhaustive, total,
                            budget.exhaustive ? std::nullopt : std::optional<std::uint64_t>(budget.seed),
                            budget.space};
    rep.checked = total;
    for (const auto& r : chunks) {
      rep.antecedent_held += r.antecedent[q];
      rep.counterexample_count += r.violations[q];
      for (std::size_t t = 0; t < r.found[q].size() && rep.counterexamples.size() < keep; ++t)
        rep.counterexamples.push_back(
            Counterexample{r.found[q][t].first, r.found[q][t].second.to_relation(carrier), r.witnesses[q][t]});
    }
  }
  return reports;
}

namespace {

std::optional<std::vector<std::size_t>> additivity_failure(const BitMatrix& m, const FiniteAbelianGroup& g) {
  const std::size_t n = m.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!m.at(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!m.at(g.add(x, z), g.add(y, z))) return std::vector<std::size_t>{x, y, z};
    }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> strong_additivity_failure(const BitMatrix& m, const FiniteAbelianGroup& g) {
  const std::size_t n = m.n;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1) {
        if (!m.at(x1, y1)) continue;
        for (std::size_t y2 = 0; y2 < n; ++y2)
          if (m.at(x2, y2) && !m.at(g.add(x1, x2), g.add(y1, y2))) return std::vector<std::size_t>{x1, x2, y1, y2};
      }
  return std::nullopt;
}

const std::vector<ClaimSpec> kAdditivityClaims = {
    {"prop1", "reflexive and strongly additive implies additive"},
    {"additivity-theorem-fwd", "additive and transitive implies strongly additive"},
    {"additivity-theorem-bwd", "additive and strongly additive implies transitive"},
    {"cor1", "reflexive and strongly additive implies transitive"},
};

}  // namespace

std::vector<VerificationReport> verify_additivity_theorems(const FiniteAbelianGroup& g, const Budget& budget) {
  return verify_claims(g.carrier(), kAdditivityClaims, budget, [&g](const BitMatrix& m, std::vector<ClaimOutcome>& out) {
    const auto refl = reflexivity_failure(m);
    const auto trans = transitivity_failure(m);
    const auto add = additivity_failure(m, g);
    const bool reflexive = !refl;
    const bool additive = !add;
    if (!reflexive && !additive) return;
    const auto strong = strong_additivity_failure(m, g);
    const bool sa = !strong;
    const bool transitive = !trans;
    out[0].antecedent = reflexive && sa;
    if (out[0].antecedent && !additive) out[0] = {true, true, *add};
    out[1].antecedent = additive && transitive;
    if (out[1].antecedent && !sa) out[1] = {true, true, *strong};
    out[2].antecedent = additive && sa;
    if (out[2].antecedent && !transitive) out[2] = {true, true, *trans};
    out[3].antecedent = reflexive && sa;
    if (out[3].antecedent && !transitive) out[3] = {true, true, *trans};
  });
}

bool recheck_additivity_counterexample(const FiniteAbelianGroup& g, const std::string& claim,
                                       const Counterexample& cx) {
  const auto& rel = cx.relation;
  const auto props = check_properties(rel);
  const bool reflexive = props[Property::reflexive].holds;
  const bool transitive = props[Property::transitive].holds;
  const auto add = is_additive(rel, g);
  const auto sa = is_strongly_additive(rel, g);
  if (claim == "prop1") return reflexive && sa.holds && !add.holds && add.witness == cx.witness;
  if (claim == "additivity-theorem-fwd") return add.holds && transitive && !sa.holds && sa.witness == cx.witness;
  if (claim == "additivity-theorem-bwd" || claim == "cor1") {
    const bool hyp = claim == "cor1" ? reflexive && sa.holds : add.holds && sa.holds;
    return hyp && !transitive && witness_violates(rel, Property::transitive, cx.witness);
  }
  throw InputError("unknown claim '" + claim + "'");
}

}  // namespace ordkit
