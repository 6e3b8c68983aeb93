#include "ordkit/group.hpp"

#include "ordkit/error.hpp"

namespace ordkit {

FiniteAbelianGroup FiniteAbelianGroup::build(std::vector<std::size_t> moduli, std::size_t cap) {
  if (moduli.empty()) throw InputError("group needs at least one modulus");
  std::size_t total = 1;
  for (auto m : moduli) {
    if (m < 1) throw InputError("modulus must be at least 1");
    total *= m;
    if (total > cap) throw CapExceeded("group order exceeds cap " + std::to_string(cap));
  }

  FiniteAbelianGroup g;
  g.moduli_ = std::move(moduli);
  const std::size_t k = g.moduli_.size();
  std::vector<std::size_t> cur(k, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < total; ++i) {
    g.tuples_.push_back(cur);
    std::string label;
    for (std::size_t c = 0; c < k; ++c) label += (c ? "," : "") + std::to_string(cur[c]);
    labels.push_back(std::move(label));
    for (std::size_t c = k; c-- > 0;) {
      if (++cur[c] < g.moduli_[c]) break;
      cur[c] = 0;
    }
  }
  auto index_of = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < k; ++c) idx = idx * g.moduli_[c] + t[c];
    return idx;
  };
  g.add_.resize(total * total);
  g.neg_.resize(total);
  for (std::size_t x = 0; x < total; ++x) {
    std::vector<std::size_t> t(k);
    for (std::size_t c = 0; c < k; ++c) t[c] = (g.moduli_[c] - g.tuples_[x][c]) % g.moduli_[c];
    g.neg_[x] = index_of(t);
    for (std::size_t y = 0; y < total; ++y) {
      for (std::size_t c = 0; c < k; ++c) t[c] = (g.tuples_[x][c] + g.tuples_[y][c]) % g.moduli_[c];
      g.add_[x * total + y] = index_of(t);
    }
  }
  g.carrier_ = make_carrier(std::move(labels));
  return g;
}

namespace {
void check_carrier(const BinaryRelation& rel, const FiniteAbelianGroup& g) {
  if (!same_carrier(rel.carrier(), g.carrier())) throw InputError("relation carrier is not the group's element set");
}
}  // namespace

AdditivityResult is_additive(const BinaryRelation& rel, const FiniteAbelianGroup& g) {
  check_carrier(rel, g);
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel.holds(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!rel.holds(g.add(x, z), g.add(y, z))) return {false, {x, y, z}};
    }
  return {};
}

AdditivityResult is_strongly_additive(const BinaryRelation& rel, const FiniteAbelianGroup& g) {
  check_carrier(rel, g);
  const std::size_t n = g.order();
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t y1 = 0; y1 < n; ++y1) {
        if (!rel.holds(x1, y1)) continue;
        for (std::size_t y2 = 0; y2 < n; ++y2)
          if (rel.holds(x2, y2) && !rel.holds(g.add(x1, x2), g.add(y1, y2))) return {false, {x1, x2, y1, y2}};
      }
  return {};
}

BinaryRelation difference_set_relation(const FiniteAbelianGroup& g, const std::vector<std::size_t>& diffs) {
  ElementSet d;
  for (auto e : diffs) {
    if (e >= g.order()) throw InputError("difference element out of range");
    d.set(e);
  }
  BinaryRelation rel(g.carrier());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) rel.set(x, y, d.test(g.sub(x, y)));
  return rel;
}

}  // namespace ordkit
