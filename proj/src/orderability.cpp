#include "ordkit/orderability.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "ordkit/error.hpp"
#include "ordkit/parallel.hpp"

namespace ordkit {

namespace {

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": carrier has " + std::to_string(n) + " points; cap is " +
                      std::to_string(cap));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// k-th permutation of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_permutation(std::size_t n, std::uint64_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const auto f = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

// Bit for matrix entry (i, j) in the row-major index.
inline std::uint64_t entry_bit(std::size_t n, std::size_t i, std::size_t j) {
  return std::uint64_t{1} << (n * n - 1 - (i * n + j));
}

bool complete_transitive_nontrivial(std::size_t n, std::uint64_t m) {
  auto at = [&](std::size_t i, std::size_t j) { return (m & entry_bit(n, i, j)) != 0; };
  bool strict = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!at(i, j) && !at(j, i)) return false;
      if (at(i, j) && !at(j, i)) strict = true;
    }
  if (!strict) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!at(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k)) return false;
    }
  return true;
}

const std::vector<std::uint64_t>& weak_order_candidates(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> list;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t m = 0; m < total; ++m)
    if (complete_transitive_nontrivial(n, m)) list.push_back(m);
  return cache.emplace(n, std::move(list)).first->second;
}

}  // namespace

CriterionReport eilenberg_criterion(const FiniteTopology& top, std::size_t cap) {
  CriterionReport report;
  const auto comps = components(top);
  report.component_count = comps.count();
  for (std::size_t c = 0; c < comps.count(); ++c) {
    ComponentVerdict v;
    v.component = c;
    v.size = comps.block(c).count();
    if (v.size <= 1) {
      v.exempt = true;
    } else {
      const auto sq = punctured_square(subspace(top, comps.block(c)), cap);
      v.punctured_disconnected = !is_connected(sq);
      report.satisfied = report.satisfied && *v.punctured_disconnected;
    }
    report.components.push_back(v);
  }
  return report;
}

OrderWitness make_witness(BinaryRelation rel, OrderKind kind, const FiniteTopology& top,
                          std::optional<Partition> equivalence) {
  OrderWitness w{std::move(rel), kind, {}, {}, std::move(equivalence)};
  w.properties = check_properties(w.relation);
  w.continuity = is_continuous(w.relation, top);
  return w;
}

bool OrderWitness::certifies(const FiniteTopology& top) const {
  if (!same_carrier(relation.carrier(), top.carrier())) return false;
  const auto props = check_properties(relation);
  if (!is_continuous(relation, top)) return false;
  if (kind == OrderKind::order)
    return props.all({Property::anti_symmetric, Property::complete, Property::transitive});
  if (!props.all({Property::non_trivial, Property::complete, Property::transitive})) return false;
  if (equivalence && !(symmetric_part(relation) == equivalence_relation(relation.carrier(), *equivalence)))
    return false;
  return true;
}

BinaryRelation linear_order(CarrierPtr carrier, std::span<const std::size_t> ranking) {
  const std::size_t n = carrier->size();
  if (ranking.size() != n) throw InputError("ranking must list every element once");
  BinaryRelation rel(std::move(carrier));
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (ranking[a] >= n || seen[ranking[a]]) throw InputError("ranking must list every element once");
    seen[ranking[a]] = true;
    for (std::size_t b = a; b < n; ++b) rel.set(ranking[a], ranking[b]);
  }
  return rel;
}

std::optional<OrderWitness> find_order(const FiniteTopology& top, std::size_t cap) {
  const std::size_t n = top.size();
  require_cap(n, std::min<std::size_t>(cap, 12), "find_order");
  const auto carrier = top.carrier();
  const auto hit = find_first_index(
      factorial(n),
      [&](std::uint64_t k) {
        const auto perm = unrank_permutation(n, k);
        return is_continuous(linear_order(carrier, perm), top).continuous;
      },
      64);
  if (!hit) return std::nullopt;
  return make_witness(linear_order(carrier, unrank_permutation(n, *hit)), OrderKind::order, top);
}

BinaryRelation glue_component_orders(const FiniteTopology& top, std::span<const OrderWitness> orders,
                                     std::span<const std::size_t> ranking) {
  const auto comps = components(top);
  const std::size_t k = comps.count();
  if (ranking.size() != k) throw InputError("ranking must list every component exactly once");
  std::vector<bool> seen(k, false);
  for (auto c : ranking) {
    if (c >= k || seen[c]) throw InputError("ranking must list every component exactly once");
    seen[c] = true;
  }

  // Orders are given either for every component or only for the
  // non-singleton ones, in component order.
  std::vector<std::size_t> needs;
  for (std::size_t c = 0; c < k; ++c)
    if (comps.block(c).count() > 1) needs.push_back(c);
  std::vector<const OrderWitness*> per(k, nullptr);
  if (orders.size() == k) {
    for (std::size_t c = 0; c < k; ++c) per[c] = &orders[c];
  } else if (orders.size() == needs.size()) {
    for (std::size_t i = 0; i < needs.size(); ++i) per[needs[i]] = &orders[i];
  } else {
    throw InputError("expected " + std::to_string(k) + " component orders (or " + std::to_string(needs.size()) +
                     " for the non-singleton components), got " + std::to_string(orders.size()));
  }

  const auto& carrier = *top.carrier();
  BinaryRelation out(top.carrier());
  for (std::size_t c = 0; c < k; ++c) {
    const auto& block = comps.block(c);
    if (!per[c]) {
      for (auto x : members(block, top.size())) out.set(x, x);
      continue;
    }
    const auto sub = subspace(top, block);
    const auto& w = *per[c];
    if (w.kind != OrderKind::order || !w.certifies(sub))
      throw InputError("order for component " + std::to_string(c) + " " + format_set(carrier, block) +
                       " fails its certificate");
    const auto& sc = *w.relation.carrier();
    for (std::size_t i = 0; i < sc.size(); ++i)
      for (std::size_t j = 0; j < sc.size(); ++j)
        if (w.relation.holds(i, j)) out.set(carrier.index_of(sc.label(i)), carrier.index_of(sc.label(j)));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (auto x : members(comps.block(ranking[a]), top.size()))
        for (auto y : members(comps.block(ranking[b]), top.size())) out.set(x, y);
  return out;
}

InducedQuotient induced_quotient_relation(const BinaryRelation& rel) {
  auto eq = symmetric_part(rel);
  Partition classes = Partition::discrete(0);
  try {
    classes = classes_of(eq);
  } catch (const InputError& e) {
    throw InputError(std::string("symmetric part is not an equivalence: ") + e.what());
  }
  BinaryRelation q(class_carrier(*rel.carrier(), classes));
  const std::size_t n = rel.size();
  for (std::size_t a = 0; a < classes.block_count(); ++a)
    for (std::size_t b = 0; b < classes.block_count(); ++b) {
      bool all = true;
      for (auto x : members(classes.block(a), n))
        for (auto y : members(classes.block(b), n)) all = all && rel.holds(x, y);
      q.set(a, b, all);
    }
  return {std::move(eq), std::move(classes), std::move(q)};
}

BinaryRelation lift_quotient_relation(const FiniteTopology& top, const Partition& eq, const BinaryRelation& qrel) {
  if (eq.size() != top.size()) throw InputError("equivalence size does not match topology");
  if (qrel.size() != eq.block_count() || !(*qrel.carrier() == *class_carrier(*top.carrier(), eq)))
    throw InputError("quotient relation is not defined on the classes of the equivalence");
  BinaryRelation out(top.carrier());
  for (std::size_t x = 0; x < top.size(); ++x)
    for (std::size_t y = 0; y < top.size(); ++y) out.set(x, y, qrel.holds(eq.block_of(x), eq.block_of(y)));
  return out;
}

std::optional<OrderWitness> find_weak_order(const FiniteTopology& top, std::size_t cap) {
  require_cap(top.size(), std::min<std::size_t>(cap, 10), "find_weak_order");
  for (const auto& p : all_partitions(top.size())) {
    if (p.block_count() < 2) continue;
    const auto q = quotient(top, p);
    const auto order = find_order(q.space, cap);
    if (!order) continue;
    auto lifted = lift_quotient_relation(top, p, order->relation);
    return make_witness(std::move(lifted), OrderKind::weak_order, top, p);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> next_weak_order_candidate(std::size_t n, std::uint64_t from) {
  if (n * n > 16) throw CapExceeded("weak order candidates need n*n <= 16");
  const auto& list = weak_order_candidates(n);
  auto it = std::lower_bound(list.begin(), list.end(), from);
  if (it == list.end()) return std::nullopt;
  return *it;
}

std::optional<OrderWitness> brute_force_weak_order(const FiniteTopology& top, std::size_t cap) {
  const std::size_t n = top.size();
  require_cap(n, std::min(cap, kBruteForceCap), "brute_force_weak_order");
  const auto& list = weak_order_candidates(n);
  const auto carrier = top.carrier();
  const auto hit = find_first_index(
      list.size(),
      [&](std::uint64_t i) { return is_continuous(BinaryRelation::from_index(carrier, list[i]), top).continuous; },
      16);
  if (!hit) return std::nullopt;
  auto rel = BinaryRelation::from_index(carrier, list[*hit]);
  auto classes = classes_of(symmetric_part(rel));
  return make_witness(std::move(rel), OrderKind::weak_order, top, std::move(classes));
}

}  // namespace ordkit
