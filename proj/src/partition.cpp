#include "ordkit/partition.hpp"

#include <functional>

#include "ordkit/error.hpp"

namespace ordkit {

Partition::Partition(std::vector<std::size_t> rgs) : block_of_(std::move(rgs)) {
  std::size_t next = 0;
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    const auto b = block_of_[i];
    if (b > next) throw InputError("not a restricted growth string at position " + std::to_string(i));
    if (b == next) {
      blocks_.emplace_back();
      ++next;
    }
    blocks_[b].set(i);
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> rgs(n);
  for (std::size_t i = 0; i < n; ++i) rgs[i] = i;
  return Partition(std::move(rgs));
}

Partition Partition::single_block(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t max_used) {
    if (pos == n) {
      out.emplace_back(rgs);
      return;
    }
    const std::size_t limit = pos == 0 ? 0 : max_used + 1;
    for (std::size_t b = 0; b <= limit; ++b) {
      rgs[pos] = b;
      rec(pos + 1, pos == 0 ? 0 : std::max(max_used, b));
    }
  };
  rec(0, 0);
  return out;
}

BinaryRelation equivalence_relation(CarrierPtr carrier, const Partition& p) {
  if (carrier->size() != p.size()) throw InputError("partition size does not match carrier");
  BinaryRelation r(std::move(carrier));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.block_of(i) == p.block_of(j)) r.set(i, j);
  return r;
}

Partition classes_of(const BinaryRelation& eq) {
  const auto& c = *eq.carrier();
  const std::size_t n = eq.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!eq.holds(x, x)) throw InputError("not an equivalence relation: reflexivity fails at " + c.label(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (eq.holds(x, y) && !eq.holds(y, x))
        throw InputError("not an equivalence relation: symmetry fails at (" + c.label(x) + "," + c.label(y) + ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (eq.holds(x, y) && eq.holds(y, z) && !eq.holds(x, z))
          throw InputError("not an equivalence relation: transitivity fails at (" + c.label(x) + "," +
                           c.label(y) + "," + c.label(z) + ")");
  std::vector<std::size_t> rgs(n);
  std::vector<std::size_t> representatives;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t b = 0;
    while (b < representatives.size() && !eq.holds(x, representatives[b])) ++b;
    if (b == representatives.size()) representatives.push_back(x);
    rgs[x] = b;
  }
  return Partition(std::move(rgs));
}

CarrierPtr class_carrier(const Carrier& base, const Partition& p) {
  std::vector<std::string> labels;
  labels.reserve(p.block_count());
  for (const auto& b : p.blocks()) labels.push_back(format_set(base, b));
  return make_carrier(std::move(labels));
}

Partition partition_from_blocks(const Carrier& carrier, const std::vector<std::vector<std::string>>& blocks) {
  const std::size_t n = carrier.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& label : blocks[b]) {
      const auto i = carrier.index_of(label);
      if (raw[i] != unset) throw InputError("element '" + label + "' appears in two blocks");
      raw[i] = b;
    }
  // Renumber by first appearance.
  std::vector<std::size_t> renumber(blocks.size(), unset);
  std::vector<std::size_t> rgs(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i] == unset) throw InputError("element '" + carrier.label(i) + "' is in no block");
    if (renumber[raw[i]] == unset) renumber[raw[i]] = next++;
    rgs[i] = renumber[raw[i]];
  }
  return Partition(std::move(rgs));
}

}  // namespace ordkit
