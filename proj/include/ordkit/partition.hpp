#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordkit/carrier.hpp"
#include "ordkit/element_set.hpp"
#include "ordkit/relation.hpp"

namespace ordkit {

/// A set partition of {0, ..., n-1}. Blocks are numbered by first
/// appearance, so `block_of` is a restricted growth string.
class Partition {
 public:
  /// Throws InputError unless `rgs` is a restricted growth string.
  explicit Partition(std::vector<std::size_t> rgs);

  static Partition discrete(std::size_t n);
  static Partition single_block(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  const std::vector<std::size_t>& rgs() const noexcept { return block_of_; }
  const ElementSet& block(std::size_t b) const { return blocks_[b]; }
  const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }

  bool operator==(const Partition& other) const { return block_of_ == other.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<ElementSet> blocks_;
};

/// All restricted growth strings of length n in lexicographic order
/// (the first is all zeros: a single block).
std::vector<Partition> all_partitions(std::size_t n);

/// The equivalence relation whose classes are the blocks.
BinaryRelation equivalence_relation(CarrierPtr carrier, const Partition& p);

/// Classes of an equivalence relation. Throws InputError naming the failing
/// axiom (reflexive / symmetric / transitive) and its least witness.
Partition classes_of(const BinaryRelation& eq);

/// Class labels "{a,b}" for a quotient carrier.
CarrierPtr class_carrier(const Carrier& base, const Partition& p);

/// Partition of {0..n-1} given explicit blocks (each a label list).
Partition partition_from_blocks(const Carrier& carrier, const std::vector<std::vector<std::string>>& blocks);

}  // namespace ordkit
