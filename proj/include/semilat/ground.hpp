#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semilat/errors.hpp"

namespace semilat {

// Subsets of the ground set are bitmasks; element i <-> bit i.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

class GroundSet;

/// A subset of a fixed ground set, as a validated bitmask.
///
/// Carries the ground size so cross-ground mixing is caught at the
/// boundary. Immutable value type.
class Subset {
 public:
  Subset(Mask mask, int ground_size) : mask_(mask), ground_size_(ground_size) {
    if (ground_size < 1 || ground_size > 64)
      throw BadArguments("subset: ground size must be in [1, 64]");
    if (ground_size < 64 && (mask >> ground_size) != 0)
      throw BadArguments("subset: mask has bits outside the ground set");
  }

  static Subset empty_of(int ground_size) { return Subset(0, ground_size); }
  static Subset full_of(int ground_size) {
    return Subset(ground_size == 64 ? ~Mask{0} : (Mask{1} << ground_size) - 1,
                  ground_size);
  }

  Mask mask() const { return mask_; }
  int ground_size() const { return ground_size_; }
  int count() const { return popcount(mask_); }  // |A|
  bool empty() const { return mask_ == 0; }
  bool contains(int element) const { return (mask_ >> element) & 1; }

  bool subset_of(const Subset& o) const {
    check_same_ground(o);
    return (mask_ & ~o.mask_) == 0;
  }
  bool intersects(const Subset& o) const {
    check_same_ground(o);
    return (mask_ & o.mask_) != 0;
  }

  Subset operator|(const Subset& o) const {
    check_same_ground(o);
    return Subset(mask_ | o.mask_, ground_size_);
  }
  Subset operator&(const Subset& o) const {
    check_same_ground(o);
    return Subset(mask_ & o.mask_, ground_size_);
  }
  // Set difference A \ B.
  Subset difference(const Subset& o) const {
    check_same_ground(o);
    return Subset(mask_ & ~o.mask_, ground_size_);
  }
  Subset complement() const {
    return Subset(full_of(ground_size_).mask() & ~mask_, ground_size_);
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ground_size_ == b.ground_size_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

 private:
  Mask mask_;
  int ground_size_;

  void check_same_ground(const Subset& o) const {
    if (ground_size_ != o.ground_size_)
      throw BadArguments("subset: operands come from different ground sets");
  }
};

// Canonical member order: by cardinality, then by mask value.
inline bool family_order_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.mask() < b.mask();
}

/// The finite ground set M: a size plus optional distinct element labels.
///
/// Dense (full 2^n table) operations require size <= kDenseLimit; larger
/// grounds are allowed for sparse use up to the 64-bit mask width.
class GroundSet {
 public:
  static constexpr int kDenseLimit = 24;

  explicit GroundSet(int size) : size_(size) {
    if (size < 1 || size > 64)
      throw InvalidGround("ground set size must be in [1, 64]");
  }

  explicit GroundSet(std::vector<std::string> labels)
      : size_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidGround("ground set needs at least one label");
    if (labels_.size() > 64) throw InvalidGround("ground set size must be in [1, 64]");
    for (int i = 0; i < size_; ++i) {
      if (labels_[i].empty()) throw InvalidGround("empty element label");
      if (!label_index_.emplace(labels_[i], i).second)
        throw InvalidGround("duplicate element label '" + labels_[i] + "'");
    }
  }

  int size() const { return size_; }
  bool labeled() const { return !labels_.empty(); }
  bool dense_capable() const { return size_ <= kDenseLimit; }

  const std::string& label(int i) const { return labels_.at(i); }
  // -1 when unknown (or when the ground is unlabeled).
  int index_of(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    return it == label_index_.end() ? -1 : it->second;
  }

  Mask full_mask() const {
    return size_ == 64 ? ~Mask{0} : (Mask{1} << size_) - 1;
  }

  Subset subset(Mask m) const { return Subset(m, size_); }
  Subset empty_set() const { return Subset(0, size_); }
  Subset full_set() const { return Subset(full_mask(), size_); }

 private:
  int size_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_index_;
};

inline GroundSet make_ground(std::vector<std::string> labels) {
  return GroundSet(std::move(labels));
}

/// True iff the collection contains the empty set and is closed under
/// pairwise union. Does not require distinct entries.
inline bool is_semilattice(const GroundSet& ground, std::span<const Subset> family) {
  std::unordered_set<Mask> present;
  present.reserve(family.size() * 2);
  bool has_empty = false;
  for (const Subset& s : family) {
    if (s.ground_size() != ground.size()) return false;
    present.insert(s.mask());
    has_empty |= s.empty();
  }
  if (!has_empty) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!present.count(family[i].mask() | family[j].mask())) return false;
  return true;
}

/// A union-closed family of subsets containing the empty set, with members
/// stored in canonical (cardinality, mask) order. Immutable.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<Subset> members)
      : ground_(std::move(ground)), members_(std::move(members)) {
    for (const Subset& s : members_)
      if (s.ground_size() != ground_.size())
        throw BadArguments("family: member over a different ground set");
    std::sort(members_.begin(), members_.end(), family_order_less);
    for (std::size_t i = 0; i + 1 < members_.size(); ++i)
      if (members_[i] == members_[i + 1])
        throw BadArguments("family: duplicate member");
    if (members_.empty() || !members_.front().empty())
      throw BadArguments("family: the empty set must be a member");
    index_.reserve(members_.size() * 2);
    for (std::size_t i = 0; i < members_.size(); ++i)
      index_.emplace(members_[i].mask(), static_cast<int>(i));
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j)
        if (!index_.count(members_[i].mask() | members_[j].mask()))
          throw BadArguments("family: not closed under union");
  }

  const GroundSet& ground() const { return ground_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Subset& member(int i) const { return members_[static_cast<std::size_t>(i)]; }
  std::span<const Subset> members() const { return members_; }

  bool contains(Mask m) const { return index_.count(m) != 0; }
  bool contains(const Subset& s) const {
    return s.ground_size() == ground_.size() && contains(s.mask());
  }
  // Position in canonical order, or -1.
  int index_of(Mask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  // Union of all members (the family's largest element).
  Subset top() const {
    Mask u = 0;
    for (const Subset& s : members_) u |= s.mask();
    return ground_.subset(u);
  }

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
  std::unordered_map<Mask, int> index_;
};

/// Smallest union-closed family containing the seeds and the empty set.
inline SetFamily union_closure(const GroundSet& ground, std::span<const Subset> seeds) {
  for (const Subset& s : seeds)
    if (s.ground_size() != ground.size())
      throw BadArguments("closure: seed over a different ground set");

  std::vector<Mask> accepted{0};
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> pending;
  pending.reserve(seeds.size());
  for (const Subset& s : seeds) pending.push_back(s.mask());

  while (!pending.empty()) {
    Mask m = pending.back();
    pending.pop_back();
    if (!seen.insert(m).second) continue;
    for (std::size_t i = 0, n = accepted.size(); i < n; ++i) {
      Mask u = accepted[i] | m;
      if (!seen.count(u)) pending.push_back(u);
    }
    accepted.push_back(m);
  }

  std::vector<Subset> members;
  members.reserve(accepted.size());
  for (Mask m : accepted) members.push_back(ground.subset(m));
  return SetFamily(ground, std::move(members));
}

}  // namespace semilat
