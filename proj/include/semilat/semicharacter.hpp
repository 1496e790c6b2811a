#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"

namespace semilat {

/// Largest union of family members contained in X: the canonical support of
/// the multiplicative functional defined by X. Idempotent and monotone in X.
inline Subset canonicalize(const SetFamily& family, const Subset& defining) {
  if (defining.ground_size() != family.ground().size())
    throw BadArguments("canonicalize: subset over a different ground set");
  Mask u = 0;
  for (const Subset& member : family.members())
    if ((member.mask() & ~defining.mask()) == 0) u |= member.mask();
  return family.ground().subset(u);
}

/// A {0,1}-valued multiplicative functional on a union-closed family:
/// psi(A) = 1 iff A is contained in the defining set X. Two functionals are
/// equal as functions iff their canonical supports coincide, so equality is
/// defined on the support, not on X.
class Semicharacter {
 public:
  Semicharacter(const SetFamily& family, const Subset& defining)
      : family_(&family),
        defining_(defining),
        support_(canonicalize(family, defining)) {}

  int evaluate(const Subset& a) const {
    if (!family_->contains(a))
      throw NotInFamily("evaluate: argument is not a member of the family");
    return (a.mask() & ~defining_.mask()) == 0 ? 1 : 0;
  }

  const Subset& defining_set() const { return defining_; }
  const Subset& support() const { return support_; }
  const SetFamily& family() const { return *family_; }

  friend bool operator==(const Semicharacter& a, const Semicharacter& b) {
    return a.family_ == b.family_ && a.support_ == b.support_;
  }
  friend bool operator!=(const Semicharacter& a, const Semicharacter& b) {
    return !(a == b);
  }

 private:
  const SetFamily* family_;
  Subset defining_;
  Subset support_;
};

/// Recovers the canonical support from raw 0/1 values given in the family's
/// canonical member order. Validates that the values actually form a
/// multiplicative functional (value 1 at the empty set, v(A∪B) = v(A)·v(B))
/// and throws NotASemicharacter otherwise.
inline Subset support(const SetFamily& family, std::span<const std::uint8_t> values) {
  if (values.size() != static_cast<std::size_t>(family.size()))
    throw BadArguments("support: one value per family member required");
  for (std::uint8_t v : values)
    if (v > 1) throw NotASemicharacter("support: values must be 0 or 1");
  if (values[0] != 1)  // member 0 is the empty set in canonical order
    throw NotASemicharacter("support: value at the empty set must be 1");
  int n = family.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int k = family.index_of(family.member(i).mask() | family.member(j).mask());
      if (values[static_cast<std::size_t>(k)] != (values[i] & values[j]))
        throw NotASemicharacter("support: values are not multiplicative");
    }
  }
  Mask u = 0;
  for (int i = 0; i < n; ++i)
    if (values[static_cast<std::size_t>(i)]) u |= family.member(i).mask();
  return family.ground().subset(u);
}

/// All semicharacters of the family, one per distinct canonical support.
///
/// For a union-closed family containing the empty set the canonical supports
/// are exactly the members themselves (any union of members is a member, and
/// every member is its own canonical support), so this enumerates members.
/// Includes the constant-1 functional (support = top) and the one with empty
/// support.
inline std::vector<Semicharacter> enumerate_semicharacters(const SetFamily& family) {
  if (family.ground().size() > GroundSet::kDenseLimit &&
      family.size() > (1 << 20))
    throw TooLarge("enumerate_semicharacters: family too large");
  std::vector<Semicharacter> out;
  out.reserve(static_cast<std::size_t>(family.size()));
  for (const Subset& member : family.members()) out.emplace_back(family, member);
  return out;
}

}  // namespace semilat
