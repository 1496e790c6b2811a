#pragma once

// Brute-force reference implementations for differential testing. These are
// deliberately naive and share no arithmetic kernels with the fast paths:
// popcount and signs are recomputed locally, and enumeration is by direct
// filtering rather than the bit-per-pass dynamic programs.

#include <concepts>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"
#include "semilat/stone.hpp"
#include "semilat/transform.hpp"

namespace semilat {

// Loop-based popcount, independent of <bit>.
inline int oracle_popcount(Mask m) {
  int c = 0;
  while (m) {
    c += static_cast<int>(m & 1);
    m >>= 1;
  }
  return c;
}

/// Pointwise forward transform: direct loop with a subset test.
template <class Scalar>
Scalar oracle_forward(const WeightFn<Scalar>& phi, const Subset& x) {
  Scalar acc{};
  for (int i = 0; i < phi.family().size(); ++i) {
    Mask a = phi.family().member(i).mask();
    if ((a | x.mask()) == x.mask()) acc += phi.value_at(i);
  }
  return acc;
}

/// Point inversion by filtering every mask of the ground set for X ⊆ A and
/// accumulating (-1)^(|A|+|X|) f(X).
template <std::invocable<Mask> F>
auto oracle_invert(F&& f, const Subset& a) {
  using Scalar = std::remove_cvref_t<std::invoke_result_t<F, Mask>>;
  Scalar acc{};
  const Mask all = Subset::full_of(a.ground_size()).mask();
  for (Mask x = 0;; ++x) {
    if ((x | a.mask()) == a.mask()) {
      if ((oracle_popcount(a.mask()) + oracle_popcount(x)) % 2 == 0)
        acc += f(x);
      else
        acc -= f(x);
    }
    if (x == all) break;
  }
  return acc;
}

/// Base-set measure by filtering members against the defining predicate.
template <class Scalar>
Scalar oracle_base_measure(const PointMeasure<Scalar>& mu, const BaseSet& v) {
  Scalar acc{};
  for (int i = 0; i < mu.family().size(); ++i) {
    const Subset& a = mu.family().member(i);
    if (a.intersects(v.excluded())) continue;
    bool hit_all = true;
    for (const Subset& u : v.required())
      if (!a.intersects(u)) hit_all = false;
    if (hit_all) acc += mu.weight_at(i);
  }
  return acc;
}

/// Dense subset-sum transform by per-entry submask enumeration, O(3^n).
template <class Scalar>
std::vector<Scalar> oracle_dense_zeta(const GroundSet& ground,
                                      std::span<const Scalar> dense) {
  if (dense.size() != (std::size_t{1} << ground.size()))
    throw BadArguments("oracle zeta: need exactly 2^n values");
  std::vector<Scalar> out(dense.size(), Scalar{});
  for (Mask x = 0; x < dense.size(); ++x) {
    Scalar acc{};
    Mask sub = x;
    while (true) {
      acc += dense[sub];
      if (sub == 0) break;
      sub = (sub - 1) & x;
    }
    out[x] = acc;
  }
  return out;
}

/// Dense inverse by per-entry alternating submask sums, O(3^n).
template <class Scalar>
std::vector<Scalar> oracle_dense_mobius(const GroundSet& ground,
                                        std::span<const Scalar> table) {
  if (table.size() != (std::size_t{1} << ground.size()))
    throw BadArguments("oracle mobius: need exactly 2^n values");
  std::vector<Scalar> out(table.size(), Scalar{});
  for (Mask a = 0; a < table.size(); ++a) {
    Scalar acc{};
    Mask x = a;
    while (true) {
      if (oracle_popcount(a & ~x) % 2 == 0)
        acc += table[x];
      else
        acc -= table[x];
      if (x == 0) break;
      x = (x - 1) & a;
    }
    out[a] = acc;
  }
  return out;
}

/// Every union-closed family containing the empty set over a ground set of
/// size at most 4, by exhaustive filtering of all 2^(2^m) candidate
/// collections, in candidate order (deterministic).
inline std::vector<SetFamily> enumerate_union_closed_families(const GroundSet& ground) {
  if (ground.size() > 4)
    throw TooLarge("family enumeration: ground set larger than 4");
  const int subsets = 1 << ground.size();
  std::vector<SetFamily> out;
  for (std::uint32_t cand = 0; cand < (1u << subsets); ++cand) {
    if (!(cand & 1)) continue;  // the empty set is mask 0
    bool closed = true;
    for (int i = 0; i < subsets && closed; ++i) {
      if (!((cand >> i) & 1)) continue;
      for (int j = i; j < subsets && closed; ++j) {
        if (!((cand >> j) & 1)) continue;
        if (!((cand >> (i | j)) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<Subset> members;
    for (int i = 0; i < subsets; ++i)
      if ((cand >> i) & 1) members.push_back(ground.subset(static_cast<Mask>(i)));
    out.emplace_back(ground, std::move(members));
  }
  return out;
}

}  // namespace semilat
