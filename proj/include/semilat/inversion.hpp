#pragma once

#include <concepts>
#include <type_traits>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"
#include "semilat/transform.hpp"

namespace semilat {

/// A finite query family: the sets whose total weight is being asked for.
/// Entries must be distinct; they need not be family members (non-members
/// contribute the zero-extended density).
struct FamilyMeasureQuery {
  std::vector<Subset> sets;

  explicit FamilyMeasureQuery(std::vector<Subset> s) : sets(std::move(s)) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].ground_size() != sets[0].ground_size())
        throw BadArguments("measure query: mixed ground sets");
      for (std::size_t j = i + 1; j < sets.size(); ++j)
        if (sets[i] == sets[j]) throw BadArguments("measure query: duplicate entry");
    }
  }
};

/// Recovers the weight at A from transform values:
/// (-1)^|A| * sum over X ⊆ A of (-1)^|X| f(X), in 2^|A| queries.
/// f must be total on the subsets of A.
template <std::invocable<Mask> F>
auto invert_point(F&& f, const Subset& a) {
  using Scalar = std::remove_cvref_t<std::invoke_result_t<F, Mask>>;
  const Mask am = a.mask();
  const int pa = a.count();
  Scalar acc{};
  Mask x = am;
  while (true) {
    if (((pa + popcount(x)) & 1) == 0)
      acc += f(x);
    else
      acc -= f(x);
    if (x == 0) break;
    x = (x - 1) & am;
  }
  return acc;
}

template <class Scalar>
Scalar invert_point(const TransformTable<Scalar>& table, const Subset& a) {
  if (a.ground_size() != table.n())
    throw BadArguments("invert: subset over a different ground set");
  return invert_point([&](Mask x) { return table.at(x); }, a);
}

/// Total recovered weight of a query family: the sum of point inversions.
/// Entries outside the weight function's family contribute 0 when f comes
/// from a genuine weight function (zero extension).
template <std::invocable<Mask> F>
auto invert_measure(F&& f, const FamilyMeasureQuery& query) {
  using Scalar = std::remove_cvref_t<std::invoke_result_t<F, Mask>>;
  Scalar acc{};
  for (const Subset& a : query.sets) acc += invert_point(f, a);
  return acc;
}

/// Strict variant: every query entry must be a member of the family.
template <std::invocable<Mask> F>
auto invert_measure_strict(F&& f, const SetFamily& family,
                           const FamilyMeasureQuery& query) {
  for (const Subset& a : query.sets)
    if (!family.contains(a))
      throw NotInFamily("strict measure query: entry is not a family member");
  return invert_measure(std::forward<F>(f), query);
}

/// Inverse of the dense subset-sum transform, in place, one element per
/// pass. mobius_fast(zeta_fast(v)) == v exactly in exact arithmetic.
/// Entry A of the result equals invert_point(table, A).
template <class Scalar>
std::vector<Scalar> mobius_fast(const TransformTable<Scalar>& table) {
  if (table.n() > GroundSet::kDenseLimit)
    throw TooLarge("mobius: ground set exceeds the dense limit");
  std::vector<Scalar> dense(table.values().begin(), table.values().end());
  const std::size_t size = dense.size();
  for (int bit = 0; bit < table.n(); ++bit) {
    const Mask step = Mask{1} << bit;
    for (Mask m = 0; m < size; ++m)
      if (m & step) dense[m] -= dense[m ^ step];
  }
  return dense;
}

}  // namespace semilat
