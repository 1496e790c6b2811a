#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"

namespace semilat {

/// Weight function on a family: one scalar per member, in canonical member
/// order. Scalar is either Rational (exact mode) or double (float mode);
/// the two modes never mix inside one computation because they are distinct
/// instantiations. Signed weights are allowed; nonnegative() is a checkable
/// flag, not an invariant. The family must outlive the weight function.
template <class Scalar>
class WeightFn {
 public:
  WeightFn(const SetFamily& family, std::vector<Scalar> values)
      : family_(&family), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(family.size()))
      throw BadArguments("weights: one value per family member required");
    if constexpr (std::is_floating_point_v<Scalar>) {
      for (Scalar v : values_)
        if (!std::isfinite(v)) throw BadArguments("weights: values must be finite");
    }
  }

  const SetFamily& family() const { return *family_; }
  std::span<const Scalar> values() const { return values_; }
  const Scalar& value_at(int i) const { return values_[static_cast<std::size_t>(i)]; }

  const Scalar& value(const Subset& a) const {
    int i = family_->index_of(a.mask());
    if (i < 0 || a.ground_size() != family_->ground().size())
      throw NotInFamily("weights: no value for a non-member");
    return values_[static_cast<std::size_t>(i)];
  }

  Scalar total_mass() const {
    Scalar acc{};
    for (const Scalar& v : values_) acc += v;
    return acc;
  }

  bool nonnegative() const {
    for (const Scalar& v : values_)
      if (v < Scalar{}) return false;
    return true;
  }

 private:
  const SetFamily* family_;
  std::vector<Scalar> values_;
};

/// Dense table of transform values over all 2^n subset masks.
template <class Scalar>
class TransformTable {
 public:
  TransformTable(GroundSet ground, std::vector<Scalar> values)
      : ground_(std::move(ground)), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << ground_.size()))
      throw BadArguments("table: need exactly 2^n values");
  }

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::span<const Scalar> values() const { return values_; }
  const Scalar& at(Mask x) const { return values_[x]; }

 private:
  GroundSet ground_;
  std::vector<Scalar> values_;
};

/// Forward transform at one point: f(X) = sum of weights over members
/// contained in X. X ranges over all of 2^M, members or not.
template <class Scalar>
Scalar laplace_forward(const WeightFn<Scalar>& phi, const Subset& x) {
  if (x.ground_size() != phi.family().ground().size())
    throw BadArguments("transform: query over a different ground set");
  Scalar acc{};
  const Mask xm = x.mask();
  int i = 0;
  for (const Subset& member : phi.family().members()) {
    if ((member.mask() & ~xm) == 0) acc += phi.value_at(i);
    ++i;
  }
  return acc;
}

/// Scatters the weights into a dense 2^n array (zero off the family).
template <class Scalar>
std::vector<Scalar> dense_weights(const WeightFn<Scalar>& phi) {
  const GroundSet& g = phi.family().ground();
  if (!g.dense_capable())
    throw TooLarge("dense weights: ground set exceeds the dense limit");
  std::vector<Scalar> dense(std::size_t{1} << g.size(), Scalar{});
  for (int i = 0; i < phi.family().size(); ++i)
    dense[phi.family().member(i).mask()] = phi.value_at(i);
  return dense;
}

/// Subset-sum transform of a dense weight array, in place, one element of
/// the ground set per pass: O(n·2^n) additions. Output entry X equals the
/// pointwise forward transform at X. Summation order is fixed, so results
/// are bitwise deterministic.
template <class Scalar>
TransformTable<Scalar> zeta_fast(const GroundSet& ground, std::vector<Scalar> dense) {
  if (ground.size() > GroundSet::kDenseLimit)
    throw TooLarge("zeta: ground set exceeds the dense limit");
  const std::size_t size = std::size_t{1} << ground.size();
  if (dense.size() != size) throw BadArguments("zeta: need exactly 2^n values");
  for (int bit = 0; bit < ground.size(); ++bit) {
    const Mask step = Mask{1} << bit;
    for (Mask m = 0; m < size; ++m)
      if (m & step) dense[m] += dense[m ^ step];
  }
  return TransformTable<Scalar>(ground, std::move(dense));
}

template <class Scalar>
TransformTable<Scalar> zeta_fast(const WeightFn<Scalar>& phi) {
  return zeta_fast(phi.family().ground(), dense_weights(phi));
}

/// Batched pointwise transform; no dense table, no size limit.
template <class Scalar>
std::vector<Scalar> zeta_sparse(const WeightFn<Scalar>& phi,
                                std::span<const Subset> queries) {
  std::vector<Scalar> out;
  out.reserve(queries.size());
  for (const Subset& q : queries) out.push_back(laplace_forward(phi, q));
  return out;
}

/// Sum of (-1)^|X| over the interval Y ⊆ X ⊆ A, by direct enumeration of
/// the 2^|A\Y| intermediate sets. Equals 0 unless Y = A, where it equals
/// (-1)^|A|.
inline std::int64_t alternating_sum(const Subset& y, const Subset& a) {
  if (y.ground_size() != a.ground_size() || (y.mask() & ~a.mask()) != 0)
    throw BadArguments("alternating sum: Y must be a subset of A");
  const Mask gap = a.mask() & ~y.mask();
  std::int64_t acc = 0;
  Mask d = gap;
  while (true) {
    acc += (popcount(y.mask() | d) & 1) ? -1 : 1;
    if (d == 0) break;
    d = (d - 1) & gap;
  }
  return acc;
}

}  // namespace semilat
