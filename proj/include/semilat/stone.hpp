#pragma once

#include <cmath>
#include <concepts>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"

namespace semilat {

/// A union-closed family viewed as a space of open-and-compact sets of the
/// finite discrete ground space (where every subset is clopen and compact).
class StoneModel {
 public:
  explicit StoneModel(const SetFamily& family) : family_(&family) {}
  const SetFamily& family() const { return *family_; }
  const GroundSet& ground() const { return family_->ground(); }

 private:
  const SetFamily* family_;
};

/// A basic open set of the topology on the family, defined by an excluded
/// set F and required-hit sets U_1..U_n:
///
///   members = { A in S : A ∩ F = ∅  and  A ∩ U_i ≠ ∅ for every i }.
///
/// n = 0 gives { A : A ∩ F = ∅ }. Empty U_i are rejected: the predicate
/// A ∩ ∅ ≠ ∅ is unsatisfiable, which almost always signals a caller error.
/// Duplicate U_i are allowed (intersection concatenates lists).
class BaseSet {
 public:
  BaseSet(Subset excluded, std::vector<Subset> required)
      : excluded_(excluded), required_(std::move(required)) {
    for (const Subset& u : required_) {
      if (u.ground_size() != excluded_.ground_size())
        throw BadArguments("base set: mixed ground sets");
      if (u.empty())
        throw DegenerateBase("base set: required-hit set must be non-empty");
    }
  }

  const Subset& excluded() const { return excluded_; }
  std::span<const Subset> required() const { return required_; }
  int arity() const { return static_cast<int>(required_.size()); }
  int ground_size() const { return excluded_.ground_size(); }

 private:
  Subset excluded_;
  std::vector<Subset> required_;
};

inline bool base_contains(const BaseSet& v, const Subset& a) {
  if (a.intersects(v.excluded())) return false;
  for (const Subset& u : v.required())
    if (!a.intersects(u)) return false;
  return true;
}

/// Members of the family inside the base set, in family order.
inline std::vector<Subset> base_members(const StoneModel& model, const BaseSet& v) {
  if (v.ground_size() != model.ground().size())
    throw BadArguments("base set: wrong ground set for this model");
  std::vector<Subset> out;
  for (const Subset& a : model.family().members())
    if (base_contains(v, a)) out.push_back(a);
  return out;
}

/// Intersection law of the base: excluded sets unite, required lists
/// concatenate. Member lists intersect accordingly.
inline BaseSet base_intersect(const BaseSet& a, const BaseSet& b) {
  std::vector<Subset> us(a.required().begin(), a.required().end());
  us.insert(us.end(), b.required().begin(), b.required().end());
  return BaseSet(a.excluded() | b.excluded(), std::move(us));
}

/// Open-set semicharacter: 1 iff A ⊆ U. U = ∅ is admitted (the functional
/// that is 1 only at the empty set), although non-empty U is the usual case.
inline int psi_open(const Subset& u, const Subset& a) {
  if (u.ground_size() != a.ground_size())
    throw BadArguments("psi: operands over different ground sets");
  return (a.mask() & ~u.mask()) == 0 ? 1 : 0;
}

/// A finitely supported measure on the (finite, discrete) family: one
/// non-negative weight per member, in canonical member order.
template <class Scalar>
class PointMeasure {
 public:
  PointMeasure(const SetFamily& family, std::vector<Scalar> weights)
      : family_(&family), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<std::size_t>(family.size()))
      throw BadArguments("measure: one weight per family member required");
    for (const Scalar& w : weights_) {
      if (w < Scalar{}) throw BadArguments("measure: weights must be non-negative");
      if constexpr (std::is_floating_point_v<Scalar>) {
        if (!std::isfinite(w)) throw BadArguments("measure: weights must be finite");
      }
    }
  }

  const SetFamily& family() const { return *family_; }
  std::span<const Scalar> weights() const { return weights_; }
  const Scalar& weight_at(int i) const { return weights_[static_cast<std::size_t>(i)]; }

  const Scalar& weight(const Subset& a) const {
    int i = family_->index_of(a.mask());
    if (i < 0 || a.ground_size() != family_->ground().size())
      throw NotInFamily("measure: no weight for a non-member");
    return weights_[static_cast<std::size_t>(i)];
  }

  Scalar total_mass() const {
    Scalar acc{};
    for (const Scalar& w : weights_) acc += w;
    return acc;
  }

 private:
  const SetFamily* family_;
  std::vector<Scalar> weights_;
};

/// Transform of the measure at U: total weight of members contained in U.
template <class Scalar>
Scalar laplace_of_measure(const PointMeasure<Scalar>& mu, const Subset& u) {
  if (u.ground_size() != mu.family().ground().size())
    throw BadArguments("transform: query over a different ground set");
  Scalar acc{};
  const Mask um = u.mask();
  for (int i = 0; i < mu.family().size(); ++i)
    if ((mu.family().member(i).mask() & ~um) == 0) acc += mu.weight_at(i);
  return acc;
}

/// f'(F) = f(M \ F): the transform read through the complement.
template <std::invocable<Mask> F>
auto f_prime(F&& f, const GroundSet& ground, const Subset& excluded) {
  if (excluded.ground_size() != ground.size())
    throw BadArguments("f': subset over a different ground set");
  return f(ground.full_mask() & ~excluded.mask());
}

/// Difference operator: (Δ_U φ)(A) = φ(A ∪ U) − φ(A).
/// Note Δ_U ∘ Δ_U = −Δ_U (the union shift is idempotent), and operators
/// with different U commute.
template <std::invocable<Mask> F>
auto delta(const Subset& u, F&& phi, const Subset& a) {
  if (u.ground_size() != a.ground_size())
    throw BadArguments("delta: operands over different ground sets");
  return phi(a.mask() | u.mask()) - phi(a.mask());
}

namespace detail {

// (Δ_{us[0]} ∘ ... ∘ Δ_{us[k-1]} f')(acc), expanded recursively.
template <class S, class F>
S delta_chain(F& f, Mask full, Mask acc, std::span<const Mask> us) {
  if (us.empty()) return f(full & ~acc);
  std::span<const Mask> rest = us.subspan(1);
  return delta_chain<S>(f, full, acc | us[0], rest) -
         delta_chain<S>(f, full, acc, rest);
}

}  // namespace detail

/// Measure of a base set recovered from the transform:
/// (−1)^n (Δ_{U_1} ∘ … ∘ Δ_{U_n} f')(F), with f'(F) = f(M \ F).
/// The U-list is deduplicated first; the expansion is insensitive to
/// duplicates anyway (Δ_U² = −Δ_U and the sign prefix absorbs the extra
/// factor), so this only trims work. n = 0 yields f(M \ F). F may meet the
/// U_i; the identity with the member-sum holds regardless. Cost: 2^n
/// f-queries, fixed order.
template <std::invocable<Mask> F>
auto invert_base_measure(F&& f, const GroundSet& ground, const BaseSet& v) {
  using Scalar = std::remove_cvref_t<std::invoke_result_t<F, Mask>>;
  if (v.ground_size() != ground.size())
    throw BadArguments("base measure: base set over a different ground set");
  std::vector<Mask> us;
  for (const Subset& u : v.required()) {
    bool dup = false;
    for (Mask seen : us) dup |= (seen == u.mask());
    if (!dup) us.push_back(u.mask());
  }
  Scalar value = detail::delta_chain<Scalar>(f, ground.full_mask(),
                                             v.excluded().mask(), us);
  if (us.size() & 1) value = -value;
  return value;
}

/// Measure of a finite union of base sets, by inclusion-exclusion over the
/// base intersection law.
template <std::invocable<Mask> F>
auto measure_finite_union(F&& f, const GroundSet& ground,
                          std::span<const BaseSet> vs) {
  using Scalar = std::remove_cvref_t<std::invoke_result_t<F, Mask>>;
  if (vs.empty()) throw BadArguments("union measure: need at least one base set");
  const std::size_t k = vs.size();
  Scalar acc{};
  for (Mask pick = 1; pick < (Mask{1} << k); ++pick) {
    bool first = true;
    BaseSet meet = vs[0];
    for (std::size_t i = 0; i < k; ++i) {
      if (!((pick >> i) & 1)) continue;
      meet = first ? vs[i] : base_intersect(meet, vs[i]);
      first = false;
    }
    Scalar term = invert_base_measure(f, ground, meet);
    if (popcount(pick) & 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace semilat
