#pragma once

// Deterministic random generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "semilat/ground.hpp"
#include "semilat/rational.hpp"

namespace test_util {

using semilat::GroundSet;
using semilat::Mask;
using semilat::Rational;
using semilat::SetFamily;
using semilat::Subset;

inline Mask random_mask(std::mt19937_64& rng, int ground_size) {
  Mask full = Subset::full_of(ground_size).mask();
  return rng() & full;
}

// Union closure of a handful of random seeds; small by construction.
inline SetFamily random_family(std::mt19937_64& rng, const GroundSet& ground,
                               int max_seeds) {
  std::uniform_int_distribution<int> seed_count(0, max_seeds);
  int k = seed_count(rng);
  std::vector<Subset> seeds;
  seeds.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    seeds.push_back(ground.subset(random_mask(rng, ground.size())));
  return semilat::union_closure(ground, seeds);
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 100,
                                int den_range = 8) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t count,
                                              int num_range = 100, int den_range = 8) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_rational(rng, num_range, den_range));
  return out;
}

inline std::vector<Rational> random_nonneg_rationals(std::mt19937_64& rng,
                                                     std::size_t count,
                                                     int num_range = 100,
                                                     int den_range = 8) {
  std::uniform_int_distribution<int> num(0, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Rational(num(rng), den(rng)));
  return out;
}

// Memoizing wrapper for expensive pointwise transforms.
template <class Fn, class Scalar>
class Memo {
 public:
  Memo(Fn fn, std::size_t size) : fn_(fn), values_(size), known_(size, false) {}

  Scalar operator()(Mask x) {
    if (!known_[x]) {
      values_[x] = fn_(x);
      known_[x] = true;
    }
    return values_[x];
  }

 private:
  Fn fn_;
  std::vector<Scalar> values_;
  std::vector<bool> known_;
};

template <class Scalar, class Fn>
Memo<Fn, Scalar> make_memo(Fn fn, int ground_size) {
  return Memo<Fn, Scalar>(fn, std::size_t{1} << ground_size);
}

}  // namespace test_util
