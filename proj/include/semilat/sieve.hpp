#pragma once

// Union counting for three sets, three ways: the classic alternating sum of
// intersection sizes, point inversion of the subset-sum transform on the
// three-element index lattice, and a direct count. All three must agree.

#include <cstdint>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"
#include "semilat/inversion.hpp"
#include "semilat/transform.hpp"

namespace semilat {

struct SieveReport {
  std::int64_t universe_size = 0;
  std::int64_t size_a = 0, size_b = 0, size_c = 0;
  std::int64_t ab = 0, ac = 0, bc = 0, abc = 0;  // intersection sizes
  std::int64_t classic = 0;        // |A|+|B|+|C| - pairs + triple
  std::int64_t uncovered = 0;      // elements in none of the sets, by inversion
  std::int64_t via_inversion = 0;  // universe - uncovered
  std::int64_t direct = 0;         // |A ∪ B ∪ C| counted outright

  bool match() const { return classic == via_inversion && via_inversion == direct; }
};

/// Computes |A ∪ B ∪ C| by inverting the subset-sum transform on the index
/// lattice {A,B,C}. For an index set S, f(S) = |∩ of the sets NOT indexed
/// by S| (f(full) = |universe|): exactly the classic sieve terms. The
/// counting weight at V is the number of universe elements lying in
/// precisely the sets indexed by the complement of V; point inversion at
/// the full index set recovers the uncovered-element count.
inline SieveReport sieve_union_count(const GroundSet& universe, const Subset& a,
                                     const Subset& b, const Subset& c) {
  if (universe.size() > 20)
    throw TooLarge("sieve: universe larger than 20 elements");
  if (a.ground_size() != universe.size() || b.ground_size() != universe.size() ||
      c.ground_size() != universe.size())
    throw BadArguments("sieve: sets over a different ground set");

  SieveReport r;
  r.universe_size = universe.size();
  r.size_a = a.count();
  r.size_b = b.count();
  r.size_c = c.count();
  r.ab = popcount(a.mask() & b.mask());
  r.ac = popcount(a.mask() & c.mask());
  r.bc = popcount(b.mask() & c.mask());
  r.abc = popcount(a.mask() & b.mask() & c.mask());
  r.classic = r.size_a + r.size_b + r.size_c - r.ab - r.ac - r.bc + r.abc;
  r.direct = popcount(a.mask() | b.mask() | c.mask());

  // Counting weights on the index lattice.
  const Mask sets[3] = {a.mask(), b.mask(), c.mask()};
  GroundSet indices(3);
  std::vector<std::int64_t> counting(8, 0);
  for (int e = 0; e < universe.size(); ++e) {
    Mask covered_by = 0;
    for (int i = 0; i < 3; ++i)
      if ((sets[i] >> e) & 1) covered_by |= Mask{1} << i;
    counting[(~covered_by & 0x7)] += 1;  // weight sits at the complement
  }
  TransformTable<std::int64_t> table = zeta_fast(indices, counting);

  // Consistency: the transform must reproduce directly counted
  // intersection sizes, f(S) = |∩_{i not in S} set_i|.
  for (Mask s = 0; s < 8; ++s) {
    Mask inter = universe.full_mask();
    for (int i = 0; i < 3; ++i)
      if (!((s >> i) & 1)) inter &= sets[i];
    if (table.at(s) != popcount(inter))
      throw Error("sieve: transform disagrees with direct intersection counts");
  }

  r.uncovered = invert_point(table, indices.full_set());
  r.via_inversion = r.universe_size - r.uncovered;
  return r;
}

}  // namespace semilat
