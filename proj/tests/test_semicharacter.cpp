#include "doctest.h"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "semilat/oracle.hpp"
#include "semilat/semicharacter.hpp"
#include "test_util.hpp"

using namespace semilat;

namespace {

SetFamily powerset(const GroundSet& g) {
  std::vector<Subset> members;
  for (Mask m = 0; m < (Mask{1} << g.size()); ++m) members.push_back(g.subset(m));
  return SetFamily(g, std::move(members));
}

}  // namespace

TEST_CASE("evaluate") {
  GroundSet g(2);
  SetFamily fam = powerset(g);

  Semicharacter all(fam, g.full_set());
  for (const Subset& a : fam.members()) CHECK(all.evaluate(a) == 1);

  Semicharacter none(fam, g.empty_set());
  CHECK(none.evaluate(g.empty_set()) == 1);
  CHECK(none.evaluate(g.subset(0b01)) == 0);

  Semicharacter one(fam, g.subset(0b01));
  CHECK(one.evaluate(g.subset(0b11)) == 0);
  CHECK(one.evaluate(g.subset(0b01)) == 1);

  GroundSet g3(3);
  SetFamily sparse = union_closure(g3, std::vector<Subset>{g3.subset(0b011)});
  Semicharacter psi(sparse, g3.subset(0b011));
  CHECK_THROWS_AS(psi.evaluate(g3.subset(0b001)), NotInFamily);
}

TEST_CASE("support recovery") {
  GroundSet g(2);
  SetFamily fam = powerset(g);

  std::vector<std::uint8_t> ones(4, 1);
  CHECK(support(fam, ones).mask() == 0b11);

  std::vector<std::uint8_t> only_empty{1, 0, 0, 0};
  CHECK(support(fam, only_empty).mask() == 0);

  // Values 1 at the empty set and one block only.
  GroundSet g3(3);
  std::vector<Subset> members{g3.subset(0), g3.subset(0b011), g3.subset(0b110),
                              g3.subset(0b111)};
  SetFamily blocks(g3, members);
  std::vector<std::uint8_t> vals{1, 1, 0, 0};
  CHECK(support(blocks, vals).mask() == 0b011);

  // Non-multiplicative input is rejected: 1 on two sets, 0 on their union.
  std::vector<std::uint8_t> broken{1, 1, 1, 0};
  CHECK_THROWS_AS(support(blocks, broken), NotASemicharacter);

  std::vector<std::uint8_t> no_unit{0, 1, 0, 0};
  CHECK_THROWS_AS(support(blocks, no_unit), NotASemicharacter);
}

TEST_CASE("canonicalize") {
  GroundSet g(2);
  SetFamily fam = powerset(g);
  CHECK(canonicalize(fam, g.full_set()) == g.full_set());

  // No member inside {1} except the empty set.
  std::vector<Subset> pair{g.subset(0), g.subset(0b11)};
  SetFamily sparse(g, pair);
  CHECK(canonicalize(sparse, g.subset(0b01)).mask() == 0);

  // A union of members is its own canonical support.
  CHECK(canonicalize(sparse, g.subset(0b11)).mask() == 0b11);
}

TEST_CASE("canonicalize is idempotent and monotone") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    GroundSet g(1 + static_cast<int>(rng() % 5));
    SetFamily fam = test_util::random_family(rng, g, 4);
    Mask xm = test_util::random_mask(rng, g.size());
    Subset x = g.subset(xm);
    Subset canon = canonicalize(fam, x);
    CHECK(canonicalize(fam, canon) == canon);
    CHECK(canon.subset_of(x));

    Subset larger = g.subset(xm | test_util::random_mask(rng, g.size()));
    CHECK(canonicalize(fam, x).subset_of(canonicalize(fam, larger)));
  }
}

TEST_CASE("semicharacters are multiplicative with unit") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 30; ++trial) {
    GroundSet g(1 + static_cast<int>(rng() % 4));
    SetFamily fam = test_util::random_family(rng, g, 4);
    Subset x = g.subset(test_util::random_mask(rng, g.size()));
    Semicharacter psi(fam, x);

    CHECK(psi.evaluate(g.empty_set()) == 1);
    CHECK(psi.support().subset_of(x));
    for (const Subset& a : fam.members())
      for (const Subset& b : fam.members())
        CHECK(psi.evaluate(a | b) == psi.evaluate(a) * psi.evaluate(b));

    // The level set {psi = 1} is union-closed; its complement is an ideal.
    for (const Subset& a : fam.members()) {
      for (const Subset& b : fam.members()) {
        if (psi.evaluate(a) == 1 && psi.evaluate(b) == 1)
          CHECK(psi.evaluate(a | b) == 1);
        if (psi.evaluate(a) == 0) CHECK(psi.evaluate(a | b) == 0);
      }
    }

    // Support reconstruction agrees with canonicalize.
    std::vector<std::uint8_t> values;
    for (const Subset& a : fam.members())
      values.push_back(static_cast<std::uint8_t>(psi.evaluate(a)));
    CHECK(support(fam, values) == canonicalize(fam, x));
  }
}

TEST_CASE("enumerate_semicharacters") {
  GroundSet g2(2);
  CHECK(enumerate_semicharacters(powerset(g2)).size() == 4);

  GroundSet g1(1);
  SetFamily only_empty(g1, {g1.subset(0)});
  auto singletons = enumerate_semicharacters(only_empty);
  REQUIRE(singletons.size() == 1);
  CHECK(singletons[0].support().mask() == 0);

  std::vector<Subset> two{g2.subset(0), g2.subset(0b11)};
  SetFamily sparse(g2, two);
  auto pair = enumerate_semicharacters(sparse);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].support().mask() == 0);
  CHECK(pair[1].support().mask() == 0b11);
}

TEST_CASE("enumeration matches the definitional scan") {
  // Distinct canonical supports over all X ⊆ M must be exactly the members.
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    GroundSet g(1 + static_cast<int>(rng() % 4));
    SetFamily fam = test_util::random_family(rng, g, 4);

    std::set<Mask> scanned;
    for (Mask x = 0; x < (Mask{1} << g.size()); ++x)
      scanned.insert(canonicalize(fam, g.subset(x)).mask());

    std::set<Mask> enumerated;
    for (const Semicharacter& psi : enumerate_semicharacters(fam))
      enumerated.insert(psi.support().mask());

    CHECK(scanned == enumerated);
    CHECK(enumerated.size() == static_cast<std::size_t>(fam.size()));
  }
}
