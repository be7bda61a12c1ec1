#include "gallerion/oracle.hpp"

#include <doctest.h>

using namespace gallerion;

namespace {

RootDatumPtr datum(const char* name) {
  return std::make_shared<const RootDatum>(RootDatum::build(name));
}

long long total_mass(const WeightMultiplicity& chi) {
  long long t = 0;
  for (const auto& [w, m] : chi) t += m;
  return t;
}

}  // namespace

TEST_CASE("trivial character") {
  auto d = datum("A2");
  WeightMultiplicity expected{{d->zero(), 1}};
  CHECK(oracle::freudenthal_character(*d, d->zero()) == expected);
  CHECK(oracle::weyl_dim(*d, d->zero()) == 1);
}

TEST_CASE("rank-one strings") {
  auto d = datum("A1");
  auto chi = oracle::freudenthal_character(*d, d->simple_coroot(1));
  WeightMultiplicity expected{{Coweight{{-2}}, 1}, {Coweight{{0}}, 1}, {Coweight{{2}}, 1}};
  CHECK(chi == expected);
  CHECK(oracle::weyl_dim(*d, Coweight{{3}}) == 4);
}

TEST_CASE("adjoint A2 character") {
  auto d = datum("A2");
  Coweight theta = d->highest_coroot();
  auto chi = oracle::freudenthal_character(*d, theta);
  CHECK(total_mass(chi) == 8);
  CHECK(oracle::weyl_dim(*d, theta) == 8);
  CHECK(chi.at(d->zero()) == 2);
  for (const auto& [w, m] : chi)
    if (!(w == d->zero())) CHECK(m == 1);
}

TEST_CASE("C2 dimensions by the product formula") {
  auto d = datum("C2");
  CHECK(oracle::weyl_dim(*d, d->highest_coroot()) == 5);
  CHECK(oracle::weyl_dim(*d, Coweight{{1, 0}}) == 5);
  CHECK(oracle::weyl_dim(*d, Coweight{{0, 1}}) == 4);
  CHECK(oracle::weyl_dim(*d, Coweight{{1, 1}}) == 16);
}

TEST_CASE("G2 dimensions") {
  auto d = datum("G2");
  CHECK(oracle::weyl_dim(*d, Coweight{{1, 0}}) == 14);
  CHECK(oracle::weyl_dim(*d, Coweight{{0, 1}}) == 7);
  CHECK(oracle::weyl_dim(*d, Coweight{{2, 2}}) == 729);
}

TEST_CASE("character mass equals the product formula") {
  for (const char* name : {"A1", "A2", "C2", "G2", "B3"}) {
    auto d = datum(name);
    IntVec coords(d->rank(), 0);
    for (;;) {
      Coweight lambda{coords};
      CHECK(total_mass(oracle::freudenthal_character(*d, lambda)) ==
            oracle::weyl_dim(*d, lambda));
      int pos = 0;
      while (pos < d->rank()) {
        if (++coords[pos] <= 2) break;
        coords[pos] = 0;
        ++pos;
      }
      if (pos == d->rank()) break;
    }
  }
}

TEST_CASE("two independent character routes agree") {
  for (const char* name : {"A1", "A2", "C2", "G2"}) {
    auto d = datum(name);
    IntVec coords(d->rank(), 0);
    for (;;) {
      Coweight lambda{coords};
      CHECK(oracle::freudenthal_character(*d, lambda) ==
            oracle::alternating_character(*d, lambda));
      int pos = 0;
      while (pos < d->rank()) {
        if (++coords[pos] <= 2) break;
        coords[pos] = 0;
        ++pos;
      }
      if (pos == d->rank()) break;
    }
  }
}

TEST_CASE("dominance is required") {
  auto d = datum("A2");
  CHECK_THROWS_AS(oracle::freudenthal_character(*d, Coweight{{-1, 1}}), NotDominant);
  CHECK_THROWS_AS(oracle::weyl_dim(*d, Coweight{{0, -2}}), NotDominant);
}

TEST_CASE("exhaustive LS search") {
  auto a1 = datum("A1");
  auto t0 = GalleryType::for_weight(a1, a1->zero());
  CHECK(oracle::brute_force_ls(t0).size() == 1);

  auto t1 = GalleryType::for_weight(a1, a1->simple_coroot(1));
  auto ls1 = oracle::brute_force_ls(t1);
  REQUIRE(ls1.size() == 3);
  using Words = std::vector<std::vector<uint8_t>>;
  CHECK(ls1[0].words == Words{{}, {0}});
  CHECK(ls1[1].words == Words{{1}, {}});
  CHECK(ls1[2].words == Words{{1}, {0}});

  auto a2 = datum("A2");
  auto t2 = GalleryType::for_weight(a2, Coweight{{1, 1}});
  auto ls2 = oracle::brute_force_ls(t2);
  CHECK(ls2.size() == 8);
  int zero_weight = 0;
  for (const auto& g : ls2)
    if (g.endpoint == a2->zero()) ++zero_weight;
  CHECK(zero_weight == 2);

  CHECK_THROWS_AS(oracle::brute_force_ls(t2, 5), CapExceeded);
}
