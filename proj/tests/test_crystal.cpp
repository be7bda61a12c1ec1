#include "gallerion/crystal.hpp"

#include <doctest.h>

#include <set>

#include "gallerion/folding.hpp"
#include "gallerion/oracle.hpp"

using namespace gallerion;

namespace {

RootDatumPtr datum(const char* name) {
  return std::make_shared<const RootDatum>(RootDatum::build(name));
}

}  // namespace

TEST_CASE("single-vertex crystal at lambda = 0") {
  auto d = datum("A2");
  auto crystal = build_crystal(d, d->zero());
  CHECK(crystal.vertices.size() == 1);
  CHECK(crystal.edges.empty());
  CHECK(is_connected(crystal));
  WeightMultiplicity expected{{d->zero(), 1}};
  CHECK(character(crystal) == expected);
}

TEST_CASE("A1 string crystal") {
  auto d = datum("A1");
  auto crystal = build_crystal(d, d->simple_coroot(1));
  CHECK(crystal.vertices.size() == 3);
  CHECK(crystal.edges.size() == 2);
  CHECK(is_connected(crystal));
  auto chi = character(crystal);
  WeightMultiplicity expected{{Coweight{{-2}}, 1}, {Coweight{{0}}, 1}, {Coweight{{2}}, 1}};
  CHECK(chi == expected);
}

TEST_CASE("adjoint A2 crystal") {
  auto d = datum("A2");
  auto crystal = build_crystal(d, Coweight{{1, 1}});
  CHECK(crystal.vertices.size() == 8);
  CHECK(crystal.edges.size() == 8);
  CHECK(is_connected(crystal));
  for (const auto& v : crystal.vertices) CHECK(is_ls(v));
  CHECK(character(crystal) == oracle::freudenthal_character(*d, Coweight{{1, 1}}));
  // The highest vertex is the reference gallery and has no incoming edges.
  CHECK(crystal.vertices[crystal.highest].endpoint == Coweight{{1, 1}});
  for (const auto& e : crystal.edges) CHECK(e.to != crystal.highest);
}

TEST_CASE("edge rule and weight rule") {
  auto d = datum("C2");
  auto crystal = build_crystal(d, Coweight{{1, 0}});
  for (const auto& e : crystal.edges) {
    auto image = f_alpha(crystal.vertices[e.from], e.root);
    REQUIRE(image);
    CHECK(*image == crystal.vertices[e.to]);
    Coweight expected = crystal.vertices[e.from].endpoint;
    for (int i = 0; i < d->rank(); ++i)
      expected.coords[i] -= d->simple_coroot(e.root).coords[i];
    CHECK(crystal.vertices[e.to].endpoint == expected);
  }
  // Every defined lowering arrow from a vertex appears as an edge.
  size_t defined = 0;
  for (const auto& v : crystal.vertices)
    for (int alpha = 1; alpha <= d->rank(); ++alpha)
      if (f_alpha(v, alpha)) ++defined;
  CHECK(defined == crystal.edges.size());
}

TEST_CASE("unique source vertex") {
  for (const char* name : {"A2", "C2", "G2"}) {
    auto d = datum(name);
    auto crystal = build_crystal(d, Coweight{IntVec(d->rank(), 1)});
    std::set<size_t> has_incoming;
    for (const auto& e : crystal.edges) has_incoming.insert(e.to);
    size_t sources = 0;
    for (size_t i = 0; i < crystal.vertices.size(); ++i)
      if (!has_incoming.count(i)) ++sources;
    CHECK(sources == 1);
    CHECK_FALSE(has_incoming.count(crystal.highest));
  }
}

TEST_CASE("vertex set equals the exhaustive LS set") {
  for (const char* name : {"A1", "A2", "C2"}) {
    auto d = datum(name);
    IntVec coords(d->rank(), 1);
    auto type = GalleryType::for_weight(d, Coweight{coords});
    auto crystal = build_crystal(type);
    std::set<std::vector<std::vector<uint8_t>>> from_crystal, from_brute;
    for (const auto& v : crystal.vertices) from_crystal.insert(v.words);
    for (const auto& g : oracle::brute_force_ls(type)) from_brute.insert(g.words);
    CHECK(from_crystal == from_brute);
  }
}

TEST_CASE("characters are Weyl invariant") {
  auto d = datum("C2");
  auto chi = character(build_crystal(d, Coweight{{2, 1}}));
  for (int i = 1; i <= d->rank(); ++i) {
    WeightMultiplicity reflected;
    for (const auto& [w, m] : chi) reflected[d->weyl_act(d->simple_reflection(i), w)] = m;
    CHECK(reflected == chi);
  }
}

TEST_CASE("decomposition of the full gallery set") {
  auto a1 = datum("A1");
  auto t0 = GalleryType::for_weight(a1, a1->zero());
  WeightMultiplicity trivial{{a1->zero(), 1}};
  CHECK(decompose(t0) == trivial);

  auto t1 = GalleryType::for_weight(a1, a1->simple_coroot(1));
  WeightMultiplicity dec = decompose(t1);
  WeightMultiplicity expected{{a1->simple_coroot(1), 1}, {a1->zero(), 1}};
  CHECK(dec == expected);
  // Total character mass = 3 + 1 = the four galleries.
  long long total = 0;
  for (const auto& [mu, count] : dec) total += count * oracle::weyl_dim(*a1, mu);
  CHECK(total == 4);

  auto a2 = datum("A2");
  auto t2 = GalleryType::for_weight(a2, Coweight{{1, 1}});
  long long mass = 0;
  for (const auto& [mu, count] : decompose(t2)) mass += count * oracle::weyl_dim(*a2, mu);
  CHECK(mass == 12);
}

TEST_CASE("string property at every vertex") {
  auto d = datum("A2");
  auto crystal = build_crystal(d, Coweight{{2, 0}});
  for (const auto& v : crystal.vertices)
    for (int alpha = 1; alpha <= d->rank(); ++alpha) {
      auto [p, q] = string_lengths(v, alpha);
      CHECK(p - q == v.endpoint.coords[alpha - 1]);
    }
}

TEST_CASE("classical small modules in higher rank") {
  // Known dimensions reached through the whole pipeline.
  struct Case {
    const char* type;
    int fundamental;
    size_t dim;
  };
  for (const Case& c : {Case{"B4", 1, 8}, Case{"C3", 1, 7}, Case{"F4", 4, 52}, Case{"E6", 1, 27}}) {
    auto d = datum(c.type);
    auto type = GalleryType::for_weight(d, d->fundamental_coweight(c.fundamental));
    CHECK(is_minimal(type->reference_gallery()));
    auto crystal = build_crystal(type);
    CHECK(crystal.vertices.size() == c.dim);
    CHECK(is_connected(crystal));
    CHECK(character(crystal) ==
          oracle::freudenthal_character(*d, d->fundamental_coweight(c.fundamental)));
  }
}

TEST_CASE("DOT and JSON exports") {
  auto d = datum("A1");
  auto crystal = build_crystal(d, d->simple_coroot(1));
  std::string dot = crystal_to_dot(crystal);
  CHECK(dot.find("digraph crystal") != std::string::npos);
  CHECK(dot.find("n0") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  std::string json = crystal_to_json(crystal);
  CHECK(json.find("\"vertices\"") != std::string::npos);
  // Determinism.
  CHECK(crystal_to_dot(build_crystal(d, d->simple_coroot(1))) == dot);
}
