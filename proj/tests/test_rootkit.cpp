#include "gallerion/root_datum.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace gallerion;

namespace {

// Independent positive-root generation: close the simple roots under root
// addition, deciding "beta + alpha_i is a root" purely from the Cartan
// integers and the part of the string already known (height recursion).
std::set<std::vector<int>> string_closure_roots(const std::vector<std::vector<int>>& cartan) {
  int n = (int)cartan.size();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        // p = how far the string extends downward from beta.
        int p = 0;
        std::vector<int> down = beta;
        for (;;) {
          down[i] -= 1;
          bool neg = std::all_of(down.begin(), down.end(), [](int c) { return c <= 0; });
          bool is_simple_neg = false;
          if (neg) break;  // strings never cross zero except at the simple root itself
          if (roots.count(down))
            ++p;
          else
            break;
          (void)is_simple_neg;
        }
        long long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += (long long)cartan[i][j] * beta[j];
        int q = p - (int)pairing;  // string length upward
        if (q > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

size_t known_count(char series, int rank) {
  switch (series) {
    case 'A':
      return (size_t)rank * (rank + 1) / 2;
    case 'B':
    case 'C':
      return (size_t)rank * rank;
    case 'D':
      return (size_t)rank * (rank - 1);
    case 'E':
      return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return 0;
}

// Bruhat oracle: products of subwords of a fixed reduced word of v give
// exactly the lower interval [e, v].
bool bruhat_oracle(const RootDatum& d, const WeylElement& u, const WeylElement& v) {
  size_t n = v.word.size();
  for (size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<uint8_t> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(v.word[i]);
    if (d.from_word(sub) == u) return true;
  }
  return false;
}

std::vector<WeylElement> full_group(const RootDatum& d) {
  std::vector<WeylElement> all{d.identity()};
  std::set<IntVec> seen{d.identity().image};
  for (size_t at = 0; at < all.size(); ++at) {
    for (int i = 1; i <= d.rank(); ++i) {
      WeylElement w = d.multiply(all[at], d.simple_reflection(i));
      if (seen.insert(w.image).second) all.push_back(w);
    }
  }
  return all;
}

}  // namespace

TEST_CASE("positive roots match the string-closure oracle") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"}) {
    RootDatum d = RootDatum::build(name);
    auto oracle = string_closure_roots(d.cartan());
    CHECK(d.num_positive_roots() == known_count(d.series(), d.rank()));
    CHECK(oracle.size() == d.num_positive_roots());
    for (const auto& r : d.positive_roots()) CHECK(oracle.count(r) == 1);
  }
}

TEST_CASE("cartan matrix invariants") {
  for (const char* name : {"A2", "B3", "C2", "D4", "E6", "F4", "G2"}) {
    RootDatum d = RootDatum::build(name);
    const auto& c = d.cartan();
    for (int i = 0; i < d.rank(); ++i) {
      CHECK(c[i][i] == 2);
      for (int j = 0; j < d.rank(); ++j)
        if (i != j) CHECK(c[i][j] <= 0);
    }
    // <alpha_i^vee, alpha_j> read through the pairing.
    for (int i = 0; i < d.rank(); ++i) {
      Coweight coroot = d.simple_coroot(i + 1);
      for (int j = 0; j < d.rank(); ++j) CHECK(d.pairing(coroot, j) == c[i][j]);
    }
  }
}

TEST_CASE("unknown Cartan type errors") {
  CHECK_THROWS_AS(RootDatum::build('G', 3), UnknownCartanType);
  CHECK_THROWS_AS(RootDatum::build('F', 5), UnknownCartanType);
  CHECK_THROWS_AS(RootDatum::build('X', 2), UnknownCartanType);
  CHECK_THROWS_AS(RootDatum::build("A"), UnknownCartanType);
  CHECK_THROWS_AS(RootDatum::build("A2x"), UnknownCartanType);
}

TEST_CASE("A1 basics") {
  RootDatum d = RootDatum::build("A1");
  CHECK(d.num_positive_roots() == 1);
  CHECK(d.cartan() == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("A2 positive roots and highest root") {
  RootDatum d = RootDatum::build("A2");
  CHECK(d.num_positive_roots() == 3);
  std::set<std::vector<int>> roots(d.positive_roots().begin(), d.positive_roots().end());
  CHECK(roots == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(d.positive_roots()[d.highest_root_index()] == std::vector<int>{1, 1});
}

TEST_CASE("highest root dominates every positive root") {
  for (const char* name : {"A2", "B3", "C3", "G2", "F4", "D4"}) {
    RootDatum d = RootDatum::build(name);
    const auto& theta = d.positive_roots()[d.highest_root_index()];
    for (const auto& beta : d.positive_roots())
      for (int j = 0; j < d.rank(); ++j) CHECK(theta[j] >= beta[j]);
  }
}

TEST_CASE("pairing axioms") {
  RootDatum d = RootDatum::build("A2");
  RatVec zero(2, Rat(0));
  for (size_t b = 0; b < 3; ++b) CHECK(d.pairing(zero, b) == 0);
  // <omega_i^vee, alpha_j> = delta_ij.
  for (int i = 1; i <= 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(d.pairing(d.fundamental_coweight(i), j) == (i - 1 == j ? 1 : 0));
  // <theta^vee, alpha_1> = 1: theta^vee = alpha_1^vee + alpha_2^vee.
  CHECK(d.pairing(d.highest_coroot(), 0) == 1);

  RootDatum a1 = RootDatum::build("A1");
  CHECK(a1.pairing(a1.simple_coroot(1), 0) == 2);
}

TEST_CASE("weyl action basics") {
  RootDatum a1 = RootDatum::build("A1");
  Coweight coroot = a1.simple_coroot(1);
  CHECK(a1.weyl_act(a1.identity(), coroot) == coroot);
  Coweight neg = coroot;
  neg.coords[0] = -neg.coords[0];
  CHECK(a1.weyl_act(a1.simple_reflection(1), coroot) == neg);

  RootDatum d = RootDatum::build("A2");
  WeylElement s1s2 = d.from_word({1, 2});
  Coweight image = d.weyl_act(s1s2, d.highest_coroot());
  CHECK(d.pairing(image, d.highest_root_index()) == -1);
}

TEST_CASE("word and canonical form agree") {
  for (const char* name : {"A2", "B3", "C2", "G2"}) {
    RootDatum d = RootDatum::build(name);
    for (const auto& w : full_group(d)) {
      CHECK(d.from_word(w.word) == w);
      // Length equals the number of positive roots sent negative.
      size_t inversions = 0;
      for (size_t b = 0; b < d.num_positive_roots(); ++b) {
        auto r = d.act_on_root(w, d.positive_roots()[b]);
        bool neg = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
        if (neg) ++inversions;
      }
      CHECK(inversions == w.length());
    }
  }
}

TEST_CASE("longest element") {
  RootDatum d = RootDatum::build("A2");
  WeylElement w0 = d.longest_element();
  CHECK(w0.word == std::vector<uint8_t>{1, 2, 1});
  CHECK(d.multiply(w0, w0).is_identity());
  RootDatum g2 = RootDatum::build("G2");
  CHECK(g2.longest_element().length() == 6);
}

TEST_CASE("bruhat order agrees with the subword oracle") {
  for (const char* name : {"A2", "C2", "G2"}) {
    RootDatum d = RootDatum::build(name);
    auto all = full_group(d);
    for (const auto& u : all)
      for (const auto& v : all) CHECK(d.bruhat_leq(u, v) == bruhat_oracle(d, u, v));
  }
}

TEST_CASE("bruhat examples") {
  RootDatum d = RootDatum::build("A2");
  CHECK(d.bruhat_leq(d.identity(), d.longest_element()));
  CHECK_FALSE(d.bruhat_leq(d.simple_reflection(1), d.simple_reflection(2)));
  CHECK_FALSE(d.bruhat_leq(d.simple_reflection(2), d.simple_reflection(1)));
  CHECK(d.bruhat_leq(d.simple_reflection(1), d.from_word({2, 1})));
}

TEST_CASE("coset minimal representatives") {
  RootDatum d = RootDatum::build("A2");
  CHECK(d.coset_min_rep(d.simple_reflection(1), {1}).is_identity());
  CHECK(d.coset_min_rep(d.longest_element(), {}) == d.longest_element());
  // s1s2s1 * <s2>: the coset is {s1s2s1, s2s1}; the oracle scan picks s2s1.
  WeylElement w = d.from_word({1, 2, 1});
  WeylElement expected;
  size_t best = SIZE_MAX;
  for (const auto& v : std::vector<std::vector<uint8_t>>{{}, {2}}) {
    WeylElement candidate = d.multiply(w, d.from_word(v));
    if (candidate.length() < best) {
      best = candidate.length();
      expected = candidate;
    }
  }
  CHECK(d.coset_min_rep(w, {2}) == expected);
  CHECK(d.coset_min_rep(w, {2}) == d.from_word({2, 1}));
  // Idempotence and the parabolic length factorization, exhaustively.
  for (const char* name : {"A2", "B3"}) {
    RootDatum dd = RootDatum::build(name);
    std::vector<std::set<int>> parabolics;
    for (int mask = 0; mask < (1 << dd.rank()); ++mask) {
      std::set<int> s;
      for (int i = 0; i < dd.rank(); ++i)
        if (mask & (1 << i)) s.insert(i + 1);
      parabolics.push_back(s);
    }
    for (const auto& w2 : full_group(dd))
      for (const auto& stab : parabolics) {
        WeylElement m = dd.coset_min_rep(w2, stab);
        CHECK(dd.coset_min_rep(m, stab) == m);
        WeylElement part = dd.multiply(dd.inverse(m), w2);
        CHECK(m.length() + part.length() == w2.length());
      }
  }
}

TEST_CASE("dominance order") {
  RootDatum d = RootDatum::build("A2");
  Coweight theta = d.highest_coroot();
  CHECK(d.dominance_leq(theta, theta));
  CHECK(d.dominance_leq(d.zero(), theta));
  CHECK_FALSE(d.dominance_leq(theta, d.zero()));
  // Antisymmetry over a small box.
  std::vector<Coweight> box;
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b) box.push_back(Coweight{{a, b}});
  for (const auto& x : box)
    for (const auto& y : box)
      if (d.dominance_leq(x, y) && d.dominance_leq(y, x)) CHECK(x == y);
}

TEST_CASE("weyl orbits") {
  RootDatum a1 = RootDatum::build("A1");
  CHECK(a1.weyl_orbit(a1.zero()).size() == 1);
  Coweight coroot = a1.simple_coroot(1);
  auto orbit = a1.weyl_orbit(coroot);
  CHECK(orbit.size() == 2);

  RootDatum d = RootDatum::build("A2");
  CHECK(d.weyl_orbit(d.highest_coroot()).size() == 6);

  // |orbit| = |W| / |W_lambda| over a grid, rank <= 3.
  for (const char* name : {"A2", "C2", "B3"}) {
    RootDatum dd = RootDatum::build(name);
    size_t group_order = full_group(dd).size();
    IntVec coords(dd.rank(), 0);
    for (;;) {
      Coweight lambda{coords};
      size_t stab_order = 1;
      {
        // Order of the parabolic subgroup generated by the stabilizer.
        auto gens = dd.stabilizer_generators(lambda);
        std::set<IntVec> seen{dd.identity().image};
        std::vector<WeylElement> frontier{dd.identity()};
        while (!frontier.empty()) {
          std::vector<WeylElement> next;
          for (const auto& w : frontier)
            for (int i : gens) {
              WeylElement ws = dd.multiply(w, dd.simple_reflection(i));
              if (seen.insert(ws.image).second) next.push_back(ws);
            }
          frontier = std::move(next);
        }
        stab_order = seen.size();
      }
      CHECK(dd.weyl_orbit(lambda).size() == group_order / stab_order);
      int pos = 0;
      while (pos < dd.rank()) {
        if (++coords[pos] <= 2) break;
        coords[pos] = 0;
        ++pos;
      }
      if (pos == dd.rank()) break;
    }
  }
}

TEST_CASE("dominant representative") {
  RootDatum d = RootDatum::build("C2");
  for (const auto& w : full_group(d)) {
    Coweight x = d.weyl_act(w, Coweight{{2, 1}});
    CHECK(d.dominant_representative(x) == Coweight{{2, 1}});
  }
}
