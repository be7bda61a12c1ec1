#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gallerion/errors.hpp"

namespace gallerion {

using Rat = mpq_class;
using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

inline Rat rat(long long v) { return Rat(static_cast<long>(v)); }
inline Rat rat(long long num, long long den) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}
inline RatVec to_ratvec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (long long x : v) r.push_back(rat(x));
  return r;
}

/// A coweight in fundamental-coweight coordinates: coordinate i is the
/// pairing with the simple root alpha_i.
struct Coweight {
  IntVec coords;

  bool operator==(const Coweight& o) const { return coords == o.coords; }
  bool operator<(const Coweight& o) const { return coords < o.coords; }
};

/// A character: coweight -> multiplicity, with finite support.
using WeightMultiplicity = std::map<Coweight, long long>;

/// An element of the finite Weyl group.  Canonical form is the image of a
/// fixed generic base point (scaled to integers); the reduced word is the
/// lexicographically least one and is kept as a cache.
struct WeylElement {
  IntVec image;                // scaled image of the base point
  std::vector<uint8_t> word;   // lex-least reduced word, letters 1..rank

  bool operator==(const WeylElement& o) const { return image == o.image; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return image < o.image; }
  size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }
};

/// Exact root datum of an irreducible finite type together with the ambient
/// rational space X^vee (x) Q in the fundamental-coweight basis.
class RootDatum {
 public:
  static RootDatum build(char series, int rank);
  static RootDatum build(const std::string& type);  // e.g. "A2", "G2"

  char series() const { return series_; }
  int rank() const { return rank_; }
  std::string type_name() const { return std::string(1, series_) + std::to_string(rank_); }

  /// Cartan matrix; rows index coroots: cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  size_t num_positive_roots() const { return positive_roots_.size(); }
  /// Positive roots in simple-root coordinates.  The first rank() entries are
  /// the simple roots in order.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  /// Coroot of positive root b, in fundamental-coweight coordinates.
  const IntVec& coroot_ambient(size_t b) const { return coroot_ambient_[b]; }
  /// Coroot of positive root b, in simple-coroot coordinates.
  const IntVec& coroot_lattice(size_t b) const { return coroot_lattice_[b]; }
  size_t highest_root_index() const { return highest_root_index_; }
  /// Half-sum of positive roots, in simple-root coordinates (exact rationals).
  const RatVec& rho() const { return rho_; }
  /// Half-sum of positive coroots, in fundamental-coweight coordinates.
  const RatVec& rho_check() const { return rho_check_; }

  /// <x, beta> for a rational point x and a positive-root index.
  Rat pairing(const RatVec& x, size_t beta) const;
  /// <x, beta> for an integer coweight.
  long long pairing(const Coweight& x, size_t beta) const;
  /// <x, rho>.
  Rat pairing_rho(const RatVec& x) const;
  Rat pairing_rho(const Coweight& x) const;

  // --- Weyl group element algebra ------------------------------------------
  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;  // i in 1..rank
  /// Reflection in the positive root with index b.
  WeylElement root_reflection(size_t b) const;
  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement from_word(const std::vector<uint8_t>& word) const;
  WeylElement longest_element() const;

  /// Action on a rational point of the ambient space.
  RatVec weyl_act(const WeylElement& w, const RatVec& x) const;
  Coweight weyl_act(const WeylElement& w, const Coweight& x) const;
  /// Action on a root in simple-root coordinates.
  std::vector<int> act_on_root(const WeylElement& w, const std::vector<int>& root) const;
  /// Action on a vector of simple-coroot coordinates.
  IntVec act_on_coroot_coords(const WeylElement& w, const IntVec& c) const;

  /// Bruhat order, optionally on cosets modulo a standard parabolic
  /// (generators given as simple-reflection indices 1..rank).
  bool bruhat_leq(const WeylElement& u, const WeylElement& v,
                  const std::set<int>& modulo = {}) const;
  /// Unique minimal-length element of w * W_stab.
  WeylElement coset_min_rep(const WeylElement& w, const std::set<int>& stabilizer) const;

  bool is_dominant(const Coweight& x) const;
  /// nu <= lambda iff lambda - nu is a nonnegative integer combination of
  /// simple coroots.
  bool dominance_leq(const Coweight& nu, const Coweight& lambda) const;
  /// Coordinates of a coweight in the simple-coroot basis, if integral.
  bool coroot_coordinates(const Coweight& x, IntVec* out) const;
  std::set<Coweight> weyl_orbit(const Coweight& x) const;
  Coweight dominant_representative(const Coweight& x) const;
  /// Simple-reflection indices fixing lambda (the type of its stabilizer).
  std::set<int> stabilizer_generators(const Coweight& lambda) const;

  const IntVec& base_point_scaled() const { return base_scaled_; }
  long long base_denominator() const { return base_den_; }

  Coweight zero() const { return Coweight{IntVec(rank_, 0)}; }
  Coweight fundamental_coweight(int i) const;
  Coweight simple_coroot(int i) const;
  Coweight highest_coroot() const;  // coroot of the highest root

 private:
  void act_scaled(int i, IntVec& x) const;      // s_i on scaled base images
  void canonicalize(WeylElement& w) const;      // recompute lex-least word from image

  char series_ = 0;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> positive_roots_;
  std::vector<IntVec> coroot_ambient_;
  std::vector<IntVec> coroot_lattice_;
  size_t highest_root_index_ = 0;
  RatVec rho_;
  RatVec rho_check_;
  IntVec base_scaled_;
  long long base_den_ = 1;
  std::vector<std::vector<Rat>> cartan_t_inverse_;  // for coroot coordinates
};

std::ostream& operator<<(std::ostream& os, const Coweight& c);
std::ostream& operator<<(std::ostream& os, const WeylElement& w);

/// Formats a reduced word as "s1*s2*s1" ("e" when empty).
std::string word_to_string(const std::vector<uint8_t>& word);

}  // namespace gallerion
