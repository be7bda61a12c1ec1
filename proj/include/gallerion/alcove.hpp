#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gallerion/root_datum.hpp"

namespace gallerion {

/// The affine hyperplane H_{beta,m} = { x : <x,beta> = m }.
struct Wall {
  int root;  // positive-root index
  int level;

  bool operator==(const Wall& o) const { return root == o.root && level == o.level; }
  bool operator<(const Wall& o) const {
    return root != o.root ? root < o.root : level < o.level;
  }
};

enum class Side : int8_t { In = 0, Positive = 1, Negative = -1 };

/// Position of a face relative to the walls in one root direction: either on
/// H_{beta,level} or strictly between levels (level, level+1).
struct SigEntry {
  int32_t level;
  bool on;

  bool operator==(const SigEntry& o) const { return level == o.level && on == o.on; }
  bool operator<(const SigEntry& o) const {
    return level != o.level ? level < o.level : on < o.on;
  }
};

/// An exact rational point stored as integer numerators over one common
/// denominator.  All the points this code handles are integer affine images
/// of a few fixed small rationals, so the coordinates stay far from overflow.
struct ScaledPoint {
  IntVec num;
  long long den = 1;

  Rat coord(int i) const { return rat(num[i], den); }
};

RatVec to_ratvec(const ScaledPoint& p);
ScaledPoint scale_point(const RatVec& x);

/// A face of the affine Coxeter complex, identified by its wall-position
/// signature over all positive roots.  The witness is one exact interior
/// point; it is not part of the identity.
struct Face {
  std::vector<SigEntry> sig;
  ScaledPoint witness;
  int dim = 0;

  bool operator==(const Face& o) const { return sig == o.sig; }
  bool operator!=(const Face& o) const { return !(*this == o); }
  bool operator<(const Face& o) const { return sig < o.sig; }
};

struct FaceHash {
  size_t operator()(const Face& f) const {
    size_t h = 1469598103934665603ull;
    for (const auto& e : f.sig) {
      h = (h ^ (size_t)(uint32_t)e.level) * 1099511628211ull;
      h = (h ^ (size_t)e.on) * 1099511628211ull;
    }
    return h;
  }
};

/// An element of the extended affine Weyl group: x -> finite(x) + translation,
/// with the translation stored in simple-coroot coordinates.  Elements of the
/// affine Weyl group proper always have integral coroot coordinates; coweight
/// translations used by the reversal involution are accommodated by an
/// auxiliary ambient shift.
struct AffineElement {
  WeylElement finite;
  IntVec trans_coroot;  // simple-coroot coordinates

  bool operator==(const AffineElement& o) const {
    return finite == o.finite && trans_coroot == o.trans_coroot;
  }
  bool operator<(const AffineElement& o) const {
    if (finite.image != o.finite.image) return finite.image < o.finite.image;
    return trans_coroot < o.trans_coroot;
  }
};

// --- Face and wall geometry -------------------------------------------------

Face face_of_point(const RootDatum& d, const RatVec& x);
Face face_of_point(const RootDatum& d, const Coweight& x);
Face face_of_point(const RootDatum& d, ScaledPoint x);

Side side_of_wall(const Face& f, const Wall& h);

/// True iff H separates F from the antidominant direction, i.e. F lies on the
/// strictly positive side of H.
bool separates_from_minus_infinity(const Wall& h, const Face& f);

/// Closed-face containment F <= G, read off the signatures.
bool face_leq(const Face& f, const Face& g);

/// Vertex coordinates of a dimension-zero face.
Coweight vertex_coweight(const Face& f, const RootDatum& d);

// --- Affine action ----------------------------------------------------------

AffineElement affine_identity(const RootDatum& d);
AffineElement affine_translation(const RootDatum& d, const IntVec& coroot_coords);
/// The affine reflection s_{beta,m}.
AffineElement affine_reflection(const RootDatum& d, const Wall& h);
AffineElement affine_multiply(const RootDatum& d, const AffineElement& a, const AffineElement& b);
AffineElement affine_inverse(const RootDatum& d, const AffineElement& a);
/// Ambient (fundamental-coweight) coordinates of the translation part.
RatVec affine_translation_ambient(const RootDatum& d, const AffineElement& a);

RatVec affine_act(const RootDatum& d, const AffineElement& g, const RatVec& x);
Face affine_act(const RootDatum& d, const AffineElement& g, const Face& f);

Face reflect(const RootDatum& d, const Wall& h, const Face& f);
Face translate(const RootDatum& d, const IntVec& coroot_coords, const Face& f);
/// Translation by an arbitrary coweight (an automorphism of the complex that
/// may permute types).
Face translate_coweight(const RootDatum& d, const Coweight& nu, const Face& f);

// --- Types and the fundamental domain ---------------------------------------

/// Affine simple reflections are labeled 0..rank: 0 is s_{theta,1}, i>=1 is s_i.
using TypeSet = std::set<int>;

/// The face of the fundamental alcove with the given type.
Face fundamental_face(const RootDatum& d, const TypeSet& t);

/// Maps F into the fundamental alcove: returns (F0, g) with g(F0) = F and F0 a
/// face of the fundamental alcove.
std::pair<Face, AffineElement> to_fundamental(const RootDatum& d, const Face& f);

/// Type of a face: the set of affine simple reflections whose walls contain
/// the corresponding face of the fundamental alcove.
TypeSet face_type(const RootDatum& d, const Face& f);

/// All walls containing the face.
std::vector<Wall> walls_through(const RootDatum& d, const Face& f);

// --- Local (parabolic) subgroups of the affine Weyl group -------------------

/// The subgroup of the affine Weyl group generated by a spherical subset of
/// the affine simple reflections, enumerated with lex-least shortest words.
class LocalGroup {
 public:
  struct Element {
    AffineElement g;
    std::vector<uint8_t> word;  // letters are affine simple labels 0..rank
  };

  LocalGroup(const RootDatum& d, const TypeSet& generators);

  const TypeSet& generators() const { return gens_; }
  const std::vector<Element>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  /// The unique longest element.
  const Element& longest() const { return elements_.back(); }

 private:
  TypeSet gens_;
  std::vector<Element> elements_;
};

/// Minimal-length representative of the largest class in <t'>/<t>.
/// Errors unless t is a subset of t' and <t'> is finite.
AffineElement tau_max(const RootDatum& d, const TypeSet& t_prime, const TypeSet& t);

}  // namespace gallerion
