#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gallerion/alcove.hpp"
#include "gallerion/root_datum.hpp"

namespace gallerion {

class GalleryType;
using RootDatumPtr = std::shared_ptr<const RootDatum>;
using GalleryTypePtr = std::shared_ptr<const GalleryType>;

/// A combinatorial gallery of a fixed type, in dual representation: the face
/// sequence (small and large faces interleaved) and the coset words.
struct Gallery {
  GalleryTypePtr type;
  /// faces[2j] is the small face at position j (j = 0..p+1, 2p+3 entries),
  /// faces[2j+1] the large face at position j (j = 0..p).
  std::vector<Face> faces;
  /// Minimal coset representative words, one per position 0..p; letters are
  /// affine simple-reflection labels (0 = the affine one).
  std::vector<std::vector<uint8_t>> words;
  Coweight endpoint;

  int p() const { return (int)words.size() - 1; }
  const Face& small_face(int j) const { return faces[2 * j]; }
  const Face& large_face(int j) const { return faces[2 * j + 1]; }

  bool operator==(const Gallery& o) const;
  bool operator!=(const Gallery& o) const { return !(*this == o); }
  bool operator<(const Gallery& o) const { return words < o.words; }
};

struct GalleryHash {
  size_t operator()(const Gallery& g) const {
    size_t h = 14695981039346656037ull;
    FaceHash fh;
    for (const auto& f : g.faces) h = (h ^ fh(f)) * 1099511628211ull;
    return h;
  }
};

/// The gallery of types of a fixed minimal gallery joining the origin with a
/// dominant coweight, together with the per-position coset machinery.
class GalleryType : public std::enable_shared_from_this<GalleryType> {
 public:
  struct CosetRep {
    AffineElement g;
    AffineElement g_inv;
    std::vector<uint8_t> word;
    Face large_image;  // g * F(t_j), in fundamental position
  };
  struct Position {
    TypeSet t_small;  // t'_j
    TypeSet t_large;  // t_j
    Face fund_small;  // F(t'_j)
    Face fund_large;  // F(t_j)
    std::vector<CosetRep> reps;  // sorted by word, lexicographically
    size_t id_index = 0;
    size_t tau_index = 0;  // representative of the largest class
  };

  /// Builds the type of a canonically chosen minimal gallery joining the
  /// origin with lambda.  Errors when lambda is not dominant.
  static GalleryTypePtr for_weight(const RootDatumPtr& datum, const Coweight& lambda);
  /// Builds the type of a given minimal reference gallery.
  static GalleryTypePtr from_reference(const RootDatumPtr& datum, const Coweight& lambda,
                                       std::vector<Face> reference_faces);

  const RootDatum& datum() const { return *datum_; }
  const RootDatumPtr& datum_ptr() const { return datum_; }
  const Coweight& lambda() const { return lambda_; }
  int p() const { return (int)positions_.size() - 1; }
  const std::vector<Position>& positions() const { return positions_; }
  const TypeSet& target_type() const { return target_type_; }
  const Face& fund_target() const { return fund_target_; }
  /// The reference minimal gallery.
  const Gallery& reference_gallery() const { return reference_; }
  /// Number of galleries of this type (saturating at UINT64_MAX).
  uint64_t count_all() const;
  /// Simple-reflection indices generating the stabilizer of lambda.
  const std::set<int>& lambda_stabilizer() const { return lambda_stab_; }

  /// The type of the reversed galleries (minimal reference joining the origin
  /// with -w0(lambda)); cached.
  GalleryTypePtr starred() const;

 private:
  friend Gallery gallery_from_faces(const GalleryTypePtr&, std::vector<Face>);
  GalleryType() = default;
  void build(std::vector<Face> reference_faces);

  RootDatumPtr datum_;
  Coweight lambda_;
  std::vector<Position> positions_;
  TypeSet target_type_;
  Face fund_target_;
  Gallery reference_;
  std::set<int> lambda_stab_;
  mutable std::mutex star_mutex_;
  mutable GalleryTypePtr star_cache_;
};

/// The canonical minimal gallery joining the origin with lambda.
Gallery minimal_gallery(const RootDatumPtr& datum, const Coweight& lambda);

/// Reconstructs a gallery from its coset words.
Gallery gallery_from_words(const GalleryTypePtr& type,
                           const std::vector<std::vector<uint8_t>>& words);
/// Reconstructs a gallery from its face sequence (words are recomputed).
Gallery gallery_from_faces(const GalleryTypePtr& type, std::vector<Face> faces);

enum class Filter { All, PositivelyFolded, LS, Dominant };

/// Streams the galleries of the given type in lexicographic word order.  The
/// visitor returns false to stop early; the Gallery it receives is owned by
/// the enumerator and only valid during the call (copy it to keep it).
/// Errors with CapExceeded when the total count exceeds `cap` (0 = no cap).
void enumerate_galleries(const GalleryTypePtr& type, Filter filter, uint64_t cap,
                         const std::function<bool(const Gallery&)>& visit);
std::vector<Gallery> enumerate_all(const GalleryTypePtr& type, Filter filter,
                                   uint64_t cap = 0);

/// Load-bearing wall count.
int dimension(const Gallery& g);
/// <lambda + endpoint, rho>, the LS dimension bound.
long long ls_bound(const Gallery& g);

bool is_minimal(const Gallery& g);
bool is_positively_folded(const Gallery& g);
/// True iff g is folded at position j (j >= 1) o its word differs from tau^m.
bool is_folded_at(const Gallery& g, int j);
/// Errors with NotPositivelyFolded unless g is positively folded.
bool is_ls(const Gallery& g);

/// The companion sequence of Weyl cosets in W/W_lambda (minimal reps).
std::vector<WeylElement> companion(const Gallery& g);
bool is_combinatorial_ls(const Gallery& g);

/// Reversal: the translated-by(-endpoint), reversed gallery.
Gallery star(const Gallery& g);

/// Combinatorial shape (a, b) of the open stratum C^a x (C*)^b attached to a
/// positively folded gallery; a + b = dimension.
std::pair<int, int> cell_shape(const Gallery& g);

/// Pairs (delta, gamma): delta has the unfolded entry tau^m at one position
/// where gamma is folded, identical elsewhere, with everything beyond
/// unfolded; the stratum of delta lies in the closure of the stratum of gamma.
std::vector<std::pair<Gallery, Gallery>> folding_order_edges(const GalleryTypePtr& type,
                                                             uint64_t cap = 0);

/// Apply a finite Weyl element to all faces (fixes the origin).
Gallery weyl_translate(const Gallery& g, const WeylElement& w);

std::string gallery_to_json(const Gallery& g);
Gallery gallery_from_json(const std::string& text);

}  // namespace gallerion
