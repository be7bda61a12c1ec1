#pragma once

#include <map>
#include <string>
#include <vector>

#include "gallerion/gallery.hpp"

namespace gallerion {

/// The colored graph generated from the minimal gallery by the lowering
/// operators; vertices are LS-galleries.
struct CrystalGraph {
  GalleryTypePtr type;
  std::vector<Gallery> vertices;  // sorted by word sequence
  size_t highest = 0;             // index of the minimal gallery
  struct Edge {
    size_t from;
    int root;  // simple-root color
    size_t to;
  };
  std::vector<Edge> edges;  // sorted by (from, root)
};

CrystalGraph build_crystal(const GalleryTypePtr& type);
CrystalGraph build_crystal(const RootDatumPtr& datum, const Coweight& lambda);

WeightMultiplicity character(const CrystalGraph& c);
bool is_connected(const CrystalGraph& c);

/// Endpoint multiset of the galleries with no raising operator defined.
WeightMultiplicity decompose(const GalleryTypePtr& type, uint64_t cap = 0);

std::string crystal_to_dot(const CrystalGraph& c);
std::string crystal_to_json(const CrystalGraph& c);

}  // namespace gallerion
