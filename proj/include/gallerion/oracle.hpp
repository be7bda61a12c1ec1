#pragma once

#include <set>
#include <vector>

#include "gallerion/gallery.hpp"

namespace gallerion {
namespace oracle {

/// Character of the irreducible highest-weight module with highest weight
/// lambda on the dual side, by the Freudenthal recursion.  Exact; memoized.
WeightMultiplicity freudenthal_character(const RootDatum& d, const Coweight& lambda);

/// Same character by the alternating-sum (partition-count) formula; an
/// independent cross-check of the recursion.
WeightMultiplicity alternating_character(const RootDatum& d, const Coweight& lambda);

/// Total dimension by the product formula.
long long weyl_dim(const RootDatum& d, const Coweight& lambda);

/// Exhaustive LS-gallery search: positively folded galleries attaining the
/// dimension bound, found by filtering the full enumeration.  Never calls the
/// folding operators.
std::vector<Gallery> brute_force_ls(const GalleryTypePtr& type, uint64_t cap = 10000000);

}  // namespace oracle
}  // namespace gallerion
