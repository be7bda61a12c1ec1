#pragma once

#include <optional>
#include <utility>

#include "gallerion/gallery.hpp"

namespace gallerion {

/// Minimal integer m such that some small face lies on H_{alpha,m}, for a
/// simple root alpha (1..rank).  Always <= 0 since the source sits at level 0.
int min_level(const Gallery& g, int alpha);

/// Raising folding operator; absent iff min_level(g, alpha) == 0.
std::optional<Gallery> e_alpha(const Gallery& g, int alpha);

/// Lowering folding operator; absent iff min_level == <endpoint, alpha>.
std::optional<Gallery> f_alpha(const Gallery& g, int alpha);

/// The auxiliary unfolding operator; absent iff the gallery never crosses
/// H_{alpha,m} at its minimum level.  Keeps the endpoint fixed.
std::optional<Gallery> e_tilde_alpha(const Gallery& g, int alpha);

/// (p, q): maximal powers of f_alpha and e_alpha defined on g.
std::pair<int, int> string_lengths(const Gallery& g, int alpha);

}  // namespace gallerion
