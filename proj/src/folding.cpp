#include "gallerion/folding.hpp"

#include <cassert>
#include <climits>

namespace gallerion {

namespace {

// On-level of a face against a simple root, or nullopt.
std::optional<int> on_level(const Face& f, int alpha) {
  const SigEntry& e = f.sig[alpha - 1];
  if (e.on) return e.level;
  return std::nullopt;
}

/// Rebuilds a gallery piecewise: the window of large faces [j, k) is
/// reflected in the mirror wall, everything past it is translated, the head
/// is kept.  Small faces at the window boundary lie on a fixed wall of the
/// corresponding map, so the junction assignment is consistent.
Gallery transform(const Gallery& g, int j, int k, const Wall& mirror, const IntVec& shift) {
  const RootDatum& d = g.type->datum();
  std::vector<Face> faces;
  faces.reserve(g.faces.size());
  for (int i = 0; i <= g.p() + 1; ++i) {
    if (i <= j)
      faces.push_back(g.small_face(i));
    else if (i < k)
      faces.push_back(reflect(d, mirror, g.small_face(i)));
    else
      faces.push_back(translate(d, shift, g.small_face(i)));
    if (i > g.p()) break;
    if (i < j)
      faces.push_back(g.large_face(i));
    else if (i < k)
      faces.push_back(reflect(d, mirror, g.large_face(i)));
    else
      faces.push_back(translate(d, shift, g.large_face(i)));
  }
  return gallery_from_faces(g.type, std::move(faces));
}

}  // namespace

int min_level(const Gallery& g, int alpha) {
  int m = INT_MAX;
  for (int j = 0; j <= g.p() + 1; ++j)
    if (auto lvl = on_level(g.small_face(j), alpha)) m = std::min(m, *lvl);
  assert(m <= 0);
  return m;
}

std::optional<Gallery> e_alpha(const Gallery& g, int alpha) {
  int m = min_level(g, alpha);
  if (m >= 0) return std::nullopt;
  int k = -1;
  for (int i = 0; i <= g.p() + 1; ++i)
    if (on_level(g.small_face(i), alpha) == m) {
      k = i;
      break;
    }
  int j = -1;
  for (int i = k; i >= 0; --i)
    if (on_level(g.small_face(i), alpha) == m + 1) {
      j = i;
      break;
    }
  if (j < 0) return std::nullopt;  // no small face on the mirror level
  const RootDatum& d = g.type->datum();
  IntVec shift(d.rank(), 0);
  shift[alpha - 1] = 1;  // alpha^vee in simple-coroot coordinates
  Gallery out = transform(g, j, k, Wall{alpha - 1, m + 1}, shift);
  assert(out.endpoint.coords[alpha - 1] == g.endpoint.coords[alpha - 1] + 2);
  return out;
}

std::optional<Gallery> f_alpha(const Gallery& g, int alpha) {
  int m = min_level(g, alpha);
  long long nu_alpha = g.endpoint.coords[alpha - 1];
  if (nu_alpha - m < 1) return std::nullopt;
  int j = -1;
  for (int i = g.p() + 1; i >= 0; --i)
    if (on_level(g.small_face(i), alpha) == m) {
      j = i;
      break;
    }
  int k = -1;
  for (int i = j; i <= g.p() + 1; ++i)
    if (on_level(g.small_face(i), alpha) == m + 1) {
      k = i;
      break;
    }
  if (k < 0) return std::nullopt;
  const RootDatum& d = g.type->datum();
  IntVec shift(d.rank(), 0);
  shift[alpha - 1] = -1;
  Gallery out = transform(g, j, k, Wall{alpha - 1, m}, shift);
  assert(out.endpoint.coords[alpha - 1] == g.endpoint.coords[alpha - 1] - 2);
  return out;
}

std::optional<Gallery> e_tilde_alpha(const Gallery& g, int alpha) {
  int m = min_level(g, alpha);
  Wall h{alpha - 1, m};
  int j = -1;
  for (int i = 0; i <= g.p(); ++i) {
    bool descends = side_of_wall(g.large_face(i), h) == Side::Negative;
    if (on_level(g.small_face(i), alpha) == m && descends) {
      j = i;
      break;
    }
    if (descends) return std::nullopt;  // the crossing is not through a small face at level m
  }
  if (j < 0) return std::nullopt;
  int k = -1;
  for (int i = j + 1; i <= g.p() + 1; ++i)
    if (on_level(g.small_face(i), alpha) == m) {
      k = i;
      break;
    }
  if (k < 0) return std::nullopt;
  Gallery out = transform(g, j, k, h, IntVec(g.type->datum().rank(), 0));
  assert(out.endpoint == g.endpoint);
  return out;
}

std::pair<int, int> string_lengths(const Gallery& g, int alpha) {
  int p = 0, q = 0;
  Gallery cur = g;
  while (auto next = f_alpha(cur, alpha)) {
    cur = std::move(*next);
    ++p;
  }
  cur = g;
  while (auto next = e_alpha(cur, alpha)) {
    cur = std::move(*next);
    ++q;
  }
  return {p, q};
}

}  // namespace gallerion
