#include "gallerion/alcove.hpp"

#include <algorithm>
#include <cstdlib>
#include <cassert>
#include <map>
#include <queue>

namespace gallerion {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

int on_roots_rank(const RootDatum& d, const std::vector<SigEntry>& sig) {
  std::vector<std::vector<Rat>> rows;
  for (size_t b = 0; b < sig.size(); ++b)
    if (sig[b].on) {
      const auto& r = d.positive_roots()[b];
      rows.emplace_back(r.begin(), r.end());
    }
  int rank = 0;
  size_t n = (size_t)d.rank();
  for (size_t col = 0; col < n && rank < (int)rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if ((int)r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RatVec to_ratvec(const ScaledPoint& p) {
  RatVec out;
  out.reserve(p.num.size());
  for (long long v : p.num) out.push_back(rat(v, p.den));
  return out;
}

ScaledPoint scale_point(const RatVec& x) {
  mpz_class lcm(1);
  for (const Rat& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  assert(lcm.fits_slong_p());
  ScaledPoint p;
  p.den = lcm.get_si();
  for (const Rat& v : x) {
    mpz_class n = v.get_num() * (lcm / v.get_den());
    assert(n.fits_slong_p());
    p.num.push_back(n.get_si());
  }
  return p;
}

Face face_of_point(const RootDatum& d, ScaledPoint x) {
  Face f;
  f.sig.resize(d.num_positive_roots());
  for (size_t b = 0; b < d.num_positive_roots(); ++b) {
    const auto& r = d.positive_roots()[b];
    long long dot = 0;
    for (int j = 0; j < d.rank(); ++j) {
      assert(std::llabs(x.num[j]) < (1LL << 56));  // far from any int64 edge
      dot += r[j] * x.num[j];
    }
    if (dot % x.den == 0)
      f.sig[b] = SigEntry{(int32_t)(dot / x.den), true};
    else
      f.sig[b] = SigEntry{(int32_t)floor_div(dot, x.den), false};
  }
  f.witness = std::move(x);
  f.dim = d.rank() - on_roots_rank(d, f.sig);
  return f;
}

Face face_of_point(const RootDatum& d, const RatVec& x) {
  return face_of_point(d, scale_point(x));
}

Face face_of_point(const RootDatum& d, const Coweight& x) {
  return face_of_point(d, ScaledPoint{x.coords, 1});
}

Side side_of_wall(const Face& f, const Wall& h) {
  const SigEntry& e = f.sig[h.root];
  if (e.on) {
    if (e.level == h.level) return Side::In;
    return e.level > h.level ? Side::Positive : Side::Negative;
  }
  return e.level >= h.level ? Side::Positive : Side::Negative;
}

bool separates_from_minus_infinity(const Wall& h, const Face& f) {
  return side_of_wall(f, h) == Side::Positive;
}

bool face_leq(const Face& f, const Face& g) {
  for (size_t b = 0; b < g.sig.size(); ++b) {
    const SigEntry& ef = f.sig[b];
    const SigEntry& eg = g.sig[b];
    if (eg.on) {
      if (!(ef.on && ef.level == eg.level)) return false;
    } else {
      // Closed interval [m, m+1]: allow On(m), On(m+1) or the open interval.
      if (ef.on) {
        if (ef.level != eg.level && ef.level != eg.level + 1) return false;
      } else {
        if (ef.level != eg.level) return false;
      }
    }
  }
  return true;
}

Coweight vertex_coweight(const Face& f, const RootDatum& d) {
  assert(f.dim == 0);
  Coweight c;
  c.coords.resize(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    assert(f.witness.num[i] % f.witness.den == 0);
    c.coords[i] = f.witness.num[i] / f.witness.den;
  }
  return c;
}

AffineElement affine_identity(const RootDatum& d) {
  return AffineElement{d.identity(), IntVec(d.rank(), 0)};
}

AffineElement affine_translation(const RootDatum& d, const IntVec& coroot_coords) {
  return AffineElement{d.identity(), coroot_coords};
}

AffineElement affine_reflection(const RootDatum& d, const Wall& h) {
  AffineElement a;
  a.finite = d.root_reflection(h.root);
  a.trans_coroot = d.coroot_lattice(h.root);
  for (auto& v : a.trans_coroot) v *= h.level;
  return a;
}

AffineElement affine_multiply(const RootDatum& d, const AffineElement& a, const AffineElement& b) {
  AffineElement c;
  c.finite = d.multiply(a.finite, b.finite);
  c.trans_coroot = d.act_on_coroot_coords(a.finite, b.trans_coroot);
  for (int i = 0; i < d.rank(); ++i) c.trans_coroot[i] += a.trans_coroot[i];
  return c;
}

AffineElement affine_inverse(const RootDatum& d, const AffineElement& a) {
  AffineElement inv;
  inv.finite = d.inverse(a.finite);
  inv.trans_coroot = d.act_on_coroot_coords(inv.finite, a.trans_coroot);
  for (auto& v : inv.trans_coroot) v = -v;
  return inv;
}

RatVec affine_translation_ambient(const RootDatum& d, const AffineElement& a) {
  RatVec t(d.rank(), Rat(0));
  const auto& C = d.cartan();
  for (int i = 0; i < d.rank(); ++i) {
    if (a.trans_coroot[i] == 0) continue;
    for (int j = 0; j < d.rank(); ++j) t[j] += rat(a.trans_coroot[i] * C[i][j]);
  }
  return t;
}

RatVec affine_act(const RootDatum& d, const AffineElement& g, const RatVec& x) {
  RatVec y = d.weyl_act(g.finite, x);
  RatVec t = affine_translation_ambient(d, g);
  for (int j = 0; j < d.rank(); ++j) y[j] += t[j];
  return y;
}

namespace {

// Integer action on scaled coordinates: s_i, then an ambient shift times den.
void act_scaled_word(const RootDatum& d, const WeylElement& w, ScaledPoint& p) {
  const auto& C = d.cartan();
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it;
    long long xi = p.num[i - 1];
    if (xi == 0) continue;
    for (int j = 0; j < d.rank(); ++j) p.num[j] -= xi * C[i - 1][j];
  }
}

void shift_scaled(const RootDatum& d, const IntVec& coroot_coords, long long factor,
                  ScaledPoint& p) {
  const auto& C = d.cartan();
  for (int i = 0; i < d.rank(); ++i) {
    long long c = coroot_coords[i] * factor;
    if (c == 0) continue;
    for (int j = 0; j < d.rank(); ++j) p.num[j] += c * C[i][j] * p.den;
  }
}

}  // namespace

Face affine_act(const RootDatum& d, const AffineElement& g, const Face& f) {
  ScaledPoint p = f.witness;
  act_scaled_word(d, g.finite, p);
  shift_scaled(d, g.trans_coroot, 1, p);
  return face_of_point(d, std::move(p));
}

Face reflect(const RootDatum& d, const Wall& h, const Face& f) {
  ScaledPoint p = f.witness;
  const auto& r = d.positive_roots()[h.root];
  long long dot = 0;
  for (int j = 0; j < d.rank(); ++j) dot += r[j] * p.num[j];
  long long excess = dot - h.level * p.den;  // scaled by den
  const auto& cv = d.coroot_ambient(h.root);
  for (int j = 0; j < d.rank(); ++j) p.num[j] -= excess * cv[j];
  return face_of_point(d, std::move(p));
}

Face translate(const RootDatum& d, const IntVec& coroot_coords, const Face& f) {
  ScaledPoint p = f.witness;
  shift_scaled(d, coroot_coords, 1, p);
  return face_of_point(d, std::move(p));
}

Face translate_coweight(const RootDatum& d, const Coweight& nu, const Face& f) {
  ScaledPoint p = f.witness;
  for (int j = 0; j < d.rank(); ++j) p.num[j] += nu.coords[j] * p.den;
  return face_of_point(d, std::move(p));
}

Face fundamental_face(const RootDatum& d, const TypeSet& t) {
  assert((int)t.size() <= d.rank());  // no face has the full affine type
  // Vertices of the fundamental alcove: v_0 = 0 and v_i = omega_i / c_i where
  // c is the highest root in simple-root coordinates.
  const auto& theta = d.positive_roots()[d.highest_root_index()];
  RatVec w(d.rank(), Rat(0));
  int count = 0;
  for (int s = 0; s <= d.rank(); ++s) {
    if (t.count(s)) continue;
    ++count;
    if (s >= 1) w[s - 1] += rat(1, theta[s - 1]);
  }
  assert(count > 0);
  for (auto& v : w) v /= count;
  return face_of_point(d, w);
}

std::pair<Face, AffineElement> to_fundamental(const RootDatum& d, const Face& f) {
  ScaledPoint x = f.witness;
  AffineElement h = affine_identity(d);
  size_t theta = d.highest_root_index();
  const auto& theta_root = d.positive_roots()[theta];
  for (;;) {
    int op = -1;  // 1..rank: finite simple; 0: affine reflection s_{theta,1}
    for (int i = 1; i <= d.rank(); ++i)
      if (x.num[i - 1] < 0) {
        op = i;
        break;
      }
    if (op == -1) {
      long long dot = 0;
      for (int j = 0; j < d.rank(); ++j) dot += theta_root[j] * x.num[j];
      if (dot > x.den) op = 0;
    }
    if (op == -1) break;
    AffineElement r = op == 0 ? affine_reflection(d, Wall{(int)theta, 1})
                              : AffineElement{d.simple_reflection(op), IntVec(d.rank(), 0)};
    act_scaled_word(d, r.finite, x);
    shift_scaled(d, r.trans_coroot, 1, x);
    h = affine_multiply(d, r, h);
  }
  return {face_of_point(d, std::move(x)), affine_inverse(d, h)};
}

TypeSet face_type(const RootDatum& d, const Face& f) {
  Face f0 = to_fundamental(d, f).first;
  TypeSet t;
  for (int i = 1; i <= d.rank(); ++i) {
    const SigEntry& e = f0.sig[i - 1];
    if (e.on && e.level == 0) t.insert(i);
  }
  const SigEntry& e = f0.sig[d.highest_root_index()];
  if (e.on && e.level == 1) t.insert(0);
  return t;
}

std::vector<Wall> walls_through(const RootDatum& d, const Face& f) {
  std::vector<Wall> walls;
  for (size_t b = 0; b < d.num_positive_roots(); ++b)
    if (f.sig[b].on) walls.push_back(Wall{(int)b, f.sig[b].level});
  return walls;
}

LocalGroup::LocalGroup(const RootDatum& d, const TypeSet& generators) : gens_(generators) {
  if ((int)gens_.size() > d.rank()) throw NonSphericalLocalType();
  std::vector<std::pair<int, AffineElement>> gen_elts;
  for (int s : gens_) {
    AffineElement g = s == 0 ? affine_reflection(d, Wall{(int)d.highest_root_index(), 1})
                             : AffineElement{d.simple_reflection(s), IntVec(d.rank(), 0)};
    gen_elts.emplace_back(s, g);
  }

  auto key_of = [](const AffineElement& a) {
    std::vector<long long> k(a.finite.image);
    k.insert(k.end(), a.trans_coroot.begin(), a.trans_coroot.end());
    return k;
  };

  std::map<std::vector<long long>, size_t> seen;
  Element id{affine_identity(d), {}};
  elements_.push_back(id);
  seen[key_of(id.g)] = 0;
  // Breadth-first by word length; within a level the frontier is in lex order,
  // so the first word found for an element is the lex-least reduced one.
  std::vector<size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t idx : frontier) {
      for (const auto& [s, g] : gen_elts) {
        AffineElement prod = affine_multiply(d, elements_[idx].g, g);
        auto key = key_of(prod);
        if (seen.count(key)) continue;
        Element e;
        e.g = prod;
        e.word = elements_[idx].word;
        e.word.push_back((uint8_t)s);
        seen[key] = elements_.size();
        next.push_back(elements_.size());
        elements_.push_back(std::move(e));
        if (elements_.size() > 1000000) throw NonSphericalLocalType();
      }
    }
    frontier = std::move(next);
  }
}

AffineElement tau_max(const RootDatum& d, const TypeSet& t_prime, const TypeSet& t) {
  for (int s : t)
    if (!t_prime.count(s)) throw Error("tau_max: t is not a subset of t'");
  LocalGroup big(d, t_prime);
  LocalGroup sub(d, t);
  const auto& w_max = big.longest();
  assert(big.size() < 2 || big.elements()[big.size() - 2].word.size() < w_max.word.size());
  // Minimal-length element of w_max * <t>.
  std::map<std::vector<long long>, const LocalGroup::Element*> index;
  for (const auto& e : big.elements()) {
    std::vector<long long> k(e.g.finite.image);
    k.insert(k.end(), e.g.trans_coroot.begin(), e.g.trans_coroot.end());
    index[k] = &e;
  }
  const LocalGroup::Element* best = nullptr;
  for (const auto& v : sub.elements()) {
    AffineElement prod = affine_multiply(d, w_max.g, v.g);
    std::vector<long long> k(prod.finite.image);
    k.insert(k.end(), prod.trans_coroot.begin(), prod.trans_coroot.end());
    const LocalGroup::Element* e = index.at(k);
    if (!best || e->word.size() < best->word.size() ||
        (e->word.size() == best->word.size() && e->word < best->word))
      best = e;
  }
  return best->g;
}

}  // namespace gallerion
