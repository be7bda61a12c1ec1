#include "gallerion/gallery.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

namespace gallerion {

namespace {

// Small primes used to perturb the midpoint of the construction walk.
constexpr int kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

int dim_of_hlambda(const RootDatum& d, const Coweight& lambda) {
  int zero = 0;
  for (int i = 0; i < d.rank(); ++i)
    if (lambda.coords[i] == 0) ++zero;
  return d.rank() - zero;
}

/// Face sequence traced by the segment [a, b].  Returns the alternating list
/// [face(a), chamber, crossing, chamber, ..., face(b)], or nullopt when a
/// crossing fails to have relative codimension one in H_lambda.
std::optional<std::vector<Face>> walk_segment(const RootDatum& d, const RatVec& a,
                                              const RatVec& b, int target_dim) {
  std::map<Rat, int> times;  // crossing parameter -> multiplicity (unused)
  for (size_t beta = 0; beta < d.num_positive_roots(); ++beta) {
    Rat va = d.pairing(a, beta);
    Rat vb = d.pairing(b, beta);
    if (va == vb) continue;
    Rat lo = std::min(va, vb), hi = std::max(va, vb);
    mpz_class mlo, mhi;
    mpz_fdiv_q(mlo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(mhi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    for (mpz_class m = mlo; m <= mhi + 1; ++m) {
      Rat level(m);
      if (level <= lo || level >= hi) continue;
      Rat t = (level - va) / (vb - va);
      times[t]++;
    }
  }
  auto at = [&](const Rat& t) {
    RatVec x(d.rank());
    for (int j = 0; j < d.rank(); ++j) x[j] = a[j] + t * (b[j] - a[j]);
    return x;
  };
  std::vector<Face> out;
  out.push_back(face_of_point(d, a));
  Rat prev(0);
  for (const auto& [t, mult] : times) {
    Rat mid = (prev + t) / 2;
    Face chamber = face_of_point(d, at(mid));
    if (chamber.dim != target_dim) return std::nullopt;
    Face crossing = face_of_point(d, at(t));
    if (crossing.dim != target_dim - 1) return std::nullopt;
    out.push_back(std::move(chamber));
    out.push_back(std::move(crossing));
    prev = t;
  }
  Rat mid = (prev + 1) / 2;
  Face chamber = face_of_point(d, at(mid));
  if (chamber.dim != target_dim) return std::nullopt;
  out.push_back(std::move(chamber));
  out.push_back(face_of_point(d, b));
  return out;
}

std::vector<Face> construct_reference_faces(const RootDatum& d, const Coweight& lambda) {
  if (!d.is_dominant(lambda)) throw NotDominant();
  Face origin = face_of_point(d, d.zero());
  bool zero = std::all_of(lambda.coords.begin(), lambda.coords.end(),
                          [](long long v) { return v == 0; });
  if (zero) return {origin, origin, origin};

  int target_dim = dim_of_hlambda(d, lambda);
  long long ht_theta = 0;
  for (int c : d.positive_roots()[d.highest_root_index()]) ht_theta += c;

  RatVec dest = to_ratvec(lambda.coords);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Generic interior point of H_lambda between the origin and lambda.
    Rat eps = rat(1, 4 * (ht_theta + 1)) / (1 << std::min(attempt, 20));
    RatVec q(d.rank(), Rat(0));
    for (int i = 0; i < d.rank(); ++i) {
      if (lambda.coords[i] == 0) continue;
      int prime = kPrimes[(i + attempt) % (sizeof(kPrimes) / sizeof(int))];
      q[i] = rat(lambda.coords[i], 2) + eps / prime;
    }
    auto first = walk_segment(d, RatVec(d.rank(), Rat(0)), q, target_dim);
    if (!first) continue;
    auto second = walk_segment(d, q, dest, target_dim);
    if (!second) continue;
    // Both walks end respectively start in the open chamber of q; splice
    // there, keeping that chamber once.
    const Face& junction = first->back();
    if ((*first)[first->size() - 2] != junction || (*second)[0] != junction ||
        (*second)[1] != junction)
      continue;
    std::vector<Face> faces = std::move(*first);
    faces.pop_back();  // drop face(q), the chamber before it stays
    faces.insert(faces.end(), second->begin() + 2, second->end());
    return faces;
  }
  throw Error("minimal gallery construction failed for " + d.type_name());
}

bool word_lex_less(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Walls through the small face that do not contain the large face.
std::vector<Wall> separating_walls_at(const RootDatum& d, const Face& small,
                                      const Face& large) {
  std::vector<Wall> out;
  for (size_t b = 0; b < d.num_positive_roots(); ++b) {
    if (!small.sig[b].on) continue;
    Wall h{(int)b, small.sig[b].level};
    if (side_of_wall(large, h) != Side::In) out.push_back(h);
  }
  return out;
}

/// Searches for a sequence of positive foldings around `small` carrying
/// `from` to `to`; returns the reflecting walls in application order.
std::optional<std::vector<Wall>> find_fold_sequence(const RootDatum& d, const Face& small,
                                                    const Face& from, const Face& to,
                                                    bool require_positive) {
  std::vector<Wall> walls = walls_through(d, small);
  std::map<Face, std::pair<Face, Wall>> parent;
  std::deque<Face> queue{from};
  std::map<Face, bool> visited{{from, true}};
  while (!queue.empty()) {
    Face f = queue.front();
    queue.pop_front();
    for (const Wall& h : walls) {
      if (side_of_wall(f, h) == Side::In) continue;
      Face image = reflect(d, h, f);
      if (require_positive && side_of_wall(image, h) != Side::Positive) continue;
      if (visited.count(image)) continue;
      visited[image] = true;
      parent.emplace(image, std::make_pair(f, h));
      if (image == to) {
        std::vector<Wall> path;
        Face cur = image;
        while (cur != from) {
          auto& [prev, wall] = parent.at(cur);
          path.push_back(wall);
          cur = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(image);
    }
  }
  return std::nullopt;
}

}  // namespace

bool Gallery::operator==(const Gallery& o) const {
  return type->lambda() == o.type->lambda() &&
         type->datum().type_name() == o.type->datum().type_name() && faces == o.faces;
}

GalleryTypePtr GalleryType::for_weight(const RootDatumPtr& datum, const Coweight& lambda) {
  auto t = std::shared_ptr<GalleryType>(new GalleryType());
  t->datum_ = datum;
  t->lambda_ = lambda;
  t->build(construct_reference_faces(*datum, lambda));
  return t;
}

GalleryTypePtr GalleryType::from_reference(const RootDatumPtr& datum, const Coweight& lambda,
                                           std::vector<Face> reference_faces) {
  auto t = std::shared_ptr<GalleryType>(new GalleryType());
  t->datum_ = datum;
  t->lambda_ = lambda;
  t->build(std::move(reference_faces));
  return t;
}

void GalleryType::build(std::vector<Face> reference_faces) {
  const RootDatum& d = *datum_;
  if (reference_faces.size() < 3 || reference_faces.size() % 2 == 0)
    throw Error("malformed reference gallery");
  int p = ((int)reference_faces.size() - 3) / 2;
  for (int j = 0; j <= p; ++j) {
    if (!face_leq(reference_faces[2 * j], reference_faces[2 * j + 1]) ||
        !face_leq(reference_faces[2 * j + 2], reference_faces[2 * j + 1]))
      throw Error("reference gallery faces are not nested");
  }
  lambda_stab_ = d.stabilizer_generators(lambda_);

  target_type_ = face_type(d, reference_faces.back());
  fund_target_ = fundamental_face(d, target_type_);

  std::map<std::pair<TypeSet, TypeSet>, Position> cache;
  positions_.clear();
  for (int j = 0; j <= p; ++j) {
    TypeSet ts = face_type(d, reference_faces[2 * j]);
    TypeSet tl = face_type(d, reference_faces[2 * j + 1]);
    auto key = std::make_pair(ts, tl);
    auto it = cache.find(key);
    if (it != cache.end()) {
      positions_.push_back(it->second);
      continue;
    }
    Position pos;
    pos.t_small = ts;
    pos.t_large = tl;
    pos.fund_small = fundamental_face(d, ts);
    pos.fund_large = fundamental_face(d, tl);

    LocalGroup big(d, ts);
    // Bucket the local group by the image of the fundamental large face; the
    // minimum of each bucket is the minimal coset representative.
    std::map<Face, const LocalGroup::Element*> best;
    std::map<Face, const LocalGroup::Element*> longest_bucket;
    const LocalGroup::Element* longest = &big.elements().back();
    for (const auto& e : big.elements()) {
      Face img = affine_act(d, e.g, pos.fund_large);
      auto [it2, inserted] = best.emplace(img, &e);
      if (!inserted) {
        const auto* cur = it2->second;
        if (e.word.size() < cur->word.size() ||
            (e.word.size() == cur->word.size() && word_lex_less(e.word, cur->word)))
          it2->second = &e;
      }
    }
    Face longest_img = affine_act(d, longest->g, pos.fund_large);
    std::vector<const LocalGroup::Element*> reps;
    for (auto& [img, e] : best) reps.push_back(e);
    std::sort(reps.begin(), reps.end(),
              [](const LocalGroup::Element* a, const LocalGroup::Element* b) {
                return word_lex_less(a->word, b->word);
              });
    for (size_t i = 0; i < reps.size(); ++i) {
      CosetRep r;
      r.g = reps[i]->g;
      r.g_inv = affine_inverse(d, reps[i]->g);
      r.word = reps[i]->word;
      r.large_image = affine_act(d, r.g, pos.fund_large);
      if (r.word.empty()) pos.id_index = i;
      if (r.large_image == longest_img) pos.tau_index = i;
      pos.reps.push_back(std::move(r));
    }
    cache.emplace(key, pos);
    positions_.push_back(std::move(pos));
  }

  // Words of the reference gallery.
  reference_.type = shared_from_this();
  reference_.faces = std::move(reference_faces);
  AffineElement g_inv = affine_identity(d);
  for (int j = 0; j <= p; ++j) {
    Face local = affine_act(d, g_inv, reference_.large_face(j));
    const Position& pos = positions_[j];
    bool found = false;
    for (const auto& r : pos.reps) {
      if (r.large_image == local) {
        reference_.words.push_back(r.word);
        g_inv = affine_multiply(d, r.g_inv, g_inv);
        found = true;
        break;
      }
    }
    if (!found) throw Error("reference gallery does not match its own type");
  }
  reference_.endpoint = vertex_coweight(reference_.faces.back(), d);
}

uint64_t GalleryType::count_all() const {
  uint64_t n = 1;
  for (const auto& pos : positions_) {
    uint64_t s = pos.reps.size();
    if (n > UINT64_MAX / s) return UINT64_MAX;
    n *= s;
  }
  return n;
}

GalleryTypePtr GalleryType::starred() const {
  std::lock_guard<std::mutex> lock(star_mutex_);
  if (star_cache_) return star_cache_;
  const RootDatum& d = *datum_;
  WeylElement w0 = d.longest_element();
  Coweight lambda_star = d.weyl_act(w0, lambda_);
  for (auto& c : lambda_star.coords) c = -c;
  // Reverse the reference, translate its target to the origin, and map by w0
  // to get a minimal reference gallery joining the origin with -w0(lambda).
  Coweight minus_lambda = lambda_;
  for (auto& c : minus_lambda.coords) c = -c;
  std::vector<Face> rev;
  for (auto it = reference_.faces.rbegin(); it != reference_.faces.rend(); ++it)
    rev.push_back(translate_coweight(d, minus_lambda, *it));
  AffineElement w0a{w0, IntVec(d.rank(), 0)};
  for (auto& f : rev) f = affine_act(d, w0a, f);
  star_cache_ = GalleryType::from_reference(datum_, lambda_star, std::move(rev));
  return star_cache_;
}

Gallery minimal_gallery(const RootDatumPtr& datum, const Coweight& lambda) {
  return GalleryType::for_weight(datum, lambda)->reference_gallery();
}

Gallery gallery_from_words(const GalleryTypePtr& type,
                           const std::vector<std::vector<uint8_t>>& words) {
  const RootDatum& d = type->datum();
  if ((int)words.size() != type->p() + 1) throw Error("wrong number of coset words");
  Gallery g;
  g.type = type;
  g.words = words;
  AffineElement acc = affine_identity(d);
  for (int j = 0; j <= type->p(); ++j) {
    const auto& pos = type->positions()[j];
    const GalleryType::CosetRep* rep = nullptr;
    for (const auto& r : pos.reps)
      if (r.word == words[j]) {
        rep = &r;
        break;
      }
    if (!rep) throw Error("invalid coset word at position " + std::to_string(j));
    g.faces.push_back(affine_act(d, acc, pos.fund_small));
    g.faces.push_back(affine_act(d, acc, rep->large_image));
    acc = affine_multiply(d, acc, rep->g);
  }
  g.faces.push_back(affine_act(d, acc, type->fund_target()));
  g.endpoint = vertex_coweight(g.faces.back(), d);
  return g;
}

Gallery gallery_from_faces(const GalleryTypePtr& type, std::vector<Face> faces) {
  const RootDatum& d = type->datum();
  if ((int)faces.size() != 2 * type->p() + 3) throw Error("wrong face count for type");
  Gallery g;
  g.type = type;
  g.faces = std::move(faces);
  AffineElement g_inv = affine_identity(d);
  for (int j = 0; j <= type->p(); ++j) {
    Face local = affine_act(d, g_inv, g.large_face(j));
    const auto& pos = type->positions()[j];
    const GalleryType::CosetRep* rep = nullptr;
    for (const auto& r : pos.reps)
      if (r.large_image == local) {
        rep = &r;
        break;
      }
    if (!rep) throw Error("face sequence does not have the prescribed type");
    g.words.push_back(rep->word);
    g_inv = affine_multiply(d, rep->g_inv, g_inv);
  }
  g.endpoint = vertex_coweight(g.faces.back(), d);
  return g;
}

namespace {

struct DfsState {
  const GalleryType& T;
  const RootDatum& d;
  Filter filter;
  const std::function<bool(const Gallery&)>& visit;
  std::vector<Face> faces;
  std::vector<std::vector<uint8_t>> words;
  Gallery scratch;  // handed to the visitor by reference, reused across leaves
  bool stop = false;

  bool needs_positive() const {
    return filter == Filter::PositivelyFolded || filter == Filter::LS;
  }

  // True when every small face so far keeps all simple-root levels >= 0.
  bool small_face_dominant(const Face& f) const {
    for (int i = 0; i < d.rank(); ++i)
      if (f.sig[i].on && f.sig[i].level < 0) return false;
    return true;
  }

  void recurse(int j, const AffineElement& acc) {
    if (stop) return;
    if (j > T.p()) {
      Face target = affine_act(d, acc, T.fund_target());
      if (filter == Filter::Dominant && !small_face_dominant(target)) return;
      scratch.faces = std::move(faces);
      scratch.faces.push_back(std::move(target));
      scratch.words = words;
      scratch.endpoint = vertex_coweight(scratch.faces.back(), d);
      bool keep = true;
      if (filter != Filter::LS || dimension(scratch) == ls_bound(scratch))
        keep = visit(scratch);
      scratch.faces.pop_back();
      faces = std::move(scratch.faces);
      if (!keep) stop = true;
      return;
    }
    const auto& pos = T.positions()[j];
    Face small = affine_act(d, acc, pos.fund_small);
    if (filter == Filter::Dominant && !small_face_dominant(small)) return;
    Face unfolded;  // image of tau^m, for positivity tests
    if (j >= 1 && needs_positive())
      unfolded = affine_act(d, acc, pos.reps[pos.tau_index].large_image);
    faces.push_back(small);
    for (size_t ri = 0; ri < pos.reps.size(); ++ri) {
      if (stop) break;
      const auto& rep = pos.reps[ri];
      Face large = affine_act(d, acc, rep.large_image);
      if (j >= 1 && needs_positive() && ri != pos.tau_index) {
        if (!find_fold_sequence(d, faces.back(), unfolded, large, true)) continue;
      }
      faces.push_back(std::move(large));
      words.push_back(rep.word);
      recurse(j + 1, affine_multiply(d, acc, rep.g));
      words.pop_back();
      faces.pop_back();
    }
    faces.pop_back();
  }
};

}  // namespace

void enumerate_galleries(const GalleryTypePtr& type, Filter filter, uint64_t cap,
                         const std::function<bool(const Gallery&)>& visit) {
  if (cap && type->count_all() > cap)
    throw CapExceeded(type->datum().type_name() + " has " +
                      (type->count_all() == UINT64_MAX ? std::string(">2^64")
                                                       : std::to_string(type->count_all())) +
                      " galleries, cap " + std::to_string(cap));
  DfsState state{*type, type->datum(), filter, visit, {}, {}, {}};
  state.scratch.type = type;
  state.recurse(0, affine_identity(type->datum()));
}

std::vector<Gallery> enumerate_all(const GalleryTypePtr& type, Filter filter, uint64_t cap) {
  std::vector<Gallery> out;
  enumerate_galleries(type, filter, cap, [&](const Gallery& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

int dimension(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  int count = 0;
  for (int j = 0; j <= g.p(); ++j) {
    for (const Wall& h : separating_walls_at(d, g.small_face(j), g.large_face(j)))
      if (separates_from_minus_infinity(h, g.large_face(j))) ++count;
  }
  return count;
}

long long ls_bound(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  Coweight sum = g.type->lambda();
  for (int i = 0; i < d.rank(); ++i) sum.coords[i] += g.endpoint.coords[i];
  Rat b = d.pairing_rho(sum);
  assert(b.get_den() == 1);
  return b.get_num().get_si();
}

bool is_minimal(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  // Walls separating the origin side from the endpoint.
  std::set<Wall> expected;
  for (size_t b = 0; b < d.num_positive_roots(); ++b) {
    long long v = d.pairing(g.endpoint, b);
    if (v > 0)
      for (long long m = 0; m < v; ++m) expected.insert(Wall{(int)b, (int)m});
    else if (v < 0)
      for (long long m = v + 1; m <= 0; ++m) expected.insert(Wall{(int)b, (int)m});
  }
  std::set<Wall> crossed;
  for (int j = 0; j <= g.p(); ++j) {
    for (const Wall& h : separating_walls_at(d, g.small_face(j), g.large_face(j))) {
      if (!crossed.insert(h).second) return false;  // sets not pairwise disjoint
    }
  }
  return crossed == expected;
}

bool is_folded_at(const Gallery& g, int j) {
  const auto& pos = g.type->positions()[j];
  return j >= 1 && g.words[j] != pos.reps[pos.tau_index].word;
}

bool is_positively_folded(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  AffineElement acc = affine_identity(d);
  for (int j = 0; j <= g.p(); ++j) {
    const auto& pos = g.type->positions()[j];
    if (is_folded_at(g, j)) {
      Face unfolded = affine_act(d, acc, pos.reps[pos.tau_index].large_image);
      if (!find_fold_sequence(d, g.small_face(j), unfolded, g.large_face(j), true))
        return false;
    }
    for (const auto& r : pos.reps)
      if (r.word == g.words[j]) {
        acc = affine_multiply(d, acc, r.g);
        break;
      }
  }
  return true;
}

bool is_ls(const Gallery& g) {
  if (!is_positively_folded(g)) throw NotPositivelyFolded();
  return dimension(g) == ls_bound(g);
}

std::vector<WeylElement> companion(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  const auto& stab = g.type->lambda_stabilizer();
  std::vector<WeylElement> sigma;
  AffineElement acc = affine_identity(d);
  for (int j = 0; j <= g.p(); ++j) {
    const auto& pos = g.type->positions()[j];
    const GalleryType::CosetRep* rep = nullptr;
    for (const auto& r : pos.reps)
      if (r.word == g.words[j]) {
        rep = &r;
        break;
      }
    if (j == 0) {
      sigma.push_back(d.coset_min_rep(rep->g.finite, stab));
    } else if (!is_folded_at(g, j)) {
      sigma.push_back(sigma.back());
    } else {
      Face unfolded = affine_act(d, acc, pos.reps[pos.tau_index].large_image);
      auto path = find_fold_sequence(d, g.small_face(j), unfolded, g.large_face(j), true);
      if (!path) path = find_fold_sequence(d, g.small_face(j), unfolded, g.large_face(j), false);
      assert(path);
      WeylElement s = sigma.back();
      for (const Wall& h : *path) s = d.multiply(d.root_reflection(h.root), s);
      sigma.push_back(d.coset_min_rep(s, stab));
    }
    acc = affine_multiply(d, acc, rep->g);
  }
  return sigma;
}

namespace {

/// Chains of reflections around the small face whose companion classes drop
/// length by exactly one per step, composed so that the first chain step acts
/// first on the unfolded face.
bool chain_search(const RootDatum& d, const std::vector<Wall>& walls, const std::set<int>& stab,
                  const Face& target, const Face& current, const WeylElement& tau,
                  WeylElement* out) {
  if (current == target) {
    *out = tau;
    return true;
  }
  size_t len = tau.length();
  if (len == 0) return false;
  for (const Wall& h : walls) {
    WeylElement next = d.coset_min_rep(d.multiply(d.root_reflection(h.root), tau), stab);
    if (next.length() + 1 != len) continue;
    if (side_of_wall(current, h) == Side::In) continue;
    Face image = reflect(d, h, current);
    if (chain_search(d, walls, stab, target, image, next, out)) return true;
  }
  return false;
}

}  // namespace

bool is_combinatorial_ls(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  const auto& stab = g.type->lambda_stabilizer();
  AffineElement acc = affine_identity(d);
  WeylElement sigma;
  for (int j = 0; j <= g.p(); ++j) {
    const auto& pos = g.type->positions()[j];
    const GalleryType::CosetRep* rep = nullptr;
    for (const auto& r : pos.reps)
      if (r.word == g.words[j]) {
        rep = &r;
        break;
      }
    if (j == 0) {
      sigma = d.coset_min_rep(rep->g.finite, stab);
    } else if (is_folded_at(g, j)) {
      Face unfolded = affine_act(d, acc, pos.reps[pos.tau_index].large_image);
      std::vector<Wall> walls = walls_through(d, g.small_face(j));
      WeylElement next;
      if (!chain_search(d, walls, stab, g.large_face(j), unfolded, sigma, &next)) return false;
      sigma = next;
    }
    acc = affine_multiply(d, acc, rep->g);
  }
  return true;
}

Gallery star(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  Coweight minus_nu = g.endpoint;
  for (auto& c : minus_nu.coords) c = -c;
  std::vector<Face> rev;
  for (auto it = g.faces.rbegin(); it != g.faces.rend(); ++it)
    rev.push_back(translate_coweight(d, minus_nu, *it));
  return gallery_from_faces(g.type->starred(), std::move(rev));
}

std::pair<int, int> cell_shape(const Gallery& g) {
  const RootDatum& d = g.type->datum();
  static const TypeSet empty_type{};
  Face fund_alcove = fundamental_face(d, empty_type);
  AffineElement acc = affine_identity(d);
  int a = 0, b = 0;
  for (int j = 0; j <= g.p(); ++j) {
    Face base;  // the alcove marking the incoming side at this position
    if (j >= 1) base = affine_act(d, acc, fund_alcove);
    for (const Wall& h : separating_walls_at(d, g.small_face(j), g.large_face(j))) {
      if (!separates_from_minus_infinity(h, g.large_face(j))) continue;
      if (j == 0) {
        ++a;
      } else {
        // Crossing walls separate the base alcove from the large face.
        if (side_of_wall(base, h) != side_of_wall(g.large_face(j), h))
          ++a;
        else
          ++b;
      }
    }
    const auto& pos = g.type->positions()[j];
    for (const auto& r : pos.reps)
      if (r.word == g.words[j]) {
        acc = affine_multiply(d, acc, r.g);
        break;
      }
  }
  return {a, b};
}

std::vector<std::pair<Gallery, Gallery>> folding_order_edges(const GalleryTypePtr& type,
                                                             uint64_t cap) {
  std::vector<std::pair<Gallery, Gallery>> edges;
  enumerate_galleries(type, Filter::PositivelyFolded, cap, [&](const Gallery& g) {
    for (int k = 1; k <= g.p(); ++k) {
      if (!is_folded_at(g, k)) continue;
      bool tail_unfolded = true;
      for (int j = k + 1; j <= g.p(); ++j)
        if (is_folded_at(g, j)) {
          tail_unfolded = false;
          break;
        }
      if (!tail_unfolded) continue;
      auto words = g.words;
      const auto& pos = type->positions()[k];
      words[k] = pos.reps[pos.tau_index].word;
      edges.emplace_back(gallery_from_words(type, words), g);
    }
    return true;
  });
  return edges;
}

Gallery weyl_translate(const Gallery& g, const WeylElement& w) {
  const RootDatum& d = g.type->datum();
  AffineElement wa{w, IntVec(d.rank(), 0)};
  std::vector<Face> faces;
  for (const auto& f : g.faces) faces.push_back(affine_act(d, wa, f));
  return gallery_from_faces(g.type, std::move(faces));
}

std::string gallery_to_json(const Gallery& g) {
  nlohmann::json j;
  j["cartan"] = {{"series", std::string(1, g.type->datum().series())},
                 {"rank", g.type->datum().rank()}};
  j["lambda"] = g.type->lambda().coords;
  std::vector<std::vector<int>> words;
  for (const auto& w : g.words) words.emplace_back(w.begin(), w.end());
  j["words"] = words;
  j["endpoint"] = g.endpoint.coords;
  return j.dump();
}

Gallery gallery_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad gallery JSON: ") + e.what());
  }
  try {
    std::string series = j.at("cartan").at("series").get<std::string>();
    int rank = j.at("cartan").at("rank").get<int>();
    if (series.size() != 1) throw UnknownCartanType(series);
    auto datum = std::make_shared<const RootDatum>(RootDatum::build(series[0], rank));
    Coweight lambda{j.at("lambda").get<IntVec>()};
    if ((int)lambda.coords.size() != rank) throw Error("lambda has wrong rank");
    auto type = GalleryType::for_weight(datum, lambda);
    std::vector<std::vector<uint8_t>> words;
    for (const auto& w : j.at("words")) {
      std::vector<uint8_t> word;
      for (const auto& letter : w) word.push_back((uint8_t)letter.get<int>());
      words.push_back(word);
    }
    Gallery g = gallery_from_words(type, words);
    if (j.count("endpoint")) {
      Coweight endpoint{j.at("endpoint").get<IntVec>()};
      if (!(endpoint == g.endpoint)) throw Error("endpoint does not match words");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad gallery JSON: ") + e.what());
  }
}

}  // namespace gallerion
