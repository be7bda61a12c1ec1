#include "gallerion/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

namespace gallerion {
namespace oracle {

namespace {

// W-invariant inner product on the ambient space: B(x,y) = sum over positive
// roots of <x,beta><y,beta>.
Rat invariant_form(const RootDatum& d, const RatVec& x, const RatVec& y) {
  Rat total(0);
  for (size_t b = 0; b < d.num_positive_roots(); ++b) total += d.pairing(x, b) * d.pairing(y, b);
  return total;
}

RatVec to_rat(const Coweight& c) { return to_ratvec(c.coords); }

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// All weights mu with mu <= lambda in the dominance order, i.e. lambda - mu a
/// nonnegative integral combination of simple coroots, and mu >= w0(lambda).
std::vector<Coweight> weight_box(const RootDatum& d, const Coweight& lambda) {
  Coweight low = d.weyl_act(d.longest_element(), lambda);
  Coweight span;
  span.coords.resize(d.rank());
  for (int i = 0; i < d.rank(); ++i) span.coords[i] = lambda.coords[i] - low.coords[i];
  IntVec bound;
  bool ok = d.coroot_coordinates(span, &bound);
  assert(ok);
  (void)ok;
  std::vector<Coweight> out;
  IntVec m(d.rank(), 0);
  const auto& C = d.cartan();
  for (;;) {
    Coweight mu = lambda;
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j) mu.coords[j] -= m[i] * C[i][j];
    out.push_back(mu);
    int pos = 0;
    while (pos < d.rank()) {
      if (++m[pos] <= bound[pos]) break;
      m[pos] = 0;
      ++pos;
    }
    if (pos == d.rank()) break;
  }
  return out;
}

struct FreudenthalCache {
  std::mutex mutex;
  std::map<std::pair<std::string, IntVec>, WeightMultiplicity> table;
};

FreudenthalCache& cache() {
  static FreudenthalCache c;
  return c;
}

}  // namespace

WeightMultiplicity freudenthal_character(const RootDatum& d, const Coweight& lambda) {
  if (!d.is_dominant(lambda)) throw NotDominant();
  auto key = std::make_pair(d.type_name(), lambda.coords);
  {
    std::lock_guard<std::mutex> lock(cache().mutex);
    auto it = cache().table.find(key);
    if (it != cache().table.end()) return it->second;
  }

  // Dominant weights of the module, ordered by decreasing dominance height.
  std::vector<Coweight> dominant;
  for (const auto& mu : weight_box(d, lambda))
    if (d.is_dominant(mu)) dominant.push_back(mu);
  auto ht = [&](const Coweight& mu) {
    Coweight diff;
    diff.coords.resize(d.rank());
    for (int i = 0; i < d.rank(); ++i) diff.coords[i] = lambda.coords[i] - mu.coords[i];
    IntVec c;
    bool ok = d.coroot_coordinates(diff, &c);
    assert(ok);
    (void)ok;
    long long h = 0;
    for (long long v : c) h += v;
    return h;
  };
  std::sort(dominant.begin(), dominant.end(), [&](const Coweight& a, const Coweight& b) {
    long long ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const RatVec rho_check = d.rho_check();
  RatVec top = add(to_rat(lambda), rho_check);
  Rat top_norm = invariant_form(d, top, top);

  std::map<Coweight, long long> mult;  // on dominant weights only
  auto multiplicity = [&](const Coweight& mu) -> long long {
    Coweight rep = d.dominant_representative(mu);
    auto it = mult.find(rep);
    return it == mult.end() ? 0 : it->second;
  };

  for (const auto& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    RatVec shifted = add(to_rat(mu), rho_check);
    Rat denom = top_norm - invariant_form(d, shifted, shifted);
    assert(denom > 0);
    Rat sum(0);
    for (size_t b = 0; b < d.num_positive_roots(); ++b) {
      const IntVec& cv = d.coroot_ambient(b);
      RatVec coroot = to_ratvec(cv);
      for (long long k = 1;; ++k) {
        Coweight up = mu;
        for (int i = 0; i < d.rank(); ++i) up.coords[i] += k * cv[i];
        if (!d.dominance_leq(up, lambda)) break;
        long long m = multiplicity(up);
        if (m) sum += rat(m) * invariant_form(d, to_rat(up), coroot);
      }
    }
    Rat value = 2 * sum / denom;
    value.canonicalize();
    assert(value.get_den() == 1);
    mult[mu] = value.get_num().get_si();
  }

  WeightMultiplicity result;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const Coweight& w : d.weyl_orbit(mu)) result[w] = m;
  }
  {
    std::lock_guard<std::mutex> lock(cache().mutex);
    cache().table[key] = result;
  }
  return result;
}

namespace {

/// Number of ways to write the coweight as a nonnegative integral sum of
/// positive coroots, by recursion over the coroot list.
long long coroot_partitions(const RootDatum& d, const IntVec& target, size_t from,
                            std::map<std::pair<IntVec, size_t>, long long>& memo) {
  bool zero = std::all_of(target.begin(), target.end(), [](long long v) { return v == 0; });
  if (zero) return 1;
  if (from >= d.num_positive_roots()) return 0;
  auto key = std::make_pair(target, from);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long total = 0;
  const IntVec& cv = d.coroot_ambient(from);
  IntVec left = target;
  for (long long k = 0;; ++k) {
    total += coroot_partitions(d, left, from + 1, memo);
    // Subtract one more copy of the coroot while it can still be canceled.
    for (int i = 0; i < d.rank(); ++i) left[i] -= cv[i];
    IntVec c;
    Coweight cw{left};
    if (!d.coroot_coordinates(cw, &c)) break;
    bool nonneg = std::all_of(c.begin(), c.end(), [](long long v) { return v >= 0; });
    if (!nonneg) break;
  }
  memo[key] = total;
  return total;
}

}  // namespace

WeightMultiplicity alternating_character(const RootDatum& d, const Coweight& lambda) {
  if (!d.is_dominant(lambda)) throw NotDominant();
  // Enumerate W via the orbit of a regular coweight alongside signs.
  struct Elt {
    WeylElement w;
    int sign;
  };
  std::vector<Elt> group;
  {
    std::vector<WeylElement> frontier{d.identity()};
    std::set<IntVec> seen{d.identity().image};
    group.push_back({d.identity(), 1});
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const auto& w : frontier)
        for (int i = 1; i <= d.rank(); ++i) {
          WeylElement ws = d.multiply(w, d.simple_reflection(i));
          if (seen.insert(ws.image).second) {
            group.push_back({ws, (int)(ws.length() % 2 ? -1 : 1)});
            next.push_back(ws);
          }
        }
      frontier = std::move(next);
    }
  }

  // rho_check is likely non-integral; work with doubled coordinates.
  IntVec rho2(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    Rat v = d.rho_check()[i] * 2;
    assert(v.get_den() == 1);
    rho2[i] = v.get_num().get_si();
  }

  std::map<std::pair<IntVec, size_t>, long long> memo;
  WeightMultiplicity result;
  for (const auto& mu : weight_box(d, lambda)) {
    long long total = 0;
    for (const auto& [w, sign] : group) {
      // w(lambda + rho^vee) - (mu + rho^vee), in doubled coordinates.
      Coweight lam2{IntVec(d.rank())};
      for (int i = 0; i < d.rank(); ++i) lam2.coords[i] = 2 * lambda.coords[i] + rho2[i];
      Coweight im = d.weyl_act(w, lam2);
      IntVec target(d.rank());
      bool half = false;
      for (int i = 0; i < d.rank(); ++i) {
        long long v = im.coords[i] - (2 * mu.coords[i] + rho2[i]);
        if (v % 2 != 0) half = true;
        target[i] = v / 2;
      }
      if (half) continue;
      IntVec c;
      if (!d.coroot_coordinates(Coweight{target}, &c)) continue;
      if (!std::all_of(c.begin(), c.end(), [](long long v) { return v >= 0; })) continue;
      total += sign * coroot_partitions(d, target, 0, memo);
    }
    if (total != 0) result[mu] = total;
  }
  return result;
}

long long weyl_dim(const RootDatum& d, const Coweight& lambda) {
  if (!d.is_dominant(lambda)) throw NotDominant();
  // Product over positive roots of <lambda + rho^vee, beta> / <rho^vee, beta>.
  Rat dim(1);
  RatVec shifted = add(to_rat(lambda), d.rho_check());
  for (size_t b = 0; b < d.num_positive_roots(); ++b)
    dim *= d.pairing(shifted, b) / d.pairing(d.rho_check(), b);
  dim.canonicalize();
  assert(dim.get_den() == 1);
  return dim.get_num().get_si();
}

std::vector<Gallery> brute_force_ls(const GalleryTypePtr& type, uint64_t cap) {
  std::vector<Gallery> out;
  enumerate_galleries(type, Filter::All, cap, [&](const Gallery& g) {
    if (is_positively_folded(g) && dimension(g) == ls_bound(g)) out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace oracle
}  // namespace gallerion
