#include "gallerion/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace gallerion {

namespace {

std::vector<std::vector<int>> cartan_matrix(char series, int rank) {
  auto chain = [&](int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
  };
  switch (series) {
    case 'A':
      if (rank < 1) throw UnknownCartanType("A" + std::to_string(rank));
      return chain(rank);
    case 'B': {
      if (rank < 2) throw UnknownCartanType("B" + std::to_string(rank));
      auto c = chain(rank);
      c[rank - 1][rank - 2] = -2;  // alpha_rank short
      return c;
    }
    case 'C': {
      if (rank < 2) throw UnknownCartanType("C" + std::to_string(rank));
      auto c = chain(rank);
      c[rank - 2][rank - 1] = -2;  // alpha_rank long
      return c;
    }
    case 'D': {
      if (rank < 3) throw UnknownCartanType("D" + std::to_string(rank));
      auto c = chain(rank - 1);
      c.resize(rank);
      for (auto& row : c) row.resize(rank, 0);
      c[rank - 1][rank - 1] = 2;
      c[rank - 1][rank - 3] = c[rank - 3][rank - 1] = -1;
      return c;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw UnknownCartanType("E" + std::to_string(rank));
      // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-...
      auto c = std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) c[i][i] = 2;
      auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      link(4, 5);
      for (int i = 5; i < rank; ++i) link(i, i + 1);
      return c;
    }
    case 'F': {
      if (rank != 4) throw UnknownCartanType("F" + std::to_string(rank));
      auto c = chain(4);
      c[2][1] = -2;  // <alpha_3^vee, alpha_2> = -2 (alpha_3 short, alpha_2 long)
      return c;
    }
    case 'G': {
      if (rank != 2) throw UnknownCartanType("G" + std::to_string(rank));
      // alpha_1 short: <alpha_1^vee, alpha_2> = -3.
      return {{2, -3}, {-1, 2}};
    }
    default:
      throw UnknownCartanType(std::string(1, series) + std::to_string(rank));
  }
}

int height(const std::vector<int>& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

bool is_positive(const std::vector<int>& root) {
  bool any = false;
  for (int c : root) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

}  // namespace

RootDatum RootDatum::build(const std::string& type) {
  if (type.size() < 2) throw UnknownCartanType(type);
  char series = type[0];
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(type.substr(1), &pos);
    if (pos + 1 != type.size()) throw UnknownCartanType(type);
  } catch (const std::logic_error&) {
    throw UnknownCartanType(type);
  }
  return build(series, rank);
}

RootDatum RootDatum::build(char series, int rank) {
  RootDatum d;
  d.series_ = series;
  d.rank_ = rank;
  d.cartan_ = cartan_matrix(series, rank);
  const auto& C = d.cartan_;

  // Scaled generic base point (1, 1/2, 1/4, ...) * 2^(rank-1).
  d.base_den_ = 1LL << (rank - 1);
  d.base_scaled_.resize(rank);
  for (int i = 0; i < rank; ++i) d.base_scaled_[i] = 1LL << (rank - 1 - i);

  // Close the simple roots under the simple reflections, tracking coroots in
  // both ambient and simple-coroot coordinates.
  struct Entry {
    std::vector<int> root;
    IntVec co_amb;
    IntVec co_lat;
  };
  std::map<std::vector<int>, Entry> seen;
  std::queue<Entry> work;
  for (int i = 0; i < rank; ++i) {
    Entry e;
    e.root = std::vector<int>(rank, 0);
    e.root[i] = 1;
    e.co_amb = IntVec(C[i].begin(), C[i].end());
    e.co_lat = IntVec(rank, 0);
    e.co_lat[i] = 1;
    seen[e.root] = e;
    work.push(e);
  }
  while (!work.empty()) {
    Entry e = work.front();
    work.pop();
    for (int i = 0; i < rank; ++i) {
      Entry f;
      // s_i on the root (simple-root coordinates).
      long long pair = 0;
      for (int j = 0; j < rank; ++j) pair += (long long)C[i][j] * e.root[j];
      f.root = e.root;
      f.root[i] -= (int)pair;
      // s_i on the coroot, ambient coordinates: x -> x - x_i * alpha_i^vee.
      f.co_amb = e.co_amb;
      long long xi = e.co_amb[i];
      for (int j = 0; j < rank; ++j) f.co_amb[j] -= xi * C[i][j];
      // s_i on the coroot, simple-coroot coordinates.
      f.co_lat = e.co_lat;
      long long ci = 0;
      for (int j = 0; j < rank; ++j) ci += (long long)C[j][i] * e.co_lat[j];
      f.co_lat[i] -= ci;
      if (seen.emplace(f.root, f).second) work.push(f);
    }
  }

  std::vector<Entry> pos;
  for (auto& [root, e] : seen)
    if (is_positive(root)) pos.push_back(e);
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    int ha = height(a.root), hb = height(b.root);
    if (ha != hb) return ha < hb;
    return a.root < b.root;
  });
  // Keep the simple roots at indices 0..rank-1 in their natural order.
  std::stable_sort(pos.begin(), pos.begin() + rank, [](const Entry& a, const Entry& b) {
    auto support = [](const Entry& e) {
      for (size_t i = 0; i < e.root.size(); ++i)
        if (e.root[i]) return i;
      return e.root.size();
    };
    return support(a) < support(b);
  });
  for (auto& e : pos) {
    d.positive_roots_.push_back(e.root);
    d.coroot_ambient_.push_back(e.co_amb);
    d.coroot_lattice_.push_back(e.co_lat);
  }
  d.highest_root_index_ = d.positive_roots_.size() - 1;

  d.rho_.assign(rank, Rat(0));
  for (const auto& r : d.positive_roots_)
    for (int j = 0; j < rank; ++j) d.rho_[j] += rat(r[j], 2);
  d.rho_check_.assign(rank, Rat(0));
  for (const auto& c : d.coroot_ambient_)
    for (int j = 0; j < rank; ++j) d.rho_check_[j] += rat(c[j], 2);

  // Inverse of the transposed Cartan matrix, for coroot coordinates.
  int n = rank;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(C[j][i]);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    assert(piv >= 0);
    std::swap(m[col], m[piv]);
    Rat inv = Rat(1) / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  d.cartan_t_inverse_.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.cartan_t_inverse_[i][j] = m[i][n + j];

  return d;
}

Rat RootDatum::pairing(const RatVec& x, size_t beta) const {
  Rat s(0);
  const auto& r = positive_roots_[beta];
  for (int j = 0; j < rank_; ++j)
    if (r[j] != 0) s += Rat(r[j]) * x[j];
  return s;
}

long long RootDatum::pairing(const Coweight& x, size_t beta) const {
  long long s = 0;
  const auto& r = positive_roots_[beta];
  for (int j = 0; j < rank_; ++j) s += (long long)r[j] * x.coords[j];
  return s;
}

Rat RootDatum::pairing_rho(const RatVec& x) const {
  Rat s(0);
  for (int j = 0; j < rank_; ++j) s += rho_[j] * x[j];
  return s;
}

Rat RootDatum::pairing_rho(const Coweight& x) const {
  Rat s(0);
  for (int j = 0; j < rank_; ++j) s += rho_[j] * rat(x.coords[j]);
  return s;
}

void RootDatum::act_scaled(int i, IntVec& x) const {
  long long xi = x[i - 1];
  for (int j = 0; j < rank_; ++j) x[j] -= xi * cartan_[i - 1][j];
}

void RootDatum::canonicalize(WeylElement& w) const {
  w.word.clear();
  IntVec x = w.image;
  for (;;) {
    int desc = 0;
    for (int i = 1; i <= rank_; ++i)
      if (x[i - 1] < 0) {
        desc = i;
        break;
      }
    if (desc == 0) break;
    w.word.push_back((uint8_t)desc);
    act_scaled(desc, x);
  }
  assert(x == base_scaled_);
}

WeylElement RootDatum::identity() const { return WeylElement{base_scaled_, {}}; }

WeylElement RootDatum::simple_reflection(int i) const {
  WeylElement w;
  w.image = base_scaled_;
  act_scaled(i, w.image);
  w.word = {(uint8_t)i};
  return w;
}

WeylElement RootDatum::root_reflection(size_t b) const {
  // s_beta(x) = x - <x,beta> beta^vee on the scaled base point.
  WeylElement w;
  w.image = base_scaled_;
  long long pair = 0;
  const auto& r = positive_roots_[b];
  for (int j = 0; j < rank_; ++j) pair += (long long)r[j] * base_scaled_[j];
  const auto& cv = coroot_ambient_[b];
  for (int j = 0; j < rank_; ++j) w.image[j] -= pair * cv[j];
  canonicalize(w);
  return w;
}

WeylElement RootDatum::from_word(const std::vector<uint8_t>& word) const {
  WeylElement w;
  w.image = base_scaled_;
  for (auto it = word.rbegin(); it != word.rend(); ++it) act_scaled(*it, w.image);
  canonicalize(w);
  return w;
}

WeylElement RootDatum::multiply(const WeylElement& u, const WeylElement& v) const {
  WeylElement w;
  w.image = v.image;
  for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) act_scaled(*it, w.image);
  canonicalize(w);
  return w;
}

WeylElement RootDatum::inverse(const WeylElement& w) const {
  std::vector<uint8_t> rev(w.word.rbegin(), w.word.rend());
  return from_word(rev);
}

WeylElement RootDatum::longest_element() const {
  // Drive the base point antidominant.
  WeylElement w;
  w.image = base_scaled_;
  std::vector<uint8_t> letters;
  for (;;) {
    int asc = 0;
    for (int i = 1; i <= rank_; ++i)
      if (w.image[i - 1] > 0) {
        asc = i;
        break;
      }
    if (asc == 0) break;
    act_scaled(asc, w.image);
    letters.push_back((uint8_t)asc);
  }
  canonicalize(w);
  return w;
}

RatVec RootDatum::weyl_act(const WeylElement& w, const RatVec& x) const {
  RatVec y = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it;
    Rat xi = y[i - 1];
    if (xi == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (cartan_[i - 1][j] != 0) y[j] -= xi * Rat(cartan_[i - 1][j]);
  }
  return y;
}

Coweight RootDatum::weyl_act(const WeylElement& w, const Coweight& x) const {
  IntVec y = x.coords;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it;
    long long xi = y[i - 1];
    for (int j = 0; j < rank_; ++j) y[j] -= xi * cartan_[i - 1][j];
  }
  return Coweight{y};
}

std::vector<int> RootDatum::act_on_root(const WeylElement& w, const std::vector<int>& root) const {
  std::vector<int> r = root;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it;
    long long pair = 0;
    for (int j = 0; j < rank_; ++j) pair += (long long)cartan_[i - 1][j] * r[j];
    r[i - 1] -= (int)pair;
  }
  return r;
}

IntVec RootDatum::act_on_coroot_coords(const WeylElement& w, const IntVec& c) const {
  IntVec m = c;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it;
    long long ci = 0;
    for (int j = 0; j < rank_; ++j) ci += (long long)cartan_[j][i - 1] * m[j];
    m[i - 1] -= ci;
  }
  return m;
}

WeylElement RootDatum::coset_min_rep(const WeylElement& w, const std::set<int>& stabilizer) const {
  WeylElement m = w;
  for (;;) {
    bool changed = false;
    for (int i : stabilizer) {
      // i is a right descent iff w(alpha_i) < 0 iff (w^-1 base)_i < 0.
      WeylElement ws = multiply(m, simple_reflection(i));
      if (ws.length() < m.length()) {
        m = ws;
        changed = true;
        break;
      }
    }
    if (!changed) return m;
  }
}

bool RootDatum::bruhat_leq(const WeylElement& u_in, const WeylElement& v_in,
                           const std::set<int>& modulo) const {
  WeylElement u = modulo.empty() ? u_in : coset_min_rep(u_in, modulo);
  WeylElement v = modulo.empty() ? v_in : coset_min_rep(v_in, modulo);
  // Lifting property recursion on the length of v.
  for (;;) {
    if (u.length() > v.length()) return false;
    if (u.is_identity()) return true;
    int i = v.word.front();  // a left descent of v
    WeylElement si = simple_reflection(i);
    WeylElement su = multiply(si, u);
    WeylElement sv = multiply(si, v);
    if (su.length() < u.length()) u = su;
    v = sv;
  }
}

bool RootDatum::is_dominant(const Coweight& x) const {
  for (int i = 0; i < rank_; ++i)
    if (x.coords[i] < 0) return false;
  return true;
}

bool RootDatum::coroot_coordinates(const Coweight& x, IntVec* out) const {
  IntVec res(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rat s(0);
    for (int j = 0; j < rank_; ++j) s += cartan_t_inverse_[i][j] * rat(x.coords[j]);
    s.canonicalize();
    if (s.get_den() != 1) return false;
    if (!s.get_num().fits_slong_p()) return false;
    res[i] = s.get_num().get_si();
  }
  if (out) *out = res;
  return true;
}

bool RootDatum::dominance_leq(const Coweight& nu, const Coweight& lambda) const {
  Coweight diff;
  diff.coords.resize(rank_);
  for (int i = 0; i < rank_; ++i) diff.coords[i] = lambda.coords[i] - nu.coords[i];
  IntVec c;
  if (!coroot_coordinates(diff, &c)) return false;
  for (long long v : c)
    if (v < 0) return false;
  return true;
}

std::set<Coweight> RootDatum::weyl_orbit(const Coweight& x) const {
  std::set<Coweight> orbit{x};
  std::queue<Coweight> work;
  work.push(x);
  while (!work.empty()) {
    Coweight c = work.front();
    work.pop();
    for (int i = 1; i <= rank_; ++i) {
      Coweight d = c;
      long long xi = d.coords[i - 1];
      for (int j = 0; j < rank_; ++j) d.coords[j] -= xi * cartan_[i - 1][j];
      if (orbit.insert(d).second) work.push(d);
    }
  }
  return orbit;
}

Coweight RootDatum::dominant_representative(const Coweight& x) const {
  Coweight c = x;
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= rank_; ++i)
      if (c.coords[i - 1] < 0) {
        neg = i;
        break;
      }
    if (neg == 0) return c;
    long long xi = c.coords[neg - 1];
    for (int j = 0; j < rank_; ++j) c.coords[j] -= xi * cartan_[neg - 1][j];
  }
}

std::set<int> RootDatum::stabilizer_generators(const Coweight& lambda) const {
  std::set<int> gens;
  for (int i = 0; i < rank_; ++i)
    if (lambda.coords[i] == 0) gens.insert(i + 1);
  return gens;
}

Coweight RootDatum::fundamental_coweight(int i) const {
  Coweight c = zero();
  c.coords[i - 1] = 1;
  return c;
}

Coweight RootDatum::simple_coroot(int i) const {
  Coweight c;
  c.coords.assign(cartan_[i - 1].begin(), cartan_[i - 1].end());
  return c;
}

Coweight RootDatum::highest_coroot() const {
  Coweight c;
  c.coords = coroot_ambient_[highest_root_index_];
  return c;
}

std::ostream& operator<<(std::ostream& os, const Coweight& c) {
  os << "(";
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (i) os << ",";
    os << c.coords[i];
  }
  return os << ")";
}

std::string word_to_string(const std::vector<uint8_t>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << "*";
    os << "s" << (int)word[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeylElement& w) {
  return os << word_to_string(w.word);
}

}  // namespace gallerion
