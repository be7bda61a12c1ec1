#include "gallerion/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "gallerion/crystal.hpp"
#include "gallerion/folding.hpp"
#include "gallerion/oracle.hpp"

namespace gallerion {
namespace verify {

namespace {

struct Instance {
  RootDatumPtr datum;
  Coweight lambda;
  GalleryTypePtr type;  // built lazily
  // One full enumeration is shared between the checks that need it.
  bool swept = false;
  WeightMultiplicity all_endpoints;
  std::set<std::vector<std::vector<uint8_t>>> ls_by_dimension;  // operator-free path
};

struct Context {
  Options opt;
  std::vector<Instance> instances;
  std::function<int(const Gallery&)> dim;

  const GalleryTypePtr& type_of(Instance& inst) {
    if (!inst.type) inst.type = GalleryType::for_weight(inst.datum, inst.lambda);
    return inst.type;
  }

  const Instance& sweep(Instance& inst) {
    if (!inst.swept) {
      enumerate_galleries(type_of(inst), Filter::All, 0, [&](const Gallery& g) {
        inst.all_endpoints[g.endpoint]++;
        if (is_positively_folded(g) && dimension(g) == ls_bound(g))
          inst.ls_by_dimension.insert(g.words);
        return true;
      });
      inst.swept = true;
    }
    return inst;
  }
};

std::string lambda_str(const Coweight& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string gallery_words_str(const Gallery& g) {
  std::ostringstream os;
  os << "[";
  for (size_t j = 0; j < g.words.size(); ++j) {
    if (j) os << ", ";
    os << word_to_string(g.words[j]);
  }
  os << "]";
  return os.str();
}

std::string instance_str(const Instance& inst) {
  return inst.datum->type_name() + " lambda=" + lambda_str(inst.lambda);
}

std::vector<Instance> build_grid(const Options& opt) {
  std::vector<Instance> out;
  for (const auto& name : opt.grid_types) {
    if (!opt.type_filter.empty() && name != opt.type_filter) continue;
    auto datum = std::make_shared<const RootDatum>(RootDatum::build(name));
    int n = datum->rank();
    IntVec coords(n, 0);
    for (;;) {
      Coweight lambda{coords};
      if (!opt.lambda_filter || *opt.lambda_filter == coords)
        out.push_back(Instance{datum, lambda, nullptr, false, {}, {}});
      int pos = 0;
      while (pos < n) {
        if (++coords[pos] <= opt.max_coordinate) break;
        coords[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
  }
  return out;
}

/// Minimal coset representatives of W/W_lambda.
std::vector<WeylElement> coset_reps_mod_stabilizer(const RootDatum& d, const Coweight& lambda) {
  TypeSet finite;
  for (int i = 1; i <= d.rank(); ++i) finite.insert(i);
  LocalGroup w_group(d, finite);
  std::set<int> stab = d.stabilizer_generators(lambda);
  std::set<WeylElement> reps;
  for (const auto& e : w_group.elements()) reps.insert(d.coset_min_rep(e.g.finite, stab));
  return std::vector<WeylElement>(reps.begin(), reps.end());
}

// --- individual checks ------------------------------------------------------

CheckResult check_sl3_golden(Context&) {
  CheckResult r{"sl3-golden"};
  auto start = std::chrono::steady_clock::now();
  auto datum = std::make_shared<const RootDatum>(RootDatum::build("A2"));
  auto type = GalleryType::for_weight(datum, Coweight{{1, 1}});
  auto galleries = enumerate_all(type, Filter::PositivelyFolded);
  const std::vector<std::vector<std::vector<uint8_t>>> expected = {
      {{}, {0}},        {{1}, {0}},        {{1, 2}, {}},  {{1, 2}, {0}},
      {{1, 2, 1}, {}},  {{1, 2, 1}, {0}},  {{2}, {0}},    {{2, 1}, {}},
      {{2, 1}, {0}},
  };
  std::vector<std::vector<std::vector<uint8_t>>> got;
  for (const auto& g : galleries) got.push_back(g.words);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  r.instances_checked = 1;
  if (got != expected) {
    r.passed = false;
    std::ostringstream os;
    os << "expected the 9 positively folded galleries, got " << got.size() << ":";
    for (const auto& g : galleries) os << " " << gallery_words_str(g);
    r.detail = os.str();
    return r;
  }
  if (ms >= 1000) {
    r.passed = false;
    r.detail = "took " + std::to_string(ms) + " ms (budget 1000 ms)";
    return r;
  }
  r.detail = "9 galleries, word-for-word, in " + std::to_string(ms) + " ms";
  return r;
}

CheckResult check_sl3_zero_weight(Context&) {
  CheckResult r{"sl3-zero-weight"};
  auto start = std::chrono::steady_clock::now();
  auto datum = std::make_shared<const RootDatum>(RootDatum::build("A2"));
  Coweight lambda{{1, 1}};
  auto type = GalleryType::for_weight(datum, lambda);
  auto crystal = build_crystal(type);
  r.instances_checked = 1;
  if (crystal.vertices.size() != 8) {
    r.passed = false;
    r.detail = "LS count " + std::to_string(crystal.vertices.size()) + " != 8";
    return r;
  }
  auto chi = character(crystal);
  auto expected = oracle::freudenthal_character(*datum, lambda);
  if (chi != expected) {
    r.passed = false;
    r.detail = "character differs from the independent recursion";
    return r;
  }
  // Zero-weight multiplicity 2; the six root weights appear once each.
  Coweight zero = datum->zero();
  if (expected.size() != 7 || expected.at(zero) != 2) {
    r.passed = false;
    r.detail = "character support is not {six roots: 1, zero: 2}";
    return r;
  }
  for (const auto& [w, m] : expected)
    if (!(w == zero) && m != 1) {
      r.passed = false;
      r.detail = "character support is not {six roots: 1, zero: 2}";
      return r;
    }
  // Zero-weight galleries and their stratum shapes.
  std::vector<Gallery> zero_pf;
  enumerate_galleries(type, Filter::PositivelyFolded, 0, [&](const Gallery& g) {
    if (g.endpoint == zero) zero_pf.push_back(g);
    return true;
  });
  if (zero_pf.size() != 3) {
    r.passed = false;
    r.detail = "expected 3 positively folded zero-weight galleries";
    return r;
  }
  const std::vector<std::vector<uint8_t>> non_ls_words = {{1, 2, 1}, {}};
  for (const auto& g : zero_pf) {
    auto [a, b] = cell_shape(g);
    bool ls = is_ls(g);
    if (g.words == non_ls_words) {
      if (ls || a != 0 || b != 1) {
        r.passed = false;
        r.detail = gallery_words_str(g) + " expected non-LS with shape (0,1), got (" +
                   std::to_string(a) + "," + std::to_string(b) + ")";
        return r;
      }
    } else {
      if (!ls || a != 1 || b != 1) {
        r.passed = false;
        r.detail = gallery_words_str(g) + " expected LS with shape (1,1), got (" +
                   std::to_string(a) + "," + std::to_string(b) + ")";
        return r;
      }
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (ms >= 1000) {
    r.passed = false;
    r.detail = "took " + std::to_string(ms) + " ms (budget 1000 ms)";
    return r;
  }
  r.detail = "8 LS galleries; character matches; zero-weight shapes (1,1),(1,1),(0,1)";
  return r;
}

CheckResult check_character_equality(Context& ctx) {
  CheckResult r{"character-equality"};
  auto start = std::chrono::steady_clock::now();
  long long total = 0;
  for (auto& inst : ctx.instances) {
    auto crystal = build_crystal(ctx.type_of(inst));
    auto chi = character(crystal);
    auto expected = oracle::freudenthal_character(*inst.datum, inst.lambda);
    ++r.instances_checked;
    total += (long long)crystal.vertices.size();
    if (chi != expected) {
      r.passed = false;
      r.detail = instance_str(inst) + ": crystal character != Freudenthal";
      return r;
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (ms >= 120000) {
    r.passed = false;
    r.detail = "grid took " + std::to_string(ms) + " ms (budget 120000 ms)";
    return r;
  }
  r.detail = std::to_string(total) + " = " + std::to_string(total) + " (" +
             std::to_string(r.instances_checked) + " instances, " + std::to_string(ms) + " ms)";
  return r;
}

CheckResult check_dim_inequality(Context& ctx) {
  CheckResult r{"dim-inequality"};
  long long galleries = 0;
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    ++r.instances_checked;
    bool ok = true;
    std::string bad;
    // The fold-pruned walk makes this affordable on every grid instance.
    enumerate_galleries(type, Filter::PositivelyFolded, 0, [&](const Gallery& g) {
      ++galleries;
      if (ctx.dim(g) > ls_bound(g)) {
        ok = false;
        bad = gallery_words_str(g);
        return false;
      }
      return true;
    });
    if (!ok) {
      r.passed = false;
      r.detail = instance_str(inst) + ": dim > <lambda+nu, rho> at " + bad;
      return r;
    }
  }
  r.detail = "no violations over " + std::to_string(galleries) + " positively folded galleries (" +
             std::to_string(r.instances_checked) + " instances)";
  return r;
}

CheckResult check_extremal_dimensions(Context& ctx) {
  CheckResult r{"extremal-dimensions"};
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    const Gallery& ref = type->reference_gallery();
    const RootDatum& d = *inst.datum;
    Rat two_rho = d.pairing_rho(inst.lambda) * 2;
    ++r.instances_checked;
    if (Rat(ctx.dim(ref)) != two_rho) {
      r.passed = false;
      r.detail = instance_str(inst) + ": dim gamma_lambda != <lambda, 2 rho>";
      return r;
    }
    for (const WeylElement& w : coset_reps_mod_stabilizer(d, inst.lambda)) {
      Gallery moved = weyl_translate(ref, w);
      Coweight sum = inst.lambda;
      Coweight im = d.weyl_act(w, inst.lambda);
      for (int i = 0; i < d.rank(); ++i) sum.coords[i] += im.coords[i];
      if (Rat(ctx.dim(moved)) != d.pairing_rho(sum)) {
        r.passed = false;
        r.detail = instance_str(inst) + ": dim of the " + word_to_string(w.word) +
                   "-translate != <lambda + w(lambda), rho>";
        return r;
      }
      if (!is_minimal(moved) || !is_positively_folded(moved)) {
        r.passed = false;
        r.detail = instance_str(inst) + ": translate " + word_to_string(w.word) +
                   " is not minimal/positively folded";
        return r;
      }
    }
  }
  r.detail = "extremal dimensions match (" + std::to_string(r.instances_checked) + " instances)";
  return r;
}

CheckResult check_ls_agreement(Context& ctx) {
  CheckResult r{"ls-agreement"};
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    ++r.instances_checked;
    std::set<std::vector<std::vector<uint8_t>>> by_dim, by_chain, by_crystal;
    enumerate_galleries(type, Filter::PositivelyFolded, 0, [&](const Gallery& g) {
      if (is_ls(g)) by_dim.insert(g.words);
      if (is_combinatorial_ls(g)) by_chain.insert(g.words);
      return true;
    });
    for (const auto& g : build_crystal(type).vertices) by_crystal.insert(g.words);
    if (by_dim != by_chain || by_dim != by_crystal) {
      r.passed = false;
      r.detail = instance_str(inst) + ": LS sets disagree (dim " + std::to_string(by_dim.size()) +
                 ", chain " + std::to_string(by_chain.size()) + ", crystal " +
                 std::to_string(by_crystal.size()) + ")";
      return r;
    }
    // The operator-free route needs the full enumeration: shared with the
    // decomposition check, and skipped past the cap.
    if (type->count_all() > ctx.opt.enumeration_cap) {
      ++r.instances_skipped;
    } else {
      const auto& by_brute = ctx.sweep(inst).ls_by_dimension;
      if (by_brute != by_dim) {
        r.passed = false;
        r.detail = instance_str(inst) + ": exhaustive LS set disagrees (brute " +
                   std::to_string(by_brute.size()) + ", dim " + std::to_string(by_dim.size()) +
                   ")";
        return r;
      }
      // On small instances also cross-check the oracle module's own search.
      if (type->count_all() <= ctx.opt.operator_cap) {
        std::set<std::vector<std::vector<uint8_t>>> oracle_set;
        for (const auto& g : oracle::brute_force_ls(type, 0)) oracle_set.insert(g.words);
        if (oracle_set != by_dim) {
          r.passed = false;
          r.detail = instance_str(inst) + ": oracle brute-force LS set disagrees";
          return r;
        }
      }
    }
  }
  r.detail = "agreement on " + std::to_string(r.instances_checked) + " instances (" +
             std::to_string(r.instances_skipped) + " with the exhaustive route over cap)";
  return r;
}

CheckResult check_operator_laws(Context& ctx) {
  CheckResult r{"operator-laws"};
  long long checked = 0;
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    if (type->count_all() > ctx.opt.operator_cap) {
      ++r.instances_skipped;
      continue;
    }
    ++r.instances_checked;
    const RootDatum& d = *inst.datum;
    bool ok = true;
    std::string bad;
    enumerate_galleries(type, Filter::All, 0, [&](const Gallery& g) {
      bool pf = is_positively_folded(g);
      Gallery st = star(g);
      for (int alpha = 1; alpha <= d.rank() && ok; ++alpha) {
        int m = min_level(g, alpha);
        auto e = e_alpha(g, alpha);
        auto f = f_alpha(g, alpha);
        auto et = e_tilde_alpha(g, alpha);
        if (e.has_value() != (m <= -1)) {
          ok = false;
          bad = "e_alpha definedness at " + gallery_words_str(g);
          break;
        }
        if (f.has_value() != (m != g.endpoint.coords[alpha - 1])) {
          ok = false;
          bad = "f_alpha definedness at " + gallery_words_str(g);
          break;
        }
        if (e) {
          auto back = f_alpha(*e, alpha);
          if (!back || *back != g || min_level(*e, alpha) != m + 1 ||
              ctx.dim(*e) != ctx.dim(g) + 1) {
            ok = false;
            bad = "e_alpha inverse/level/dimension at " + gallery_words_str(g);
            break;
          }
        }
        if (f) {
          auto back = e_alpha(*f, alpha);
          if (!back || *back != g || min_level(*f, alpha) != m - 1 ||
              ctx.dim(*f) != ctx.dim(g) - 1) {
            ok = false;
            bad = "f_alpha inverse/level/dimension at " + gallery_words_str(g);
            break;
          }
        }
        if (et && ctx.dim(*et) != ctx.dim(g) + 1) {
          ok = false;
          bad = "e~_alpha dimension at " + gallery_words_str(g);
          break;
        }
        if (pf) {
          if (et && !is_positively_folded(*et)) {
            ok = false;
            bad = "e~_alpha positivity at " + gallery_words_str(g);
            break;
          }
          if (!et && e && !is_positively_folded(*e)) {
            ok = false;
            bad = "e_alpha positivity at " + gallery_words_str(g);
            break;
          }
          if (!et && f && !is_positively_folded(*f)) {
            ok = false;
            bad = "f_alpha positivity at " + gallery_words_str(g);
            break;
          }
        }
        // Reversal conjugation.
        auto f_star = f_alpha(st, alpha);
        if (e.has_value() != f_star.has_value() || (e && *e != star(*f_star))) {
          ok = false;
          bad = "e = (f on reversal)* at " + gallery_words_str(g);
          break;
        }
        auto e_star = e_alpha(st, alpha);
        if (f.has_value() != e_star.has_value() || (f && *f != star(*e_star))) {
          ok = false;
          bad = "f = (e on reversal)* at " + gallery_words_str(g);
          break;
        }
        ++checked;
      }
      return ok;
    });
    if (!ok) {
      r.passed = false;
      r.detail = instance_str(inst) + ": " + bad;
      return r;
    }
  }
  r.detail = std::to_string(checked) + " gallery/root pairs (" +
             std::to_string(r.instances_checked) + " instances, " +
             std::to_string(r.instances_skipped) + " over cap)";
  return r;
}

CheckResult check_string_arithmetic(Context& ctx) {
  CheckResult r{"string-arithmetic"};
  long long checked = 0;
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    if (type->count_all() > ctx.opt.operator_cap) {
      ++r.instances_skipped;
      continue;
    }
    ++r.instances_checked;
    const RootDatum& d = *inst.datum;
    bool ok = true;
    std::string bad;
    enumerate_galleries(type, Filter::All, 0, [&](const Gallery& g) {
      for (int alpha = 1; alpha <= d.rank(); ++alpha) {
        auto [p, q] = string_lengths(g, alpha);
        if (p - q != g.endpoint.coords[alpha - 1]) {
          ok = false;
          bad = gallery_words_str(g) + " alpha=" + std::to_string(alpha);
          return false;
        }
        ++checked;
      }
      return true;
    });
    if (!ok) {
      r.passed = false;
      r.detail = instance_str(inst) + ": p - q != <nu, alpha> at " + bad;
      return r;
    }
  }
  r.detail = std::to_string(checked) + " gallery/root pairs (" +
             std::to_string(r.instances_checked) + " instances, " +
             std::to_string(r.instances_skipped) + " over cap)";
  return r;
}

CheckResult check_decomposition(Context& ctx) {
  CheckResult r{"decomposition-identity"};
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    if (type->count_all() > ctx.opt.enumeration_cap) {
      ++r.instances_skipped;
      continue;
    }
    ++r.instances_checked;
    const WeightMultiplicity& all = ctx.sweep(inst).all_endpoints;
    WeightMultiplicity sum;
    for (const auto& [mu, count] : decompose(type))
      for (const auto& [w, m] : oracle::freudenthal_character(*inst.datum, mu))
        sum[w] += count * m;
    if (all != sum) {
      r.passed = false;
      r.detail = instance_str(inst) + ": gallery weight multiset != sum of characters";
      return r;
    }
  }
  r.detail = "weight multisets agree (" + std::to_string(r.instances_checked) + " instances, " +
             std::to_string(r.instances_skipped) + " over cap)";
  return r;
}

CheckResult check_cell_shape(Context& ctx) {
  CheckResult r{"cell-shape"};
  long long galleries = 0;
  for (auto& inst : ctx.instances) {
    const auto& type = ctx.type_of(inst);
    ++r.instances_checked;
    bool ok = true;
    std::string bad;
    enumerate_galleries(type, Filter::PositivelyFolded, 0, [&](const Gallery& g) {
      ++galleries;
      auto [a, b] = cell_shape(g);
      if (a + b != ctx.dim(g) || (is_minimal(g) && b != 0)) {
        ok = false;
        bad = gallery_words_str(g);
        return false;
      }
      return true;
    });
    if (!ok) {
      r.passed = false;
      r.detail = instance_str(inst) + ": cell shape bookkeeping fails at " + bad;
      return r;
    }
  }
  r.detail = "a + b = dim, minimal b = 0, over " + std::to_string(galleries) +
             " positively folded galleries (" + std::to_string(r.instances_checked) +
             " instances)";
  return r;
}

CheckResult check_folding_order(Context&) {
  CheckResult r{"folding-order"};
  auto datum = std::make_shared<const RootDatum>(RootDatum::build("A2"));
  auto type = GalleryType::for_weight(datum, Coweight{{1, 1}});
  auto edges = folding_order_edges(type);
  std::set<std::pair<std::vector<std::vector<uint8_t>>, std::vector<std::vector<uint8_t>>>> got,
      expected;
  for (const auto& [from, to] : edges) got.emplace(from.words, to.words);
  auto mk = [](std::vector<std::vector<uint8_t>> a, std::vector<std::vector<uint8_t>> b) {
    return std::make_pair(a, b);
  };
  expected.insert(mk({{1, 2}, {0}}, {{1, 2}, {}}));
  expected.insert(mk({{2, 1}, {0}}, {{2, 1}, {}}));
  expected.insert(mk({{1, 2, 1}, {0}}, {{1, 2, 1}, {}}));
  r.instances_checked = 1;
  if (got != expected) {
    r.passed = false;
    std::ostringstream os;
    os << "edge set mismatch, got " << got.size() << " edges";
    r.detail = os.str();
    return r;
  }
  r.detail = "3 closure edges on the adjoint A2 instance";
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "sl3-golden",        "sl3-zero-weight",  "character-equality", "dim-inequality",
      "extremal-dimensions", "ls-agreement",   "operator-laws",      "string-arithmetic",
      "decomposition-identity", "cell-shape",  "folding-order",
  };
  return names;
}

Report run(const Options& options) {
  Context ctx{options, build_grid(options),
              options.dimension_fn ? options.dimension_fn
                                   : [](const Gallery& g) { return dimension(g); }};
  Report report;
  auto want = [&](const std::string& name) { return options.only.empty() || options.only == name; };
  if (want("sl3-golden")) report.results.push_back(check_sl3_golden(ctx));
  if (want("sl3-zero-weight")) report.results.push_back(check_sl3_zero_weight(ctx));
  if (want("character-equality")) report.results.push_back(check_character_equality(ctx));
  if (want("dim-inequality")) report.results.push_back(check_dim_inequality(ctx));
  if (want("extremal-dimensions")) report.results.push_back(check_extremal_dimensions(ctx));
  if (want("ls-agreement")) report.results.push_back(check_ls_agreement(ctx));
  if (want("operator-laws")) report.results.push_back(check_operator_laws(ctx));
  if (want("string-arithmetic")) report.results.push_back(check_string_arithmetic(ctx));
  if (want("decomposition-identity")) report.results.push_back(check_decomposition(ctx));
  if (want("cell-shape")) report.results.push_back(check_cell_shape(ctx));
  if (want("folding-order")) report.results.push_back(check_folding_order(ctx));
  return report;
}

}  // namespace verify
}  // namespace gallerion
