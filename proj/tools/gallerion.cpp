#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gallerion/crystal.hpp"
#include "gallerion/folding.hpp"
#include "gallerion/gallery.hpp"
#include "gallerion/oracle.hpp"
#include "gallerion/verify.hpp"

namespace {

using namespace gallerion;

constexpr uint64_t kDefaultCap = 10000000;

struct Config {
  std::string type;
  std::string lambda_text;
  std::string filter = "all";
  std::string format = "dot";
  std::string out_path;
  std::string only;
  uint64_t cap = 0;  // 0: use env or default
  unsigned workers = 1;
};

uint64_t effective_cap(const Config& cfg) {
  if (cfg.cap) return cfg.cap;
  if (const char* env = std::getenv("GALLERION_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

IntVec parse_lambda(const std::string& text, int rank) {
  IntVec coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw Error("bad lambda coordinate: " + item);
    coords.push_back(v);
  }
  if ((int)coords.size() != rank)
    throw Error("lambda has " + std::to_string(coords.size()) + " coordinates, expected " +
                std::to_string(rank));
  return coords;
}

Filter parse_filter(const std::string& name) {
  if (name == "all") return Filter::All;
  if (name == "positively-folded") return Filter::PositivelyFolded;
  if (name == "ls") return Filter::LS;
  if (name == "dominant") return Filter::Dominant;
  throw Error("unknown filter: " + name);
}

std::string enumerate_record(const Gallery& g) {
  nlohmann::json j;
  std::vector<std::vector<int>> words;
  for (const auto& w : g.words) words.emplace_back(w.begin(), w.end());
  j["word"] = words;
  j["endpoint"] = g.endpoint.coords;
  j["dimension"] = dimension(g);
  if (is_positively_folded(g)) {
    j["is_ls"] = is_ls(g);
    auto [a, b] = cell_shape(g);
    j["cell_shape"] = {a, b};
  } else {
    j["is_ls"] = false;
    j["cell_shape"] = nullptr;
  }
  return j.dump();
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  auto datum = std::make_shared<const RootDatum>(RootDatum::build(cfg.type));
  Coweight lambda{parse_lambda(cfg.lambda_text, datum->rank())};
  if (!datum->is_dominant(lambda)) throw NotDominant();
  auto type = GalleryType::for_weight(datum, lambda);
  Filter filter = parse_filter(cfg.filter);
  uint64_t cap = effective_cap(cfg);

  // Records are computed chunk-by-chunk; worker count never affects order.
  const size_t chunk_size = 1024;
  std::vector<Gallery> chunk;
  auto flush = [&]() {
    std::vector<std::string> lines(chunk.size());
    unsigned workers = std::max(1u, cfg.workers);
    if (workers == 1 || chunk.size() < 2 * workers) {
      for (size_t i = 0; i < chunk.size(); ++i) lines[i] = enumerate_record(chunk[i]);
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < workers; ++t)
        threads.emplace_back([&, t]() {
          for (size_t i = t; i < chunk.size(); i += workers)
            lines[i] = enumerate_record(chunk[i]);
        });
      for (auto& th : threads) th.join();
    }
    for (const auto& line : lines) out << line << "\n";
    chunk.clear();
  };
  enumerate_galleries(type, filter, cap, [&](const Gallery& g) {
    chunk.push_back(g);
    if (chunk.size() >= chunk_size) flush();
    return true;
  });
  flush();
  return 0;
}

int cmd_crystal(const Config& cfg, std::ostream& out) {
  auto datum = std::make_shared<const RootDatum>(RootDatum::build(cfg.type));
  Coweight lambda{parse_lambda(cfg.lambda_text, datum->rank())};
  if (!datum->is_dominant(lambda)) throw NotDominant();
  auto crystal = build_crystal(datum, lambda);
  if (cfg.format == "dot")
    out << crystal_to_dot(crystal);
  else if (cfg.format == "json")
    out << crystal_to_json(crystal);
  else
    throw Error("unknown format: " + cfg.format);
  return 0;
}

int cmd_character(const Config& cfg, std::ostream& out) {
  auto datum = std::make_shared<const RootDatum>(RootDatum::build(cfg.type));
  Coweight lambda{parse_lambda(cfg.lambda_text, datum->rank())};
  if (!datum->is_dominant(lambda)) throw NotDominant();
  auto crystal = build_crystal(datum, lambda);
  auto chi = character(crystal);
  nlohmann::json j;
  j["cartan"] = {{"series", std::string(1, datum->series())}, {"rank", datum->rank()}};
  j["lambda"] = lambda.coords;
  auto entries = nlohmann::json::array();
  long long total = 0;
  for (const auto& [w, m] : chi) {
    entries.push_back({{"coweight", w.coords}, {"multiplicity", m}});
    total += m;
  }
  j["character"] = entries;
  j["dimension"] = total;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  verify::Options options;
  if (!cfg.only.empty()) {
    const auto& names = verify::check_names();
    if (std::find(names.begin(), names.end(), cfg.only) == names.end()) {
      std::string known;
      for (const auto& n : names) known += " " + n;
      throw Error("unknown check: " + cfg.only + " (known:" + known + ")");
    }
  }
  options.only = cfg.only;
  if (!cfg.type.empty()) options.type_filter = cfg.type;
  if (!cfg.lambda_text.empty()) {
    if (cfg.type.empty()) throw Error("--lambda requires --type");
    auto datum = RootDatum::build(cfg.type);
    options.lambda_filter = parse_lambda(cfg.lambda_text, datum.rank());
  }
  auto report = verify::run(options);
  for (const auto& r : report.results)
    out << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of galleries in affine Coxeter complexes"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool need_lambda) {
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A2")->required(need_lambda);
    auto* lam = sub->add_option("--lambda", cfg.lambda_text,
                                "dominant coweight, fundamental-coweight coordinates");
    if (need_lambda) lam->required();
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--cap", cfg.cap, "enumeration cap (default env GALLERION_CAP or 1e7)");
    sub->add_option("--workers", cfg.workers, "worker thread count")->default_val(1);
  };

  auto* enumerate = app.add_subcommand("enumerate", "list galleries as JSON lines");
  add_common(enumerate, true);
  enumerate->add_option("--filter", cfg.filter, "all|positively-folded|ls|dominant")
      ->default_val("all");

  auto* crystal = app.add_subcommand("crystal", "build the crystal graph");
  add_common(crystal, true);
  crystal->add_option("--format", cfg.format, "dot|json")->default_val("dot");

  auto* character = app.add_subcommand("character", "character of the highest-weight module");
  add_common(character, true);

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--only", cfg.only, "run a single named check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open " << cfg.out_path << "\n";
        return 4;
      }
      out = &file;
    }
    int status = 0;
    if (app.got_subcommand("enumerate"))
      status = cmd_enumerate(cfg, *out);
    else if (app.got_subcommand("crystal"))
      status = cmd_crystal(cfg, *out);
    else if (app.got_subcommand("character"))
      status = cmd_character(cfg, *out);
    else if (app.got_subcommand("verify"))
      status = cmd_verify(cfg, *out);
    out->flush();
    if (!*out) return 4;
    return status;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
