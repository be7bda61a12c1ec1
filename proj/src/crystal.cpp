#include "gallerion/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "gallerion/folding.hpp"

namespace gallerion {

CrystalGraph build_crystal(const GalleryTypePtr& type) {
  const RootDatum& d = type->datum();
  CrystalGraph c;
  c.type = type;

  std::unordered_map<Gallery, size_t, GalleryHash> index;
  std::vector<Gallery> order;
  std::deque<size_t> work;
  order.push_back(type->reference_gallery());
  index.emplace(order[0], 0);
  work.push_back(0);
  struct RawEdge {
    size_t from;
    int root;
    size_t to;
  };
  std::vector<RawEdge> raw;
  while (!work.empty()) {
    size_t at = work.front();
    work.pop_front();
    for (int alpha = 1; alpha <= d.rank(); ++alpha) {
      auto next = f_alpha(order[at], alpha);
      if (!next) continue;
      auto [it, inserted] = index.emplace(*next, order.size());
      if (inserted) {
        order.push_back(std::move(*next));
        work.push_back(it->second);
      }
      raw.push_back(RawEdge{at, alpha, it->second});
    }
  }

  // Deterministic vertex order: lexicographic on the word sequences.
  std::vector<size_t> perm(order.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return order[a].words < order[b].words; });
  std::vector<size_t> where(order.size());
  for (size_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  for (size_t i : perm) c.vertices.push_back(order[i]);
  c.highest = where[0];
  for (const auto& e : raw) c.edges.push_back({where[e.from], e.root, where[e.to]});
  std::sort(c.edges.begin(), c.edges.end(), [](const CrystalGraph::Edge& a,
                                               const CrystalGraph::Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.root < b.root;
  });
  return c;
}

CrystalGraph build_crystal(const RootDatumPtr& datum, const Coweight& lambda) {
  return build_crystal(GalleryType::for_weight(datum, lambda));
}

WeightMultiplicity character(const CrystalGraph& c) {
  WeightMultiplicity mult;
  for (const auto& v : c.vertices) mult[v.endpoint]++;
  return mult;
}

bool is_connected(const CrystalGraph& c) {
  if (c.vertices.empty()) return true;
  std::vector<std::vector<size_t>> adj(c.vertices.size());
  for (const auto& e : c.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(c.vertices.size(), false);
  std::deque<size_t> work{0};
  seen[0] = true;
  size_t count = 1;
  while (!work.empty()) {
    size_t at = work.front();
    work.pop_front();
    for (size_t next : adj[at])
      if (!seen[next]) {
        seen[next] = true;
        ++count;
        work.push_back(next);
      }
  }
  return count == c.vertices.size();
}

WeightMultiplicity decompose(const GalleryTypePtr& type, uint64_t cap) {
  WeightMultiplicity mult;
  enumerate_galleries(type, Filter::Dominant, cap, [&](const Gallery& g) {
    mult[g.endpoint]++;
    return true;
  });
  return mult;
}

namespace {

std::string vertex_label(const Gallery& g) {
  std::ostringstream os;
  os << g.endpoint << " ";
  for (size_t j = 0; j < g.words.size(); ++j) {
    if (j) os << "|";
    os << word_to_string(g.words[j]);
  }
  return os.str();
}

}  // namespace

std::string crystal_to_dot(const CrystalGraph& c) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  rankdir=TB;\n";
  for (size_t i = 0; i < c.vertices.size(); ++i)
    os << "  n" << i << " [label=\"" << vertex_label(c.vertices[i]) << "\"];\n";
  for (const auto& e : c.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.root << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string crystal_to_json(const CrystalGraph& c) {
  nlohmann::json j;
  j["cartan"] = {{"series", std::string(1, c.type->datum().series())},
                 {"rank", c.type->datum().rank()}};
  j["lambda"] = c.type->lambda().coords;
  j["highest"] = c.highest;
  auto verts = nlohmann::json::array();
  for (const auto& v : c.vertices) {
    nlohmann::json jv;
    std::vector<std::vector<int>> words;
    for (const auto& w : v.words) words.emplace_back(w.begin(), w.end());
    jv["words"] = words;
    jv["endpoint"] = v.endpoint.coords;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  auto edges = nlohmann::json::array();
  for (const auto& e : c.edges)
    edges.push_back({{"from", e.from}, {"root", e.root}, {"to", e.to}});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

}  // namespace gallerion
