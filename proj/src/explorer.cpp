#include "explorer.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace kmc {

CrystalGraph generate(CartanPtr cartan, std::optional<std::vector<Int>> lambda,
                      const GenerateOptions& options) {
  if (!cartan) throw Error(ErrorCode::InvalidArgument, "null Cartan matrix");
  if (!lambda && !options.depth)
    throw Error(ErrorCode::InvalidArgument,
                "generating B(infinity) requires a depth bound");

  CrystalGraph g;
  g.depth = options.depth;
  g.complete = true;

  std::unordered_map<std::string, size_t> ids;
  std::deque<std::pair<size_t, Int>> frontier;  // node id, depth

  auto rootcfg = RiggedConfiguration::empty(cartan, lambda);
  ids.emplace(rootcfg.canonical_key(), 0);
  g.nodes.push_back(std::move(rootcfg));
  frontier.emplace_back(0, 0);

  while (!frontier.empty()) {
    auto [u, d] = frontier.front();
    frontier.pop_front();
    bool at_bound = options.depth && d >= *options.depth;
    for (size_t a = 0; a < cartan->rank(); ++a) {
      auto next = g.nodes[u].f(a);
      if (!next) continue;
      if (at_bound) {
        g.complete = false;  // an f-step exists past the bound
        continue;
      }
      auto key = next->canonical_key();
      auto it = ids.find(key);
      size_t v;
      if (it == ids.end()) {
        if (g.nodes.size() >= options.max_nodes) {
          g.complete = false;
          continue;
        }
        v = g.nodes.size();
        ids.emplace(std::move(key), v);
        g.nodes.push_back(std::move(*next));
        frontier.emplace_back(v, d + 1);
      } else {
        v = it->second;
      }
      g.edges.push_back(CrystalGraph::Edge{u, v, a});
    }
  }
  return g;
}

bool isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  bool comparable = (g1.complete && g2.complete) ||
                    (!g1.complete && !g2.complete && g1.depth && g2.depth &&
                     *g1.depth == *g2.depth);
  if (!comparable)
    throw Error(ErrorCode::IncomparableDepths,
                "graphs must both be complete or share a generation depth");
  if (g1.nodes.size() != g2.nodes.size() || g1.edges.size() != g2.edges.size())
    return false;
  size_t rank = g1.cartan()->rank();
  if (rank != g2.cartan()->rank()) return false;

  // out[u][a] = target, one per color
  auto successors = [rank](const CrystalGraph& g) {
    std::vector<std::vector<std::optional<size_t>>> out(
        g.nodes.size(), std::vector<std::optional<size_t>>(rank));
    for (const auto& e : g.edges) out[e.src][e.index] = e.dst;
    return out;
  };
  auto s1 = successors(g1);
  auto s2 = successors(g2);

  std::vector<std::optional<size_t>> match(g1.nodes.size());
  std::vector<std::optional<size_t>> rmatch(g2.nodes.size());
  std::deque<size_t> queue;
  match[g1.root] = g2.root;
  rmatch[g2.root] = g1.root;
  queue.push_back(g1.root);
  while (!queue.empty()) {
    size_t u = queue.front();
    queue.pop_front();
    size_t w = *match[u];
    for (size_t a = 0; a < rank; ++a) {
      const auto& t1 = s1[u][a];
      const auto& t2 = s2[w][a];
      if (t1.has_value() != t2.has_value()) return false;
      if (!t1) continue;
      if (match[*t1]) {
        if (*match[*t1] != *t2) return false;
      } else if (rmatch[*t2]) {
        return false;
      } else {
        match[*t1] = *t2;
        rmatch[*t2] = *t1;
        queue.push_back(*t1);
      }
    }
  }
  // every node is reachable from the root, so the match must be total
  for (const auto& m : match)
    if (!m) return false;
  return true;
}

namespace {

nlohmann::json weight_json(const RiggedConfiguration& rc) {
  Weight w = rc.weight();
  return {{"lambda", w.lambda}, {"alpha", w.alpha}};
}

}  // namespace

std::string export_json(const CrystalGraph& g) {
  nlohmann::json j;
  nlohmann::json nodes = nlohmann::json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    nodes.push_back({{"id", i},
                     {"parts", g.nodes[i].to_json()},
                     {"weight", weight_json(g.nodes[i])}});
  }
  j["nodes"] = std::move(nodes);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"src", e.src},
                     {"dst", e.dst},
                     {"index", g.cartan()->label(e.index)}});
  j["edges"] = std::move(edges);
  j["root"] = g.root;
  j["complete"] = g.complete;
  if (g.depth) j["depth"] = *g.depth;
  if (g.nodes.at(g.root).highest_weight())
    j["highest_weight"] = *g.nodes.at(g.root).highest_weight();
  else
    j["highest_weight"] = nullptr;
  j["cartan"] = g.cartan()->to_json();
  return j.dump(2) + "\n";
}

CrystalGraph parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::Parse, "crystal graph JSON is malformed");
  try {
    CrystalGraph g;
    auto cartan =
        std::make_shared<const CartanMatrix>(CartanMatrix::from_json(j.at("cartan")));
    std::optional<std::vector<Int>> lambda;
    if (!j.at("highest_weight").is_null())
      lambda = j.at("highest_weight").get<std::vector<Int>>();
    for (const auto& node : j.at("nodes"))
      g.nodes.push_back(
          RiggedConfiguration::from_json(node.at("parts"), cartan, lambda));
    for (const auto& edge : j.at("edges"))
      g.edges.push_back(
          CrystalGraph::Edge{edge.at("src").get<size_t>(),
                             edge.at("dst").get<size_t>(),
                             cartan->index_of(edge.at("index").get<std::string>())});
    g.root = j.at("root").get<size_t>();
    g.complete = j.at("complete").get<bool>();
    if (j.contains("depth")) g.depth = j.at("depth").get<Int>();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse,
                std::string("crystal graph JSON missing fields: ") + e.what());
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(ch);
  }
  return out;
}

}  // namespace

std::string export_dot(const CrystalGraph& g) {
  static const char* palette[] = {"darkred",    "blue",   "forestgreen",
                                  "darkorange", "purple", "teal",
                                  "deeppink",   "brown"};
  constexpr size_t palette_size = sizeof(palette) / sizeof(*palette);
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n"
     << "  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    std::string label = g.nodes[i].to_text();
    os << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.src << " -> n" << e.dst << " [label=\""
       << g.cartan()->label(e.index) << "\", color="
       << palette[e.index % palette_size] << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_text(const CrystalGraph& g) {
  std::ostringstream os;
  os << g.nodes.size() << " nodes, " << g.edges.size() << " edges, "
     << (g.complete ? "complete" : "truncated") << "\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    os << "#" << i << (i == g.root ? " (root)" : "") << "\n";
    std::istringstream lines(g.nodes[i].to_text());
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << "\n";
  }
  for (const auto& e : g.edges)
    os << "#" << e.src << " --" << g.cartan()->label(e.index) << "--> #"
       << e.dst << "\n";
  return os.str();
}

}  // namespace kmc
