#include <doctest.h>

#include "explorer.hpp"
#include "folding.hpp"
#include "helpers.hpp"

using namespace kmc;
using kmctest::make_cartan;

namespace {

CrystalGraph gen(const CartanPtr& cartan, std::optional<std::vector<Int>> hw,
                 std::optional<Int> depth = std::nullopt) {
  GenerateOptions options;
  options.depth = depth;
  return generate(cartan, std::move(hw), options);
}

}  // namespace

TEST_CASE("depth zero yields the bare root") {
  auto g = gen(make_cartan({{2, -1}, {-1, 2}}), std::nullopt, 0);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK_FALSE(g.complete);
  CHECK(g.root == 0);
}

TEST_CASE("the rank-2 simply-laced top to depth three") {
  auto g = gen(make_cartan({{2, -1}, {-1, 2}}), std::nullopt, 3);
  CHECK(g.nodes.size() == 13);
  CHECK(g.edges.size() == 14);
  size_t color1 = 0, color2 = 0;
  for (const auto& e : g.edges) (e.index == 0 ? color1 : color2)++;
  CHECK(color1 == 7);
  CHECK(color2 == 7);
  CHECK_FALSE(g.complete);
}

TEST_CASE("finite highest weight crystals close up") {
  auto a2 = make_cartan({{2, -1}, {-1, 2}});
  auto g = gen(a2, std::vector<Int>{1, 0}, 10);
  CHECK(g.nodes.size() == 3);
  CHECK(g.complete);

  auto adjoint = gen(a2, std::vector<Int>{1, 1});
  CHECK(adjoint.nodes.size() == 8);
  CHECK(adjoint.complete);
}

TEST_CASE("node counts equal the dimension oracle") {
  for (auto entries : {std::vector<std::vector<Int>>{{2, -1}, {-1, 2}},
                       std::vector<std::vector<Int>>{{2, -2}, {-1, 2}}}) {
    auto cartan = make_cartan(entries);
    for (Int c1 = 0; c1 <= 2; ++c1) {
      for (Int c2 = 0; c2 <= 2; ++c2) {
        Weight w = Weight::zero(2);
        w.lambda = {c1, c2};
        auto g = gen(cartan, w.lambda);
        REQUIRE(g.complete);
        CHECK(static_cast<Int>(g.nodes.size()) == weyl_dimension(*cartan, w));
      }
    }
  }
}

TEST_CASE("rank-3 node counts equal the dimension oracle") {
  struct Case {
    const char* name;
    std::vector<Int> lambda;
    Int dim;
  };
  for (const auto& c : {Case{"A3", {1, 0, 1}, 15}, Case{"B3", {0, 0, 1}, 8},
                        Case{"C3", {1, 0, 0}, 6}, Case{"D4", {1, 0, 0, 0}, 8}}) {
    auto cartan = kmctest::named(c.name);
    Weight w = Weight::zero(cartan->rank());
    w.lambda = c.lambda;
    CHECK(weyl_dimension(*cartan, w) == c.dim);
    auto g = gen(cartan, c.lambda);
    REQUIRE(g.complete);
    CHECK(static_cast<Int>(g.nodes.size()) == c.dim);
  }
}

TEST_CASE("highest weight node is unique") {
  auto cartan = make_cartan({{2, -2}, {-1, 2}});
  for (auto hw : {std::optional<std::vector<Int>>{},
                  std::optional<std::vector<Int>>{{1, 1}}}) {
    auto g = gen(cartan, hw, hw ? std::optional<Int>{} : std::optional<Int>{4});
    size_t killed = 0;
    for (const auto& node : g.nodes) {
      bool top = true;
      for (size_t a = 0; a < 2 && top; ++a)
        if (node.e(a)) top = false;
      if (top) {
        ++killed;
        CHECK(node == g.nodes[g.root]);
      }
    }
    CHECK(killed == 1);
  }
}

TEST_CASE("an outgoing edge exists exactly when phi is positive") {
  auto cartan = make_cartan({{2, -1}, {-1, 2}});
  auto g = gen(cartan, std::vector<Int>{1, 1});
  REQUIRE(g.complete);
  std::vector<std::vector<bool>> has_edge(g.nodes.size(),
                                          std::vector<bool>(2, false));
  for (const auto& e : g.edges) has_edge[e.src][e.index] = true;
  for (size_t u = 0; u < g.nodes.size(); ++u)
    for (size_t a = 0; a < 2; ++a)
      CHECK(has_edge[u][a] == (g.nodes[u].phi(a) > 0));
}

TEST_CASE("at most one outgoing edge per color and all nodes reachable") {
  auto g = gen(make_cartan({{2, -3}, {-1, 2}}), std::nullopt, 5);
  std::vector<std::vector<int>> out(g.nodes.size(), std::vector<int>(2, 0));
  std::vector<bool> seen(g.nodes.size(), false);
  seen[g.root] = true;
  for (const auto& e : g.edges) {
    out[e.src][e.index]++;
    seen[e.dst] = true;
  }
  for (const auto& row : out)
    for (int count : row) CHECK(count <= 1);
  for (bool s : seen) CHECK(s);
}

TEST_CASE("isomorphism is reflexive and distinguishes colors") {
  auto a2 = make_cartan({{2, -1}, {-1, 2}});
  auto g1 = gen(a2, std::vector<Int>{1, 0});
  auto g2 = gen(a2, std::vector<Int>{0, 1});
  CHECK(isomorphic(g1, g1));
  CHECK(g1.nodes.size() == g2.nodes.size());
  CHECK_FALSE(isomorphic(g1, g2));  // colors are swapped

  auto t1 = gen(a2, std::nullopt, 3);
  auto t2 = gen(a2, std::nullopt, 4);
  CHECK_THROWS_AS((void)isomorphic(t1, t2), Error);
  CHECK(isomorphic(t1, gen(a2, std::nullopt, 3)));
}

TEST_CASE("generation commutes with relabeling through the identity folding") {
  auto base = make_cartan({{2, -1}, {-1, 2}});
  auto fd_labels = std::make_shared<const CartanMatrix>(
      CartanMatrix({"1,0", "2,0"}, {{2, -1}, {-1, 2}}));
  auto g1 = gen(base, std::vector<Int>{1, 1});
  auto g2 = gen(fd_labels, std::vector<Int>{1, 1});
  CHECK(isomorphic(g1, g2));
}

TEST_CASE("devirtualized image graph of the identity folding is the graph itself") {
  auto base = make_cartan({{2, -1}, {-1, 2}});
  auto fd = build_folding(*base, symmetrize(*base));
  auto g = gen(base, std::vector<Int>{1, 1});
  auto virtual_graph = gen(fd.virtual_cartan, std::vector<Int>{1, 1});
  CrystalGraph mapped = virtual_graph;
  for (auto& node : mapped.nodes) node = devirtualize(node, fd);
  CHECK(isomorphic(g, mapped));
  for (size_t i = 0; i < mapped.nodes.size(); ++i)
    CHECK(is_in_virtual_image(virtual_graph.nodes[i], fd));
}

TEST_CASE("JSON export round trips and is deterministic") {
  auto cartan = make_cartan({{2, -2}, {-1, 2}});
  auto g = gen(cartan, std::vector<Int>{1, 0});
  std::string text = export_json(g);
  CHECK(text == export_json(g));

  CrystalGraph parsed = parse_json(text);
  CHECK(parsed.nodes.size() == g.nodes.size());
  CHECK(parsed.root == g.root);
  CHECK(parsed.complete == g.complete);
  for (size_t i = 0; i < g.nodes.size(); ++i)
    CHECK(parsed.nodes[i] == g.nodes[i]);
  CHECK(parsed.edges.size() == g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i)
    CHECK(parsed.edges[i] == g.edges[i]);
  CHECK(export_json(parsed) == text);

  // a second generation of the same crystal is byte-identical
  CHECK(export_json(gen(cartan, std::vector<Int>{1, 0})) == text);
}

TEST_CASE("DOT export shape") {
  auto cartan = make_cartan({{2}});
  auto root_only = gen(cartan, std::vector<Int>{0});
  std::string dot = export_dot(root_only);
  CHECK(dot.find("digraph crystal") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);  // one node, no edges

  auto g = gen(make_cartan({{2, -1}, {-1, 2}}), std::nullopt, 3);
  std::string big = export_dot(g);
  size_t arrows = 0;
  for (size_t at = big.find("->"); at != std::string::npos;
       at = big.find("->", at + 1))
    ++arrows;
  CHECK(arrows == 14);
  CHECK(big.find("darkred") != std::string::npos);
  CHECK(big.find("blue") != std::string::npos);
}

TEST_CASE("node cap truncates gracefully") {
  GenerateOptions options;
  options.depth = 6;
  options.max_nodes = 5;
  auto g = generate(make_cartan({{2, -1}, {-1, 2}}), std::nullopt, options);
  CHECK(g.nodes.size() == 5);
  CHECK_FALSE(g.complete);
}

TEST_CASE("generating B(infinity) without a depth bound is refused") {
  CHECK_THROWS_AS(
      (void)gen(make_cartan({{2, -1}, {-1, 2}}), std::nullopt, std::nullopt),
      Error);
}
