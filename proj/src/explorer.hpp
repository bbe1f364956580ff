#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigged.hpp"

namespace kmc {

/// Explored portion of a crystal: nodes in BFS discovery order, f-edges
/// colored by index, root = node 0 (the empty configuration).
struct CrystalGraph {
  struct Edge {
    size_t src;
    size_t dst;
    size_t index;

    bool operator==(const Edge& o) const {
      return src == o.src && dst == o.dst && index == o.index;
    }
  };

  std::vector<RiggedConfiguration> nodes;
  std::vector<Edge> edges;
  size_t root = 0;
  std::optional<Int> depth;  // generation bound, if one was supplied
  bool complete = false;     // no expansion was cut off

  const CartanPtr& cartan() const { return nodes.at(root).cartan(); }
};

struct GenerateOptions {
  std::optional<Int> depth;      // max f-applications from the root
  size_t max_nodes = 1'000'000;  // safety cap; exceeding it marks incomplete
};

/// BFS from the empty rigged configuration applying every f_a, nodes
/// deduplicated by canonical form.  lambda = nullopt generates B(infinity)
/// (a depth bound is then required).
CrystalGraph generate(CartanPtr cartan, std::optional<std::vector<Int>> lambda,
                      const GenerateOptions& options);

/// Rooted edge-colored isomorphism.  Crystal graphs are deterministic
/// automata, so a parallel BFS from the roots decides this.
bool isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);
CrystalGraph parse_json(const std::string& text);

/// Human-readable node and edge listing.
std::string export_text(const CrystalGraph& g);

}  // namespace kmc
