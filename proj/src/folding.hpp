#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cartan.hpp"
#include "rigged.hpp"

namespace kmc {

/// Vertex v_{a,s} of the simple graph: orbit = position of a in the folded
/// type, shift = s in Z/(N d_a)Z.
struct VirtualVertex {
  size_t orbit;
  Int shift;

  bool operator==(const VirtualVertex& o) const {
    return orbit == o.orbit && shift == o.shift;
  }
};

/// The simple graph realizing a symmetrizable type as the orbit quotient of
/// a simply-laced one, together with the induced Cartan data and scaling
/// factors.  Plain value type; built by build_folding or assembled directly
/// in tests for classical foldings with gamma != 1.
struct FoldedDiagram {
  CartanPtr base;
  CartanPtr virtual_cartan;
  std::vector<VirtualVertex> vertices;
  std::vector<std::vector<size_t>> orbits;  // base index -> vertex positions
  std::vector<std::pair<size_t, size_t>> edges;  // u < v, sorted
  std::vector<Int> gamma;
  Int N = 1;
  std::vector<std::vector<Int>> c;  // c_ab per ordered pair, 0 when A_ab = 0
  // whether the (a,b) and (b,a) generating passes produced identical edge
  // sets; they always do when c_ab <= 1 or c_ab = N gcd(d_a, d_b), in
  // particular for every rank-2 type
  bool passes_agree = true;

  size_t vertex_index(size_t orbit, Int shift) const;
  std::string vertex_label(size_t v) const;
  bool has_edge(size_t u, size_t v) const;
  /// v_{a,s} -> v_{a,s+1 mod N d_a} as a permutation of vertex positions.
  std::vector<size_t> automorphism() const;

  nlohmann::json to_json() const;
  std::string to_dot() const;
};

/// The graph construction: vertices v_{a,s}, edges generated per ordered
/// pair from the pairwise-reduced symmetrizer ratios, gamma identically 1.
FoldedDiagram build_folding(const CartanMatrix& cartan, const Symmetrizer& d);

struct FoldingCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct FoldingReport {
  bool passed = true;
  std::vector<FoldingCheck> checks;

  nlohmann::json to_json() const;
};

/// Structural checks: automorphism preserves edges and orbits, neighbor
/// counts recover -A_ab from every vertex, c_ab <= N, orbits independent.
FoldingReport verify_folding(const FoldedDiagram& fd, const CartanMatrix& cartan);

/// Psi on the weight lattice: Lambda_a and alpha_a both fan out over the
/// orbit of a with a gamma_a scale.
Weight weight_embed(const FoldedDiagram& fd, const Weight& w);
Weight root_embed(const FoldedDiagram& fd, size_t a);

/// The map v: strings (i, x) of part a become (gamma_a i, gamma_a x) in
/// every part of the orbit of a; the highest weight maps through Psi.
RiggedConfiguration virtualize(const RiggedConfiguration& rc,
                               const FoldedDiagram& fd);

/// Image membership: orbit-constant parts, riggings in gamma_a Z, and no
/// strings at lengths outside gamma_a Z.
bool is_in_virtual_image(const RiggedConfiguration& vrc,
                         const FoldedDiagram& fd);

/// Inverse of virtualize; throws NotInVirtualImage naming the violated
/// condition and the part where it failed.
RiggedConfiguration devirtualize(const RiggedConfiguration& vrc,
                                 const FoldedDiagram& fd);

/// f_a^v and e_a^v: the gamma_a-th power of the simply-laced operator at
/// every vertex of the orbit of a; null when any factor annihilates.
std::optional<RiggedConfiguration> virtual_f(const RiggedConfiguration& vrc,
                                             const FoldedDiagram& fd, size_t a);
std::optional<RiggedConfiguration> virtual_e(const RiggedConfiguration& vrc,
                                             const FoldedDiagram& fd, size_t a);

}  // namespace kmc
