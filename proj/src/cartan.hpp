#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "common.hpp"

namespace kmc {

struct Weight;

/// A generalized Cartan matrix with named indices, row convention
/// A[i][j] = <h_i, alpha_j>.  Instances are immutable after construction.
class CartanMatrix {
 public:
  CartanMatrix(std::vector<std::string> labels,
               std::vector<std::vector<Int>> entries);

  static CartanMatrix from_entries(std::vector<std::vector<Int>> entries);

  /// Named shorthand: "A2", "B3", "C2", "D4", "E6", "F4", "G2" plus a
  /// trailing "~" for the untwisted affine extension ("A2~").
  static CartanMatrix named(std::string_view name);

  /// {"labels": [...], "matrix": [[...]]} or a bare [[...]] array.
  static CartanMatrix from_json(const nlohmann::json& j);

  /// Accepts a named shorthand or inline JSON text.
  static CartanMatrix parse(std::string_view spec);

  size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_.at(i); }
  Int at(size_t i, size_t j) const { return entries_[i][j]; }
  bool connected(size_t i, size_t j) const { return entries_[i][j] != 0; }
  size_t index_of(std::string_view label) const;

  nlohmann::json to_json() const;

  bool operator==(const CartanMatrix& other) const {
    return labels_ == other.labels_ && entries_ == other.entries_;
  }
  bool operator!=(const CartanMatrix& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Int>> entries_;
};

using CartanPtr = std::shared_ptr<const CartanMatrix>;

/// Positive diagonal D with DA symmetric and gcd(d_a) = 1.
struct Symmetrizer {
  std::vector<Int> d;
};

/// Canonical symmetrizer: ratios propagated over a spanning forest,
/// denominators cleared, global gcd normalized to 1.
Symmetrizer symmetrize(const CartanMatrix& cartan);

/// Lattice element in mixed coordinates: sum of lambda[a]*Lambda_a plus
/// sum of alpha[a]*alpha_a.  Both vectors are rank-sized.
struct Weight {
  std::vector<Int> lambda;
  std::vector<Int> alpha;

  static Weight zero(size_t rank) {
    return Weight{std::vector<Int>(rank, 0), std::vector<Int>(rank, 0)};
  }
  static Weight fundamental(size_t rank, size_t a);
  static Weight simple_root(size_t rank, size_t a);

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const {
    return lambda == o.lambda && alpha == o.alpha;
  }
  bool operator!=(const Weight& o) const { return !(*this == o); }
};

/// <h_b, w> = lambda[b] + sum_a alpha[a] * A[b][a].
Int pairing(const CartanMatrix& cartan, size_t b, const Weight& w);

/// All positive roots in simple-root coordinates, generated by root-string
/// closure.  Throws NotFiniteType once more than `cap` roots appear.
std::vector<std::vector<Int>> positive_roots(const CartanMatrix& cartan,
                                             size_t cap = 10000);

/// Weyl dimension formula evaluated with exact integer arithmetic.
/// `lambda` must be dominant with alpha part zero.
Int weyl_dimension(const CartanMatrix& cartan, const Weight& lambda);

}  // namespace kmc
