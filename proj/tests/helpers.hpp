#pragma once

#include <memory>
#include <random>
#include <vector>

#include "cartan.hpp"
#include "rigged.hpp"

namespace kmctest {

inline kmc::CartanPtr make_cartan(std::vector<std::vector<kmc::Int>> entries) {
  return std::make_shared<const kmc::CartanMatrix>(
      kmc::CartanMatrix::from_entries(std::move(entries)));
}

inline kmc::CartanPtr named(const char* name) {
  return std::make_shared<const kmc::CartanMatrix>(
      kmc::CartanMatrix::named(name));
}

/// Random symmetrizable matrix: entries A_ab = -d_b k, A_ba = -d_a k for a
/// random positive diagonal d and k in {0,1,2}, so D*A is symmetric by
/// construction.
inline std::vector<std::vector<kmc::Int>> random_symmetrizable(
    std::mt19937& rng, size_t rank) {
  std::uniform_int_distribution<kmc::Int> d_dist(1, 3);
  std::uniform_int_distribution<int> k_dist(0, 2);
  std::vector<kmc::Int> d(rank);
  for (auto& v : d) v = d_dist(rng);
  std::vector<std::vector<kmc::Int>> a(rank, std::vector<kmc::Int>(rank, 0));
  for (size_t i = 0; i < rank; ++i) a[i][i] = 2;
  for (size_t i = 0; i < rank; ++i) {
    for (size_t j = i + 1; j < rank; ++j) {
      kmc::Int k = k_dist(rng);
      a[i][j] = -d[j] * k;
      a[j][i] = -d[i] * k;
    }
  }
  return a;
}

/// Uniform random f/e walk from the empty configuration; f is chosen three
/// times as often as e so walks drift downward into the crystal.
inline kmc::RiggedConfiguration random_walk(
    std::mt19937& rng, kmc::CartanPtr cartan,
    std::optional<std::vector<kmc::Int>> lambda, int steps) {
  auto rc = kmc::RiggedConfiguration::empty(cartan, std::move(lambda));
  std::uniform_int_distribution<size_t> index(0, cartan->rank() - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int s = 0; s < steps; ++s) {
    size_t a = index(rng);
    auto next = coin(rng) == 0 ? rc.e(a) : rc.f(a);
    if (next) rc = std::move(*next);
  }
  return rc;
}

}  // namespace kmctest
