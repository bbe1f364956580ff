#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "folding.hpp"

namespace kmc {

struct SweepViolation {
  std::string node;
  std::string index;
  std::string kind;
  std::string detail;
};

struct VirtualizationSweep {
  size_t nodes_checked = 0;
  size_t checks_run = 0;
  std::vector<SweepViolation> violations;

  bool passed() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Sweeps RC(infinity) of the given type to the stated depth and, for every
/// element and index, checks that the crystal operators commute with the
/// virtualization map into the simply-laced type of build_folding, that
/// epsilon/phi divide by gamma independently of the orbit representative,
/// that weights commute with Psi, and that images satisfy the membership
/// conditions.
VirtualizationSweep run_virtualization_sweep(CartanPtr cartan, Int depth);

}  // namespace kmc
