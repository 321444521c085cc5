#pragma once

#include <necklace/hopf.hpp>

#include <string>
#include <utility>
#include <vector>

namespace necklace {

struct HopfWindow {
  int max_degree = 4;
  std::size_t max_length = 4;
  bool extended = false;
  /// Winding sectors checked for the homology comparisons when there is one edge.
  int max_winding = 3;
  /// Degrees up to which F and G are compared on homology.
  int homology_degree = 3;
};

struct IdentityCheck {
  IdentityCheck() = default;
  explicit IdentityCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
};

struct HopfSuiteReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
  /// Null when every identity holds.
  const IdentityCheck* first_failure() const;
};

/// Bialgebra, antipode, twisting-cochain and twisted-tensor identities over
/// the generators of a window, all checked with exact integer coefficients.
HopfSuiteReport hopf_suite(const LoopBialgebra& H, const HopfWindow& w);

}  // namespace necklace
