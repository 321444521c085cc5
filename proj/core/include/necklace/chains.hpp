#pragma once

#include <necklace/cat_coalgebra.hpp>
#include <necklace/simplicial.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace necklace {

/// Sign conventions for the normalized chains coalgebra. The defaults are
/// the repository convention; the switches exist for negative controls.
struct ChainsOptions {
  bool flip_correction_sign = false;  ///< d~ = boundary - (id(x)e~ - e~(x)id) Delta
  bool zero_curvature = false;
};

/// Normalized chains on X packaged as a categorical coalgebra, together
/// with the presentation it came from.
struct ChainsModel {
  SimplicialSet X;
  CatCoalgebra C;
  std::map<std::string, int> index;

  /// Cell of a simplex reference, or nullopt when the reference is degenerate.
  std::optional<int> cell_of(const SimplexRef& r) const;
  /// Face of a cell on increasing vertex positions.
  SimplexRef face_on(int cell, const std::vector<int>& vertices) const;
};

ChainsModel to_categorical_coalgebra(const SimplicialSet& X, std::optional<int> dimension_cap = std::nullopt,
                                     ChainsOptions opts = {});

/// sigma(0..i) (x) sigma(i..n), degenerate factors dropped; with reduced set,
/// only pairs of positive-degree factors survive.
Chain2 aw_coproduct(const ChainsModel& M, int cell, bool reduced = false);

/// Sum of coefficients on nondegenerate edges. Throws on wrong degree.
Integer e_tilde(const ChainsModel& M, const Chain& x);

/// Alternating sum of faces with degenerate faces dropped.
Chain boundary(const ChainsModel& M, int cell);

Chain tilde_differential(const ChainsModel& M, int cell, const ChainsOptions& opts = {});

/// h = (e~ (x) e~) Delta + e~ boundary on a 2-simplex.
Integer curvature(const ChainsModel& M, int cell);

}  // namespace necklace
