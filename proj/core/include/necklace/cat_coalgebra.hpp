#pragma once

#include <necklace/linear_combination.hpp>

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace necklace {

using Chain = LinComb<int>;
using Chain2 = LinComb<std::pair<int, int>>;

struct Cell {
  std::string name;
  int degree = 0;
  int first = -1;  ///< set-like reached by the left coaction
  int last = -1;   ///< set-like reached by the right coaction
};

/// Curved coalgebra with set-like degree-0 part, stored as explicit tables
/// up to a dimension cap. Cells are indexed by position in `cells`.
struct CatCoalgebra {
  std::string name;
  int dimension_cap = 0;
  bool truncated = false;

  std::vector<Cell> cells;
  std::vector<Chain2> delta;    ///< full coproduct
  std::vector<Chain> d;         ///< degree -1 coderivation
  std::vector<Integer> h;       ///< curvature, nonzero only in degree 2
  std::vector<int> set_likes;

  int size() const { return static_cast<int>(cells.size()); }
  int degree(int c) const { return cells.at(c).degree; }
  bool is_set_like(int c) const { return cells.at(c).degree == 0; }
  int index_of(const std::string& name) const;
  std::vector<int> cells_of_degree(int n) const;
  int max_degree() const;

  /// The part of the coproduct with both factors of positive degree.
  Chain2 reduced_coproduct(int c) const;

  /// Throws CapExceededError when a computation needs cells of dimension n
  /// and the stored tables stop short of the true object.
  void require_dimension(int n) const;
};

Integer counit(const CatCoalgebra& C, int c);

/// Applies a table-defined linear map to a chain.
Chain apply_table(const std::vector<Chain>& table, const Chain& x);

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  bool verifiable = true;
  std::string witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool ok() const;
  const AxiomResult* find(const std::string& axiom) const;
};

/// Checks the structure tables: set-likes span degree 0, counit,
/// coassociativity, cotensor factorization, coderivation, d = 0 on degree 1,
/// the curvature identity d^2 = (h (x) id)(Delta - Delta^op) and h d = 0.
AxiomReport check_axioms(const CatCoalgebra& C);

/// (f0, f1): f0 preserves degree, f1 lowers it by one and lands in C'_0.
struct CatCoalgebraMorphism {
  std::vector<Chain> f0;
  std::vector<Chain> f1;
};

CatCoalgebraMorphism identity_morphism(const CatCoalgebra& C);

/// eps' o f1 evaluated on a cell.
Integer f1_bar(const CatCoalgebraMorphism& f, int c);

AxiomReport check_morphism(const CatCoalgebraMorphism& f, const CatCoalgebra& C, const CatCoalgebra& Cp);

/// (g0 f0, g1 f0 + g0 f1).
CatCoalgebraMorphism compose(const CatCoalgebraMorphism& g, const CatCoalgebraMorphism& f);

bool operator==(const CatCoalgebraMorphism& a, const CatCoalgebraMorphism& b);

/// Target structure that makes (id, f1) a morphism out of C: d and h are
/// rebalanced by the two morphism equations.
CatCoalgebra rebalance(const CatCoalgebra& C, const std::vector<Chain>& f1);

nlohmann::json debug_dump(const CatCoalgebra& C);

}  // namespace necklace
