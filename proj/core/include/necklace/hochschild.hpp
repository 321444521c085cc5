#pragma once

#include <necklace/cobar.hpp>

#include <optional>
#include <vector>

namespace necklace {

/// m[a1|...|ap]n in the two-sided bar construction with module slots taken
/// from the cobar category itself. Bars are never identities.
struct BarGen {
  Word m;
  std::vector<Word> bars;
  Word n;
  auto operator<=>(const BarGen&) const = default;
};

/// [a1|...|ap]a0 with the coefficient a0 closing the cycle back to a1.
struct CHGen {
  std::vector<Word> bars;
  Word last;
  auto operator<=>(const CHGen&) const = default;
};

using BarSum = LinComb<BarGen>;
using CHSum = LinComb<CHGen>;

int degree(const CatCoalgebra& C, const BarGen& g);
int degree(const CatCoalgebra& C, const CHGen& g);
std::size_t length(const BarGen& g);
std::size_t length(const CHGen& g);
int winding(const CatCoalgebra& C, const CHGen& g);
bool well_formed(const BarGen& g);
bool well_formed(const CHGen& g);

/// The differential of the cobar category in the Koszul convention used by
/// the bar side: the negative of `differential`. Both give isomorphic complexes.
WordSum bar_side_differential(const CatCoalgebra& C, const Word& w);

/// Pairs (m, n) of module elements are compatible with a cotensor product
/// over C_0 exactly when the endpoints agree.
std::vector<std::pair<Word, Word>> cotensor_basis(const std::vector<Word>& left, const std::vector<Word>& right);

BarSum bar_differential(const CatCoalgebra& C, const BarGen& g);
CHSum ch_differential(const CatCoalgebra& C, const CHGen& g);
CHSum connes_B(const CatCoalgebra& C, const CHGen& g);

BarSum bar_differential(const CatCoalgebra& C, const BarSum& x);
CHSum ch_differential(const CatCoalgebra& C, const CHSum& x);
CHSum connes_B(const CatCoalgebra& C, const CHSum& x);

/// m[b..]n (x) a0 -> +/- [b..](n a0 m).
CHSum close_up(const CatCoalgebra& C, const BarGen& g, const Word& a0, const Integer& coef = 1);

struct ChQuery {
  int degree = 0;
  std::size_t max_length = 4;
  bool extended_bars = false;
  bool extended_last = false;
  std::optional<int> winding;
};

std::vector<CHGen> ch_basis(const CatCoalgebra& C, const ChQuery& q);

struct BarQuery {
  int degree = 0;
  std::size_t max_length = 4;
  bool extended = false;
};

std::vector<BarGen> bar_basis(const CatCoalgebra& C, const BarQuery& q);

struct ChRequest {
  int min_degree = 0;
  int max_degree = 4;
  std::size_t max_length = 6;
  bool extended = false;
  std::optional<int> winding;
};

/// Whether CH enumeration up to a length bound captures every generator.
/// Only edge-free untruncated inputs qualify, in either mode.
bool ch_enumeration_exact(const CatCoalgebra& C, bool extended);

HomologyResult ch_homology(const CatCoalgebra& C, const ChRequest& r, const CoefficientRing& ring);

std::string to_string(const CatCoalgebra& C, const BarGen& g);
std::string to_string(const CatCoalgebra& C, const CHGen& g);

}  // namespace necklace
