#pragma once

#include <necklace/hochschild.hpp>

#include <optional>
#include <vector>

namespace necklace {

/// x0{w}: a cell followed by a word running from its last vertex back to
/// its first, so the whole thing closes into a necklace.
struct CoChGen {
  int x0 = -1;
  Word w;
  auto operator<=>(const CoChGen&) const = default;
};

/// m □ c □ n with m ending where c starts and n starting where c ends.
struct QGen {
  Word m;
  int c = -1;
  Word n;
  auto operator<=>(const QGen&) const = default;
};

using CoChSum = LinComb<CoChGen>;
using QSum = LinComb<QGen>;

int degree(const CatCoalgebra& C, const CoChGen& g);
int degree(const CatCoalgebra& C, const QGen& q);
int winding(const CatCoalgebra& C, const CoChGen& g);
bool well_formed(const CatCoalgebra& C, const CoChGen& g);
bool well_formed(const CatCoalgebra& C, const QGen& q);

CoChSum coch_differential(const CatCoalgebra& C, const CoChGen& g);
CoChSum coch_differential(const CatCoalgebra& C, const CoChSum& x);

/// Rotation operator, nonzero only when x0 is set-like. Inverse letters
/// cannot move into the x0 slot and contribute nothing.
CoChSum operator_P(const CatCoalgebra& C, const CoChGen& g);
CoChSum operator_P(const CatCoalgebra& C, const CoChSum& x);

QSum q_differential(const CatCoalgebra& C, const QGen& q);
QSum q_differential(const CatCoalgebra& C, const QSum& x);

QSum map_pi(const CatCoalgebra& C, const BarGen& g);
BarSum map_alpha(const CatCoalgebra& C, const QGen& q);
BarSum map_H(const CatCoalgebra& C, const BarGen& g);

QSum map_pi(const CatCoalgebra& C, const BarSum& x);
BarSum map_alpha(const CatCoalgebra& C, const QSum& x);
BarSum map_H(const CatCoalgebra& C, const BarSum& x);

/// m □ c □ n (x) a0 -> +/- c{n a0 m}, and its inverse c{w} -> id □ c □ id (x) w.
CoChSum close_q(const CatCoalgebra& C, const QGen& q, const Word& a0, const Integer& coef = 1);

/// The maps between CH(Omega C) and coCH(C) induced by pi, alpha and H.
CoChSum pi_bar(const CatCoalgebra& C, const CHGen& g);
CHSum alpha_bar(const CatCoalgebra& C, const CoChGen& g);
CHSum H_bar(const CatCoalgebra& C, const CHGen& g);

CoChSum pi_bar(const CatCoalgebra& C, const CHSum& x);
CHSum alpha_bar(const CatCoalgebra& C, const CoChSum& x);
CHSum H_bar(const CatCoalgebra& C, const CHSum& x);

struct CoChQuery {
  int degree = 0;
  std::size_t max_length = 4;
  bool extended = false;
  std::optional<int> winding;
};

std::vector<CoChGen> coch_basis(const CatCoalgebra& C, const CoChQuery& q);

struct QQuery {
  int degree = 0;
  std::size_t max_length = 4;
  bool extended = false;
};

std::vector<QGen> q_basis(const CatCoalgebra& C, const QQuery& q);

struct CoChRequest {
  int min_degree = 0;
  int max_degree = 4;
  std::size_t max_length = 6;
  bool extended = false;
  std::optional<int> winding;
};

/// Whether coCH enumeration up to a length bound captures every generator.
bool coch_enumeration_exact(const CatCoalgebra& C, bool extended, bool winding_fixed);

HomologyResult coch_homology(const CatCoalgebra& C, const CoChRequest& r, const CoefficientRing& ring);

std::string to_string(const CatCoalgebra& C, const CoChGen& g);
std::string to_string(const CatCoalgebra& C, const QGen& q);

}  // namespace necklace
