#include <necklace/chains.hpp>
#include <necklace/complex_slice.hpp>
#include <necklace/fixtures.hpp>
#include <necklace/cohochschild.hpp>

#include <gtest/gtest.h>

using namespace necklace;

namespace {

ChainsModel model(const char* n) { return to_categorical_coalgebra(fixtures::by_name(n)); }

template <class Gen, class Q>
std::vector<Gen> up_to(int top, Q make) {
  std::vector<Gen> out;
  for (int d = 0; d <= top; ++d)
    for (auto& g : make(d)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST(Hochschild, BarAndCyclicDifferentialsSquareToZero) {
  for (const char* n : {"delta2", "circle", "sphere2", "reduced_triangle"}) {
    ChainsModel M = model(n);
    const CatCoalgebra& C = M.C;
    auto bar = up_to<BarGen>(3, [&](int d) { return bar_basis(C, BarQuery{d, 4, true}); });
    auto ch = up_to<CHGen>(3, [&](int d) { return ch_basis(C, ChQuery{d, 4, true, true, std::nullopt}); });
    EXPECT_FALSE(first_nonzero_square(bar, [&](const BarGen& g) { return bar_differential(C, g); })) << n;
    EXPECT_FALSE(first_nonzero_square(ch, [&](const CHGen& g) { return ch_differential(C, g); })) << n;
    EXPECT_FALSE(first_nonzero_square(ch, [&](const CHGen& g) { return connes_B(C, g); })) << n;
  }
}

TEST(Hochschild, CloseUpMovesModuleSlotsIntoTheCoefficient) {
  ChainsModel M = model("sphere2");
  const CatCoalgebra& C = M.C;
  const int v = C.set_likes.front();
  const Word s = make_word(C, {Letter{C.index_of("sigma"), false}});
  const Word one = identity_word(v);
  CHSum x = close_up(C, BarGen{s, {s}, one}, one);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.begin()->first, (CHGen{{s}, s}));
  // m = {sigma} passes [s] of degree 2: no sign.
  EXPECT_EQ(x.begin()->second, 1);
  CHSum y = close_up(C, BarGen{s, {}, s}, one);
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(y.begin()->first, (CHGen{{}, compose(s, s)}));
  // Here m passes n = {sigma} of degree 1.
  EXPECT_EQ(y.begin()->second, -1);
}

TEST(CoHochschild, SquaresAndMixedStructure) {
  for (const char* n : {"delta2", "circle", "sphere2", "boundary_delta3"}) {
    ChainsModel M = model(n);
    const CatCoalgebra& C = M.C;
    auto gens = up_to<CoChGen>(4, [&](int d) { return coch_basis(C, CoChQuery{d, 4, false, std::nullopt}); });
    EXPECT_FALSE(first_nonzero_square(gens, [&](const CoChGen& g) { return coch_differential(C, g); })) << n;
    EXPECT_FALSE(first_nonzero_square(gens, [&](const CoChGen& g) { return operator_P(C, g); })) << n;
    for (const auto& g : gens) {
      CoChSum x(g);
      EXPECT_TRUE((coch_differential(C, operator_P(C, x)) + operator_P(C, coch_differential(C, x))).is_zero())
          << n << " " << to_string(C, g);
    }
  }
}

TEST(CoHochschild, RoutesAgreeOnTheTwoSphere) {
  ChainsModel M = model("sphere2");
  for (const auto& ring : {CoefficientRing::integers(), CoefficientRing::prime_field(2), CoefficientRing::prime_field(3)}) {
    HomologyResult a = coch_homology(M.C, CoChRequest{0, 4, 6, false, std::nullopt}, ring);
    HomologyResult b = ch_homology(M.C, ChRequest{0, 4, 6, false, std::nullopt}, ring);
    EXPECT_EQ(a, b) << ring.name();
  }
}

TEST(CoHochschild, TwoSphereHasTwoTorsionInEvenDegrees) {
  ChainsModel M = model("sphere2");
  HomologyResult h = coch_homology(M.C, CoChRequest{0, 4, 6, false, std::nullopt}, CoefficientRing::integers());
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(h.degrees.at(n).free_rank, 1u) << n;
    EXPECT_EQ(h.degrees.at(n).torsion, (n >= 2 && n % 2 == 0 ? std::vector<Integer>{2} : std::vector<Integer>{})) << n;
  }
  // Over F_2 the torsion doubles up: H_n and H_{n+1} both gain a class.
  HomologyResult f2 = coch_homology(M.C, CoChRequest{0, 4, 6, false, std::nullopt}, CoefficientRing::prime_field(2));
  EXPECT_EQ(f2.degrees.at(1).free_rank, 1u);
  EXPECT_EQ(f2.degrees.at(2).free_rank, 2u);
  EXPECT_EQ(f2.degrees.at(3).free_rank, 2u);
}

TEST(CoHochschild, CircleSectors) {
  ChainsModel M = model("circle");
  for (int w = -3; w <= 3; ++w) {
    HomologyResult h = coch_homology(M.C, CoChRequest{0, 2, 6, true, w}, CoefficientRing::integers());
    EXPECT_EQ(h.degrees.at(0).free_rank, 1u) << w;
    EXPECT_EQ(h.degrees.at(1).free_rank, 1u) << w;
    EXPECT_EQ(h.degrees.at(2).free_rank, 0u) << w;
    EXPECT_TRUE(h.degrees.at(1).exact);
  }
}

TEST(CoHochschild, ContractionOnTheCircle) {
  ChainsModel M = model("circle");
  const CatCoalgebra& C = M.C;
  auto q = up_to<QGen>(3, [&](int d) { return q_basis(C, QQuery{d, 4, true}); });
  auto bar = up_to<BarGen>(3, [&](int d) { return bar_basis(C, BarQuery{d, 4, true}); });
  for (const auto& g : q) EXPECT_TRUE((map_pi(C, map_alpha(C, QSum(g))) - QSum(g)).is_zero()) << to_string(C, g);
  for (const auto& g : bar) {
    BarSum x(g);
    BarSum lhs = map_H(C, bar_differential(C, x)) + bar_differential(C, map_H(C, x));
    EXPECT_TRUE((lhs - map_alpha(C, map_pi(C, x)) + x).is_zero()) << to_string(C, g);
  }
}
