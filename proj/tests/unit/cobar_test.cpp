#include <necklace/chains.hpp>
#include <necklace/complex_slice.hpp>
#include <necklace/fixtures.hpp>
#include <necklace/hochschild.hpp>

#include <gtest/gtest.h>

using namespace necklace;

namespace {

ChainsModel model(const char* n) { return to_categorical_coalgebra(fixtures::by_name(n)); }

}  // namespace

TEST(Words, InverseLettersCancel) {
  ChainsModel M = model("circle");
  const CatCoalgebra& C = M.C;
  const int t = C.index_of("t");
  Word w = compose(make_word(C, {Letter{t, false}}), make_word(C, {Letter{t, true}}));
  EXPECT_TRUE(w.is_identity());
  EXPECT_EQ(winding(C, make_word(C, {Letter{t, false}, Letter{t, false}})), 2);
}

TEST(Cobar, DifferentialSquaresToZero) {
  for (const char* n : {"delta2", "boundary_delta3", "sphere2", "circle", "nerve_z2", "reduced_triangle"})
    for (bool ext : {false, true}) {
      ChainsModel M = model(n);
      auto words = all_words(M.C, M.C.truncated ? 2 : 3, 4, ext);
      EXPECT_FALSE(first_nonzero_square(words, [&](const Word& w) { return differential(M.C, w); })) << n;
    }
}

TEST(Cobar, LetterDifferentialOnTriangle) {
  ChainsModel M = model("delta2");
  const CatCoalgebra& C = M.C;
  auto l = [&](const char* s) { return Letter{C.index_of(s), false}; };
  WordSum d = letter_differential(C, l("012"));
  // d~(012) = -02 once the edge corrections cancel 01 and 12, and the
  // reduced coproduct 01 (x) 12 enters with -(-1)^{|01|} = +1.
  EXPECT_EQ(d.coefficient(make_word(C, {l("01"), l("12")})), 1);
  EXPECT_EQ(d.coefficient(make_word(C, {l("02")})), -1);
  EXPECT_EQ(d.size(), 2u);
}

TEST(Cobar, LoopsOnTheTwoSphere) {
  ChainsModel M = model("sphere2");
  const int v = M.C.set_likes.front();
  HomologyResult h = hom_homology(M.C, HomRequest{v, v, 0, 4, 6, false, std::nullopt}, CoefficientRing::integers());
  for (const auto& [n, d] : h.degrees) {
    EXPECT_EQ(d.free_rank, 1u) << n;
    EXPECT_TRUE(d.torsion.empty());
    EXPECT_TRUE(d.exact);
  }
}

TEST(Cobar, LoopsOnTheCircleAreLaurentPolynomials) {
  ChainsModel M = model("circle");
  const int v = M.C.set_likes.front();
  for (int w = -3; w <= 3; ++w) {
    HomologyResult h = hom_homology(M.C, HomRequest{v, v, 0, 2, 5, true, w}, CoefficientRing::integers());
    EXPECT_EQ(h.degrees.at(0).free_rank, 1u) << w;
    EXPECT_EQ(h.degrees.at(1).free_rank, 0u) << w;
    EXPECT_TRUE(h.degrees.at(0).exact);
  }
}

TEST(Cobar, TruncatedInputsAreFlagged) {
  ChainsModel M = model("nerve_z2");
  const int v = M.C.set_likes.front();
  HomologyResult h = hom_homology(M.C, HomRequest{v, v, 0, 0, 4, false, std::nullopt}, CoefficientRing::rationals());
  EXPECT_EQ(h.degrees.at(0).free_rank, 2u);
  EXPECT_FALSE(h.degrees.at(0).exact);
}
