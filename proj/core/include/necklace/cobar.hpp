#pragma once

#include <necklace/cat_coalgebra.hpp>
#include <necklace/exact_linalg.hpp>

#include <nlohmann/json.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace necklace {

/// A desuspended cell {c}, or the formal inverse of an edge letter.
struct Letter {
  int cell = -1;
  bool inverse = false;
  auto operator<=>(const Letter&) const = default;
};

/// Morphism of the cobar category in normal form. Letters are listed in
/// path order: the word runs from `source` through each letter to `target`.
struct Word {
  int source = -1;
  int target = -1;
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

using WordSum = LinComb<Word>;

int shifted_degree(const CatCoalgebra& C, const Letter& l);
int letter_source(const CatCoalgebra& C, const Letter& l);
int letter_target(const CatCoalgebra& C, const Letter& l);
int degree(const CatCoalgebra& C, const Word& w);

Word identity_word(int x);
/// Word with endpoints taken from its letters; throws on broken chaining.
Word make_word(const CatCoalgebra& C, std::vector<Letter> letters);
Word letter_word(const CatCoalgebra& C, const Letter& l);

/// No adjacent g g^-1 or g^-1 g.
bool is_reduced(const Word& w);
/// Free reduction (confluent, so the order of cancellations is irrelevant).
Word reduce(Word w);

/// Path-order concatenation w1 then w2, reduced. Throws on endpoint mismatch.
Word compose(const Word& w1, const Word& w2);
WordSum compose(const WordSum& a, const WordSum& b);

/// D on a single letter: {d c} - sum (-1)^{|c'|} {c'|c''} - h(c) id.
WordSum letter_differential(const CatCoalgebra& C, const Letter& l);
/// Leibniz extension with Koszul signs in shifted degrees.
WordSum differential(const CatCoalgebra& C, const Word& w);
WordSum differential(const CatCoalgebra& C, const WordSum& x);

/// Signed count of edge letters; meaningful when there is one edge.
int winding(const CatCoalgebra& C, const Word& w);

struct WordQuery {
  int source = -1;
  int target = -1;
  int degree = 0;
  std::size_t max_length = 0;
  bool extended = false;
  std::optional<int> winding;
};

/// Normal-form words of the given degree and endpoints, ordered by
/// (degree, length, letters).
std::vector<Word> basis(const CatCoalgebra& C, const WordQuery& q);

/// All reduced words with length <= max_length and degree <= max_degree,
/// keyed by nothing in particular; used to build composite generators.
std::vector<Word> all_words(const CatCoalgebra& C, int max_degree, std::size_t max_length, bool extended,
                            bool include_identities = true);

/// Whether enumeration up to any length bound is complete in this setting.
bool enumeration_exact(const CatCoalgebra& C, bool extended, bool winding_fixed);

/// {c} -> {f0 c} + eps' f1(c) id, extended multiplicatively.
WordSum apply_morphism(const CatCoalgebraMorphism& f, const CatCoalgebra& C, const CatCoalgebra& Cp, const Word& w);

struct HomRequest {
  int source = -1;
  int target = -1;
  int min_degree = 0;
  int max_degree = 0;
  std::size_t max_length = 6;
  bool extended = false;
  std::optional<int> winding;
};

HomologyResult hom_homology(const CatCoalgebra& C, const HomRequest& r, const CoefficientRing& ring);

std::string to_string(const CatCoalgebra& C, const Word& w);
std::string to_string(const CatCoalgebra& C, const WordSum& x);
nlohmann::json to_json(const CatCoalgebra& C, const Word& w);

/// Degree-ordered comparison used for reproducible bases.
bool word_order(const CatCoalgebra& C, const Word& a, const Word& b);

}  // namespace necklace
