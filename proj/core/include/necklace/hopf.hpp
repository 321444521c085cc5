#pragma once

#include <necklace/chains.hpp>
#include <necklace/cohochschild.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace necklace {

using WordPair = std::pair<Word, Word>;
using WordTensor = LinComb<WordPair>;

class NotReducedError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bialgebra structure on the one-object (extended) cobar construction of
/// the chains on a reduced simplicial set.
class LoopBialgebra {
public:
  /// Throws NotReducedError unless X has exactly one vertex. With
  /// flip_coproduct_sign every term of a simplex-letter coproduct other than
  /// x (x) 1 changes sign; this is a negative control and breaks the axioms.
  explicit LoopBialgebra(const ChainsModel& M, bool flip_coproduct_sign = false);

  const ChainsModel& model() const { return *M_; }
  const CatCoalgebra& coalgebra() const { return M_->C; }
  int vertex() const { return vertex_; }
  Word unit() const { return identity_word(vertex_); }

  /// Coproduct on a single letter: the Serre-diagonal formula for a
  /// simplex letter, group-like for edges and their inverses.
  const WordTensor& letter_coproduct(const Letter& l) const;
  WordTensor coproduct(const Word& w) const;
  WordTensor coproduct(const WordSum& x) const;

  Integer counit(const Word& w) const;
  Integer counit(const WordSum& x) const;

  /// Anti-multiplicative, inverting edge letters, and on a simplex letter
  /// solved from mu (s (x) id) nabla = eta eps.
  WordSum antipode(const Word& w) const;
  WordSum antipode(const WordSum& x) const;

  WordSum multiply(const WordSum& a, const WordSum& b) const;
  WordSum multiply(const WordTensor& t) const;

  /// a . b = sum (-1)^{|a'|(|a''|+|b|)} a'' b s(a').
  WordSum adjoint_action(const Word& a, const WordSum& b) const;
  WordSum adjoint_action(const WordSum& a, const WordSum& b) const;

  /// (D (x) id + id (x) D) with Koszul signs, D the bar-side differential.
  WordTensor tensor_differential(const WordTensor& t) const;

private:
  WordSum letter_antipode(const Letter& l) const;

  const ChainsModel* M_;
  int vertex_ = -1;
  bool flip_ = false;
  mutable std::map<Letter, WordTensor> letter_cop_;
  mutable std::map<Letter, WordSum> letter_anti_;
};

/// Universal twisting cochain x -> {x}; set-likes go to zero.
std::vector<WordSum> universal_twisting_cochain(const CatCoalgebra& C);

struct TwistingReport {
  bool passed = true;
  /// Residual of D tau - tau d + mu (tau (x) tau) Delta + h on each cell.
  std::map<int, WordSum> residuals;
};

/// Curved twisting-cochain condition, checked cell by cell.
TwistingReport twisting_cochain_check(const CatCoalgebra& C, const std::vector<WordSum>& tau);

/// c (x) b in the twisted tensor product C (x)_iota ad(extended cobar).
struct TwistedGen {
  int c = -1;
  Word b;
  auto operator<=>(const TwistedGen&) const = default;
};
using TwistedSum = LinComb<TwistedGen>;

/// [a1|...|ap]b in Bar(k, A, ad B): bars from the cobar algebra, b from the
/// extended one acted on through the adjoint action.
struct AdGen {
  std::vector<Word> bars;
  Word b;
  auto operator<=>(const AdGen&) const = default;
};
using AdSum = LinComb<AdGen>;

int degree(const CatCoalgebra& C, const TwistedGen& g);
int degree(const CatCoalgebra& C, const AdGen& g);
int winding(const CatCoalgebra& C, const TwistedGen& g);

TwistedSum twisted_differential(const LoopBialgebra& H, const TwistedGen& g);
TwistedSum twisted_differential(const LoopBialgebra& H, const TwistedSum& x);

AdSum ad_differential(const LoopBialgebra& H, const AdGen& g);
AdSum ad_differential(const LoopBialgebra& H, const AdSum& x);

/// CH(A, B) -> C(A, ad B) and its inverse built from the antipode.
AdSum phi(const LoopBialgebra& H, const CHGen& g);
CHSum phi_inverse(const LoopBialgebra& H, const AdGen& g);
AdSum phi(const LoopBialgebra& H, const CHSum& x);
CHSum phi_inverse(const LoopBialgebra& H, const AdSum& x);

/// Twisted tensor product to extended coCH and back.
CoChSum brown_to_coch(const LoopBialgebra& H, const TwistedGen& g);
TwistedSum coch_to_brown(const LoopBialgebra& H, const CoChGen& g);
CoChSum brown_to_coch(const LoopBialgebra& H, const TwistedSum& x);
TwistedSum coch_to_brown(const LoopBialgebra& H, const CoChSum& x);

/// x -> x (x) 1.
TwistedGen constant_loop(const LoopBialgebra& H, int cell);

struct TwistedQuery {
  int degree = 0;
  std::size_t max_length = 4;
  std::optional<int> winding;
};

std::vector<TwistedGen> twisted_basis(const LoopBialgebra& H, const TwistedQuery& q);

std::string to_string(const CatCoalgebra& C, const WordTensor& t);
std::string to_string(const CatCoalgebra& C, const TwistedGen& g);
std::string to_string(const CatCoalgebra& C, const AdGen& g);

}  // namespace necklace
