#include <necklace/complex_slice.hpp>
#include <necklace/hopf.hpp>

#include <algorithm>

namespace necklace {

namespace {

Word from_letters(const CatCoalgebra& C, int vertex, std::vector<Letter> ls) {
  if (ls.empty()) return identity_word(vertex);
  return make_word(C, std::move(ls));
}

/// Shuffle sign of the cut set B against its complement in 1..n-1.
int serre_sign(int n, unsigned mask) {
  int inversions = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((mask >> (i - 1) & 1u) && !(mask >> (j - 1) & 1u)) ++inversions;
  return sign_of_parity(inversions);
}

}  // namespace

LoopBialgebra::LoopBialgebra(const ChainsModel& M, bool flip_coproduct_sign) : M_(&M), flip_(flip_coproduct_sign) {
  if (M.C.set_likes.size() != 1) throw NotReducedError("the simplicial set must have exactly one vertex");
  vertex_ = M.C.set_likes.front();
}

const WordTensor& LoopBialgebra::letter_coproduct(const Letter& l) const {
  if (auto it = letter_cop_.find(l); it != letter_cop_.end()) return it->second;
  const CatCoalgebra& C = M_->C;
  WordTensor out;
  const int n = C.degree(l.cell);
  if (n == 1) {
    Word g = letter_word(C, l);
    out.add({g, g}, 1);
  } else {
    SimplexRef s{{}, C.cells.at(l.cell).name};
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> cut{0};
      for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1u) cut.push_back(i);
      cut.push_back(n);
      // Degenerate edges are identities; degenerate higher pieces vanish.
      bool zero = false;
      std::vector<Letter> left;
      for (std::size_t j = 0; j + 1 < cut.size() && !zero; ++j) {
        auto piece = M_->cell_of(interval_face(M_->X, s, cut[j], cut[j + 1]));
        if (piece) left.push_back(Letter{*piece, false});
        else if (cut[j + 1] - cut[j] > 1) zero = true;
      }
      if (zero) continue;
      std::vector<Letter> right;
      auto face = M_->cell_of(M_->face_on(l.cell, cut));
      if (face) right.push_back(Letter{*face, false});
      else if (cut.size() > 2) continue;
      out.add({from_letters(C, vertex_, left), from_letters(C, vertex_, right)}, (flip_ && mask != 0 ? -1 : 1) * serre_sign(n, mask));
    }
  }
  return letter_cop_.emplace(l, std::move(out)).first->second;
}

WordTensor LoopBialgebra::coproduct(const Word& w) const {
  const CatCoalgebra& C = M_->C;
  WordTensor acc;
  acc.add({unit(), unit()}, 1);
  for (const auto& l : w.letters) {
    WordTensor next;
    for (const auto& [xy, k] : acc)
      for (const auto& [ab, j] : letter_coproduct(l)) {
        int s = sign_of_parity(static_cast<long long>(degree(C, xy.second)) * degree(C, ab.first));
        next.add({compose(xy.first, ab.first), compose(xy.second, ab.second)}, k * j * s);
      }
    acc = std::move(next);
  }
  return acc;
}

WordTensor LoopBialgebra::coproduct(const WordSum& x) const {
  return extend_linear<WordPair>(x, [&](const Word& w) { return coproduct(w); });
}

Integer LoopBialgebra::counit(const Word& w) const { return degree(M_->C, w) == 0 ? 1 : 0; }

Integer LoopBialgebra::counit(const WordSum& x) const {
  Integer s = 0;
  for (const auto& [w, k] : x) s += k * counit(w);
  return s;
}

WordSum LoopBialgebra::multiply(const WordSum& a, const WordSum& b) const { return compose(a, b); }

WordSum LoopBialgebra::multiply(const WordTensor& t) const {
  WordSum out;
  for (const auto& [xy, k] : t) out.add(compose(xy.first, xy.second), k);
  return out;
}

WordSum LoopBialgebra::letter_antipode(const Letter& l) const {
  if (auto it = letter_anti_.find(l); it != letter_anti_.end()) return it->second;
  const CatCoalgebra& C = M_->C;
  WordSum out;
  if (C.degree(l.cell) == 1) {
    out.add(letter_word(C, Letter{l.cell, !l.inverse}), 1);
  } else {
    // s{x} R + sum over the other terms s(L) R' = 0, with R the single-letter
    // (or empty) right factor of the term whose left factor is {x} itself.
    Word self = letter_word(C, l);
    std::optional<Word> R;
    WordSum rest;
    for (const auto& [lr, k] : letter_coproduct(l)) {
      if (lr.first == self) {
        if (k != 1) throw std::logic_error("unexpected coefficient on the primitive part of a coproduct");
        R = lr.second;
        continue;
      }
      rest.add(compose(antipode(lr.first), WordSum(lr.second)), k);
    }
    if (!R) throw std::logic_error("coproduct lacks the {x} (x) R term");
    Word Rinv = unit();
    for (auto it = R->letters.rbegin(); it != R->letters.rend(); ++it)
      Rinv = compose(Rinv, letter_word(C, Letter{it->cell, !it->inverse}));
    out = -compose(rest, WordSum(Rinv));
  }
  return letter_anti_.emplace(l, out).first->second;
}

WordSum LoopBialgebra::antipode(const Word& w) const {
  const CatCoalgebra& C = M_->C;
  WordSum acc(unit());
  int acc_deg = 0;
  // s(x l) = (-1)^{|x||l|} s(l) s(x)
  for (const auto& l : w.letters) {
    int dl = shifted_degree(C, l);
    WordSum next = compose(letter_antipode(l), acc);
    if ((static_cast<long long>(acc_deg) * dl) % 2) next = -next;
    acc = std::move(next);
    acc_deg += dl;
  }
  return acc;
}

WordSum LoopBialgebra::antipode(const WordSum& x) const {
  return extend_linear<Word>(x, [&](const Word& w) { return antipode(w); });
}

WordSum LoopBialgebra::adjoint_action(const Word& a, const WordSum& b) const {
  const CatCoalgebra& C = M_->C;
  WordSum out;
  for (const auto& [bw, kb] : b) {
    int db = degree(C, bw);
    for (const auto& [xy, k] : coproduct(a)) {
      int s = sign_of_parity(static_cast<long long>(degree(C, xy.first)) * (degree(C, xy.second) + db));
      out.add(compose(WordSum(compose(xy.second, bw)), antipode(xy.first)), k * kb * s);
    }
  }
  return out;
}

WordSum LoopBialgebra::adjoint_action(const WordSum& a, const WordSum& b) const {
  WordSum out;
  for (const auto& [w, k] : a) out.add(adjoint_action(w, b), k);
  return out;
}

WordTensor LoopBialgebra::tensor_differential(const WordTensor& t) const {
  const CatCoalgebra& C = M_->C;
  WordTensor out;
  for (const auto& [xy, k] : t) {
    for (const auto& [w, j] : bar_side_differential(C, xy.first)) out.add({w, xy.second}, k * j);
    int s = sign_of_parity(degree(C, xy.first));
    for (const auto& [w, j] : bar_side_differential(C, xy.second)) out.add({xy.first, w}, k * j * s);
  }
  return out;
}

std::vector<WordSum> universal_twisting_cochain(const CatCoalgebra& C) {
  std::vector<WordSum> tau(C.size());
  for (int c = 0; c < C.size(); ++c)
    if (!C.is_set_like(c)) tau[c].add(letter_word(C, Letter{c, false}), 1);
  return tau;
}

TwistingReport twisting_cochain_check(const CatCoalgebra& C, const std::vector<WordSum>& tau) {
  TwistingReport rep;
  for (int c = 0; c < C.size(); ++c) {
    WordSum r = differential(C, tau.at(c));
    for (const auto& [y, k] : C.d.at(c)) r.add(tau.at(y), -k);
    for (const auto& [ab, k] : C.delta.at(c))
      r.add(compose(tau.at(ab.first), tau.at(ab.second)), k * sign_of_parity(C.degree(ab.first)));
    if (C.h.at(c) != 0) r.add(identity_word(C.cells[c].first), C.h[c]);
    if (!r.is_zero()) {
      rep.passed = false;
      rep.residuals.emplace(c, std::move(r));
    }
  }
  return rep;
}

int degree(const CatCoalgebra& C, const TwistedGen& g) { return C.degree(g.c) + degree(C, g.b); }

int degree(const CatCoalgebra& C, const AdGen& g) {
  int d = degree(C, g.b);
  for (const auto& a : g.bars) d += degree(C, a) + 1;
  return d;
}

int winding(const CatCoalgebra& C, const TwistedGen& g) {
  return (C.degree(g.c) == 1 ? 1 : 0) + winding(C, g.b);
}

TwistedSum twisted_differential(const LoopBialgebra& H, const TwistedGen& g) {
  const CatCoalgebra& C = H.coalgebra();
  TwistedSum out;
  const int dc = C.degree(g.c);
  for (const auto& [y, k] : C.d.at(g.c)) out.add(TwistedGen{y, g.b}, k);
  for (const auto& [w, k] : bar_side_differential(C, g.b)) out.add(TwistedGen{g.c, w}, k * sign_of_parity(dc));
  for (const auto& [xy, k] : C.delta.at(g.c)) {
    auto [x1, x2] = xy;
    // the counit of the cobar algebra is 1 on edge letters
    if (C.degree(x1) == 1) out.add(TwistedGen{x2, g.b}, k);
    if (C.degree(x2) > 0) {
      WordSum acted = H.adjoint_action(letter_word(C, Letter{x2, false}), WordSum(g.b));
      for (const auto& [w, j] : acted) out.add(TwistedGen{x1, w}, -k * j * sign_of_parity(C.degree(x1)));
    }
  }
  return out;
}

TwistedSum twisted_differential(const LoopBialgebra& H, const TwistedSum& x) {
  return extend_linear<TwistedGen>(x, [&](const TwistedGen& g) { return twisted_differential(H, g); });
}

AdSum ad_differential(const LoopBialgebra& H, const AdGen& g) {
  const CatCoalgebra& C = H.coalgebra();
  AdSum out;
  const std::size_t p = g.bars.size();
  int before = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& [w, k] : bar_side_differential(C, g.bars[i])) {
      if (w.is_identity()) continue;
      AdGen r = g;
      r.bars[i] = w;
      out.add(r, -k * sign_of_parity(before));
    }
    before += degree(C, g.bars[i]) + 1;
  }
  for (const auto& [w, k] : bar_side_differential(C, g.b)) out.add(AdGen{g.bars, w}, k * sign_of_parity(before));
  if (p == 0) return out;
  if (Integer e = H.counit(g.bars[0]); e != 0) out.add(AdGen{{g.bars.begin() + 1, g.bars.end()}, g.b}, e);
  before = 0;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    Word prod = compose(g.bars[i], g.bars[i + 1]);
    int s = sign_of_parity(before + degree(C, g.bars[i]) + 1);
    before += degree(C, g.bars[i]) + 1;
    if (prod.is_identity()) continue;
    AdGen r = g;
    r.bars.erase(r.bars.begin() + i + 1);
    r.bars[i] = prod;
    out.add(r, s);
  }
  std::vector<Word> head(g.bars.begin(), g.bars.end() - 1);
  for (const auto& [w, k] : H.adjoint_action(g.bars.back(), WordSum(g.b)))
    out.add(AdGen{head, w}, -k * sign_of_parity(before));
  return out;
}

AdSum ad_differential(const LoopBialgebra& H, const AdSum& x) {
  return extend_linear<AdGen>(x, [&](const AdGen& g) { return ad_differential(H, g); });
}

namespace {

/// All ways of splitting every bar by the coproduct, as
/// (second factors, product of first factors, Koszul sign of moving the
/// first factors to the far right past the remaining bars and b).
struct BarSplit {
  std::vector<Word> seconds;
  Word firsts;
  Integer coef;
};

std::vector<BarSplit> split_bars(const LoopBialgebra& H, const std::vector<Word>& bars, const Word& b) {
  const CatCoalgebra& C = H.coalgebra();
  std::vector<BarSplit> acc{BarSplit{{}, H.unit(), 1}};
  for (const auto& a : bars) {
    std::vector<BarSplit> next;
    for (const auto& part : acc)
      for (const auto& [xy, k] : H.coproduct(a)) {
        if (xy.second.is_identity()) continue;
        BarSplit s{part.seconds, compose(part.firsts, xy.first), part.coef * k};
        s.seconds.push_back(xy.second);
        next.push_back(std::move(s));
      }
    acc = std::move(next);
  }
  for (auto& s : acc) {
    long long e = 0;
    std::vector<int> first_deg;
    for (std::size_t i = 0; i < bars.size(); ++i) first_deg.push_back(degree(C, bars[i]) - degree(C, s.seconds[i]));
    for (std::size_t i = 0; i < bars.size(); ++i) {
      long long after = degree(C, s.seconds[i]) + degree(C, b);
      for (std::size_t j = i + 1; j < bars.size(); ++j) after += degree(C, s.seconds[j]) + 1;
      e += static_cast<long long>(first_deg[i]) * after;
    }
    if (e % 2) s.coef = -s.coef;
  }
  return acc;
}

}  // namespace

AdSum phi(const LoopBialgebra& H, const CHGen& g) {
  AdSum out;
  for (const auto& s : split_bars(H, g.bars, g.last))
    out.add(AdGen{s.seconds, compose(g.last, s.firsts)}, s.coef);
  return out;
}

CHSum phi_inverse(const LoopBialgebra& H, const AdGen& g) {
  CHSum out;
  for (const auto& s : split_bars(H, g.bars, g.b))
    for (const auto& [w, k] : H.antipode(s.firsts)) out.add(CHGen{s.seconds, compose(g.b, w)}, s.coef * k);
  return out;
}

AdSum phi(const LoopBialgebra& H, const CHSum& x) {
  return extend_linear<AdGen>(x, [&](const CHGen& g) { return phi(H, g); });
}

CHSum phi_inverse(const LoopBialgebra& H, const AdSum& x) {
  return extend_linear<CHGen>(x, [&](const AdGen& g) { return phi_inverse(H, g); });
}

CoChSum brown_to_coch(const LoopBialgebra& H, const TwistedGen& g) {
  const CatCoalgebra& C = H.coalgebra();
  AdSum lifted;
  for (const auto& [bg, k] : map_alpha(C, QGen{H.unit(), g.c, H.unit()})) lifted.add(AdGen{bg.bars, g.b}, k);
  return pi_bar(C, phi_inverse(H, lifted));
}

TwistedSum coch_to_brown(const LoopBialgebra& H, const CoChGen& g) {
  const CatCoalgebra& C = H.coalgebra();
  TwistedSum out;
  for (const auto& [ad, k] : phi(H, alpha_bar(C, g))) {
    if (ad.bars.empty()) {
      out.add(TwistedGen{H.vertex(), ad.b}, k);
      continue;
    }
    if (ad.bars.size() > 1) continue;
    const auto& ls = ad.bars.front().letters;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      // the counit kills the prefix unless it consists of edge letters
      if (i > 0 && C.degree(ls[i - 1].cell) != 1) break;
      Word tail = ls.begin() + i + 1 == ls.end() ? H.unit()
                                                 : make_word(C, std::vector<Letter>(ls.begin() + i + 1, ls.end()));
      for (const auto& [w, j] : H.adjoint_action(tail, WordSum(ad.b))) out.add(TwistedGen{ls[i].cell, w}, k * j);
    }
  }
  return out;
}

CoChSum brown_to_coch(const LoopBialgebra& H, const TwistedSum& x) {
  return extend_linear<CoChGen>(x, [&](const TwistedGen& g) { return brown_to_coch(H, g); });
}

TwistedSum coch_to_brown(const LoopBialgebra& H, const CoChSum& x) {
  return extend_linear<TwistedGen>(x, [&](const CoChGen& g) { return coch_to_brown(H, g); });
}

TwistedGen constant_loop(const LoopBialgebra& H, int cell) { return TwistedGen{cell, H.unit()}; }

std::vector<TwistedGen> twisted_basis(const LoopBialgebra& H, const TwistedQuery& q) {
  const CatCoalgebra& C = H.coalgebra();
  std::vector<TwistedGen> out;
  for (int c = 0; c < C.size(); ++c) {
    int rest = q.degree - C.degree(c);
    if (rest < 0) continue;
    std::optional<int> wind;
    if (q.winding) wind = *q.winding - (C.degree(c) == 1 ? 1 : 0);
    for (auto& w : basis(C, WordQuery{H.vertex(), H.vertex(), rest, q.max_length, true, wind}))
      out.push_back(TwistedGen{c, std::move(w)});
  }
  return out;
}

std::string to_string(const CatCoalgebra& C, const WordTensor& t) {
  std::string s;
  for (const auto& [xy, k] : t) {
    if (!s.empty()) s += " + ";
    s += k.get_str() + "*" + to_string(C, xy.first) + "(x)" + to_string(C, xy.second);
  }
  return s.empty() ? "0" : s;
}

std::string to_string(const CatCoalgebra& C, const TwistedGen& g) {
  return C.cells.at(g.c).name + "(x)" + to_string(C, g.b);
}

std::string to_string(const CatCoalgebra& C, const AdGen& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.bars.size(); ++i) s += (i ? "|" : "") + to_string(C, g.bars[i]);
  return s + "]" + to_string(C, g.b);
}

}  // namespace necklace
