#include <necklace/cohochschild.hpp>
#include <necklace/complex_slice.hpp>

#include <algorithm>
#include <cstdlib>

namespace necklace {

namespace {

Word cell_word(const CatCoalgebra& C, int c) { return letter_word(C, Letter{c, false}); }

int cell_winding(const CatCoalgebra& C, int c) { return C.degree(c) == 1 ? 1 : 0; }

/// Words spelled by a prefix or suffix of a word's letters.
Word sub_word(const CatCoalgebra& C, const Word& w, std::size_t from, std::size_t to) {
  if (from >= to) return identity_word(from < w.letters.size() ? letter_source(C, w.letters[from]) : w.target);
  return make_word(C, std::vector<Letter>(w.letters.begin() + from, w.letters.begin() + to));
}

}  // namespace

int degree(const CatCoalgebra& C, const CoChGen& g) { return C.degree(g.x0) + degree(C, g.w); }

int degree(const CatCoalgebra& C, const QGen& q) { return degree(C, q.m) + C.degree(q.c) + degree(C, q.n); }

int winding(const CatCoalgebra& C, const CoChGen& g) { return cell_winding(C, g.x0) + winding(C, g.w); }

bool well_formed(const CatCoalgebra& C, const CoChGen& g) {
  const Cell& x = C.cells.at(g.x0);
  return g.w.source == x.last && g.w.target == x.first;
}

bool well_formed(const CatCoalgebra& C, const QGen& q) {
  const Cell& x = C.cells.at(q.c);
  return q.m.target == x.first && q.n.source == x.last;
}

CoChSum coch_differential(const CatCoalgebra& C, const CoChGen& g) {
  CoChSum out;
  const int dx = C.degree(g.x0), dw = degree(C, g.w);
  for (const auto& [y, k] : C.d.at(g.x0)) out.add(CoChGen{y, g.w}, k);
  for (const auto& [w, k] : bar_side_differential(C, g.w)) out.add(CoChGen{g.x0, w}, k * sign_of_parity(dx));
  for (const auto& [ab, k] : C.delta.at(g.x0)) {
    auto [a, b] = ab;
    if (C.degree(a) > 0) {
      int s = sign_of_parity(static_cast<long long>(C.degree(a) - 1) * (C.degree(b) + dw));
      out.add(CoChGen{b, compose(g.w, cell_word(C, a))}, k * s);
    }
    if (C.degree(b) > 0) out.add(CoChGen{a, compose(cell_word(C, b), g.w)}, -k * sign_of_parity(C.degree(a)));
  }
  return out;
}

CoChSum coch_differential(const CatCoalgebra& C, const CoChSum& x) {
  return extend_linear<CoChGen>(x, [&](const CoChGen& g) { return coch_differential(C, g); });
}

CoChSum operator_P(const CatCoalgebra& C, const CoChGen& g) {
  CoChSum out;
  if (!C.is_set_like(g.x0)) return out;
  const auto& ls = g.w.letters;
  const std::size_t p = ls.size();
  int total = degree(C, g.w);
  int head = 0;  // shifted degree of the letters before position i
  for (std::size_t i = 0; i < p; ++i) {
    int e = shifted_degree(C, ls[i]);
    if (!ls[i].inverse) {
      std::vector<Letter> rot(ls.begin() + i + 1, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + i);
      const Cell& x = C.cells.at(ls[i].cell);
      Word w = rot.empty() ? identity_word(x.last) : make_word(C, rot);
      out.add(CoChGen{ls[i].cell, w}, sign_of_parity(static_cast<long long>(head) * (total - head)));
    }
    head += e;
  }
  return out;
}

CoChSum operator_P(const CatCoalgebra& C, const CoChSum& x) {
  return extend_linear<CoChGen>(x, [&](const CoChGen& g) { return operator_P(C, g); });
}

QSum q_differential(const CatCoalgebra& C, const QGen& q) {
  QSum out;
  const int dm = degree(C, q.m), dc = C.degree(q.c);
  for (const auto& [w, k] : bar_side_differential(C, q.m)) out.add(QGen{w, q.c, q.n}, k);
  for (const auto& [y, k] : C.d.at(q.c)) out.add(QGen{q.m, y, q.n}, k * sign_of_parity(dm));
  for (const auto& [w, k] : bar_side_differential(C, q.n)) out.add(QGen{q.m, q.c, w}, k * sign_of_parity(dm + dc));
  for (const auto& [ab, k] : C.delta.at(q.c)) {
    auto [a, b] = ab;
    if (C.degree(a) > 0) out.add(QGen{compose(q.m, cell_word(C, a)), b, q.n}, k * sign_of_parity(dm));
    if (C.degree(b) > 0)
      out.add(QGen{q.m, a, compose(cell_word(C, b), q.n)}, -k * sign_of_parity(dm + C.degree(a)));
  }
  return out;
}

QSum q_differential(const CatCoalgebra& C, const QSum& x) {
  return extend_linear<QGen>(x, [&](const QGen& q) { return q_differential(C, q); });
}

CoChSum close_q(const CatCoalgebra& C, const QGen& q, const Word& a0, const Integer& coef) {
  int dm = degree(C, q.m);
  int rest = C.degree(q.c) + degree(C, q.n) + degree(C, a0);
  CoChSum out;
  out.add(CoChGen{q.c, compose(compose(q.n, a0), q.m)}, coef * sign_of_parity(static_cast<long long>(dm) * rest));
  return out;
}

namespace {

using Splits = LinComb<std::vector<int>>;

/// Iterated reduced coproducts c -> c, c'|c'', c'|c''|c''', ...
Splits splits(const CatCoalgebra& C, int c) {
  Splits out;
  out.add(std::vector<int>{c}, 1);
  for (const auto& [ab, k] : C.reduced_coproduct(c))
    for (const auto& [tail, j] : splits(C, ab.second)) {
      std::vector<int> seq{ab.first};
      seq.insert(seq.end(), tail.begin(), tail.end());
      out.add(seq, k * j);
    }
  return out;
}

std::vector<Word> letter_bars(const CatCoalgebra& C, const std::vector<int>& cells) {
  std::vector<Word> out;
  for (int c : cells) out.push_back(cell_word(C, c));
  return out;
}

}  // namespace

QSum map_pi(const CatCoalgebra& C, const BarGen& g) {
  QSum out;
  if (g.bars.empty()) {
    out.add(QGen{g.m, g.m.target, g.n}, 1);
    return out;
  }
  if (g.bars.size() > 1) return out;
  const Word& a = g.bars.front();
  const std::size_t q = a.letters.size();
  int before = 0;
  for (std::size_t i = 0; i < q; ++i) {
    const Letter& l = a.letters[i];
    int s = sign_of_parity(before);
    if (!l.inverse) {
      out.add(QGen{compose(g.m, sub_word(C, a, 0, i)), l.cell, compose(sub_word(C, a, i + 1, q), g.n)}, s);
    } else {
      out.add(QGen{compose(g.m, sub_word(C, a, 0, i + 1)), l.cell, compose(sub_word(C, a, i, q), g.n)}, -s);
    }
    before += shifted_degree(C, l);
  }
  return out;
}

BarSum map_alpha(const CatCoalgebra& C, const QGen& q) {
  BarSum out;
  if (C.is_set_like(q.c)) {
    out.add(BarGen{q.m, {}, q.n}, 1);
    return out;
  }
  for (const auto& [seq, k] : splits(C, q.c)) out.add(BarGen{q.m, letter_bars(C, seq), q.n}, k);
  return out;
}

BarSum map_H(const CatCoalgebra& C, const BarGen& g) {
  BarSum out;
  if (g.bars.empty()) return out;
  const Word& a = g.bars.front();
  const std::size_t q = a.letters.size();
  const std::vector<Word> rest(g.bars.begin() + 1, g.bars.end());
  const int dm = degree(C, g.m);
  for (std::size_t i = 0; i < q; ++i) {
    const Letter& l = a.letters[i];
    int s = sign_of_parity(dm + shifted_degree(C, l));
    if (!l.inverse) {
      if (i + 1 == q) break;
      Word m = compose(g.m, sub_word(C, a, 0, i));
      Word tail = sub_word(C, a, i + 1, q);
      for (const auto& [seq, k] : splits(C, l.cell)) {
        std::vector<Word> bars = letter_bars(C, seq);
        bars.push_back(tail);
        bars.insert(bars.end(), rest.begin(), rest.end());
        out.add(BarGen{m, bars, g.n}, k * s);
      }
    } else {
      Word m = compose(g.m, sub_word(C, a, 0, i + 1));
      std::vector<Word> bars{cell_word(C, l.cell), sub_word(C, a, i, q)};
      bars.insert(bars.end(), rest.begin(), rest.end());
      out.add(BarGen{m, bars, g.n}, -s);
    }
  }
  return out;
}

QSum map_pi(const CatCoalgebra& C, const BarSum& x) {
  return extend_linear<QGen>(x, [&](const BarGen& g) { return map_pi(C, g); });
}

BarSum map_alpha(const CatCoalgebra& C, const QSum& x) {
  return extend_linear<BarGen>(x, [&](const QGen& q) { return map_alpha(C, q); });
}

BarSum map_H(const CatCoalgebra& C, const BarSum& x) {
  return extend_linear<BarGen>(x, [&](const BarGen& g) { return map_H(C, g); });
}

namespace {

BarGen open_ch(const CHGen& g) {
  int s = g.bars.empty() ? g.last.target : g.bars.front().source;
  int t = g.bars.empty() ? g.last.source : g.bars.back().target;
  return BarGen{identity_word(s), g.bars, identity_word(t)};
}

}  // namespace

CoChSum pi_bar(const CatCoalgebra& C, const CHGen& g) {
  CoChSum out;
  for (const auto& [q, k] : map_pi(C, open_ch(g))) out += close_q(C, q, g.last, k);
  return out;
}

CHSum alpha_bar(const CatCoalgebra& C, const CoChGen& g) {
  const Cell& x = C.cells.at(g.x0);
  CHSum out;
  for (const auto& [b, k] : map_alpha(C, QGen{identity_word(x.first), g.x0, identity_word(x.last)}))
    out += close_up(C, b, g.w, k);
  return out;
}

CHSum H_bar(const CatCoalgebra& C, const CHGen& g) {
  CHSum out;
  for (const auto& [b, k] : map_H(C, open_ch(g))) out += close_up(C, b, g.last, k);
  return out;
}

CoChSum pi_bar(const CatCoalgebra& C, const CHSum& x) {
  return extend_linear<CoChGen>(x, [&](const CHGen& g) { return pi_bar(C, g); });
}

CHSum alpha_bar(const CatCoalgebra& C, const CoChSum& x) {
  return extend_linear<CHGen>(x, [&](const CoChGen& g) { return alpha_bar(C, g); });
}

CHSum H_bar(const CatCoalgebra& C, const CHSum& x) {
  return extend_linear<CHGen>(x, [&](const CHGen& g) { return H_bar(C, g); });
}

std::vector<CoChGen> coch_basis(const CatCoalgebra& C, const CoChQuery& q) {
  std::vector<CoChGen> out;
  for (int c = 0; c < C.size(); ++c) {
    int rest = q.degree - C.degree(c);
    if (rest < 0) continue;
    const Cell& x = C.cells[c];
    std::optional<int> wind;
    if (q.winding) wind = *q.winding - cell_winding(C, c);
    for (auto& w : basis(C, WordQuery{x.last, x.first, rest, q.max_length, q.extended, wind}))
      out.push_back(CoChGen{c, std::move(w)});
  }
  std::sort(out.begin(), out.end(), [](const CoChGen& a, const CoChGen& b) {
    if (a.w.length() != b.w.length()) return a.w.length() < b.w.length();
    return a < b;
  });
  return out;
}

std::vector<QGen> q_basis(const CatCoalgebra& C, const QQuery& q) {
  auto words = all_words(C, q.degree, q.max_length, q.extended);
  std::vector<QGen> out;
  for (int c = 0; c < C.size(); ++c) {
    const Cell& x = C.cells[c];
    for (const auto& m : words) {
      if (m.target != x.first) continue;
      int dm = degree(C, m);
      for (const auto& n : words) {
        if (n.source != x.last || m.length() + n.length() > q.max_length) continue;
        if (dm + C.degree(c) + degree(C, n) == q.degree) out.push_back(QGen{m, c, n});
      }
    }
  }
  return out;
}

bool coch_enumeration_exact(const CatCoalgebra& C, bool extended, bool winding_fixed) {
  return enumeration_exact(C, extended, winding_fixed);
}

HomologyResult coch_homology(const CatCoalgebra& C, const CoChRequest& r, const CoefficientRing& ring) {
  HomologyResult res;
  bool exact = coch_enumeration_exact(C, r.extended, r.winding.has_value());
  auto d = [&](const CoChGen& g) { return coch_differential(C, g); };
  for (int n = r.min_degree; n <= r.max_degree; ++n) {
    C.require_dimension(n + 2);
    std::size_t mid = r.max_length, up = r.max_length == 0 ? 0 : r.max_length - 1;
    if (exact) {
      std::size_t need = static_cast<std::size_t>(n + 2) + (r.winding ? static_cast<std::size_t>(std::abs(*r.winding)) : 0);
      mid = up = std::max(need, r.max_length);
    }
    auto middle = coch_basis(C, CoChQuery{n, mid, r.extended, r.winding});
    auto upper = coch_basis(C, CoChQuery{n + 1, up, r.extended, r.winding});
    DegreeHomology h = slice_homology(upper, middle, d, ring);
    h.exact = exact;
    res.degrees[n] = h;
  }
  return res;
}

std::string to_string(const CatCoalgebra& C, const CoChGen& g) {
  return C.cells.at(g.x0).name + to_string(C, g.w);
}

std::string to_string(const CatCoalgebra& C, const QGen& q) {
  return to_string(C, q.m) + " # " + C.cells.at(q.c).name + " # " + to_string(C, q.n);
}

}  // namespace necklace
