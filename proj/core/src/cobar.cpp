#include <necklace/cobar.hpp>
#include <necklace/complex_slice.hpp>
#include <necklace/simplicial.hpp>

#include <algorithm>
#include <functional>

namespace necklace {

int shifted_degree(const CatCoalgebra& C, const Letter& l) { return l.inverse ? 0 : C.degree(l.cell) - 1; }

int letter_source(const CatCoalgebra& C, const Letter& l) {
  return l.inverse ? C.cells.at(l.cell).last : C.cells.at(l.cell).first;
}

int letter_target(const CatCoalgebra& C, const Letter& l) {
  return l.inverse ? C.cells.at(l.cell).first : C.cells.at(l.cell).last;
}

int degree(const CatCoalgebra& C, const Word& w) {
  int d = 0;
  for (const auto& l : w.letters) d += shifted_degree(C, l);
  return d;
}

Word identity_word(int x) { return Word{x, x, {}}; }

Word make_word(const CatCoalgebra& C, std::vector<Letter> letters) {
  if (letters.empty()) throw std::invalid_argument("make_word needs letters; use identity_word");
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letter_target(C, letters[i]) != letter_source(C, letters[i + 1]))
      throw std::invalid_argument("letters do not chain");
  int s = letter_source(C, letters.front());
  int t = letter_target(C, letters.back());
  return Word{s, t, std::move(letters)};
}

Word letter_word(const CatCoalgebra& C, const Letter& l) { return make_word(C, {l}); }

namespace {

bool cancels(const Letter& a, const Letter& b) { return a.cell == b.cell && a.inverse != b.inverse; }

}  // namespace

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (cancels(w.letters[i], w.letters[i + 1])) return false;
  return true;
}

Word reduce(Word w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (!out.empty() && cancels(out.back(), l)) out.pop_back();
    else out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

Word compose(const Word& w1, const Word& w2) {
  if (w1.target != w2.source) throw std::invalid_argument("compose: endpoint mismatch");
  Word w{w1.source, w2.target, w1.letters};
  w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
  return reduce(std::move(w));
}

WordSum compose(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [x, p] : a)
    for (const auto& [y, q] : b)
      if (x.target == y.source) out.add(compose(x, y), p * q);
  return out;
}

WordSum letter_differential(const CatCoalgebra& C, const Letter& l) {
  WordSum out;
  if (l.inverse) return out;
  int c = l.cell;
  for (const auto& [z, k] : C.d[c])
    if (C.degree(z) > 0) out.add(letter_word(C, Letter{z, false}), k);
  for (const auto& [xy, k] : C.reduced_coproduct(c))
    out.add(make_word(C, {Letter{xy.first, false}, Letter{xy.second, false}}), -k * sign_of_parity(C.degree(xy.first)));
  if (C.h[c] != 0) {
    if (C.cells[c].first != C.cells[c].last) throw std::logic_error("curvature on a non-loop cell");
    out.add(identity_word(C.cells[c].first), -C.h[c]);
  }
  return out;
}

WordSum differential(const CatCoalgebra& C, const Word& w) {
  WordSum out;
  int before = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    WordSum dl = letter_differential(C, l);
    int s = sign_of_parity(before);
    for (const auto& [t, k] : dl) {
      Word r{w.source, w.target, {}};
      r.letters.assign(w.letters.begin(), w.letters.begin() + i);
      r.letters.insert(r.letters.end(), t.letters.begin(), t.letters.end());
      r.letters.insert(r.letters.end(), w.letters.begin() + i + 1, w.letters.end());
      out.add(reduce(std::move(r)), k * s);
    }
    before += shifted_degree(C, l);
  }
  return out;
}

WordSum differential(const CatCoalgebra& C, const WordSum& x) {
  WordSum out;
  for (const auto& [w, k] : x) out.add(differential(C, w), k);
  return out;
}

int winding(const CatCoalgebra& C, const Word& w) {
  int k = 0;
  for (const auto& l : w.letters)
    if (C.degree(l.cell) == 1) k += l.inverse ? -1 : 1;
  return k;
}

bool word_order(const CatCoalgebra& C, const Word& a, const Word& b) {
  int da = degree(C, a), db = degree(C, b);
  if (da != db) return da < db;
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

namespace {

struct Alphabet {
  std::vector<Letter> letters;
};

Alphabet alphabet(const CatCoalgebra& C, int max_degree, bool extended) {
  Alphabet a;
  for (int c = 0; c < C.size(); ++c) {
    int d = C.degree(c);
    if (d < 1 || d - 1 > max_degree) continue;
    a.letters.push_back(Letter{c, false});
    if (extended && d == 1) a.letters.push_back(Letter{c, true});
  }
  return a;
}

// Depth-first walk over reduced words starting at `source`.
void walk(const CatCoalgebra& C, const Alphabet& A, int source, int max_degree, std::size_t max_length,
          const std::function<void(const Word&, int)>& visit) {
  Word w{source, source, {}};
  std::function<void(int)> rec = [&](int deg) {
    visit(w, deg);
    if (w.letters.size() >= max_length) return;
    for (const auto& l : A.letters) {
      if (letter_source(C, l) != w.target) continue;
      if (!w.letters.empty() && cancels(w.letters.back(), l)) continue;
      int nd = deg + shifted_degree(C, l);
      if (nd > max_degree) continue;
      int saved = w.target;
      w.letters.push_back(l);
      w.target = letter_target(C, l);
      rec(nd);
      w.letters.pop_back();
      w.target = saved;
    }
  };
  rec(0);
}

}  // namespace

std::vector<Word> basis(const CatCoalgebra& C, const WordQuery& q) {
  C.require_dimension(q.degree + 1);
  Alphabet A = alphabet(C, q.degree, q.extended);
  std::vector<Word> out;
  walk(C, A, q.source, q.degree, q.max_length, [&](const Word& w, int deg) {
    if (deg != q.degree || w.target != q.target) return;
    if (q.winding && winding(C, w) != *q.winding) return;
    out.push_back(w);
  });
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_order(C, a, b); });
  return out;
}

std::vector<Word> all_words(const CatCoalgebra& C, int max_degree, std::size_t max_length, bool extended,
                            bool include_identities) {
  C.require_dimension(max_degree + 1);
  Alphabet A = alphabet(C, max_degree, extended);
  std::vector<Word> out;
  for (int x : C.set_likes)
    walk(C, A, x, max_degree, max_length, [&](const Word& w, int) {
      if (w.is_identity() && !include_identities) return;
      out.push_back(w);
    });
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_order(C, a, b); });
  return out;
}

bool enumeration_exact(const CatCoalgebra& C, bool extended, bool winding_fixed) {
  auto edges = C.cells_of_degree(1);
  if (!extended || edges.empty()) return edges.empty() && !C.truncated;
  if (!winding_fixed || edges.size() != 1 || C.truncated) return false;
  for (int c = 0; c < C.size(); ++c)
    if (C.degree(c) >= 2) return false;
  return true;
}

namespace {

int image_vertex(const CatCoalgebraMorphism& f, int x) {
  const Chain& im = f.f0.at(x);
  if (im.size() != 1 || im.begin()->second != 1)
    throw std::invalid_argument("f0 does not send a set-like element to a set-like element");
  return im.begin()->first;
}

}  // namespace

WordSum apply_morphism(const CatCoalgebraMorphism& f, const CatCoalgebra& C, const CatCoalgebra& Cp, const Word& w) {
  WordSum acc(identity_word(image_vertex(f, w.source)));
  for (const auto& l : w.letters) {
    WordSum im;
    int s = image_vertex(f, letter_source(C, l));
    if (!l.inverse) {
      for (const auto& [z, k] : f.f0[l.cell]) {
        if (Cp.degree(z) == 0) continue;
        im.add(letter_word(Cp, Letter{z, false}), k);
      }
      Integer e = f1_bar(f, l.cell);
      if (e != 0) im.add(identity_word(s), e);
    } else {
      const Chain& g = f.f0[l.cell];
      if (g.size() != 1 || g.begin()->second != 1 || Cp.degree(g.begin()->first) != 1 || f1_bar(f, l.cell) != 0)
        throw std::domain_error("inverse letter whose image is not an edge letter");
      im.add(letter_word(Cp, Letter{g.begin()->first, true}), 1);
    }
    acc = compose(acc, im);
  }
  return acc;
}

HomologyResult hom_homology(const CatCoalgebra& C, const HomRequest& r, const CoefficientRing& ring) {
  HomologyResult res;
  bool exact = enumeration_exact(C, r.extended, r.winding.has_value());
  auto D = [&](const Word& w) { return differential(C, w); };
  for (int n = r.min_degree; n <= r.max_degree; ++n) {
    C.require_dimension(n + 2);
    std::size_t mid_len = r.max_length, up_len = r.max_length == 0 ? 0 : r.max_length - 1;
    if (exact) {
      std::size_t need = static_cast<std::size_t>(n + 2) + (r.winding ? static_cast<std::size_t>(std::abs(*r.winding)) : 0);
      mid_len = up_len = std::max(need, r.max_length);
    }
    WordQuery q{r.source, r.target, n, mid_len, r.extended, r.winding};
    auto middle = basis(C, q);
    q.degree = n + 1;
    q.max_length = up_len;
    auto upper = basis(C, q);
    DegreeHomology h = slice_homology(upper, middle, D, ring);
    h.exact = exact;
    res.degrees[n] = h;
  }
  return res;
}

std::string to_string(const CatCoalgebra& C, const Word& w) {
  if (w.is_identity()) return "id_" + C.cells[w.source].name;
  std::string s = "{";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += "|";
    s += C.cells[w.letters[i].cell].name;
    if (w.letters[i].inverse) s += "^-1";
  }
  return s + "}";
}

std::string to_string(const CatCoalgebra& C, const WordSum& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, k] : x) {
    if (!s.empty()) s += " + ";
    s += k.get_str() + "*" + to_string(C, w);
  }
  return s;
}

nlohmann::json to_json(const CatCoalgebra& C, const Word& w) {
  nlohmann::json ls = nlohmann::json::array();
  for (const auto& l : w.letters) ls.push_back(C.cells[l.cell].name + (l.inverse ? "^-1" : ""));
  return nlohmann::json::array({C.cells[w.source].name, ls, C.cells[w.target].name});
}

}  // namespace necklace
