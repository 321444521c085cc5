#include <necklace/complex_slice.hpp>
#include <necklace/hochschild.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace necklace {

namespace {

int suspended(const CatCoalgebra& C, const Word& a) { return degree(C, a) + 1; }

int bars_degree(const CatCoalgebra& C, const std::vector<Word>& bars) {
  int d = 0;
  for (const auto& a : bars) d += suspended(C, a);
  return d;
}

}  // namespace

int degree(const CatCoalgebra& C, const BarGen& g) {
  return degree(C, g.m) + bars_degree(C, g.bars) + degree(C, g.n);
}

int degree(const CatCoalgebra& C, const CHGen& g) { return bars_degree(C, g.bars) + degree(C, g.last); }

std::size_t length(const BarGen& g) {
  std::size_t l = g.m.length() + g.n.length();
  for (const auto& a : g.bars) l += a.length();
  return l;
}

std::size_t length(const CHGen& g) {
  std::size_t l = g.last.length();
  for (const auto& a : g.bars) l += a.length();
  return l;
}

int winding(const CatCoalgebra& C, const CHGen& g) {
  int w = winding(C, g.last);
  for (const auto& a : g.bars) w += winding(C, a);
  return w;
}

bool well_formed(const BarGen& g) {
  int at = g.m.target;
  for (const auto& a : g.bars) {
    if (a.is_identity() || a.source != at) return false;
    at = a.target;
  }
  return g.n.source == at;
}

bool well_formed(const CHGen& g) {
  if (g.bars.empty()) return g.last.source == g.last.target;
  int at = g.bars.front().source;
  for (const auto& a : g.bars) {
    if (a.is_identity() || a.source != at) return false;
    at = a.target;
  }
  return g.last.source == at && g.last.target == g.bars.front().source;
}

WordSum bar_side_differential(const CatCoalgebra& C, const Word& w) { return -differential(C, w); }

std::vector<std::pair<Word, Word>> cotensor_basis(const std::vector<Word>& left, const std::vector<Word>& right) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& a : left)
    for (const auto& b : right)
      if (a.target == b.source) out.emplace_back(a, b);
  return out;
}

BarSum bar_differential(const CatCoalgebra& C, const BarGen& g) {
  BarSum out;
  const int dm = degree(C, g.m);
  const std::size_t p = g.bars.size();

  for (const auto& [w, k] : bar_side_differential(C, g.m)) out.add(BarGen{w, g.bars, g.n}, k);

  int before = dm;  // degree of everything left of the current bar
  for (std::size_t i = 0; i < p; ++i) {
    int s = sign_of_parity(before);
    // d(s a) = -s(D a)
    for (const auto& [w, k] : bar_side_differential(C, g.bars[i])) {
      if (w.is_identity()) continue;
      BarGen r = g;
      r.bars[i] = w;
      out.add(r, -k * s);
    }
    before += suspended(C, g.bars[i]);
  }
  for (const auto& [w, k] : bar_side_differential(C, g.n)) out.add(BarGen{g.m, g.bars, w}, k * sign_of_parity(before));

  if (p == 0) return out;
  {
    BarGen r{compose(g.m, g.bars[0]), {g.bars.begin() + 1, g.bars.end()}, g.n};
    out.add(r, sign_of_parity(dm));
  }
  before = dm;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    Word prod = compose(g.bars[i], g.bars[i + 1]);
    int s = sign_of_parity(before) * sign_of_parity(degree(C, g.bars[i]) + 1);
    before += suspended(C, g.bars[i]);
    if (prod.is_identity()) continue;
    BarGen r = g;
    r.bars.erase(r.bars.begin() + i + 1);
    r.bars[i] = prod;
    out.add(r, s);
  }
  {
    BarGen r{g.m, {g.bars.begin(), g.bars.end() - 1}, compose(g.bars[p - 1], g.n)};
    out.add(r, -sign_of_parity(before));
  }
  return out;
}

BarSum bar_differential(const CatCoalgebra& C, const BarSum& x) {
  BarSum out;
  for (const auto& [g, k] : x) out.add(bar_differential(C, g), k);
  return out;
}

CHSum close_up(const CatCoalgebra& C, const BarGen& g, const Word& a0, const Integer& coef) {
  int dm = degree(C, g.m);
  int rest = bars_degree(C, g.bars) + degree(C, g.n) + degree(C, a0);
  Word tail = compose(compose(g.n, a0), g.m);
  CHSum out;
  out.add(CHGen{g.bars, tail}, coef * sign_of_parity(static_cast<long long>(dm) * rest));
  return out;
}

namespace {

BarGen open_up(const CHGen& g) {
  int s = g.bars.empty() ? g.last.target : g.bars.front().source;
  int t = g.bars.empty() ? g.last.source : g.bars.back().target;
  return BarGen{identity_word(s), g.bars, identity_word(t)};
}

}  // namespace

CHSum ch_differential(const CatCoalgebra& C, const CHGen& g) {
  BarGen x = open_up(g);
  CHSum out;
  for (const auto& [b, k] : bar_differential(C, x)) out += close_up(C, b, g.last, k);
  int s = sign_of_parity(degree(C, x));
  for (const auto& [w, k] : bar_side_differential(C, g.last)) out += close_up(C, x, w, k * s);
  return out;
}

CHSum ch_differential(const CatCoalgebra& C, const CHSum& x) {
  CHSum out;
  for (const auto& [g, k] : x) out.add(ch_differential(C, g), k);
  return out;
}

CHSum connes_B(const CatCoalgebra& C, const CHGen& g) {
  CHSum out;
  if (g.last.is_identity()) return out;
  std::vector<Word> cyc{g.last};
  cyc.insert(cyc.end(), g.bars.begin(), g.bars.end());
  std::vector<int> e;
  int total = 0;
  for (const auto& a : cyc) {
    e.push_back(suspended(C, a));
    total += e.back();
  }
  int head = 0;  // suspended degree of cyc[0..i)
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    std::vector<Word> bars(cyc.begin() + i, cyc.end());
    bars.insert(bars.end(), cyc.begin(), cyc.begin() + i);
    int sign = sign_of_parity(static_cast<long long>(head) * (total - head) +
                              static_cast<long long>(e[0] - 1) * (total - e[0]));
    out.add(CHGen{bars, identity_word(cyc[i].source)}, sign);
    head += e[i];
  }
  return out;
}

CHSum connes_B(const CatCoalgebra& C, const CHSum& x) {
  CHSum out;
  for (const auto& [g, k] : x) out.add(connes_B(C, g), k);
  return out;
}

namespace {

struct IndexedWord {
  Word w;
  int deg;
  std::size_t len;
};

/// Words grouped under a key and ordered by length, so scans can stop at
/// the first word that no longer fits.
template <class Key, class KeyOf>
std::map<Key, std::vector<IndexedWord>> index_words(const CatCoalgebra& C, const std::vector<Word>& ws, KeyOf key_of) {
  std::map<Key, std::vector<IndexedWord>> m;
  for (const auto& w : ws) m[key_of(w, degree(C, w))].push_back(IndexedWord{w, degree(C, w), w.length()});
  for (auto& [k, v] : m)
    std::stable_sort(v.begin(), v.end(), [](const IndexedWord& a, const IndexedWord& b) { return a.len < b.len; });
  return m;
}

const std::vector<IndexedWord>& lookup(const auto& m, const auto& key) {
  static const std::vector<IndexedWord> none;
  auto it = m.find(key);
  return it == m.end() ? none : it->second;
}

template <class Gen>
void sort_generators(const CatCoalgebra& C, std::vector<Gen>& gens) {
  std::vector<std::pair<int, std::size_t>> key(gens.size());
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    key[i] = {degree(C, gens[i]), length(gens[i])};
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return gens[a] < gens[b];
  });
  std::vector<Gen> sorted;
  sorted.reserve(gens.size());
  for (std::size_t i : order) sorted.push_back(std::move(gens[i]));
  gens = std::move(sorted);
}

}  // namespace

std::vector<CHGen> ch_basis(const CatCoalgebra& C, const ChQuery& q) {
  std::vector<CHGen> out;
  if (q.degree < 0) return out;
  C.require_dimension(q.degree + 1);
  auto bars = index_words<int>(C,
                               q.degree >= 1 ? all_words(C, q.degree - 1, q.max_length, q.extended_bars, false)
                                             : std::vector<Word>{},
                               [](const Word& w, int) { return w.source; });
  auto lasts = index_words<std::tuple<int, int, int>>(
      C, all_words(C, q.degree, q.max_length, q.extended_last, true),
      [](const Word& w, int d) { return std::tuple{w.source, w.target, d}; });
  for (int x : C.set_likes) {
    std::vector<Word> seq;
    std::function<void(int, int, std::size_t)> rec = [&](int at, int deg, std::size_t len) {
      for (const auto& a0 : lookup(lasts, std::tuple{at, x, q.degree - deg})) {
        if (len + a0.len > q.max_length) break;
        CHGen g{seq, a0.w};
        if (q.winding && winding(C, g) != *q.winding) continue;
        out.push_back(std::move(g));
      }
      for (const auto& a : lookup(bars, at)) {
        int nd = deg + a.deg + 1;
        std::size_t nl = len + a.len;
        if (nl > q.max_length) break;
        if (nd > q.degree) continue;
        seq.push_back(a.w);
        rec(a.w.target, nd, nl);
        seq.pop_back();
      }
    };
    rec(x, 0, 0);
  }
  sort_generators(C, out);
  return out;
}

std::vector<BarGen> bar_basis(const CatCoalgebra& C, const BarQuery& q) {
  std::vector<BarGen> out;
  if (q.degree < 0) return out;
  C.require_dimension(q.degree + 1);
  auto words = all_words(C, q.degree, q.max_length, q.extended, true);
  auto ends = index_words<std::pair<int, int>>(C, words, [](const Word& w, int d) { return std::pair{w.source, d}; });
  auto bars = index_words<int>(C,
                               q.degree >= 1 ? all_words(C, q.degree - 1, q.max_length, q.extended, false)
                                             : std::vector<Word>{},
                               [](const Word& w, int) { return w.source; });
  for (const auto& m : words) {
    BarGen g{m, {}, Word{}};
    std::function<void(int, int, std::size_t)> rec = [&](int at, int deg, std::size_t len) {
      for (const auto& n : lookup(ends, std::pair{at, q.degree - deg})) {
        if (len + n.len > q.max_length) break;
        g.n = n.w;
        out.push_back(g);
      }
      for (const auto& a : lookup(bars, at)) {
        int nd = deg + a.deg + 1;
        std::size_t nl = len + a.len;
        if (nl > q.max_length) break;
        if (nd > q.degree) continue;
        g.bars.push_back(a.w);
        rec(a.w.target, nd, nl);
        g.bars.pop_back();
      }
    };
    rec(m.target, degree(C, m), m.length());
  }
  sort_generators(C, out);
  return out;
}

bool ch_enumeration_exact(const CatCoalgebra& C, bool) {
  return !C.truncated && C.cells_of_degree(1).empty();
}

HomologyResult ch_homology(const CatCoalgebra& C, const ChRequest& r, const CoefficientRing& ring) {
  HomologyResult res;
  bool exact = ch_enumeration_exact(C, r.extended);
  auto d = [&](const CHGen& g) { return ch_differential(C, g); };
  for (int n = r.min_degree; n <= r.max_degree; ++n) {
    C.require_dimension(n + 2);
    std::size_t mid = r.max_length, up = r.max_length == 0 ? 0 : r.max_length - 1;
    if (exact) mid = up = static_cast<std::size_t>(n + 2);
    auto middle = ch_basis(C, ChQuery{n, mid, r.extended, r.extended, r.winding});
    auto upper = ch_basis(C, ChQuery{n + 1, up, r.extended, r.extended, r.winding});
    DegreeHomology h = slice_homology(upper, middle, d, ring);
    h.exact = exact;
    res.degrees[n] = h;
  }
  return res;
}

std::string to_string(const CatCoalgebra& C, const BarGen& g) {
  std::string s = to_string(C, g.m) + "[";
  for (std::size_t i = 0; i < g.bars.size(); ++i) s += (i ? "|" : "") + to_string(C, g.bars[i]);
  return s + "]" + to_string(C, g.n);
}

std::string to_string(const CatCoalgebra& C, const CHGen& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.bars.size(); ++i) s += (i ? "|" : "") + to_string(C, g.bars[i]);
  return s + "]" + to_string(C, g.last);
}

}  // namespace necklace
