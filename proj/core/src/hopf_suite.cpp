#include <necklace/complex_slice.hpp>
#include <necklace/hopf_suite.hpp>

#include <algorithm>
#include <functional>

namespace necklace {

bool HopfSuiteReport::ok() const { return first_failure() == nullptr; }

const IdentityCheck* HopfSuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

template <class Key, class Pred>
IdentityCheck check_all(std::string name, const CatCoalgebra& C, const std::vector<Key>& keys, Pred&& holds) {
  IdentityCheck out{std::move(name)};
  for (const auto& k : keys) {
    ++out.checked;
    if (!holds(k)) {
      out.passed = false;
      out.witness = to_string(C, k);
      break;
    }
  }
  return out;
}

/// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
WordTensor tensor_product(const CatCoalgebra& C, const WordTensor& x, const WordTensor& y) {
  WordTensor out;
  for (const auto& [ab, k] : x)
    for (const auto& [cd, j] : y) {
      Word left = compose(ab.first, cd.first);
      Word right = compose(ab.second, cd.second);
      out.add({left, right}, k * j * sign_of_parity(static_cast<long long>(degree(C, ab.second)) * degree(C, cd.first)));
    }
  return out;
}

/// Whether the chain endomorphism e sends every cycle of `middle` to a
/// boundary of something in `upper`, over the rationals.
template <class Key, class D, class E>
bool zero_on_homology(const std::vector<Key>& middle, const std::vector<Key>& upper, D&& d, E&& e) {
  if (middle.empty()) return true;
  const CoefficientRing Q = CoefficientRing::rationals();
  SparseMatrix d_out = image_matrix(middle, d);
  SmithResult snf = smith_normal_form(d_out, true);
  const std::size_t r = snf.invariant_factors.size();
  const SparseMatrix& V = *snf.right;

  std::map<Key, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> cols;
  auto push = [&](const LinComb<Key>& v) {
    std::vector<std::pair<std::size_t, Integer>> col;
    for (const auto& [k, c] : v) col.emplace_back(rows.try_emplace(k, rows.size()).first->second, c);
    cols.push_back(std::move(col));
  };
  for (const auto& u : upper) push(d(u));
  const std::size_t boundaries = cols.size();
  for (std::size_t j = r; j < middle.size(); ++j) {
    LinComb<Key> z;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (auto it = V.row(i).find(j); it != V.row(i).end()) z.add(middle[i], it->second);
    push(extend_linear<Key>(z, e));
  }
  auto assemble = [&](std::size_t ncols) {
    SparseMatrix m(rows.size(), ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      for (const auto& [row, c] : cols[j]) m.add_to(row, j, c);
    return m;
  };
  return rank(assemble(boundaries), Q) == rank(assemble(cols.size()), Q);
}

}  // namespace

HopfSuiteReport hopf_suite(const LoopBialgebra& H, const HopfWindow& win) {
  const CatCoalgebra& C = H.coalgebra();
  HopfSuiteReport rep;
  const std::size_t L = win.max_length;
  const auto words = all_words(C, win.max_degree, L, win.extended);
  const Word one = H.unit();

  rep.checks.push_back(check_all("coproduct coassociative", C, words, [&](const Word& w) {
    LinComb<std::tuple<Word, Word, Word>> l, r;
    for (const auto& [xy, k] : H.coproduct(w)) {
      for (const auto& [ab, j] : H.coproduct(xy.first)) l.add({ab.first, ab.second, xy.second}, k * j);
      for (const auto& [ab, j] : H.coproduct(xy.second)) r.add({xy.first, ab.first, ab.second}, k * j);
    }
    return (l - r).is_zero();
  }));

  rep.checks.push_back(check_all("coproduct counital", C, words, [&](const Word& w) {
    WordSum L1, R1;
    for (const auto& [xy, k] : H.coproduct(w)) {
      L1.add(xy.first, k * H.counit(xy.second));
      R1.add(xy.second, k * H.counit(xy.first));
    }
    return (L1 - WordSum(w)).is_zero() && (R1 - WordSum(w)).is_zero();
  }));

  std::vector<Word> short_words;
  std::copy_if(words.begin(), words.end(), std::back_inserter(short_words),
               [&](const Word& w) { return 2 * w.letters.size() <= L; });
  rep.checks.push_back(check_all("coproduct multiplicative", C, short_words, [&](const Word& a) {
    for (const auto& b : short_words) {
      if (degree(C, a) + degree(C, b) > win.max_degree) continue;
      if (!(H.coproduct(compose(a, b)) - tensor_product(C, H.coproduct(a), H.coproduct(b))).is_zero()) return false;
    }
    return true;
  }));

  rep.checks.push_back(check_all("coproduct chain map", C, words, [&](const Word& w) {
    return (H.coproduct(bar_side_differential(C, w)) - H.tensor_differential(H.coproduct(w))).is_zero();
  }));

  rep.checks.push_back(check_all("antipode", C, words, [&](const Word& w) {
    WordSum a, b, e;
    for (const auto& [xy, k] : H.coproduct(w)) {
      a.add(compose(H.antipode(xy.first), WordSum(xy.second)), k);
      b.add(compose(WordSum(xy.first), H.antipode(xy.second)), k);
    }
    if (H.counit(w) != 0) e.add(one, H.counit(w));
    return (a - e).is_zero() && (b - e).is_zero();
  }));

  std::vector<CHGen> ch;
  std::vector<AdGen> ad;
  std::vector<TwistedGen> tw;
  std::vector<CoChGen> coch;
  for (int n = 0; n <= win.max_degree; ++n) {
    auto c = ch_basis(C, ChQuery{n, L, false, true, std::nullopt});
    ch.insert(ch.end(), c.begin(), c.end());
    auto t = twisted_basis(H, TwistedQuery{n, L, std::nullopt});
    tw.insert(tw.end(), t.begin(), t.end());
    auto k = coch_basis(C, CoChQuery{n, L, true, std::nullopt});
    coch.insert(coch.end(), k.begin(), k.end());
  }
  for (const auto& g : ch) ad.push_back(AdGen{g.bars, g.last});

  rep.checks.push_back(check_all("phi_inverse o phi = id", C, ch, [&](const CHGen& g) {
    return (phi_inverse(H, phi(H, g)) - CHSum(g)).is_zero();
  }));
  rep.checks.push_back(check_all("phi o phi_inverse = id", C, ad, [&](const AdGen& g) {
    return (phi(H, phi_inverse(H, g)) - AdSum(g)).is_zero();
  }));
  rep.checks.push_back(check_all("phi chain map", C, ch, [&](const CHGen& g) {
    return (phi(H, ch_differential(C, g)) - ad_differential(H, phi(H, g))).is_zero();
  }));

  {
    IdentityCheck t{"twisting cochain"};
    auto tr = twisting_cochain_check(C, universal_twisting_cochain(C));
    t.checked = static_cast<std::size_t>(C.size());
    t.passed = tr.passed;
    for (const auto& [c, r] : tr.residuals)
      if (!r.is_zero()) {
        t.witness = C.cells.at(c).name;
        break;
      }
    rep.checks.push_back(t);
  }

  auto d_tw = [&](const TwistedGen& g) { return twisted_differential(H, g); };
  auto d_co = [&](const CoChGen& g) { return coch_differential(C, g); };
  {
    IdentityCheck t{"twisted differential squares to zero"};
    t.checked = tw.size();
    if (auto bad = first_nonzero_square(tw, d_tw)) {
      t.passed = false;
      t.witness = to_string(C, *bad);
    }
    rep.checks.push_back(t);
  }
  rep.checks.push_back(check_all("F chain map", C, tw, [&](const TwistedGen& g) {
    return (brown_to_coch(H, twisted_differential(H, g)) - coch_differential(C, brown_to_coch(H, g))).is_zero();
  }));
  rep.checks.push_back(check_all("G chain map", C, coch, [&](const CoChGen& g) {
    return (coch_to_brown(H, coch_differential(C, g)) - twisted_differential(H, coch_to_brown(H, g))).is_zero();
  }));

  // Homology comparisons sector by sector so that every basis is finite.
  std::vector<std::optional<int>> sectors{std::nullopt};
  if (win.extended && C.cells_of_degree(1).size() == 1) {
    sectors.clear();
    for (int w = -win.max_winding; w <= win.max_winding; ++w) sectors.push_back(w);
  }
  IdentityCheck gf{"G o F = id on homology"}, fg{"F o G = id on homology"};
  for (const auto& s : sectors)
    for (int n = 0; n <= std::min(win.homology_degree, win.max_degree); ++n) {
      const std::size_t len = L + (s ? static_cast<std::size_t>(std::abs(*s)) : 0);
      auto tmid = twisted_basis(H, TwistedQuery{n, len, s});
      auto tup = twisted_basis(H, TwistedQuery{n + 1, len + 2, s});
      auto cmid = coch_basis(C, CoChQuery{n, len, win.extended, s});
      auto cup = coch_basis(C, CoChQuery{n + 1, len + 2, win.extended, s});
      std::string where = "degree " + std::to_string(n) + (s ? ", winding " + std::to_string(*s) : "");
      gf.checked += tmid.size();
      fg.checked += cmid.size();
      if (gf.passed && !zero_on_homology(tmid, tup, d_tw, [&](const TwistedGen& g) {
            return coch_to_brown(H, brown_to_coch(H, g)) - TwistedSum(g);
          })) {
        gf.passed = false;
        gf.witness = where;
      }
      if (fg.passed && !zero_on_homology(cmid, cup, d_co, [&](const CoChGen& g) {
            return brown_to_coch(H, coch_to_brown(H, g)) - CoChSum(g);
          })) {
        fg.passed = false;
        fg.witness = where;
      }
    }
  rep.checks.push_back(gf);
  rep.checks.push_back(fg);

  std::vector<int> cells(static_cast<std::size_t>(C.size()));
  for (int c = 0; c < C.size(); ++c) cells[static_cast<std::size_t>(c)] = c;
  IdentityCheck cl{"constant loops are cycles"}, clf{"constant loops through F are cycles"};
  for (int c : cells) {
    TwistedGen g = constant_loop(H, c);
    ++cl.checked;
    ++clf.checked;
    if (cl.passed && !twisted_differential(H, g).is_zero()) {
      cl.passed = false;
      cl.witness = C.cells.at(c).name;
    }
    if (clf.passed && !coch_differential(C, brown_to_coch(H, g)).is_zero()) {
      clf.passed = false;
      clf.witness = C.cells.at(c).name;
    }
  }
  rep.checks.push_back(cl);
  rep.checks.push_back(clf);
  return rep;
}

}  // namespace necklace
