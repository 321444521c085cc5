// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <necklace/chains.hpp>
#include <necklace/complex_slice.hpp>
#include <necklace/fixtures.hpp>
#include <necklace/hopf_suite.hpp>
#include <necklace/report.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace necklace;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Records the first failure and keeps going so the detail stays useful.
struct Tally {
  Outcome out;
  void require(bool ok, const std::string& what) {
    if (!ok && out.passed) {
      out.passed = false;
      out.detail = what;
    }
  }
};

template <class Key, class Pred>
std::optional<Key> first_violation(const std::vector<Key>& keys, Pred&& holds) {
  for (const auto& k : keys)
    if (!holds(k)) return k;
  return std::nullopt;
}

template <class Key, class D>
void require_square_zero(Tally& t, const CatCoalgebra& C, const std::string& what, const std::vector<Key>& keys, D&& d) {
  if (auto bad = first_nonzero_square(keys, d)) t.require(false, what + " at " + to_string(C, *bad));
}

template <class Key, class Pred>
void require_all(Tally& t, const CatCoalgebra& C, const std::string& what, const std::vector<Key>& keys, Pred&& holds) {
  if (auto bad = first_violation(keys, holds)) t.require(false, what + " at " + to_string(C, *bad));
}

ChainsModel model(const std::string& name) { return to_categorical_coalgebra(fixtures::by_name(name)); }

const std::vector<std::string> kAxiomFixtures = {"delta0", "delta1", "delta2", "boundary_delta3",
                                                 "circle", "sphere2", "nerve_z2"};

// 1. Every chains coalgebra satisfies the axioms exactly.
Outcome axiom_suite() {
  Tally t;
  for (const auto& n : kAxiomFixtures) {
    AxiomReport r = check_axioms(model(n).C);
    for (const auto& a : r.results) t.require(a.passed && a.verifiable, n + ": " + a.axiom + " " + a.witness);
  }
  return t.out;
}

/// Top degree of the generators checked on a fixture. Truncated tables
/// stop at the cap, so their windows stop where the tables do.
int degree_cap(const CatCoalgebra& C, int wanted) { return C.truncated ? std::min(wanted, C.dimension_cap - 1) : wanted; }

// 2. Every differential squares to zero.
Outcome differential_suite() {
  Tally t;
  const int D = 6;
  const std::size_t L = 6;
  for (const auto& n : kAxiomFixtures) {
    ChainsModel M = model(n);
    const CatCoalgebra& C = M.C;
    const int top = degree_cap(C, D);
    for (bool ext : {false, true}) {
      const std::string tag = n + (ext ? " extended" : "");
      auto words = all_words(C, top, L, ext);
      require_square_zero(t, C, tag + ": D^2 (cobar)", words, [&](const Word& w) { return differential(C, w); });
      require_square_zero(t, C, tag + ": D^2 (bar side)", words,
                          [&](const Word& w) { return bar_side_differential(C, w); });
      std::vector<BarGen> bar;
      std::vector<CHGen> ch;
      std::vector<CoChGen> coch;
      std::vector<QGen> q;
      for (int d = 0; d <= top; ++d) {
        for (auto& g : bar_basis(C, BarQuery{d, L, ext})) bar.push_back(std::move(g));
        for (auto& g : ch_basis(C, ChQuery{d, L, ext, ext, std::nullopt})) ch.push_back(std::move(g));
        for (auto& g : coch_basis(C, CoChQuery{d, L, ext, std::nullopt})) coch.push_back(std::move(g));
        for (auto& g : q_basis(C, QQuery{d, L, ext})) q.push_back(std::move(g));
      }
      require_square_zero(t, C, tag + ": bar", bar, [&](const BarGen& g) { return bar_differential(C, g); });
      require_square_zero(t, C, tag + ": CH", ch, [&](const CHGen& g) { return ch_differential(C, g); });
      require_square_zero(t, C, tag + ": coCH", coch, [&](const CoChGen& g) { return coch_differential(C, g); });
      require_square_zero(t, C, tag + ": Q", q, [&](const QGen& g) { return q_differential(C, g); });
    }
  }
  return t.out;
}

// 3. Mixed-complex identities for B on CH and P on coCH.
Outcome mixed_complex_suite() {
  Tally t;
  const int D = 4;
  const std::size_t L = 5;
  for (const auto& n : kAxiomFixtures) {
    ChainsModel M = model(n);
    const CatCoalgebra& C = M.C;
    const int top = degree_cap(C, D);
    for (bool ext : {false, true}) {
      const std::string tag = n + (ext ? " extended" : "");
      std::vector<CHGen> ch;
      for (int d = 0; d <= top; ++d)
        for (auto& g : ch_basis(C, ChQuery{d, L, ext, ext, std::nullopt})) ch.push_back(std::move(g));
      require_square_zero(t, C, tag + ": B^2", ch, [&](const CHGen& g) { return connes_B(C, g); });
      require_all(t, C, tag + ": dB + Bd", ch, [&](const CHGen& g) {
        CHSum x(g);
        return (ch_differential(C, connes_B(C, x)) + connes_B(C, ch_differential(C, x))).is_zero();
      });
    }
    std::vector<CoChGen> coch;
    for (int d = 0; d <= top; ++d)
      for (auto& g : coch_basis(C, CoChQuery{d, L, false, std::nullopt})) coch.push_back(std::move(g));
    require_square_zero(t, C, n + ": P^2", coch, [&](const CoChGen& g) { return operator_P(C, g); });
    require_all(t, C, n + ": dP + Pd", coch, [&](const CoChGen& g) {
      CoChSum x(g);
      return (coch_differential(C, operator_P(C, x)) + operator_P(C, coch_differential(C, x))).is_zero();
    });
  }
  return t.out;
}

// 4. The small resolution is a deformation retract of the bar resolution.
Outcome contraction_suite() {
  Tally t;
  const int D = 5;
  const std::size_t L = 5;
  for (const std::string n : {"delta2", "sphere2"}) {
    ChainsModel M = model(n);
    const CatCoalgebra& C = M.C;
    for (bool ext : {false, true}) {
      const std::string tag = n + (ext ? " extended" : "");
      std::vector<BarGen> bar;
      std::vector<QGen> q;
      std::vector<CHGen> ch;
      std::vector<CoChGen> coch;
      for (int d = 0; d <= D; ++d) {
        for (auto& g : bar_basis(C, BarQuery{d, L, ext})) bar.push_back(std::move(g));
        for (auto& g : q_basis(C, QQuery{d, L, ext})) q.push_back(std::move(g));
        for (auto& g : ch_basis(C, ChQuery{d, L, ext, ext, std::nullopt})) ch.push_back(std::move(g));
        for (auto& g : coch_basis(C, CoChQuery{d, L, ext, std::nullopt})) coch.push_back(std::move(g));
      }
      require_all(t, C, tag + ": pi chain map", bar, [&](const BarGen& g) {
        BarSum x(g);
        return (map_pi(C, bar_differential(C, x)) - q_differential(C, map_pi(C, x))).is_zero();
      });
      require_all(t, C, tag + ": alpha chain map", q, [&](const QGen& g) {
        QSum x(g);
        return (map_alpha(C, q_differential(C, x)) - bar_differential(C, map_alpha(C, x))).is_zero();
      });
      require_all(t, C, tag + ": dH + Hd = alpha pi - id", bar, [&](const BarGen& g) {
        BarSum x(g);
        BarSum lhs = map_H(C, bar_differential(C, x)) + bar_differential(C, map_H(C, x));
        return (lhs - map_alpha(C, map_pi(C, x)) + x).is_zero();
      });
      require_all(t, C, tag + ": pi alpha = id", q, [&](const QGen& g) {
        QSum x(g);
        return (map_pi(C, map_alpha(C, x)) - x).is_zero();
      });
      require_all(t, C, tag + ": assembled pi chain map", ch, [&](const CHGen& g) {
        CHSum x(g);
        return (pi_bar(C, ch_differential(C, x)) - coch_differential(C, pi_bar(C, x))).is_zero();
      });
      require_all(t, C, tag + ": assembled alpha chain map", coch, [&](const CoChGen& g) {
        CoChSum x(g);
        return (alpha_bar(C, coch_differential(C, x)) - ch_differential(C, alpha_bar(C, x))).is_zero();
      });
      require_all(t, C, tag + ": assembled homotopy", ch, [&](const CHGen& g) {
        CHSum x(g);
        CHSum lhs = H_bar(C, ch_differential(C, x)) + ch_differential(C, H_bar(C, x));
        return (lhs - alpha_bar(C, pi_bar(C, x)) + x).is_zero();
      });
      require_all(t, C, tag + ": assembled pi alpha = id", coch, [&](const CoChGen& g) {
        CoChSum x(g);
        return (pi_bar(C, alpha_bar(C, x)) - x).is_zero();
      });
    }
  }
  return t.out;
}

// 5. Based loops on S^2: a tensor algebra on one degree-1 class.
Outcome omega_s2_benchmark() {
  Tally t;
  ChainsModel M = model("sphere2");
  const int v = M.C.set_likes.front();
  HomologyResult h = hom_homology(M.C, HomRequest{v, v, 0, 5, 6, false, std::nullopt}, CoefficientRing::integers());
  for (int n = 0; n <= 5; ++n) {
    const DegreeHomology& d = h.degrees.at(n);
    t.require(d.free_rank == 1 && d.torsion.empty() && d.exact, "H_" + std::to_string(n) + " of Omega S^2");
  }
  return t.out;
}

/// Whether `target` lies in the rational span of `spanning`.
bool in_span(const std::vector<WordSum>& spanning, const WordSum& target) {
  std::map<Word, std::size_t> rows;
  auto row_of = [&](const Word& w) { return rows.try_emplace(w, rows.size()).first->second; };
  for (const auto& v : spanning)
    for (const auto& [w, c] : v) row_of(w);
  for (const auto& [w, c] : target) row_of(w);
  SparseMatrix a(rows.size(), spanning.size()), b(rows.size(), spanning.size() + 1);
  for (std::size_t j = 0; j < spanning.size(); ++j)
    for (const auto& [w, c] : spanning[j]) {
      a.add_to(rows.at(w), j, c);
      b.add_to(rows.at(w), j, c);
    }
  for (const auto& [w, c] : target) b.add_to(rows.at(w), spanning.size(), c);
  const CoefficientRing Q = CoefficientRing::rationals();
  return rank(a, Q) == rank(b, Q);
}

/// Degree-0 relations of the based loops on the nerve of Z/2.
struct Z2Probe {
  std::size_t h0_rank = 0;
  bool square_is_one = false;
  bool square_is_zero = false;
  bool relation_has_identity = false;
};

Z2Probe probe_nerve_z2(const ChainsOptions& opts, std::size_t L) {
  ChainsModel M = to_categorical_coalgebra(fixtures::nerve_z2(), std::nullopt, opts);
  const CatCoalgebra& C = M.C;
  const int v = C.set_likes.front();
  Z2Probe p;
  p.h0_rank = hom_homology(C, HomRequest{v, v, 0, 0, L, false, std::nullopt}, CoefficientRing::rationals())
                  .degrees.at(0)
                  .free_rank;
  std::vector<WordSum> boundaries;
  for (const auto& w : basis(C, WordQuery{v, v, 1, L, false, std::nullopt})) boundaries.push_back(differential(C, w));
  const Letter g{C.index_of("g"), false};
  const Word one = identity_word(v);
  const Word xx = make_word(C, {g, g});
  WordSum square_minus_one(xx);
  square_minus_one.add(one, -1);
  p.square_is_one = in_span(boundaries, square_minus_one);
  p.square_is_zero = in_span(boundaries, WordSum(xx));
  WordSum rel = differential(C, make_word(C, {Letter{C.index_of("gg"), false}}));
  for (const auto& [w, c] : rel)
    if (w.is_identity() && c != 0) p.relation_has_identity = true;
  return p;
}

// 6. The fundamental group shows up in H_0 of the based loops.
Outcome fundamental_group_benchmark() {
  Tally t;
  for (std::size_t L : {4, 5, 6}) {
    Z2Probe p = probe_nerve_z2({}, L);
    t.require(p.h0_rank == 2, "H_0 rank at length " + std::to_string(L) + " is " + std::to_string(p.h0_rank));
    t.require(p.square_is_one && !p.square_is_zero, "x^2 = 1 fails at length " + std::to_string(L));
  }
  return t.out;
}

/// Rank of a small dense rational matrix by Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        mpq_class f = m[i][c] / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

/// Hochschild homology of the Laurent algebra k[t, 1/t] in weight w, from
/// the Koszul resolution 0 -> A^e -> A^e -> A. In weight w the complex is
/// k t^{w-1} dt -> k t^w with a dt -> t a - a t.
std::vector<std::size_t> laurent_hochschild(int w) {
  // Multiplication of monomials t^i t^j = t^{i+j}; the commutator
  // coefficient on t^w is the difference of the two products.
  auto product = [](int i, int j) { return std::pair{i + j, mpq_class(1)}; };
  auto [left_exp, left] = product(1, w - 1);
  auto [right_exp, right] = product(w - 1, 1);
  mpq_class entry = (left_exp == w ? left : 0) - (right_exp == w ? right : 0);
  std::size_t r = dense_rank({{entry}});
  return {1 - r, 1 - r, 0, 0};
}

// 7. The free loop space of the circle splits over the winding number.
Outcome ls1_benchmark() {
  Tally t;
  ChainsModel M = model("circle");
  for (int w = -5; w <= 5; ++w) {
    const std::size_t L = static_cast<std::size_t>(std::abs(w)) + 4;
    HomologyResult h = coch_homology(M.C, CoChRequest{0, 3, L, true, w}, CoefficientRing::integers());
    auto oracle = laurent_hochschild(w);
    for (int n = 0; n <= 3; ++n) {
      const DegreeHomology& d = h.degrees.at(n);
      t.require(d.exact && d.torsion.empty() && d.free_rank == oracle[static_cast<std::size_t>(n)],
                "winding " + std::to_string(w) + " degree " + std::to_string(n));
    }
  }
  return t.out;
}

// 8. coHochschild of C agrees with Hochschild of its cobar.
Outcome dual_route_oracle() {
  Tally t;
  ChainsModel M = model("sphere2");
  for (const auto& ring : {CoefficientRing::rationals(), CoefficientRing::integers()}) {
    HomologyResult a = coch_homology(M.C, CoChRequest{0, 4, 6, false, std::nullopt}, ring);
    HomologyResult b = ch_homology(M.C, ChRequest{0, 4, 6, false, std::nullopt}, ring);
    t.require(a == b, "routes disagree over " + ring.name());
    for (const auto& [n, d] : a.degrees) t.require(d.exact, "inexact degree " + std::to_string(n));
  }
  return t.out;
}

// 9. Two presentations of S^2 give the same loop homology.
Outcome invariance_instance() {
  Tally t;
  LoopHomologyConfig cfg;
  cfg.ring = CoefficientRing::integers();
  cfg.max_degree = 3;
  ChainsModel a = model("sphere2"), b = model("sphere2_cone");
  ReportDiff d = compare_reports(loop_homology_report(a.C, cfg), loop_homology_report(b.C, cfg));
  t.require(d.equal, d.differences.dump());
  return t.out;
}

// 10. Hopf structure and the twisted tensor product.
Outcome hopf_suite_criterion() {
  Tally t;
  {
    ChainsModel M = model("sphere2");
    LoopBialgebra H(M);
    HopfSuiteReport r = hopf_suite(H, HopfWindow{4, 4, false, 3, 3});
    if (const auto* f = r.first_failure()) t.require(false, "S^2: " + f->name + " at " + f->witness);
  }
  {
    ChainsModel M = model("circle");
    LoopBialgebra H(M);
    HopfSuiteReport r = hopf_suite(H, HopfWindow{4, 5, true, 3, 3});
    if (const auto* f = r.first_failure()) t.require(false, "S^1: " + f->name + " at " + f->witness);
  }
  return t.out;
}

// 11. The sign conventions are load-bearing.
Outcome negative_controls() {
  Tally t;
  ChainsOptions flipped;
  flipped.flip_correction_sign = true;
  bool broken = false;
  for (const auto& n : kAxiomFixtures) {
    AxiomReport r = check_axioms(to_categorical_coalgebra(fixtures::by_name(n), std::nullopt, flipped).C);
    if (const auto* a = r.find("d-vanishes-degree-1"); a && !a->passed) broken = true;
  }
  t.require(broken, "flipping the correction sign left d = 0 on degree 1 intact");

  ChainsOptions flat;
  flat.zero_curvature = true;
  Z2Probe ref = probe_nerve_z2({}, 5), p = probe_nerve_z2(flat, 5);
  t.require(ref.relation_has_identity, "D{gg} has no identity term with curvature");
  t.require(!p.relation_has_identity, "D{gg} keeps its identity term without curvature");
  t.require(p.square_is_zero && !p.square_is_one, "x^2 = 0 probe fails without curvature");
  return t.out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", axiom_suite},
      {2, "differential suite", differential_suite},
      {3, "mixed-complex suite", mixed_complex_suite},
      {4, "contraction suite", contraction_suite},
      {5, "Omega S^2 benchmark", omega_s2_benchmark},
      {6, "fundamental-group benchmark", fundamental_group_benchmark},
      {7, "LS^1 benchmark", ls1_benchmark},
      {8, "dual-route oracle", dual_route_oracle},
      {9, "invariance instance", invariance_instance},
      {10, "Hopf suite", hopf_suite_criterion},
      {11, "negative controls", negative_controls},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << secs << "s";
    if (!o.passed) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
