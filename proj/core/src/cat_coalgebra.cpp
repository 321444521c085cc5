#include <necklace/cat_coalgebra.hpp>
#include <necklace/json_util.hpp>
#include <necklace/simplicial.hpp>

#include <algorithm>
#include <tuple>

namespace necklace {

int CatCoalgebra::index_of(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (cells[i].name == n) return i;
  throw std::out_of_range("no cell named " + n);
}

std::vector<int> CatCoalgebra::cells_of_degree(int n) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cells[i].degree == n) out.push_back(i);
  return out;
}

int CatCoalgebra::max_degree() const {
  int m = 0;
  for (const auto& c : cells) m = std::max(m, c.degree);
  return m;
}

Chain2 CatCoalgebra::reduced_coproduct(int c) const {
  Chain2 out;
  for (const auto& [xy, k] : delta.at(c))
    if (degree(xy.first) > 0 && degree(xy.second) > 0) out.add(xy, k);
  return out;
}

void CatCoalgebra::require_dimension(int n) const {
  if (truncated && n > dimension_cap)
    throw CapExceededError(name + ": dimension " + std::to_string(n) + " needed beyond cap " +
                           std::to_string(dimension_cap));
}

Integer counit(const CatCoalgebra& C, int c) { return C.is_set_like(c) ? Integer(1) : Integer(0); }

Chain apply_table(const std::vector<Chain>& table, const Chain& x) {
  Chain out;
  for (const auto& [c, k] : x) out.add(table.at(c), k);
  return out;
}

bool AxiomReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

namespace {

using Chain3 = LinComb<std::tuple<int, int, int>>;

int parity_sign(long long e) { return sign_of_parity(e); }

std::string chain_text(const CatCoalgebra& C, const Chain& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [c, k] : x) {
    if (!s.empty()) s += " + ";
    s += k.get_str() + "*" + C.cells[c].name;
  }
  return s;
}

class Recorder {
public:
  explicit Recorder(std::string axiom) { r_.axiom = std::move(axiom); }
  void fail(const std::string& witness, const std::string& detail) {
    if (!r_.passed) return;
    r_.passed = false;
    r_.witness = witness;
    r_.detail = detail;
  }
  AxiomResult done() { return r_; }

private:
  AxiomResult r_;
};

Chain2 tensor_d(const CatCoalgebra& C, const Chain2& xy) {
  Chain2 out;
  for (const auto& [p, k] : xy) {
    auto [x, y] = p;
    for (const auto& [z, m] : C.d[x]) out.add({z, y}, k * m);
    int s = parity_sign(C.degree(x));
    for (const auto& [z, m] : C.d[y]) out.add({x, z}, k * m * s);
  }
  return out;
}

Chain2 coproduct_of(const CatCoalgebra& C, const Chain& x) {
  Chain2 out;
  for (const auto& [c, k] : x) out.add(C.delta[c], k);
  return out;
}

}  // namespace

AxiomReport check_axioms(const CatCoalgebra& C) {
  AxiomReport rep;
  const int n = C.size();

  Recorder setlike("set-like");
  {
    std::vector<int> zero = C.cells_of_degree(0);
    if (zero.empty()) setlike.fail("-", "no set-like elements");
    if (zero != C.set_likes) setlike.fail("-", "degree-0 basis differs from set-likes");
    for (int x : zero) {
      Chain2 expect(std::make_pair(x, x));
      if (!(C.delta[x] == expect)) setlike.fail(C.cells[x].name, "coproduct is not x (x) x");
    }
  }
  rep.results.push_back(setlike.done());

  Recorder counit_law("counit");
  Recorder coassoc("coassociativity");
  Recorder cotensor("cotensor");
  Recorder coder("coderivation");
  Recorder dvanish("d-vanishes-degree-1");
  Recorder curv("curvature");
  Recorder hd("h-kills-d");

  for (int c = 0; c < n; ++c) {
    const auto& name = C.cells[c].name;
    Chain left, right;
    for (const auto& [xy, k] : C.delta[c]) {
      left.add(xy.second, k * counit(C, xy.first));
      right.add(xy.first, k * counit(C, xy.second));
      if (C.cells[xy.first].last != C.cells[xy.second].first)
        cotensor.fail(name, "endpoint mismatch between " + C.cells[xy.first].name + " and " + C.cells[xy.second].name);
      if (C.degree(xy.first) + C.degree(xy.second) != C.degree(c))
        cotensor.fail(name, "coproduct term of wrong degree");
    }
    Chain self(c);
    if (!(left == self) || !(right == self)) counit_law.fail(name, "(eps (x) id) Delta or (id (x) eps) Delta differs");

    Chain3 l3, r3;
    for (const auto& [xy, k] : C.delta[c]) {
      for (const auto& [ab, m] : C.delta[xy.first]) l3.add({ab.first, ab.second, xy.second}, k * m);
      for (const auto& [ab, m] : C.delta[xy.second]) r3.add({xy.first, ab.first, ab.second}, k * m);
    }
    if (!(l3 == r3)) coassoc.fail(name, "(Delta (x) id) Delta != (id (x) Delta) Delta");

    if (!(coproduct_of(C, C.d[c]) == tensor_d(C, C.delta[c])))
      coder.fail(name, "Delta d != (d (x) id + id (x) d) Delta");

    if (C.degree(c) <= 1 && !C.d[c].is_zero()) dvanish.fail(name, "d = " + chain_text(C, C.d[c]));

    Chain dd = apply_table(C.d, C.d[c]);
    Chain rhs;
    for (const auto& [xy, k] : C.delta[c]) {
      auto [x, y] = xy;
      rhs.add(y, k * C.h[x]);
      rhs.add(x, -k * C.h[y] * parity_sign(static_cast<long long>(C.degree(x)) * C.degree(y)));
    }
    if (!(dd == rhs)) curv.fail(name, "d^2 = " + chain_text(C, dd) + " but (h (x) id)(Delta - Delta^op) = " + chain_text(C, rhs));

    Integer hdc = 0;
    for (const auto& [z, k] : C.d[c]) hdc += k * C.h[z];
    if (hdc != 0) hd.fail(name, "h(d x) = " + hdc.get_str());
    if (C.degree(c) != 2 && C.h[c] != 0) hd.fail(name, "curvature outside degree 2");
  }
  rep.results.push_back(counit_law.done());
  rep.results.push_back(coassoc.done());
  rep.results.push_back(cotensor.done());
  rep.results.push_back(coder.done());
  rep.results.push_back(dvanish.done());
  rep.results.push_back(curv.done());
  rep.results.push_back(hd.done());
  return rep;
}

CatCoalgebraMorphism identity_morphism(const CatCoalgebra& C) {
  CatCoalgebraMorphism f;
  for (int c = 0; c < C.size(); ++c) f.f0.emplace_back(c);
  f.f1.resize(C.size());
  return f;
}

Integer f1_bar(const CatCoalgebraMorphism& f, int c) {
  Integer s = 0;
  for (const auto& [x, k] : f.f1.at(c)) {
    (void)x;
    s += k;
  }
  return s;
}

AxiomReport check_morphism(const CatCoalgebraMorphism& f, const CatCoalgebra& C, const CatCoalgebra& Cp) {
  AxiomReport rep;
  Recorder shape("shape");
  Recorder coalg("coalgebra-map");
  Recorder m1("morphism1");
  Recorder m2("morphism2");
  if (static_cast<int>(f.f0.size()) != C.size() || static_cast<int>(f.f1.size()) != C.size()) {
    shape.fail("-", "tables do not cover the source basis");
    rep.results.push_back(shape.done());
    return rep;
  }
  auto f1b = [&](int c) { return f1_bar(f, c); };
  for (int c = 0; c < C.size(); ++c) {
    const auto& name = C.cells[c].name;
    for (const auto& [x, k] : f.f0[c])
      if (x >= Cp.size() || Cp.degree(x) != C.degree(c)) shape.fail(name, "f0 changes degree");
    for (const auto& [x, k] : f.f1[c])
      if (x >= Cp.size() || Cp.degree(x) != 0 || C.degree(c) != 1) shape.fail(name, "f1 outside C_1 -> C'_0");
  }
  if (!shape.done().passed) {
    rep.results.push_back(shape.done());
    return rep;
  }
  for (int c = 0; c < C.size(); ++c) {
    const auto& name = C.cells[c].name;
    Chain2 lhs = coproduct_of(Cp, f.f0[c]);
    Chain2 rhs;
    for (const auto& [xy, k] : C.delta[c])
      for (const auto& [a, p] : f.f0[xy.first])
        for (const auto& [b, q] : f.f0[xy.second]) rhs.add({a, b}, k * p * q);
    if (!(lhs == rhs)) coalg.fail(name, "Delta' f0 != (f0 (x) f0) Delta");
    Integer e = 0;
    for (const auto& [x, k] : f.f0[c]) e += k * counit(Cp, x);
    if (e != counit(C, c)) coalg.fail(name, "f0 is not counital");

    Chain a = apply_table(f.f0, C.d[c]);
    Chain b = apply_table(Cp.d, f.f0[c]);
    for (const auto& [xy, k] : C.delta[c]) {
      auto [x, y] = xy;
      b.add(f.f0[y], k * f1b(x));
      b.add(f.f0[x], -k * f1b(y) * parity_sign(static_cast<long long>(C.degree(x)) * C.degree(y)));
    }
    if (!(a == b)) m1.fail(name, "f0 d != d' f0 + (f1 (x) f0)(Delta - Delta^op)");

    Integer lh = 0;
    for (const auto& [x, k] : f.f0[c]) lh += k * Cp.h[x];
    Integer rh = C.h[c];
    for (const auto& [x, k] : C.d[c]) rh += k * f1b(x);
    for (const auto& [xy, k] : C.delta[c]) rh += k * parity_sign(C.degree(xy.first)) * f1b(xy.first) * f1b(xy.second);
    if (lh != rh) m2.fail(name, "h' f0 = " + lh.get_str() + " but h + f1 d + (f1 (x) f1) Delta = " + rh.get_str());
  }
  rep.results.push_back(shape.done());
  rep.results.push_back(coalg.done());
  rep.results.push_back(m1.done());
  rep.results.push_back(m2.done());
  return rep;
}

CatCoalgebraMorphism compose(const CatCoalgebraMorphism& g, const CatCoalgebraMorphism& f) {
  CatCoalgebraMorphism out;
  for (std::size_t c = 0; c < f.f0.size(); ++c) {
    for (const auto& [x, k] : f.f0[c])
      if (x < 0 || static_cast<std::size_t>(x) >= g.f0.size())
        throw std::invalid_argument("compose: target of f is not the source of g");
    out.f0.push_back(apply_table(g.f0, f.f0[c]));
    out.f1.push_back(apply_table(g.f1, f.f0[c]) + apply_table(g.f0, f.f1[c]));
  }
  return out;
}

bool operator==(const CatCoalgebraMorphism& a, const CatCoalgebraMorphism& b) {
  return a.f0 == b.f0 && a.f1 == b.f1;
}

CatCoalgebra rebalance(const CatCoalgebra& C, const std::vector<Chain>& f1) {
  CatCoalgebraMorphism f = identity_morphism(C);
  f.f1 = f1;
  f.f1.resize(C.size());
  CatCoalgebra out = C;
  for (int c = 0; c < C.size(); ++c) {
    for (const auto& [xy, k] : C.delta[c]) {
      auto [x, y] = xy;
      out.d[c].add(Chain(y), -k * f1_bar(f, x));
      out.d[c].add(Chain(x), k * f1_bar(f, y) * parity_sign(static_cast<long long>(C.degree(x)) * C.degree(y)));
      out.h[c] += k * parity_sign(C.degree(x)) * f1_bar(f, x) * f1_bar(f, y);
    }
    for (const auto& [x, k] : C.d[c]) out.h[c] += k * f1_bar(f, x);
  }
  out.name = C.name + "~";
  return out;
}

nlohmann::json debug_dump(const CatCoalgebra& C) {
  nlohmann::json j;
  j["name"] = C.name;
  j["dimension_cap"] = C.dimension_cap;
  if (C.truncated) j["truncated"] = true;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : C.cells)
    cells.push_back({{"name", c.name}, {"degree", c.degree}, {"first", C.cells[c.first].name}, {"last", C.cells[c.last].name}});
  j["cells"] = cells;
  nlohmann::json cop = nlohmann::json::object(), dif = nlohmann::json::object(), cur = nlohmann::json::object();
  for (int c = 0; c < C.size(); ++c) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [xy, k] : C.delta[c])
      t.push_back({integer_json(k), C.cells[xy.first].name, C.cells[xy.second].name});
    cop[C.cells[c].name] = t;
    if (!C.d[c].is_zero()) {
      nlohmann::json dt = nlohmann::json::array();
      for (const auto& [x, k] : C.d[c]) dt.push_back({integer_json(k), C.cells[x].name});
      dif[C.cells[c].name] = dt;
    }
    if (C.h[c] != 0) cur[C.cells[c].name] = integer_json(C.h[c]);
  }
  j["coproduct"] = cop;
  j["differential"] = dif;
  j["curvature"] = cur;
  return j;
}

}  // namespace necklace
