#include <necklace/chains.hpp>

namespace necklace {

std::optional<int> ChainsModel::cell_of(const SimplexRef& r) const {
  if (r.degenerate()) return std::nullopt;
  auto it = index.find(r.base);
  if (it == index.end()) throw CapExceededError("simplex " + r.base + " lies beyond the stored cells");
  return it->second;
}

SimplexRef ChainsModel::face_on(int cell, const std::vector<int>& vertices) const {
  return vertex_face(X, SimplexRef{{}, C.cells.at(cell).name}, vertices);
}

Chain2 aw_coproduct(const ChainsModel& M, int cell, bool reduced) {
  int n = M.C.degree(cell);
  SimplexRef s{{}, M.C.cells[cell].name};
  Chain2 out;
  for (int i = 0; i <= n; ++i) {
    if (reduced && (i == 0 || i == n)) continue;
    auto front = M.cell_of(interval_face(M.X, s, 0, i));
    auto back = M.cell_of(interval_face(M.X, s, i, n));
    if (front && back) out.add({*front, *back}, 1);
  }
  return out;
}

Integer e_tilde(const ChainsModel& M, const Chain& x) {
  Integer s = 0;
  for (const auto& [c, k] : x) {
    if (M.C.degree(c) != 1) throw std::invalid_argument("e_tilde expects a 1-chain");
    s += k;
  }
  return s;
}

Chain boundary(const ChainsModel& M, int cell) {
  int n = M.C.degree(cell);
  Chain out;
  if (n == 0) return out;
  SimplexRef s{{}, M.C.cells[cell].name};
  for (int i = 0; i <= n; ++i)
    if (auto f = M.cell_of(face(M.X, s, i))) out.add(*f, sign_of_parity(i));
  return out;
}

namespace {

Integer edge_value(const ChainsModel& M, const SimplexRef& r) {
  auto c = M.cell_of(r);
  return c ? Integer(1) : Integer(0);
}

}  // namespace

Chain tilde_differential(const ChainsModel& M, int cell, const ChainsOptions& opts) {
  int n = M.C.degree(cell);
  Chain out = boundary(M, cell);
  if (n == 0) return out;
  SimplexRef s{{}, M.C.cells[cell].name};
  Chain corr;
  // (id (x) e~)(x (x) y) = (-1)^{|x|} x e~(y), live only when |y| = 1.
  Integer last_edge = edge_value(M, interval_face(M.X, s, n - 1, n));
  if (last_edge != 0)
    if (auto front = M.cell_of(interval_face(M.X, s, 0, n - 1))) corr.add(*front, last_edge * sign_of_parity(n - 1));
  Integer first_edge = edge_value(M, interval_face(M.X, s, 0, 1));
  if (first_edge != 0)
    if (auto back = M.cell_of(interval_face(M.X, s, 1, n))) corr.add(*back, -first_edge);
  out.add(corr, opts.flip_correction_sign ? -1 : 1);
  return out;
}

Integer curvature(const ChainsModel& M, int cell) {
  if (M.C.degree(cell) != 2) throw std::invalid_argument("curvature is defined on 2-simplices");
  SimplexRef s{{}, M.C.cells[cell].name};
  Integer h = -edge_value(M, interval_face(M.X, s, 0, 1)) * edge_value(M, interval_face(M.X, s, 1, 2));
  for (int i = 0; i <= 2; ++i) h += sign_of_parity(i) * edge_value(M, face(M.X, s, i));
  return h;
}

ChainsModel to_categorical_coalgebra(const SimplicialSet& X, std::optional<int> dimension_cap, ChainsOptions opts) {
  int cap = dimension_cap.value_or(X.dimension_cap());
  if (cap > X.dimension_cap() && X.truncated())
    throw CapExceededError(X.name() + ": requested dimension " + std::to_string(cap) + " beyond stored cap");
  ChainsModel M;
  M.X = X;
  CatCoalgebra& C = M.C;
  C.name = X.name();
  C.dimension_cap = std::min(cap, X.dimension_cap());
  C.truncated = X.truncated() || cap < X.max_dimension();
  for (const auto& [n, ids] : X.all_simplices()) {
    if (n > cap) break;
    for (const auto& id : ids) {
      M.index[id] = static_cast<int>(C.cells.size());
      C.cells.push_back(Cell{id, n, -1, -1});
    }
  }
  for (int c = 0; c < C.size(); ++c) {
    int n = C.degree(c);
    C.cells[c].first = *M.cell_of(M.face_on(c, {0}));
    C.cells[c].last = *M.cell_of(M.face_on(c, {n}));
    if (n == 0) C.set_likes.push_back(c);
  }
  for (int c = 0; c < C.size(); ++c) {
    C.delta.push_back(aw_coproduct(M, c));
    C.d.push_back(tilde_differential(M, c, opts));
    C.h.push_back(C.degree(c) == 2 && !opts.zero_curvature ? curvature(M, c) : Integer(0));
  }
  return M;
}

}  // namespace necklace
