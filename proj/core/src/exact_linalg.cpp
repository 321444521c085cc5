#include <necklace/exact_linalg.hpp>

#include <algorithm>
#include <set>

namespace necklace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return CoefficientRing(Kind::PrimeField, p);
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
  std::size_t r = dense.size();
  std::size_t c = r ? dense[0].size() : 0;
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, dense[i].at(j));
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Integer SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Integer(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix index out of range");
  if (v == 0) data_[r].erase(c);
  else data_[r][c] = v;
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix index out of range");
  if (v == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix product: shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : rhs.data_[k]) out.add_to(i, j, a * b);
  return out;
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, 0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) d[i][j] = v;
  return d;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

using Row = std::map<std::size_t, Integer>;

// row[dst] += q * row[src], over a vector of sparse rows.
void axpy_row(std::vector<Row>& rows, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (const auto& [c, v] : rows[src]) {
    auto [it, inserted] = rows[dst].try_emplace(c, q * v);
    if (!inserted) {
      it->second += q * v;
      if (it->second == 0) rows[dst].erase(it);
    }
  }
}

// Working state for elimination: rows plus a column -> rows index.
class Eliminator {
public:
  Eliminator(const SparseMatrix& m, bool track)
      : nrows_(m.rows()), ncols_(m.cols()), rows_(m.rows()), cols_(m.cols()), track_(track) {
    for (std::size_t r = 0; r < nrows_; ++r)
      for (const auto& [c, v] : m.row(r)) {
        rows_[r][c] = v;
        cols_[c].insert(r);
      }
    if (track_) {
      u_.resize(nrows_);
      vt_.resize(ncols_);
      for (std::size_t i = 0; i < nrows_; ++i) u_[i][i] = 1;
      for (std::size_t j = 0; j < ncols_; ++j) vt_[j][j] = 1;
    }
  }

  struct Pivot {
    std::size_t row, col;
    Integer value;
  };

  std::vector<Pivot> diagonalize() {
    std::vector<Pivot> pivots;
    std::vector<char> row_done(nrows_, 0), col_done(ncols_, 0);
    while (true) {
      std::size_t pr = 0, pc = 0;
      bool found = false;
      Integer best;
      for (std::size_t r = 0; r < nrows_; ++r) {
        if (row_done[r]) continue;
        for (const auto& [c, v] : rows_[r]) {
          if (col_done[c]) continue;
          Integer a = abs(v);
          if (!found || a < best) {
            best = a;
            pr = r;
            pc = c;
            found = true;
            if (best == 1) break;
          }
        }
        if (found && best == 1) break;
      }
      if (!found) break;
      reduce_pivot(pr, pc);
      pivots.push_back({pr, pc, rows_[pr].at(pc)});
      row_done[pr] = 1;
      col_done[pc] = 1;
    }
    return pivots;
  }

  void row_axpy(std::size_t dst, std::size_t src, const Integer& q) {
    // Update column index for the touched columns.
    for (const auto& [c, v] : rows_[src]) {
      (void)v;
      cols_[c].insert(dst);
    }
    axpy_row(rows_, dst, src, q);
    for (const auto& [c, v] : rows_[src]) {
      (void)v;
      if (!rows_[dst].count(c)) cols_[c].erase(dst);
    }
    if (track_) axpy_row(u_, dst, src, q);
  }

  void col_axpy(std::size_t dst, std::size_t src, const Integer& q) {
    std::vector<std::size_t> touched(cols_[src].begin(), cols_[src].end());
    for (std::size_t r : touched) {
      Integer add = q * rows_[r].at(src);
      auto [it, inserted] = rows_[r].try_emplace(dst, add);
      if (!inserted) {
        it->second += add;
        if (it->second == 0) {
          rows_[r].erase(it);
          cols_[dst].erase(r);
          continue;
        }
      }
      cols_[dst].insert(r);
    }
    if (track_) axpy_row(vt_, dst, src, q);
  }

  void row_scale_neg(std::size_t r) {
    for (auto& kv : rows_[r]) kv.second = -kv.second;
    if (track_)
      for (auto& kv : u_[r]) kv.second = -kv.second;
  }

  std::vector<Row>& u() { return u_; }
  std::vector<Row>& vt() { return vt_; }
  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }

private:
  // Clears the pivot's row and column with Euclidean steps; the pivot may
  // migrate to a smaller remainder inside the same row or column.
  void reduce_pivot(std::size_t& pr, std::size_t& pc) {
    while (true) {
      bool moved = false;
      std::vector<std::size_t> others;
      for (std::size_t r : cols_[pc])
        if (r != pr) others.push_back(r);
      for (std::size_t r : others) {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows_[r].at(pc).get_mpz_t(), rows_[pr].at(pc).get_mpz_t());
        row_axpy(r, pr, -q);
      }
      // Any remainder left in the column becomes the new pivot.
      for (std::size_t r : cols_[pc]) {
        if (r != pr && abs(rows_[r].at(pc)) < abs(rows_[pr].at(pc))) {
          pr = r;
          moved = true;
        }
      }
      if (moved) continue;
      if (cols_[pc].size() > 1) continue;

      std::vector<std::size_t> ocols;
      for (const auto& [c, v] : rows_[pr]) {
        (void)v;
        if (c != pc) ocols.push_back(c);
      }
      for (std::size_t c : ocols) {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows_[pr].at(c).get_mpz_t(), rows_[pr].at(pc).get_mpz_t());
        col_axpy(c, pc, -q);
      }
      for (const auto& [c, v] : rows_[pr]) {
        if (c != pc && abs(v) < abs(rows_[pr].at(pc))) {
          pc = c;
          moved = true;
        }
      }
      if (moved) continue;
      if (rows_[pr].size() == 1 && cols_[pc].size() == 1) return;
    }
  }

  std::size_t nrows_, ncols_;
  std::vector<Row> rows_;
  std::vector<std::set<std::size_t>> cols_;
  bool track_;
  std::vector<Row> u_, vt_;
};

SparseMatrix rows_to_matrix(const std::vector<Row>& rows, std::size_t ncols,
                            const std::vector<std::size_t>& order, bool transpose) {
  std::size_t n = rows.size();
  SparseMatrix m(transpose ? ncols : n, transpose ? n : ncols);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, v] : rows[order[i]]) {
      if (transpose) m.set(c, i, v);
      else m.set(i, c, v);
    }
  return m;
}

std::vector<std::size_t> pivot_order(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<std::size_t> order = pivots;
  std::vector<char> used(n, 0);
  for (std::size_t p : pivots) used[p] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) order.push_back(i);
  return order;
}

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& m, bool with_transforms) {
  Eliminator el(m, with_transforms);
  auto pivots = el.diagonalize();

  // Enforce the divisibility chain by gcd/lcm exchanges between pivots.
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = i + 1; j < pivots.size(); ++j) {
      Integer a = pivots[i].value, b = pivots[j].value;
      if (b % a == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (with_transforms) {
        auto ri = pivots[i].row, rj = pivots[j].row, ci = pivots[i].col, cj = pivots[j].col;
        // row_i += row_j; (col_i, col_j) <- (s col_i + t col_j, -(b/g) col_i + (a/g) col_j);
        // row_j -= (t b / g) row_i.
        axpy_row(el.u(), ri, rj, 1);
        auto& vt = el.vt();
        Row old_i = vt[ci], old_j = vt[cj];
        vt[ci].clear();
        vt[cj].clear();
        std::vector<Row> tmp{old_i, old_j};
        std::vector<Row> out(2);
        axpy_row(tmp, 0, 0, 0);
        for (const auto& [k, v] : old_i) {
          out[0][k] += s * v;
          out[1][k] += -(b / g) * v;
        }
        for (const auto& [k, v] : old_j) {
          out[0][k] += t * v;
          out[1][k] += (a / g) * v;
        }
        for (int q = 0; q < 2; ++q)
          for (auto it = out[q].begin(); it != out[q].end();)
            it = (it->second == 0) ? out[q].erase(it) : std::next(it);
        vt[ci] = out[0];
        vt[cj] = out[1];
        axpy_row(el.u(), rj, ri, -(t * b / g));
      }
      pivots[i].value = g;
      pivots[j].value = a * b / g;
    }
  }

  SmithResult res;
  for (auto& p : pivots) {
    if (p.value < 0) {
      if (with_transforms) {
        for (auto& kv : el.u()[p.row]) kv.second = -kv.second;
      }
      p.value = -p.value;
    }
    res.invariant_factors.push_back(p.value);
  }
  if (with_transforms) {
    std::vector<std::size_t> prow, pcol;
    for (const auto& p : pivots) {
      prow.push_back(p.row);
      pcol.push_back(p.col);
    }
    res.left = rows_to_matrix(el.u(), m.rows(), pivot_order(prow, m.rows()), false);
    res.right = rows_to_matrix(el.vt(), m.cols(), pivot_order(pcol, m.cols()), true);
  }
  return res;
}

namespace {

std::size_t rank_mod_p(const SparseMatrix& m, std::int64_t p) {
  using Row64 = std::map<std::size_t, std::int64_t>;
  std::vector<Row64> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) {
      Integer red = v % Integer(p);
      if (red < 0) red += p;
      if (red != 0) rows[r][c] = red.get_si();
    }
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2, b = a % p;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
      b = static_cast<std::int64_t>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  // Pivot table: column -> reduced row with leading entry 1 at that column.
  std::map<std::size_t, Row64> pivot_rows;
  std::size_t rk = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto [lead, val] = *row.begin();
      auto it = pivot_rows.find(lead);
      if (it == pivot_rows.end()) {
        std::int64_t iv = inv(val);
        for (auto& kv : row) kv.second = static_cast<std::int64_t>((__int128)kv.second * iv % p);
        pivot_rows.emplace(lead, row);
        ++rk;
        break;
      }
      std::int64_t f = val;
      for (const auto& [c, v] : it->second) {
        std::int64_t nv = ((row[c] - (std::int64_t)((__int128)f * v % p)) % p + p) % p;
        if (nv == 0) row.erase(c);
        else row[c] = nv;
      }
    }
  }
  return rk;
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const CoefficientRing& ring) {
  if (ring.kind() == CoefficientRing::Kind::PrimeField) return rank_mod_p(m, ring.characteristic());
  Eliminator el(m, false);
  return el.diagonalize().size();
}

DegreeHomology homology_of_slice(const SparseMatrix& d_in, const SparseMatrix& d_out,
                                 const CoefficientRing& ring) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("homology_of_slice: degree-n dimensions disagree");
  if (!(d_out * d_in).is_zero())
    throw CompositionNonzeroError("boundary composite d_out * d_in is nonzero");
  std::size_t n = d_in.rows();
  DegreeHomology h;
  std::size_t r_out = rank(d_out, ring);
  if (ring.kind() == CoefficientRing::Kind::Integers) {
    auto snf = smith_normal_form(d_in);
    std::size_t r_in = snf.invariant_factors.size();
    h.free_rank = n - r_out - r_in;
    for (const auto& d : snf.invariant_factors)
      if (d > 1) h.torsion.push_back(d);
  } else {
    h.free_rank = n - r_out - rank(d_in, ring);
  }
  return h;
}

}  // namespace necklace
