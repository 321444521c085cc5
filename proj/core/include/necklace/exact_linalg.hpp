#pragma once

#include <necklace/linear_combination.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace necklace {

/// Ground ring for homology computations. Structure maps are always
/// integral; the ring only enters when homology is extracted.
class CoefficientRing {
public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static CoefficientRing prime_field(std::int64_t p);

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
  CoefficientRing(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

/// Sparse integer matrix. Entries are kept row-major in ordered maps;
/// zero entries are never stored.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<long>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Integer get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  void add_to(std::size_t r, std::size_t c, const Integer& v);

  const std::map<std::size_t, Integer>& row(std::size_t r) const { return data_.at(r); }

  SparseMatrix operator*(const SparseMatrix& rhs) const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
  bool is_zero() const { return nonzeros() == 0; }

  std::vector<std::vector<Integer>> to_dense() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Integer>> data_;
};

struct SmithResult {
  /// Nonzero invariant factors d1 | d2 | ..., all positive.
  std::vector<Integer> invariant_factors;
  /// Present when transforms were requested: U * M * V = diag(invariant_factors).
  std::optional<SparseMatrix> left;
  std::optional<SparseMatrix> right;
};

/// Smith normal form over the integers. Pivots are chosen with minimal
/// absolute value to keep coefficient growth down.
SmithResult smith_normal_form(const SparseMatrix& m, bool with_transforms = false);

/// Rank over the ring (over the fraction field for the integers).
std::size_t rank(const SparseMatrix& m, const CoefficientRing& ring);

struct DegreeHomology {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  bool exact = true;
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

/// Homology per degree over a window.
struct HomologyResult {
  std::map<int, DegreeHomology> degrees;
  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

class CompositionNonzeroError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// ker(d_out) / im(d_in) at one degree: d_in maps degree n+1 into degree n
/// (rows = degree-n basis) and d_out maps degree n onward (columns =
/// degree-n basis). Throws CompositionNonzeroError unless d_out * d_in = 0.
DegreeHomology homology_of_slice(const SparseMatrix& d_in, const SparseMatrix& d_out,
                                 const CoefficientRing& ring);

}  // namespace necklace
