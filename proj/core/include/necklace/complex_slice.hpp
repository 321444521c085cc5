#pragma once

#include <necklace/exact_linalg.hpp>
#include <necklace/linear_combination.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace necklace {

/// Thrown when a differential leaves the basis it was assembled against.
class BasisNotClosedError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

template <class Key>
std::map<Key, std::size_t> index_basis(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx.emplace(keys[i], i);
  return idx;
}

/// Matrix of d with columns indexed by `domain` and rows by `codomain`.
template <class Key, class Diff>
SparseMatrix boundary_matrix(const std::vector<Key>& domain, const std::vector<Key>& codomain, Diff&& d) {
  auto idx = index_basis(codomain);
  SparseMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    for (const auto& [k, c] : d(domain[j])) {
      auto it = idx.find(k);
      if (it == idx.end()) throw BasisNotClosedError("differential leaves the codomain basis");
      m.add_to(it->second, j, c);
    }
  }
  return m;
}

/// Matrix of d whose rows are whatever keys show up in the images.
template <class Key, class Diff>
SparseMatrix image_matrix(const std::vector<Key>& domain, Diff&& d) {
  std::map<Key, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> cols(domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j)
    for (const auto& [k, c] : d(domain[j])) {
      auto [it, fresh] = rows.try_emplace(k, rows.size());
      (void)fresh;
      cols[j].emplace_back(it->second, c);
    }
  SparseMatrix m(rows.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j)
    for (const auto& [r, c] : cols[j]) m.add_to(r, j, c);
  return m;
}

/// Homology at the middle basis: `upper` spans the next degree up.
template <class Key, class Diff>
DegreeHomology slice_homology(const std::vector<Key>& upper, const std::vector<Key>& middle, Diff&& d,
                              const CoefficientRing& ring) {
  SparseMatrix d_in = boundary_matrix(upper, middle, d);
  SparseMatrix d_out = image_matrix(middle, d);
  return homology_of_slice(d_in, d_out, ring);
}

/// First generator on which d o d does not vanish.
template <class Key, class Diff>
std::optional<Key> first_nonzero_square(const std::vector<Key>& keys, Diff&& d) {
  for (const auto& k : keys) {
    LinComb<Key> once = d(k);
    LinComb<Key> twice;
    for (const auto& [x, c] : once) twice.add(d(x), c);
    if (!twice.is_zero()) return k;
  }
  return std::nullopt;
}

/// Applies a generator-level map to a formal sum.
template <class Out, class In, class F>
LinComb<Out> extend_linear(const LinComb<In>& x, F&& f) {
  LinComb<Out> out;
  for (const auto& [k, c] : x) out.add(f(k), c);
  return out;
}

}  // namespace necklace
