#pragma once

#include <nlohmann/json.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace necklace {

/// s_{j_t} ... s_{j_1} applied to a stored simplex. The word is kept
/// outermost first and strictly decreasing.
struct SimplexRef {
  std::vector<int> degeneracies;
  std::string base;

  bool degenerate() const { return !degeneracies.empty(); }
  auto operator<=>(const SimplexRef&) const = default;
};

class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finitely presented simplicial set, stored up to dimension_cap.
class SimplicialSet {
public:
  SimplicialSet() = default;
  SimplicialSet(std::string name, int dimension_cap) : name_(std::move(name)), cap_(dimension_cap) {}

  /// Appends a nondegenerate simplex. Vertices take no faces.
  void add_simplex(int dim, const std::string& id, std::vector<SimplexRef> faces = {});

  const std::string& name() const { return name_; }
  int dimension_cap() const { return cap_; }
  int max_dimension() const { return simplices_.empty() ? -1 : simplices_.rbegin()->first; }

  /// Set when the cap cuts off an infinite object (nerves of groups).
  bool truncated() const { return truncated_; }
  void set_truncated(bool t) { truncated_ = t; }

  bool contains(const std::string& id) const { return dims_.count(id) != 0; }
  int dim(const std::string& id) const;
  int dim(const SimplexRef& r) const { return dim(r.base) + static_cast<int>(r.degeneracies.size()); }
  const std::vector<std::string>& simplices(int dim) const;
  const std::map<int, std::vector<std::string>>& all_simplices() const { return simplices_; }
  const std::vector<SimplexRef>& faces(const std::string& id) const;

  friend bool operator==(const SimplicialSet&, const SimplicialSet&) = default;

private:
  std::string name_;
  int cap_ = 0;
  bool truncated_ = false;
  std::map<int, std::vector<std::string>> simplices_;
  std::map<std::string, std::vector<SimplexRef>> faces_;
  std::map<std::string, int> dims_;
};

/// Rewrites a degeneracy word (outermost first) into strictly decreasing
/// form using s_i s_j = s_{j+1} s_i for i <= j.
std::vector<int> normalize_degeneracies(std::vector<int> word);

/// d_i in Eilenberg-Zilber normal form.
SimplexRef face(const SimplicialSet& X, const SimplexRef& s, int i);

/// The face spanned by an increasing list of vertex positions.
SimplexRef vertex_face(const SimplicialSet& X, const SimplexRef& s, const std::vector<int>& vertices);

/// sigma(i..j) as a contiguous face.
SimplexRef interval_face(const SimplicialSet& X, const SimplexRef& s, int i, int j);

struct Violation {
  std::string kind;
  std::string simplex;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_presentation(const SimplicialSet& X);

nlohmann::json to_json(const SimplicialSet& X);
SimplicialSet simplicial_set_from_json(const nlohmann::json& j);
SimplicialSet load_simplicial_set(const std::string& path);

std::string to_string(const SimplexRef& r);

}  // namespace necklace
