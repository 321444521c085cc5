#include <necklace/simplicial.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace necklace {

void SimplicialSet::add_simplex(int dim, const std::string& id, std::vector<SimplexRef> faces) {
  if (dim < 0) throw std::invalid_argument("negative dimension for " + id);
  if (dims_.count(id)) throw std::invalid_argument("duplicate simplex id " + id);
  if (dim > cap_) throw CapExceededError("simplex " + id + " exceeds dimension cap");
  simplices_[dim].push_back(id);
  dims_[id] = dim;
  faces_[id] = std::move(faces);
}

int SimplicialSet::dim(const std::string& id) const {
  auto it = dims_.find(id);
  if (it == dims_.end()) throw std::out_of_range("unknown simplex " + id);
  return it->second;
}

const std::vector<std::string>& SimplicialSet::simplices(int dim) const {
  static const std::vector<std::string> none;
  auto it = simplices_.find(dim);
  return it == simplices_.end() ? none : it->second;
}

const std::vector<SimplexRef>& SimplicialSet::faces(const std::string& id) const {
  auto it = faces_.find(id);
  if (it == faces_.end()) throw std::out_of_range("unknown simplex " + id);
  return it->second;
}

std::vector<int> normalize_degeneracies(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] <= w[k + 1]) {
        int i = w[k], j = w[k + 1];
        w[k] = j + 1;
        w[k + 1] = i;
        changed = true;
      }
    }
  }
  return w;
}

SimplexRef face(const SimplicialSet& X, const SimplexRef& s, int i) {
  int n = X.dim(s);
  if (i < 0 || i > n || n == 0) throw std::out_of_range("face index out of range on " + to_string(s));
  std::vector<int> prefix;
  for (std::size_t k = 0; k < s.degeneracies.size(); ++k) {
    int j = s.degeneracies[k];
    if (i < j) {
      prefix.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      prefix.insert(prefix.end(), s.degeneracies.begin() + k + 1, s.degeneracies.end());
      return SimplexRef{normalize_degeneracies(prefix), s.base};
    } else {
      prefix.push_back(j);
      --i;
    }
  }
  const auto& fs = X.faces(s.base);
  if (static_cast<int>(fs.size()) <= i)
    throw std::out_of_range("missing face d" + std::to_string(i) + " of " + s.base);
  const SimplexRef& f = fs[i];
  prefix.insert(prefix.end(), f.degeneracies.begin(), f.degeneracies.end());
  return SimplexRef{normalize_degeneracies(prefix), f.base};
}

SimplexRef vertex_face(const SimplicialSet& X, const SimplexRef& s, const std::vector<int>& vertices) {
  int n = X.dim(s);
  std::vector<char> keep(n + 1, 0);
  for (int v : vertices) {
    if (v < 0 || v > n) throw std::out_of_range("vertex out of range in vertex_face");
    keep[v] = 1;
  }
  SimplexRef r = s;
  for (int i = n; i >= 0; --i)
    if (!keep[i]) r = face(X, r, i);
  return r;
}

SimplexRef interval_face(const SimplicialSet& X, const SimplexRef& s, int i, int j) {
  std::vector<int> vs;
  for (int k = i; k <= j; ++k) vs.push_back(k);
  return vertex_face(X, s, vs);
}

std::string to_string(const SimplexRef& r) {
  std::string out;
  for (int j : r.degeneracies) out += "s" + std::to_string(j) + " ";
  return out + r.base;
}

namespace {

bool strictly_decreasing(const std::vector<int>& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] <= w[k + 1]) return false;
  return true;
}

// s_{j_1} acts first on a base of dimension m, then s_{j_2} on m + 1, ...
bool degeneracies_in_range(const std::vector<int>& w, int base_dim) {
  int d = base_dim;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 0 || *it > d) return false;
    ++d;
  }
  return true;
}

}  // namespace

ValidationReport validate_presentation(const SimplicialSet& X) {
  ValidationReport rep;
  auto add = [&](std::string kind, const std::string& id, std::string detail) {
    rep.violations.push_back({std::move(kind), id, std::move(detail)});
  };
  bool refs_ok = true;
  for (const auto& [n, ids] : X.all_simplices()) {
    for (const auto& id : ids) {
      const auto& fs = X.faces(id);
      if (n > X.dimension_cap()) add("cap", id, "dimension above cap");
      if (n == 0) {
        if (!fs.empty()) add("arity", id, "vertex with faces");
        continue;
      }
      if (static_cast<int>(fs.size()) != n + 1) {
        add("arity", id, "expected " + std::to_string(n + 1) + " faces, found " + std::to_string(fs.size()));
        refs_ok = false;
        continue;
      }
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& f = fs[i];
        std::string where = "d" + std::to_string(i);
        if (!X.contains(f.base)) {
          add("reference", id, where + " targets unknown simplex " + f.base);
          refs_ok = false;
          continue;
        }
        if (!strictly_decreasing(f.degeneracies)) {
          add("normal-form", id, where + " degeneracy word not strictly decreasing");
          refs_ok = false;
        }
        if (!degeneracies_in_range(f.degeneracies, X.dim(f.base))) {
          add("normal-form", id, where + " degeneracy index out of range");
          refs_ok = false;
        }
        if (X.dim(f) != n - 1) {
          add("dimension", id, where + " has dimension " + std::to_string(X.dim(f)));
          refs_ok = false;
        }
      }
    }
  }
  if (!refs_ok) return rep;
  for (const auto& [n, ids] : X.all_simplices()) {
    if (n < 2) continue;
    for (const auto& id : ids) {
      SimplexRef s{{}, id};
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          SimplexRef lhs = face(X, face(X, s, j), i);
          SimplexRef rhs = face(X, face(X, s, i), j - 1);
          if (lhs != rhs)
            add("identity", id,
                "d" + std::to_string(i) + "d" + std::to_string(j) + " = " + to_string(lhs) + " but d" +
                    std::to_string(j - 1) + "d" + std::to_string(i) + " = " + to_string(rhs));
        }
    }
  }
  return rep;
}

nlohmann::json to_json(const SimplicialSet& X) {
  nlohmann::json j;
  j["name"] = X.name();
  j["dimension_cap"] = X.dimension_cap();
  if (X.truncated()) j["truncated"] = true;
  nlohmann::json simp = nlohmann::json::object();
  nlohmann::json faces = nlohmann::json::object();
  for (const auto& [n, ids] : X.all_simplices()) {
    simp[std::to_string(n)] = ids;
    for (const auto& id : ids) {
      if (n == 0) continue;
      nlohmann::json fl = nlohmann::json::array();
      for (const auto& f : X.faces(id)) fl.push_back(nlohmann::json::array({f.degeneracies, f.base}));
      faces[id] = fl;
    }
  }
  j["simplices"] = simp;
  j["faces"] = faces;
  return j;
}

SimplicialSet simplicial_set_from_json(const nlohmann::json& j) {
  std::map<int, std::vector<std::string>> by_dim;
  for (const auto& [k, ids] : j.at("simplices").items()) {
    int n = std::stoi(k);
    by_dim[n] = ids.get<std::vector<std::string>>();
  }
  // Without an explicit cap the tables are taken to be complete.
  const int top = by_dim.empty() ? 0 : by_dim.rbegin()->first;
  SimplicialSet X(j.at("name").get<std::string>(), j.value("dimension_cap", top));
  if (j.contains("truncated")) X.set_truncated(j.at("truncated").get<bool>());
  const auto& faces = j.contains("faces") ? j.at("faces") : nlohmann::json::object();
  for (const auto& [n, ids] : by_dim) {
    for (const auto& id : ids) {
      std::vector<SimplexRef> fs;
      if (faces.contains(id)) {
        for (const auto& e : faces.at(id)) {
          if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("face entry of " + id + " must be [degeneracies, base]");
          fs.push_back(SimplexRef{e[0].get<std::vector<int>>(), e[1].get<std::string>()});
        }
      }
      X.add_simplex(n, id, std::move(fs));
    }
  }
  return X;
}

SimplicialSet load_simplicial_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
  return simplicial_set_from_json(j);
}

}  // namespace necklace
