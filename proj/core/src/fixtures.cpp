#include <necklace/fixtures.hpp>

#include <functional>
#include <map>

namespace necklace::fixtures {

namespace {

SimplexRef nd(const std::string& id) { return SimplexRef{{}, id}; }
SimplexRef deg(std::vector<int> w, const std::string& id) { return SimplexRef{std::move(w), id}; }

std::string tri(int i, int j, int k) { return std::to_string(i) + std::to_string(j) + std::to_string(k); }
std::string edge(int i, int j) { return std::to_string(i) + std::to_string(j); }

}  // namespace

SimplicialSet delta0() {
  SimplicialSet X("delta0", 0);
  X.add_simplex(0, "0");
  return X;
}

SimplicialSet delta1() {
  SimplicialSet X("delta1", 1);
  X.add_simplex(0, "0");
  X.add_simplex(0, "1");
  X.add_simplex(1, "01", {nd("1"), nd("0")});
  return X;
}

SimplicialSet delta2() {
  SimplicialSet X("delta2", 2);
  for (int i = 0; i < 3; ++i) X.add_simplex(0, std::to_string(i));
  X.add_simplex(1, "01", {nd("1"), nd("0")});
  X.add_simplex(1, "02", {nd("2"), nd("0")});
  X.add_simplex(1, "12", {nd("2"), nd("1")});
  X.add_simplex(2, "012", {nd("12"), nd("02"), nd("01")});
  return X;
}

SimplicialSet boundary_delta3() {
  SimplicialSet X("boundary_delta3", 2);
  for (int i = 0; i < 4; ++i) X.add_simplex(0, std::to_string(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      X.add_simplex(1, edge(i, j), {nd(std::to_string(j)), nd(std::to_string(i))});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        X.add_simplex(2, tri(i, j, k), {nd(edge(j, k)), nd(edge(i, k)), nd(edge(i, j))});
  return X;
}

SimplicialSet circle() {
  SimplicialSet X("circle", 1);
  X.add_simplex(0, "v");
  X.add_simplex(1, "t", {nd("v"), nd("v")});
  return X;
}

SimplicialSet sphere2() {
  SimplicialSet X("sphere2", 2);
  X.add_simplex(0, "v");
  X.add_simplex(2, "sigma", {deg({0}, "v"), deg({0}, "v"), deg({0}, "v")});
  return X;
}

SimplicialSet sphere2_cone() {
  SimplicialSet X("sphere2_cone", 3);
  X.add_simplex(0, "v");
  X.add_simplex(2, "sigma", {deg({0}, "v"), deg({0}, "v"), deg({0}, "v")});
  X.add_simplex(2, "tau", {deg({0}, "v"), deg({0}, "v"), deg({0}, "v")});
  X.add_simplex(3, "rho", {nd("sigma"), nd("tau"), deg({1, 0}, "v"), deg({1, 0}, "v")});
  return X;
}

SimplicialSet nerve_z2(int cap) {
  SimplicialSet X("nerve_z2", cap);
  X.set_truncated(true);
  X.add_simplex(0, "*");
  auto word = [](int n) { return n == 0 ? std::string("*") : std::string(n, 'g'); };
  if (cap >= 1) X.add_simplex(1, "g", {nd("*"), nd("*")});
  for (int n = 2; n <= cap; ++n) {
    std::vector<SimplexRef> fs;
    fs.push_back(nd(word(n - 1)));
    for (int i = 1; i < n; ++i) fs.push_back(deg({i - 1}, word(n - 2)));
    fs.push_back(nd(word(n - 1)));
    X.add_simplex(n, word(n), std::move(fs));
  }
  return X;
}

SimplicialSet reduced_triangle() {
  SimplicialSet X("reduced_triangle", 2);
  X.add_simplex(0, "v");
  for (const char* e : {"a", "b", "c"}) X.add_simplex(1, e, {nd("v"), nd("v")});
  X.add_simplex(2, "tau", {nd("a"), nd("b"), nd("c")});
  return X;
}

SimplicialSet reduced_tetrahedron() {
  SimplicialSet X("reduced_tetrahedron", 3);
  X.add_simplex(0, "v");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) X.add_simplex(1, "e" + edge(i, j), {nd("v"), nd("v")});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        X.add_simplex(2, "t" + tri(i, j, k), {nd("e" + edge(j, k)), nd("e" + edge(i, k)), nd("e" + edge(i, j))});
  X.add_simplex(3, "w", {nd("t123"), nd("t023"), nd("t013"), nd("t012")});
  return X;
}

namespace {

const std::map<std::string, std::function<SimplicialSet()>>& registry() {
  static const std::map<std::string, std::function<SimplicialSet()>> r = {
      {"delta0", delta0},
      {"delta1", delta1},
      {"delta2", delta2},
      {"boundary_delta3", boundary_delta3},
      {"circle", circle},
      {"sphere2", sphere2},
      {"sphere2_cone", sphere2_cone},
      {"nerve_z2", [] { return nerve_z2(3); }},
      {"reduced_triangle", reduced_triangle},
      {"reduced_tetrahedron", reduced_tetrahedron},
  };
  return r;
}

}  // namespace

SimplicialSet by_name(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown fixture " + name);
  return it->second();
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& kv : registry()) out.push_back(kv.first);
  return out;
}

}  // namespace necklace::fixtures
