#pragma once

#include <necklace/simplicial.hpp>

#include <string>
#include <vector>

namespace necklace::fixtures {

SimplicialSet delta0();
SimplicialSet delta1();
SimplicialSet delta2();
SimplicialSet boundary_delta3();
SimplicialSet circle();
/// Delta^2 / boundary: one vertex v, one 2-simplex sigma.
SimplicialSet sphere2();
/// Two 2-simplices glued along a 3-simplex; another reduced model of S^2.
SimplicialSet sphere2_cone();
/// Nerve of Z/2 up to the given dimension; marked truncated.
SimplicialSet nerve_z2(int cap = 3);
/// One vertex, three loops a, b, c and a 2-simplex with faces (a, b, c).
SimplicialSet reduced_triangle();
/// Delta^3 with all four vertices identified.
SimplicialSet reduced_tetrahedron();

/// Looks a fixture up by name (the names used in data/ and on the CLI).
SimplicialSet by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace necklace::fixtures
