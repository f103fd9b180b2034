#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamreg/graph.hpp"

namespace hamreg {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shape of the subgraph deleted from K_{2r+3} to form an H'_{r,t} graph:
// disjoint cycles and paths covering every vertex, listed by vertex count.
struct HPrimeVariant {
  std::vector<int> cycles;  // each >= 3 vertices
  std::vector<int> paths;   // each >= 2 vertices

  friend bool operator==(const HPrimeVariant&, const HPrimeVariant&) = default;
};

// Every variant for (r, t), each listed with non-increasing parts. Throws
// ParameterError for invalid (r, t).
std::vector<HPrimeVariant> all_h_prime_variants(int r, int t);

std::string to_string(const HPrimeVariant& v);
// Inverse of to_string ("paths=3,2;cycles=" etc.); throws ParameterError.
// Parts are sorted non-increasing.
HPrimeVariant h_prime_variant_from_string(const std::string& text);

enum class Family {
  f_rt,
  f_prime_rt,
  family_f,
  h_rt,
  h_prime_rt,
  family_h,
  no_path_f,
  no_path_h,
  petersen,
  petersen_prime,
  circulant,
  generalized_f,
  generalized_h,
};

std::string to_string(Family f);
// Accepts the names produced by to_string; throws ParameterError otherwise.
Family family_from_string(const std::string& name);

// Selects one construction. Unused fields are ignored by the family.
struct FamilyParams {
  Family family = Family::petersen;
  int r = 0;
  int t = 0;
  std::optional<HPrimeVariant> variant;  // h_prime_rt / family_h; default when empty
  int k = 0;                             // no_path_*, generalized_*
  int n = 0;                             // circulant, generalized_*
  std::vector<int> connections;          // circulant

  // Throws ParameterError when the parameters do not describe a graph.
  void validate() const;
};

Graph build(const FamilyParams& params);

Graph petersen();
// P with its highest vertex replaced by a triangle, one triangle vertex per
// former neighbour.
Graph petersen_prime();

// K_{2r+1} on 0..2r minus the matching {01, 23, ...} on t vertices, plus
// vertex 2r+1 joined to those t vertices. r >= 2, t even, 2 <= t <= 2r-2.
Graph f_rt(int r, int t);
// K_{2r+1} minus the matching {01, 23, ...} on 2r-t vertices.
Graph f_prime_rt(int r, int t);
// F_{r,t} on 0..2r+1 (cut vertex 2r+1) and F'_{r,t} on 2r+2..4r+2, the cut
// vertex joined to the 2r-t vertices of degree 2r-1.
Graph family_f(int r, int t);

// K_{2r+2} minus the matching on t vertices, plus vertex 2r+2 joined to
// them. r >= 1, t even, 2 <= t <= 2r.
Graph h_rt(int r, int t);
// K_{2r+3} minus a spanning union of cycles and exactly (t+2)/2 paths. The
// default deletes a near-perfect matching {01, 23, ..., (2r)(2r+1)} together
// with the matching {(2r+2)0, 12, 34, ..., (2r-t-1)(2r-t)}; with an explicit
// variant the parts are laid out on consecutive vertices, paths first.
Graph h_prime_rt(int r, int t, const std::optional<HPrimeVariant>& variant = std::nullopt);
// H_{r,t} on 0..2r+2 (cut vertex 2r+2) and H'_{r,t} on 2r+3..4r+5.
Graph family_h(int r, int t, const std::optional<HPrimeVariant>& variant = std::nullopt);

// Two copies of K_{k+1} - e and one K_{k+1} minus a matching on k-4
// vertices, all degree-(k-1) vertices joined to a new last vertex.
// k even, k >= 6; 3k+4 vertices.
Graph no_path_f(int k);
// As no_path_f with the third block replaced by H'_{(k-1)/2,4}.
// k odd, k >= 5; 3k+5 vertices.
Graph no_path_h(int k);

// Vertex i adjacent to i +- s (mod n) for s in connections, each in
// [1, n/2].
Graph circulant(int n, const std::vector<int>& connections);
// A connected d-regular circulant on m vertices: connections {1..d/2},
// plus m/2 when d is odd (m must then be even).
Graph regular_circulant(int m, int d);

// Connected k-regular graph on n vertices with a cut vertex. Even k: an
// F-type side built from a k-regular circulant on n-k-2 vertices with the
// matching on t vertices removed. Odd k: H'-type side built from a
// (k+1)-regular circulant on n-k-2 vertices with a path and matching removed
// along the offset-1 cycle. t defaults to 2.
Graph generalized_no_hamilton(int k, int n, int t = 2);

struct FamilyMembership {
  int r;
  int t;
  friend bool operator==(const FamilyMembership&, const FamilyMembership&) = default;
};

// (r, t) when g is isomorphic to family_f(r, t). family_f(r, t) and
// family_f(r, 2r - t) are the same graph, so t is reported as the smaller
// of the two.
std::optional<FamilyMembership> is_family_f_member(const Graph& g);
// (r, t) when g is isomorphic to family_h(r, t, v) for some variant v.
std::optional<FamilyMembership> is_family_h_member(const Graph& g);
// The H'-variant read off an H-family member's complement structure.
std::optional<HPrimeVariant> family_h_variant(const Graph& g);

}  // namespace hamreg
