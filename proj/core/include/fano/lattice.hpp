#pragma once

// Intersection lattices of the three rational surfaces that occur as generic
// reduced spaces of the circle action: the projective plane, the quadric
// surface P^1 x P^1, and the one-point blow-up of the plane.  Divisor classes,
// the intersection pairing, adjunction genus, ruling (P^1-fibration) classes,
// and the Euler-class flow across critical levels.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fano {

enum class ReducedSpace { ProjPlane, QuadricSurface, BlownUpPlane };

// Canonical text names used in configuration files: "P2", "P1xP1", "F1".
std::string to_string(ReducedSpace space);
// Throws std::invalid_argument for an unknown name.
ReducedSpace reduced_space_from_string(const std::string& name);

// A divisor class in the basis (u) or (u, v) of a reduced-space lattice.
// For ProjPlane only the u coordinate is meaningful and v must stay 0.
struct DivisorClass {
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  DivisorClass operator+(const DivisorClass& o) const { return {u + o.u, v + o.v}; }
  DivisorClass operator-(const DivisorClass& o) const { return {u - o.u, v - o.v}; }
  DivisorClass operator-() const { return {-u, -v}; }
  bool is_zero() const { return u == 0 && v == 0; }
};

// Rank of the lattice: 1 for the plane, 2 for the other two surfaces.
int lattice_rank(ReducedSpace space);

// Intersection pairing.  Pairing matrices:
//   ProjPlane       [[1]]
//   QuadricSurface  [[0,1],[1,0]]
//   BlownUpPlane    [[0,1],[1,-1]]
std::int64_t intersect(ReducedSpace space, const DivisorClass& a, const DivisorClass& b);

// Anticanonical class c1 of the surface: (3), (2,2), (3,2).
DivisorClass canonical_c1(ReducedSpace space);

// c1^2 of the surface: 9, 8, 8.
std::int64_t surface_degree(ReducedSpace space);

// Picard rank of the surface: 1, 2, 2.
int picard_rank(ReducedSpace space);

// Classes of P^1-fibrations (f with f^2 = 0 representing a ruling):
// none for the plane, both u and v for the quadric, only u for the blow-up.
std::vector<DivisorClass> rulings(ReducedSpace space);

// Swap the two coordinates (the lattice automorphism of the quadric surface).
DivisorClass swap_uv(const DivisorClass& c);

// Genus of an irreducible curve in class C by adjunction:
//   g = 1 + (C.C - c1.C)/2.
// Throws std::domain_error with message starting "non-representable class"
// when the parity of C.C - c1.C fails (cannot happen on these lattices; kept
// as a guard), and "no irreducible curve" when g would be negative.
std::int64_t adjunction_genus(ReducedSpace space, const DivisorClass& c);

// Self-intersection C.C, the degree of the normal bundle of a curve in class
// C inside the reduced space; interior-curve data must satisfy
// alpha_plus + alpha_minus = normal_degree.
std::int64_t normal_degree(ReducedSpace space, const DivisorClass& c);

// True when C has componentwise nonnegative, not all zero coordinates (an
// embedded holomorphic curve) and a nonnegative adjunction genus.
bool is_valid_interior_class(ReducedSpace space, const DivisorClass& c);

// All valid interior classes with coordinates bounded by class_bound,
// in lexicographic order.
std::vector<DivisorClass> valid_interior_classes(ReducedSpace space, std::int64_t class_bound);

// Euler-class flow: crossing the critical levels of the listed interior
// curves adds their classes, e_max = e_min + sum of classes.
DivisorClass euler_flow(const DivisorClass& e_min, const std::vector<DivisorClass>& classes);

}  // namespace fano
