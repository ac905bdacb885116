#include "fano/lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace fano {

std::string to_string(ReducedSpace space) {
  switch (space) {
    case ReducedSpace::ProjPlane: return "P2";
    case ReducedSpace::QuadricSurface: return "P1xP1";
    case ReducedSpace::BlownUpPlane: return "F1";
  }
  assert(false && "unreachable");
  return "";
}

ReducedSpace reduced_space_from_string(const std::string& name) {
  if (name == "P2") return ReducedSpace::ProjPlane;
  if (name == "P1xP1") return ReducedSpace::QuadricSurface;
  if (name == "F1") return ReducedSpace::BlownUpPlane;
  throw std::invalid_argument("unknown reduced space: " + name);
}

int lattice_rank(ReducedSpace space) {
  return space == ReducedSpace::ProjPlane ? 1 : 2;
}

std::int64_t intersect(ReducedSpace space, const DivisorClass& a, const DivisorClass& b) {
  switch (space) {
    case ReducedSpace::ProjPlane:
      assert(a.v == 0 && b.v == 0 && "rank-1 lattice has a single coordinate");
      return a.u * b.u;
    case ReducedSpace::QuadricSurface:
      return a.u * b.v + a.v * b.u;
    case ReducedSpace::BlownUpPlane:
      return a.u * b.v + a.v * b.u - a.v * b.v;
  }
  assert(false && "unreachable");
  return 0;
}

DivisorClass canonical_c1(ReducedSpace space) {
  switch (space) {
    case ReducedSpace::ProjPlane: return {3, 0};
    case ReducedSpace::QuadricSurface: return {2, 2};
    case ReducedSpace::BlownUpPlane: return {3, 2};
  }
  assert(false && "unreachable");
  return {};
}

std::int64_t surface_degree(ReducedSpace space) {
  const DivisorClass c1 = canonical_c1(space);
  return intersect(space, c1, c1);
}

int picard_rank(ReducedSpace space) {
  return lattice_rank(space);
}

std::vector<DivisorClass> rulings(ReducedSpace space) {
  switch (space) {
    case ReducedSpace::ProjPlane: return {};
    case ReducedSpace::QuadricSurface: return {{1, 0}, {0, 1}};
    case ReducedSpace::BlownUpPlane: return {{1, 0}};
  }
  assert(false && "unreachable");
  return {};
}

DivisorClass swap_uv(const DivisorClass& c) {
  return {c.v, c.u};
}

std::int64_t adjunction_genus(ReducedSpace space, const DivisorClass& c) {
  const std::int64_t cc = intersect(space, c, c);
  const std::int64_t c1c = intersect(space, canonical_c1(space), c);
  if ((cc - c1c) % 2 != 0)
    throw std::domain_error("non-representable class: C.C - c1.C is odd");
  const std::int64_t g = 1 + (cc - c1c) / 2;
  if (g < 0)
    throw std::domain_error("no irreducible curve: adjunction genus is negative");
  return g;
}

std::int64_t normal_degree(ReducedSpace space, const DivisorClass& c) {
  return intersect(space, c, c);
}

bool is_valid_interior_class(ReducedSpace space, const DivisorClass& c) {
  if (c.u < 0 || c.v < 0 || c.is_zero()) return false;
  if (space == ReducedSpace::ProjPlane && c.v != 0) return false;
  try {
    adjunction_genus(space, c);
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

std::vector<DivisorClass> valid_interior_classes(ReducedSpace space, std::int64_t class_bound) {
  assert(class_bound >= 1);
  std::vector<DivisorClass> out;
  const std::int64_t vmax = lattice_rank(space) == 1 ? 0 : class_bound;
  for (std::int64_t u = 0; u <= class_bound; ++u)
    for (std::int64_t v = 0; v <= vmax; ++v)
      if (DivisorClass c{u, v}; is_valid_interior_class(space, c)) out.push_back(c);
  return out;
}

DivisorClass euler_flow(const DivisorClass& e_min, const std::vector<DivisorClass>& classes) {
  DivisorClass e = e_min;
  for (const DivisorClass& c : classes) e = e + c;
  return e;
}

}  // namespace fano
