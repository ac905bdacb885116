#include "fano/hodge.hpp"

#include <stdexcept>

namespace fano {

namespace {

// b_2 contribution of the bottom component (no negative directions).
int degree2_min(const ExtremalComponent& comp) {
  switch (comp.kind) {
    case ComponentKind::Point: return 0;
    case ComponentKind::Curve: return 1;                 // top class of the curve
    case ComponentKind::Surface: return comp.picard;     // h^{1,1} of the surface
  }
  return 0;
}

// b_2 contribution of the top component (1-3 negative directions).
int degree2_max(const ExtremalComponent& comp) {
  // Only a surface (one negative direction) shifts its H^0 into degree 2.
  return comp.kind == ComponentKind::Surface ? 1 : 0;
}

// b_4 contribution of the bottom component.
int degree4_min(const ExtremalComponent& comp) {
  // Only a surface has a class in degree 4 before any shift.
  return comp.kind == ComponentKind::Surface ? 1 : 0;
}

// b_4 contribution of the top component.
int degree4_max(const ExtremalComponent& comp) {
  switch (comp.kind) {
    case ComponentKind::Point: return 0;                 // shift by 6 overshoots
    case ComponentKind::Curve: return 1;                 // H^0 shifted by 4
    case ComponentKind::Surface: return comp.picard;     // H^2 shifted by 2
  }
  return 0;
}

}  // namespace

HodgeResult hodge(const Configuration& config) {
  config.validate();
  HodgeResult result;
  const int a = static_cast<int>(config.interior_curves.size());
  // Interior curves sit one level up (one negative direction): H^0 lands in
  // degree 2 and H^2 in degree 4.  Interior points of type (1,0,2) land in
  // degree 2, of type (2,0,1) in degree 4.
  result.h11 = degree2_min(config.min) + a + config.c + degree2_max(config.max);
  result.h11_alt = degree4_min(config.min) + a + config.b + degree4_max(config.max);
  for (const InteriorCurve& curve : config.interior_curves)
    result.h12 += static_cast<int>(curve.genus);
  result.torsion_free = true;
  return result;
}

int picard_rank(const Configuration& config) {
  const HodgeResult result = hodge(config);
  if (result.h11 != result.h11_alt)
    throw std::runtime_error("inconsistent configuration: degree-2 and degree-4 cell counts disagree (" +
                             std::to_string(result.h11) + " vs " + std::to_string(result.h11_alt) + ")");
  return result.h11;
}

}  // namespace fano
