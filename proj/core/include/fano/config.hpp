#pragma once

// Fixed-point configurations of a semifree circle action on a Fano threefold:
// the extremal components at the minimum and maximum of the moment map, the
// interior fixed curves with the degrees (alpha_plus, alpha_minus) of the
// positive and negative normal line bundles, and the counts of interior
// isolated fixed points of the two index types.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

// Raised on malformed configuration data (schema, parse, or consistency
// violations); carries a one-line diagnostic.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Weight signature of the isotropy representation at an isolated fixed point:
// counts of -1, 0, +1 weights.  A fixed point of a semifree action on a
// threefold has nu_minus + nu_zero + nu_plus = 3.
struct WeightType {
  int nu_minus = 0;
  int nu_zero = 0;
  int nu_plus = 0;

  friend bool operator==(const WeightType&, const WeightType&) = default;
  int total() const { return nu_minus + nu_zero + nu_plus; }
};

enum class ComponentKind { Point, Curve, Surface };

std::string to_string(ComponentKind kind);

// An extremal fixed component (at the minimum or maximum of the moment map).
//  - Point: isolated fixed point.
//  - Curve: rational fixed curve; c1N = degree of its rank-2 normal bundle.
//  - Surface: fixed del Pezzo surface F; degree = c1(F)^2 in [1,9],
//    c1F_dot_c1N = c1(F).c1(N), c1N_sq = c1(N)^2 for the normal line bundle N,
//    and its Picard rank.
struct ExtremalComponent {
  ComponentKind kind = ComponentKind::Point;
  // Curve fields.
  std::int64_t c1N = 0;
  // Surface fields.
  std::int64_t degree = 0;
  std::int64_t c1F_dot_c1N = 0;
  std::int64_t c1N_sq = 0;
  int picard = 1;

  static ExtremalComponent point();
  static ExtremalComponent curve(std::int64_t c1N);
  static ExtremalComponent surface(std::int64_t degree, std::int64_t c1F_dot_c1N,
                                   std::int64_t c1N_sq, int picard_rank);

  friend bool operator==(const ExtremalComponent&, const ExtremalComponent&) = default;
};

// An interior fixed curve of genus g; its normal bundle splits as a sum of a
// positive and a negative line bundle of degrees alpha_plus and alpha_minus.
// When the curve's class in the generic reduced space is known it is attached
// and alpha_plus + alpha_minus must equal the self-intersection of the class.
struct InteriorCurve {
  std::int64_t genus = 0;
  std::int64_t alpha_plus = 0;
  std::int64_t alpha_minus = 0;
  std::optional<DivisorClass> cls;

  std::int64_t euler_chi() const { return 1 - genus; }  // chi(O_C) = 1 - g

  friend bool operator==(const InteriorCurve&, const InteriorCurve&) = default;
};

// A full fixed-point configuration.  b and c count the interior isolated
// points with weight types (2,0,1) and (1,0,2) respectively.
struct Configuration {
  ExtremalComponent min;
  ExtremalComponent max;
  std::vector<InteriorCurve> interior_curves;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::optional<ReducedSpace> reduced_space;
  std::optional<DivisorClass> euler_min;

  // Throws ConfigError when invariants fail (negative genus, surface degree
  // outside [1,9], negative b or c, class data without a reduced space, or
  // alpha_plus + alpha_minus != C.C for an attached class).
  void validate() const;
};

// Constraint on the square of the reduced-space Euler class next to an
// extremal component: 1 next to a fixed point, -c1N next to a fixed curve,
// unconstrained next to a fixed surface.
std::optional<std::int64_t> extremum_euler_square(const ExtremalComponent& comp);

// Wall-crossing check for the Euler class at a critical level containing k
// isolated points of type (2,0,1), l isolated points of type (1,0,2), and the
// listed interior curves:
//   e_after^2 - e_before^2 == k - l + sum(alpha_plus - alpha_minus).
bool euler_jump_check(ReducedSpace space, std::int64_t k, std::int64_t l,
                      const std::vector<InteriorCurve>& curves,
                      const DivisorClass& e_before, const DivisorClass& e_after);

// JSON serialization.  Field names: "min", "max" (objects with "kind" one of
// "point" / "curve" / "surface" and the kind's fields), "interior_curves"
// (array of {"genus","alpha_plus","alpha_minus","class"?}), "b", "c",
// optional "reduced_space" ("P2" / "P1xP1" / "F1"), optional "euler_min"
// (coordinate array).  Parsing throws ConfigError on any schema violation.
Configuration config_from_json(const std::string& text);
Configuration config_from_file(const std::string& path);
std::string config_to_json(const Configuration& config);

}  // namespace fano
