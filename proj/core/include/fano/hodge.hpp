#pragma once

#include "fano/config.hpp"

namespace fano {

// Hodge data of a configuration, computed by counting flow cells.
//
// Every fixed component F with k negative normal directions contributes
// H^{j}(F) to H^{j+2k}(X).  Reading off degree 2 and degree 4 gives two
// independent counts of h^{1,1}; they agree exactly when the configuration
// is Poincare consistent (for isolated interior points: b == c).
struct HodgeResult {
  int h11 = 0;       // degree-2 cell count
  int h12 = 0;       // sum of interior curve genera
  int h11_alt = 0;   // degree-4 cell count (Poincare-dual reading)
  bool torsion_free = true;

  bool operator==(const HodgeResult&) const = default;
};

HodgeResult hodge(const Configuration& config);

// Picard rank = h11 once both cell counts agree; throws std::runtime_error
// ("inconsistent configuration") when they do not.
int picard_rank(const Configuration& config);

}  // namespace fano
