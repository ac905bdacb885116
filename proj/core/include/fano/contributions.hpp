#pragma once

// Fixed-component contributions to the two global constraints on a semifree
// circle action:
//  - the holomorphic Lefschetz number of the structure sheaf, a rational
//    function of t whose total over all fixed components must equal 1, and
//  - equivariant localization of 1, c1, and c1^3, giving for each component a
//    triple of contributions at lambda^-3, lambda^-2, lambda^0; the first two
//    totals must vanish and the third is the anticanonical degree -K^3.

#include <cstdint>
#include <string>
#include <vector>

#include "fano/config.hpp"
#include "fano/rational.hpp"

namespace fano {

// Localization contributions of one fixed component: the coefficients at
// lambda^-3, lambda^-2, lambda^0 of the localized integrals of 1, c1, c1^3.
struct LocalizationResult {
  std::int64_t deg_neg3 = 0;
  std::int64_t deg_neg2 = 0;
  std::int64_t deg_0 = 0;

  friend bool operator==(const LocalizationResult&, const LocalizationResult&) = default;
  LocalizationResult operator+(const LocalizationResult& o) const {
    return {deg_neg3 + o.deg_neg3, deg_neg2 + o.deg_neg2, deg_0 + o.deg_0};
  }
};

// Lefschetz contribution of an isolated fixed point with the given weight
// signature (nu_zero must be 0, total must be 3):
//   (0,0,3) -> 1/(1-t)^3      (3,0,0) -> -t^3/(1-t)^3
//   (1,0,2) -> t^2/(1-t)^3    (2,0,1) -> -t/(1-t)^3
// Throws std::domain_error otherwise.
RationalFunction lefschetz_point(const WeightType& type);

// Lefschetz contribution of an interior fixed curve of genus g with normal
// line bundle degrees (alpha_plus, alpha_minus); chi = 1 - g:
//   ( -t(1-t) chi - (alpha_plus - alpha_minus t) t ) / (1-t)^3.
RationalFunction lefschetz_interior_curve(std::int64_t genus, std::int64_t alpha_plus,
                                          std::int64_t alpha_minus);

// Lefschetz contribution of an extremal component.  For a point this is
// lefschetz_point of (0,0,3) or (3,0,0).  For a rational curve with normal
// degree n = c1N:
//   min: ((1-t) t^2 + t^2 n) / (1-t)^3     max: ((1-t) - n t) / (1-t)^3
// For a surface with A = c1F_dot_c1N, B = c1N_sq:
//   min: (-2t(1-t)^2 - t(1-t)A - t(1+t)B) / (2(1-t)^3)
//   max: ( 2(1-t)^2 - t(1-t)A + t(1+t)B) / (2(1-t)^3)
RationalFunction lefschetz_extremal(const ExtremalComponent& comp, bool is_min);

// Total Lefschetz number of a configuration: extremal cells, interior curve
// cells, and b interior points of type (2,0,1), c of type (1,0,2).
RationalFunction lefschetz_sum(const Configuration& config);

// Localization triple of an isolated fixed point: (sum w)^p / (prod w) for
// p = 0, 1, 3 with nu_minus weights -1 and nu_plus weights +1.
// Throws std::domain_error unless nu_zero = 0 and the total is 3.
LocalizationResult loc_point(const WeightType& type);

// Localization triple of an interior fixed curve:
//   ( alpha_plus - alpha_minus, -(alpha_plus + alpha_minus + 2 chi), 0 ).
LocalizationResult loc_interior_curve(std::int64_t genus, std::int64_t alpha_plus,
                                      std::int64_t alpha_minus);

// Localization triple of an extremal component.
//   point:       min (1, 3, 27), max (-1, 3, 27)
//   curve (n):   min (-n, 2-n, 24+4n), max (n, 2-n, 24+4n)
//   surface:     min ( B, -A, 3 degree + B + 3A), max (-B, -A, 3 degree + B + 3A)
LocalizationResult loc_extremal(const ExtremalComponent& comp, bool is_min);

// Sum of the localization triples of all components of a configuration.
LocalizationResult loc_sum(const Configuration& config);

// The anticanonical degree -K^3: the lambda^0 total of the localization.
std::int64_t anticanonical_degree(const Configuration& config);

// True when the lambda^-3 and lambda^-2 localization totals both vanish.
bool localization_consistency(const Configuration& config);

// For a configuration whose fixed locus is isolated (point extrema, no
// interior curves): check that the counts of points of index k (k = nu_minus,
// counted by Morse index 2k) are the binomial pattern (1, 3, 3, 1), i.e.
// b = c = 3.  Throws std::domain_error when a non-isolated component exists.
bool binomial_count_check(const Configuration& config);

// One row of the contribution ledger.
struct LedgerRow {
  std::string label;
  RationalFunction lefschetz;
  LocalizationResult loc;
};

// Per-component contributions with totals and the derived checks.
struct ContributionLedger {
  std::vector<LedgerRow> rows;
  RationalFunction lefschetz_total;
  LocalizationResult loc_total;
  std::int64_t minus_k_cubed = 0;
  bool lefschetz_is_one = false;
  bool localization_consistent = false;
};

ContributionLedger build_ledger(const Configuration& config);

// Render the ledger as a Markdown table or as CSV (same rows, same order).
std::string render_ledger_markdown(const ContributionLedger& ledger);
std::string render_ledger_csv(const ContributionLedger& ledger);

}  // namespace fano
