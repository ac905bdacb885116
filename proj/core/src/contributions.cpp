#include "fano/contributions.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

// (1-t)^3 as a polynomial.
Polynomial one_minus_t_cubed() {
  return Polynomial{1, -3, 3, -1};
}

void check_isolated_type(const WeightType& type) {
  if (type.nu_zero != 0)
    throw std::domain_error("isolated fixed point cannot have a zero weight");
  if (type.total() != 3 || type.nu_minus < 0 || type.nu_plus < 0)
    throw std::domain_error("weight signature of an isolated fixed point must total 3");
}

WeightType b_point_type() { return WeightType{2, 0, 1}; }
WeightType c_point_type() { return WeightType{1, 0, 2}; }

std::int64_t pow3(std::int64_t x) { return x * x * x; }

}  // namespace

RationalFunction lefschetz_point(const WeightType& type) {
  check_isolated_type(type);
  Polynomial num;
  switch (type.nu_minus) {
    case 0: num = Polynomial{0, 0, 0, -1}; break;  // -t^3 (all weights positive: minimum)
    case 1: num = Polynomial{0, -1}; break;        // -t
    case 2: num = Polynomial{0, 0, 1}; break;      // t^2
    case 3: num = Polynomial{1}; break;            // 1 (all weights negative: maximum)
    default: assert(false && "unreachable");
  }
  return RationalFunction(num, one_minus_t_cubed());
}

RationalFunction lefschetz_interior_curve(std::int64_t genus, std::int64_t alpha_plus,
                                          std::int64_t alpha_minus) {
  const std::int64_t chi = 1 - genus;
  // -t(1-t) chi - (alpha_plus - alpha_minus t) t
  //   = -(chi + alpha_plus) t + (chi + alpha_minus) t^2
  Polynomial num{0, -(chi + alpha_plus), chi + alpha_minus};
  return RationalFunction(num, one_minus_t_cubed());
}

RationalFunction lefschetz_extremal(const ExtremalComponent& comp, bool is_min) {
  switch (comp.kind) {
    case ComponentKind::Point:
      return lefschetz_point(is_min ? WeightType{0, 0, 3} : WeightType{3, 0, 0});
    case ComponentKind::Curve: {
      const std::int64_t n = comp.c1N;
      if (is_min) {
        // (1-t) t^2 + n t^2 = (1+n) t^2 - t^3
        return RationalFunction(Polynomial{0, 0, 1 + n, -1}, one_minus_t_cubed());
      }
      // (1-t) - n t = 1 - (1+n) t
      return RationalFunction(Polynomial{1, -(1 + n)}, one_minus_t_cubed());
    }
    case ComponentKind::Surface: {
      const std::int64_t A = comp.c1F_dot_c1N;
      const std::int64_t B = comp.c1N_sq;
      const Polynomial den = one_minus_t_cubed() * BigInt(2);
      if (is_min) {
        // -2t(1-t)^2 - t(1-t)A - t(1+t)B
        //   = (-2 - A - B) t + (4 + A - B) t^2 - 2 t^3
        return RationalFunction(Polynomial{0, -2 - A - B, 4 + A - B, -2}, den);
      }
      // 2(1-t)^2 - t(1-t)A + t(1+t)B = 2 + (-4 - A + B) t + (2 + A + B) t^2
      return RationalFunction(Polynomial{2, -4 - A + B, 2 + A + B}, den);
    }
  }
  assert(false && "unreachable");
  return RationalFunction();
}

RationalFunction lefschetz_sum(const Configuration& config) {
  RationalFunction total = lefschetz_extremal(config.min, /*is_min=*/true) +
                           lefschetz_extremal(config.max, /*is_min=*/false);
  for (const InteriorCurve& curve : config.interior_curves)
    total = total + lefschetz_interior_curve(curve.genus, curve.alpha_plus, curve.alpha_minus);
  if (config.b != 0)
    total = total + lefschetz_point(b_point_type()) * RationalFunction::integer(config.b);
  if (config.c != 0)
    total = total + lefschetz_point(c_point_type()) * RationalFunction::integer(config.c);
  return total;
}

LocalizationResult loc_point(const WeightType& type) {
  check_isolated_type(type);
  const std::int64_t sum = type.nu_plus - type.nu_minus;
  const std::int64_t prod = type.nu_minus % 2 == 0 ? 1 : -1;  // product of the weights
  return {prod, sum * prod, pow3(sum) * prod};
}

LocalizationResult loc_interior_curve(std::int64_t genus, std::int64_t alpha_plus,
                                      std::int64_t alpha_minus) {
  const std::int64_t chi = 1 - genus;
  return {alpha_plus - alpha_minus, -(alpha_plus + alpha_minus + 2 * chi), 0};
}

LocalizationResult loc_extremal(const ExtremalComponent& comp, bool is_min) {
  switch (comp.kind) {
    case ComponentKind::Point:
      return loc_point(is_min ? WeightType{0, 0, 3} : WeightType{3, 0, 0});
    case ComponentKind::Curve: {
      const std::int64_t n = comp.c1N;
      return {is_min ? -n : n, 2 - n, 24 + 4 * n};
    }
    case ComponentKind::Surface: {
      const std::int64_t A = comp.c1F_dot_c1N;
      const std::int64_t B = comp.c1N_sq;
      return {is_min ? B : -B, -A, 3 * comp.degree + B + 3 * A};
    }
  }
  assert(false && "unreachable");
  return {};
}

LocalizationResult loc_sum(const Configuration& config) {
  LocalizationResult total = loc_extremal(config.min, /*is_min=*/true) +
                             loc_extremal(config.max, /*is_min=*/false);
  for (const InteriorCurve& curve : config.interior_curves)
    total = total + loc_interior_curve(curve.genus, curve.alpha_plus, curve.alpha_minus);
  const LocalizationResult b_triple = loc_point(b_point_type());
  const LocalizationResult c_triple = loc_point(c_point_type());
  total.deg_neg3 += config.b * b_triple.deg_neg3 + config.c * c_triple.deg_neg3;
  total.deg_neg2 += config.b * b_triple.deg_neg2 + config.c * c_triple.deg_neg2;
  total.deg_0 += config.b * b_triple.deg_0 + config.c * c_triple.deg_0;
  return total;
}

std::int64_t anticanonical_degree(const Configuration& config) {
  return loc_sum(config).deg_0;
}

bool localization_consistency(const Configuration& config) {
  const LocalizationResult total = loc_sum(config);
  return total.deg_neg3 == 0 && total.deg_neg2 == 0;
}

bool binomial_count_check(const Configuration& config) {
  if (config.min.kind != ComponentKind::Point || config.max.kind != ComponentKind::Point ||
      !config.interior_curves.empty())
    throw std::domain_error("binomial count check requires an isolated fixed locus");
  // Index counts (N0, N1, N2, N3): the minimum, the (1,0,2) points, the
  // (2,0,1) points, the maximum.
  return config.c == 3 && config.b == 3;
}

namespace {

std::string loc_to_string(std::int64_t value) {
  return std::to_string(value);
}

ContributionLedger assemble(const Configuration& config) {
  ContributionLedger ledger;
  ledger.rows.push_back({"min (" + to_string(config.min.kind) + ")",
                         lefschetz_extremal(config.min, true), loc_extremal(config.min, true)});
  for (std::size_t i = 0; i < config.interior_curves.size(); ++i) {
    const InteriorCurve& curve = config.interior_curves[i];
    std::string label = "interior curve " + std::to_string(i + 1) + " (g=" +
                        std::to_string(curve.genus) + ")";
    ledger.rows.push_back({label,
                           lefschetz_interior_curve(curve.genus, curve.alpha_plus,
                                                    curve.alpha_minus),
                           loc_interior_curve(curve.genus, curve.alpha_plus, curve.alpha_minus)});
  }
  if (config.b != 0) {
    RationalFunction cell = lefschetz_point(b_point_type()) * RationalFunction::integer(config.b);
    LocalizationResult triple = loc_point(b_point_type());
    triple = {config.b * triple.deg_neg3, config.b * triple.deg_neg2, config.b * triple.deg_0};
    ledger.rows.push_back({"interior points (2,0,1) x " + std::to_string(config.b), cell, triple});
  }
  if (config.c != 0) {
    RationalFunction cell = lefschetz_point(c_point_type()) * RationalFunction::integer(config.c);
    LocalizationResult triple = loc_point(c_point_type());
    triple = {config.c * triple.deg_neg3, config.c * triple.deg_neg2, config.c * triple.deg_0};
    ledger.rows.push_back({"interior points (1,0,2) x " + std::to_string(config.c), cell, triple});
  }
  ledger.rows.push_back({"max (" + to_string(config.max.kind) + ")",
                         lefschetz_extremal(config.max, false), loc_extremal(config.max, false)});

  ledger.lefschetz_total = lefschetz_sum(config);
  ledger.loc_total = loc_sum(config);
  ledger.minus_k_cubed = ledger.loc_total.deg_0;
  ledger.lefschetz_is_one = ledger.lefschetz_total.is_one();
  ledger.localization_consistent =
      ledger.loc_total.deg_neg3 == 0 && ledger.loc_total.deg_neg2 == 0;
  return ledger;
}

}  // namespace

ContributionLedger build_ledger(const Configuration& config) {
  config.validate();
  return assemble(config);
}

std::string render_ledger_markdown(const ContributionLedger& ledger) {
  std::ostringstream out;
  out << "| component | lefschetz | deg(-3) | deg(-2) | deg(0) |\n";
  out << "|---|---|---|---|---|\n";
  for (const LedgerRow& row : ledger.rows) {
    out << "| " << row.label << " | " << row.lefschetz.str() << " | "
        << loc_to_string(row.loc.deg_neg3) << " | " << loc_to_string(row.loc.deg_neg2) << " | "
        << loc_to_string(row.loc.deg_0) << " |\n";
  }
  out << "| total | " << ledger.lefschetz_total.str() << " | "
      << loc_to_string(ledger.loc_total.deg_neg3) << " | "
      << loc_to_string(ledger.loc_total.deg_neg2) << " | "
      << loc_to_string(ledger.loc_total.deg_0) << " |\n";
  return out.str();
}

std::string render_ledger_csv(const ContributionLedger& ledger) {
  std::ostringstream out;
  out << "component,lefschetz,deg_neg3,deg_neg2,deg_0\n";
  for (const LedgerRow& row : ledger.rows) {
    out << "\"" << row.label << "\",\"" << row.lefschetz.str() << "\","
        << loc_to_string(row.loc.deg_neg3) << "," << loc_to_string(row.loc.deg_neg2) << ","
        << loc_to_string(row.loc.deg_0) << "\n";
  }
  out << "\"total\",\"" << ledger.lefschetz_total.str() << "\","
      << loc_to_string(ledger.loc_total.deg_neg3) << ","
      << loc_to_string(ledger.loc_total.deg_neg2) << "," << loc_to_string(ledger.loc_total.deg_0)
      << "\n";
  return out.str();
}

}  // namespace fano
