#pragma once

#include <string>
#include <vector>

namespace floercas {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string claim;  // the statement being checked, in words
  bool passed = false;
  std::string detail;
};

// Individual checks. Ranges are parameters so callers can shrink or grow them.
CriterionResult check_dimensions(int r_max);
CriterionResult check_grading(int r_max);
CriterionResult check_filtration_spectra(int r_max);
CriterionResult check_socle_charpolys(int r_max);
CriterionResult check_K_modules(int r_max, int g_max);
CriterionResult check_nilpotency(int r_max);
CriterionResult check_reduced_module(int g_max);
CriterionResult check_primitive_parts(int g_max);
CriterionResult check_finite_type(int g_max);
CriterionResult check_fiber_sums();
CriterionResult check_congruence(int g_max);
/// Builds a sample of serialized objects twice and compares them byte for byte.
CriterionResult check_repeatability(int g_max);

/// All twelve checks. Genus-indexed checks run up to max_genus (capped at
/// their natural range); level-indexed checks use fixed ranges.
std::vector<CriterionResult> run_checks(int max_genus);

}  // namespace floercas
