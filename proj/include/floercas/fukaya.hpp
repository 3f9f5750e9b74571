#pragma once

#include "floercas/floer.hpp"
#include "floercas/truncated_series.hpp"

#include <string>
#include <vector>

namespace floercas {

/// One summand R_{g,i} of the reduced Fukaya-Floer module.
struct RhffComponent {
  int i = 0;
  TruncatedSeries alpha;
  GaussianRational beta;
};

struct RhffModule {
  int genus = 0;
  int n = 1;  // loop multiple
  std::vector<RhffComponent> components;
};

/// Components i = -(g-1) .. g-1:
///   i odd:  alpha = 4i + 2nt,          beta = -8
///   i even: alpha = 4i sqrt(-1) - 2nt, beta = 8
RhffModule rhff(int g, int n = 1, std::size_t order = kDefaultTruncation);

/// Checks the t = 0 part of rhff(g, n) against F_g/(gamma, beta^2 - 64):
/// same alpha characteristic polynomial, and beta acting by the right sign on
/// each alpha eigenline. Empty string on success, otherwise what went wrong.
std::string rhff_mismatch(int g, int n = 1);

struct EffectiveEigenvalue {
  TruncatedSeries alpha;
  GaussianRational beta;
  GaussianRational gamma;
};

/// (-2t, 8, 0), (+-4 + 2t, -8, 0), (+-8 sqrt(-1) - 2t, 8, 0), ... up to j = g-1.
std::vector<EffectiveEigenvalue> effective_eigenvalues(int g, std::size_t order = kDefaultTruncation);

struct DeltaComponent {
  int k = 0;
  int i = 0;
  long multiplicity = 0;  // C(2g-2, k) - C(2g-2, k-2)
  GaussianRational alpha;
  GaussianRational beta;
};

struct DeltaHffModule {
  int genus = 0;
  std::vector<DeltaComponent> components;

  /// Sum of multiplicities; each component is a rank one free module.
  long total_rank() const;
};

/// 0 <= k <= g-1, |i| <= g-k-1, i = g-k-1 mod 2; ordered by k then i.
DeltaHffModule delta_hff(int g);

/// A homology class of Sigma x S^1 by grade.
///   grade 2: sigma_coeff [Sigma] + sum_j torus_coeffs[j] (gamma_{j+1} x S^1)
///   grade 1: circle_coeff [S^1] + sum_j surface_coeffs[j] gamma_{j+1}
///   grade 0: point_mult [pt]
struct YHomologyClass {
  int grade = 2;
  long sigma_coeff = 0;
  std::vector<long> torus_coeffs;
  long circle_coeff = 0;
  std::vector<long> surface_coeffs;
  long point_mult = 0;

  static YHomologyClass zero(int g, int grade);
  YHomologyClass operator+(const YHomologyClass& o) const;
  YHomologyClass scaled(long c) const;
};

/// a . S^1 for a grade 2 class.
long pairing_with_circle(const YHomologyClass& a);
/// a . delta with delta = gamma_1, using gamma_j gamma_{j+g} = pt.
long pairing_with_delta(const YHomologyClass& a, int g);

/// Normalized action on the component labelled i:
///   grade 2: value of 2 mu(a); grade 0: value of -4 mu(pt) times the multiplicity; grade 1: 0.
TruncatedSeries mu_action(int i, const YHomologyClass& a, int g, std::size_t order = kDefaultTruncation);

}  // namespace floercas
