#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "baxterize/braid.hpp"
#include "baxterize/matrix.hpp"

namespace baxterize {

/// Residual-check outcome for one named verification over a sample set.
struct VerificationReport {
  std::string name;
  std::vector<std::array<double, 3>> samples;  // (theta, theta', .) or (v, v', v'')
  std::vector<double> residuals;               // max-norm residual per sample
  double tolerance = default_tolerance;
  bool pass = false;
  std::string metadata;

  double max_residual() const;
};

VerificationReport finalize_report(std::string name,
                                   std::vector<std::array<double, 3>> samples,
                                   std::vector<double> residuals, double tol,
                                   std::string metadata);

/// Deterministic sample pairs in (-1,1)^2 whose arguments (theta, theta',
/// theta+theta', and mirrors) keep `margin` away from every braid pole.
std::vector<std::pair<double, double>> sample_pairs(const SpectralBraid &braid,
                                                    std::size_t count,
                                                    std::uint64_t seed,
                                                    double margin = 0.05);

/// Residual of the spectral-parameter braid relation on the triple product
/// space: R12(theta) R23(theta+theta') R12(theta') vs the mirrored product.
VerificationReport check_braid(const SpectralBraid &braid,
                               const std::vector<std::pair<double, double>> &samples,
                               double tol = default_tolerance);

/// Braid relation of the S14 family with three mutually independent
/// coefficient values.
VerificationReport check_braid_s14(
    double q, const std::vector<std::array<double, 3>> &triples,
    double tol = default_tolerance);

/// Residuals of R(-theta) R(theta) - I.
VerificationReport check_unitarity(const SpectralBraid &braid,
                                   const std::vector<double> &thetas,
                                   double tol = default_tolerance);

/// Residual of prod_i (rhat - k_i I).
VerificationReport check_minimal_poly(const ComplexMatrix &rhat,
                                      std::span<const Complex> roots,
                                      double tol = default_tolerance);

/// Residuals of F(-theta)^-1 F(theta) - evaluate(theta) for one scheme.
VerificationReport check_factorization(const SpectralBraid &braid,
                                       FactorScheme scheme,
                                       const std::vector<double> &thetas,
                                       double tol = default_tolerance);

/// Residuals of sum_i k_i(theta) P_i against an explicitly given matrix.
VerificationReport check_reconstruction(const SpectralBraid &braid,
                                        const ComplexMatrix &expected,
                                        double theta,
                                        double tol = default_tolerance);

/// H(theta) = sum_i [g_i(theta)/f_i(theta)] P_i relating two braids on the
/// same projector basis; asserts primed(theta) = H(-theta)^-1 reference(theta)
/// H(theta) within tol and returns H(theta).
ComplexMatrix relate_spectral(const SpectralBraid &primed,
                              const SpectralBraid &reference, double theta,
                              double tol = default_tolerance);

}  // namespace baxterize
