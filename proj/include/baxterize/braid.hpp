#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "baxterize/coefficients.hpp"
#include "baxterize/family.hpp"
#include "baxterize/matrix.hpp"
#include "baxterize/projectors.hpp"

namespace baxterize {

enum class FactorScheme { Plain, SquareRoot, Regularized };

struct FactorPair {
  ComplexMatrix f_minus;  // F(-theta)
  ComplexMatrix f_plus;   // F(theta)
};

struct BraidOptions {
  /// Custom factor for the free coefficient of the S14 family:
  /// v(theta) = s14_factor(theta)/s14_factor(-theta).
  std::function<Complex(double)> s14_factor;
  std::vector<double> s14_poles;
  /// Optional overall multiplier rho applied to every coefficient as the
  /// ratio rho(theta)/rho(-theta); compatible with unitarity and the braid
  /// relation by construction.
  std::function<Complex(double)> overall_factor;
  /// Eight-vertex weight normalization applied at evaluation time.
  Vertex8Normalization v8_norm = Vertex8Normalization::None;
  /// Regulator y for the Regularized factor scheme; defaults to
  /// cosh(shift - theta) with the family's natural shift.
  std::function<double(double)> regulator;
};

/// A projector basis paired with one coefficient per projector; evaluating at
/// theta produces the spectral-parameter braid matrix.
class SpectralBraid {
 public:
  SpectralBraid(ProjectorBasis basis, std::vector<Coefficient> coefficients,
                FamilySpec family, BraidOptions options = {});

  const ProjectorBasis &basis() const { return basis_; }
  const std::vector<Coefficient> &coefficients() const { return coefficients_; }
  const FamilySpec &family() const { return family_; }
  const BraidOptions &options() const { return options_; }

  /// All registered pole locations, merged over coefficients.
  std::vector<double> poles() const;

  /// Throws std::domain_error when theta is within the exclusion radius of a
  /// registered pole.
  void guard(double theta, double radius = pole_exclusion_radius) const;

  /// Sum of k_i(theta) P_i (plus the optional overall factor / eight-vertex
  /// normalization).
  ComplexMatrix evaluate(double theta) const;

  /// Coefficient values k_i(theta), same order as the basis.
  std::vector<Complex> coefficient_values(double theta) const;

  /// Scheme-adjusted factors f_i evaluated at theta (Plain: raw factor;
  /// SquareRoot: f/sqrt(f(theta) f(-theta)); Regularized: f/sqrt(y y~)).
  std::vector<Complex> factor_values(double theta, FactorScheme scheme) const;

 private:
  ProjectorBasis basis_;
  std::vector<Coefficient> coefficients_;
  FamilySpec family_;
  BraidOptions options_;
};

/// Builds the braid for the requested family; throws std::invalid_argument
/// for families without attached solutions (the nested sequence).
SpectralBraid make_braid(const FamilySpec &spec, BraidOptions options = {});

/// F(theta) = sum_i f_i(theta) P_i with the requested scheme and its mirror
/// F(-theta); contract: F(-theta)^-1 F(theta) reproduces evaluate(theta).
FactorPair factor(const SpectralBraid &braid, double theta, FactorScheme scheme);

/// Closed-form limit of the braid matrix as theta -> sign * infinity,
/// assembled from the family's projectors (never by large-theta evaluation).
/// The eight-vertex limit is the normalized one.
ComplexMatrix limit_matrix(const FamilySpec &spec, int sign);

}  // namespace baxterize
