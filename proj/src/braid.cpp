#include "baxterize/braid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace baxterize {

namespace {

// Natural shift for the default regulator of the Regularized scheme.
double family_shift(const FamilySpec &spec) {
  switch (spec.family) {
    case Family::GLq:
    case Family::StandardSO:
    case Family::StandardSp:
    case Family::AffineSl2:
    case Family::S14:
    case Family::Vertex8:
      return std::log(spec.q);
    case Family::ExoticSO:
    case Family::ExoticSp:
      return eta(spec.n, spec.family == Family::ExoticSO ? +1 : -1, spec.q);
    case Family::Vertex6:
      return 0.5 * spec.gamma;
    default:
      return 1.0;
  }
}

Coefficient s14_plus_coefficient(const BraidOptions &options, double q) {
  if (options.s14_factor) {
    return Coefficient::free_function("s14-v", options.s14_factor,
                                      options.s14_poles);
  }
  // Default v(theta) = f(theta)/f(-theta) with f(theta) = 1 + q e^theta,
  // rewritten as exp(theta/2) cosh((h + theta)/2) up to a theta-independent
  // scale.
  const double h = std::log(q);
  return Coefficient::ratio({RatioTerm{RatioTerm::Kind::Exp, 0.0, 0.5},
                             RatioTerm{RatioTerm::Kind::Cosh, 0.5 * h, -0.5}});
}

}  // namespace

SpectralBraid::SpectralBraid(ProjectorBasis basis,
                             std::vector<Coefficient> coefficients,
                             FamilySpec family, BraidOptions options)
    : basis_(std::move(basis)),
      coefficients_(std::move(coefficients)),
      family_(family),
      options_(std::move(options)) {
  if (coefficients_.size() != basis_.size())
    throw std::invalid_argument(
        "coefficient count does not match projector count");
}

std::vector<double> SpectralBraid::poles() const {
  std::vector<double> out;
  for (const Coefficient &c : coefficients_)
    out.insert(out.end(), c.poles().begin(), c.poles().end());
  return out;
}

void SpectralBraid::guard(double theta, double radius) const {
  for (const Coefficient &c : coefficients_) c.guard(theta, radius);
}

std::vector<Complex> SpectralBraid::coefficient_values(double theta) const {
  guard(theta);
  std::vector<Complex> ks;
  ks.reserve(coefficients_.size());
  Complex overall{1.0};
  if (options_.overall_factor)
    overall = options_.overall_factor(theta) / options_.overall_factor(-theta);
  if (family_.family == Family::Vertex8 &&
      options_.v8_norm != Vertex8Normalization::None) {
    Vertex8Weights w =
        vertex8_coefficients(family_.p, family_.q, std::exp(theta), family_.truncation);
    Vertex8Weights nw = normalize_vertex8(w, options_.v8_norm, family_.q,
                                          std::exp(theta), family_.truncation);
    return {overall * (nw.a + nw.d), overall * (nw.a - nw.d),
            overall * (nw.c + nw.b), overall * (nw.c - nw.b)};
  }
  for (const Coefficient &c : coefficients_) ks.push_back(overall * c.value(theta));
  return ks;
}

ComplexMatrix SpectralBraid::evaluate(double theta) const {
  const std::vector<Complex> ks = coefficient_values(theta);
  ComplexMatrix out(basis_.matrix_dim);
  for (std::size_t i = 0; i < ks.size(); ++i)
    out += ks[i] * basis_.projectors[i];
  return out;
}

std::vector<Complex> SpectralBraid::factor_values(double theta,
                                                  FactorScheme scheme) const {
  guard(theta);
  guard(-theta);
  std::vector<Complex> fs;
  fs.reserve(coefficients_.size());
  for (const Coefficient &c : coefficients_) {
    const Complex f = c.factor(theta);
    switch (scheme) {
      case FactorScheme::Plain:
        fs.push_back(f);
        break;
      case FactorScheme::SquareRoot: {
        // Branch tied to the factor itself: f/sqrt(f(theta) f(-theta)) keeps
        // F'(-theta) = F'(theta)^-1 exact even where the ratio is negative.
        const Complex even = f * c.factor(-theta);
        fs.push_back(f / std::sqrt(even));
        break;
      }
      case FactorScheme::Regularized: {
        double yy;
        if (options_.regulator) {
          yy = options_.regulator(theta) * options_.regulator(-theta);
        } else {
          const double s = family_shift(family_);
          yy = std::cosh(s - theta) * std::cosh(s + theta);
        }
        if (!(yy > 0.0))
          throw std::domain_error(
              "regulator product y(theta) y(-theta) not positive");
        fs.push_back(f / std::sqrt(yy));
        break;
      }
    }
  }
  return fs;
}

SpectralBraid make_braid(const FamilySpec &spec, BraidOptions options) {
  spec.validate();
  const double h = std::log(spec.q);
  switch (spec.family) {
    case Family::GLq: {
      auto [rhat, basis] = gl_standard(spec.n, spec.q);
      return SpectralBraid(std::move(basis),
                           {Coefficient::sinh_ratio(h), Coefficient::one()},
                           spec, std::move(options));
    }
    case Family::StandardSO:
    case Family::StandardSp: {
      const int eps = spec.family == Family::StandardSO ? +1 : -1;
      ProjectorBasis basis = standard_so_sp_basis(spec.n, eps, spec.q);
      const double nn = static_cast<double>(spec.n);
      Coefficient w = Coefficient::one();
      if (eps == +1) {
        w = (spec.variant == CoefficientVariant::A)
                ? Coefficient::cosh_ratio(0.5 * nn * h)
                : Coefficient::ratio(
                      {RatioTerm{RatioTerm::Kind::Sinh, (0.5 * nn - 1.0) * h, 1.0},
                       RatioTerm{RatioTerm::Kind::Sinh, h, 1.0}});
      } else {
        const double half = 0.5 * nn;
        w = (spec.variant == CoefficientVariant::A)
                ? Coefficient::sinh_ratio((half + 1.0) * h)
                : Coefficient::ratio(
                      {RatioTerm{RatioTerm::Kind::Cosh, half * h, 1.0},
                       RatioTerm{RatioTerm::Kind::Sinh, h, 1.0}});
      }
      return SpectralBraid(std::move(basis),
                           {std::move(w), Coefficient::sinh_ratio(h),
                            Coefficient::one()},
                           spec, std::move(options));
    }
    case Family::ExoticSO:
    case Family::ExoticSp: {
      const int eps = spec.family == Family::ExoticSO ? +1 : -1;
      ProjectorBasis basis = exotic_basis(spec.n, eps, spec.q);
      const double et = eta(spec.n, eps, spec.q);
      return SpectralBraid(std::move(basis),
                           {Coefficient::sinh_ratio(et), Coefficient::one()},
                           spec, std::move(options));
    }
    case Family::S03: {
      auto [rhat, basis] = s03_basis();
      return SpectralBraid(std::move(basis),
                           {Coefficient::s03(+1), Coefficient::s03(-1)}, spec,
                           std::move(options));
    }
    case Family::S14: {
      auto [rhat, basis] = s14_basis(spec.q);
      Coefficient v = s14_plus_coefficient(options, spec.q);
      // -v is again of ratio form: multiply the factor by sinh(theta), which
      // flips sign under theta -> -theta (and registers the pole at 0).
      Coefficient minus_v =
          Coefficient::ratio({RatioTerm{RatioTerm::Kind::Sinh, 0.0, -1.0}})
              .times(v);
      return SpectralBraid(std::move(basis),
                           {Coefficient::one(), std::move(v), std::move(minus_v)},
                           spec, std::move(options));
    }
    case Family::AffineSl2: {
      ProjectorBasis basis = affine_basis(spec.q);
      return SpectralBraid(std::move(basis),
                           {Coefficient::one(), Coefficient::one(),
                            Coefficient::sinh_ratio(h, 0.5)},
                           spec, std::move(options));
    }
    case Family::Vertex6: {
      ProjectorBasis basis = six_vertex_basis();
      return SpectralBraid(std::move(basis),
                           {Coefficient::one(),
                            Coefficient::cosh_ratio(0.5 * spec.gamma, 0.5),
                            Coefficient::sinh_ratio(0.5 * spec.gamma, 0.5)},
                           spec, std::move(options));
    }
    case Family::Vertex8: {
      ProjectorBasis basis = vertex_basis();
      std::vector<Coefficient> ks;
      ks.push_back(Coefficient::eight_vertex(1, +1, spec.p, spec.q, spec.truncation));
      ks.push_back(Coefficient::eight_vertex(1, -1, spec.p, spec.q, spec.truncation));
      ks.push_back(Coefficient::eight_vertex(2, +1, spec.p, spec.q, spec.truncation));
      ks.push_back(Coefficient::eight_vertex(2, -1, spec.p, spec.q, spec.truncation));
      return SpectralBraid(std::move(basis), std::move(ks), spec, std::move(options));
    }
    case Family::Nested:
      throw std::invalid_argument(
          "no braid solutions are attached to the nested basis; construct a "
          "SpectralBraid with candidate coefficients directly");
  }
  throw std::invalid_argument("unknown family");
}

FactorPair factor(const SpectralBraid &braid, double theta, FactorScheme scheme) {
  const std::vector<Complex> fp = braid.factor_values(theta, scheme);
  const std::vector<Complex> fm = braid.factor_values(-theta, scheme);
  const std::size_t d = braid.basis().matrix_dim;
  ComplexMatrix plus(d), minus(d);
  for (std::size_t i = 0; i < fp.size(); ++i) {
    plus += fp[i] * braid.basis().projectors[i];
    minus += fm[i] * braid.basis().projectors[i];
  }
  return FactorPair{std::move(minus), std::move(plus)};
}

ComplexMatrix limit_matrix(const FamilySpec &spec, int sign) {
  spec.validate();
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("limit sign must be +-1");
  const double q = spec.q;
  const double qs = (sign > 0) ? 1.0 / (q * q) : q * q;  // q^{-+2}
  switch (spec.family) {
    case Family::GLq: {
      auto [rhat, basis] = gl_standard(spec.n, q);
      return basis.projectors[1] - qs * basis.projectors[0];
    }
    case Family::StandardSO: {
      ProjectorBasis b = standard_so_sp_basis(spec.n, +1, q);
      const double w = std::pow(q, sign > 0 ? -double(spec.n) : double(spec.n));
      return b.projectors[2] - qs * b.projectors[1] + w * b.projectors[0];
    }
    case Family::StandardSp: {
      ProjectorBasis b = standard_so_sp_basis(spec.n, -1, q);
      const double w =
          std::pow(q, sign > 0 ? -double(spec.n + 2) : double(spec.n + 2));
      return b.projectors[2] - qs * b.projectors[1] - w * b.projectors[0];
    }
    case Family::ExoticSO:
    case Family::ExoticSp: {
      const int eps = spec.family == Family::ExoticSO ? +1 : -1;
      ProjectorBasis b = exotic_basis(spec.n, eps, q);
      const double d = exotic_d(spec.n, eps, q);
      const double root = std::sqrt(1.0 - 4.0 * d * d);
      const double e2 = (sign > 0) ? (1.0 - root) / (1.0 + root)
                                   : (1.0 + root) / (1.0 - root);
      return b.projectors[1] - e2 * b.projectors[0];
    }
    case Family::S03: {
      auto [rhat, basis] = s03_basis();
      const Complex kp = std::polar(1.0, sign * std::numbers::pi / 4.0);
      return kp * basis.projectors[0] + (1.0 / kp) * basis.projectors[1];
    }
    case Family::AffineSl2: {
      ProjectorBasis b = affine_basis(q);
      return b.projectors[0] + b.projectors[1] - qs * b.projectors[2];
    }
    case Family::Vertex6: {
      ProjectorBasis b = six_vertex_basis();
      const double e = std::exp(-sign * spec.gamma);
      return b.projectors[0] + e * b.projectors[1] - e * b.projectors[2];
    }
    case Family::Vertex8: {
      // Limit of the weights normalized by the top-left element.
      ProjectorBasis b = vertex_basis();
      const double w = std::pow(q, sign > 0 ? -1.0 : 1.0);
      return b.projectors[0] + b.projectors[1] +
             w * (b.projectors[2] - b.projectors[3]);
    }
    case Family::S14:
    case Family::Nested:
      throw std::invalid_argument(
          "no canonical closed-form limit for this family");
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace baxterize
