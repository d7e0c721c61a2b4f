#pragma once

#include <functional>
#include <string>
#include <vector>

#include "baxterize/matrix.hpp"

namespace baxterize {

/// Radius around a registered real pole inside which evaluation refuses to
/// produce a value (the pole is excluded from the domain by definition).
inline constexpr double pole_exclusion_radius = 1e-6;

/// One factor of f(theta):
///   Sinh: sinh(shift - scale*theta)
///   Cosh: cosh(shift - scale*theta)
///   Exp:  exp(scale*theta)
struct RatioTerm {
  enum class Kind { Sinh, Cosh, Exp };
  Kind kind = Kind::Sinh;
  double shift = 0.0;
  double scale = 1.0;
};

/// Coefficient of one projector in a spectral decomposition, always of the
/// canonical ratio form k(theta) = f(theta)/f(-theta), so k(0) = 1 wherever
/// the representation is regular at 0.
///
/// `factor` evaluates f itself (used by the factorization schemes); `value`
/// evaluates the ratio, via a numerically stable route where one exists.
class Coefficient {
 public:
  static Coefficient one();
  /// f(theta) = product of the given terms.
  static Coefficient ratio(std::vector<RatioTerm> terms);
  /// Shorthand: k = sinh(shift - scale*theta)/sinh(shift + scale*theta).
  static Coefficient sinh_ratio(double shift, double scale = 1.0);
  /// Shorthand: k = cosh(shift - scale*theta)/cosh(shift + scale*theta).
  static Coefficient cosh_ratio(double shift, double scale = 1.0);
  /// Eight-vertex coefficient: pair 1 carries the corner pair (a +/- d),
  /// pair 2 the center pair (c +/- b); sign selects +/-.  Products truncated
  /// at `truncation` factors.
  static Coefficient eight_vertex(int pair, int sign, double p, double q,
                                  int truncation);
  /// The two conjugate square-root coefficients of the S03 family.
  static Coefficient s03(int sign);
  /// User-supplied factor f with its declared real poles (zeros of f(-theta)
  /// and real singularities of f(theta)).
  static Coefficient free_function(std::string tag,
                                   std::function<Complex(double)> f,
                                   std::vector<double> poles);

  /// Multiplies this coefficient's factor by `other`'s (poles merged).
  Coefficient times(const Coefficient &other) const;

  /// f(theta).
  Complex factor(double theta) const;
  /// k(theta) = f(theta)/f(-theta).
  Complex value(double theta) const;

  const std::vector<double> &poles() const { return poles_; }

  /// Throws std::domain_error when theta sits within `radius` of a pole.
  void guard(double theta, double radius = pole_exclusion_radius) const;

  const std::string &tag() const { return tag_; }

 private:
  enum class Kind { One, RatioProduct, EightVertex, S03Root, Free };
  Kind kind_ = Kind::One;
  std::string tag_ = "1";
  std::vector<RatioTerm> terms_;
  // eight-vertex parameters
  int pair_ = 1;
  int sign_ = +1;
  double p_ = 0.0;
  double q_ = 1.0;
  int truncation_ = 0;
  int s03_sign_ = +1;
  std::function<Complex(double)> free_;
  std::vector<double> poles_;
};

/// Truncated q-Pochhammer product (x; a) with `truncation` factors.
Complex q_pochhammer(Complex x, double a, int truncation);

/// The four eight-vertex weights (a, b, c, d) at spectral point z, from the
/// truncated product representation of the two coefficient pairs.
struct Vertex8Weights {
  Complex a, b, c, d;
};

Vertex8Weights vertex8_coefficients(double p, double q, double z,
                                    int truncation);

enum class Vertex8Normalization { None, TopLeftUnit, ProductFactor };

/// TopLeftUnit divides all four weights by a; ProductFactor multiplies by the
/// truncated symmetric product ratio in q^2 z.  Both preserve the unitarity
/// of the weight ratios.
Vertex8Weights normalize_vertex8(const Vertex8Weights &w,
                                 Vertex8Normalization mode, double q, double z,
                                 int truncation);

}  // namespace baxterize
