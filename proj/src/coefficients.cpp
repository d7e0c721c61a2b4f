#include "baxterize/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace baxterize {

namespace {

Complex term_value(const RatioTerm &t, double theta) {
  switch (t.kind) {
    case RatioTerm::Kind::Sinh: return std::sinh(Complex(t.shift - t.scale * theta));
    case RatioTerm::Kind::Cosh: return std::cosh(Complex(t.shift - t.scale * theta));
    case RatioTerm::Kind::Exp: return std::exp(Complex(t.scale * theta));
  }
  return {};
}

// Real zeros of f(-theta) for one term; only sinh factors contribute.
void collect_term_poles(const RatioTerm &t, std::vector<double> &out) {
  if (t.kind == RatioTerm::Kind::Sinh && t.scale != 0.0)
    out.push_back(-t.shift / t.scale);
}

Complex s03_factor(int sign, double theta) {
  const Complex f =
      2.0 * std::cosh(theta) + Complex(0.0, 2.0 * sign) * std::sinh(theta);
  return std::sqrt(f);
}

}  // namespace

Coefficient Coefficient::one() { return Coefficient{}; }

Coefficient Coefficient::ratio(std::vector<RatioTerm> terms) {
  Coefficient c;
  c.kind_ = Kind::RatioProduct;
  c.tag_ = "ratio";
  c.terms_ = std::move(terms);
  for (const RatioTerm &t : c.terms_) collect_term_poles(t, c.poles_);
  return c;
}

Coefficient Coefficient::sinh_ratio(double shift, double scale) {
  Coefficient c = ratio({RatioTerm{RatioTerm::Kind::Sinh, shift, scale}});
  c.tag_ = "sinh-ratio";
  return c;
}

Coefficient Coefficient::cosh_ratio(double shift, double scale) {
  Coefficient c = ratio({RatioTerm{RatioTerm::Kind::Cosh, shift, scale}});
  c.tag_ = "cosh-ratio";
  return c;
}

Coefficient Coefficient::eight_vertex(int pair, int sign, double p, double q,
                                      int truncation) {
  if (pair != 1 && pair != 2)
    throw std::invalid_argument("eight-vertex coefficient pair must be 1 or 2");
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("eight-vertex coefficient sign must be +-1");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("eight-vertex nome must satisfy 0 < p < 1");
  if (truncation < 1)
    throw std::invalid_argument("eight-vertex truncation must be >= 1");
  Coefficient c;
  c.kind_ = Kind::EightVertex;
  c.tag_ = std::string("8v-") + (pair == 1 ? "corner" : "center") +
           (sign > 0 ? "+" : "-");
  c.pair_ = pair;
  c.sign_ = sign;
  c.p_ = p;
  c.q_ = q;
  c.truncation_ = truncation;
  // Real poles exist only for the minus-sign members: the product factors
  // 1 - p^(n+e) q^{+-1} z^{+-1} vanish at z = q^{+-1} p^{-+(n+e)}, and for the
  // center pair the ratio denominator vanishes at z = 1/q.
  const double h = std::log(q);
  const double L = -std::log(p);
  const double e = (pair == 1) ? 0.5 : 1.0;
  if (sign < 0) {
    if (pair == 2) c.poles_.push_back(-h);
    for (int n = 0; n < truncation; ++n) {
      c.poles_.push_back(-h + (n + e) * L);
      c.poles_.push_back(-h - (n + e) * L);
    }
  }
  return c;
}

Coefficient Coefficient::s03(int sign) {
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("s03 coefficient sign must be +-1");
  Coefficient c;
  c.kind_ = Kind::S03Root;
  c.tag_ = sign > 0 ? "s03+" : "s03-";
  c.s03_sign_ = sign;
  return c;
}

Coefficient Coefficient::free_function(std::string tag,
                                       std::function<Complex(double)> f,
                                       std::vector<double> poles) {
  Coefficient c;
  c.kind_ = Kind::Free;
  c.tag_ = std::move(tag);
  c.free_ = std::move(f);
  c.poles_ = std::move(poles);
  return c;
}

Coefficient Coefficient::times(const Coefficient &other) const {
  const bool lhs_prod = kind_ == Kind::One || kind_ == Kind::RatioProduct;
  const bool rhs_prod =
      other.kind_ == Kind::One || other.kind_ == Kind::RatioProduct;
  if (lhs_prod && rhs_prod) {
    std::vector<RatioTerm> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    Coefficient c = ratio(std::move(terms));
    c.tag_ = tag_ + "*" + other.tag_;
    return c;
  }
  Coefficient lhs = *this, rhs = other;
  Coefficient c = free_function(
      tag_ + "*" + other.tag_,
      [lhs, rhs](double theta) { return lhs.factor(theta) * rhs.factor(theta); },
      {});
  c.poles_ = poles_;
  c.poles_.insert(c.poles_.end(), other.poles_.begin(), other.poles_.end());
  return c;
}

Complex Coefficient::factor(double theta) const {
  switch (kind_) {
    case Kind::One:
      return 1.0;
    case Kind::RatioProduct: {
      Complex f = 1.0;
      for (const RatioTerm &t : terms_) f *= term_value(t, theta);
      return f;
    }
    case Kind::S03Root:
      return s03_factor(s03_sign_, theta);
    case Kind::Free:
      return free_(theta);
    case Kind::EightVertex: {
      const double z = std::exp(theta);
      const double s = static_cast<double>(sign_);
      const double e = (pair_ == 1) ? 0.5 : 1.0;
      Complex num = 1.0, den = 1.0;
      double t = std::pow(p_, e);
      for (int n = 0; n < truncation_; ++n) {
        num *= 1.0 + s * t * z / q_;
        den *= 1.0 + s * t * z * q_;
        t *= p_;
      }
      Complex f = num / den;
      if (pair_ == 2) {
        const double sz = std::sqrt(z), sq = std::sqrt(q_);
        f *= sq / sz + s * sz / sq;
      }
      return f;
    }
  }
  return {};
}

Complex Coefficient::value(double theta) const {
  switch (kind_) {
    case Kind::One:
      return 1.0;
    case Kind::RatioProduct:
    case Kind::S03Root:
    case Kind::Free:
      return factor(theta) / factor(-theta);
    case Kind::EightVertex: {
      // Evaluate factor ratios per product index so large |theta| stays
      // representable.
      if (std::abs(theta) > 300.0)
        throw std::domain_error("eight-vertex spectral point out of range");
      const double z = std::exp(theta);
      const double s = static_cast<double>(sign_);
      const double e = (pair_ == 1) ? 0.5 : 1.0;
      Complex k = 1.0;
      double t = std::pow(p_, e);
      for (int n = 0; n < truncation_; ++n) {
        const Complex num = (1.0 + s * t * z / q_) * (1.0 + s * t * q_ / z);
        const Complex den = (1.0 + s * t / (q_ * z)) * (1.0 + s * t * q_ * z);
        if (std::abs(den) < 1e-300)
          throw std::domain_error("vanishing truncated product factor");
        k *= num / den;
        t *= p_;
      }
      if (pair_ == 2) {
        const double sz = std::sqrt(z), sq = std::sqrt(q_);
        const Complex den = sq * sz + s / (sq * sz);
        if (std::abs(den) < 1e-300)
          throw std::domain_error("vanishing eight-vertex ratio denominator");
        k *= (sq / sz + s * sz / sq) / den;
      }
      return k;
    }
  }
  return {};
}

void Coefficient::guard(double theta, double radius) const {
  for (double p : poles_)
    if (std::abs(theta - p) < radius)
      throw std::domain_error("spectral point within pole exclusion zone (pole at " +
                              std::to_string(p) + ")");
}

Complex q_pochhammer(Complex x, double a, int truncation) {
  Complex r = 1.0;
  Complex xa = x;
  for (int n = 0; n < truncation; ++n) {
    r *= 1.0 - xa;
    xa *= a;
  }
  return r;
}

Vertex8Weights vertex8_coefficients(double p, double q, double z,
                                    int truncation) {
  if (z <= 0.0) throw std::invalid_argument("spectral point z must be positive");
  const double theta = std::log(z);
  const Complex apd = Coefficient::eight_vertex(1, +1, p, q, truncation).value(theta);
  const Complex amd = Coefficient::eight_vertex(1, -1, p, q, truncation).value(theta);
  const Complex cpb = Coefficient::eight_vertex(2, +1, p, q, truncation).value(theta);
  const Complex cmb = Coefficient::eight_vertex(2, -1, p, q, truncation).value(theta);
  return Vertex8Weights{(apd + amd) / 2.0, (cpb - cmb) / 2.0, (cpb + cmb) / 2.0,
                        (apd - amd) / 2.0};
}

Vertex8Weights normalize_vertex8(const Vertex8Weights &w,
                                 Vertex8Normalization mode, double q, double z,
                                 int truncation) {
  switch (mode) {
    case Vertex8Normalization::None:
      return w;
    case Vertex8Normalization::TopLeftUnit: {
      if (std::abs(w.a) < 1e-300)
        throw std::domain_error("cannot normalize: top-left weight vanishes");
      const Complex inv = 1.0 / w.a;
      return Vertex8Weights{w.a * inv, w.b * inv, w.c * inv, w.d * inv};
    }
    case Vertex8Normalization::ProductFactor: {
      const Complex den = 1.0 - q * q / z;
      if (std::abs(den) < 1e-300)
        throw std::domain_error("product-factor normalizer singular at this z");
      Complex r = 1.0;
      const Complex ratio = (1.0 - q * q * z) / den;
      for (int n = 0; n < truncation; ++n) r *= ratio;
      return Vertex8Weights{w.a * r, w.b * r, w.c * r, w.d * r};
    }
  }
  return w;
}

}  // namespace baxterize
