#include "m_catalog.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace baxterize::detail {

namespace {

struct RowEntry {
  std::size_t col;  // 1-based
  Complex value;
};

ComplexMatrix from_rows(std::size_t dim,
                        const std::vector<std::vector<RowEntry>> &rows) {
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const RowEntry &e : rows[r]) m(r, e.col - 1) = e.value;
  return m;
}

}  // namespace

ComplexMatrix m_gl2(double q) {
  return from_rows(4, {
                          {{2, 1.0}, {3, -1.0 / q}},
                          {{2, 1.0}, {3, q}},
                          {{1, 1.0}},
                          {{4, 1.0}},
                      });
}

ComplexMatrix m_gl3(double q) {
  return from_rows(9, {
                          {{2, 1.0}, {4, -1.0 / q}},
                          {{3, 1.0}, {7, -1.0 / q}},
                          {{6, 1.0}, {8, -1.0 / q}},
                          {{2, 1.0}, {4, q}},
                          {{3, 1.0}, {7, q}},
                          {{6, 1.0}, {8, q}},
                          {{1, 1.0}},
                          {{5, 1.0}},
                          {{9, 1.0}},
                      });
}

ComplexMatrix m_so3(double q) {
  const double s = -std::pow(q, -0.5) * (1.0 - q);
  const double t = -std::pow(q, -1.5) * (1.0 + q);
  return from_rows(9, {
                          {{3, 1.0}, {5, std::sqrt(q)}, {7, q}},
                          {{2, 1.0}, {4, -q}},
                          {{6, 1.0}, {8, -q}},
                          {{3, 1.0}, {5, s}, {7, -1.0}},
                          {{1, 1.0}},
                          {{2, 1.0}, {4, 1.0 / q}},
                          {{3, 1.0}, {5, t}, {7, 1.0 / (q * q)}},
                          {{6, 1.0}, {8, 1.0 / q}},
                          {{9, 1.0}},
                      });
}

ComplexMatrix m_so4(double q) {
  const double qi = 1.0 / q;
  return from_rows(16, {
                           {{4, 1.0}, {7, q}, {10, q}, {13, q * q}},
                           {{4, 1.0}, {7, q}, {10, -qi}, {13, -1.0}},
                           {{2, 1.0}, {5, -q}},
                           {{3, 1.0}, {9, -q}},
                           {{8, 1.0}, {14, -q}},
                           {{12, 1.0}, {15, -q}},
                           {{4, 1.0}, {7, -qi}, {10, q}, {13, -1.0}},
                           {{1, 1.0}},
                           {{2, 1.0}, {5, qi}},
                           {{3, 1.0}, {9, qi}},
                           {{4, 1.0}, {7, -qi}, {10, -qi}, {13, qi * qi}},
                           {{8, 1.0}, {14, qi}},
                           {{12, 1.0}, {15, qi}},
                           {{11, 1.0}},
                           {{6, 1.0}},
                           {{16, 1.0}},
                       });
}

ComplexMatrix m_sp4(double q) {
  const double qi = 1.0 / q;
  return from_rows(16, {
                           {{4, 1.0}, {7, q}, {10, -q * q * q}, {13, -q * q * q * q}},
                           {{4, 1.0}, {7, -qi}, {10, q}, {13, -1.0}},
                           {{2, 1.0}, {5, -q}},
                           {{3, 1.0}, {9, -q}},
                           {{8, 1.0}, {14, -q}},
                           {{12, 1.0}, {15, -q}},
                           {{4, 1.0}, {7, q}, {10, qi * qi * qi}, {13, qi * qi}},
                           {{4, 1.0}, {7, -qi}, {10, -qi}, {13, qi * qi}},
                           {{2, q}, {5, 1.0}},
                           {{3, q}, {9, 1.0}},
                           {{8, q}, {14, 1.0}},
                           {{12, q}, {15, 1.0}},
                           {{1, 1.0}},
                           {{6, 1.0}},
                           {{11, 1.0}},
                           {{16, 1.0}},
                       });
}

ComplexMatrix m_affine(double q) {
  return from_rows(4, {
                          {{1, 1.0}},
                          {{2, q}, {3, 1.0}},
                          {{2, -1.0 / q}, {3, 1.0}},
                          {{4, 1.0}},
                      });
}

ComplexMatrix m_s03() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  ComplexMatrix m(4);
  m(0, 0) = r;
  m(0, 3) = r * i;
  m(1, 1) = r;
  m(1, 2) = -r * i;
  m(2, 1) = -r * i;
  m(2, 2) = r;
  m(3, 0) = r * i;
  m(3, 3) = r;
  return m;
}

ComplexMatrix m_nested(std::size_t n) {
  if (n < 2) throw std::invalid_argument("nested diagonalizer needs n >= 2");
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(n);
  const std::size_t l = n / 2;
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t ip = n - 1 - i;
    m(i, i) = r;
    m(i, ip) = r;
    m(ip, i) = r;
    m(ip, ip) = -r;
  }
  if (n % 2 == 1) m(l, l) = 1.0;
  return m;
}

ComplexMatrix orthogonal_row_inverse(const ComplexMatrix &m, double tol) {
  const std::size_t n = m.dim();
  ComplexMatrix inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex norm{};
    for (std::size_t k = 0; k < n; ++k) norm += m(j, k) * m(j, k);
    if (std::abs(norm) < tol)
      throw std::domain_error(
          "row with vanishing transpose-form norm; use general inversion");
    const Complex c = 1.0 / norm;
    for (std::size_t k = 0; k < n; ++k) inv(k, j) = m(j, k) * c;
  }
  return inv;
}

}  // namespace baxterize::detail
