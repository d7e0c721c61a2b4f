#include "baxterize/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace baxterize {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matrix dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
  if (dim == 0 || dim > max_matrix_dim)
    throw std::invalid_argument("matrix dimension out of range: " +
                                std::to_string(dim));
}

ComplexMatrix::ComplexMatrix(std::size_t dim,
                             std::initializer_list<Complex> entries)
    : ComplexMatrix(dim) {
  if (entries.size() != dim * dim)
    throw std::invalid_argument("entry count does not match dimension");
  std::copy(entries.begin(), entries.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
  require_same_dim(*this, other);
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + other.a_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
  require_same_dim(*this, other);
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - other.a_[k];
  return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
  require_same_dim(*this, other);
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex aik = a_[i * dim_ + k];
      if (aik == Complex{}) continue;
      const Complex *brow = &other.a_[k * dim_];
      Complex *orow = &out.a_[i * dim_];
      for (std::size_t j = 0; j < dim_; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = scalar * a_[k];
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
  return t;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate_transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const Complex &v : a_) m = std::max(m, std::abs(v));
  return m;
}

ComplexMatrix ComplexMatrix::inverse(double pivot_tol) const {
  const std::size_t n = dim_;
  ComplexMatrix work(*this);
  ComplexMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(work(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (double v = std::abs(work(r, col)); v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < pivot_tol)
      throw std::domain_error("matrix numerically singular (pivot " +
                              std::to_string(best) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Complex d = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix &other, double tol) const {
  if (dim_ != other.dim_) return false;
  return (*this - other).max_norm() < tol;
}

bool ComplexMatrix::finite() const {
  for (const Complex &v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("unit_matrix index out of range");
  ComplexMatrix m(n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t na = a.dim(), nb = b.dim();
  if (na * nb > max_matrix_dim)
    throw std::invalid_argument("kron result exceeds dimension cap");
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix permutation_matrix(std::size_t n) {
  ComplexMatrix p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i * n + j, j * n + i) = 1.0;
  return p;
}

std::vector<ComplexMatrix> spectral_projectors(const ComplexMatrix &rhat,
                                               std::span<const Complex> eigenvalues,
                                               double tol) {
  const std::size_t n = rhat.dim();
  const std::size_t p = eigenvalues.size();
  if (p == 0) throw std::invalid_argument("no eigenvalues supplied");
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (std::abs(eigenvalues[i] - eigenvalues[j]) < tol)
        throw std::invalid_argument("repeated eigenvalues in spectral set");

  ComplexMatrix minimal = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < p; ++i)
    minimal = minimal * (rhat - eigenvalues[i] * ComplexMatrix::identity(n));
  if (minimal.max_norm() >= tol)
    throw std::invalid_argument("minimal polynomial residual " +
                                std::to_string(minimal.max_norm()) +
                                " exceeds tolerance");

  std::vector<ComplexMatrix> out;
  out.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    ComplexMatrix pi = ComplexMatrix::identity(n);
    for (std::size_t j = 0; j < p; ++j) {
      if (j == i) continue;
      pi = pi * (rhat - eigenvalues[j] * ComplexMatrix::identity(n));
      pi = pi * (1.0 / (eigenvalues[i] - eigenvalues[j]));
    }
    out.push_back(std::move(pi));
  }
  return out;
}

}  // namespace baxterize
