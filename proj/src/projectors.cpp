#include "baxterize/projectors.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "m_catalog.hpp"

namespace baxterize {

namespace {

constexpr double trace_round_guard = 1e-8;

std::size_t isqrt_exact(std::size_t m) {
  auto r = static_cast<std::size_t>(std::lround(std::sqrt(double(m))));
  return r * r == m ? r : 0;
}

}  // namespace

int ProjectorBasis::index_of(const std::string &label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

void ProjectorBasis::validate(double tol) const {
  if (projectors.empty()) throw std::runtime_error("empty projector basis");
  ComplexMatrix sum(matrix_dim);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const ComplexMatrix &p = projectors[i];
    if (p.dim() != matrix_dim)
      throw std::runtime_error("projector dimension mismatch");
    if (!p.finite()) throw std::runtime_error("projector has non-finite entries");
    if ((p * p - p).max_norm() >= tol)
      throw std::runtime_error("projector '" + labels[i] + "' not idempotent");
    for (std::size_t j = 0; j < projectors.size(); ++j) {
      if (i == j) continue;
      if ((p * projectors[j]).max_norm() >= tol)
        throw std::runtime_error("projectors '" + labels[i] + "' and '" +
                                 labels[j] + "' not orthogonal");
    }
    sum += p;
    const Complex tr = p.trace();
    if (std::abs(tr.imag()) > trace_round_guard ||
        std::abs(tr.real() - traces[i]) > trace_round_guard)
      throw std::runtime_error("projector trace of '" + labels[i] +
                               "' does not round to its integer");
  }
  if (!sum.approx_equal(ComplexMatrix::identity(matrix_dim), tol))
    throw std::runtime_error("projectors do not sum to the identity");
}

ComplexMatrix ProjectorBasis::sum_of(const std::vector<std::string> &which) const {
  ComplexMatrix out(matrix_dim);
  for (const std::string &label : which) {
    const int idx = index_of(label);
    if (idx < 0) throw std::invalid_argument("no projector labeled " + label);
    out += projectors[idx];
  }
  return out;
}

ProjectorBasis make_basis(std::size_t matrix_dim, std::size_t base_dim,
                          std::vector<ComplexMatrix> projectors,
                          std::vector<std::string> labels) {
  ProjectorBasis b;
  b.matrix_dim = matrix_dim;
  b.base_dim = base_dim;
  b.projectors = std::move(projectors);
  b.labels = std::move(labels);
  for (const ComplexMatrix &p : b.projectors)
    b.traces.push_back(static_cast<int>(std::lround(p.trace().real())));
  return b;
}

BraidMatrixBasis gl_standard(std::size_t n, double q) {
  FamilySpec spec;
  spec.family = Family::GLq;
  spec.n = n;
  spec.q = q;
  spec.validate();

  const std::size_t d = n * n;
  ComplexMatrix r(d);
  for (std::size_t i = 1; i <= n; ++i)
    r += kron(unit_matrix(n, i, i), unit_matrix(n, i, i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j)
        r += (1.0 / q) * kron(unit_matrix(n, i, i), unit_matrix(n, j, j));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      r += (1.0 - 1.0 / (q * q)) * kron(unit_matrix(n, i, j), unit_matrix(n, j, i));

  const ComplexMatrix rhat = permutation_matrix(n) * r;
  const Complex evals[] = {Complex{1.0}, Complex{-1.0 / (q * q)}};
  auto ps = spectral_projectors(rhat, evals);
  ProjectorBasis basis =
      make_basis(d, n, {ps[1], ps[0]}, {"P-", "P+"});  // minus block on top
  basis.validate();
  return BraidMatrixBasis{rhat, std::move(basis)};
}

ProjectorBasis standard_so_sp_basis(std::size_t n, int eps, double q) {
  ComplexMatrix m(1);
  if (eps == +1 && n == 3)
    m = detail::m_so3(q);
  else if (eps == +1 && n == 4)
    m = detail::m_so4(q);
  else if (eps == -1 && n == 4)
    m = detail::m_sp4(q);
  else
    throw std::invalid_argument(
        "standard three-projector basis cataloged only for N=3,4 orthogonal "
        "and N=4 symplectic");
  if (!(q > 0.0) || std::abs(q - 1.0) < 1e-12)
    throw std::invalid_argument("standard basis requires q > 0, q != 1");

  const std::size_t d = n * n;
  // Trace pattern: Tr P0 = 1, 2 Tr P(+-) = N(N +- 1) -+ (eps +- 1).
  const std::size_t trm = (n * (n - 1) + (eps - 1)) / 2;
  const ComplexMatrix minv = detail::orthogonal_row_inverse(m);

  auto diag_pattern = [&](std::size_t first, std::size_t count) {
    ComplexMatrix dmat(d);
    for (std::size_t k = first; k < first + count; ++k) dmat(k, k) = 1.0;
    return dmat;
  };
  const ComplexMatrix p0 = minv * diag_pattern(0, 1) * m;
  const ComplexMatrix pm = minv * diag_pattern(1, trm) * m;
  const ComplexMatrix pp = minv * diag_pattern(1 + trm, d - 1 - trm) * m;

  ProjectorBasis basis = make_basis(d, n, {p0, pm, pp}, {"P0", "P-", "P+"});
  basis.validate();
  return basis;
}

double exotic_d(std::size_t n, int eps, double q) {
  const double x = static_cast<double>(n) - eps;
  const double qn = (std::abs(q - 1.0) < 1e-14)
                        ? x
                        : (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
  return 1.0 / (1.0 + eps * qn);
}

double eta(std::size_t n, int eps, double q) {
  if (!((eps == +1 && n >= 3) || (eps == -1 && n >= 4 && n % 2 == 0)))
    throw std::invalid_argument("eta: unsupported (N, eps) combination");
  if (!(q > 0.0)) throw std::invalid_argument("eta requires q > 0");
  const double d = exotic_d(n, eps, q);
  const double t2 = 1.0 - 4.0 * d * d;
  if (t2 <= 0.0)
    throw std::domain_error("eta not real: 4 d^2 >= 1 for these parameters");
  return std::atanh(std::sqrt(t2));
}

ProjectorBasis exotic_basis(std::size_t n, int eps, double q) {
  if (!((eps == +1 && n >= 3) || (eps == -1 && n >= 4 && n % 2 == 0)))
    throw std::invalid_argument("exotic basis: unsupported (N, eps) combination");
  if (!(q > 0.0)) throw std::invalid_argument("exotic basis requires q > 0");

  // Singlet weights v_i = eps_i q^{-rho_i}: rho descends through half-integers
  // (odd N) or integers with a double zero (even orthogonal) or skips zero
  // (symplectic); the symplectic second half carries minus signs.
  std::vector<double> rho(n, 0.0), sign(n, 1.0);
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const double top = (eps == +1) ? (0.5 * n - 1.0 - i) : (0.5 * n - i);
    rho[i] = top;
    rho[n - 1 - i] = -top;
    if (eps == -1) sign[n - 1 - i] = -1.0;
  }

  const std::size_t d = n * n;
  std::vector<Complex> v(n);
  Complex vv{};
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = sign[i] * std::pow(q, -rho[i]);
    vv += v[i] * v[i];
  }
  ComplexMatrix p0(d);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const Complex g = v[i - 1] * v[j - 1] / vv;
      p0 += g * kron(unit_matrix(n, i, j), unit_matrix(n, n + 1 - i, n + 1 - j));
    }
  const ComplexMatrix p1 = ComplexMatrix::identity(d) - p0;

  ProjectorBasis basis = make_basis(d, n, {p0, p1}, {"P0", "P1"});
  basis.validate();
  return basis;
}

BraidMatrixBasis s03_basis() {
  ComplexMatrix rhat(4, {1, 0, 0, 1,    //
                         0, 1, -1, 0,   //
                         0, 1, 1, 0,    //
                         -1, 0, 0, 1});
  const ComplexMatrix id = ComplexMatrix::identity(4);
  const Complex i{0.0, 1.0};
  const ComplexMatrix pp = 0.5 * (id + i * (rhat - id));
  const ComplexMatrix pm = 0.5 * (id - i * (rhat - id));
  ProjectorBasis basis = make_basis(4, 2, {pp, pm}, {"P+", "P-"});
  basis.validate();
  return BraidMatrixBasis{std::move(rhat), std::move(basis)};
}

BraidMatrixBasis s14_basis(double q) {
  if (std::abs(q) < 1e-300) throw std::invalid_argument("s14 requires q != 0");
  ComplexMatrix rhat(4, {0, 0, 0, q,   //
                         0, 1, 0, 0,   //
                         0, 0, 1, 0,   //
                         q, 0, 0, 0});
  ComplexMatrix p0(4), pp(4), pm(4);
  p0(1, 1) = p0(2, 2) = 1.0;
  pp(0, 0) = pp(3, 3) = pp(0, 3) = pp(3, 0) = 0.5;
  pm(0, 0) = pm(3, 3) = 0.5;
  pm(0, 3) = pm(3, 0) = -0.5;
  ProjectorBasis basis = make_basis(4, 2, {p0, pp, pm}, {"P0", "P+", "P-"});
  basis.validate();
  return BraidMatrixBasis{std::move(rhat), std::move(basis)};
}

ProjectorBasis affine_basis(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("affine basis requires q > 0");
  ComplexMatrix p0(4), pp(4), pm(4);
  p0(0, 0) = p0(3, 3) = 1.0;
  const double s = 1.0 / (q + 1.0 / q);
  pp(1, 1) = s * q;
  pp(1, 2) = pp(2, 1) = s;
  pp(2, 2) = s / q;
  pm(1, 1) = s / q;
  pm(1, 2) = pm(2, 1) = -s;
  pm(2, 2) = s * q;
  ProjectorBasis basis = make_basis(4, 2, {p0, pp, pm}, {"P0", "P+", "P-"});
  basis.validate();
  return basis;
}

ProjectorBasis vertex_basis() {
  ProjectorBasis nested = nested_basis(4);
  nested.base_dim = 2;
  return nested;
}

ProjectorBasis six_vertex_basis() {
  ProjectorBasis v = vertex_basis();
  ProjectorBasis basis =
      make_basis(4, 2, {v.projectors[0] + v.projectors[1], v.projectors[2], v.projectors[3]},
                 {"P0", "P+", "P-"});
  basis.validate();
  return basis;
}

ProjectorBasis nested_basis(std::size_t n) {
  if (n < 2) throw std::invalid_argument("nested basis requires n >= 2");
  const std::size_t l = n / 2;
  std::vector<ComplexMatrix> ps;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= l; ++i) {
    const std::size_t ip = n + 1 - i;
    const ComplexMatrix base = unit_matrix(n, i, i) + unit_matrix(n, ip, ip);
    const ComplexMatrix cross = unit_matrix(n, i, ip) + unit_matrix(n, ip, i);
    ps.push_back(0.5 * (base + cross));
    labels.push_back(std::to_string(i) + "(+)");
    ps.push_back(0.5 * (base - cross));
    labels.push_back(std::to_string(i) + "(-)");
  }
  if (n % 2 == 1) {
    ps.push_back(unit_matrix(n, l + 1, l + 1));
    labels.push_back("mid");
  }
  ProjectorBasis basis =
      make_basis(n, isqrt_exact(n), std::move(ps), std::move(labels));
  basis.validate();
  return basis;
}

ProjectorBasis alternative_nested_basis_9() {
  const std::size_t n = 9;
  const std::size_t pairs[4][2] = {{1, 9}, {2, 4}, {3, 7}, {6, 8}};
  std::vector<ComplexMatrix> ps;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t i = pairs[k][0], j = pairs[k][1];
    const ComplexMatrix base = unit_matrix(n, i, i) + unit_matrix(n, j, j);
    const ComplexMatrix cross = unit_matrix(n, i, j) + unit_matrix(n, j, i);
    ps.push_back(0.5 * (base + cross));
    labels.push_back(std::to_string(k + 1) + "(+)");
    ps.push_back(0.5 * (base - cross));
    labels.push_back(std::to_string(k + 1) + "(-)");
  }
  ps.push_back(unit_matrix(n, 5, 5));
  labels.push_back("mid");
  ProjectorBasis basis = make_basis(n, 3, std::move(ps), std::move(labels));
  basis.validate();
  return basis;
}

}  // namespace baxterize
