#include "rrosc/eigensolver.hpp"

#include "rrosc/detail/mpfr_kernels.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace rrosc {

using detail::raw;

std::vector<Real> eigenvalues_symmetric(const SymmetricMatrix& matrix,
                                        const PrecisionContext& ctx,
                                        JacobiOptions options) {
  PrecisionScope scope(ctx);
  const std::size_t n = matrix.dim();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const std::size_t max_sweeps =
      options.max_sweeps == 0 ? 100 * n : options.max_sweeps;

  std::vector<Real> a(n * n, ctx.real(0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpfr_set(raw(a[i * n + j]), raw(matrix(i, j)), MPFR_RNDN);
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Real& { return a[i * n + j]; };

  const Real eps = ctx.working_epsilon();
  Real theta = ctx.real(0L), t = theta, c = theta, s = theta, tau = theta;
  Real g = theta, h = theta, tmp = theta;

  auto max_offdiag = [&]() {
    Real m = ctx.real(0L);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (abs(at(p, q)) > m) m = abs(at(p, q));
    return m;
  };
  auto max_diag = [&]() {
    Real m = ctx.real(0L);
    for (std::size_t p = 0; p < n; ++p)
      if (abs(at(p, p)) > m) m = abs(at(p, p));
    return m;
  };

  std::size_t sweep = 0;
  for (;; ++sweep) {
    const Real diag_scale = max_diag();
    const Real threshold =
        diag_scale > 0 ? Real(eps * diag_scale) : Real(eps);
    const Real off = max_offdiag();
    if (off <= threshold) break;
    if (sweep >= max_sweeps) {
      throw ConvergenceError(
          "Jacobi did not converge after " + std::to_string(sweep) +
              " sweeps; largest off-diagonal " + to_scientific(off, 6),
          static_cast<double>(off), sweep);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real& apq = at(p, q);
        if (abs(apq) <= threshold) continue;
        // theta = (a_qq - a_pp) / (2 a_pq); t = sgn(theta)/(|theta| + sqrt(theta^2 + 1))
        theta = (at(q, q) - at(p, p)) / (2 * apq);
        t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        c = 1 / sqrt(t * t + 1);
        s = t * c;
        tau = s / (1 + c);
        h = t * apq;
        at(p, p) -= h;
        at(q, q) += h;
        detail::set_zero(at(p, q));
        detail::set_zero(at(q, p));
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          mpfr_set(raw(g), raw(at(r, p)), MPFR_RNDN);
          mpfr_set(raw(h), raw(at(r, q)), MPFR_RNDN);
          // a_rp = g - s (h + g tau)
          mpfr_fma(raw(tmp), raw(g), raw(tau), raw(h), MPFR_RNDN);
          mpfr_fms(raw(tmp), raw(s), raw(tmp), raw(g), MPFR_RNDN);
          mpfr_neg(raw(at(r, p)), raw(tmp), MPFR_RNDN);
          mpfr_set(raw(at(p, r)), raw(at(r, p)), MPFR_RNDN);
          // a_rq = h + s (g - h tau)
          mpfr_fms(raw(tmp), raw(h), raw(tau), raw(g), MPFR_RNDN);
          mpfr_neg(raw(tmp), raw(tmp), MPFR_RNDN);
          mpfr_fma(raw(at(r, q)), raw(s), raw(tmp), raw(h), MPFR_RNDN);
          mpfr_set(raw(at(q, r)), raw(at(r, q)), MPFR_RNDN);
        }
      }
    }
  }

  std::vector<Real> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(at(i, i));
  std::sort(values.begin(), values.end());
  return values;
}

namespace {

struct DoubleSeed {
  double value = 0.0;
  std::vector<double> vector;
};

DoubleSeed seed_symmetric(std::vector<double> a, std::size_t n) {
  const auto ni = static_cast<lapack_int>(n);
  lapack_int found = 0;
  std::vector<double> w(n), z(n);
  std::vector<lapack_int> support(2);
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'U', ni, a.data(), ni, 0.0,
                     0.0, 1, 1, 0.0, &found, w.data(), z.data(), ni,
                     support.data());
  if (info != 0 || found != 1) {
    throw ConvergenceError("LAPACK dsyevr failed with info " +
                               std::to_string(info),
                           std::numeric_limits<double>::quiet_NaN(), 0);
  }
  return {w[0], z};
}

DoubleSeed seed_general(std::vector<double> a, std::size_t n) {
  const auto ni = static_cast<lapack_int>(n);
  std::vector<double> wr(n), wi(n), vr(n * n), vl_unused(n);
  const lapack_int info =
      LAPACKE_dgeev(LAPACK_ROW_MAJOR, 'N', 'V', ni, a.data(), ni, wr.data(),
                    wi.data(), vl_unused.data(), ni, vr.data(), ni);
  if (info != 0) {
    throw ConvergenceError("LAPACK dgeev failed with info " +
                               std::to_string(info),
                           std::numeric_limits<double>::quiet_NaN(), 0);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (wr[k] < wr[best]) best = k;
  }
  if (wi[best] != 0.0) {
    throw std::domain_error(
        "eigenvalue with smallest real part is complex; no real ground state");
  }
  DoubleSeed seed{wr[best], std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) seed.vector[i] = vr[i * n + best];
  return seed;
}

double max_abs(std::span<const Real> v) {
  double m = 0.0;
  for (const Real& x : v) m = std::max(m, std::fabs(mpfr_get_d(raw(x), MPFR_RNDN)));
  return m;
}

}  // namespace

EigenPair refine_lowest_eigenpair(const LinearOperator& op,
                                  const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const std::size_t n = op.dim;
  if (n == 0 || op.dense_double.size() != n * n || !op.apply) {
    throw std::invalid_argument("malformed linear operator");
  }

  DoubleSeed seed = op.symmetric ? seed_symmetric(op.dense_double, n)
                                 : seed_general(op.dense_double, n);
  {
    double norm = 0.0;
    std::size_t peak = 0;
    for (std::size_t i = 0; i < n; ++i) {
      norm += seed.vector[i] * seed.vector[i];
      if (std::fabs(seed.vector[i]) > std::fabs(seed.vector[peak])) peak = i;
    }
    norm = std::sqrt(norm);
    if (seed.vector[peak] < 0) norm = -norm;
    for (double& v : seed.vector) v /= norm;
  }

  // Bordered Jacobian [[A - mu0 I, -x0], [x0^T, 0]], column-major.
  const std::size_t nb = n + 1;
  std::vector<double> jac(nb * nb, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) jac[i + j * nb] = op.dense_double[i * n + j];
    jac[j + j * nb] -= seed.value;
    jac[n + j * nb] = seed.vector[j];
    jac[j + n * nb] = -seed.vector[j];
  }
  std::vector<lapack_int> pivots(nb);
  const auto nbi = static_cast<lapack_int>(nb);
  if (LAPACKE_dgetrf(LAPACK_COL_MAJOR, nbi, nbi, jac.data(), nbi,
                     pivots.data()) != 0) {
    throw ConvergenceError("singular correction system; degenerate ground state",
                           std::numeric_limits<double>::quiet_NaN(), 0);
  }

  std::vector<Real> x, x0, ax(n, ctx.real(0L));
  x.reserve(n);
  for (double v : seed.vector) x.push_back(ctx.real(Real(v)));
  x0 = x;
  Real mu = ctx.real(Real(seed.value));
  Real tmp = ctx.real(0L), scale = ctx.real(0L);
  std::vector<Real> residual(nb, ctx.real(0L));
  std::vector<double> rhs(nb);

  const double working_tol = std::pow(10.0, -std::min(ctx.working_digits() - 1, 300));
  const double accept_tol =
      std::pow(10.0, -std::min(ctx.target_digits() + ctx.guard_digits() / 2, 300));
  constexpr std::size_t kMaxIterations = 200;

  double previous_step = std::numeric_limits<double>::infinity();
  int growth = 0;
  std::size_t iter = 0;
  double last_residual = 0.0;
  for (;; ++iter) {
    op.apply(x, ax);
    // residual = A x - mu x ; border = 1 - x0^T x
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_mul(raw(tmp), raw(mu), raw(x[i]), MPFR_RNDN);
      mpfr_sub(raw(residual[i]), raw(ax[i]), raw(tmp), MPFR_RNDN);
    }
    mpfr_set_ui(raw(residual[n]), 1, MPFR_RNDN);
    for (std::size_t i = 0; i < n; ++i) detail::fms_into(residual[n], x0[i], x[i]);
    mpfr_neg(raw(residual[n]), raw(residual[n]), MPFR_RNDN);  // -(1 - x0^T x)

    detail::set_zero(scale);
    for (const Real& r : residual) {
      if (mpfr_cmpabs(raw(r), raw(scale)) > 0) mpfr_abs(raw(scale), raw(r), MPFR_RNDN);
    }
    last_residual = mpfr_get_d(raw(scale), MPFR_RNDN) / std::max(max_abs(x), 1e-300);
    if (mpfr_zero_p(raw(scale))) break;
    if (iter >= kMaxIterations) {
      throw ConvergenceError("eigenpair refinement did not converge after " +
                                 std::to_string(iter) + " iterations",
                             last_residual, iter);
    }
    for (std::size_t i = 0; i < nb; ++i) {
      mpfr_div(raw(tmp), raw(residual[i]), raw(scale), MPFR_RNDN);
      rhs[i] = -mpfr_get_d(raw(tmp), MPFR_RNDN);
    }
    LAPACKE_dgetrs(LAPACK_COL_MAJOR, 'N', nbi, 1, jac.data(), nbi, pivots.data(),
                   rhs.data(), nbi);
    double step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_mul_d(raw(tmp), raw(scale), rhs[i], MPFR_RNDN);
      mpfr_add(raw(x[i]), raw(x[i]), raw(tmp), MPFR_RNDN);
      step = std::max(step, std::fabs(mpfr_get_d(raw(tmp), MPFR_RNDN)));
    }
    mpfr_mul_d(raw(tmp), raw(scale), rhs[n], MPFR_RNDN);
    mpfr_add(raw(mu), raw(mu), raw(tmp), MPFR_RNDN);
    step /= std::max(max_abs(x), 1e-300);

    if (!std::isfinite(step)) {
      throw ConvergenceError("eigenpair refinement produced non-finite step",
                             last_residual, iter);
    }
    if (step <= working_tol) break;
    // Rounding floor: the step stopped shrinking once below the acceptance
    // level, so further corrections only shuffle noise.
    if (step < accept_tol && step > 0.5 * previous_step) break;
    growth = step > previous_step ? growth + 1 : 0;
    if (growth >= 4) {
      throw ConvergenceError("eigenpair refinement diverged", last_residual, iter);
    }
    previous_step = step;
  }

  EigenPair result{mu, std::move(x), iter + 1, last_residual};
  if (op.symmetric) {
    op.apply(result.vector, ax);
    Real num = ctx.real(0L), den = ctx.real(0L);
    for (std::size_t i = 0; i < n; ++i) {
      detail::fma_into(num, result.vector[i], ax[i]);
      detail::fma_into(den, result.vector[i], result.vector[i]);
    }
    result.value = num / den;
  }
  return result;
}

Real smallest_eigenvalue(const SymmetricMatrix& a, const PrecisionContext& ctx) {
  if (a.dim() == 0) throw std::invalid_argument("empty matrix");
  if (a.dim() == 1) return ctx.real(a(0, 0));
  LinearOperator op;
  op.dim = a.dim();
  op.apply = [&a](std::span<const Real> in, std::span<Real> out) {
    a.multiply(in, out);
  };
  op.dense_double = a.to_dense_double();
  op.symmetric = true;
  try {
    return refine_lowest_eigenpair(op, ctx).value;
  } catch (const ConvergenceError&) {
    // Degenerate ground states leave the bordered system singular.
    return eigenvalues_symmetric(a, ctx).front();
  }
}

}  // namespace rrosc
