#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the closed-form matrix elements or the refinement eigensolver.

#include "rrosc/basis1d.hpp"
#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/precision.hpp"

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace rrosc::oracle {

/// 60-digit arithmetic for quadrature. tanh_sinh cannot size its tables for
/// the MPFR backend's exponent range, and a software float also keeps the
/// oracle off the library's arithmetic.
using Q = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

inline Q to_q(const Real& x) { return Q(x.str(80, std::ios_base::scientific)); }
inline Real from_q(const Q& x, const PrecisionContext& ctx) {
  return ctx.parse(x.str(70, std::ios_base::scientific));
}

/// Normalised Hermite functions psi_n and psi_m at one point, by the
/// three-term recurrence
///   psi_{k+1} = sqrt(2/(k+1)) xi psi_k - sqrt(k/(k+1)) psi_{k-1}.
/// `norm` is (omega/pi)^{1/4}.
inline std::pair<Q, Q> hermite_pair(int n, int m, const Q& omega, const Q& norm,
                                    const Q& x) {
  const Q xi = sqrt(omega) * x;
  Q prev = 0;
  Q cur = norm * exp(-xi * xi / 2);
  Q at_n = n == 0 ? cur : Q(0), at_m = m == 0 ? cur : Q(0);
  for (int k = 0; k < std::max(n, m); ++k) {
    const Q next = sqrt(Q(2) / (k + 1)) * xi * cur - sqrt(Q(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    if (k + 1 == n) at_n = cur;
    if (k + 1 == m) at_m = cur;
  }
  return {at_n, at_m};
}

enum class Op { Kinetic, X2, X4 };

/// <phi_i| op |phi_j> by tanh-sinh quadrature at 60 digits. Every integrand
/// is even, so only [0, end] is integrated (tanh-sinh over the symmetric
/// interval stops early on the oscillatory Gaussians). The oscillator
/// integrals are truncated where exp(-omega x^2) < 1e-80; the kinetic
/// integrand uses phi'' = (omega^2 x^2 - omega (2n+1)) phi for Hermite
/// functions and phi'' = -k^2 phi for the cosines.
inline Q quadrature_element(BasisKind kind, Op op, int i, int j, const Q& alpha) {
  static boost::math::quadrature::tanh_sinh<Q> integrator;
  const Q tol = Q("1e-45");
  const Q pi = boost::math::constants::pi<Q>();
  auto power = [op](const Q& x) -> Q {
    return op == Op::X2 ? x * x : (op == Op::X4 ? x * x * x * x : Q(1));
  };
  if (kind == BasisKind::Trigonometric) {
    const Q L = alpha;
    const Q ki = (i + Q(0.5)) * pi / L, kj = (j + Q(0.5)) * pi / L;
    auto f = [&](const Q& x) -> Q {
      Q v = cos(ki * x) * cos(kj * x) / L * power(x);
      if (op == Op::Kinetic) v *= kj * kj;
      return v;
    };
    return 2 * integrator.integrate(f, Q(0), L, tol);
  }
  const int n = 2 * i, m = 2 * j;
  const Q omega = alpha;
  const Q X = sqrt(80 * log(Q(10)) / omega);
  const Q norm = pow(omega / pi, Q(0.25));
  auto f = [&](const Q& x) -> Q {
    const auto [pn, pm] = hermite_pair(n, m, omega, norm, x);
    if (op == Op::Kinetic) {
      return -pn * (omega * omega * x * x - omega * (2 * m + 1)) * pm;
    }
    return pn * pm * power(x);
  };
  return 2 * integrator.integrate(f, Q(0), X, tol);
}

/// Entry ((n,m),(n',m')) of the 2D Hamiltonian built from quadrature 1D
/// elements, term by term from the operator definitions.
struct QuadratureHamiltonian {
  int M;
  std::vector<Q> t, x2, x4;  // row-major M x M
  Q lambda;
  HamiltonianForm form;

  QuadratureHamiltonian(const HamiltonianSpec& spec, const Q& alpha)
      : M(spec.M), t(M * M), x2(M * M), x4(M * M), form(spec.form) {
    lambda = Q(rational_to_string(spec.lambda));
    for (int i = 0; i < M; ++i) {
      for (int j = i; j < M; ++j) {
        t[i * M + j] = t[j * M + i] = quadrature_element(spec.basis, Op::Kinetic, i, j, alpha);
        x2[i * M + j] = x2[j * M + i] = quadrature_element(spec.basis, Op::X2, i, j, alpha);
        x4[i * M + j] = x4[j * M + i] = quadrature_element(spec.basis, Op::X4, i, j, alpha);
      }
    }
  }

  Q entry(int n, int m, int np, int mp) const {
    const Q dn = n == np ? 1 : 0, dm = m == mp ? 1 : 0;
    const Q tx = t[n * M + np] * dm, ty = dn * t[m * M + mp];
    const Q x2x = x2[n * M + np] * dm, y2y = dn * x2[m * M + mp];
    Q v = tx + ty + x2x + y2y;
    if (form == HamiltonianForm::Original) {
      v += lambda * x2[n * M + np] * x2[m * M + mp];
    } else {
      const Q x4x = x4[n * M + np] * dm, y4y = dn * x4[m * M + mp];
      v += lambda / 4 * (x4x - 2 * x2[n * M + np] * x2[m * M + mp] + y4y);
    }
    return v;
  }
};

/// Double-precision dense symmetric eigenvalues (Eigen), ascending.
inline std::vector<double> dense_eigenvalues(const std::vector<double>& row_major,
                                             std::size_t dim) {
  Eigen::MatrixXd a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = row_major[i * dim + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd w = es.eigenvalues();
  return {w.data(), w.data() + w.size()};
}

/// Agreement digits -log10(|a - b| / |b|), capped at 100.
inline double agreement_digits(const Real& a, const Real& b) {
  if (a == b) return 100.0;
  const Real rel = abs(a - b) / abs(b);
  return std::min(100.0, -std::log10(rel.convert_to<double>()));
}

}  // namespace rrosc::oracle
