#include "rrosc/collocation.hpp"

#include "rrosc/detail/mpfr_kernels.hpp"
#include "rrosc/eigensolver.hpp"

#include <stdexcept>
#include <utility>

namespace rrosc {

using detail::raw;

CollocationGrid CollocationGrid::make(int M, const Real& L,
                                      const PrecisionContext& ctx) {
  if (M < 1) throw std::invalid_argument("collocation size M must be >= 1");
  if (!(L > 0)) throw std::invalid_argument("collocation half-width must be > 0");
  PrecisionScope scope(ctx);
  CollocationGrid g{M, ctx.real(L), {}};
  g.nodes.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    g.nodes.push_back(ctx.real(Rational(2 * j + 1, 2 * M + 1)) * g.L);
  }
  return g;
}

PrecisionContext collocation_context() { return PrecisionContext(24, 10); }

namespace {

// Gauss-Jordan inverse with partial pivoting; row-major n x n.
std::vector<Real> invert(std::vector<Real> a, std::size_t n,
                         const PrecisionContext& ctx) {
  std::vector<Real> inv(n * n, ctx.real(0L));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = ctx.real(1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a[r * n + col]) > abs(a[pivot * n + col])) pivot = r;
    if (a[pivot * n + col] == 0) throw std::domain_error("singular collocation matrix");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[pivot * n + k], a[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    }
    const Real scale = 1 / a[col * n + col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col * n + k] *= scale;
      inv[col * n + k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const Real f = a[r * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<Real> collocation_kinetic(const CollocationGrid& grid,
                                      const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const std::size_t M = static_cast<std::size_t>(grid.M);
  const Real pi = ctx.pi();
  const Real L = ctx.real(grid.L);
  std::vector<Real> k2(M, ctx.real(0L));
  std::vector<Real> c(M * M, ctx.real(0L));
  for (std::size_t n = 0; n < M; ++n) {
    const Real k = (n + ctx.real(Rational(1, 2))) * pi / L;
    k2[n] = k * k;
    for (std::size_t j = 0; j < M; ++j) c[j * M + n] = cos(k * grid.nodes[j]);
  }
  const std::vector<Real> c_inv = invert(c, M, ctx);
  std::vector<Real> d(M * M, ctx.real(0L));
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      Real& acc = d[i * M + j];
      for (std::size_t n = 0; n < M; ++n) {
        detail::fma_into(acc, c[i * M + n] * k2[n], c_inv[n * M + j]);
      }
    }
  }
  return d;
}

Real collocation_ground_energy(const HamiltonianSpec& spec, const Real& L,
                               const PrecisionContext& /*ctx*/) {
  spec.validate();
  if (spec.basis != BasisKind::Trigonometric) {
    throw std::invalid_argument("collocation supports only the trigonometric basis");
  }
  const PrecisionContext ctx = collocation_context();
  PrecisionScope scope(ctx);
  const CollocationGrid grid = CollocationGrid::make(spec.M, L, ctx);
  const std::size_t M = static_cast<std::size_t>(spec.M), dim = M * M;
  const std::vector<Real> d = collocation_kinetic(grid, ctx);

  const Real lambda = ctx.real(spec.lambda);
  std::vector<Real> potential;
  potential.reserve(dim);
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      const Real x2 = grid.nodes[i] * grid.nodes[i];
      const Real y2 = grid.nodes[j] * grid.nodes[j];
      Real v = x2 + y2;
      if (spec.form == HamiltonianForm::Original) {
        v += lambda * x2 * y2;
      } else {
        v += lambda / 4 * (x2 - y2) * (x2 - y2);
      }
      potential.push_back(v);
    }
  }

  LinearOperator op;
  op.dim = dim;
  op.symmetric = false;
  op.apply = [&](std::span<const Real> in, std::span<Real> out) {
    // out[i][j] = sum_k D[i][k] V[k][j] + sum_k D[j][k] V[i][k] + W[i][j] V[i][j]
    for (std::size_t i = 0; i < M; ++i) {
      for (std::size_t j = 0; j < M; ++j) {
        Real& acc = out[i * M + j];
        mpfr_mul(raw(acc), raw(potential[i * M + j]), raw(in[i * M + j]), MPFR_RNDN);
        for (std::size_t k = 0; k < M; ++k) {
          detail::fma_into(acc, d[i * M + k], in[k * M + j]);
          detail::fma_into(acc, d[j * M + k], in[i * M + k]);
        }
      }
    }
  };
  op.dense_double.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      const std::size_t row = i * M + j;
      op.dense_double[row * dim + row] += potential[row].convert_to<double>();
      for (std::size_t k = 0; k < M; ++k) {
        op.dense_double[row * dim + k * M + j] += d[i * M + k].convert_to<double>();
        op.dense_double[row * dim + i * M + k] += d[j * M + k].convert_to<double>();
      }
    }
  }
  return refine_lowest_eigenpair(op, ctx).value;
}

}  // namespace rrosc
