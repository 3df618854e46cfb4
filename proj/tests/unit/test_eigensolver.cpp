#include "rrosc/eigensolver.hpp"
#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/optimizer.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace rrosc;

namespace {

// Symmetric matrix with exact rational entries p/q, |p| <= 50, q in 1..9.
SymmetricMatrix random_symmetric(std::size_t n, std::mt19937& rng,
                                 const PrecisionContext& ctx) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  SymmetricMatrix m(n, ctx);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, ctx.real(Rational(num(rng), den(rng))));
  return m;
}

Real relative_gap(const Real& a, const Real& b) {
  return abs(a - b) / (abs(b) > 1 ? abs(b) : Real(1));
}

}  // namespace

TEST_CASE("Jacobi on the identity") {
  const PrecisionContext ctx(30);
  const auto values = eigenvalues_symmetric(SymmetricMatrix::identity(4, ctx), ctx);
  REQUIRE(values.size() == 4);
  for (const Real& v : values) CHECK(v == 1);
}

TEST_CASE("Jacobi on a 2x2 with known spectrum") {
  const PrecisionContext ctx(30);
  SymmetricMatrix m(2, ctx);
  m.set(0, 0, ctx.real(2L));
  m.set(1, 1, ctx.real(2L));
  m.set(0, 1, ctx.real(1L));
  const auto values = eigenvalues_symmetric(m, ctx);
  CHECK(abs(values[0] - 1) < ctx.target_epsilon());
  CHECK(abs(values[1] - 3) < ctx.target_epsilon());
}

TEST_CASE("smallest eigenvalue on trivial matrices") {
  const PrecisionContext ctx(30);
  CHECK(smallest_eigenvalue(SymmetricMatrix::identity(9, ctx), ctx) == 1);
  const std::vector<Real> d{ctx.real(5L), ctx.real(3L), ctx.real(7L)};
  CHECK(abs(smallest_eigenvalue(SymmetricMatrix::diagonal(d, ctx), ctx) - 3) <
        ctx.target_epsilon());
}

TEST_CASE("25x25 rotated trig matrix: Jacobi agrees with a double dense solver") {
  const PrecisionContext ctx(30);
  const HamiltonianSpec spec{10, HamiltonianForm::Rotated, BasisKind::Trigonometric, 5};
  const Real L = optimize_parameter(spec, ctx).alpha_opt;
  const SymmetricMatrix h = assemble(spec, L, ctx);
  REQUIRE(h.dim() == 25);

  const auto jacobi = eigenvalues_symmetric(h, ctx);
  const auto dense = oracle::dense_eigenvalues(h.to_dense_double(), 25);
  for (std::size_t k = 0; k < 25; ++k) {
    CHECK(oracle::agreement_digits(jacobi[k], ctx.real(Real(dense[k]))) >= 12);
  }
  // Frozen from numpy.linalg.eigvalsh on the same matrix in double.
  CHECK(oracle::agreement_digits(jacobi[0], ctx.parse("3.0192339838096194")) >= 12);
  CHECK(relative_gap(smallest_eigenvalue(h, ctx), jacobi[0]) < ctx.target_epsilon());
}

TEST_CASE("M=10 trig RR matrix at the optimal L reproduces the tabulated ground energy") {
  const PrecisionContext ctx(30);
  const HamiltonianSpec spec{10, HamiltonianForm::Original, BasisKind::Trigonometric, 10};
  const Real L = optimize_parameter(spec, ctx).alpha_opt;
  CHECK(to_fixed_significant(L, 4) == "2.627");
  const Real e = smallest_eigenvalue(assemble(spec, L, ctx), ctx);
  CHECK(to_fixed_significant(e, 9) == "3.01970464");
}

TEST_CASE("property: eigenvalue count and trace preservation") {
  const PrecisionContext ctx(30);
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const SymmetricMatrix m = random_symmetric(n, rng, ctx);
    const auto values = eigenvalues_symmetric(m, ctx);
    REQUIRE(values.size() == n);
    CHECK(std::is_sorted(values.begin(), values.end()));
    Real sum = ctx.real(0L);
    for (const Real& v : values) sum += v;
    const Real scale = abs(m.trace()) + 1;
    CHECK(abs(sum - m.trace()) / scale < ctx.target_epsilon());
  }
}

TEST_CASE("property: more working precision moves eigenvalues by less than 10^-target") {
  const PrecisionContext ctx(30), wide(60);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    const SymmetricMatrix m = random_symmetric(6, rng, wide);
    const auto low = eigenvalues_symmetric(m, ctx);
    const auto high = eigenvalues_symmetric(m, wide);
    for (std::size_t k = 0; k < low.size(); ++k) {
      CHECK(relative_gap(low[k], high[k]) < ctx.target_epsilon());
    }
  }
}

TEST_CASE("property: smallest eigenvalue bounds every Rayleigh quotient") {
  const PrecisionContext ctx(30);
  std::mt19937 rng(99);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 3 + 2 * trial;
    const SymmetricMatrix m = random_symmetric(n, rng, ctx);
    const Real lowest = smallest_eigenvalue(m, ctx);
    const auto jacobi = eigenvalues_symmetric(m, ctx);
    CHECK(relative_gap(lowest, jacobi[0]) < ctx.target_epsilon());
    std::vector<Real> v(n, ctx.real(0L)), av(n, ctx.real(0L));
    for (int sample = 0; sample < 50; ++sample) {
      for (auto& x : v) x = ctx.real(Real(gauss(rng)));
      m.multiply(v, av);
      Real num = ctx.real(0L), den = ctx.real(0L);
      for (std::size_t i = 0; i < n; ++i) {
        num += v[i] * av[i];
        den += v[i] * v[i];
      }
      CHECK(lowest <= num / den + ctx.working_epsilon() * abs(lowest));
    }
  }
}

TEST_CASE("Jacobi reports non-convergence with the residual") {
  const PrecisionContext ctx(30);
  std::mt19937 rng(3);
  const SymmetricMatrix m = random_symmetric(8, rng, ctx);
  try {
    eigenvalues_symmetric(m, ctx, JacobiOptions{1});
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0);
    CHECK(e.iterations() == 1);
  }
}

TEST_CASE("refinement handles a non-symmetric operator") {
  const PrecisionContext ctx(30);
  // Upper triangular, so the spectrum is the diagonal {4, 3, 5, 7}.
  const std::vector<std::vector<int>> a{{4, 1, 0, 2}, {0, 3, 1, 0}, {0, 0, 5, 1}, {0, 0, 0, 7}};
  LinearOperator op;
  op.dim = 4;
  op.symmetric = false;
  for (const auto& row : a)
    for (int v : row) op.dense_double.push_back(v);
  op.apply = [&](std::span<const Real> in, std::span<Real> out) {
    for (std::size_t i = 0; i < 4; ++i) {
      out[i] = 0;
      for (std::size_t j = 0; j < 4; ++j) out[i] += a[i][j] * in[j];
    }
  };
  const EigenPair pair = refine_lowest_eigenpair(op, ctx);
  CHECK(abs(pair.value - 3) < ctx.target_epsilon());
}

TEST_CASE("refinement converges to working precision on an RR operator") {
  const PrecisionContext ctx(40);
  const HamiltonianSpec spec{100, HamiltonianForm::Rotated, BasisKind::HarmonicOscillator, 12};
  const Real w = optimize_parameter(spec, ctx).alpha_opt;
  const KroneckerHamiltonian h(spec, w, ctx);
  const EigenPair pair = refine_lowest_eigenpair(h.as_operator(), ctx);
  CHECK(pair.residual < 1e-38);
  CHECK(pair.iterations < 20);
  const auto jacobi = eigenvalues_symmetric(assemble(spec, w, ctx), ctx);
  CHECK(relative_gap(pair.value, jacobi[0]) < ctx.target_epsilon());
}

TEST_CASE("malformed operators and empty matrices are rejected") {
  const PrecisionContext ctx(20);
  LinearOperator op;
  CHECK_THROWS_AS(refine_lowest_eigenpair(op, ctx), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatrix(0, ctx), std::invalid_argument);
  SymmetricMatrix m(2, ctx);
  CHECK_THROWS_AS(m.set(0, 1, ctx.real(1L) / 0), std::domain_error);
}
