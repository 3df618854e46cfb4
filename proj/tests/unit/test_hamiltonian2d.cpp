#include "rrosc/hamiltonian2d.hpp"
#include "rrosc/optimizer.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace rrosc;

namespace {

Real trace_1d(const SymmetricMatrix& m) { return m.trace(); }

}  // namespace

TEST_CASE("uncoupled oscillator basis at W=1 is diagonal with the exact levels") {
  const PrecisionContext ctx(30);
  const HamiltonianSpec spec{0, HamiltonianForm::Original, BasisKind::HarmonicOscillator, 4};
  const SymmetricMatrix h = assemble(spec, ctx.real(1L), ctx);
  REQUIRE(h.dim() == 16);
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) {
      const std::size_t k = n * 4 + m;
      CHECK(abs(h(k, k) - ((4 * n + 1) + (4 * m + 1))) < ctx.working_epsilon() * 10);
      for (std::size_t l = k + 1; l < 16; ++l) CHECK(abs(h(k, l)) < ctx.working_epsilon());
    }
  }
  CHECK(abs(ground_energy(spec, ctx.real(1L), ctx) - 2) < ctx.target_epsilon());
}

TEST_CASE("closed-form trace equals the trace of the assembled matrix") {
  const PrecisionContext ctx(30);
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> pick_m(1, 7), pick_lambda(0, 20000);
  std::uniform_real_distribution<double> pick_alpha(0.3, 8.0);
  for (int trial = 0; trial < 24; ++trial) {
    const HamiltonianSpec spec{Rational(pick_lambda(rng), 2),
                               trial % 2 ? HamiltonianForm::Rotated : HamiltonianForm::Original,
                               (trial / 2) % 2 ? BasisKind::Trigonometric
                                               : BasisKind::HarmonicOscillator,
                               pick_m(rng)};
    const Real alpha = ctx.real(Real(pick_alpha(rng)));
    const Real direct = assemble(spec, alpha, ctx).trace();
    const Real closed = trace_form(spec, ctx).evaluate(alpha);
    INFO("trial ", trial);
    CHECK(abs(direct - closed) / abs(direct) < ctx.target_epsilon());
  }
}

TEST_CASE("rotated minus original trace is the quartic surplus") {
  // Tr H_rot - Tr H_orig = (lambda/4)(2M tr X4 - 2 (tr X2)^2) - lambda (tr X2)^2
  const PrecisionContext ctx(30);
  for (auto basis : {BasisKind::Trigonometric, BasisKind::HarmonicOscillator}) {
    const Real alpha = ctx.parse("2.3");
    const int M = 6;
    const Rational lambda(7, 3);
    const HamiltonianSpec orig{lambda, HamiltonianForm::Original, basis, M};
    const HamiltonianSpec rot{lambda, HamiltonianForm::Rotated, basis, M};
    const Basis1DSpec b{basis, M, alpha};
    const Real s2 = trace_1d(x2_matrix(b, ctx));
    const Real s4 = trace_1d(x4_matrix(b, ctx));
    const Real l = ctx.real(lambda);
    const Real expected = l / 4 * (2 * M * s4 - 2 * s2 * s2) - l * s2 * s2;
    const Real diff = assemble(rot, alpha, ctx).trace() - assemble(orig, alpha, ctx).trace();
    CHECK(abs(diff - expected) / abs(expected) < ctx.target_epsilon());
  }
}

TEST_CASE("exchange of x and y leaves the matrix invariant") {
  const PrecisionContext ctx(30);
  for (auto form : {HamiltonianForm::Original, HamiltonianForm::Rotated}) {
    for (auto basis : {BasisKind::Trigonometric, BasisKind::HarmonicOscillator}) {
      const int M = 5;
      const SymmetricMatrix h = assemble({10, form, basis, M}, ctx.parse("1.7"), ctx);
      for (int n = 0; n < M; ++n)
        for (int m = 0; m < M; ++m)
          for (int np = 0; np < M; ++np)
            for (int mp = 0; mp < M; ++mp) {
              const Real& a = h(n * M + m, np * M + mp);
              CHECK(abs(a - h(m * M + n, mp * M + np)) <=
                    10 * ctx.working_epsilon() * (abs(a) + 1));
            }
    }
  }
}

TEST_CASE("entries match quadrature-built operators term by term") {
  const PrecisionContext ctx(30);
  for (auto form : {HamiltonianForm::Original, HamiltonianForm::Rotated}) {
    for (auto basis : {BasisKind::Trigonometric, BasisKind::HarmonicOscillator}) {
      const HamiltonianSpec spec{10, form, basis, 2};
      const char* alpha = basis == BasisKind::Trigonometric ? "3.1" : "4.4";
      const SymmetricMatrix h = assemble(spec, ctx.parse(alpha), ctx);
      const oracle::QuadratureHamiltonian q(spec, oracle::Q(alpha));
      for (int k = 0; k < 4; ++k) {
        for (int l = k; l < 4; ++l) {
          const Real ref = oracle::from_q(q.entry(k / 2, k % 2, l / 2, l % 2), ctx);
          CHECK(abs(h(k, l) - ref) / (abs(h(k, k)) + abs(h(l, l))) < 1e-25);
        }
      }
    }
  }
}

TEST_CASE("matrix-free apply equals the dense product") {
  const PrecisionContext ctx(30);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (auto form : {HamiltonianForm::Original, HamiltonianForm::Rotated}) {
    for (auto basis : {BasisKind::Trigonometric, BasisKind::HarmonicOscillator}) {
      const HamiltonianSpec spec{100, form, basis, 6};
      const Real alpha = ctx.parse("2.2");
      const SymmetricMatrix h = assemble(spec, alpha, ctx);
      const KroneckerHamiltonian k(spec, alpha, ctx);
      std::vector<Real> v(36), a(36, ctx.real(0L)), b(36, ctx.real(0L));
      for (auto& x : v) x = ctx.real(Rational(d(rng), 7));
      h.multiply(v, a);
      k.apply(v, b);
      for (std::size_t i = 0; i < 36; ++i) {
        CHECK(abs(a[i] - b[i]) <= (abs(a[i]) + 1) * ctx.target_epsilon());
      }
      const auto dense = h.to_dense_double();
      const auto kd = k.dense_double();
      for (std::size_t i = 0; i < dense.size(); ++i) {
        CHECK(std::abs(dense[i] - kd[i]) <= 1e-13 * (std::abs(dense[i]) + 1));
      }
    }
  }
}

TEST_CASE("ground energies are upper bounds that decrease with M") {
  const PrecisionContext ctx(30);
  const Real reference = ctx.parse("3.01917771477196738691167893635");
  for (auto form : {HamiltonianForm::Original, HamiltonianForm::Rotated}) {
    for (auto basis : {BasisKind::Trigonometric, BasisKind::HarmonicOscillator}) {
      Real previous = ctx.real(1000L);
      for (int M : {2, 5, 10, 15}) {
        const HamiltonianSpec spec{10, form, basis, M};
        const Real alpha = optimize_parameter(spec, ctx).alpha_opt;
        const Real e = ground_energy(spec, alpha, ctx);
        INFO(to_string(form), " ", to_string(basis), " M=", M);
        CHECK(e > reference);
        CHECK(e < previous);
        previous = e;
      }
    }
  }
}

TEST_CASE("both forms share the ground energy once converged") {
  const PrecisionContext ctx(20);
  const HamiltonianSpec orig{10, HamiltonianForm::Original, BasisKind::HarmonicOscillator, 35};
  const HamiltonianSpec rot{10, HamiltonianForm::Rotated, BasisKind::HarmonicOscillator, 35};
  const Real eo = ground_energy(orig, optimize_parameter(orig, ctx).alpha_opt, ctx);
  const Real er = ground_energy(rot, optimize_parameter(rot, ctx).alpha_opt, ctx);
  CHECK(abs(eo - er) < 1e-6);
}

TEST_CASE("matrix dump lists the upper triangle") {
  const PrecisionContext ctx(16, 10);
  const HamiltonianSpec spec{10, HamiltonianForm::Rotated, BasisKind::HarmonicOscillator, 2};
  const SymmetricMatrix h = assemble(spec, ctx.real(2L), ctx);
  std::ostringstream os;
  write_matrix_dump(os, h, ctx);
  std::istringstream in(os.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0].rfind("0 0 ", 0) == 0);
  CHECK(lines[1].rfind("0 1 ", 0) == 0);
  CHECK(lines[9].rfind("3 3 ", 0) == 0);
  const std::string value = lines[0].substr(4);
  CHECK(value.find("e+00") != std::string::npos);
  CHECK(oracle::agreement_digits(ctx.parse(value), h(0, 0)) > 24);
}

TEST_CASE("form names and spec validation") {
  CHECK(to_string(HamiltonianForm::Original) == "original");
  CHECK(to_string(HamiltonianForm::Rotated) == "rotated");
  CHECK(parse_form("rotated") == HamiltonianForm::Rotated);
  CHECK_THROWS_AS(parse_form("sideways"), std::invalid_argument);
  const PrecisionContext ctx(20);
  CHECK_THROWS_AS(assemble({-1, HamiltonianForm::Original, BasisKind::Trigonometric, 3},
                           ctx.real(1L), ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(assemble({1, HamiltonianForm::Original, BasisKind::Trigonometric, 0},
                           ctx.real(1L), ctx),
                  std::invalid_argument);
  CHECK(HamiltonianSpec{1, HamiltonianForm::Original, BasisKind::Trigonometric, 7}.dimension() ==
        49);
}
