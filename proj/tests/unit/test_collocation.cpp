#include "rrosc/collocation.hpp"
#include "rrosc/optimizer.hpp"

#include <doctest.h>

using namespace rrosc;

namespace {

const char* kReference10 = "3.01917771477196738691167893635";

}  // namespace

TEST_CASE("nodes are the positive zeros of the next cosine") {
  const PrecisionContext ctx(30);
  const CollocationGrid g = CollocationGrid::make(6, ctx.parse("2.5"), ctx);
  REQUIRE(g.nodes.size() == 6);
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(g.nodes[j] > 0);
    CHECK(g.nodes[j] < g.L);
    if (j > 0) CHECK(g.nodes[j] > g.nodes[j - 1]);
    const Real k = ctx.real(Rational(13, 2)) * ctx.pi() / g.L;
    CHECK(abs(cos(k * g.nodes[j])) < ctx.working_epsilon() * 100);
  }
  CHECK_THROWS_AS(CollocationGrid::make(0, ctx.real(1L), ctx), std::invalid_argument);
  CHECK_THROWS_AS(CollocationGrid::make(3, ctx.real(0L), ctx), std::invalid_argument);
}

TEST_CASE("nodal kinetic operator is exact on the cosine span") {
  const PrecisionContext ctx(30);
  const int M = 7;
  const CollocationGrid g = CollocationGrid::make(M, ctx.parse("3.2"), ctx);
  const std::vector<Real> d = collocation_kinetic(g, ctx);
  REQUIRE(d.size() == static_cast<std::size_t>(M * M));
  for (int n = 0; n < M; ++n) {
    const Real k = ctx.real(Rational(2 * n + 1, 2)) * ctx.pi() / g.L;
    for (int i = 0; i < M; ++i) {
      Real acc = ctx.real(0L);
      for (int j = 0; j < M; ++j) acc += d[i * M + j] * cos(k * g.nodes[j]);
      CHECK(abs(acc - k * k * cos(k * g.nodes[i])) < ctx.target_epsilon() * k * k);
    }
  }
}

TEST_CASE("uncoupled oscillators in a wide box") {
  const PrecisionContext ctx(30);
  const HamiltonianSpec spec{0, HamiltonianForm::Original, BasisKind::Trigonometric, 20};
  CHECK(abs(collocation_ground_energy(spec, ctx.real(12L), ctx) - 2) < 1e-6);
}

TEST_CASE("original form at the RR optimal L is close to the reference") {
  const PrecisionContext ctx(30);
  const HamiltonianSpec spec{10, HamiltonianForm::Original, BasisKind::Trigonometric, 20};
  const Real L = optimize_parameter(spec, ctx).alpha_opt;
  CHECK(abs(collocation_ground_energy(spec, L, ctx) - ctx.parse(kReference10)) < 1e-3);
}

TEST_CASE("rotated form: some (M, L) lies below the reference") {
  const PrecisionContext ctx(30);
  const Real reference = ctx.parse(kReference10);
  const HamiltonianSpec spec{10, HamiltonianForm::Rotated, BasisKind::Trigonometric, 15};
  const Real L = optimize_parameter(spec, ctx).alpha_opt * ctx.real(Rational(3, 2));
  const Real e = collocation_ground_energy(spec, L, ctx);
  CHECK(e < reference - ctx.parse("1e-12"));
}

TEST_CASE("large M converges to the reference at fixed L") {
  const PrecisionContext ctx(30);
  const Real reference = ctx.parse(kReference10);
  const HamiltonianSpec spec{10, HamiltonianForm::Rotated, BasisKind::Trigonometric, 30};
  const Real e = collocation_ground_energy(spec, ctx.real(5L), ctx);
  CHECK(abs(e - reference) < 1e-8);
}

TEST_CASE("collocation needs the trigonometric basis") {
  const PrecisionContext ctx(30);
  CHECK(collocation_context().working_digits() == 34);
  const HamiltonianSpec spec{10, HamiltonianForm::Rotated, BasisKind::HarmonicOscillator, 4};
  CHECK_THROWS_AS(collocation_ground_energy(spec, ctx.real(3L), ctx), std::invalid_argument);
}
