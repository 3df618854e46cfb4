#include "rrosc/hamiltonian2d.hpp"

#include "rrosc/detail/mpfr_kernels.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace rrosc {

using detail::raw;

std::string_view to_string(HamiltonianForm form) {
  return form == HamiltonianForm::Original ? "original" : "rotated";
}

HamiltonianForm parse_form(std::string_view text) {
  if (text == "original") return HamiltonianForm::Original;
  if (text == "rotated") return HamiltonianForm::Rotated;
  throw std::invalid_argument("unknown Hamiltonian form '" + std::string(text) + "'");
}

void HamiltonianSpec::validate() const {
  if (lambda < 0) throw std::invalid_argument("coupling lambda must be >= 0");
  if (M < 1) throw std::invalid_argument("basis size M must be >= 1");
}

namespace {

struct Blocks {
  SymmetricMatrix a;   // one-body block acting on each coordinate
  SymmetricMatrix x2;  // x^2, for the coupling term
  Real coupling;       // coefficient of X2 (x) X2
};

Blocks one_body_blocks(const HamiltonianSpec& spec, const Real& alpha,
                       const PrecisionContext& ctx) {
  spec.validate();
  PrecisionScope scope(ctx);
  const Basis1DSpec b{spec.basis, spec.M, ctx.real(alpha)};
  SymmetricMatrix t = kinetic_matrix(b, ctx);
  SymmetricMatrix x2 = x2_matrix(b, ctx);
  const Real lambda = ctx.real(spec.lambda);
  SymmetricMatrix a = t;
  for (int i = 0; i < spec.M; ++i)
    for (int j = i; j < spec.M; ++j) a.add(i, j, x2(i, j));
  Real coupling = lambda;
  if (spec.form == HamiltonianForm::Rotated) {
    const SymmetricMatrix x4 = x4_matrix(b, ctx);
    const Real quarter = lambda / 4;
    for (int i = 0; i < spec.M; ++i)
      for (int j = i; j < spec.M; ++j) a.add(i, j, quarter * x4(i, j));
    coupling = -lambda / 2;
  }
  return {std::move(a), std::move(x2), coupling};
}

Real diagonal_sum(const SymmetricMatrix& m) { return m.trace(); }

}  // namespace

SymmetricMatrix assemble(const HamiltonianSpec& spec, const Real& alpha,
                         const PrecisionContext& ctx) {
  const Blocks blocks = one_body_blocks(spec, alpha, ctx);
  PrecisionScope scope(ctx);
  const std::size_t M = static_cast<std::size_t>(spec.M);
  SymmetricMatrix h(M * M, ctx);
  Real entry = ctx.real(0L);
  for (std::size_t n = 0; n < M; ++n) {
    for (std::size_t m = 0; m < M; ++m) {
      const std::size_t row = n * M + m;
      for (std::size_t np = 0; np < M; ++np) {
        for (std::size_t mp = 0; mp < M; ++mp) {
          const std::size_t col = np * M + mp;
          if (col < row) continue;
          detail::set_zero(entry);
          if (m == mp) mpfr_add(raw(entry), raw(entry), raw(blocks.a(n, np)), MPFR_RNDN);
          if (n == np) mpfr_add(raw(entry), raw(entry), raw(blocks.a(m, mp)), MPFR_RNDN);
          if (!mpfr_zero_p(raw(blocks.coupling))) {
            entry += blocks.coupling * blocks.x2(n, np) * blocks.x2(m, mp);
          }
          if (!mpfr_zero_p(raw(entry))) h.set(row, col, entry);
        }
      }
    }
  }
  return h;
}

TraceForm trace_form(const HamiltonianSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  PrecisionScope scope(ctx);
  const Basis1DSpec unit{spec.basis, spec.M, ctx.real(1L)};
  const Real t = diagonal_sum(kinetic_matrix(unit, ctx));
  const Real s2 = diagonal_sum(x2_matrix(unit, ctx));
  const Real lambda = ctx.real(spec.lambda);
  const long twice_m = 2L * spec.M;

  TraceForm form;
  form.terms.push_back({kinetic_scaling(spec.basis), twice_m * t});
  form.terms.push_back({x2_scaling(spec.basis), twice_m * s2});
  if (spec.form == HamiltonianForm::Original) {
    form.terms.push_back({2 * x2_scaling(spec.basis), lambda * s2 * s2});
  } else {
    const Real s4 = diagonal_sum(x4_matrix(unit, ctx));
    form.terms.push_back(
        {x4_scaling(spec.basis), lambda / 4 * (twice_m * s4 - 2 * s2 * s2)});
  }
  return form;
}

KroneckerHamiltonian::SparseRows KroneckerHamiltonian::sparse(const SymmetricMatrix& m) {
  SparseRows s;
  s.rows.resize(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!mpfr_zero_p(raw(m(i, j)))) s.rows[i].emplace_back(j, m(i, j));
    }
  }
  return s;
}

KroneckerHamiltonian::KroneckerHamiltonian(const HamiltonianSpec& spec,
                                           const Real& alpha,
                                           const PrecisionContext& ctx)
    : M_(static_cast<std::size_t>(spec.M)), ctx_(ctx) {
  Blocks blocks = one_body_blocks(spec, alpha, ctx);
  a_ = sparse(blocks.a);
  x2_ = sparse(blocks.x2);
  coupling_ = blocks.coupling;
  a_d_ = blocks.a.to_dense_double();
  x2_d_ = blocks.x2.to_dense_double();
  coupling_d_ = coupling_.convert_to<double>();
}

void KroneckerHamiltonian::apply(std::span<const Real> in, std::span<Real> out) const {
  const std::size_t M = M_;
  if (in.size() != M * M || out.size() != M * M) {
    throw std::invalid_argument("dimension mismatch in Hamiltonian apply");
  }
  PrecisionScope scope(ctx_);
  for (Real& v : out) detail::set_zero(v);
  // out[n][m] = sum_k A[n][k] V[k][m] + sum_k A[m][k] V[n][k]
  for (std::size_t n = 0; n < M; ++n) {
    for (const auto& [k, a] : a_.rows[n]) {
      for (std::size_t m = 0; m < M; ++m) detail::fma_into(out[n * M + m], a, in[k * M + m]);
    }
  }
  for (std::size_t m = 0; m < M; ++m) {
    for (const auto& [k, a] : a_.rows[m]) {
      for (std::size_t n = 0; n < M; ++n) detail::fma_into(out[n * M + m], a, in[n * M + k]);
    }
  }
  if (mpfr_zero_p(raw(coupling_))) return;
  // U = X2 V, Y = U X2, out += c Y
  std::vector<Real> u(M * M, ctx_.real(0L));
  for (std::size_t n = 0; n < M; ++n) {
    for (const auto& [k, x] : x2_.rows[n]) {
      for (std::size_t m = 0; m < M; ++m) detail::fma_into(u[n * M + m], x, in[k * M + m]);
    }
  }
  Real y = ctx_.real(0L);
  for (std::size_t n = 0; n < M; ++n) {
    for (std::size_t m = 0; m < M; ++m) {
      detail::set_zero(y);
      for (const auto& [k, x] : x2_.rows[m]) detail::fma_into(y, u[n * M + k], x);
      detail::fma_into(out[n * M + m], coupling_, y);
    }
  }
}

std::vector<double> KroneckerHamiltonian::dense_double() const {
  const std::size_t M = M_, dim = M * M;
  std::vector<double> h(dim * dim, 0.0);
  for (std::size_t n = 0; n < M; ++n) {
    for (std::size_t m = 0; m < M; ++m) {
      const std::size_t row = n * M + m;
      for (std::size_t np = 0; np < M; ++np) {
        const double xa = x2_d_[n * M + np] * coupling_d_;
        for (std::size_t mp = 0; mp < M; ++mp) {
          double v = xa * x2_d_[m * M + mp];
          if (m == mp) v += a_d_[n * M + np];
          if (n == np) v += a_d_[m * M + mp];
          h[row * dim + np * M + mp] = v;
        }
      }
    }
  }
  return h;
}

LinearOperator KroneckerHamiltonian::as_operator() const {
  LinearOperator op;
  op.dim = dimension();
  op.apply = [this](std::span<const Real> in, std::span<Real> out) { apply(in, out); };
  op.dense_double = dense_double();
  op.symmetric = true;
  return op;
}

Real ground_energy(const HamiltonianSpec& spec, const Real& alpha,
                   const PrecisionContext& ctx) {
  const KroneckerHamiltonian h(spec, alpha, ctx);
  return refine_lowest_eigenpair(h.as_operator(), ctx).value;
}

void write_matrix_dump(std::ostream& os, const SymmetricMatrix& m,
                       const PrecisionContext& ctx) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      os << i << ' ' << j << ' ' << to_scientific(m(i, j), ctx.working_digits())
         << '\n';
    }
  }
}

}  // namespace rrosc
