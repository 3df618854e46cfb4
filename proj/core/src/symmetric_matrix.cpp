#include "rrosc/symmetric_matrix.hpp"

#include "rrosc/detail/mpfr_kernels.hpp"

#include <stdexcept>

namespace rrosc {

SymmetricMatrix::SymmetricMatrix(std::size_t dim, const PrecisionContext& ctx)
    : dim_(dim), upper_(dim * (dim + 1) / 2, ctx.real(0L)) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim,
                                          const PrecisionContext& ctx) {
  SymmetricMatrix m(dim, ctx);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, ctx.real(1L));
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const Real> values,
                                          const PrecisionContext& ctx) {
  SymmetricMatrix m(values.size(), ctx);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, const Real& value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("matrix index");
  if (!isfinite(value)) throw std::domain_error("non-finite matrix entry");
  Real& slot = upper_[index(i, j)];
  mpfr_set(detail::raw(slot), detail::raw(value), MPFR_RNDN);
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, const Real& value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("matrix index");
  if (!isfinite(value)) throw std::domain_error("non-finite matrix entry");
  Real& slot = upper_[index(i, j)];
  mpfr_add(detail::raw(slot), detail::raw(slot), detail::raw(value), MPFR_RNDN);
}

Real SymmetricMatrix::trace() const {
  Real sum = upper_.empty() ? Real(0) : Real(upper_[0]);
  detail::set_zero(sum);
  for (std::size_t i = 0; i < dim_; ++i) {
    mpfr_add(detail::raw(sum), detail::raw(sum), detail::raw((*this)(i, i)),
             MPFR_RNDN);
  }
  return sum;
}

void SymmetricMatrix::multiply(std::span<const Real> in,
                               std::span<Real> out) const {
  if (in.size() != dim_ || out.size() != dim_) {
    throw std::invalid_argument("dimension mismatch in multiply");
  }
  for (std::size_t i = 0; i < dim_; ++i) detail::set_zero(out[i]);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t row = i * dim_ - i * (i + 1) / 2;
    detail::fma_into(out[i], upper_[row + i], in[i]);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Real& a = upper_[row + j];
      if (mpfr_zero_p(detail::raw(a))) continue;
      detail::fma_into(out[i], a, in[j]);
      detail::fma_into(out[j], a, in[i]);
    }
  }
}

std::vector<double> SymmetricMatrix::to_dense_double() const {
  std::vector<double> dense(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const double v = mpfr_get_d(detail::raw((*this)(i, j)), MPFR_RNDN);
      dense[i * dim_ + j] = v;
      dense[j * dim_ + i] = v;
    }
  }
  return dense;
}

}  // namespace rrosc
