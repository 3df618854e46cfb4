#pragma once

// Allocation-free MPFR primitives for inner loops. Boost expression
// templates allocate a temporary per operation, which dominates the cost of
// matrix-vector products at a few hundred bits.

#include "rrosc/precision.hpp"

#include <mpfr.h>

namespace rrosc::detail {

inline mpfr_ptr raw(Real& x) { return x.backend().data(); }
inline mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

/// acc += a * b
inline void fma_into(Real& acc, const Real& a, const Real& b) {
  mpfr_fma(raw(acc), raw(a), raw(b), raw(acc), MPFR_RNDN);
}

/// acc -= a * b
inline void fms_into(Real& acc, const Real& a, const Real& b) {
  mpfr_fms(raw(acc), raw(a), raw(b), raw(acc), MPFR_RNDN);
  mpfr_neg(raw(acc), raw(acc), MPFR_RNDN);
}

inline void set_zero(Real& x) { mpfr_set_zero(raw(x), 1); }

}  // namespace rrosc::detail
