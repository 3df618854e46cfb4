#pragma once

#include "rrosc/precision.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rrosc {

/// Dense symmetric matrix of high-precision scalars. Only the upper triangle
/// is stored (packed, row-major), so symmetry holds by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  /// Zero matrix whose entries carry the context's working precision.
  SymmetricMatrix(std::size_t dim, const PrecisionContext& ctx);

  static SymmetricMatrix identity(std::size_t dim, const PrecisionContext& ctx);
  static SymmetricMatrix diagonal(std::span<const Real> values,
                                  const PrecisionContext& ctx);

  std::size_t dim() const noexcept { return dim_; }

  const Real& operator()(std::size_t i, std::size_t j) const {
    return upper_[index(i, j)];
  }
  /// Stores `value` at (i, j) and (j, i). Throws std::domain_error on a
  /// non-finite value.
  void set(std::size_t i, std::size_t j, const Real& value);
  /// Adds `value` at (i, j) and (j, i).
  void add(std::size_t i, std::size_t j, const Real& value);

  Real trace() const;
  /// out = A * in at the precision of the entries.
  void multiply(std::span<const Real> in, std::span<Real> out) const;
  /// Row-major dense copy rounded to double.
  std::vector<double> to_dense_double() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * dim_ - i * (i + 1) / 2 + j;
  }

  std::size_t dim_ = 0;
  std::vector<Real> upper_;
};

}  // namespace rrosc
