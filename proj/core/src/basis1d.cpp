#include "rrosc/basis1d.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace rrosc {

std::string_view to_string(BasisKind kind) {
  return kind == BasisKind::Trigonometric ? "trig" : "ho";
}

BasisKind parse_basis_kind(std::string_view text) {
  if (text == "trig" || text == "trigonometric") return BasisKind::Trigonometric;
  if (text == "ho" || text == "harmonic" || text == "harmonic-oscillator") {
    return BasisKind::HarmonicOscillator;
  }
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

void Basis1DSpec::validate() const {
  if (M < 1) throw std::invalid_argument("basis size M must be >= 1");
  if (!(alpha > 0)) throw std::invalid_argument("basis parameter must be > 0");
}

int quantum_number(BasisKind kind, int index) {
  return kind == BasisKind::Trigonometric ? index : 2 * index;
}

int kinetic_scaling(BasisKind kind) {
  return kind == BasisKind::Trigonometric ? -2 : 1;
}
int x2_scaling(BasisKind kind) { return kind == BasisKind::Trigonometric ? 2 : -1; }
int x4_scaling(BasisKind kind) { return kind == BasisKind::Trigonometric ? 4 : -2; }

namespace {

// Exact value sum_p q_p pi^p for p in {-4, -2, 0, 2}; slot k holds p = 2k - 4.
struct PiSeries {
  std::array<Rational, 4> q{};

  Rational& at(int power) { return q[static_cast<std::size_t>((power + 4) / 2)]; }

  PiSeries& operator+=(const PiSeries& o) {
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += o.q[k];
    return *this;
  }
  PiSeries scaled(const Rational& s) const {
    PiSeries r = *this;
    for (auto& v : r.q) v *= s;
    return r;
  }
};

struct PiPowers {
  std::array<Real, 4> p;  // pi^-4, pi^-2, 1, pi^2

  explicit PiPowers(const PrecisionContext& ctx) {
    const Real pi = ctx.pi();
    const Real pi2 = pi * pi;
    p = {1 / (pi2 * pi2), 1 / pi2, ctx.real(1L), pi2};
  }

  Real evaluate(const PiSeries& s, const PrecisionContext& ctx) const {
    Real sum = ctx.real(0L);
    for (std::size_t k = 0; k < 4; ++k) {
      if (s.q[k] != 0) sum += ctx.real(s.q[k]) * p[k];
    }
    return sum;
  }
};

Rational parity(long j) { return (j % 2 == 0) ? Rational(1) : Rational(-1); }

// int_{-1}^{1} u^2 cos(j pi u) du
PiSeries moment2(long j) {
  PiSeries s;
  if (j == 0) {
    s.at(0) = Rational(2, 3);
  } else {
    s.at(-2) = parity(j) * Rational(4, j * j);
  }
  return s;
}

// int_{-1}^{1} u^4 cos(j pi u) du
PiSeries moment4(long j) {
  PiSeries s;
  if (j == 0) {
    s.at(0) = Rational(2, 5);
  } else {
    s.at(-2) = parity(j) * Rational(8, j * j);
    s.at(-4) = parity(j) * Rational(-48) / Rational(Integer(j) * j * j * j);
  }
  return s;
}

// (1/L) int_{-L}^{L} x^k cos(a x) cos(b x) dx / L^k with a = (n+1/2)pi/L,
// b = (m+1/2)pi/L; the product of cosines splits into j = n-m and n+m+1.
PiSeries trig_moment(int power, long n, long m) {
  auto moment = power == 2 ? moment2 : moment4;
  PiSeries s = moment(n - m);
  s += moment(n + m + 1);
  return s.scaled(Rational(1, 2));
}

enum class Operator { Kinetic, X2, X4 };

SymmetricMatrix trig_matrix(Operator op, const Basis1DSpec& spec,
                            const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const PiPowers pi(ctx);
  const Real L = ctx.real(spec.alpha);
  SymmetricMatrix out(static_cast<std::size_t>(spec.M), ctx);
  for (int i = 0; i < spec.M; ++i) {
    if (op == Operator::Kinetic) {
      PiSeries s;
      s.at(2) = Rational((2 * i + 1) * (2 * i + 1), 4);
      out.set(i, i, pi.evaluate(s, ctx) / (L * L));
      continue;
    }
    for (int j = i; j < spec.M; ++j) {
      const int power = op == Operator::X2 ? 2 : 4;
      const Real scale = pow(L, power);
      out.set(i, j, pi.evaluate(trig_moment(power, i, j), ctx) * scale);
    }
  }
  return out;
}

// q * sqrt(radicand)
Real surd(const Rational& q, long radicand, const PrecisionContext& ctx) {
  if (radicand == 1) return ctx.real(q);
  return ctx.real(q) * sqrt(ctx.real(radicand));
}

SymmetricMatrix ho_matrix(Operator op, const Basis1DSpec& spec,
                          const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real w = ctx.real(spec.alpha);
  SymmetricMatrix out(static_cast<std::size_t>(spec.M), ctx);
  for (int i = 0; i < spec.M; ++i) {
    const long n = quantum_number(BasisKind::HarmonicOscillator, i);
    const long up2 = (n + 1) * (n + 2);
    const bool has1 = i + 1 < spec.M;
    const bool has2 = i + 2 < spec.M;
    switch (op) {
      case Operator::Kinetic:
        out.set(i, i, surd(Rational(2 * n + 1, 2), 1, ctx) * w);
        if (has1) out.set(i, i + 1, surd(Rational(-1, 2), up2, ctx) * w);
        break;
      case Operator::X2:
        out.set(i, i, surd(Rational(2 * n + 1, 2), 1, ctx) / w);
        if (has1) out.set(i, i + 1, surd(Rational(1, 2), up2, ctx) / w);
        break;
      case Operator::X4: {
        const Real w2 = w * w;
        out.set(i, i, surd(Rational(6 * n * n + 6 * n + 3, 4), 1, ctx) / w2);
        if (has1) out.set(i, i + 1, surd(Rational(4 * n + 6, 4), up2, ctx) / w2);
        if (has2) {
          out.set(i, i + 2, surd(Rational(1, 4), up2 * (n + 3) * (n + 4), ctx) / w2);
        }
        break;
      }
    }
  }
  return out;
}

SymmetricMatrix build(Operator op, const Basis1DSpec& spec,
                      const PrecisionContext& ctx) {
  spec.validate();
  return spec.kind == BasisKind::Trigonometric ? trig_matrix(op, spec, ctx)
                                               : ho_matrix(op, spec, ctx);
}

}  // namespace

SymmetricMatrix kinetic_matrix(const Basis1DSpec& spec, const PrecisionContext& ctx) {
  return build(Operator::Kinetic, spec, ctx);
}

SymmetricMatrix x2_matrix(const Basis1DSpec& spec, const PrecisionContext& ctx) {
  return build(Operator::X2, spec, ctx);
}

SymmetricMatrix x4_matrix(const Basis1DSpec& spec, const PrecisionContext& ctx) {
  return build(Operator::X4, spec, ctx);
}

}  // namespace rrosc
