#pragma once

// Truncated Taylor arithmetic over complex numbers.
//
// A TaylorJet<N> holds the normalized Taylor coefficients c_k = f^(k)(z0)/k!
// for k = 0..N. Arithmetic propagates them with the usual series recurrences,
// which is equivalent to the product/quotient/chain rules through order N.
// ComplexJet (N = 3) is the public carrier: value and three derivatives.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "univalence/error.hpp"

namespace univalence {

/// Components with magnitude above this abort the operation (NonFiniteJet).
inline constexpr double kJetMagnitudeLimit = 1e300;

/// Distance to the principal branch cut below which log/pow refuse to run.
inline constexpr double kBranchCutGuard = 1e-12;

namespace detail {

inline constexpr double factorial(std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<double>(i);
  return r;
}

}  // namespace detail

template <std::size_t N>
class TaylorJet {
 public:
  static constexpr std::size_t order = N;
  using Coefficients = std::array<cplx, N + 1>;

  TaylorJet() { coeffs_.fill(cplx{0.0, 0.0}); }

  static TaylorJet constant(cplx value) {
    TaylorJet j;
    j.coeffs_[0] = value;
    return j;
  }

  /// Jet of the identity map at z.
  static TaylorJet variable(cplx z) {
    TaylorJet j;
    j.coeffs_[0] = z;
    if constexpr (N >= 1) j.coeffs_[1] = 1.0;
    return j;
  }

  static TaylorJet from_coefficients(const Coefficients& c) {
    TaylorJet j;
    j.coeffs_ = c;
    return j;
  }

  static TaylorJet from_derivatives(const Coefficients& d) {
    TaylorJet j;
    for (std::size_t k = 0; k <= N; ++k) j.coeffs_[k] = d[k] / detail::factorial(k);
    return j;
  }

  cplx value() const { return coeffs_[0]; }
  cplx coefficient(std::size_t k) const { return coeffs_[k]; }
  cplx derivative(std::size_t k) const { return coeffs_[k] * detail::factorial(k); }
  const Coefficients& coefficients() const { return coeffs_; }

  cplx d1() const requires(N >= 1) { return derivative(1); }
  cplx d2() const requires(N >= 2) { return derivative(2); }
  cplx d3() const requires(N >= 3) { return derivative(3); }

  /// Jet of f' at the same point, one order shorter.
  TaylorJet<N - 1> differentiate() const requires(N >= 1) {
    typename TaylorJet<N - 1>::Coefficients c;
    for (std::size_t k = 0; k < N; ++k) c[k] = coeffs_[k + 1] * static_cast<double>(k + 1);
    return TaylorJet<N - 1>::from_coefficients(c);
  }

  /// Drops orders above M.
  template <std::size_t M>
  TaylorJet<M> truncate() const requires(M <= N) {
    typename TaylorJet<M>::Coefficients c;
    for (std::size_t k = 0; k <= M; ++k) c[k] = coeffs_[k];
    return TaylorJet<M>::from_coefficients(c);
  }

  bool is_finite() const {
    for (std::size_t k = 0; k <= N; ++k) {
      const cplx d = derivative(k);
      if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) return false;
      if (std::abs(d) > kJetMagnitudeLimit) return false;
    }
    return true;
  }

  TaylorJet operator-() const {
    TaylorJet r;
    for (std::size_t k = 0; k <= N; ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
  }

  TaylorJet& operator+=(const TaylorJet& b) {
    for (std::size_t k = 0; k <= N; ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
  }
  TaylorJet& operator-=(const TaylorJet& b) {
    for (std::size_t k = 0; k <= N; ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
  }
  TaylorJet& operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  TaylorJet& operator+=(cplx s) {
    coeffs_[0] += s;
    return *this;
  }

  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator+(TaylorJet a, cplx s) { return a += s; }
  friend TaylorJet operator+(cplx s, TaylorJet a) { return a += s; }
  friend TaylorJet operator-(TaylorJet a, cplx s) { return a += -s; }
  friend TaylorJet operator-(cplx s, const TaylorJet& a) { return (-a) += s; }
  friend TaylorJet operator*(TaylorJet a, cplx s) { return a *= s; }
  friend TaylorJet operator*(cplx s, TaylorJet a) { return a *= s; }

  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet r;
    for (std::size_t k = 0; k <= N; ++k) {
      cplx s{0.0, 0.0};
      for (std::size_t j = 0; j <= k; ++j) s += a.coeffs_[j] * b.coeffs_[k - j];
      r.coeffs_[k] = s;
    }
    return r;
  }

  friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
    if (b.coeffs_[0] == cplx{0.0, 0.0}) {
      throw Error(ErrorKind::DivisionByZeroJet, "divisor jet has zero value");
    }
    TaylorJet q;
    for (std::size_t k = 0; k <= N; ++k) {
      cplx s = a.coeffs_[k];
      for (std::size_t j = 1; j <= k; ++j) s -= b.coeffs_[j] * q.coeffs_[k - j];
      q.coeffs_[k] = s / b.coeffs_[0];
    }
    return q;
  }

  friend TaylorJet operator/(const TaylorJet& a, cplx s) {
    if (s == cplx{0.0, 0.0}) throw Error(ErrorKind::DivisionByZeroJet, "division by zero scalar");
    TaylorJet r = a;
    for (auto& c : r.coeffs_) c /= s;
    return r;
  }

  friend TaylorJet operator/(cplx s, const TaylorJet& b) { return constant(s) / b; }

 private:
  Coefficients coeffs_;
};

using ComplexJet = TaylorJet<3>;

/// Throws NonFiniteJet when any derivative is NaN, infinite, or beyond 1e300.
template <std::size_t N>
const TaylorJet<N>& require_finite(const TaylorJet<N>& j) {
  if (!j.is_finite()) throw Error(ErrorKind::NonFiniteJet, "jet component overflow or NaN");
  return j;
}

/// True when z lies within kBranchCutGuard of (-inf, 0].
inline bool near_principal_cut(cplx z) {
  const double dist = z.real() <= 0.0 ? std::abs(z.imag()) : std::abs(z);
  return dist <= kBranchCutGuard;
}

template <std::size_t N>
TaylorJet<N> exp(const TaylorJet<N>& a) {
  typename TaylorJet<N>::Coefficients e;
  e[0] = std::exp(a.coefficient(0));
  for (std::size_t k = 1; k <= N; ++k) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 1; j <= k; ++j) {
      s += static_cast<double>(j) * a.coefficient(j) * e[k - j];
    }
    e[k] = s / static_cast<double>(k);
  }
  return require_finite(TaylorJet<N>::from_coefficients(e));
}

/// Logarithm whose value is pinned to `branch_value` (any logarithm of
/// a.value()); higher coefficients do not depend on the branch.
template <std::size_t N>
TaylorJet<N> log_on_branch(const TaylorJet<N>& a, cplx branch_value) {
  const cplx a0 = a.coefficient(0);
  if (a0 == cplx{0.0, 0.0}) throw Error(ErrorKind::BranchCutViolation, "log of zero");
  typename TaylorJet<N>::Coefficients l;
  l[0] = branch_value;
  for (std::size_t k = 1; k <= N; ++k) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 1; j < k; ++j) {
      s += static_cast<double>(j) * l[j] * a.coefficient(k - j);
    }
    l[k] = (a.coefficient(k) - s / static_cast<double>(k)) / a0;
  }
  return require_finite(TaylorJet<N>::from_coefficients(l));
}

/// Principal-branch logarithm; refuses arguments on or near (-inf, 0].
template <std::size_t N>
TaylorJet<N> log(const TaylorJet<N>& a) {
  if (near_principal_cut(a.value())) {
    throw Error(ErrorKind::BranchCutViolation, "log argument on principal branch cut", a.value());
  }
  return log_on_branch(a, std::log(a.value()));
}

/// Principal-branch power a^p = exp(p log a).
template <std::size_t N>
TaylorJet<N> pow(const TaylorJet<N>& a, cplx exponent) {
  if (near_principal_cut(a.value())) {
    throw Error(ErrorKind::BranchCutViolation, "pow base on principal branch cut", a.value());
  }
  return exp(exponent * log(a));
}

/// Relative size of f' below which a point counts as critical.
inline constexpr double kCriticalPointTolerance = 1e-13;

/// True when f' at `at` is negligible next to the natural scale |f| / |at|
/// (and next to 1), so that rounding cannot hide a genuine zero of f'.
template <std::size_t N>
bool is_critical(const TaylorJet<N>& jet, cplx at) requires(N >= 1) {
  const double r = std::abs(at);
  const double scale = std::max(1.0, r > 0.0 ? std::abs(jet.value()) / r : 0.0);
  return std::abs(jet.derivative(1)) <= kCriticalPointTolerance * scale;
}

enum class JetOp { add, sub, mul, div, exp, log, pow };

/// Binary and unary jet combinations; unary kinds ignore `b`.
ComplexJet jet_combine(JetOp op, const ComplexJet& a, const ComplexJet& b = ComplexJet{});

/// pow with a complex exponent (op must be JetOp::pow).
ComplexJet jet_combine(JetOp op, const ComplexJet& a, cplx exponent);

}  // namespace univalence
