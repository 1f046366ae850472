#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "opchain/errors.hpp"
#include "opchain/rational.hpp"

namespace opchain {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
template <ScalarType T>
class Polynomial {
 public:
  using scalar_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  /// x - root
  static Polynomial linear(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == T(1); }

  /// Coefficient of x^k (zero beyond the degree).
  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const T& c) { return p *= c; }
  friend Polynomial operator*(const T& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= T(-1); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (opchain::is_zero(p.coeffs_[i])) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  /// Exact coefficient-wise equality; only offered for the rational backend.
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs)
    requires scalar_traits<T>::exact
  {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// x * p(x)
  Polynomial times_x() const {
    if (is_zero()) return {};
    std::vector<T> out;
    out.reserve(coeffs_.size() + 1);
    out.push_back(T(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && opchain::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <ScalarType T>
Polynomial<T> poly_add(const Polynomial<T>& p, const Polynomial<T>& q) {
  return p + q;
}

template <ScalarType T>
Polynomial<T> poly_mul(const Polynomial<T>& p, const Polynomial<T>& q) {
  return p * q;
}

/// Horner evaluation.
template <ScalarType T>
T poly_eval(const Polynomial<T>& p, const T& x) {
  T acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// q with q(x^2) = p(x). Throws NonEvenPolynomial if p has an odd term.
template <ScalarType T>
Polynomial<T> even_part(const Polynomial<T>& p) {
  const auto& c = p.coeffs();
  std::vector<T> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      if (!is_zero(c[i])) throw Error(Errc::NonEvenPolynomial, "odd coefficient present", i);
    } else {
      out.push_back(c[i]);
    }
  }
  return Polynomial<T>(std::move(out));
}

/// q with x q(x^2) = p(x). Throws NonOddPolynomial if p has an even term.
template <ScalarType T>
Polynomial<T> odd_part(const Polynomial<T>& p) {
  const auto& c = p.coeffs();
  std::vector<T> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 0) {
      if (!is_zero(c[i])) throw Error(Errc::NonOddPolynomial, "even coefficient present", i);
    } else {
      out.push_back(c[i]);
    }
  }
  return Polynomial<T>(std::move(out));
}

/// p(x^2)
template <ScalarType T>
Polynomial<T> substitute_square(const Polynomial<T>& p) {
  if (p.is_zero()) return {};
  std::vector<T> out(2 * p.coeffs().size() - 1, T(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[2 * i] = p.coeffs()[i];
  return Polynomial<T>(std::move(out));
}

/// Largest absolute coefficient difference; the float-mode notion of equality.
template <ScalarType T>
double max_abs_diff(const Polynomial<T>& p, const Polynomial<T>& q) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(scalar_traits<T>::to_double(p[i]) - scalar_traits<T>::to_double(q[i])));
  }
  return worst;
}

inline Polynomial<double> to_float(const Polynomial<Rational>& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_double());
  return Polynomial<double>(std::move(out));
}

}  // namespace opchain
