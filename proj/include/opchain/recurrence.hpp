#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "opchain/gamma.hpp"
#include "opchain/polynomial.hpp"
#include "opchain/report.hpp"
#include "opchain/stream.hpp"

namespace opchain {

/// Recurrence data of a monic OPS:
///   P_{n+1}(x) = (x - b_{n+1}) P_n(x) - a_n^2 P_{n-1}(x),  P_{-1} = 0, P_0 = 1.
/// Both streams are indexed from 1.
template <ScalarType T>
struct ThreeTermSystem {
  Stream<T> b;
  Stream<T> a2;
  std::optional<ClosedForm> closed_form;

  /// Largest n for which P_n is computable from the available coefficients.
  std::optional<std::size_t> depth() const {
    auto a_last = a2.last();
    if (a_last) a_last = *a_last + 1;
    return min_last(b.last(), a_last);
  }
};

/// Symmetric OPS: S_n(x) = x S_{n-1}(x) - nu_n S_{n-2}(x). nu_1 only multiplies
/// S_{-1} = 0; positivity of nu_n is not enforced here.
template <ScalarType T>
struct SymmetricSystem {
  Stream<T> nu;
};

/// Coefficients c_0, c_1, ... of c_0/x + c_1/x^2 + ... truncated at `order` terms.
template <ScalarType T>
struct LaurentSeries {
  std::size_t order = 0;
  std::vector<T> coeffs;
};

inline ThreeTermSystem<double> to_float(const ThreeTermSystem<Rational>& sys) {
  auto cast = [](const Rational& v) { return v.to_double(); };
  return {sys.b.template map<double>(cast), sys.a2.template map<double>(cast), sys.closed_form};
}

/// P_0, ..., P_n.
template <ScalarType T>
std::vector<Polynomial<T>> monic_sequence(const ThreeTermSystem<T>& sys, std::size_t n) {
  std::vector<Polynomial<T>> out;
  out.reserve(n + 1);
  out.push_back(Polynomial<T>::constant(T(1)));
  Polynomial<T> prev;
  for (std::size_t k = 0; k < n; ++k) {
    auto next = (out.back().times_x() - out.back() * sys.b.at(k + 1));
    if (k >= 1) next -= prev * sys.a2.at(k);
    prev = out.back();
    out.push_back(std::move(next));
  }
  return out;
}

template <ScalarType T>
Polynomial<T> monic_eval(const ThreeTermSystem<T>& sys, std::size_t n) {
  return monic_sequence(sys, n).back();
}

/// Associated polynomials P^(1)_0 = 0, P^(1)_1 = 1, ..., P^(1)_n: the same
/// recurrence started from z_0 = 0, z_1 = 1.
template <ScalarType T>
std::vector<Polynomial<T>> associated_sequence(const ThreeTermSystem<T>& sys, std::size_t n) {
  std::vector<Polynomial<T>> out;
  out.reserve(n + 1);
  out.emplace_back();
  if (n == 0) return out;
  out.push_back(Polynomial<T>::constant(T(1)));
  for (std::size_t k = 1; k < n; ++k) {
    auto next = out[k].times_x() - out[k] * sys.b.at(k + 1) - out[k - 1] * sys.a2.at(k);
    out.push_back(std::move(next));
  }
  return out;
}

template <ScalarType T>
Polynomial<T> associated_eval(const ThreeTermSystem<T>& sys, std::size_t n) {
  return associated_sequence(sys, n).back();
}

/// S_0, ..., S_n.
template <ScalarType T>
std::vector<Polynomial<T>> symmetric_sequence(const SymmetricSystem<T>& sym, std::size_t n) {
  std::vector<Polynomial<T>> out;
  out.reserve(n + 1);
  out.push_back(Polynomial<T>::constant(T(1)));
  for (std::size_t k = 1; k <= n; ++k) {
    const T nu = sym.nu.at(k);
    auto next = out[k - 1].times_x();
    if (k >= 2) next -= out[k - 2] * nu;
    out.push_back(std::move(next));
  }
  return out;
}

template <ScalarType T>
Polynomial<T> symmetric_eval(const SymmetricSystem<T>& sym, std::size_t n) {
  return symmetric_sequence(sym, n).back();
}

/// mu_0/mu_0, ..., mu_k/mu_0 as the (1,1) entries of powers of the truncated
/// monic Jacobi matrix. A walk of length j from the first row and back never
/// leaves the leading floor(j/2)+1 block, so that block is exact.
template <ScalarType T>
std::vector<T> moment_sequence(const ThreeTermSystem<T>& sys, std::size_t k) {
  std::vector<T> out{T(1)};
  if (k == 0) return out;
  const std::size_t m = k / 2 + 1;
  std::vector<T> diag, sub;
  for (std::size_t i = 1; i <= m; ++i) diag.push_back(sys.b.at(i));
  for (std::size_t i = 1; i < m; ++i) sub.push_back(sys.a2.at(i));

  // row = e_1^T J^j, updated by right-multiplication with J.
  std::vector<T> row(m, T(0));
  row[0] = T(1);
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<T> next(m, T(0));
    for (std::size_t c = 0; c < m; ++c) {
      T v = row[c] * diag[c];
      if (c >= 1) v += row[c - 1];
      if (c + 1 < m) v += row[c + 1] * sub[c];
      next[c] = std::move(v);
    }
    row = std::move(next);
    out.push_back(row[0]);
  }
  return out;
}

template <ScalarType T>
T moments(const ThreeTermSystem<T>& sys, std::size_t k) {
  return moment_sequence(sys, k).back();
}

/// n-th convergent (P^(1)_n, P_n) of the Jacobi continued fraction.
template <ScalarType T>
std::pair<Polynomial<T>, Polynomial<T>> convergent(const ThreeTermSystem<T>& sys, std::size_t n) {
  return {associated_eval(sys, n), monic_eval(sys, n)};
}

/// Expansion of num/den at infinity, by long division in 1/x.
template <ScalarType T>
LaurentSeries<T> laurent_expand(const Polynomial<T>& num, const Polynomial<T>& den, std::size_t order) {
  if (!den.is_monic()) throw Error(Errc::DegreeViolation, "denominator must be monic");
  if (num.degree() >= den.degree()) throw Error(Errc::DegreeViolation, "numerator degree must be below denominator degree");
  const long d = den.degree();
  LaurentSeries<T> out;
  out.order = order;
  out.coeffs.reserve(order);
  for (std::size_t j = 0; j < order; ++j) {
    const long idx = d - 1 - static_cast<long>(j);
    T c = idx >= 0 ? num[static_cast<std::size_t>(idx)] : T(0);
    for (std::size_t t = 1; t <= j && static_cast<long>(t) <= d; ++t) {
      c -= den[static_cast<std::size_t>(d - static_cast<long>(t))] * out.coeffs[j - t];
    }
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

/// Kernel polynomials K_n(0; x): b_{n+1} = gamma_{2n+2} + gamma_{2n+3},
/// a_n^2 = gamma_{2n+1} gamma_{2n+2}.
ThreeTermSystem<Rational> kernel_system(const GammaSeq& gamma);

/// Checks x K_m = P_{m+1} + gamma_{2m+2} P_m and K_m = P_m - gamma_{2m+1} K_{m-1}
/// for m = 0..n, with P the split-branch OPS (b_1 = gamma_2) and K from
/// kernel_system. `corruption` perturbs the gamma fed to the kernel side.
IdentityReport kernel_identity_check(const GammaSeq& gamma, std::size_t n,
                                     const std::optional<Corruption>& corruption = std::nullopt);

}  // namespace opchain
