#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opchain/recurrence.hpp"

namespace opchain {

/// Leading n x n block of a monic Jacobi matrix: diagonal b_1..b_n,
/// subdiagonal a_1^2..a_{n-1}^2, superdiagonal all ones.
template <ScalarType T>
struct TridiagonalMatrix {
  std::vector<T> diag;
  std::vector<T> sub;

  std::size_t size() const { return diag.size(); }
  T trace() const {
    T acc(0);
    for (const auto& d : diag) acc += d;
    return acc;
  }

  friend bool operator==(const TridiagonalMatrix& lhs, const TridiagonalMatrix& rhs)
    requires scalar_traits<T>::exact
  {
    return lhs.diag == rhs.diag && lhs.sub == rhs.sub;
  }
};

template <ScalarType T>
TridiagonalMatrix<T> truncate(const ThreeTermSystem<T>& sys, std::size_t n) {
  TridiagonalMatrix<T> out;
  for (std::size_t k = 1; k <= n; ++k) out.diag.push_back(sys.b.at(k));
  for (std::size_t k = 1; k < n; ++k) out.sub.push_back(sys.a2.at(k));
  return out;
}

/// J = L U + gamma1 e_1 e_1^T with L unit lower bidiagonal (subdiagonal l_sub)
/// and U upper bidiagonal (diagonal u_diag, unit superdiagonal). For
/// gamma1 = 0 this is the plain LU factorisation; the pivots are gamma_2,
/// gamma_4, ... and l_sub is gamma_3, gamma_5, ...
struct BidiagonalFactors {
  std::vector<Rational> l_sub;
  std::vector<Rational> u_diag;
  Rational gamma1;

  /// L * U
  TridiagonalMatrix<Rational> product() const;
  /// L * U + gamma1 e_1 e_1^T, equal to the factored matrix.
  TridiagonalMatrix<Rational> reconstruct() const;
};

BidiagonalFactors lu_factor(const TridiagonalMatrix<Rational>& J, const Rational& gamma1);

/// U * L (Darboux step). For gamma1 = 0 this is the kernel Jacobi matrix except
/// the last diagonal entry, which is gamma_{2n} rather than gamma_{2n} + gamma_{2n+1}.
TridiagonalMatrix<Rational> ul_product(const BidiagonalFactors& f);

struct Zero {
  double value = 0.0;
  double bracket_width = 0.0;
};

/// Zeros of P_n, ascending, via Sturm-sequence bisection on the symmetrised
/// matrix (off-diagonals sqrt(a_k^2)). Throws NonPositiveA2.
std::vector<Zero> zeros(const ThreeTermSystem<double>& sys, std::size_t n, double tol);
std::vector<Zero> zeros(const ThreeTermSystem<Rational>& sys, std::size_t n, double tol);

std::vector<double> zero_values(const std::vector<Zero>& zs);

struct InterlaceVerdict {
  bool interlaced = false;
  /// 1-based index of the first pair breaking the alternation.
  std::optional<std::size_t> witness;

  std::string label() const;
};

/// Strict alternation x_1 < y_1 < x_2 < ... (or starting with y) with gaps > tol.
InterlaceVerdict interlace_check(const std::vector<double>& xs, const std::vector<double>& ys, double tol);

}  // namespace opchain
