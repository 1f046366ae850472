#include "opchain/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace opchain {

TridiagonalMatrix<Rational> BidiagonalFactors::product() const {
  TridiagonalMatrix<Rational> out;
  const std::size_t n = u_diag.size();
  for (std::size_t k = 0; k < n; ++k) out.diag.push_back(k == 0 ? u_diag[0] : u_diag[k] + l_sub[k - 1]);
  for (std::size_t k = 0; k + 1 < n; ++k) out.sub.push_back(l_sub[k] * u_diag[k]);
  return out;
}

TridiagonalMatrix<Rational> BidiagonalFactors::reconstruct() const {
  auto out = product();
  if (!out.diag.empty()) out.diag[0] += gamma1;
  return out;
}

BidiagonalFactors lu_factor(const TridiagonalMatrix<Rational>& J, const Rational& gamma1) {
  if (gamma1.sign() < 0) throw Error(Errc::InvalidGamma1, "gamma_1 must be >= 0");
  BidiagonalFactors f;
  f.gamma1 = gamma1;
  const std::size_t n = J.size();
  for (std::size_t k = 0; k < n; ++k) {
    Rational pivot = J.diag[k] - (k == 0 ? gamma1 : f.l_sub[k - 1]);
    if (pivot.sign() <= 0) throw Error(Errc::PivotBreakdown, "non-positive pivot " + pivot.str(), k + 1);
    if (k + 1 < n) f.l_sub.push_back(J.sub[k] / pivot);
    f.u_diag.push_back(std::move(pivot));
  }
  return f;
}

TridiagonalMatrix<Rational> ul_product(const BidiagonalFactors& f) {
  TridiagonalMatrix<Rational> out;
  const std::size_t n = f.u_diag.size();
  for (std::size_t k = 0; k < n; ++k) out.diag.push_back(k + 1 < n ? f.u_diag[k] + f.l_sub[k] : f.u_diag[k]);
  for (std::size_t k = 0; k + 1 < n; ++k) out.sub.push_back(f.u_diag[k + 1] * f.l_sub[k]);
  return out;
}

namespace {

constexpr double kPivotFloor = 1e-300;

// Number of eigenvalues strictly below x.
std::size_t count_below(const std::vector<double>& d, const std::vector<double>& e2, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    q = d[k] - x - (k == 0 ? 0.0 : e2[k - 1] / q);
    if (std::abs(q) < kPivotFloor) q = -kPivotFloor;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

std::vector<Zero> zeros(const ThreeTermSystem<double>& sys, std::size_t n, double tol) {
  if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  std::vector<double> d, e;
  for (std::size_t k = 1; k <= n; ++k) d.push_back(sys.b.at(k));
  for (std::size_t k = 1; k < n; ++k) {
    const double a2 = sys.a2.at(k);
    if (!(a2 > 0)) throw Error(Errc::NonPositiveA2, "a_k^2 must be positive", k);
    e.push_back(std::sqrt(a2));
  }
  std::vector<double> e2;
  for (double v : e) e2.push_back(v * v);

  double lo = 0.0, hi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = (k > 0 ? e[k - 1] : 0.0) + (k + 1 < n ? e[k] : 0.0);
    lo = k == 0 ? d[k] - r : std::min(lo, d[k] - r);
    hi = k == 0 ? d[k] + r : std::max(hi, d[k] + r);
  }
  const double pad = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi))) + tol;
  lo -= pad;
  hi += pad;

  std::vector<Zero> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    double a = out.empty() ? lo : out.back().value;
    double b = hi;
    if (count_below(d, e2, a) > j) a = lo;
    for (int iter = 0; iter < 400 && b - a > tol; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      (count_below(d, e2, mid) > j ? b : a) = mid;
    }
    out.push_back({0.5 * (a + b), b - a});
  }
  return out;
}

std::vector<Zero> zeros(const ThreeTermSystem<Rational>& sys, std::size_t n, double tol) {
  for (std::size_t k = 1; k < n; ++k) {
    if (sys.a2.at(k).sign() <= 0) throw Error(Errc::NonPositiveA2, "a_k^2 must be positive", k);
  }
  return zeros(to_float(sys), n, tol);
}

std::vector<double> zero_values(const std::vector<Zero>& zs) {
  std::vector<double> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(z.value);
  return out;
}

std::string InterlaceVerdict::label() const {
  if (interlaced) return "Interlaced";
  return "NotInterlaced(" + std::to_string(witness.value_or(0)) + ")";
}

InterlaceVerdict interlace_check(const std::vector<double>& xs, const std::vector<double>& ys, double tol) {
  if (xs.size() != ys.size()) throw Error(Errc::LengthMismatch, "sequences differ in length");
  InterlaceVerdict out;
  if (xs.empty()) {
    out.interlaced = true;
    return out;
  }
  const bool x_first = xs[0] < ys[0];
  const auto& first = x_first ? xs : ys;
  const auto& second = x_first ? ys : xs;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const bool ok = first[j] + tol < second[j] && (j + 1 == xs.size() || second[j] + tol < first[j + 1]);
    if (!ok) {
      out.witness = j + 1;
      return out;
    }
  }
  out.interlaced = true;
  return out;
}

}  // namespace opchain
