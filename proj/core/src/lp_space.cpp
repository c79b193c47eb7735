#include "banproj/lp_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace banproj {

namespace lp {

double norm(std::span<const double> v, double r) {
  double scale = 0.0;
  for (double c : v) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  if (r == 2.0) {
    for (double c : v) {
      const double s = c / scale;
      sum += s * s;
    }
    return scale * std::sqrt(sum);
  }
  for (double c : v) sum += std::pow(std::abs(c) / scale, r);
  return scale * std::pow(sum, 1.0 / r);
}

void duality_map(std::span<const double> v, double r, std::span<double> out) {
  if (r == 2.0) {
    std::copy(v.begin(), v.end(), out.begin());
    return;
  }
  const double n = norm(v, r);
  if (n == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  // |v|^{2-r} |v_i|^{r-1} written as |v| (|v_i|/|v|)^{r-1} to stay in range.
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    const double mag = a == 0.0 ? 0.0 : n * std::pow(a / n, r - 1.0);
    out[i] = std::copysign(mag, v[i]);
  }
}

}  // namespace lp

DualVector as_dual(const PrimalVector& x) { return DualVector(x.data()); }
PrimalVector as_primal(const DualVector& psi) { return PrimalVector(psi.data()); }

LpSpace::LpSpace(std::size_t n, double p) : n_(n), p_(p), q_(0.0) {
  if (n == 0) throw InvalidArgument("dimension must be at least 1");
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw InvalidArgument("exponent p must be a finite real > 1, got " + std::to_string(p));
  }
  q_ = p / (p - 1.0);
}

double LpSpace::norm(const PrimalVector& x) const {
  check_dimension(x.size());
  return lp::norm(x.coords(), p_);
}

double LpSpace::dual_norm(const DualVector& psi) const {
  check_dimension(psi.size());
  return lp::norm(psi.coords(), q_);
}

double LpSpace::pair(const DualVector& psi, const PrimalVector& x) const {
  check_dimension(psi.size());
  check_dimension(x.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += psi[i] * x[i];
  return sum;
}

DualVector LpSpace::duality_map(const PrimalVector& x) const {
  check_dimension(x.size());
  std::vector<double> out(n_);
  lp::duality_map(x.coords(), p_, out);
  return DualVector(std::move(out));
}

PrimalVector LpSpace::inverse_duality_map(const DualVector& psi) const {
  check_dimension(psi.size());
  std::vector<double> out(n_);
  lp::duality_map(psi.coords(), q_, out);
  return PrimalVector(std::move(out));
}

double LpSpace::lyapunov(const DualVector& psi, const PrimalVector& x) const {
  const double a = dual_norm(psi);
  const double b = norm(x);
  const double value = a * a - 2.0 * pair(psi, x) + b * b;
  // Cancellation can leave a tiny negative residue when psi = Jx.
  return std::max(value, 0.0);
}

}  // namespace banproj
