#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "banproj/errors.hpp"

namespace banproj {

struct PrimalTag {};
struct DualTag {};

/// Immutable coordinate array tagged as living in X (PrimalTag) or X* (DualTag).
///
/// The tag keeps primal points and dual functionals from being mixed up at
/// compile time; arithmetic is only defined between vectors of the same tag.
/// Every coordinate is finite (checked on construction).
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }
  Coords(std::initializer_list<double> coords) : coords_(coords) { validate(); }

  static Coords zeros(std::size_t n) { return Coords(std::vector<double>(n, 0.0)); }

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& data() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  friend Coords operator+(const Coords& a, const Coords& b) { return combine(a, b, 1.0); }
  friend Coords operator-(const Coords& a, const Coords& b) { return combine(a, b, -1.0); }
  friend Coords operator-(const Coords& a) { return a * -1.0; }
  friend Coords operator*(double s, const Coords& a) { return a * s; }
  friend Coords operator*(const Coords& a, double s) {
    std::vector<double> out(a.coords_);
    for (double& c : out) c *= s;
    return Coords(std::move(out));
  }
  friend Coords operator/(const Coords& a, double s) { return a * (1.0 / s); }
  friend bool operator==(const Coords&, const Coords&) = default;

 private:
  static Coords combine(const Coords& a, const Coords& b, double sign) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    std::vector<double> out(a.coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * b.coords_[i];
    return Coords(std::move(out));
  }
  void validate() const;

  std::vector<double> coords_;
};

template <class Tag>
void Coords<Tag>::validate() const {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InvalidArgument("vector coordinates must be finite");
  }
}

template <class Tag>
bool Coords<Tag>::is_zero() const noexcept {
  for (double c : coords_) {
    if (c != 0.0) return false;
  }
  return true;
}

using PrimalVector = Coords<PrimalTag>;
using DualVector = Coords<DualTag>;

/// t*a + (1-t)*b, the parameterization used for segments throughout.
template <class Tag>
Coords<Tag> convex_combination(double t, const Coords<Tag>& a, const Coords<Tag>& b) {
  return t * a + (1.0 - t) * b;
}

/// Reinterpret coordinates in the other space. Only meaningful when p = 2 or
/// when a caller deliberately builds functionals from coordinate data.
DualVector as_dual(const PrimalVector& x);
PrimalVector as_primal(const DualVector& psi);

/// The finite-dimensional space l_p^n, 1 < p < infinity, with dual l_q^n.
///
/// Owns the semantics of the norm, the dual norm, the bilinear pairing, the
/// normalized duality map J: X -> X* and its inverse J*: X* -> X, and the
/// Lyapunov functional V(psi, x) = |psi|_q^2 - 2<psi, x> + |x|_p^2.
/// All members are pure and thread-safe.
class LpSpace {
 public:
  LpSpace(std::size_t n, double p);

  std::size_t n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  double norm(const PrimalVector& x) const;
  double dual_norm(const DualVector& psi) const;
  double pair(const DualVector& psi, const PrimalVector& x) const;

  /// (Jx)_i = |x|_p^{2-p} |x_i|^{p-1} sign(x_i); J(0) = 0.
  DualVector duality_map(const PrimalVector& x) const;
  /// (J*psi)_i = |psi|_q^{2-q} |psi_i|^{q-1} sign(psi_i); J*(0) = 0.
  PrimalVector inverse_duality_map(const DualVector& psi) const;

  double lyapunov(const DualVector& psi, const PrimalVector& x) const;

  void check_dimension(std::size_t size) const {
    if (size != n_) throw DimensionMismatch(n_, size);
  }

  friend bool operator==(const LpSpace&, const LpSpace&) = default;

 private:
  std::size_t n_;
  double p_;
  double q_;
};

namespace lp {

/// Scaled evaluation of (sum |v_i|^r)^{1/r}; avoids overflow for large entries.
double norm(std::span<const double> v, double r);

/// Coordinate form of the duality map of l_r: writes |v|^{2-r}|v_i|^{r-1}sign(v_i).
void duality_map(std::span<const double> v, double r, std::span<double> out);

}  // namespace lp

}  // namespace banproj
