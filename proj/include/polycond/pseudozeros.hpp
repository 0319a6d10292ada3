#ifndef POLYCOND_PSEUDOZEROS_HPP
#define POLYCOND_PSEUDOZEROS_HPP

// Weighted eps-pseudozero sets
//
//   Lambda_eps(p) = { z : exists Delta c with |Delta c_k| <= w_k eps and
//                         sum (c_k + Delta c_k) phi_k(z) = 0 }
//                 = { z : |p(z)| <= eps * sum_k w_k |phi_k(z)| }.
//
// The second form is what the grid evaluates; the witness perturbation
// realises the first form constructively at any given z.

#include "polycond/conditioning.hpp"
#include "polycond/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace polycond {

inline constexpr std::size_t kDefaultGrid = 512;

/// Nonnegative coefficient weights, not all zero.
template <RealScalar T>
struct WeightVector {
  std::vector<T> w;

  explicit WeightVector(std::vector<T> weights) : w(std::move(weights))
  {
    bool any_positive = false;
    for (const T& v : w) {
      if (v < 0)
        throw ArgumentError("weights must be nonnegative");
      any_positive = any_positive || v > 0;
    }
    if (!any_positive)
      throw DegenerateInputError("weights must not all be zero");
  }

  /// w_k = |c_k|, the relative-perturbation weights.
  static WeightVector relative(const Polynomial<T>& p) { return WeightVector(abs_coefficients(p.coeffs)); }

  std::size_t size() const { return w.size(); }
};

struct Region {
  double re_min = -1;
  double re_max = 1;
  double im_min = -1;
  double im_max = 1;
};

struct ContourSet {
  double level = 0;
  std::vector<Polyline> polylines;
};

struct PseudozeroField {
  std::string label;
  Region region;
  std::size_t nx = 0;
  std::size_t ny = 0;
  unsigned digits = 0;
  /// Descending eps values.
  std::vector<double> levels;
  /// log10(|p(z)| / B_w(z)), row-major: index j * nx + i, i along Re, j along Im.
  std::vector<double> values_log10;
  /// One entry per level, polylines in complex-plane coordinates (x = Re, y = Im).
  std::vector<ContourSet> contours;
  /// Grid points whose indicator is below the smallest level.
  std::vector<std::uint8_t> interior_mask;

  double value(std::size_t i, std::size_t j) const { return values_log10[j * nx + i]; }

  /// Grid points in Lambda_eps (indicator <= eps).
  std::vector<std::uint8_t> mask(double level) const
  {
    const double threshold = std::log10(level);
    std::vector<std::uint8_t> m(values_log10.size());
    for (std::size_t k = 0; k < m.size(); ++k)
      m[k] = values_log10[k] <= threshold ? 1 : 0;
    return m;
  }
};

template <RealScalar T, class X>
T weighted_condition(const Polynomial<T>& p, const X& z, const WeightVector<T>& w)
{
  if (w.size() != p.size())
    throw ArgumentError("weight count does not match coefficient count");
  T b = weighted_abs_sum(p.basis, w.w, z);
  if (b == 0)
    throw DegenerateInputError("B_w(z) = 0: weights vanish on every nonzero basis function");
  return b;
}

/// |p(z)| / B_w(z); z lies in Lambda_eps exactly when this is <= eps.
template <RealScalar T, class X>
T indicator(const Polynomial<T>& p, const X& z, const WeightVector<T>& w)
{
  T b = weighted_condition(p, z, w);
  return T(magnitude(eval(p, z)) / b);
}

/// Minimal perturbation making z an exact zero:
///   Delta c_k = -p(z) w_k conj(phi_k(z)) / (|phi_k(z)| B_w(z)),
/// and 0 where phi_k(z) = 0. Then |Delta c_k| = w_k * indicator(p, z, w).
inline std::vector<Complex<BigFloat>> witness_perturbation(const Polynomial<BigFloat>& p,
                                                           const Complex<BigFloat>& z,
                                                           const WeightVector<BigFloat>& w)
{
  using C = Complex<BigFloat>;
  if (w.size() != p.size())
    throw ArgumentError("weight count does not match coefficient count");
  auto phi = p.basis.values(z);
  std::vector<BigFloat> mag(phi.size());
  BigFloat b = 0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    mag[k] = magnitude(phi[k]);
    b += w.w[k] * mag[k];
  }
  if (b == 0)
    throw DegenerateInputError("B_w(z) = 0: weights vanish on every nonzero basis function");
  C pz = eval(p, z);
  std::vector<C> dc(phi.size(), C(BigFloat(0)));
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (mag[k] == 0 || w.w[k] == 0)
      continue;
    BigFloat scale = w.w[k] / (mag[k] * b);
    C term = pz * conj(phi[k]);
    dc[k] = C(BigFloat(-term.re * scale), BigFloat(-term.im * scale));
  }
  return dc;
}

/// |sum_k (c_k + Delta c_k) phi_k(z)|.
inline BigFloat perturbed_residual(const Polynomial<BigFloat>& p, const Complex<BigFloat>& z,
                                   const std::vector<Complex<BigFloat>>& dc)
{
  using C = Complex<BigFloat>;
  if (dc.size() != p.size())
    throw ArgumentError("perturbation size does not match coefficient count");
  auto phi = p.basis.values(z);
  C acc(BigFloat(0));
  for (std::size_t k = 0; k < phi.size(); ++k)
    acc += (C(p.coeffs[k]) + dc[k]) * phi[k];
  return magnitude(acc);
}

namespace detail {

/// ceil() that ignores rounding noise in log10 of exact powers of ten.
inline double ceil_decades(double x) { return std::ceil(x - 1e-9); }

} // namespace detail

/// Working precision for pseudozero grids:
/// max(60, 20 + ceil(-log10 min level) + ceil(log10 max |c_k|)).
template <RealScalar T>
unsigned pseudozero_digits(const Polynomial<T>& p, std::span<const double> levels)
{
  double min_level = levels.empty() ? 1.0 : *std::min_element(levels.begin(), levels.end());
  double cmax = -std::numeric_limits<double>::infinity();
  for (const T& c : p.coeffs) {
    if (c != 0)
      cmax = std::max(cmax, log10_abs(c));
  }
  double need = 20.0 + detail::ceil_decades(-std::log10(min_level)) +
                (std::isfinite(cmax) ? detail::ceil_decades(cmax) : 0.0);
  return static_cast<unsigned>(std::max(60.0, need));
}

namespace detail {

inline void validate_levels(std::span<const double> levels, unsigned digits)
{
  if (levels.empty())
    throw ArgumentError("at least one contour level required");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!(levels[k] > 0) || !std::isfinite(levels[k]))
      throw ArgumentError("contour levels must be positive");
    if (k > 0 && !(levels[k] < levels[k - 1]))
      throw ArgumentError("contour levels must be sorted in descending order");
  }
  if (std::log10(levels.back()) < -static_cast<double>(digits) + 10.0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", levels.back());
    throw PrecisionError(std::string("level ") + buf + " needs more than " +
                         std::to_string(digits) + " digits; rerun with --precision " +
                         std::to_string(static_cast<unsigned>(ceil_decades(-std::log10(levels.back()))) + 20));
  }
}

/// lo + (hi - lo) k / (n - 1), exact from the double endpoints so that
/// symmetric regions produce exactly mirrored grids.
inline Rational grid_coordinate(double lo, double hi, std::size_t k, std::size_t n)
{
  Rational a = to_rational(lo);
  Rational b = to_rational(hi);
  return (a * Rational(n - 1 - k) + b * Rational(k)) / Rational(n - 1);
}

inline double log10_indicator(const Polynomial<BigFloat>& p, const Complex<BigFloat>& z,
                              const std::vector<BigFloat>& w)
{
  BigFloat pz = magnitude(eval(p, z));
  if (pz == 0)
    return -std::numeric_limits<double>::infinity();
  BigFloat b = weighted_abs_sum(p.basis, w, z);
  if (b == 0)
    throw DegenerateInputError("B_w(z) = 0 on the grid");
  return log10_abs(pz) - log10_abs(b);
}

} // namespace detail

struct FieldOptions {
  Region region;
  std::size_t nx = kDefaultGrid;
  std::size_t ny = kDefaultGrid;
  std::vector<double> levels;
  /// 0 selects pseudozero_digits().
  unsigned digits = 0;
  std::string label = "pseudozeros";
};

/// Samples log10 indicator on the region grid and extracts each level's
/// contours by marching squares in log10 space.
template <RealScalar T>
PseudozeroField pseudozero_field(const Polynomial<T>& p, const FieldOptions& opts,
                                 std::type_identity_t<std::optional<WeightVector<T>>> weights = std::nullopt)
{
  if (opts.nx < 16 || opts.ny < 16)
    throw ArgumentError("pseudozero grid must be at least 16x16");
  if (!(opts.region.re_min < opts.region.re_max) || !(opts.region.im_min < opts.region.im_max))
    throw ArgumentError("pseudozero region must have positive extent");
  const unsigned digits = opts.digits ? opts.digits : pseudozero_digits(p, opts.levels);
  detail::validate_levels(opts.levels, digits);

  PrecisionScope scope(digits);
  Polynomial<BigFloat> q = [&] {
    if constexpr (is_exact_v<T>)
      return to_bigfloat(p, digits);
    else
      return p;
  }();
  std::vector<BigFloat> w;
  if (weights) {
    if (weights->size() != p.size())
      throw ArgumentError("weight count does not match coefficient count");
    for (const T& v : weights->w) {
      if constexpr (is_exact_v<T>)
        w.push_back(to_bigfloat(v, digits));
      else
        w.push_back(v);
    }
  } else {
    w = abs_coefficients(q.coeffs);
  }

  PseudozeroField field;
  field.label = opts.label;
  field.region = opts.region;
  field.nx = opts.nx;
  field.ny = opts.ny;
  field.digits = digits;
  field.levels = opts.levels;

  std::vector<Rational> re(opts.nx);
  std::vector<Rational> im(opts.ny);
  for (std::size_t i = 0; i < opts.nx; ++i)
    re[i] = detail::grid_coordinate(opts.region.re_min, opts.region.re_max, i, opts.nx);
  for (std::size_t j = 0; j < opts.ny; ++j)
    im[j] = detail::grid_coordinate(opts.region.im_min, opts.region.im_max, j, opts.ny);
  std::vector<BigFloat> re_f;
  std::vector<BigFloat> im_f;
  for (const auto& v : re)
    re_f.push_back(to_bigfloat(v, digits));
  for (const auto& v : im)
    im_f.push_back(to_bigfloat(v, digits));

  field.values_log10.resize(opts.nx * opts.ny);
  for (std::size_t j = 0; j < opts.ny; ++j) {
    for (std::size_t i = 0; i < opts.nx; ++i)
      field.values_log10[j * opts.nx + i] = detail::log10_indicator(q, Complex<BigFloat>(re_f[i], im_f[j]), w);
  }

  auto center = [&](std::size_t i, std::size_t j) {
    Rational cr = (re[i] + re[i + 1]) / 2;
    Rational ci = (im[j] + im[j + 1]) / 2;
    return detail::log10_indicator(q, Complex<BigFloat>(to_bigfloat(cr, digits), to_bigfloat(ci, digits)), w);
  };
  const double dx = (opts.region.re_max - opts.region.re_min) / static_cast<double>(opts.nx - 1);
  const double dy = (opts.region.im_max - opts.region.im_min) / static_cast<double>(opts.ny - 1);
  for (double level : opts.levels) {
    ContourSet set;
    set.level = level;
    set.polylines = marching_squares(field.values_log10, opts.nx, opts.ny, std::log10(level), center);
    for (auto& line : set.polylines) {
      for (auto& pt : line.points) {
        pt.x = opts.region.re_min + pt.x * dx;
        pt.y = opts.region.im_min + pt.y * dy;
      }
    }
    field.contours.push_back(std::move(set));
  }
  field.interior_mask = field.mask(opts.levels.back());
  return field;
}

} // namespace polycond

#endif // POLYCOND_PSEUDOZEROS_HPP
