#ifndef POLYCOND_CONDITIONING_HPP
#define POLYCOND_CONDITIONING_HPP

// Condition measures for polynomial evaluation and rootfinding under
// relative coefficient perturbations c_k -> c_k (1 + delta_k), |delta_k| <= eps.

#include "polycond/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycond {

inline constexpr std::size_t kDefaultSamples = 2001;

/// Sampled condition data. Values are log10 magnitudes; -inf marks an exact zero.
struct ConditionCurve {
  std::string label;
  std::vector<double> abscissae;
  std::vector<double> values_log10;

  std::size_t size() const { return abscissae.size(); }

  bool has_neg_inf() const
  {
    return std::any_of(values_log10.begin(), values_log10.end(),
                       [](double v) { return std::isinf(v) && v < 0; });
  }

  /// Index of the largest value (first one on ties).
  std::size_t argmax() const
  {
    if (values_log10.empty())
      throw ArgumentError("argmax of an empty curve");
    return static_cast<std::size_t>(
        std::max_element(values_log10.begin(), values_log10.end()) - values_log10.begin());
  }

  double max_log10() const { return values_log10[argmax()]; }
};

/// Relative coefficient perturbation: c_k -> c_k (1 + delta_k).
template <RealScalar T>
struct PerturbationModel {
  T epsilon{0};
  std::optional<std::vector<T>> deltas;
};

template <RealScalar T>
std::vector<T> abs_coefficients(const std::vector<T>& c)
{
  std::vector<T> out;
  out.reserve(c.size());
  for (const T& v : c)
    out.push_back(magnitude(v));
  return out;
}

/// sum_k w_k |phi_k(x)| for nonnegative weights w, real or complex x.
template <RealScalar T, class X>
T weighted_abs_sum(const Basis<T>& basis, const std::vector<T>& w, const X& x)
{
  if (w.size() != basis.size())
    throw ArgumentError("weight count does not match basis size");
  switch (basis.kind()) {
  case BasisKind::monomial: {
    T ax = magnitude(x);
    T acc = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
      acc *= ax;
      acc += w[k];
    }
    return acc;
  }
  case BasisKind::lagrange: {
    if (auto hit = basis.node_hit(x))
      return w[*hit];
    const auto& nodes = basis.nodes().nodes;
    const auto& bary = basis.weights();
    T ell = 1;
    T sum = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      X diff = x;
      diff -= X(nodes[k]);
      T dist = magnitude(diff);
      ell *= dist;
      if (w[k] != 0)
        sum += w[k] * magnitude(bary[k]) / dist;
    }
    return ell * sum;
  }
  case BasisKind::bernstein: {
    X t = basis.pullback(x);
    X s = X(real_type_t<X>(1));
    s -= t;
    T u = magnitude(t);
    T v = magnitude(s);
    std::vector<T> b(w);
    for (std::size_t level = b.size() - 1; level > 0; --level) {
      for (std::size_t i = 0; i < level; ++i)
        b[i] = v * b[i] + u * b[i + 1];
    }
    return b[0];
  }
  }
  return T(0);
}

/// B(x) = sum_k |c_k| |phi_k(x)|: bound on |Delta p(x)| / eps.
template <RealScalar T, class X>
T condition_B(const Polynomial<T>& p, const X& x)
{
  return weighted_abs_sum(p.basis, abs_coefficients(p.coeffs), x);
}

template <RealScalar T>
void check_model(const PerturbationModel<T>& model, std::size_t size)
{
  if (model.epsilon < 0)
    throw ArgumentError("perturbation model: epsilon must be nonnegative");
  if (!model.deltas)
    throw ArgumentError("perturbation model: deltas required");
  if (model.deltas->size() != size)
    throw ArgumentError("perturbation model: delta count does not match coefficient count");
  for (const T& d : *model.deltas) {
    if (magnitude(d) > model.epsilon)
      throw ModelViolationError("perturbation model: |delta_k| exceeds epsilon");
  }
}

/// Delta p(x) = sum_k c_k delta_k phi_k(x), exact in the rational regime.
template <RealScalar T, class X>
X perturbed_eval_delta(const Polynomial<T>& p, const X& x, const PerturbationModel<T>& model)
{
  check_model(model, p.size());
  auto phi = p.basis.values(x);
  X acc = X(real_type_t<X>(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.coeffs[k] == 0)
      continue;
    acc += X(T(p.coeffs[k] * (*model.deltas)[k])) * phi[k];
  }
  return acc;
}

/// The perturbed polynomial with coefficients c_k (1 + delta_k). Zero
/// coefficients stay zero. The root list is dropped.
template <RealScalar T>
Polynomial<T> perturbed(const Polynomial<T>& p, const PerturbationModel<T>& model)
{
  check_model(model, p.size());
  std::vector<T> c(p.coeffs);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] *= T(1) + (*model.deltas)[k];
  return make_polynomial(p.basis, std::move(c));
}

/// Input condition |x f'(x) / f(x)|.
template <RealScalar T>
T evaluation_condition_C(const T& f_value, const T& f_deriv, const T& x)
{
  if (f_value == 0)
    throw DomainError("evaluation_condition_C: undefined at a zero of f");
  return magnitude(T(x * f_deriv / f_value));
}

template <RealScalar T>
struct RootCondition {
  /// |r B(r) / p'(r)|; zero at r = 0.
  T mixed;
  /// B(r) / |p'(r)|: first-order bound |Delta r| <= absolute * eps.
  T absolute;
};

/// Condition of a simple root r under relative coefficient perturbation.
template <RealScalar T>
RootCondition<T> root_condition_A(const Polynomial<T>& p, const T& r)
{
  if (p.roots) {
    bool known = std::any_of(p.roots->begin(), p.roots->end(),
                             [&](const T& root) { return coincides(root, r); });
    if (!known)
      throw ArgumentError("root_condition_A: value is not a stored root");
  }
  T deriv = derivative_eval(p, r);
  if (deriv == 0)
    throw SingularityError("root_condition_A: multiple root (p'(r) = 0)");
  T absolute = condition_B(p, r) / magnitude(deriv);
  T mixed = magnitude(r) * absolute;
  return RootCondition<T>{std::move(mixed), std::move(absolute)};
}

/// L(x) = sum_k |l_k(x)|.
template <RealScalar T, class X>
T lebesgue_function(const Basis<T>& basis, const X& x)
{
  if (basis.kind() != BasisKind::lagrange)
    throw UnsupportedBasisError("lebesgue_function: Lagrange basis required");
  return weighted_abs_sum(basis, std::vector<T>(basis.size(), T(1)), x);
}

template <RealScalar T, class X>
T lebesgue_function(const NodeSet<T>& nodes, const X& x)
{
  return lebesgue_function(Basis<T>::lagrange(nodes), x);
}

/// L(x) max_k |c_k|, an upper bound for B(x) in a Lagrange basis.
template <RealScalar T, class X>
T lebesgue_bound(const Polynomial<T>& p, const X& x)
{
  T cmax = 0;
  for (const T& c : p.coeffs)
    cmax = std::max(cmax, magnitude(c));
  return lebesgue_function(p.basis, x) * cmax;
}

/// a + (b - a) i / (samples - 1), i = 0..samples-1, exact.
inline std::vector<Rational> sample_points(const Rational& a, const Rational& b, std::size_t samples)
{
  if (samples < 2)
    throw ArgumentError("at least two samples required");
  if (!(a < b))
    throw ArgumentError("sampling interval must satisfy a < b");
  std::vector<Rational> xs;
  xs.reserve(samples);
  Rational step = (b - a) / Rational(samples - 1);
  for (std::size_t i = 0; i < samples; ++i)
    xs.emplace_back(a + step * Rational(i));
  return xs;
}

/// log10 B(x) at `samples` equispaced points of [a,b]. Rational polynomials
/// are evaluated exactly; big-float polynomials at `digits`.
template <RealScalar T>
ConditionCurve condition_curve(const Polynomial<T>& p, const Rational& a, const Rational& b,
                               std::size_t samples = kDefaultSamples, std::string label = "B",
                               unsigned digits = default_digits())
{
  ConditionCurve curve;
  curve.label = std::move(label);
  auto xs = sample_points(a, b, samples);
  auto abs_c = abs_coefficients(p.coeffs);
  std::optional<PrecisionScope> scope;
  if constexpr (!is_exact_v<T>)
    scope.emplace(digits);
  curve.abscissae.reserve(samples);
  curve.values_log10.reserve(samples);
  for (const Rational& q : xs) {
    curve.abscissae.push_back(to_double(q));
    if constexpr (is_exact_v<T>) {
      curve.values_log10.push_back(log10_abs_or_neg_inf(weighted_abs_sum(p.basis, abs_c, q)));
    } else {
      BigFloat x = to_bigfloat(q, digits);
      curve.values_log10.push_back(log10_abs_or_neg_inf(weighted_abs_sum(p.basis, abs_c, x)));
    }
  }
  return curve;
}

/// log10 of the mixed (A) and absolute root conditions over the stored
/// roots, in increasing root order.
template <RealScalar T>
std::pair<ConditionCurve, ConditionCurve> root_condition_curves(const Polynomial<T>& p,
                                                                const std::string& label)
{
  if (!p.roots)
    throw ArgumentError("root_condition_curves: polynomial has no stored roots");
  std::vector<T> roots(*p.roots);
  std::sort(roots.begin(), roots.end());
  ConditionCurve mixed{label + " A", {}, {}};
  ConditionCurve absolute{label + " A_abs", {}, {}};
  for (const T& r : roots) {
    auto rc = root_condition_A(p, r);
    double x = to_double(r);
    mixed.abscissae.push_back(x);
    absolute.abscissae.push_back(x);
    mixed.values_log10.push_back(log10_abs_or_neg_inf(rc.mixed));
    absolute.values_log10.push_back(log10_abs_or_neg_inf(rc.absolute));
  }
  return {std::move(mixed), std::move(absolute)};
}

} // namespace polycond

#endif // POLYCOND_CONDITIONING_HPP
