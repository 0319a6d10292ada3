#ifndef POLYCOND_SCENARIOS_HPP
#define POLYCOND_SCENARIOS_HPP

// Ready-made experiments: Runge interpolation on equispaced and Chebyshev
// nodes, Wilkinson's product polynomials (plain and rescaled), and the
// dyadic-root polynomials clustered at 0 and at 1.

#include "polycond/pseudozeros.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polycond {

struct ScenarioReport {
  std::string name;
  std::vector<ConditionCurve> curves;
  std::vector<PseudozeroField> fields;
  std::map<std::string, double> summary;

  const ConditionCurve& curve(const std::string& label) const
  {
    for (const auto& c : curves) {
      if (c.label == label)
        return c;
    }
    throw ArgumentError("no curve labelled '" + label + "'");
  }

  const PseudozeroField& field(const std::string& label) const
  {
    for (const auto& f : fields) {
      if (f.label == label)
        return f;
    }
    throw ArgumentError("no field labelled '" + label + "'");
  }

  double stat(const std::string& key) const
  {
    auto it = summary.find(key);
    if (it == summary.end())
      throw ArgumentError("no summary statistic '" + key + "'");
    return it->second;
  }
};

inline std::vector<std::size_t> fibonacci_degrees() { return {5, 8, 13, 21, 34, 55, 89}; }

namespace detail {

inline std::string degree_tag(std::size_t n) { return "n=" + std::to_string(n); }

/// Adds "<prefix>max_log10_<key>" and "<prefix>argmax_<axis>" for a curve.
inline void summarize(ScenarioReport& report, const ConditionCurve& curve, const std::string& prefix,
                      const std::string& key, const std::string& axis)
{
  std::size_t k = curve.argmax();
  report.summary[prefix + "max_log10_" + key] = curve.values_log10[k];
  report.summary[prefix + "argmax_" + axis] = curve.abscissae[k];
}

} // namespace detail

inline Polynomial<Rational> runge_interpolant_equispaced(std::size_t n)
{
  auto nodes = equispaced_nodes(n, Rational(-1), Rational(1));
  std::vector<Rational> y;
  for (const auto& x : nodes.nodes)
    y.push_back(runge_function(x));
  return interpolate_lagrange(std::move(nodes), std::move(y));
}

/// Nodes and Runge values both at twice the working precision.
inline Polynomial<BigFloat> runge_interpolant_chebyshev(std::size_t n, unsigned digits = default_digits())
{
  auto nodes = chebyshev_nodes(n, digits);
  PrecisionScope scope(2 * digits);
  std::vector<BigFloat> y;
  for (const auto& x : nodes.nodes)
    y.push_back(runge_function(x));
  return interpolate_lagrange(std::move(nodes), std::move(y));
}

/// B(x) on [-1,1] for the Runge interpolant on equispaced nodes, exact.
inline ScenarioReport runge_equispaced(const std::vector<std::size_t>& degrees = fibonacci_degrees(),
                                       std::size_t samples = kDefaultSamples)
{
  ScenarioReport report;
  report.name = "runge-equispaced";
  double overall = -std::numeric_limits<double>::infinity();
  for (std::size_t n : degrees) {
    if (n < 1)
      throw ArgumentError("runge_equispaced: degrees must be at least 1");
    auto tag = detail::degree_tag(n);
    report.curves.push_back(
        condition_curve(runge_interpolant_equispaced(n), Rational(-1), Rational(1), samples, "B " + tag));
    detail::summarize(report, report.curves.back(), tag + " ", "B", "x");
    overall = std::max(overall, report.curves.back().max_log10());
  }
  report.summary["max_log10_B"] = overall;
  return report;
}

/// B(x) on [-1,1] for the Runge interpolant on Chebyshev extreme nodes.
inline ScenarioReport runge_chebyshev(const std::vector<std::size_t>& degrees = fibonacci_degrees(),
                                      std::size_t samples = kDefaultSamples,
                                      unsigned digits = default_digits())
{
  ScenarioReport report;
  report.name = "runge-chebyshev";
  double overall = -std::numeric_limits<double>::infinity();
  for (std::size_t n : degrees) {
    if (n < 1)
      throw ArgumentError("runge_chebyshev: degrees must be at least 1");
    auto tag = detail::degree_tag(n);
    report.curves.push_back(condition_curve(runge_interpolant_chebyshev(n, digits), Rational(-1),
                                            Rational(1), samples, "B " + tag, digits));
    detail::summarize(report, report.curves.back(), tag + " ", "B", "x");
    overall = std::max(overall, report.curves.back().max_log10());
  }
  report.summary["max_log10_B"] = overall;
  return report;
}

inline std::vector<Rational> wilkinson_roots(std::size_t n)
{
  std::vector<Rational> roots;
  for (std::size_t k = 1; k <= n; ++k)
    roots.emplace_back(k);
  return roots;
}

enum class ScaledTarget { symmetric, zero_two, zero_one };

inline const char* to_string(ScaledTarget t)
{
  switch (t) {
  case ScaledTarget::symmetric:
    return "symmetric";
  case ScaledTarget::zero_two:
    return "zero-two";
  case ScaledTarget::zero_one:
    return "zero-one";
  }
  return "?";
}

inline ScaledTarget parse_scaled_target(const std::string& s)
{
  if (s == "symmetric")
    return ScaledTarget::symmetric;
  if (s == "zero-two")
    return ScaledTarget::zero_two;
  if (s == "zero-one")
    return ScaledTarget::zero_one;
  throw ArgumentError("unknown scaling target '" + s + "' (symmetric | zero-two | zero-one)");
}

/// Roots 1..N moved affinely: -1 + 2k/(N+1), 2 - 2k/(N+1) or k/(N+1).
inline std::vector<Rational> scaled_wilkinson_roots(std::size_t n, ScaledTarget target)
{
  std::vector<Rational> roots;
  const Rational den(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational kk(k);
    switch (target) {
    case ScaledTarget::symmetric:
      roots.push_back(Rational(-1) + 2 * kk / den);
      break;
    case ScaledTarget::zero_two:
      roots.push_back(Rational(2) - 2 * kk / den);
      break;
    case ScaledTarget::zero_one:
      roots.push_back(kk / den);
      break;
    }
  }
  return roots;
}

inline std::pair<Rational, Rational> scaled_interval(ScaledTarget target)
{
  switch (target) {
  case ScaledTarget::symmetric:
    return {Rational(-1), Rational(1)};
  case ScaledTarget::zero_two:
    return {Rational(0), Rational(2)};
  case ScaledTarget::zero_one:
    return {Rational(0), Rational(1)};
  }
  return {Rational(0), Rational(1)};
}

/// Roots 2^-k (clustered at 0).
inline std::vector<Rational> dyadic_roots(std::size_t n)
{
  std::vector<Rational> roots;
  for (std::size_t k = 1; k <= n; ++k)
    roots.emplace_back(Rational(1) / Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k))));
  return roots;
}

/// Roots 1 - 2^-k (clustered at 1).
inline std::vector<Rational> dyadic_roots_near_one(std::size_t n)
{
  auto roots = dyadic_roots(n);
  for (auto& r : roots)
    r = Rational(1) - r;
  return roots;
}

namespace detail {

/// B curve on [lo, hi] plus root condition curves, with summary.
inline void root_family(ScenarioReport& report, const Polynomial<Rational>& p, const std::string& prefix,
                        const Rational& lo, const Rational& hi, std::size_t samples)
{
  std::string tag = prefix.empty() ? "" : prefix + " ";
  report.curves.push_back(condition_curve(p, lo, hi, samples, tag + "B"));
  summarize(report, report.curves.back(), tag, "B", "x");
  auto [mixed, absolute] = root_condition_curves(p, prefix.empty() ? std::string("root") : prefix);
  if (prefix.empty()) {
    mixed.label = "A";
    absolute.label = "A_abs";
  }
  report.curves.push_back(std::move(mixed));
  summarize(report, report.curves.back(), tag, "A", "root");
  report.curves.push_back(std::move(absolute));
  summarize(report, report.curves.back(), tag, "A_abs", "root_abs");
}

} // namespace detail

/// W_N = prod_{k=1}^N (x - k): B_N on [0, N] and A(r) at every root, exact.
inline ScenarioReport wilkinson_first(std::size_t n = 20, std::size_t samples = kDefaultSamples)
{
  if (n < 2)
    throw ArgumentError("wilkinson_first: N must be at least 2");
  ScenarioReport report;
  report.name = "wilkinson-" + std::to_string(n);
  auto p = from_roots_monomial(wilkinson_roots(n));
  detail::root_family(report, p, "", Rational(0), Rational(n), samples);
  return report;
}

inline ScenarioReport wilkinson_scaled(std::size_t n, ScaledTarget target,
                                       std::size_t samples = kDefaultSamples)
{
  if (n < 2)
    throw ArgumentError("wilkinson_scaled: N must be at least 2");
  ScenarioReport report;
  report.name = std::string("wilkinson-scaled-") + to_string(target) + "-" + std::to_string(n);
  auto p = from_roots_monomial(scaled_wilkinson_roots(n, target));
  auto [lo, hi] = scaled_interval(target);
  detail::root_family(report, p, "", lo, hi, samples);
  return report;
}

/// Named polynomial with its plotting defaults.
struct NamedPolynomial {
  std::string name;
  Polynomial<Rational> poly;
  Rational lo;
  Rational hi;
  Region region;
  std::vector<double> levels;
};

inline NamedPolynomial c_polynomial(std::size_t n = 20)
{
  return NamedPolynomial{"C" + std::to_string(n), from_roots_monomial(dyadic_roots(n)), Rational(0), Rational(1),
                         Region{-0.25, 1.25, -0.6, 0.6}, {1e-1, 1e-2, 1e-3, 1e-4, 1e-6, 1e-8}};
}

inline NamedPolynomial s_polynomial(std::size_t n = 20)
{
  return NamedPolynomial{"S" + std::to_string(n), from_roots_monomial(dyadic_roots_near_one(n)), Rational(0),
                         Rational(1), Region{-2.0, 5.0, -3.5, 3.5}, {1e-4, 1e-6, 1e-8, 1e-10, 1e-15}};
}

inline NamedPolynomial w_polynomial(std::size_t n = 20)
{
  return NamedPolynomial{"W" + std::to_string(n), from_roots_monomial(wilkinson_roots(n)), Rational(0),
                         Rational(n), Region{-1.0, 25.0, -8.0, 8.0}, {1e-14, 1e-18}};
}

/// The same polynomial as a Lagrange interpolant on the nodes k/N of [0,1],
/// with the exact roots attached.
inline Polynomial<Rational> lagrange_form_unit_nodes(const Polynomial<Rational>& p)
{
  auto nodes = equispaced_nodes(p.degree(), Rational(0), Rational(1));
  std::vector<Rational> values;
  for (const auto& x : nodes.nodes)
    values.push_back(eval(p, x));
  auto q = interpolate_lagrange(std::move(nodes), std::move(values));
  return with_roots(std::move(q), *p.roots);
}

/// Resolves "wilkinson20", "w20", "c20", "s20" (any degree) to a polynomial.
inline NamedPolynomial named_polynomial(const std::string& name)
{
  auto degree_after = [&](std::size_t prefix) -> std::size_t {
    std::string digits = name.substr(prefix);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ArgumentError("unknown polynomial '" + name + "' (wilkinsonN | cN | sN)");
    std::size_t n = std::stoul(digits);
    if (n < 1 || n > 400)
      throw ArgumentError("polynomial degree out of range in '" + name + "'");
    return n;
  };
  if (name.rfind("wilkinson", 0) == 0)
    return w_polynomial(degree_after(9));
  if (!name.empty() && (name[0] == 'w' || name[0] == 'W'))
    return w_polynomial(degree_after(1));
  if (!name.empty() && (name[0] == 'c' || name[0] == 'C'))
    return c_polynomial(degree_after(1));
  if (!name.empty() && (name[0] == 's' || name[0] == 'S'))
    return s_polynomial(degree_after(1));
  throw ArgumentError("unknown polynomial '" + name + "' (wilkinsonN | cN | sN)");
}

struct SecondOptions {
  std::size_t n = 20;
  std::size_t samples = kDefaultSamples;
  /// Pseudozero grid; 0 skips the fields.
  std::size_t grid = kDefaultGrid;
  unsigned digits = 0;
};

inline PseudozeroField named_field(const NamedPolynomial& np, std::size_t nx, std::size_t ny, unsigned digits)
{
  FieldOptions opts;
  opts.region = np.region;
  opts.nx = nx;
  opts.ny = ny;
  opts.levels = np.levels;
  opts.digits = digits;
  opts.label = np.name + " pseudozeros";
  return pseudozero_field(np.poly, opts);
}

/// C_N (roots 2^-k) and S_N (roots 1 - 2^-k): B on [0,1] in the monomial
/// basis and in the Lagrange basis on k/N, root conditions in both bases,
/// and pseudozero fields of the monomial forms.
inline ScenarioReport wilkinson_second(const SecondOptions& opts = {})
{
  ScenarioReport report;
  report.name = "wilkinson-second";
  for (const NamedPolynomial& np : {c_polynomial(opts.n), s_polynomial(opts.n)}) {
    detail::root_family(report, np.poly, np.name + " monomial", np.lo, np.hi, opts.samples);
    detail::root_family(report, lagrange_form_unit_nodes(np.poly), np.name + " lagrange", np.lo, np.hi,
                        opts.samples);
    if (opts.grid > 0)
      report.fields.push_back(named_field(np, opts.grid, opts.grid, opts.digits));
  }
  return report;
}

/// Pseudozero field of a named polynomial. Empty `levels` keeps its defaults.
inline ScenarioReport pseudozeros_scenario(const NamedPolynomial& np, std::size_t nx, std::size_t ny,
                                           std::vector<double> levels = {},
                                           std::optional<Region> region = std::nullopt,
                                           unsigned digits = 0)
{
  NamedPolynomial chosen = np;
  if (!levels.empty())
    chosen.levels = std::move(levels);
  if (region)
    chosen.region = *region;
  ScenarioReport report;
  report.name = "pseudozeros-" + chosen.name;
  report.fields.push_back(named_field(chosen, nx, ny, digits));
  return report;
}

} // namespace polycond

#endif // POLYCOND_SCENARIOS_HPP
