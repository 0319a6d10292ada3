#ifndef POLYCOND_POLYNOMIAL_HPP
#define POLYCOND_POLYNOMIAL_HPP

#include "polycond/basis.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace polycond {

/// p(x) = sum_k c_k phi_k(x). When the polynomial was built from its roots the
/// root list is kept exactly alongside the coefficients.
template <RealScalar T>
struct Polynomial {
  Basis<T> basis;
  std::vector<T> coeffs;
  std::optional<std::vector<T>> roots;

  std::size_t degree() const { return basis.degree(); }
  std::size_t size() const { return coeffs.size(); }
};

template <RealScalar T>
Polynomial<T> make_polynomial(Basis<T> basis, std::vector<T> coeffs)
{
  if (coeffs.size() != basis.size())
    throw ArgumentError("coefficient count does not match basis size");
  return Polynomial<T>{std::move(basis), std::move(coeffs), std::nullopt};
}

/// Monic monomial coefficients of prod (x - r_k) by iterated convolution.
template <RealScalar T>
Polynomial<T> from_roots_monomial(std::vector<T> roots)
{
  if (roots.empty())
    throw ArgumentError("from_roots_monomial: empty root list");
  std::vector<T> c{T(1)};
  c.reserve(roots.size() + 1);
  for (const T& r : roots) {
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i)
      c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  Polynomial<T> p = make_polynomial(Basis<T>::monomial(roots.size()), std::move(c));
  p.roots = std::move(roots);
  return p;
}

/// In the Lagrange basis the coefficient vector is the value vector.
template <RealScalar T>
Polynomial<T> interpolate_lagrange(NodeSet<T> nodes, std::vector<T> values)
{
  if (values.size() != nodes.size())
    throw ArgumentError("interpolate_lagrange: value count does not match node count");
  return make_polynomial(Basis<T>::lagrange(std::move(nodes)), std::move(values));
}

/// p(x): Horner (monomial), second barycentric form (Lagrange; the stored
/// value is returned when x coincides with a node), de Casteljau (Bernstein).
template <RealScalar T, class X>
X eval(const Polynomial<T>& p, const X& x)
{
  using R = real_type_t<X>;
  const auto& c = p.coeffs;
  switch (p.basis.kind()) {
  case BasisKind::monomial: {
    X acc = X(R(0));
    for (std::size_t k = c.size(); k-- > 0;) {
      acc *= x;
      acc += X(c[k]);
    }
    return acc;
  }
  case BasisKind::lagrange: {
    if (auto hit = p.basis.node_hit(x))
      return X(c[*hit]);
    const auto& nodes = p.basis.nodes().nodes;
    const auto& w = p.basis.weights();
    X num = X(R(0));
    X den = X(R(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      X diff = x;
      diff -= X(nodes[k]);
      X term = X(w[k]) / diff;
      den += term;
      term *= X(c[k]);
      num += term;
    }
    return num / den;
  }
  case BasisKind::bernstein: {
    X t = p.basis.pullback(x);
    X s = X(R(1));
    s -= t;
    std::vector<X> b;
    b.reserve(c.size());
    for (const T& v : c)
      b.emplace_back(v);
    for (std::size_t level = c.size() - 1; level > 0; --level) {
      for (std::size_t i = 0; i < level; ++i)
        b[i] = s * b[i] + t * b[i + 1];
    }
    return b[0];
  }
  }
  return X(R(0));
}

/// Leading coefficient in the monomial sense.
template <RealScalar T>
T leading_coefficient(const Polynomial<T>& p)
{
  const auto& c = p.coeffs;
  switch (p.basis.kind()) {
  case BasisKind::monomial:
    return c.back();
  case BasisKind::lagrange: {
    T lc = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      lc += c[k] * p.basis.weights()[k];
    return lc;
  }
  case BasisKind::bernstein: {
    const std::size_t n = p.degree();
    T lc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      T term = c[k] * T(binomial(n, k));
      if ((n - k) % 2 == 1)
        lc -= term;
      else
        lc += term;
    }
    T width = p.basis.upper() - p.basis.lower();
    for (std::size_t i = 0; i < n; ++i)
      lc /= width;
    return lc;
  }
  }
  return T(0);
}

/// Attaches the complete root list to a polynomial in any basis. Rational
/// inputs are checked exactly.
template <RealScalar T>
Polynomial<T> with_roots(Polynomial<T> p, std::vector<T> roots)
{
  if (roots.size() != p.degree())
    throw ArgumentError("with_roots: root count must equal the degree");
  if (leading_coefficient(p) == 0)
    throw ArgumentError("with_roots: polynomial has lower actual degree than its basis");
  if constexpr (is_exact_v<T>) {
    for (const T& r : roots) {
      if (eval(p, r) != 0)
        throw ArgumentError("with_roots: value is not a root of the polynomial");
    }
  }
  p.roots = std::move(roots);
  return p;
}

/// p'(x). Root form when roots are known (exact product at a root,
/// p(x) sum 1/(x - r_j) elsewhere); Horner on derived coefficients for the
/// monomial basis; the differentiated control polygon for Bernstein.
template <RealScalar T, class X>
X derivative_eval(const Polynomial<T>& p, const X& x)
{
  using R = real_type_t<X>;
  if (p.roots) {
    const auto& r = *p.roots;
    X lc = X(leading_coefficient(p));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!coincides(x, X(r[i])))
        continue;
      X prod = lc;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j != i)
          prod *= X(r[i]) - X(r[j]);
      }
      return prod;
    }
    X value = lc;
    X sum = X(R(0));
    for (const T& root : r) {
      X diff = x;
      diff -= X(root);
      value *= diff;
      sum += X(R(1)) / diff;
    }
    return value * sum;
  }
  const auto& c = p.coeffs;
  switch (p.basis.kind()) {
  case BasisKind::monomial: {
    X acc = X(R(0));
    for (std::size_t k = c.size(); k-- > 1;) {
      acc *= x;
      acc += X(T(c[k] * T(k)));
    }
    return acc;
  }
  case BasisKind::bernstein: {
    const std::size_t n = p.degree();
    if (n == 0)
      return X(R(0));
    std::vector<T> d(n);
    T scale = T(n) / T(p.basis.upper() - p.basis.lower());
    for (std::size_t k = 0; k < n; ++k)
      d[k] = (c[k + 1] - c[k]) * scale;
    auto dp = make_polynomial(
        Basis<T>::bernstein(n - 1, p.basis.lower(), p.basis.upper()), std::move(d));
    return eval(dp, x);
  }
  case BasisKind::lagrange:
    break;
  }
  throw UnsupportedBasisError("derivative_eval: Lagrange basis without known roots");
}

/// 1 / (1 + 25 x^2).
template <RealScalar T>
T runge_function(const T& x)
{
  return T(1) / (T(1) + T(25) * x * x);
}

/// Rounds every exact component to a big-float polynomial at `digits`.
/// Lagrange weights are recomputed from the rounded nodes.
inline Polynomial<BigFloat> to_bigfloat(const Polynomial<Rational>& p, unsigned digits)
{
  PrecisionScope scope(digits);
  auto convert = [&](const std::vector<Rational>& v) {
    std::vector<BigFloat> out;
    out.reserve(v.size());
    for (const auto& q : v)
      out.push_back(to_bigfloat(q, digits));
    return out;
  };
  std::optional<Basis<BigFloat>> basis;
  switch (p.basis.kind()) {
  case BasisKind::monomial:
    basis = Basis<BigFloat>::monomial(p.degree());
    break;
  case BasisKind::lagrange: {
    NodeSet<BigFloat> nodes{convert(p.basis.nodes().nodes), p.basis.nodes().kind, p.basis.nodes().interval};
    basis = Basis<BigFloat>::lagrange(std::move(nodes));
    break;
  }
  case BasisKind::bernstein:
    basis = Basis<BigFloat>::bernstein(p.degree(), to_bigfloat(p.basis.lower(), digits),
                                       to_bigfloat(p.basis.upper(), digits));
    break;
  }
  Polynomial<BigFloat> out = make_polynomial(std::move(*basis), convert(p.coeffs));
  if (p.roots)
    out.roots = convert(*p.roots);
  return out;
}

} // namespace polycond

#endif // POLYCOND_POLYNOMIAL_HPP
