#ifndef POLYCOND_NODES_HPP
#define POLYCOND_NODES_HPP

#include "polycond/complex.hpp"
#include "polycond/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycond {

enum class NodeKind { equispaced, chebyshev_extreme, custom };

inline const char* to_string(NodeKind kind)
{
  switch (kind) {
  case NodeKind::equispaced:
    return "equispaced";
  case NodeKind::chebyshev_extreme:
    return "chebyshev-extreme";
  case NodeKind::custom:
    return "custom";
  }
  return "?";
}

/// Ordered, pairwise-distinct interpolation nodes. Equispaced sets are stored
/// increasing, Chebyshev sets decreasing (as generated); consumers must not
/// rely on either order.
template <RealScalar T>
struct NodeSet {
  std::vector<T> nodes;
  NodeKind kind = NodeKind::custom;
  /// Interval of an equispaced set.
  std::optional<std::pair<Rational, Rational>> interval;

  std::size_t size() const { return nodes.size(); }
  std::size_t degree() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  const T& operator[](std::size_t k) const { return nodes[k]; }
};

namespace detail {

inline bool within_digits(const BigFloat& diff, unsigned digits)
{
  if (diff == 0)
    return true;
  return log10_abs(diff) < -static_cast<double>(digits) + 2.0;
}

} // namespace detail

/// True when two abscissae are the same point: exact equality for rationals,
/// |a - b| < 10^(-digits+2) for floats (digits = the lower of the two precisions).
inline bool coincides(const Rational& a, const Rational& b) { return a == b; }

inline bool coincides(const BigFloat& a, const BigFloat& b)
{
  BigFloat diff = a - b;
  return detail::within_digits(diff, std::min(a.precision(), b.precision()));
}

inline bool coincides(const Complex<Rational>& a, const Complex<Rational>& b) { return a == b; }

inline bool coincides(const Complex<BigFloat>& a, const Complex<BigFloat>& b)
{
  unsigned digits = std::min({a.re.precision(), a.im.precision(), b.re.precision(), b.im.precision()});
  return detail::within_digits(magnitude(a - b), digits);
}

template <RealScalar T>
void require_distinct(const std::vector<T>& nodes)
{
  std::vector<T> sorted(nodes);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (coincides(sorted[i - 1], sorted[i]))
      throw DegenerateInputError("nodes are not pairwise distinct");
  }
}

template <RealScalar T>
NodeSet<T> custom_nodes(std::vector<T> nodes)
{
  if (nodes.empty())
    throw ArgumentError("node set must not be empty");
  require_distinct(nodes);
  return NodeSet<T>{std::move(nodes), NodeKind::custom, std::nullopt};
}

/// a + (b - a) k / n for k = 0..n, exact.
inline NodeSet<Rational> equispaced_nodes(std::size_t n, const Rational& a, const Rational& b)
{
  if (n == 0)
    throw ArgumentError("equispaced_nodes: degree must be at least 1");
  if (!(a < b))
    throw ArgumentError("equispaced_nodes: need a < b");
  NodeSet<Rational> out;
  out.kind = NodeKind::equispaced;
  out.interval = std::make_pair(a, b);
  out.nodes.reserve(n + 1);
  Rational step = (b - a) / Rational(n);
  for (std::size_t k = 0; k <= n; ++k)
    out.nodes.emplace_back(a + step * Rational(k));
  return out;
}

/// pi at the current default precision.
inline BigFloat pi_constant()
{
  BigFloat pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi;
}

/// Chebyshev extreme points cos(pi k / n), k = 0..n, evaluated at twice the
/// working precision. Mirror pairs are exact negatives and the endpoints and
/// middle node (even n) are exact.
inline NodeSet<BigFloat> chebyshev_nodes(std::size_t n, unsigned digits = default_digits())
{
  if (n == 0)
    throw ArgumentError("chebyshev_nodes: degree must be at least 1");
  PrecisionScope scope(2 * digits);
  NodeSet<BigFloat> out;
  out.kind = NodeKind::chebyshev_extreme;
  out.nodes.resize(n + 1);
  BigFloat pi = pi_constant();
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    BigFloat v;
    if (k == 0)
      v = 1;
    else if (2 * k == n)
      v = 0;
    else
      v = boost::multiprecision::cos(pi * BigFloat(k) / BigFloat(n));
    out.nodes[n - k] = BigFloat(-v);
    out.nodes[k] = std::move(v);
  }
  return out;
}

/// w_k = 1 / prod_{j != k} (x_k - x_j).
template <RealScalar T>
std::vector<T> barycentric_weights(const NodeSet<T>& set)
{
  const auto& x = set.nodes;
  if (x.empty())
    throw ArgumentError("barycentric_weights: empty node set");
  require_distinct(x);
  std::vector<T> w(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    T prod = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != k)
        prod *= x[k] - x[j];
    }
    w[k] = T(1) / prod;
  }
  return w;
}

/// l_k(x) from the product formula prod_{j != k} (x - x_j) / (x_k - x_j).
template <RealScalar T, class X>
X lagrange_basis_value(const NodeSet<T>& set, std::size_t k, const X& x)
{
  const auto& nodes = set.nodes;
  if (k >= nodes.size())
    throw ArgumentError("lagrange_basis_value: index out of range");
  X num = X(T(1));
  T den = 1;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == k)
      continue;
    X factor = x;
    factor -= X(nodes[j]);
    num *= factor;
    den *= nodes[k] - nodes[j];
  }
  return num / X(den);
}

inline BigInt binomial(std::size_t n, std::size_t k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

namespace detail {

template <class X>
X int_power(X base, std::size_t e)
{
  X result = X(real_type_t<X>(1));
  while (e > 0) {
    if (e & 1u)
      result *= base;
    e >>= 1u;
    if (e > 0)
      base *= base;
  }
  return result;
}

} // namespace detail

/// Bernstein polynomial C(n,k) x^k (1-x)^(n-k) on [0,1]. Exact binomial
/// formula for rationals and complex arguments, de Casteljau on the k-th unit
/// control vector for real floats.
template <class X>
X bernstein_basis_value(std::size_t n, std::size_t k, const X& x)
{
  using R = real_type_t<X>;
  if (k > n)
    throw ArgumentError("bernstein_basis_value: index out of range");
  if constexpr (std::is_same_v<X, BigFloat>) {
    std::vector<BigFloat> b(n + 1, BigFloat(0));
    b[k] = 1;
    BigFloat s = BigFloat(1) - x;
    for (std::size_t level = n; level > 0; --level) {
      for (std::size_t i = 0; i < level; ++i)
        b[i] = s * b[i] + x * b[i + 1];
    }
    return b[0];
  } else {
    X one_minus = X(R(1));
    one_minus -= x;
    X v = detail::int_power(x, k) * detail::int_power(one_minus, n - k);
    return v * X(R(binomial(n, k)));
  }
}

} // namespace polycond

#endif // POLYCOND_NODES_HPP
