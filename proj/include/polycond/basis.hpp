#ifndef POLYCOND_BASIS_HPP
#define POLYCOND_BASIS_HPP

#include "polycond/nodes.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polycond {

enum class BasisKind { monomial, lagrange, bernstein };

inline const char* to_string(BasisKind kind)
{
  switch (kind) {
  case BasisKind::monomial:
    return "monomial";
  case BasisKind::lagrange:
    return "lagrange";
  case BasisKind::bernstein:
    return "bernstein";
  }
  return "?";
}

/// A polynomial basis {phi_k}: monomial x^k, Lagrange over a node set, or
/// Bernstein of degree n pulled back from [a,b] to [0,1].
template <RealScalar T>
class Basis {
public:
  static Basis monomial(std::size_t degree)
  {
    Basis b;
    b.kind_ = BasisKind::monomial;
    b.degree_ = degree;
    return b;
  }

  static Basis lagrange(NodeSet<T> nodes)
  {
    Basis b;
    b.kind_ = BasisKind::lagrange;
    b.degree_ = nodes.degree();
    b.weights_ = barycentric_weights(nodes);
    b.nodes_ = std::move(nodes);
    return b;
  }

  static Basis bernstein(std::size_t degree, T a = T(0), T b = T(1))
  {
    if (!(a < b))
      throw ArgumentError("bernstein basis: need a < b");
    Basis out;
    out.kind_ = BasisKind::bernstein;
    out.degree_ = degree;
    out.lower_ = std::move(a);
    out.upper_ = std::move(b);
    return out;
  }

  BasisKind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return degree_ + 1; }

  const NodeSet<T>& nodes() const { return nodes_; }
  const std::vector<T>& weights() const { return weights_; }
  const T& lower() const { return lower_; }
  const T& upper() const { return upper_; }

  /// Index of the node that x coincides with, if any (Lagrange only).
  template <class X>
  std::optional<std::size_t> node_hit(const X& x) const
  {
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (coincides(x, X(nodes_[j])))
        return j;
    }
    return std::nullopt;
  }

  /// Bernstein parameter t = (x - a) / (b - a).
  template <class X>
  X pullback(const X& x) const
  {
    X t = x;
    t -= X(lower_);
    return t / X(T(upper_ - lower_));
  }

  /// All basis functions phi_0(x) .. phi_n(x).
  template <class X>
  std::vector<X> values(const X& x) const
  {
    using R = real_type_t<X>;
    std::vector<X> out(size(), X(R(0)));
    switch (kind_) {
    case BasisKind::monomial: {
      X power = X(R(1));
      for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = power;
        power *= x;
      }
      break;
    }
    case BasisKind::lagrange: {
      if (auto hit = node_hit(x)) {
        out[*hit] = X(R(1));
        break;
      }
      X ell = X(R(1));
      std::vector<X> diffs(out.size());
      for (std::size_t j = 0; j < out.size(); ++j) {
        diffs[j] = x;
        diffs[j] -= X(nodes_[j]);
        ell *= diffs[j];
      }
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = ell * X(weights_[k]) / diffs[k];
      break;
    }
    case BasisKind::bernstein: {
      X t = pullback(x);
      for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = bernstein_basis_value(degree_, k, t);
      break;
    }
    }
    return out;
  }

private:
  Basis() = default;

  BasisKind kind_ = BasisKind::monomial;
  std::size_t degree_ = 0;
  NodeSet<T> nodes_;
  std::vector<T> weights_;
  T lower_{0};
  T upper_{1};
};

} // namespace polycond

#endif // POLYCOND_BASIS_HPP
