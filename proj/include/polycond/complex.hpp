#ifndef POLYCOND_COMPLEX_HPP
#define POLYCOND_COMPLEX_HPP

#include "polycond/scalar.hpp"

#include <type_traits>

namespace polycond {

/// Complex number over one of the real regimes. std::complex is only
/// specified for the builtin floating types, hence this small value type.
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o)
  {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o)
  {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o)
  {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o)
  {
    T den = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / den;
    T i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class T>
Complex<T> conj(const Complex<T>& z)
{
  return Complex<T>(z.re, T(-z.im));
}

/// |z|^2, exact in the rational regime.
template <class T>
T norm(const Complex<T>& z)
{
  return T(z.re * z.re + z.im * z.im);
}

inline BigFloat magnitude(const Complex<BigFloat>& z)
{
  return BigFloat(boost::multiprecision::sqrt(norm(z)));
}

inline Rational magnitude(const Rational& x) { return Rational(boost::multiprecision::abs(x)); }
inline BigFloat magnitude(const BigFloat& x) { return BigFloat(boost::multiprecision::abs(x)); }

template <class X>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<Complex<T>> : std::true_type {};

/// Real scalar type underlying X (X itself for reals).
template <class X>
struct real_type {
  using type = X;
};
template <class T>
struct real_type<Complex<T>> {
  using type = T;
};
template <class X>
using real_type_t = typename real_type<X>::type;

} // namespace polycond

#endif // POLYCOND_COMPLEX_HPP
