#include "oracles.hpp"

#include "polycond/scenarios.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace polycond;

namespace {

using C = Complex<BigFloat>;

BigFloat babs(const BigFloat& x) { return boost::multiprecision::abs(x); }

} // namespace

TEST_CASE("indicator of x^2 - 1 at 1.1")
{
  auto p = make_polynomial(Basis<Rational>::monomial(2), std::vector<Rational>{-1, 0, 1});
  auto w = WeightVector<Rational>::relative(p);
  Rational v = indicator(p, Rational(11, 10), w);
  CHECK(v == Rational(21, 221));
  CHECK(to_double(v) == Catch::Approx(0.0950).margin(1e-4));
}

TEST_CASE("indicator of S20 at 3 - 1.5i lies between 1e-6 and 1e-4")
{
  auto s = s_polynomial(20).poly;
  const unsigned digits = 60;
  PrecisionScope scope(digits);
  auto q = to_bigfloat(s, digits);
  auto v = indicator(q, C(BigFloat(3), BigFloat("-1.5")), WeightVector<BigFloat>::relative(q));
  CHECK(log10_abs(v) == Catch::Approx(-4.5799).margin(1e-3));
}

TEST_CASE("weight validation")
{
  CHECK_THROWS_AS(WeightVector<Rational>(std::vector<Rational>{0, 0}), DegenerateInputError);
  CHECK_THROWS_AS(WeightVector<Rational>(std::vector<Rational>{1, -1}), ArgumentError);
  auto p = make_polynomial(Basis<Rational>::monomial(2), std::vector<Rational>{-1, 0, 1});
  CHECK_THROWS_AS(indicator(p, Rational(0), WeightVector<Rational>(std::vector<Rational>{1, 1})), ArgumentError);
  // Weight only on x^2: B_w(0) = 0.
  CHECK_THROWS_AS(indicator(p, Rational(0), WeightVector<Rational>(std::vector<Rational>{0, 0, 1})),
                  DegenerateInputError);
}

TEST_CASE("property: witness perturbation zeroes p and has |dc_k| = w_k * indicator")
{
  oracle::Gen gen(Catch::getSeed());
  const unsigned digits = 60;
  PrecisionScope scope(digits);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 12));
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= n; ++k)
      c.push_back(gen.rational(50, 9));
    auto basis = trial % 2 ? Basis<Rational>::monomial(n) : Basis<Rational>::bernstein(n);
    auto p = to_bigfloat(make_polynomial(basis, c), digits);
    std::vector<BigFloat> w;
    for (std::size_t k = 0; k <= n; ++k)
      w.push_back(BigFloat(gen.integer(0, 5)));
    w[static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(n)))] = 1;
    WeightVector<BigFloat> wv(w);
    C z(to_bigfloat(gen.rational(30, 11), digits), to_bigfloat(gen.rational(30, 11), digits));
    auto dc = witness_perturbation(p, z, wv);
    BigFloat b = weighted_condition(p, z, wv);
    BigFloat ind = indicator(p, z, wv);
    CHECK(perturbed_residual(p, z, dc) / b <= BigFloat("1e-52"));
    for (std::size_t k = 0; k <= n; ++k) {
      if (w[k] == 0) {
        CHECK(magnitude(dc[k]) == 0);
        continue;
      }
      BigFloat ratio = magnitude(dc[k]) / w[k];
      auto phi = p.basis.values(z);
      if (magnitude(phi[k]) != 0)
        CHECK(babs(ratio - ind) <= BigFloat("1e-50") * ind);
    }
  }
}

TEST_CASE("property: roots of admissible perturbations lie inside the pseudozero set")
{
  oracle::Gen gen(Catch::getSeed() + 1);
  const unsigned digits = 60;
  PrecisionScope scope(digits);
  const double eps = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(2, 8));
    auto roots = gen.distinct_rationals(n, 20, 3);
    // A zero root with relative weights makes the indicator 0/0 at z = 0.
    for (auto& r : roots) {
      if (r == 0)
        r = Rational(41, 2);
    }
    auto p = to_bigfloat(from_roots_monomial(roots), digits);
    auto w = WeightVector<BigFloat>::relative(p);
    std::vector<BigFloat> perturbed_c = p.coeffs;
    for (std::size_t k = 0; k <= n; ++k)
      perturbed_c[k] *= 1 + BigFloat(eps) * BigFloat(gen.real(-1, 1));
    for (const auto& r : roots) {
      C z = oracle::complex_newton(perturbed_c, C(to_bigfloat(r, digits), BigFloat("1e-3")), 80);
      auto v = indicator(p, z, w);
      CHECK(v <= BigFloat(eps) * BigFloat("1.000001"));
    }
  }
}

TEST_CASE("working precision grows with the smallest level and largest coefficient")
{
  auto w20 = w_polynomial(20).poly;
  std::vector<double> levels{1e-14, 1e-18};
  // Largest coefficient is the x^2 one, about 1.38e19: 20 + 18 + 20 < 60.
  CHECK(pseudozero_digits(w20, levels) == 60u);
  std::vector<double> tiny{1e-40};
  CHECK(pseudozero_digits(w20, tiny) == 80u);
}

TEST_CASE("level validation")
{
  auto p = make_polynomial(Basis<Rational>::monomial(2), std::vector<Rational>{-1, 0, 1});
  FieldOptions opts;
  opts.nx = opts.ny = 16;
  opts.levels = {1e-2, 1e-1};
  CHECK_THROWS_AS(pseudozero_field(p, opts), ArgumentError);
  opts.levels = {};
  CHECK_THROWS_AS(pseudozero_field(p, opts), ArgumentError);
  opts.levels = {1e-1, -1.0};
  CHECK_THROWS_AS(pseudozero_field(p, opts), ArgumentError);
  opts.levels = {1e-1, 1e-30};
  opts.digits = 30;
  CHECK_THROWS_AS(pseudozero_field(p, opts), PrecisionError);
  opts.levels = {1e-1};
  opts.nx = 8;
  CHECK_THROWS_AS(pseudozero_field(p, opts), ArgumentError);
}

TEST_CASE("field of x^2 - 1 has two closed contours around the roots")
{
  auto p = make_polynomial(Basis<Rational>::monomial(2), std::vector<Rational>{-1, 0, 1});
  FieldOptions opts;
  opts.region = Region{-2, 2, -1, 1};
  opts.nx = 81;
  opts.ny = 41;
  opts.levels = {1e-1, 1e-2};
  auto f = pseudozero_field(p, opts);
  REQUIRE(f.contours.size() == 2);
  for (const auto& set : f.contours) {
    CHECK(set.polylines.size() == 2);
    for (const auto& line : set.polylines) {
      CHECK(line.closed);
      for (const auto& pt : line.points) {
        CHECK(pt.x >= -2.0);
        CHECK(pt.x <= 2.0);
        CHECK(pt.y >= -1.0);
        CHECK(pt.y <= 1.0);
      }
    }
  }
  // Roots 1 and -1 are grid points: exact zeros.
  CHECK(std::isinf(f.value(20, 20)));
  CHECK(std::isinf(f.value(60, 20)));
  CHECK(f.interior_mask[20 * 81 + 20] == 1);
}

TEST_CASE("property: pseudozero fields are conjugate symmetric and masks are nested")
{
  auto s = s_polynomial(12);
  FieldOptions opts;
  opts.region = Region{-1.0, 2.5, -1.5, 1.5};
  opts.nx = 33;
  opts.ny = 31;
  opts.levels = {1e-2, 1e-4, 1e-6, 1e-9};
  auto f = pseudozero_field(s.poly, opts);
  for (std::size_t j = 0; j < f.ny; ++j) {
    for (std::size_t i = 0; i < f.nx; ++i)
      CHECK(f.value(i, j) == f.value(i, f.ny - 1 - j));
  }
  for (std::size_t l = 0; l + 1 < opts.levels.size(); ++l) {
    auto outer = f.mask(opts.levels[l]);
    auto inner = f.mask(opts.levels[l + 1]);
    std::size_t n_outer = 0, n_inner = 0;
    for (std::size_t k = 0; k < outer.size(); ++k) {
      CHECK((inner[k] <= outer[k]));
      n_outer += outer[k];
      n_inner += inner[k];
    }
    CHECK(n_inner <= n_outer);
  }
  CHECK(f.interior_mask == f.mask(1e-9));
}

TEST_CASE("field in a Lagrange basis agrees with the monomial field")
{
  auto w = from_roots_monomial(std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(3, 4)});
  auto lag = lagrange_form_unit_nodes(w);
  FieldOptions opts;
  opts.region = Region{0, 1, -0.5, 0.5};
  opts.nx = opts.ny = 17;
  opts.levels = {1e-1};
  // Unit weights give the Lebesgue-weighted indicator; same zero set.
  std::vector<Rational> ones(4, Rational(1));
  auto f = pseudozero_field(lag, opts, WeightVector<Rational>(ones));
  // Off-node roots are not exact zeros once rounded, but close to it.
  CHECK(f.value(4, 8) < -50);
  CHECK(f.value(8, 8) < -50);
  CHECK(f.value(12, 8) < -50);
  CHECK(f.value(0, 0) > -2);
  auto mono = pseudozero_field(w, opts, WeightVector<Rational>(std::vector<Rational>(4, Rational(1))));
  CHECK(std::isinf(mono.value(4, 8)));
}
