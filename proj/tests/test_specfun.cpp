#include "intdisc/specfun.h"

#include "oracles.h"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace intdisc;

TEST_CASE("gamma helpers")
{
	CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
	CHECK(gamma_fn(5) == doctest::Approx(24).epsilon(1e-15));
	CHECK_THROWS_AS(gamma_fn(-2), DomainError);
	CHECK(rgamma(-3) == 0);
	CHECK(rgamma(4) == doctest::Approx(1.0 / 6).epsilon(1e-15));
	CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
	CHECK(pochhammer(2, 0) == 1);
	CHECK(digamma(1) == doctest::Approx(-0.57721566490153286).epsilon(1e-14));
}

TEST_CASE("2F1 against reference values")
{
	for (auto const &r : oracle::hyp2f1_refs())
	{
		CAPTURE(r.a);
		CAPTURE(r.b);
		CAPTURE(r.c);
		CAPTURE(r.t);
		CHECK(gauss_2f1(r.a, r.b, r.c, r.t) == doctest::Approx(r.value).epsilon(1e-12));
	}
}

TEST_CASE("2F1 elementary closed forms")
{
	// 2F1(1,1;2;t) = -log(1-t)/t
	for (double t : {-5.0, -0.3, 0.2, 0.7, 0.99})
		CHECK(gauss_2f1(1, 1, 2, t) == doctest::Approx(-std::log1p(-t) / t).epsilon(1e-13));
	// 2F1(1/2,1/2;3/2;t^2) = asin(t)/t
	for (double t : {0.1, 0.6, 0.9})
		CHECK(gauss_2f1(0.5, 0.5, 1.5, t * t) == doctest::Approx(std::asin(t) / t).epsilon(1e-13));
	CHECK(gauss_2f1(0.3, 0.7, 1.1, 0) == 1);
}

TEST_CASE("explicit routes agree where they overlap")
{
	double a = 1.0 / 12, b = 5.0 / 12, c = 0.5;
	double t = 0.45;
	double ref = gauss_2f1_ex(a, b, c, t, Hyp2F1Route::series).value;
	CHECK(gauss_2f1_ex(a, b, c, t, Hyp2F1Route::one_minus_t).value == doctest::Approx(ref).epsilon(1e-13));
	CHECK(gauss_2f1_ex(a, b, c, t, Hyp2F1Route::pfaff).value == doctest::Approx(ref).epsilon(1e-13));
	CHECK(gauss_2f1_ex(a, b, c, t, Hyp2F1Route::euler).value == doctest::Approx(ref).epsilon(1e-13));
	double far = -30;
	CHECK(gauss_2f1_ex(a, b, c, far, Hyp2F1Route::inverse).value ==
	      doctest::Approx(gauss_2f1_ex(a, b, c, far, Hyp2F1Route::pfaff).value).epsilon(1e-12));
	// terminating series
	CHECK(gauss_2f1_ex(-2, 0.5, 1.5, 3, Hyp2F1Route::polynomial).value ==
	      doctest::Approx(1 - 2 * 0.5 / 1.5 * 3 + 0.5 * 1.5 / (1.5 * 2.5) * 9).epsilon(1e-14));
	CHECK(to_string(Hyp2F1Route::one_minus_t) == "one-minus-t");
}

TEST_CASE("derivatives")
{
	double a = 7.0 / 12, b = 11.0 / 12, c = 1.5;
	for (double t : {-2.0, 0.3, 0.8, 4.0})
	{
		CAPTURE(t);
		double h = 1e-4 * std::max(1.0, std::abs(t));
		double fd = (gauss_2f1(a, b, c, t + h) - gauss_2f1(a, b, c, t - h)) / (2 * h);
		CHECK(gauss_2f1_derivative(a, b, c, t, 1) == doctest::Approx(fd).epsilon(1e-6));
		// d/dt F(a,b;c;t) = ab/c F(a+1,b+1;c+1;t)
		CHECK(gauss_2f1_derivative(a, b, c, t, 1) ==
		      doctest::Approx(a * b / c * gauss_2f1(a + 1, b + 1, c + 1, t)).epsilon(1e-11));
	}
	CHECK(gauss_2f1_derivative(a, b, c, 0.3, 0) == doctest::Approx(gauss_2f1(a, b, c, 0.3)).epsilon(1e-15));
}

TEST_CASE("Euler integral")
{
	for (auto const &r : oracle::hyp2f1_refs())
	{
		if (r.t >= 1 || r.b <= 0 || r.c - r.b <= 0)
			continue;
		CAPTURE(r.t);
		CHECK(hyp2f1_integral(r.a, r.b, r.c, r.t) == doctest::Approx(r.value).epsilon(1e-9));
	}
}

TEST_CASE("t = 1")
{
	// Gauss summation
	double v = gauss_2f1(0.25, 0.5, 2.0, 1.0);
	CHECK(v == doctest::Approx(gamma_fn(2) * gamma_fn(1.25) / (gamma_fn(1.75) * gamma_fn(1.5))).epsilon(1e-12));
	auto r = gauss_2f1_ex(1.0 / 12, 5.0 / 12, 0.5, 1.0);
	CHECK(r.infinite);
	CHECK(r.log_coefficient == doctest::Approx(-gamma_fn(0.5) / (gamma_fn(1.0 / 12) * gamma_fn(5.0 / 12))).epsilon(1e-12));
	CHECK_THROWS_AS(gauss_2f1(1.0 / 12, 5.0 / 12, 0.5, 1.0), DomainError);
}

TEST_CASE("two-variable series")
{
	for (auto const &r : oracle::g25_refs())
	{
		CAPTURE(r.u);
		CAPTURE(r.v);
		auto s = series_g25(r.u, r.v);
		CHECK(s.g == doctest::Approx(r.g).epsilon(1e-12));
		CHECK(s.tail < 1e-10 * std::abs(s.g));
	}
	// partials against central differences
	double u = 0.003, v = 0.0005, h = 1e-5;
	auto s = series_g25(u, v);
	CHECK(s.gu == doctest::Approx((series_g25(u + h, v).g - series_g25(u - h, v).g) / (2 * h)).epsilon(1e-6));
	CHECK(s.gv == doctest::Approx((series_g25(u, v + h).g - series_g25(u, v - h).g) / (2 * h)).epsilon(1e-6));
	CHECK_THROWS_AS(series_g25(0.5, 0.3), DomainError);
}

TEST_CASE("two-variable integral")
{
	for (auto const &r : oracle::g25_refs())
	{
		CAPTURE(r.u);
		CHECK(integral_g25(r.u, r.v) == doctest::Approx(r.g).epsilon(1e-8));
	}
	// the unit-square variant agrees at the origin only
	CHECK(integral_g25(0, 0, G25Domain::unit_square) == doctest::Approx(oracle::g25_refs()[0].g).epsilon(1e-8));
	CHECK(kernel_check_g25(0.01, 0).positive);
	CHECK(kernel_check_g25(1.0 / 64 - 1e-9, 0).near_locus);
	CHECK_FALSE(kernel_check_g25(1.0 / 64 + 1e-3, 0).positive);
	CHECK_THROWS_AS(integral_g25(1.0 / 64 + 1e-3, 0), DomainError);
	CHECK(diagonal_growth_g25(0.001, 0.001) < 1);
}
