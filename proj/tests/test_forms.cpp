#include "intdisc/formio.h"
#include "intdisc/forms.h"

#include "oracles.h"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace intdisc;

TEST_CASE("monomial order and counts")
{
	auto ms = monomials({2, 4});
	REQUIRE(ms.size() == 5);
	CHECK(ms.front() == MultiIndex{4, 0});
	CHECK(ms.back() == MultiIndex{0, 4});
	CHECK(monomials({3, 3}).size() == 10);
	CHECK(FormShape{3, 3}.size() == 10);
	CHECK(coordinate_name({1, 1, 1}) == "s111");
	for (size_t i = 0; i < ms.size(); ++i)
		CHECK(monomial_index({2, 4}, ms[i]) == i);
	CHECK(multinomial({2, 1, 1}) == 12);
}

TEST_CASE("tensor components are symmetric and rebuild the polynomial")
{
	auto f = random_form<Rational>({3, 3}, 11);
	std::vector<Rational> x{Rational(2), Rational(-1, 3), Rational(5, 2)};
	// S(x) = sum over all index tuples of S_ijk x_i x_j x_k
	Rational sum = 0;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			for (int k = 0; k < 3; ++k)
			{
				CHECK(tensor_component(f, {i, j, k}) == tensor_component(f, {k, i, j}));
				sum += tensor_component(f, {i, j, k}) * x[i] * x[j] * x[k];
			}
	CHECK(sum == evaluate(f, x));
}

TEST_CASE("pullback composes and commutes with evaluation")
{
	auto f = random_form<Rational>({2, 4}, 3);
	auto U = random_unimodular(2, 5), V = random_unimodular(2, 6);
	Matrix<Rational> UV(2, std::vector<Rational>(2, Rational(0)));
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			for (int k = 0; k < 2; ++k)
				UV[i][j] += U[i][k] * V[k][j];
	// (f o U) o V = f o (U V)
	CHECK(gl_transform(gl_transform(f, U), V) == gl_transform(f, UV));
	std::vector<Rational> x{Rational(3, 7), Rational(-2)};
	std::vector<Rational> Ux{U[0][0] * x[0] + U[0][1] * x[1], U[1][0] * x[0] + U[1][1] * x[1]};
	CHECK(evaluate(gl_transform(f, U), x) == evaluate(f, Ux));
}

TEST_CASE("random unimodular matrices have determinant one")
{
	for (int n : {2, 3, 4})
		for (uint64_t s = 0; s < 5; ++s)
		{
			auto U = random_unimodular(n, s);
			std::vector<std::vector<oracle::Q>> m(U.begin(), U.end());
			CHECK(oracle::determinant(m) == 1);
		}
}

TEST_CASE("products, powers and scaling")
{
	auto q = form_from_expression("x^2 + x y - 2 y^2", 2);
	auto q2 = pow_form(q, 2);
	CHECK(q2 == form_from_expression("x^4 + 2 x^3 y - 3 x^2 y^2 - 4 x y^3 + 4 y^4", 2));
	CHECK(scale(q, Rational(3)) == form_from_expression("3 x^2 + 3 x y - 6 y^2", 2));
	CHECK_THROWS_AS(pow_form(q, 0), InputError);
}

TEST_CASE("positive definiteness")
{
	CHECK(is_positive_definite(form_from_expression("x^4 + y^4", 2)));
	CHECK_FALSE(is_positive_definite(form_from_expression("x^4 - y^4", 2)));
	CHECK_FALSE(is_positive_definite(form_from_expression("x^2 y^2", 2)));
	for (uint64_t s = 0; s < 10; ++s)
		CHECK(is_positive_definite(random_posdef_quartic(s)));
}

TEST_CASE("invariant counts")
{
	for (int r = 2; r <= 6; ++r)
		for (int n = 2; n <= 7; ++n)
			CHECK(invariant_count(n, r) == oracle::invariant_counts[r - 2][n - 2]);
}

TEST_CASE("form files round trip exactly")
{
	auto f = random_form<Rational>({3, 3}, 21);
	auto text = format_form(f);
	CHECK(parse_form(text) == f);
	CHECK(format_form(parse_form(text)) == text);
	auto g = parse_form("# comment\nform n=2 r=3\n3 0 = 0.25\n0 3 = -7/3   # trailing\n");
	CHECK(g.coeff(MultiIndex{3, 0}) == Rational(1, 4));
	CHECK(g.coeff(MultiIndex{0, 3}) == Rational(-7, 3));
	CHECK(g.coeff(MultiIndex{2, 1}) == 0);
}

TEST_CASE("malformed form files are input errors")
{
	CHECK_THROWS_AS(parse_form(""), InputError);
	CHECK_THROWS_AS(parse_form("form n=2\n"), InputError);
	CHECK_THROWS_AS(parse_form("form n=2 r=3\n3 1 = 1\n"), InputError);
	CHECK_THROWS_AS(parse_form("form n=2 r=3\n3 0 = abc\n"), InputError);
	CHECK_THROWS_AS(parse_form("form n=2 r=3\n3 0 1\n"), InputError);
	CHECK_THROWS_AS(form_from_expression("x^2 + y", 2), InputError);
}
