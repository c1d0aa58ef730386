#include "intdisc/polyalg.h"

#include <doctest.h>

#include <map>

using namespace intdisc;

TEST_CASE("arithmetic and normal form")
{
	auto p = parse_poly("x^2 + 2 x y + y^2", {"x", "y"});
	auto x = SparsePoly::variable({"x", "y"}, "x"), y = SparsePoly::variable({"x", "y"}, "y");
	CHECK(p == pow(x + y, 2));
	CHECK((p - p).is_zero());
	CHECK(p.monomial_count() == 3);
	CHECK(p.is_homogeneous(2));
	CHECK(exact_divide(p, x + y) == x + y);
	CHECK_THROWS_AS(exact_divide(p, x + Rational(2) * y), DomainError);
}

TEST_CASE("differentiation and composition")
{
	auto p = parse_poly("x^3 y - 1/2 y^2", {"x", "y"});
	CHECK(differentiate(p, "x") == parse_poly("3 x^2 y", {"x", "y"}));
	auto s = SparsePoly::variable({"s", "t"}, "s"), t = SparsePoly::variable({"s", "t"}, "t");
	auto c = compose(p, {s + t, s - t});
	CHECK(eval_poly(c, {{"s", Rational(2)}, {"t", Rational(1)}}) ==
	      eval_poly(p, {{"x", Rational(3)}, {"y", Rational(1)}}));
}

TEST_CASE("quadratic discriminant normalization")
{
	auto p = parse_poly("a s^2 + b s + c", {"s", "a", "b", "c"});
	CHECK(discriminant_uni(p, "s").with_vars({"a", "b", "c"}) == parse_poly("b^2 - 4 a c", {"a", "b", "c"}));
	// cubic discriminant, classical form
	auto q = parse_poly("s^3 + p s + q", {"s", "p", "q"});
	CHECK(discriminant_uni(q, "s").with_vars({"p", "q"}) == parse_poly("-4 p^3 - 27 q^2", {"p", "q"}));
}

TEST_CASE("resultant vanishes on a common root")
{
	auto f = parse_poly("s^2 - 3 s + 2", {"s"}); // roots 1, 2
	auto g = parse_poly("s^2 - 4", {"s"});       // roots -2, 2
	CHECK(resultant(f, g, "s").is_zero());
	auto h = parse_poly("s^2 + 1", {"s"});
	CHECK_FALSE(resultant(f, h, "s").is_zero());
}

TEST_CASE("golden dump round trip")
{
	auto p = parse_poly("3/4 x^2 z - x y z + 7", {"x", "y", "z"});
	auto text = dump_poly(p);
	CHECK(read_poly_dump(text, {"x", "y", "z"}) == p);
}

TEST_CASE("cached evaluator agrees with exact evaluation")
{
	auto p = parse_poly("x^3 - 2 x y^2 + 5/3 y z + 1", {"x", "y", "z"});
	PolyEvaluator ev(p);
	std::vector<double> v{0.3, -1.2, 2.5};
	double exact = eval_poly(p, std::map<std::string, double>{{"x", 0.3}, {"y", -1.2}, {"z", 2.5}});
	CHECK(ev(v) == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("parser rejects malformed input")
{
	CHECK_THROWS_AS(parse_poly("x^", {"x"}), InputError);
	CHECK_THROWS_AS(parse_poly("x + * y", {"x", "y"}), InputError);
	CHECK_THROWS_AS(parse_poly("q", {"x"}), InputError);
}
