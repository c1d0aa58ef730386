#include "intdisc/formio.h"
#include "intdisc/jnr.h"
#include "intdisc/specfun.h"

#include <doctest.h>

#include <cmath>

using namespace intdisc;

namespace {

FormD binary(std::vector<double> c)
{
	int r = static_cast<int>(c.size()) - 1;
	std::vector<std::pair<MultiIndex, double>> e;
	for (int k = 0; k <= r; ++k)
		e.push_back({{r - k, k}, c[k]});
	return make_form<double>({2, r}, e);
}

} // namespace

TEST_CASE("quadratic forms")
{
	CHECK(evaluate_j(binary({1, 0, 1})).value == doctest::Approx(1).epsilon(1e-14));
	CHECK(evaluate_j(binary({4, 0, 1})).value == doctest::Approx(0.5).epsilon(1e-14));
	auto ternary = make_form<double>({3, 2}, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 4.0}, {{0, 0, 2}, 9.0}});
	CHECK(evaluate_j(ternary).value == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("known quartic and quintic values")
{
	CHECK(evaluate_j(binary({1, 0, 0, 0, 1})).value == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-12));
	auto q = evaluate_j(binary({1, 0, 0, 0, 0, 1}));
	CHECK(q.value == doctest::Approx(76.4775248196387).epsilon(1e-11));
	CHECK(q.route == "series");
}

TEST_CASE("exact and double paths agree")
{
	for (FormShape sh : {FormShape{2, 3}, FormShape{2, 4}, FormShape{3, 3}})
	{
		CAPTURE(to_string(sh));
		for (uint64_t seed = 1; seed <= 5; ++seed)
		{
			auto f = random_form<Rational>(sh, seed);
			auto a = evaluate_j(f);
			auto b = evaluate_j(to_double(f));
			if (a.infinite || a.near_singular)
				continue;
			CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
			CHECK(a.phase == doctest::Approx(b.phase));
		}
	}
}

TEST_CASE("discriminant representation matches on t < 1")
{
	auto f = binary({1, 0.3, 0.8, -0.2, 1.4});
	auto base = evaluate_j(f, 1);
	REQUIRE(base.argument.front() < 1);
	CHECK(eval_24_dform(f, 1).value == doctest::Approx(base.value).epsilon(1e-12));
	CHECK(eval_24_dform(f, 2).value == doctest::Approx(evaluate_j(f, 2).value).epsilon(1e-12));
	auto g = make_form<double>({3, 3}, {{{3, 0, 0}, 1.0}, {{0, 3, 0}, 1.0}, {{0, 0, 3}, 1.0}, {{1, 1, 1}, 0.9}});
	for (int branch : {1, 2})
	{
		auto v = evaluate_j(g, branch);
		if (v.argument.front() < 1)
			CHECK(eval_33_dform(g, branch).value == doctest::Approx(v.value).epsilon(1e-12));
	}
}

TEST_CASE("combinations")
{
	auto f = binary({1, 0.3, 0.8, -0.2, 1.4});
	double j1 = evaluate_j(f, 1).value, j2 = evaluate_j(f, 2).value;
	CHECK(evaluate_j(f, 0, 2.0, -0.5).value == doctest::Approx(2 * j1 - 0.5 * j2).epsilon(1e-14));
}

TEST_CASE("homogeneity")
{
	auto f = binary({1, 0.3, 0.8, -0.2, 1.4});
	double mu = 3;
	std::vector<double> c;
	for (double x : f.coeffs())
		c.push_back(mu * x);
	CHECK(evaluate_j(FormD(f.shape(), c)).value == doctest::Approx(std::pow(mu, -0.5) * evaluate_j(f).value).epsilon(1e-13));
}

TEST_CASE("regimes and asymptotics")
{
	// t close to zero: the limit is the value itself
	auto near0 = evaluate_j(binary({1, 0, 1e-4, 0, 1}));
	(void)near0;
	std::vector<double> inv{1.0, 1e-6};
	CHECK(classify_invariants({2, 4}, inv) == Regime::near_zero);
	CHECK(asymptotic_value({2, 4}, inv, Regime::near_zero) ==
	      doctest::Approx(eval_24(1.0, 1e-6, 1).value).epsilon(1e-5));
	CHECK_THROWS_AS(asymptotic_value({2, 4}, inv, Regime::infinity), DomainError);
	// on the locus: infinite with the log coefficient of branch 1
	double I2 = 6, I3 = 6; // t = 6 I3^2 / I2^3 = 1
	auto v = eval_24(I2, I3, 1);
	CHECK(v.infinite);
	CHECK(v.regime == Regime::near_one);
	CHECK(log_coefficient_branch1() == doctest::Approx(-gamma_fn(0.5) / (gamma_fn(1.0 / 12) * gamma_fn(5.0 / 12))));
	// near the locus the log term dominates
	auto w = eval_24(I2, I3 * (1 - 1e-10), 1);
	CHECK(w.near_singular);
	CHECK(std::isfinite(w.value));
}

TEST_CASE("singular forms")
{
	auto f = to_double(form_from_expression("(x - y)^2 * (x^2 + y^2)", 2));
	auto s = classify_singularity(f);
	CHECK(s.relative_discriminant < 1e-12);
	CHECK(evaluate_j(form_from_expression("(x - y)^2 * (x^2 + y^2)", 2)).infinite);
}

TEST_CASE("Fermat cubic")
{
	auto v = evaluate_j(form_from_expression("x^3 + y^3 + z^3", 3));
	CHECK(v.invariants == std::vector<double>{0, -6});
	CHECK(v.discriminant == 108);
	CHECK(std::isfinite(v.value));
}

TEST_CASE("vertical combination")
{
	auto r = vertical_combination_24();
	CHECK(r.limit == doctest::Approx(0.5).epsilon(1e-6));
	CHECK(std::abs(r.log_cancellation) < 1e-12);
	CHECK(!r.samples.empty());
}
