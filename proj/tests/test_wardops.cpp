#include "intdisc/invariants.h"
#include "intdisc/jnr.h"
#include "intdisc/printed.h"
#include "intdisc/specfun.h"
#include "intdisc/tensornet.h"
#include "intdisc/wardops.h"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace intdisc;

namespace {

FormD quartic()
{
	// positive definite, t well inside (0, 1)
	return make_form<double>({2, 4}, {{{4, 0}, 1.0}, {{3, 1}, 0.3}, {{2, 2}, 0.8}, {{1, 3}, -0.2}, {{0, 4}, 1.4}});
}

double branch_one(FormD const &f) { return evaluate_j(f, 1).value; }

} // namespace

TEST_CASE("ward quadruple counts")
{
	std::map<std::pair<int, int>, size_t> expected{{{2, 2}, 1}, {{3, 2}, 6}, {{2, 3}, 3},
	                                               {{2, 4}, 7}, {{2, 5}, 13}, {{3, 3}, 36}};
	for (auto const &[nr, count] : expected)
	{
		auto ws = ward_pairs(nr.first, nr.second);
		CHECK(ws.size() == count);
		for (auto const &w : ws)
			for (int k = 0; k < nr.first; ++k)
				CHECK(w.a[k] + w.b[k] == w.p[k] + w.q[k]);
	}
	CHECK(to_string(ward_pairs(2, 2).front()) == "s20*s02 - s11*s11");
}

TEST_CASE("ward combinations")
{
	CHECK(is_ward_combination(build_O0_25()));
	CHECK(is_ward_combination(build_O4_25()));
	DiffOperator bad;
	bad.shape = {2, 4};
	bad.second.push_back({SparsePoly(Rational(1)), {4, 0}, {0, 4}});
	CHECK_FALSE(is_ward_combination(bad));
	bad.second.push_back({SparsePoly(Rational(-1)), {2, 2}, {2, 2}});
	CHECK(is_ward_combination(bad));
}

TEST_CASE("generators act on invariants by weight")
{
	struct Case
	{
		FormShape shape;
		std::string name;
		int degree;
	};
	for (auto const &c : {Case{{2, 4}, "I2", 2}, Case{{2, 4}, "I3", 3}, Case{{3, 3}, "I4", 4}, Case{{3, 3}, "I6", 6}})
	{
		CAPTURE(c.name);
		auto const &I = invariant_polynomial(c.shape, c.name);
		for (int i = 0; i < c.shape.n; ++i)
			for (int j = 0; j < c.shape.n; ++j)
			{
				auto image = apply_operator_exact(gl_generator_operator(c.shape, i, j), I);
				if (i != j)
					CHECK(image.is_zero());
				else
					CHECK(image == (I * (Rational(c.degree * c.shape.r) / c.shape.n)).with_vars(image.vars()));
			}
	}
}

TEST_CASE("numeric generators")
{
	auto f = quartic();
	FormFunction i2 = [](FormD const &g) { return compute_invariants(g)["I2"]; };
	double h = default_step(f);
	CHECK(std::abs(gl_generator(i2, f, 0, 1, h)) < 1e-8);
	CHECK(euler_operator(i2, f, h) == doctest::Approx(2 * i2(f)).epsilon(1e-8));
	// J is homogeneous of degree -n/r in the coefficients
	CHECK(euler_operator(branch_one, f, h) == doctest::Approx(-0.5 * branch_one(f)).epsilon(1e-7));
	CHECK(std::abs(gl_generator(branch_one, f, 1, 0, h)) < 1e-7);
	CHECK_THROWS_AS(gl_generator(branch_one, f, 0, 2, h), InputError);
}

TEST_CASE("finite differences")
{
	// exact on a quadratic function of the coefficients
	FormFunction g = [](FormD const &f) { return f.coeff(0) * f.coeff(2) + 3 * f.coeff(1) * f.coeff(1); };
	auto f = quartic();
	CHECK(fd_mixed_second(g, f, {4, 0}, {2, 2}, 1e-2) == doctest::Approx(1.0).epsilon(1e-9));
	CHECK(fd_mixed_second(g, f, {3, 1}, {3, 1}, 1e-2) == doctest::Approx(6.0).epsilon(1e-9));
	CHECK(fd_first(g, f, {3, 1}, 1e-2) == doctest::Approx(6 * 0.3).epsilon(1e-9));
	CHECK(fd_mixed_second_adaptive(g, f, {4, 0}, {2, 2}) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("ward identities hold for J and fail for a perturbation")
{
	auto f = quartic();
	FormFunction bent = [](FormD const &g) { return branch_one(g) * std::pow(std::abs(compute_invariants(g)["I2"]), 0.2); };
	double floor = default_floor(branch_one, f);
	double worst = 0, control = 0;
	for (auto const &w : ward_pairs(2, 4))
	{
		worst = std::max(worst, ward_residual(branch_one, f, w, 0, floor).residual);
		control = std::max(control, ward_residual(bent, f, w, 0, floor).residual);
	}
	CHECK(worst < 1e-5);
	CHECK(control > 1e-2);
}

TEST_CASE("ODE residuals vanish on hypergeometric solutions")
{
	for (double z : {-0.4, 0.02, 0.1})
	{
		CAPTURE(z);
		double t = 6 * z;
		auto r = ode_residual_24(gauss_2f1(1.0 / 12, 5.0 / 12, 0.5, t),
		                         6 * gauss_2f1_derivative(1.0 / 12, 5.0 / 12, 0.5, t, 1),
		                         36 * gauss_2f1_derivative(1.0 / 12, 5.0 / 12, 0.5, t, 2), z);
		CHECK(r.relative() < 1e-12);
		double k = -3.0 / 32;
		double s = k * z;
		auto q = ode_residual_33(gauss_2f1(1.0 / 12, 5.0 / 12, 0.5, s),
		                         k * gauss_2f1_derivative(1.0 / 12, 5.0 / 12, 0.5, s, 1),
		                         k * k * gauss_2f1_derivative(1.0 / 12, 5.0 / 12, 0.5, s, 2), z);
		CHECK(q.relative() < 1e-12);
	}
	// a wrong function leaves a residual
	CHECK(ode_residual_24(1, 0, 0, 0.1).relative() > 0.1);
}

TEST_CASE("PDE residuals vanish on the two-variable series")
{
	for (auto [u, v] : {std::pair{0.002, 0.001}, std::pair{-0.004, 0.002}, std::pair{0.01, -0.001}})
	{
		auto s = series_g25(u, v);
		auto [a, b] = pde_residuals_25({s.g, s.gu, s.gv, s.guu, s.guv, s.gvv}, u, v);
		CHECK(a.relative() < 1e-10);
		CHECK(b.relative() < 1e-10);
	}
}

TEST_CASE("action tables check against the invariant polynomials")
{
	FormShape shape{2, 5};
	auto vars = coordinate_names(shape);
	auto const &rec = default_calibration();
	std::vector<SparsePoly> polys{printed_polynomial("I4_25").with_vars(vars), rec.I8, rec.I12};
	auto checks = verify_action_table(action_table("O0_25"), build_O0_25(), polys);
	CHECK(!checks.empty());
	for (auto const &c : checks)
	{
		CAPTURE(c.row);
		CHECK(c.ok);
	}
	// swapping I8 and I12 breaks the table
	std::swap(polys[1], polys[2]);
	bool any_fail = false;
	for (auto const &c : verify_action_table(action_table("O0_25"), build_O0_25(), polys))
		any_fail |= !c.ok;
	CHECK(any_fail);
}
