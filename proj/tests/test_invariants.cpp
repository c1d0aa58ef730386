#include "intdisc/formio.h"
#include "intdisc/invariants.h"

#include "oracles.h"

#include <doctest.h>

using namespace intdisc;

namespace {

FormQ hesse(Rational const &m)
{
	return make_form<Rational>({3, 3}, {{{3, 0, 0}, Rational(1)},
	                                    {{0, 3, 0}, Rational(1)},
	                                    {{0, 0, 3}, Rational(1)},
	                                    {{1, 1, 1}, Rational(6) * m}});
}

// f / g is the same nonzero constant for every pair
void check_proportional(std::vector<Rational> const &f, std::vector<Rational> const &g)
{
	REQUIRE(f.size() == g.size());
	REQUIRE(g.front() != 0);
	Rational ratio = f.front() / g.front();
	CHECK(ratio != 0);
	for (size_t i = 0; i < f.size(); ++i)
		CHECK(f[i] == ratio * g[i]);
}

} // namespace

TEST_CASE("binary discriminants match the resultant up to a constant")
{
	for (int r : {3, 4, 5})
	{
		CAPTURE(r);
		std::vector<Rational> ours, classical;
		for (uint64_t seed = 1; seed <= 4; ++seed)
		{
			auto f = random_form<Rational>({2, r}, 40 + seed);
			auto c = oracle::binary_coeffs(f);
			if (c[0] == 0)
				continue;
			ours.push_back(discriminant(compute_invariants(f)));
			classical.push_back(oracle::binary_discriminant(c));
		}
		check_proportional(ours, classical);
	}
}

TEST_CASE("discriminant polynomial agrees with the invariant expression")
{
	for (FormShape sh : {FormShape{2, 3}, FormShape{2, 4}, FormShape{3, 3}})
	{
		CAPTURE(to_string(sh));
		auto f = random_form<Rational>(sh, 8);
		CHECK(eval_aligned(discriminant_polynomial(sh), f.coeffs()) == discriminant(compute_invariants(f)));
	}
}

TEST_CASE("classical cubic discriminant")
{
	Rational a(2), b(-3), c(1, 2), d(5);
	auto f = make_form<Rational>({2, 3}, {{{3, 0}, a}, {{2, 1}, b}, {{1, 2}, c}, {{0, 3}, d}});
	CHECK(discriminant_23_classical(a, b, c, d) == Rational(27, 2) * compute_invariants(f)["I4"]);
	// x^2 y has a double root
	auto g = make_form<Rational>({2, 3}, {{{2, 1}, Rational(1)}});
	CHECK(compute_invariants(g)["I4"] == 0);
}

TEST_CASE("Hesse pencil")
{
	std::vector<Rational> ms{Rational(1, 2), Rational(2), Rational(-1, 3), Rational(3, 5)};
	std::vector<Rational> i4, i6, d, p4, p6, pd;
	for (auto const &m : ms)
	{
		auto inv = compute_invariants(hesse(m));
		i4.push_back(inv["I4"]);
		i6.push_back(inv["I6"]);
		d.push_back(discriminant(inv));
		p4.push_back(m - m * m * m * m);
		Rational m3 = m * m * m;
		p6.push_back(1 - 20 * m3 - 8 * m3 * m3);
		pd.push_back((1 + 8 * m3) * (1 + 8 * m3) * (1 + 8 * m3));
	}
	check_proportional(i4, p4);
	check_proportional(i6, p6);
	check_proportional(d, pd);
	// m = -1/2 is singular
	CHECK(discriminant(compute_invariants(hesse(Rational(-1, 2)))) == 0);
}

TEST_CASE("Fermat cubic")
{
	auto inv = compute_invariants(hesse(0));
	CHECK(inv["I4"] == 0);
	CHECK(inv["I6"] == -6);
	CHECK(discriminant(inv) == 108);
}

TEST_CASE("invariants are unimodular invariant and weighted under scaling")
{
	for (FormShape sh : {FormShape{2, 2}, FormShape{3, 2}, FormShape{2, 3}, FormShape{2, 4}, FormShape{2, 5},
	                     FormShape{3, 3}})
	{
		CAPTURE(to_string(sh));
		auto f = random_form<Rational>(sh, 21);
		auto base = compute_invariants(f);
		auto moved = compute_invariants(gl_transform(f, random_unimodular(sh.n, 5)));
		CHECK(moved.values == base.values);
		Rational mu(-3, 2);
		auto scaled = compute_invariants(scale(f, mu));
		for (size_t k = 0; k < base.values.size(); ++k)
		{
			Rational w = 1;
			for (int e = 0; e < base.degrees[k]; ++e)
				w *= mu;
			CHECK(scaled.values[k] == w * base.values[k]);
		}
	}
}

TEST_CASE("invariants of a squared quadratic")
{
	Rational a(2), b(-1, 3), c(5);
	auto q = make_form<Rational>({2, 2}, {{{2, 0}, a}, {{1, 1}, b}, {{0, 2}, c}});
	auto inv = compute_invariants(pow_form(q, 2));
	auto [i2, i3] = vertical_invariants_24(a, b, c);
	CHECK(inv["I2"] == i2);
	CHECK(inv["I3"] == i3);
	// squares are singular
	CHECK(discriminant(inv) == 0);
}

TEST_CASE("invariant counts")
{
	for (int r = 2; r <= 6; ++r)
		for (int n = 2; n <= 7; ++n)
			CHECK(invariant_count(n, r) == oracle::invariant_counts[r - 2][n - 2]);
}

TEST_CASE("constructed suites")
{
	for (FormShape sh : {FormShape{2, 3}, FormShape{2, 4}, FormShape{2, 5}, FormShape{3, 3}})
	{
		CAPTURE(to_string(sh));
		for (auto const &f : singular_suite(sh))
			CHECK(discriminant(compute_invariants(f)) == 0);
		for (auto const &f : nonsingular_suite(sh))
			CHECK(discriminant(compute_invariants(f)) != 0);
	}
}

TEST_CASE("calibration record")
{
	auto const &rec = default_calibration();
	CHECK(rec.all_passed());
	CHECK(rec.I8.is_homogeneous(8));
	CHECK(rec.I12.is_homogeneous(12));
	auto back = parse_calibration(format_calibration(rec));
	CHECK(back.I8 == rec.I8);
	CHECK(back.I12 == rec.I12);
	CHECK(back.checks.size() == rec.checks.size());
	// a record passed explicitly gives the same invariants
	auto f = random_form<Rational>({2, 5}, 3);
	CHECK(compute_invariants(f, &back).values == compute_invariants(f).values);
}

TEST_CASE("unsupported shapes")
{
	CHECK_FALSE(is_supported({2, 6}));
	CHECK_THROWS_AS(compute_invariants(random_form<Rational>({2, 6}, 1)), InputError);
	CHECK_THROWS_AS(invariant_names({4, 3}), InputError);
}
