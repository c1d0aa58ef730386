#include "intdisc/printed.h"
#include "intdisc/tensornet.h"

#include "oracles.h"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace intdisc;

namespace {

FormD random_double(FormShape shape, uint64_t seed)
{
	return random_form<double>(shape, seed);
}

std::map<std::string, Rational> coordinate_point(FormQ const &f)
{
	std::map<std::string, Rational> pt;
	auto names = coordinate_names(f.shape());
	for (size_t i = 0; i < names.size(); ++i)
		pt[names[i]] = f.coeff(i);
	return pt;
}

} // namespace

TEST_CASE("numeric contraction matches a brute-force index sum")
{
	for (std::string name : {"I4_23", "I2_24", "I3_24", "I4_25", "I4_33", "det_2", "det_3"})
	{
		auto d = builtin_diagram(name);
		CAPTURE(name);
		for (uint64_t seed = 1; seed <= 3; ++seed)
		{
			auto f = random_double({d.n, d.r}, seed * 17 + name.size());
			double got = contract_numeric(d, f).scalar();
			double want = oracle::brute_contract(d, f);
			CHECK(std::abs(got - want) <= 1e-9 * (1 + std::abs(want)));
		}
	}
}

TEST_CASE("symbolic contraction agrees with exact numeric contraction")
{
	for (auto const &name : builtin_diagram_names())
	{
		auto d = builtin_diagram(name);
		if (!d.free_slots.empty())
			continue;
		CAPTURE(name);
		auto f = random_form<Rational>({d.n, d.r}, 99);
		auto sym = contract_symbolic(d, {d.n, d.r}).scalar();
		CHECK(eval_poly(sym, coordinate_point(f)) == contract_numeric(d, f).scalar());
	}
}

TEST_CASE("symbolic contractions reproduce the printed expansions")
{
	for (std::string name : {"I4_23", "I2_24", "I3_24", "I4_25", "I4_33"})
	{
		CAPTURE(name);
		auto d = builtin_diagram(name);
		auto sym = contract_symbolic(d, {d.n, d.r}).scalar();
		CHECK(sym == printed_polynomial(name).with_vars(sym.vars()));
	}
}

TEST_CASE("determinant diagrams compute determinants")
{
	auto f = make_form<Rational>({2, 2}, {{{2, 0}, Rational(3)}, {{1, 1}, Rational(2)}, {{0, 2}, Rational(5)}});
	// S = [[3,1],[1,5]]
	auto v = contract_numeric(builtin_diagram("det_2"), f).scalar();
	CHECK(v == 14);
	auto g = make_form<Rational>({3, 2}, {{{2, 0, 0}, Rational(1)}, {{0, 2, 0}, Rational(2)}, {{0, 0, 2}, Rational(3)}});
	CHECK(contract_numeric(builtin_diagram("det_3"), g).scalar() == 6);
}

TEST_CASE("free slots produce a tensor of matching rank")
{
	auto d = builtin_diagram("P_25");
	REQUIRE(!d.free_slots.empty());
	auto f = random_form<Rational>({2, 5}, 4);
	auto t = contract_numeric(d, f);
	CHECK(t.labels.size() == d.free_slots.size());
	CHECK(t.data.size() == static_cast<size_t>(std::pow(2, d.free_slots.size())));
}

TEST_CASE("contraction plans are reasonable")
{
	for (auto const &name : builtin_diagram_names())
	{
		CAPTURE(name);
		auto d = builtin_diagram(name);
		auto plan = plan_order(d);
		CHECK(plan.initial_tensors == static_cast<int>(d.nodes.size()));
		CHECK(plan.merges.size() + 1 == d.nodes.size());
		CHECK(plan.max_rank() <= 8);
	}
}

TEST_CASE("malformed diagrams are rejected")
{
	ContractionDiagram d;
	d.n = 2;
	d.r = 2;
	d.add_node(NodeKind::form);
	CHECK_THROWS_AS(d.add_eps({{0, 0}}), InputError);
	d.add_eps({{0, 0}, {0, 1}});
	// legal, and a symmetric tensor against eps vanishes
	CHECK_NOTHROW(d.validate());
	CHECK(contract_numeric(d, random_form<Rational>({2, 2}, 7)).scalar() == 0);
	d.free_slots.push_back({0, 1});
	CHECK_THROWS_AS(d.validate(), InputError);

	ContractionDiagram e;
	e.n = 2;
	e.r = 2;
	e.add_node(NodeKind::form);
	e.add_node(NodeKind::form);
	e.add_eps({{0, 0}, {1, 0}});
	e.add_eps({{0, 0}, {1, 1}});
	CHECK_THROWS_AS(e.validate(), InputError);

	CHECK_THROWS_AS(builtin_diagram("nope"), InputError);
	CHECK_THROWS_AS(contract_numeric(builtin_diagram("I2_24"), random_form<double>({2, 3}, 1)), InputError);
}
