#include "intdisc/wardops.h"

#include "intdisc/printed.h"
#include "intdisc/tensornet.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

namespace intdisc {

std::vector<WardQuadruple> ward_pairs(int n, int r)
{
	auto ms = monomials({n, r});
	std::map<MultiIndex, std::vector<std::pair<size_t, size_t>>> groups;
	for (size_t i = 0; i < ms.size(); ++i)
		for (size_t j = i; j < ms.size(); ++j)
		{
			MultiIndex s(n);
			for (int k = 0; k < n; ++k)
				s[k] = ms[i][k] + ms[j][k];
			groups[s].emplace_back(i, j);
		}
	std::vector<WardQuadruple> out;
	// deterministic order: by first pair, then second, in canonical monomial order
	for (size_t i = 0; i < ms.size(); ++i)
		for (size_t j = i; j < ms.size(); ++j)
		{
			MultiIndex s(n);
			for (int k = 0; k < n; ++k)
				s[k] = ms[i][k] + ms[j][k];
			for (auto const &[p, q] : groups[s])
				if (std::make_pair(i, j) < std::make_pair(p, q))
					out.push_back({ms[i], ms[j], ms[p], ms[q]});
		}
	return out;
}

std::string to_string(WardQuadruple const &w)
{
	auto name = [](MultiIndex const &a) { return coordinate_name(a); };
	return fmt::format("{}*{} - {}*{}", name(w.a), name(w.b), name(w.p), name(w.q));
}

namespace {

FormD shifted(FormD const &f, size_t ia, double da, size_t ib, double db)
{
	auto c = f.coeffs();
	c[ia] += da;
	c[ib] += db;
	return FormD(f.shape(), std::move(c));
}

double mixed_once(FormFunction const &fn, FormD const &f, size_t ia, size_t ib, double h)
{
	double pp = fn(shifted(f, ia, h, ib, h));
	double pm = fn(shifted(f, ia, h, ib, -h));
	double mp = fn(shifted(f, ia, -h, ib, h));
	double mm = fn(shifted(f, ia, -h, ib, -h));
	return (pp - pm - mp + mm) / (4 * h * h);
}

double first_once(FormFunction const &fn, FormD const &f, size_t ia, double h)
{
	return (fn(shifted(f, ia, h, ia, 0)) - fn(shifted(f, ia, -h, ia, 0))) / (2 * h);
}

} // namespace

double fd_mixed_second(FormFunction const &fn, FormD const &f, MultiIndex const &a, MultiIndex const &b, double h,
                       bool richardson)
{
	if (!(h > 0))
		throw InputError("finite-difference step must be positive");
	size_t ia = monomial_index(f.shape(), a), ib = monomial_index(f.shape(), b);
	double d1 = mixed_once(fn, f, ia, ib, h);
	if (!richardson)
		return d1;
	double d2 = mixed_once(fn, f, ia, ib, h / 2);
	return (4 * d2 - d1) / 3;
}

double fd_first(FormFunction const &fn, FormD const &f, MultiIndex const &a, double h, bool richardson)
{
	if (!(h > 0))
		throw InputError("finite-difference step must be positive");
	size_t ia = monomial_index(f.shape(), a);
	double d1 = first_once(fn, f, ia, h);
	if (!richardson)
		return d1;
	double d2 = first_once(fn, f, ia, h / 2);
	return (4 * d2 - d1) / 3;
}

double fd_mixed_second_adaptive(FormFunction const &fn, FormD const &f, MultiIndex const &a, MultiIndex const &b)
{
	double c = std::max(coefficient_scale(f), 1e-300);
	// Richardson estimates on a geometric ladder; the triple of neighbours that
	// agrees best sits between truncation and round-off
	constexpr int rungs = 7;
	double est[rungs];
	for (int k = 0; k < rungs; ++k)
		est[k] = fd_mixed_second(fn, f, a, b, c * 3e-2 * std::pow(10.0, -0.5 * k));
	auto spread = [&](int k) { return std::max(std::abs(est[k - 1] - est[k]), std::abs(est[k] - est[k + 1])); };
	int best = 1;
	for (int k = 2; k + 1 < rungs; ++k)
		if (spread(k) < spread(best))
			best = k;
	return est[best];
}

double default_step(FormD const &f) { return 3e-3 * std::max(coefficient_scale(f), 1e-300); }

double default_floor(FormFunction const &fn, FormD const &f)
{
	double c = std::max(coefficient_scale(f), 1e-300);
	return 1e-3 * std::abs(fn(f)) / (c * c);
}

WardResidual ward_residual(FormFunction const &fn, FormD const &f, WardQuadruple const &w, double h, double floor)
{
	double dab = h > 0 ? fd_mixed_second(fn, f, w.a, w.b, h) : fd_mixed_second_adaptive(fn, f, w.a, w.b);
	double dpq = h > 0 ? fd_mixed_second(fn, f, w.p, w.q, h) : fd_mixed_second_adaptive(fn, f, w.p, w.q);
	double den = std::abs(dab) + std::abs(dpq) + floor;
	double res = den > 0 ? std::abs(dab - dpq) / den : 0.0;
	if (!std::isfinite(res))
		throw DomainError("non-finite Ward residual; evaluator unreliable near this form");
	return {res, dab, dpq};
}

namespace {

// (a + e_i - e_j, weight) for the generator A_ij acting on d/ds_a
bool generator_source(MultiIndex const &a, int i, int j, MultiIndex &src, int &weight)
{
	src = a;
	src[i] += 1;
	src[j] -= 1;
	if (src[j] < 0)
		return false;
	weight = a[i] + 1 - (i == j ? 1 : 0);
	return true;
}

} // namespace

double gl_generator(FormFunction const &fn, FormD const &f, int i, int j, double h)
{
	int n = f.shape().n;
	if (i < 0 || j < 0 || i >= n || j >= n)
		throw InputError("generator index out of range");
	double total = 0;
	for (auto const &a : monomials(f.shape()))
	{
		MultiIndex src;
		int w = 0;
		if (!generator_source(a, i, j, src, w) || w == 0)
			continue;
		double s = f.coeff(monomial_index(f.shape(), src));
		if (s == 0)
			continue;
		total += w * s * fd_first(fn, f, a, h);
	}
	return total;
}

double euler_operator(FormFunction const &fn, FormD const &f, double h)
{
	double total = 0;
	auto ms = monomials(f.shape());
	for (size_t k = 0; k < ms.size(); ++k)
		if (f.coeff(k) != 0)
			total += f.coeff(k) * fd_first(fn, f, ms[k], h);
	return total;
}

DiffOperator gl_generator_operator(FormShape shape, int i, int j)
{
	if (i < 0 || j < 0 || i >= shape.n || j >= shape.n)
		throw InputError("generator index out of range");
	auto vars = coordinate_names(shape);
	DiffOperator op;
	op.shape = shape;
	for (auto const &a : monomials(shape))
	{
		MultiIndex src;
		int w = 0;
		if (!generator_source(a, i, j, src, w) || w == 0)
			continue;
		op.first.push_back({SparsePoly::variable(vars, coordinate_name(src)) * Rational(w), a});
	}
	return op;
}

SparsePoly apply_operator_exact(DiffOperator const &op, SparsePoly const &p)
{
	auto vars = coordinate_names(op.shape);
	auto q = p.with_vars(union_vars(vars, p.vars()));
	SparsePoly total = SparsePoly::constant(q.vars(), 0);
	// cache first derivatives: several terms share a variable
	std::map<std::string, SparsePoly> d1;
	auto first = [&](std::string const &v) -> SparsePoly const & {
		auto it = d1.find(v);
		if (it == d1.end())
			it = d1.emplace(v, differentiate(q, v)).first;
		return it->second;
	};
	for (auto const &t : op.second)
	{
		auto const &da = first(coordinate_name(t.a));
		if (da.is_zero())
			continue;
		auto dab = differentiate(da, coordinate_name(t.b));
		if (!dab.is_zero())
			total += t.coeff * dab;
	}
	for (auto const &t : op.first)
	{
		auto const &da = first(coordinate_name(t.a));
		if (!da.is_zero())
			total += t.coeff * da;
	}
	return total.with_vars(q.vars());
}

double apply_operator_fd(DiffOperator const &op, FormFunction const &fn, FormD const &f, double h)
{
	if (!(f.shape() == op.shape))
		throw InputError("operator and form shapes differ");
	auto vars = coordinate_names(op.shape);
	double total = 0;
	for (auto const &t : op.second)
	{
		double c = eval_aligned(t.coeff.with_vars(vars), f.coeffs());
		if (c != 0)
			total += c * fd_mixed_second(fn, f, t.a, t.b, h);
	}
	for (auto const &t : op.first)
	{
		double c = eval_aligned(t.coeff.with_vars(vars), f.coeffs());
		if (c != 0)
			total += c * fd_first(fn, f, t.a, h);
	}
	return total;
}

namespace {

struct PairTerm
{
	int weight;
	MultiIndex a, b;
};

// the three Ward combinations entering both 2|5 operators
std::vector<std::vector<PairTerm>> groups_25()
{
	return {{{2, {5, 0}, {1, 4}}, {-8, {4, 1}, {2, 3}}, {6, {3, 2}, {3, 2}}},
	        {{1, {0, 5}, {5, 0}}, {-3, {4, 1}, {1, 4}}, {2, {3, 2}, {2, 3}}},
	        {{2, {4, 1}, {0, 5}}, {-8, {3, 2}, {1, 4}}, {6, {2, 3}, {2, 3}}}};
}

DiffOperator from_groups(std::vector<SparsePoly> const &coeffs)
{
	FormShape shape{2, 5};
	auto vars = coordinate_names(shape);
	DiffOperator op;
	op.shape = shape;
	auto groups = groups_25();
	for (size_t g = 0; g < groups.size(); ++g)
		for (auto const &t : groups[g])
			op.second.push_back({(coeffs[g] * Rational(t.weight)).with_vars(vars), t.a, t.b});
	return op;
}

} // namespace

DiffOperator build_O0_25()
{
	FormShape shape{2, 5};
	return from_groups({tensor_expression("2 S11111 S12222 - 8 S11112 S11222 + 6 S11122^2", shape),
	                    tensor_expression("2 S11111 S22222 - 6 S11112 S12222 + 4 S11122 S11222", shape),
	                    tensor_expression("2 S11112 S22222 - 8 S11122 S12222 + 6 S11222^2", shape)});
}

DiffOperator build_O4_25()
{
	static auto const P = contract_symbolic(builtin_diagram("P_25"), {2, 5});
	auto const &P11 = P.data[0], &P12 = P.data[1], &P22 = P.data[3];
	return from_groups({P11, P12 * Rational(2), P22});
}

bool is_ward_combination(DiffOperator const &op)
{
	std::map<MultiIndex, SparsePoly> sums;
	for (auto const &t : op.second)
	{
		MultiIndex s(t.a.size());
		for (size_t k = 0; k < s.size(); ++k)
			s[k] = t.a[k] + t.b[k];
		sums[s] += t.coeff;
	}
	return std::all_of(sums.begin(), sums.end(), [](auto const &kv) { return kv.second.is_zero(); });
}

ActionTable action_table(std::string const &name)
{
	auto const &pt = printed_table(name);
	ActionTable t;
	t.name = name;
	t.shape = name == "O4_33" ? FormShape{3, 3} : FormShape{2, 5};
	t.invariants = pt.invariants;
	for (auto const &s : pt.linear)
		t.linear.push_back(parse_poly(s, t.invariants));
	for (auto const &row : pt.quadratic)
	{
		std::vector<SparsePoly> r;
		for (auto const &s : row)
			r.push_back(parse_poly(s, t.invariants));
		t.quadratic.push_back(std::move(r));
	}
	return t;
}

std::vector<TableCheck> verify_action_table(ActionTable const &table, DiffOperator const &op,
                                            std::vector<SparsePoly> const &invariant_polys)
{
	if (invariant_polys.size() != table.invariants.size())
		throw InputError("verify_action_table: one polynomial per invariant required");
	auto vars = coordinate_names(op.shape);
	std::vector<SparsePoly> polys;
	for (auto const &p : invariant_polys)
		polys.push_back(p.with_vars(vars));
	std::string opname = table.name.substr(0, table.name.find('_'));
	std::vector<TableCheck> out;
	auto check = [&](std::string row, SparsePoly const &arg, SparsePoly const &entry) {
		auto lhs = apply_operator_exact(op, arg).with_vars(vars);
		auto rhs = compose(entry, polys).with_vars(vars);
		auto res = lhs - rhs;
		out.push_back({std::move(row), res.is_zero(), res});
	};
	size_t k = polys.size();
	for (size_t i = 0; i < k; ++i)
		check(fmt::format("{} {}", opname, table.invariants[i]), polys[i], table.linear[i]);
	for (size_t i = 0; i < k; ++i)
		for (size_t j = i; j < k; ++j)
			check(fmt::format("{} {}*{}", opname, table.invariants[i], table.invariants[j]), polys[i] * polys[j],
			      table.quadratic[i][j]);
	return out;
}

ChainRuleValue chain_rule_apply(ActionTable const &table, Jet const &F, std::vector<double> const &inv)
{
	size_t k = table.invariants.size();
	if (inv.size() != k || F.grad.size() != k || F.hess.size() != k)
		throw InputError("chain_rule_apply: dimension mismatch");
	std::vector<double> L(k);
	for (size_t i = 0; i < k; ++i)
		L[i] = eval_aligned(table.linear[i], inv);
	double value = 0, scale = 0;
	for (size_t i = 0; i < k; ++i)
	{
		double term = F.grad[i] * L[i];
		value += term;
		scale += std::abs(term);
	}
	for (size_t i = 0; i < k; ++i)
		for (size_t j = 0; j < k; ++j)
		{
			if (table.quadratic.size() <= i || table.quadratic[i].size() <= j)
				throw InputError("chain_rule_apply: missing table entry");
			double Q = eval_aligned(table.quadratic[i][j], inv);
			double term = 0.5 * F.hess[i][j] * (Q - inv[i] * L[j] - inv[j] * L[i]);
			value += term;
			scale += std::abs(term);
		}
	return {value, scale};
}

namespace {

Residual sum_terms(std::initializer_list<double> terms)
{
	Residual r{0, 0};
	for (double t : terms)
	{
		r.value += t;
		r.scale += std::abs(t);
	}
	return r;
}

} // namespace

Residual ode_residual_24(double G, double dG, double d2G, double z)
{
	return sum_terms({(144 * z * z - 24 * z) * d2G, (216 * z - 12) * dG, 5 * G});
}

Residual ode_residual_33(double G, double dG, double d2G, double z)
{
	return sum_terms({(144 * z * z + 1536 * z) * d2G, (216 * z + 768) * dG, 5 * G});
}

std::pair<Residual, Residual> pde_residuals_25(Jet2 const &G, double u, double v)
{
	double u2 = u * u, u3 = u2 * u, v2 = v * v, v3 = v2 * v;
	auto first = sum_terms({50 * (-1 + 64 * u) * (u + 6 * u2 + 15 * v) * G.guu,
	                        (75 * u2 + 72000 * v2 + 57600 * v * u2 + 600 * v * u + 7200 * u3 - 250 * v) * G.guv,
	                        (675 * u3 - 13500 * v2 + 10800 * v * u2 - 750 * v * u + 43200 * u * v2) * G.gvv,
	                        (50400 * v + 30720 * u2 - 50 + 5770 * u) * G.gu,
	                        (-300 * u + 60480 * v * u + 11160 * u2 - 7650 * v) * G.gv, (528 * u + 110) * G.g});
	auto second = sum_terms({25 * (-1 + 64 * u) * (5 * u2 + 48 * u * v - 22 * v) * G.guu,
	                         (230400 * u * v2 - 39600 * v2 - 6000 * u3 + 28800 * v * u2 + 6800 * v * u) * G.guv,
	                         (172800 * v3 + 7500 * v2 + 25200 * u * v2 - 7050 * v * u2) * G.gvv,
	                         (-36120 * v + 4000 * u2 + 122880 * v * u + 100 * u) * G.gu,
	                         (241920 * v2 + 19440 * v * u - 9075 * u2 + 7650 * v) * G.gv, (-220 * u + 2112 * v) * G.g});
	return {first, second};
}

} // namespace intdisc
