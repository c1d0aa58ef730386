#pragma once

#include "intdisc/forms.h"
#include "intdisc/polyalg.h"

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace intdisc {

// d^2/ds_a ds_b - d^2/ds_p ds_q with a + b = p + q
struct WardQuadruple
{
	MultiIndex a, b, p, q;
};

// all pairs of distinct unordered pairs with equal sums, deduplicated
std::vector<WardQuadruple> ward_pairs(int n, int r);
std::string to_string(WardQuadruple const &w);

using FormFunction = std::function<double(FormD const &)>;

// central mixed second partial in s_a, s_b; with richardson, (4 D(h/2) - D(h)) / 3
double fd_mixed_second(FormFunction const &fn, FormD const &f, MultiIndex const &a, MultiIndex const &b, double h,
                       bool richardson = true);
double fd_first(FormFunction const &fn, FormD const &f, MultiIndex const &a, double h, bool richardson = true);

// step chosen from a ladder of Richardson estimates by local stability
double fd_mixed_second_adaptive(FormFunction const &fn, FormD const &f, MultiIndex const &a, MultiIndex const &b);

// default step: 3e-3 * coefficient scale; balances round-off against the
// fourth-order truncation left after Richardson
double default_step(FormD const &f);

struct WardResidual
{
	double residual;
	double d_ab;
	double d_pq;
};

// |D_ab - D_pq| / (|D_ab| + |D_pq| + floor); h <= 0 selects the adaptive step
WardResidual ward_residual(FormFunction const &fn, FormD const &f, WardQuadruple const &w, double h, double floor);
// floor proportional to |fn(f)| / scale^2
double default_floor(FormFunction const &fn, FormD const &f);

// A_ij = sum_a (a_i + 1 - delta_ij) s_{a + e_i - e_j} d/ds_a, by finite differences
double gl_generator(FormFunction const &fn, FormD const &f, int i, int j, double h);
// sum_a s_a d/ds_a
double euler_operator(FormFunction const &fn, FormD const &f, double h);

// second-order operator in the s-coordinates with polynomial coefficients
struct DiffOperator
{
	struct Second
	{
		SparsePoly coeff;
		MultiIndex a, b;
	};
	struct First
	{
		SparsePoly coeff;
		MultiIndex a;
	};

	FormShape shape;
	std::vector<Second> second;
	std::vector<First> first;
};

SparsePoly apply_operator_exact(DiffOperator const &op, SparsePoly const &p);
// numeric application to a function of the form, derivatives by finite differences
double apply_operator_fd(DiffOperator const &op, FormFunction const &fn, FormD const &f, double h);

DiffOperator build_O0_25();
DiffOperator build_O4_25();
DiffOperator gl_generator_operator(FormShape shape, int i, int j);

// second-order part grouped by a+b sums to zero in every group
bool is_ward_combination(DiffOperator const &op);

// action of an invariant operator on the elementary invariants and their products
struct ActionTable
{
	std::string name;
	FormShape shape;
	std::vector<std::string> invariants;
	std::vector<SparsePoly> linear;
	std::vector<std::vector<SparsePoly>> quadratic; // O(I_k I_m)
};

// "O0_25", "O4_25", "O4_33"; polynomials in the invariant names
ActionTable action_table(std::string const &name);

struct TableCheck
{
	std::string row;
	bool ok;
	SparsePoly residual;
};

// compares op applied to the invariant polynomials (and their products)
// with the table entries
std::vector<TableCheck> verify_action_table(ActionTable const &table, DiffOperator const &op,
                                            std::vector<SparsePoly> const &invariant_polys);

// value, gradient and Hessian of a function of the invariants
struct Jet
{
	double value = 0;
	std::vector<double> grad;
	std::vector<std::vector<double>> hess;
};

struct ChainRuleValue
{
	double value;
	double scale; // sum of magnitudes of the individual contributions
};

// sum_k F_k O I_k + 1/2 sum_km F_km [O(I_k I_m) - I_k O I_m - I_m O I_k]
ChainRuleValue chain_rule_apply(ActionTable const &table, Jet const &F, std::vector<double> const &inv);

struct Residual
{
	double value;
	double scale;
	double relative() const { return scale > 0 ? std::abs(value) / scale : std::abs(value); }
};

Residual ode_residual_24(double G, double dG, double d2G, double z);
Residual ode_residual_33(double G, double dG, double d2G, double z);

// G and its partials up to second order in (u, v)
struct Jet2
{
	double g, gu, gv, guu, guv, gvv;
};
std::pair<Residual, Residual> pde_residuals_25(Jet2 const &G, double u, double v);

} // namespace intdisc
