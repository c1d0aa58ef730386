#include "intdisc/jnr.h"

#include "intdisc/specfun.h"

#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace intdisc {

std::string to_string(Regime r)
{
	switch (r)
	{
	case Regime::near_zero: return "near-0";
	case Regime::interior: return "interior";
	case Regime::near_one: return "near-1";
	case Regime::beyond_one: return "beyond-1";
	case Regime::infinity: return "infinity";
	}
	return "?";
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double near_zero_threshold = 1e-6;
constexpr double infinity_threshold = 1e6;

struct Power
{
	double modulus;
	double phase;
};

// x^e as modulus and phase; x < 0 gets phase e (units of pi)
Power real_power(double x, double e)
{
	if (x == 0)
		throw DomainError("zero raised to a negative power");
	if (x > 0)
		return {std::pow(x, e), 0};
	return {std::pow(-x, e), e};
}

struct BranchParams
{
	double a, b, c;
};
constexpr BranchParams branch1{1.0 / 12, 5.0 / 12, 0.5};
constexpr BranchParams branch2{7.0 / 12, 11.0 / 12, 1.5};

BranchParams params(int branch)
{
	if (branch == 1)
		return branch1;
	if (branch == 2)
		return branch2;
	throw InputError(fmt::format("branch must be 1 or 2, got {}", branch));
}

struct HypValue
{
	double value;
	bool near = false;
	bool infinite = false;
	double log_coefficient = 0;
	std::string route;
};

// c = a + b for both branches, so the locus singularity is logarithmic
HypValue branch_hyp(BranchParams p, double t)
{
	double k = gamma_fn(p.c) * rgamma(p.a) * rgamma(p.b);
	if (t == 1)
		return {inf, false, true, -k, "locus"};
	double d = std::abs(1 - t);
	if (d < near_locus_threshold)
	{
		double v = k * (2 * digamma(1.0) - digamma(p.a) - digamma(p.b) - std::log(d));
		return {v, true, false, -k, "log-asymptotic"};
	}
	auto r = gauss_2f1_ex(p.a, p.b, p.c, t);
	return {r.value, false, false, 0, to_string(r.route)};
}

Regime regime_of_t(double t)
{
	if (std::isinf(t) || std::abs(t) > infinity_threshold)
		return Regime::infinity;
	if (std::abs(1 - t) < near_locus_threshold)
		return Regime::near_one;
	if (std::abs(t) < near_zero_threshold)
		return Regime::near_zero;
	if (t > 1)
		return Regime::beyond_one;
	return Regime::interior;
}

double gamma_ratio_infinity(int branch)
{
	if (branch == 1)
		return gamma_fn(0.5) * gamma_fn(1.0 / 3) / std::pow(gamma_fn(5.0 / 12), 2);
	return gamma_fn(1.0 / 3) * gamma_fn(1.5) / std::pow(gamma_fn(11.0 / 12), 2);
}

std::vector<double> invariant_values(FormD const &f, CalibrationRecord const *calib)
{
	return compute_invariants(f, calib).values;
}

std::vector<std::string> names_of(FormShape shape)
{
	std::vector<std::string> v;
	for (auto const &[n, d] : invariant_names(shape))
		v.push_back(n);
	return v;
}

double sign(double x) { return x < 0 ? -1.0 : 1.0; }

// shared by 2|4 (I2, I3, t = 6 I3^2/I2^3, kappa = 6) and 3|3 (I4, I6,
// t = -3 I6^2/(32 I4^3), kappa = 3/32)
BranchValue hyp_case(FormShape shape, double P, double Q, double t, double kappa, double Dval, int branch)
{
	auto bp = params(branch);
	BranchValue out;
	out.shape = shape;
	out.branch = branch;
	out.invariant_names = names_of(shape);
	out.invariants = {P, Q};
	out.discriminant = Dval;
	out.argument = {t};
	out.regime = regime_of_t(t);
	if (P == 0)
	{
		if (Q == 0)
			throw DomainError("both invariants vanish; no expansion point");
		// exact limit of the 1/t expansion
		double e = branch == 1 ? 1.0 / 12 : 7.0 / 12;
		out.value = gamma_ratio_infinity(branch) * std::pow(kappa, -e) * std::pow(std::abs(Q), -1.0 / 6);
		if (branch == 2)
			out.value *= sign(Q);
		out.route = "infinity-limit";
		return out;
	}
	auto pw = real_power(P, branch == 1 ? -0.25 : -1.75);
	auto h = branch_hyp(bp, t);
	out.phase = pw.phase;
	out.near_singular = h.near;
	out.infinite = h.infinite;
	out.log_coefficient = h.log_coefficient;
	out.route = h.route;
	double pref = pw.modulus * (branch == 2 ? Q : 1.0);
	out.value = h.infinite ? inf * sign(pref) : pref * h.value;
	if (h.infinite || h.near)
		out.log_coefficient *= pref;
	return out;
}

} // namespace

double log_coefficient_branch1() { return -gamma_fn(0.5) * rgamma(1.0 / 12) * rgamma(5.0 / 12); }
double log_coefficient_branch2() { return -gamma_fn(1.5) * rgamma(7.0 / 12) * rgamma(11.0 / 12); }
double infinity_coefficient(int branch)
{
	params(branch);
	return gamma_ratio_infinity(branch);
}

namespace {

BranchValue gaussian_case(FormShape shape, double det)
{
	if (det == 0)
		throw DomainError("singular quadratic form (det = 0)");
	auto pw = real_power(det, -0.5);
	BranchValue out;
	out.shape = shape;
	out.invariant_names = {"det"};
	out.invariants = {det};
	out.discriminant = det;
	out.value = pw.modulus;
	out.phase = pw.phase;
	out.route = "closed-form";
	return out;
}

BranchValue cubic_case(double I4)
{
	if (I4 == 0)
		throw DomainError("discriminant I4 vanishes");
	auto pw = real_power(I4, -1.0 / 6);
	BranchValue out;
	out.shape = {2, 3};
	out.invariant_names = {"I4"};
	out.invariants = {I4};
	out.discriminant = I4;
	out.value = pw.modulus;
	out.phase = pw.phase;
	out.route = "closed-form";
	return out;
}

} // namespace

BranchValue eval_gaussian(FormD const &f)
{
	if (f.shape().r != 2)
		throw InputError("Gaussian evaluator needs a quadratic form");
	return gaussian_case(f.shape(), determinant(quadratic_matrix(f)));
}

BranchValue eval_23(FormD const &f)
{
	if (!(f.shape() == FormShape{2, 3}))
		throw InputError("eval_23 needs a binary cubic");
	return cubic_case(invariant_values(f, nullptr)[0]);
}

BranchValue eval_24(double I2, double I3, int branch)
{
	double D = I2 * I2 * I2 - 6 * I3 * I3;
	double t = I2 == 0 ? inf : 6 * I3 * I3 / (I2 * I2 * I2);
	return hyp_case({2, 4}, I2, I3, t, 6.0, D, branch);
}

BranchValue eval_33(double I4, double I6, int branch)
{
	double D = 32 * I4 * I4 * I4 + 3 * I6 * I6;
	double t = I4 == 0 ? inf : -3 * I6 * I6 / (32 * I4 * I4 * I4);
	return hyp_case({3, 3}, I4, I6, t, 3.0 / 32, D, branch);
}

BranchValue eval_24(FormD const &f, int branch)
{
	if (!(f.shape() == FormShape{2, 4}))
		throw InputError("eval_24 needs a binary quartic");
	auto v = invariant_values(f, nullptr);
	return eval_24(v[0], v[1], branch);
}

BranchValue eval_33(FormD const &f, int branch)
{
	if (!(f.shape() == FormShape{3, 3}))
		throw InputError("eval_33 needs a ternary cubic");
	auto v = invariant_values(f, nullptr);
	return eval_33(v[0], v[1], branch);
}

namespace {

BranchValue dform(FormShape shape, double Q, double D, double t, double z, double k, int branch)
{
	if (!(t < 1))
		throw DomainError("discriminant representation needs t < 1");
	BranchValue out;
	out.shape = shape;
	out.branch = branch;
	out.discriminant = D;
	out.argument = {z};
	out.regime = regime_of_t(t);
	double e = branch == 1 ? 1.0 / 12 : 7.0 / 12;
	double a = branch == 1 ? 1.0 / 12 : 7.0 / 12;
	double c = branch == 1 ? 0.5 : 1.5;
	auto r = gauss_2f1_ex(a, a, c, z);
	out.route = "dform-" + to_string(r.route);
	out.value = std::pow(k, e) * std::pow(std::abs(D), -e) * r.value * (branch == 2 ? Q : 1.0);
	return out;
}

} // namespace

BranchValue eval_24_dform(FormD const &f, int branch)
{
	params(branch);
	auto v = invariant_values(f, nullptr);
	double I2 = v[0], I3 = v[1];
	double D = I2 * I2 * I2 - 6 * I3 * I3;
	if (I2 == 0 || D == 0)
		throw DomainError("discriminant representation undefined on the locus or at I2 = 0");
	auto out = dform({2, 4}, I3, D, 6 * I3 * I3 / (I2 * I2 * I2), -6 * I3 * I3 / D, 1.0, branch);
	out.invariant_names = names_of({2, 4});
	out.invariants = v;
	return out;
}

BranchValue eval_33_dform(FormD const &f, int branch)
{
	params(branch);
	auto v = invariant_values(f, nullptr);
	double I4 = v[0], I6 = v[1];
	double D = 32 * I4 * I4 * I4 + 3 * I6 * I6;
	if (I4 == 0 || D == 0)
		throw DomainError("discriminant representation undefined on the locus or at I4 = 0");
	auto out = dform({3, 3}, I6, D, -3 * I6 * I6 / (32 * I4 * I4 * I4), 3 * I6 * I6 / D, 32.0, branch);
	out.invariant_names = names_of({3, 3});
	out.invariants = v;
	return out;
}

BranchValue eval_25(double I4, double I8, double I12)
{
	if (I4 == 0)
		throw DomainError("I4 vanishes; the expansion in I8/I4^2, I12/I4^3 is undefined");
	double u = I8 / (I4 * I4), w = I12 / (I4 * I4 * I4);
	BranchValue out;
	out.shape = {2, 5};
	out.invariant_names = names_of(out.shape);
	out.invariants = {I4, I8, I12};
	out.discriminant = I4 * I4 - 64 * I8;
	out.argument = {u, w};
	out.regime = classify_invariants(out.shape, out.invariants);
	auto pw = real_power(I4, -0.1);
	out.phase = pw.phase;
	double g;
	try
	{
		g = series_g25(u, w).g;
		out.route = "series";
	}
	catch (DomainError const &)
	{
		try
		{
			g = integral_g25(u, w);
		}
		catch (DomainError const &e)
		{
			throw DomainError(fmt::format("series diverges and integral route inadmissible: {}", e.what()));
		}
		out.route = "integral";
		out.locus_onset = kernel_check_g25(u, w).near_locus;
	}
	out.value = pw.modulus * g;
	return out;
}

BranchValue eval_25(FormD const &f, CalibrationRecord const *calib)
{
	if (!(f.shape() == FormShape{2, 5}))
		throw InputError("eval_25 needs a binary quintic");
	auto v = invariant_values(f, calib);
	return eval_25(v[0], v[1], v[2]);
}

BranchValue eval_invariants(FormShape shape, std::vector<double> const &inv, int branch, double c1, double c2)
{
	bool two = shape == FormShape{2, 4} || shape == FormShape{3, 3};
	if (branch == 0)
	{
		if (!two)
			throw InputError("branch combinations exist only for 2|4 and 3|3");
		auto b1 = eval_invariants(shape, inv, 1), b2 = eval_invariants(shape, inv, 2);
		auto out = b1;
		out.branch = 0;
		out.c1 = c1;
		out.c2 = c2;
		out.value = c1 * b1.value + c2 * b2.value;
		out.log_coefficient = c1 * b1.log_coefficient + c2 * b2.log_coefficient;
		out.infinite = b1.infinite || b2.infinite;
		return out;
	}
	if (branch != 1 && !(two && branch == 2))
		throw InputError(fmt::format("branch {} not available for {}", branch, to_string(shape)));
	if (inv.size() != invariant_names(shape).size())
		throw InputError("wrong number of invariant values for " + to_string(shape));
	if (shape.r == 2)
		return gaussian_case(shape, inv[0]);
	if (shape == FormShape{2, 3})
		return cubic_case(inv[0]);
	if (shape == FormShape{2, 4})
		return eval_24(inv[0], inv[1], branch);
	if (shape == FormShape{2, 5})
		return eval_25(inv[0], inv[1], inv[2]);
	if (shape == FormShape{3, 3})
		return eval_33(inv[0], inv[1], branch);
	throw InputError("no evaluator for shape " + to_string(shape));
}

BranchValue evaluate_j(FormD const &f, int branch, double c1, double c2, CalibrationRecord const *calib)
{
	if (!is_supported(f.shape()))
		throw InputError("no evaluator for shape " + to_string(f.shape()));
	return eval_invariants(f.shape(), compute_invariants(f, calib).values, branch, c1, c2);
}

BranchValue evaluate_j(FormQ const &f, int branch, double c1, double c2, CalibrationRecord const *calib)
{
	if (!is_supported(f.shape()))
		throw InputError("no evaluator for shape " + to_string(f.shape()));
	std::vector<double> inv;
	for (auto const &q : compute_invariants(f, calib).values)
		inv.push_back(q.get_d());
	return eval_invariants(f.shape(), inv, branch, c1, c2);
}

Regime classify_invariants(FormShape shape, std::vector<double> const &inv, double scale)
{
	if (shape.r == 2 || shape == FormShape{2, 3})
	{
		int deg = shape.r == 2 ? shape.n : 4;
		double rel = std::abs(inv[0]) / std::pow(scale, deg);
		return rel < near_locus_threshold ? Regime::near_one : Regime::interior;
	}
	if (shape == FormShape{2, 4})
		return inv[0] == 0 ? Regime::infinity : regime_of_t(6 * inv[1] * inv[1] / std::pow(inv[0], 3));
	if (shape == FormShape{3, 3})
		return inv[0] == 0 ? Regime::infinity : regime_of_t(-3 * inv[1] * inv[1] / (32 * std::pow(inv[0], 3)));
	if (shape == FormShape{2, 5})
	{
		if (inv[0] == 0)
			return Regime::infinity;
		double u = inv[1] / (inv[0] * inv[0]), v = inv[2] / std::pow(inv[0], 3);
		if (std::abs(1 - 64 * u) < near_locus_threshold)
			return Regime::near_one;
		if (std::max(std::abs(u), std::abs(v)) < near_zero_threshold)
			return Regime::near_zero;
		if (64 * u > 1)
			return Regime::beyond_one;
		if (std::max(std::abs(u), std::abs(v)) > infinity_threshold)
			return Regime::infinity;
		return Regime::interior;
	}
	throw InputError("unsupported shape " + to_string(shape));
}

double asymptotic_value(FormShape shape, std::vector<double> const &inv, Regime regime, int branch)
{
	auto actual = classify_invariants(shape, inv);
	if (actual != regime)
		throw DomainError(fmt::format("regime mismatch: requested {}, invariants are in {}", to_string(regime),
		                              to_string(actual)));
	bool hyp = shape == FormShape{2, 4} || shape == FormShape{3, 3};
	if (!hyp)
	{
		if (shape == FormShape{2, 5})
		{
			if (regime == Regime::near_zero)
				return std::pow(std::abs(inv[0]), -0.1) * series_g25(0, 0).g;
			throw DomainError("no leading asymptotic form for 2|5 outside the near-0 regime");
		}
		if (inv[0] == 0)
			return inf;
		return std::pow(std::abs(inv[0]), shape.r == 2 ? -0.5 : -1.0 / 6);
	}
	double P = inv[0], Q = inv[1];
	double kappa = shape == FormShape{2, 4} ? 6.0 : 3.0 / 32;
	auto bp = params(branch);
	double pexp = branch == 1 ? -0.25 : -1.75;
	double qf = branch == 2 ? Q : 1.0;
	switch (regime)
	{
	case Regime::near_zero: return std::pow(std::abs(P), pexp) * qf;
	case Regime::near_one:
	{
		double t = shape == FormShape{2, 4} ? 6 * Q * Q / std::pow(P, 3) : -3 * Q * Q / (32 * std::pow(P, 3));
		double k = -gamma_fn(bp.c) * rgamma(bp.a) * rgamma(bp.b);
		double pref = std::pow(std::abs(P), pexp) * qf;
		if (t == 1)
			return inf * sign(pref);
		return pref * k * std::log(std::abs(1 - t));
	}
	case Regime::infinity:
	{
		if (Q == 0)
			throw DomainError("both invariants vanish");
		double e = branch == 1 ? 1.0 / 12 : 7.0 / 12;
		return gamma_ratio_infinity(branch) * std::pow(kappa, -e) * std::pow(std::abs(Q), -1.0 / 6) *
		       (branch == 2 ? sign(Q) : 1.0);
	}
	case Regime::interior:
	case Regime::beyond_one:
		return shape == FormShape{2, 4} ? eval_24(P, Q, branch).value : eval_33(P, Q, branch).value;
	}
	return 0;
}

double asymptotic_value(FormD const &f, Regime regime, int branch, CalibrationRecord const *calib)
{
	auto inv = invariant_values(f, calib);
	auto shape = f.shape();
	// quadratic and cubic classification is relative to the coefficient scale
	if (shape.r == 2 || shape == FormShape{2, 3})
	{
		auto actual = classify_invariants(shape, inv, coefficient_scale(f));
		if (actual != regime)
			throw DomainError(fmt::format("regime mismatch: requested {}, form is in {}", to_string(regime),
			                              to_string(actual)));
		return inv[0] == 0 ? inf : std::pow(std::abs(inv[0]), shape.r == 2 ? -0.5 : -1.0 / 6);
	}
	return asymptotic_value(shape, inv, regime, branch);
}

SingularityReport classify_singularity(FormD const &f, CalibrationRecord const *calib)
{
	auto shape = f.shape();
	auto inv = invariant_values(f, calib);
	SingularityReport rep{shape, {}, Regime::interior, 0, 0, 0};
	double scale = coefficient_scale(f);
	if (shape.r == 2 || shape == FormShape{2, 3})
	{
		int deg = shape.r == 2 ? shape.n : 4;
		rep.discriminant = inv[0];
		rep.relative_discriminant = std::abs(inv[0]) / std::pow(scale, deg);
	}
	else if (shape == FormShape{2, 4})
	{
		double I2 = inv[0], I3 = inv[1];
		rep.discriminant = I2 * I2 * I2 - 6 * I3 * I3;
		rep.relative_discriminant = std::abs(rep.discriminant) / (std::abs(I2 * I2 * I2) + 6 * I3 * I3);
		rep.argument = {I2 == 0 ? inf : 6 * I3 * I3 / (I2 * I2 * I2)};
	}
	else if (shape == FormShape{3, 3})
	{
		double I4 = inv[0], I6 = inv[1];
		rep.discriminant = 32 * I4 * I4 * I4 + 3 * I6 * I6;
		rep.relative_discriminant = std::abs(rep.discriminant) / (32 * std::abs(I4 * I4 * I4) + 3 * I6 * I6);
		rep.argument = {I4 == 0 ? inf : -3 * I6 * I6 / (32 * I4 * I4 * I4)};
	}
	else if (shape == FormShape{2, 5})
	{
		double I4 = inv[0], I8 = inv[1], I12 = inv[2];
		rep.discriminant = I4 * I4 - 64 * I8;
		rep.relative_discriminant = std::abs(rep.discriminant) / (I4 * I4 + 64 * std::abs(I8));
		if (I4 != 0)
			rep.argument = {I8 / (I4 * I4), I12 / (I4 * I4 * I4)};
	}
	else
		throw InputError("unsupported shape " + to_string(shape));
	rep.regime = (shape.r == 2 || shape == FormShape{2, 3}) ? classify_invariants(shape, inv, scale)
	                                                         : classify_invariants(shape, inv);
	try
	{
		rep.leading = asymptotic_value(f, rep.regime, 1, calib);
	}
	catch (DomainError const &)
	{
		rep.leading = std::nan("");
	}
	return rep;
}

VerticalResult vertical_combination_24()
{
	double k1 = gamma_fn(0.5) * rgamma(1.0 / 12) * rgamma(5.0 / 12);
	double k2 = gamma_fn(1.5) * rgamma(7.0 / 12) * rgamma(11.0 / 12);
	double w1 = std::pow(6.0, 0.25) * k2, w2 = std::pow(6.0, -0.25) * k1;
	auto L = [&](double d) {
		double t = 1 - d;
		double A1 = std::pow(6.0, -0.25) * gauss_2f1(1.0 / 12, 5.0 / 12, 0.5, t);
		double A2 = std::pow(6.0, 0.25) * gauss_2f1(7.0 / 12, 11.0 / 12, 1.5, t);
		return w1 * A1 - w2 * A2;
	};
	// L(d) = L0 + c d log d + e d
	auto extrapolate = [&](std::array<double, 3> ds, std::vector<std::pair<double, double>> *out) {
		double m[3][4];
		for (int i = 0; i < 3; ++i)
		{
			double d = ds[i], y = L(d);
			if (out)
				out->emplace_back(d, y);
			m[i][0] = 1;
			m[i][1] = d * std::log(d);
			m[i][2] = d;
			m[i][3] = y;
		}
		for (int c = 0; c < 3; ++c)
		{
			int piv = c;
			for (int r = c + 1; r < 3; ++r)
				if (std::abs(m[r][c]) > std::abs(m[piv][c]))
					piv = r;
			std::swap(m[c], m[piv]);
			for (int r = 0; r < 3; ++r)
				if (r != c)
				{
					double fct = m[r][c] / m[c][c];
					for (int k = c; k < 4; ++k)
						m[r][k] -= fct * m[c][k];
				}
		}
		return m[0][3] / m[0][0];
	};
	VerticalResult res;
	res.limit = extrapolate({1e-4, 1e-5, 1e-6}, &res.samples);
	double check = extrapolate({1e-3, 1e-4, 1e-5}, nullptr);
	if (!std::isfinite(res.limit) || std::abs(res.limit - check) > 1e-6)
		throw DomainError(fmt::format("extrapolation unstable: {} vs {}", res.limit, check));
	res.log_coefficient_1 = -k1;
	res.log_coefficient_2 = -k2;
	res.log_cancellation = w1 * std::pow(6.0, -0.25) * (-k1) - w2 * std::pow(6.0, 0.25) * (-k2);
	return res;
}

} // namespace intdisc
