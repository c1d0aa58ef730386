#include "intdisc/oracle.h"

#include "intdisc/jnr.h"
#include "intdisc/specfun.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

namespace intdisc {

namespace {

constexpr double pi = 3.14159265358979323846;

// 15-point Kronrod nodes on [-1, 1] (non-negative half) and weights; the
// 7-point Gauss rule uses the odd entries
constexpr std::array<double, 8> xgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                   0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct KNode
{
	double x, wk, wg;
};

std::array<KNode, 15> const &nodes()
{
	static std::array<KNode, 15> const n = [] {
		std::array<KNode, 15> out{};
		int k = 0;
		for (int i = 0; i < 8; ++i)
		{
			double g = (i % 2 == 1) ? wg[i / 2] : 0.0;
			out[k++] = {-xgk[i], wgk[i], g};
			if (i < 7)
				out[k++] = {xgk[i], wgk[i], g};
		}
		return out;
	}();
	return n;
}

struct Cell
{
	double x0, x1, y0, y1;
	double value, error;
	long order;
};

struct CellLess
{
	bool operator()(Cell const &a, Cell const &b) const
	{
		if (a.error != b.error)
			return a.error < b.error;
		return a.order > b.order;
	}
};

Cell rule(std::function<double(double, double)> const &f, double x0, double x1, double y0, double y1, long order)
{
	double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
	double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
	double k = 0, g = 0;
	for (auto const &nx : nodes())
		for (auto const &ny : nodes())
		{
			double v = f(cx + hx * nx.x, cy + hy * ny.x);
			k += nx.wk * ny.wk * v;
			g += nx.wg * ny.wg * v;
		}
	k *= hx * hy;
	g *= hx * hy;
	return {x0, x1, y0, y1, k, std::abs(k - g), order};
}

} // namespace

QuadratureResult cubature(std::function<double(double, double)> const &f, double x0, double x1, double y0,
                          double y1, double rel_tol, int max_cells)
{
	std::priority_queue<Cell, std::vector<Cell>, CellLess> q;
	long order = 0;
	q.push(rule(f, x0, x1, y0, y1, order++));
	double total = q.top().value, err = q.top().error;
	int cells = 1;
	while (err > rel_tol * std::abs(total) && cells < max_cells)
	{
		Cell c = q.top();
		q.pop();
		total -= c.value;
		err -= c.error;
		double mx = 0.5 * (c.x0 + c.x1), my = 0.5 * (c.y0 + c.y1);
		for (auto const &sub : {rule(f, c.x0, mx, c.y0, my, order++), rule(f, mx, c.x1, c.y0, my, order++),
		                        rule(f, c.x0, mx, my, c.y1, order++), rule(f, mx, c.x1, my, c.y1, order++)})
		{
			total += sub.value;
			err += sub.error;
			q.push(sub);
		}
		cells += 3;
	}
	// re-add in a fixed order so the sum does not depend on the update history
	std::vector<Cell> all;
	while (!q.empty())
	{
		all.push_back(q.top());
		q.pop();
	}
	std::sort(all.begin(), all.end(), [](Cell const &a, Cell const &b) { return a.order < b.order; });
	QuadratureResult r;
	for (auto const &c : all)
	{
		r.value += c.value;
		r.error += c.error;
	}
	r.cells = cells;
	return r;
}

std::string to_string(Weight w) { return w == Weight::exp ? "exp" : "exp2"; }

Weight parse_weight(std::string const &s)
{
	if (s == "exp")
		return Weight::exp;
	if (s == "exp2")
		return Weight::exp2;
	throw InputError("unknown weight '" + s + "' (expected exp or exp2)");
}

namespace {

struct Quartic
{
	std::array<double, 5> c; // c_k x^(4-k) y^k

	explicit Quartic(FormD const &f)
	{
		if (!(f.shape() == FormShape{2, 4}))
			throw InputError("oracle needs a binary quartic");
		auto ms = monomials(f.shape());
		c.fill(0);
		for (size_t i = 0; i < ms.size(); ++i)
			c[ms[i][1]] = f.coeff(i);
	}
	double operator()(double x, double y) const
	{
		return (((c[0] * x + c[1] * y) * x + c[2] * y * y) * x + c[3] * y * y * y) * x + c[4] * y * y * y * y;
	}
};

} // namespace

std::pair<double, double> circle_extrema(FormD const &f)
{
	Quartic S(f);
	int const N = 4096;
	double lo = INFINITY, hi = -INFINITY;
	int ilo = 0;
	for (int k = 0; k < N; ++k)
	{
		double p = pi * k / N;
		double v = S(std::cos(p), std::sin(p));
		if (v < lo)
			lo = v, ilo = k;
		hi = std::max(hi, v);
	}
	// golden-section refinement of the minimum
	double a = pi * (ilo - 1) / N, b = pi * (ilo + 1) / N;
	auto g = [&](double p) { return S(std::cos(p), std::sin(p)); };
	double const r = 0.5 * (std::sqrt(5.0) - 1);
	for (int it = 0; it < 80; ++it)
	{
		double c = b - r * (b - a), d = a + r * (b - a);
		if (g(c) < g(d))
			b = d;
		else
			a = c;
	}
	lo = std::min(lo, g(0.5 * (a + b)));
	return {lo, hi};
}

QuadratureResult integrate_weight(FormD const &f, Weight w, double tol)
{
	Quartic S(f);
	auto [m, M] = circle_extrema(f);
	if (!(m > 0))
		throw DomainError("form is not positive definite; the plane integral diverges");
	double lower = w == Weight::exp ? std::pow(pi, 1.5) / (2 * std::sqrt(M))
	                                : pi * gamma_fn(0.25) / (4 * std::sqrt(M));
	double target = 1e-2 * tol * lower;
	// tail of the disc |x| > L, which contains the complement of the square
	auto tail = [&](double L) {
		return w == Weight::exp ? 2 * pi * std::exp(-m * std::pow(L, 4)) / (4 * m * L * L)
		                        : 2 * pi * std::exp(-m * m * std::pow(L, 8)) / (8 * m * m * std::pow(L, 6));
	};
	double L = std::pow(m, -0.25);
	while (tail(L) > target)
		L *= 1.1;
	std::function<double(double, double)> integrand;
	if (w == Weight::exp)
		integrand = [&](double x, double y) { return std::exp(-S(x, y)); };
	else
		integrand = [&](double x, double y) {
			double s = S(x, y);
			return std::exp(-s * s);
		};
	// quadrants are symmetric under (x, y) -> (-x, -y): integrate the upper half
	auto r = cubature(integrand, -L, L, 0, L, tol);
	r.value *= 2;
	r.error = 2 * r.error + tail(L);
	return r;
}

QuadratureResult integrate_exp_form(FormD const &f, double tol) { return integrate_weight(f, Weight::exp, tol); }

QuadratureResult radial_oracle(FormD const &f, double tol)
{
	Quartic S(f);
	auto [m, M] = circle_extrema(f);
	if (!(m > 0))
		throw DomainError("S(1, z) has a real root; the radial integral diverges");
	// z = tan p maps the line to (-pi/2, pi/2) and S(1,z)^(-1/2) dz to S(cos p, sin p)^(-1/2) dp
	auto g = [&](double p) { return 1 / std::sqrt(S(std::cos(p), std::sin(p))); };
	double err = 0;
	double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, -pi / 2, pi / 2, 15, tol, &err);
	return {v, err, 1};
}

double radial_ratio(Weight w)
{
	// int_0^inf r e^{-r^4} dr = sqrt(pi)/4, int_0^inf r e^{-r^8} dr = Gamma(1/4)/8, two half-turns
	return w == Weight::exp ? std::sqrt(pi) / 2 : gamma_fn(0.25) / 4;
}

FitResult fit_constants(std::vector<FitSample> const &samples, BranchFunction const &j1, BranchFunction const &j2)
{
	if (samples.size() < 3)
		throw InputError("fit needs at least 3 samples");
	std::vector<double> a, b, y;
	for (auto const &s : samples)
	{
		if (s.oracle == 0)
			throw InputError("oracle value zero; relative fit undefined");
		a.push_back(j1(s.form) / s.oracle);
		b.push_back(j2(s.form) / s.oracle);
		y.push_back(1.0);
	}
	auto solve = [&](std::vector<size_t> const &idx, double &c1, double &c2) {
		double saa = 0, sab = 0, sbb = 0, say = 0, sby = 0;
		for (auto i : idx)
		{
			saa += a[i] * a[i];
			sab += a[i] * b[i];
			sbb += b[i] * b[i];
			say += a[i];
			sby += b[i];
		}
		double det = saa * sbb - sab * sab;
		// columns nearly parallel: all samples effectively at one argument
		if (!(det > 1e-12 * saa * sbb))
			throw DomainError("rank-deficient fit: branch columns are (nearly) parallel across the samples");
		c1 = (say * sbb - sby * sab) / det;
		c2 = (saa * sby - sab * say) / det;
	};
	std::vector<size_t> all(samples.size());
	for (size_t i = 0; i < all.size(); ++i)
		all[i] = i;
	FitResult r;
	r.samples = static_cast<int>(samples.size());
	solve(all, r.c1, r.c2);
	double ss = 0;
	for (size_t i = 0; i < a.size(); ++i)
	{
		double e = r.c1 * a[i] + r.c2 * b[i] - 1;
		ss += e * e;
		r.max_rel = std::max(r.max_rel, std::abs(e));
	}
	r.rms = std::sqrt(ss / a.size());
	if (samples.size() >= 6)
	{
		r.held_out = 0;
		for (size_t k = 0; k < all.size(); ++k)
		{
			std::vector<size_t> rest;
			for (auto i : all)
				if (i != k)
					rest.push_back(i);
			double c1, c2;
			solve(rest, c1, c2);
			r.held_out = std::max(r.held_out, std::abs(c1 * a[k] + c2 * b[k] - 1));
		}
	}
	return r;
}

BranchFunction shifted_branch_24(int branch, double shift)
{
	return [branch, shift](FormD const &f) {
		auto v = eval_24(f, branch);
		return v.value * std::pow(std::abs(v.invariants[0]), shift);
	};
}

double exact_c1_24() { return std::pow(2.0, 0.25) * std::pow(gamma_fn(0.25), 2) / 4; }

} // namespace intdisc
