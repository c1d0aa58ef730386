#include "intdisc/specfun.h"

#include "intdisc/rational.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <fmt/format.h>

namespace intdisc {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double series_radius = 0.5;
constexpr double integer_tol = 1e-12;

bool is_nonpositive_integer(double x) { return x <= 0 && std::abs(x - std::round(x)) < integer_tol; }

bool near_integer(double x) { return std::abs(x - std::round(x)) < integer_tol; }

} // namespace

double gamma_fn(double x)
{
	if (is_nonpositive_integer(x))
		throw DomainError(fmt::format("Gamma has a pole at {}", x));
	return std::tgamma(x);
}

double rgamma(double x)
{
	if (is_nonpositive_integer(x))
		return 0.0;
	return 1.0 / std::tgamma(x);
}

double pochhammer(double a, int k)
{
	if (k < 0)
		throw InputError("pochhammer needs k >= 0");
	double p = 1;
	for (int i = 0; i < k; ++i)
		p *= a + i;
	return p;
}

double digamma(double x)
{
	if (is_nonpositive_integer(x))
		throw DomainError(fmt::format("digamma has a pole at {}", x));
	return boost::math::digamma(x);
}

std::string to_string(Hyp2F1Route r)
{
	switch (r)
	{
	case Hyp2F1Route::automatic: return "automatic";
	case Hyp2F1Route::series: return "series";
	case Hyp2F1Route::polynomial: return "polynomial";
	case Hyp2F1Route::one_minus_t: return "one-minus-t";
	case Hyp2F1Route::pfaff: return "pfaff";
	case Hyp2F1Route::euler: return "euler";
	case Hyp2F1Route::inverse: return "inverse";
	}
	return "?";
}

namespace {

double series(double a, double b, double c, double t)
{
	double term = 1, sum = 1;
	for (int k = 0; k < 100000; ++k)
	{
		term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * t;
		sum += term;
		if (term == 0 || std::abs(term) <= 1e-17 * std::abs(sum))
			return sum;
	}
	throw DomainError(fmt::format("2F1 series did not converge at t = {}", t));
}

double eval(double a, double b, double c, double t);

// 1/2 < t < 1, in terms of w = 1 - t
double one_minus_t(double a, double b, double c, double t)
{
	double w = 1 - t;
	double m = c - a - b;
	if (!near_integer(m))
	{
		double A = gamma_fn(c) * gamma_fn(m) * rgamma(c - a) * rgamma(c - b);
		double B = gamma_fn(c) * gamma_fn(-m) * rgamma(a) * rgamma(b);
		double r = 0;
		if (A != 0)
			r += A * series(a, b, 1 - m, w);
		if (B != 0)
			r += B * std::pow(w, m) * series(c - a, c - b, 1 + m, w);
		return r;
	}
	int mi = static_cast<int>(std::lround(m));
	if (mi < 0)
		return std::pow(w, m) * one_minus_t(c - a, c - b, c, t);

	// logarithmic case c = a + b + m, m >= 0
	double sum = 0;
	if (mi > 0)
	{
		double pref = gamma_fn(mi) * gamma_fn(c) * rgamma(a + mi) * rgamma(b + mi);
		double term = 1;
		for (int n = 0; n < mi; ++n)
		{
			sum += pref * term;
			term *= (a + n) * (b + n) / ((n + 1) * (1 - mi + n)) * w;
		}
	}
	double pref = gamma_fn(c) * rgamma(a) * rgamma(b);
	if (pref == 0)
		return sum;
	double lw = std::log(w);
	double psi1 = digamma(1.0), psi2 = digamma(1.0 + mi);
	double psia = is_nonpositive_integer(a + mi) ? 0 : digamma(a + mi);
	double psib = is_nonpositive_integer(b + mi) ? 0 : digamma(b + mi);
	double term = 1.0 / std::tgamma(mi + 1.0), tail = 0;
	for (int n = 0; n < 100000; ++n)
	{
		double piece = term * (lw - psi1 - psi2 + psia + psib);
		tail += piece;
		if (n > 2 && std::abs(piece) <= 1e-17 * std::abs(tail))
			break;
		term *= (a + mi + n) * (b + mi + n) / ((n + 1) * (n + mi + 1)) * w;
		psi1 += 1.0 / (n + 1);
		psi2 += 1.0 / (n + mi + 1);
		psia += 1.0 / (a + mi + n);
		psib += 1.0 / (b + mi + n);
	}
	double sign = (mi % 2 == 0) ? 1.0 : -1.0; // (t - 1)^m = (-w)^m
	return sum - sign * std::pow(w, mi) * pref * tail;
}

// 1/t connection; t > 1 gives the real part, t < -1 the value
double inverse(double a, double b, double c, double t)
{
	if (near_integer(b - a))
		throw DomainError(fmt::format("1/t connection needs b - a non-integer (b - a = {})", b - a));
	double A = gamma_fn(c) * gamma_fn(b - a) * rgamma(b) * rgamma(c - a);
	double B = gamma_fn(c) * gamma_fn(a - b) * rgamma(a) * rgamma(c - b);
	double x = 1 / t;
	double fa = A == 0 ? 0 : eval(a, a - c + 1, a - b + 1, x);
	double fb = B == 0 ? 0 : eval(b, b - c + 1, b - a + 1, x);
	if (t > 0)
		return A * std::cos(pi * a) * std::pow(t, -a) * fa + B * std::cos(pi * b) * std::pow(t, -b) * fb;
	return A * std::pow(-t, -a) * fa + B * std::pow(-t, -b) * fb;
}

bool terminating(double a, double b) { return is_nonpositive_integer(a) || is_nonpositive_integer(b); }

double eval(double a, double b, double c, double t)
{
	auto r = gauss_2f1_ex(a, b, c, t);
	if (r.infinite)
		throw DomainError("2F1 diverges at t = 1");
	return r.value;
}

} // namespace

Hyp2F1Result gauss_2f1_ex(double a, double b, double c, double t, Hyp2F1Route route)
{
	if (is_nonpositive_integer(c))
		throw DomainError(fmt::format("2F1 undefined for c = {}", c));
	if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(t))
		throw InputError("2F1 parameters must be finite");
	Hyp2F1Result res;
	if (route == Hyp2F1Route::automatic)
	{
		if (terminating(a, b))
			route = Hyp2F1Route::polynomial;
		else if (std::abs(t) <= series_radius)
			route = Hyp2F1Route::series;
		else if (t == 1)
		{
			double m = c - a - b;
			res.route = Hyp2F1Route::one_minus_t;
			if (m > 0)
				res.value = gamma_fn(c) * gamma_fn(m) * rgamma(c - a) * rgamma(c - b);
			else
			{
				res.infinite = true;
				res.value = std::numeric_limits<double>::infinity();
				if (near_integer(m) && std::lround(m) == 0)
					res.log_coefficient = -gamma_fn(c) * rgamma(a) * rgamma(b);
			}
			return res;
		}
		else if (t > series_radius && t < 1)
			route = Hyp2F1Route::one_minus_t;
		else if (t < -series_radius)
			route = Hyp2F1Route::pfaff;
		else
			route = Hyp2F1Route::inverse;
	}
	res.route = route;
	switch (route)
	{
	case Hyp2F1Route::polynomial:
		if (!terminating(a, b))
			throw DomainError("polynomial route needs a or b a non-positive integer");
		res.value = series(a, b, c, t);
		break;
	case Hyp2F1Route::series:
		if (std::abs(t) >= 1)
			throw DomainError("series route needs |t| < 1");
		res.value = series(a, b, c, t);
		break;
	case Hyp2F1Route::one_minus_t:
		if (!(t > 0 && t < 1))
			throw DomainError("1 - t route needs 0 < t < 1");
		res.value = one_minus_t(a, b, c, t);
		break;
	case Hyp2F1Route::pfaff:
		if (!(t < 1))
			throw DomainError("Pfaff route needs t < 1");
		res.value = std::pow(1 - t, -a) * eval(a, c - b, c, t / (t - 1));
		break;
	case Hyp2F1Route::euler:
		if (!(t < 1))
			throw DomainError("Euler route needs t < 1");
		res.value = std::pow(1 - t, c - a - b) * eval(c - a, c - b, c, t);
		break;
	case Hyp2F1Route::inverse:
		if (!(std::abs(t) > 1))
			throw DomainError("1/t route needs |t| > 1");
		res.value = inverse(a, b, c, t);
		break;
	case Hyp2F1Route::automatic: break;
	}
	return res;
}

double gauss_2f1(double a, double b, double c, double t) { return eval(a, b, c, t); }

double gauss_2f1_derivative(double a, double b, double c, double t, int k)
{
	if (k < 0)
		throw InputError("derivative order must be >= 0");
	double pref = pochhammer(a, k) * pochhammer(b, k) / pochhammer(c, k);
	if (pref == 0)
		return 0;
	return pref * eval(a + k, b + k, c + k, t);
}

double hyp2f1_integral(double a, double b, double c, double t)
{
	if (!(b > 0 && c - b > 0))
		std::swap(a, b);
	if (!(b > 0 && c - b > 0))
		throw DomainError("integral representation needs b > 0 and c - b > 0 (after a <-> b)");
	if (!(t < 1))
		throw DomainError("integral representation needs t < 1");
	boost::math::quadrature::tanh_sinh<double> ts;
	// xc: distance to the nearer endpoint, negative on the left half
	auto f = [&](double s, double xc) {
		double left = xc < 0 ? -xc : s;
		double right = xc > 0 ? xc : 1 - s;
		return std::pow(left, b - 1) * std::pow(right, c - b - 1) * std::pow(1 - left * t, -a);
	};
	double err = 0, l1 = 0;
	double val = ts.integrate(f, 0.0, 1.0, 1e-14, &err, &l1);
	if (!std::isfinite(val) || err > 1e-9 * std::max(1.0, std::abs(val)))
		throw DomainError(fmt::format("integral representation did not converge (error {})", err));
	return gamma_fn(c) / (gamma_fn(b) * gamma_fn(c - b)) * val;
}

namespace {

double log_c25(int i, int j)
{
	return std::lgamma(0.3 + i + j) + std::lgamma(0.1 + 2 * i + 3 * j) + std::lgamma(0.1 + j) -
	       std::lgamma(0.4 + i + 2 * j) - std::lgamma(0.6 + i + 2 * j) - std::lgamma(i + 1.0) - std::lgamma(j + 1.0);
}

// log |x|^p with 0^0 = 1
double log_pow(double x, int p) { return p == 0 ? 0.0 : (x == 0 ? -INFINITY : p * std::log(std::abs(x))); }

double sign_pow(double x, int p) { return (x < 0 && p % 2) ? -1.0 : 1.0; }

} // namespace

G25Value series_g25(double u, double v, double tol)
{
	double const X = 16 * u, Y = 128.0 * v / 3.0;
	double const dX = 16, dY = 128.0 / 3.0;
	// derivative orders (du, dv) of g, gu, gv, guu, guv, gvv
	static constexpr std::array<std::array<int, 2>, 6> orders{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
	std::array<double, 6> sums{}, prev_max{};
	std::array<std::vector<double>, 6> ratios;
	G25Value out;
	int const max_diagonals = 5000;
	int settled = 0;
	for (int d = 0; d < max_diagonals; ++d)
	{
		std::array<double, 6> dmax{};
		for (int j = 0; j <= d; ++j)
		{
			int i = d - j;
			double lc = log_c25(i, j);
			for (size_t k = 0; k < 6; ++k)
			{
				int du = orders[k][0], dv = orders[k][1];
				if (i < du || j < dv)
					continue;
				// falling factorials i!/(i-du)!, j!/(j-dv)!
				double ff = 1;
				for (int q = 0; q < du; ++q)
					ff *= (i - q) * dX;
				for (int q = 0; q < dv; ++q)
					ff *= (j - q) * dY;
				double lt = lc + log_pow(X, i - du) + log_pow(Y, j - dv);
				if (lt == -INFINITY)
					continue;
				double term = ff * std::exp(lt) * sign_pow(X, i - du) * sign_pow(Y, j - dv);
				sums[k] += term;
				dmax[k] = std::max(dmax[k], std::abs(term));
			}
		}
		out.diagonals = d + 1;
		if (d < 4)
		{
			prev_max = dmax;
			continue;
		}
		bool all_small = true;
		double tail0 = 0;
		for (size_t k = 0; k < 6; ++k)
		{
			if (dmax[k] == 0 && prev_max[k] == 0)
				continue;
			double r = prev_max[k] > 0 ? dmax[k] / prev_max[k] : 0;
			ratios[k].push_back(r);
			double rho = 0;
			for (size_t q = ratios[k].size() >= 4 ? ratios[k].size() - 4 : 0; q < ratios[k].size(); ++q)
				rho = std::max(rho, ratios[k][q]);
			if (rho >= 1)
			{
				if (d > 60)
					throw DomainError(fmt::format(
					    "G(u,v) series diverges at u = {}, v = {}; use the integral representation", u, v));
				all_small = false;
				continue;
			}
			double tail = dmax[k] * ((d + 1) * rho / (1 - rho) + rho / ((1 - rho) * (1 - rho)));
			if (k == 0)
				tail0 = tail;
			if (tail > tol * std::abs(sums[k]) && tail > 1e-300)
				all_small = false;
		}
		prev_max = dmax;
		if (all_small)
		{
			if (++settled >= 2)
			{
				out.tail = tail0;
				break;
			}
		}
		else
			settled = 0;
		if (d == max_diagonals - 1)
			throw DomainError(fmt::format("G(u,v) series not converged at u = {}, v = {}", u, v));
	}
	out.g = sums[0];
	out.gu = sums[1];
	out.gv = sums[2];
	out.guu = sums[3];
	out.guv = sums[4];
	out.gvv = sums[5];
	return out;
}

namespace {

double kernel(double u, double v, double s, double one_minus_s, double t, double one_minus_t)
{
	return 3 * one_minus_s + 48 * u * t * s * s + 128 * v * s * s * s * t * one_minus_t;
}

// P(s) = 3 - 3s + a s^2 + b s^3 = (s* - s) Q(s)
struct KernelRoot
{
	double root;
	double q2, q1, q0; // Q(s) = q2 s^2 + q1 s + q0
	double q(double s) const { return (q2 * s + q1) * s + q0; }
};

constexpr double root_scan_limit = 8.0;

// first positive zero; NaN when P stays positive up to the scan limit
KernelRoot first_root(double a, double b)
{
	auto P = [&](double s) { return 3 - 3 * s + a * s * s + b * s * s * s; };
	double lo = 0, hi = -1;
	int const steps = 800;
	for (int k = 1; k <= steps; ++k)
	{
		double s = root_scan_limit * k / steps;
		if (P(s) <= 0)
		{
			hi = s;
			lo = root_scan_limit * (k - 1) / steps;
			break;
		}
	}
	if (hi < 0)
		return {NAN, 0, 0, 0};
	for (int k = 0; k < 200 && hi - lo > 0; ++k)
	{
		double m = 0.5 * (lo + hi);
		if (m <= lo || m >= hi)
			break;
		(P(m) > 0 ? lo : hi) = m;
	}
	double r = 0.5 * (lo + hi);
	// synthetic division, sign flipped so that Q > 0 below the root
	return {r, -b, -(a + b * r), -(-3 + a * r + b * r * r)};
}

} // namespace

KernelCheck kernel_check_g25(double u, double v, G25Domain domain)
{
	KernelCheck k{true, std::abs(1 - 64 * u) < 1e-3, INFINITY};
	int const N = 200;
	if (domain == G25Domain::unit_square)
	{
		for (int a = 1; a < N; ++a)
			for (int b = 1; b < N; ++b)
			{
				double s = double(a) / N, t = double(b) / N;
				k.min_value = std::min(k.min_value, kernel(u, v, s, 1 - s, t, 1 - t));
			}
		// edge s = 1: t (48u + 128v(1-t)) must stay non-negative
		if (k.min_value <= 0 || 48 * u < 0 || 48 * u + 128 * v < 0)
			k.positive = false;
		return k;
	}
	// min_value: smallest Q(s*) = -P'(s*) over sampled t; zero means a double root
	for (int b = 0; b <= N; ++b)
	{
		double t = double(b) / N;
		auto r = first_root(48 * u * t, 128 * v * t * (1 - t));
		double slope = std::isnan(r.root) ? -INFINITY : r.q(r.root);
		k.min_value = std::min(k.min_value, slope);
	}
	if (!(k.min_value > 1e-9))
		k.positive = false;
	return k;
}

double integral_g25(double u, double v, G25Domain domain, double tol)
{
	auto kc = kernel_check_g25(u, v, domain);
	if (!kc.positive)
		throw DomainError(fmt::format(
		    "integral kernel check failed at u = {}, v = {} (at or beyond the discriminant locus)", u, v));
	boost::math::quadrature::tanh_sinh<double> outer, inner;
	auto g = [&](double t, double tc) {
		double t0 = tc < 0 ? -tc : t;
		double t1 = tc > 0 ? tc : 1 - t;
		double err = 0, val = 0;
		if (domain == G25Domain::unit_square)
		{
			auto h = [&](double s, double sc) {
				double s0 = sc < 0 ? -sc : s;
				double s1 = sc > 0 ? sc : 1 - s;
				double p = kernel(u, v, s0, s1, t0, t1);
				return p <= 0 ? 0.0 : std::pow(s0, -0.9) / std::sqrt(p);
			};
			val = inner.integrate(h, 0.0, 1.0, tol, &err);
		}
		else
		{
			auto r = first_root(48 * u * t0, 128 * v * t0 * t1);
			if (std::isnan(r.root))
				throw DomainError("kernel lost its real zero inside the integration range");
			// s = s* (1 - w^2) absorbs the inverse square root at s*
			auto h = [&](double w, double wc) {
				double om = wc > 0 ? wc : 1 - w;
				double s = r.root * om * (1 + w);
				return 2 * std::sqrt(r.root) * std::pow(s, -0.9) / std::sqrt(r.q(s));
			};
			val = inner.integrate(h, 0.0, 1.0, tol, &err);
		}
		return std::pow(t0, -0.7) * std::pow(t1, -0.9) * val;
	};
	double err = 0;
	double val = outer.integrate(g, 0.0, 1.0, tol * 10, &err);
	if (!std::isfinite(val))
		throw DomainError("G(u,v) quadrature failed");
	return std::sqrt(3.0 / pi) * val;
}

double diagonal_growth_g25(double u, double v) { return 8192.0 * 3125.0 / 2187.0 * u * v; }

} // namespace intdisc
