#pragma once

#include <string>

namespace intdisc {

double gamma_fn(double x); // DomainError at poles
double rgamma(double x);   // 1/Gamma, zero at poles
double pochhammer(double a, int k);
double digamma(double x);

enum class Hyp2F1Route { automatic, series, polynomial, one_minus_t, pfaff, euler, inverse };
std::string to_string(Hyp2F1Route r);

struct Hyp2F1Result
{
	double value = 0;
	// t = 1 with c - a - b <= 0; for c = a + b the value behaves as
	// log_coefficient * log(1 - t)
	bool infinite = false;
	double log_coefficient = 0;
	Hyp2F1Route route = Hyp2F1Route::automatic;
};

// Real Gauss 2F1(a, b; c; t). For t > 1 the real part of the continuation
// from either side of the cut is returned. Regions: |t| <= 1/2 series,
// 1/2 < t < 1 via the 1 - t connection, t < -1/2 via the Pfaff transform,
// t > 1 via the 1/t connection (needs b - a non-integer).
Hyp2F1Result gauss_2f1_ex(double a, double b, double c, double t,
                          Hyp2F1Route route = Hyp2F1Route::automatic);
// throws DomainError where the value is infinite
double gauss_2f1(double a, double b, double c, double t);
// k-th derivative in t
double gauss_2f1_derivative(double a, double b, double c, double t, int k);

// Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 s^(b-1) (1-s)^(c-b-1) (1-st)^(-a) ds, t < 1
double hyp2f1_integral(double a, double b, double c, double t);

// Two-variable series G(u, v) = sum_ij c_ij (16u)^i (128v/3)^j / (i! j!) with
// c_ij = Gamma(3/10+i+j) Gamma(1/10+2i+3j) Gamma(1/10+j) / (Gamma(2/5+i+2j) Gamma(3/5+i+2j))
struct G25Value
{
	double g = 0, gu = 0, gv = 0, guu = 0, guv = 0, gvv = 0;
	int diagonals = 0;
	double tail = 0; // bound on the neglected part of g
};

// DomainError when the terms stop decreasing
G25Value series_g25(double u, double v, double tol = 1e-15);

// Domain of the inner s-integration. unit_square integrates s over [0, 1];
// that function differs from the series by a branch growing like sqrt(u).
// first_root stops at the first positive zero s*(t) of the kernel, which is
// the loop integral around the square-root cut and reproduces the series.
enum class G25Domain { first_root, unit_square };

struct KernelCheck
{
	bool positive;
	bool near_locus; // |1 - 64u| small
	double min_value;
};
// P(s,t) = 3 - 3s + 48uts^2 + 128vs^3t - 128vs^3t^2; for first_root the check is
// that P(., t) has a simple positive zero for every t in [0, 1]
KernelCheck kernel_check_g25(double u, double v, G25Domain domain = G25Domain::first_root);

// same function by two-dimensional quadrature; DomainError when the kernel
// check fails (at or beyond the locus 64u = 1 for v = 0)
double integral_g25(double u, double v, G25Domain domain = G25Domain::first_root, double tol = 1e-10);

// heuristic growth factor of the diagonal subsequence i = j
double diagonal_growth_g25(double u, double v);

} // namespace intdisc
