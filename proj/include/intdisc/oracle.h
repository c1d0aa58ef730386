#pragma once

#include "intdisc/forms.h"

#include <functional>
#include <string>
#include <vector>

namespace intdisc {

struct QuadratureResult
{
	double value = 0;
	double error = 0;
	int cells = 0;
};

// adaptive tensor Gauss-Kronrod (7/15) cubature over a rectangle; cells are
// split in a fixed order (largest error, then creation order)
QuadratureResult cubature(std::function<double(double, double)> const &f, double x0, double x1, double y0,
                          double y1, double rel_tol, int max_cells = 20000);

enum class Weight { exp, exp2 };
std::string to_string(Weight w);
Weight parse_weight(std::string const &s);

// integral of weight(S) over the plane for a positive definite binary quartic;
// the square [-L, L]^2 is chosen so the analytic tail bound is below tol/100
// of a lower bound of the integral
QuadratureResult integrate_weight(FormD const &f, Weight w, double tol = 1e-10);
QuadratureResult integrate_exp_form(FormD const &f, double tol = 1e-10);

// int S(1, z)^(-1/2) dz over the real line, computed in the angular form
// int_{-pi/2}^{pi/2} S(cos p, sin p)^(-1/2) dp
QuadratureResult radial_oracle(FormD const &f, double tol = 1e-12);

// plane integrals divided by radial_oracle for any positive definite quartic
double radial_ratio(Weight w);

// minimum and maximum of S on the unit circle (sampled, then refined)
std::pair<double, double> circle_extrema(FormD const &f);

struct FitSample
{
	FormD form;
	double oracle;
};

using BranchFunction = std::function<double(FormD const &)>;

struct FitResult
{
	double c1 = 0, c2 = 0;
	double rms = 0;       // relative residual
	double max_rel = 0;
	double held_out = -1; // worst leave-one-out relative error, -1 if < 6 samples
	int samples = 0;
};

// relative least squares oracle ~ c1 J1 + c2 J2; DomainError on rank deficiency
FitResult fit_constants(std::vector<FitSample> const &samples, BranchFunction const &j1, BranchFunction const &j2);

// branches with the I2 exponent shifted, for falsification
BranchFunction shifted_branch_24(int branch, double shift);

// c1 pinned by x^4 + y^4: 2^(1/4) Gamma(1/4)^2 / 4
double exact_c1_24();

} // namespace intdisc
