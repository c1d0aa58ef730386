#pragma once

#include "intdisc/forms.h"
#include "intdisc/invariants.h"

#include <string>
#include <vector>

namespace intdisc {

enum class Regime { near_zero, interior, near_one, beyond_one, infinity };
std::string to_string(Regime r);

// Real output of an evaluator. Powers of negative invariants contribute a
// unimodular factor exp(i pi phase) which is reported, not applied: value is
// the modulus of that power times the real remaining factors.
struct BranchValue
{
	FormShape shape;
	int branch = 1; // 1, 2, or 0 for a c1/c2 combination
	double c1 = 1, c2 = 0;
	double value = 0;
	double phase = 0; // units of pi
	std::vector<std::string> invariant_names;
	std::vector<double> invariants;
	double discriminant = 0;
	// hypergeometric argument t, or (u, v) for 2|5
	std::vector<double> argument;
	Regime regime = Regime::interior;
	bool near_singular = false;  // value is the log-asymptotic estimate
	bool infinite = false;       // exactly on the locus
	double log_coefficient = 0;  // of log(1 - t), when infinite or near-singular
	bool locus_onset = false;    // 2|5: |1 - 64u| small on the integral route
	std::string route;
};

// relative threshold |1 - t| below which the locus window applies
inline constexpr double near_locus_threshold = 1e-8;

BranchValue eval_gaussian(FormD const &f);
BranchValue eval_23(FormD const &f);
BranchValue eval_24(FormD const &f, int branch);
BranchValue eval_25(FormD const &f, CalibrationRecord const *calib = nullptr);
BranchValue eval_33(FormD const &f, int branch);

// same, from the invariant values
BranchValue eval_24(double I2, double I3, int branch);
BranchValue eval_33(double I4, double I6, int branch);
BranchValue eval_25(double I4, double I8, double I12);
// any supported shape from its elementary invariants (invariant_names order)
BranchValue eval_invariants(FormShape shape, std::vector<double> const &inv, int branch = 1, double c1 = 1,
                            double c2 = 0);

// representation through the discriminant after the Pfaff transform;
// defined for t < 1
BranchValue eval_24_dform(FormD const &f, int branch);
BranchValue eval_33_dform(FormD const &f, int branch);

// dispatch on shape; branch 0 means c1 * J1 + c2 * J2
BranchValue evaluate_j(FormD const &f, int branch = 1, double c1 = 1, double c2 = 0,
                       CalibrationRecord const *calib = nullptr);
// invariants computed exactly, then converted; immune to cancellation in the coefficients
BranchValue evaluate_j(FormQ const &f, int branch = 1, double c1 = 1, double c2 = 0,
                       CalibrationRecord const *calib = nullptr);

struct SingularityReport
{
	FormShape shape;
	std::vector<double> argument;
	Regime regime;
	double discriminant;
	double relative_discriminant;
	double leading; // matching asymptotic estimate, branch 1
};

SingularityReport classify_singularity(FormD const &f, CalibrationRecord const *calib = nullptr);

// leading asymptotic term for the given regime; DomainError on a regime mismatch.
// Near-zero and infinity terms are exact limits; near-one is the log term alone.
double asymptotic_value(FormD const &f, Regime regime, int branch = 1, CalibrationRecord const *calib = nullptr);
double asymptotic_value(FormShape shape, std::vector<double> const &invariants, Regime regime, int branch = 1);
Regime classify_invariants(FormShape shape, std::vector<double> const &invariants, double scale = 1);

struct VerticalResult
{
	double limit;
	std::vector<std::pair<double, double>> samples; // (1 - t, L)
	double log_coefficient_1, log_coefficient_2;
	double log_cancellation; // log coefficient of the combination
};

// limit t -> 1 of k2 F(1/12,5/12;1/2;t) - k1 F(7/12,11/12;3/2;t) with the
// 6^(+-1/4) factors of the two branches included
VerticalResult vertical_combination_24();

// Gamma prefactors
double log_coefficient_branch1();          // -Gamma(1/2)/(Gamma(1/12)Gamma(5/12))
double log_coefficient_branch2();          // -Gamma(3/2)/(Gamma(7/12)Gamma(11/12))
double infinity_coefficient(int branch);   // Gamma(1/2)Gamma(1/3)/Gamma(5/12)^2 or branch-2 analogue

} // namespace intdisc
