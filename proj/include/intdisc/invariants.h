#pragma once

#include "intdisc/forms.h"
#include "intdisc/polyalg.h"

#include <string>
#include <utility>
#include <vector>

namespace intdisc {

// Stored 2|5 invariants of degree 8 and 12, obtained from the invariant
// operators, plus the list of table rows checked while deriving them.
struct CalibrationRecord
{
	SparsePoly I8;
	SparsePoly I12;
	std::vector<std::pair<std::string, bool>> checks;

	bool all_passed() const;
	int passed_count() const;
};

// runs the derivation; throws DomainError naming the first failing row unless
// strict is false, in which case failures are only recorded
CalibrationRecord derive_25(bool strict = true);
// derived once per process
CalibrationRecord const &default_calibration();

template <class S> struct InvariantSet
{
	FormShape shape;
	std::vector<std::string> names;
	std::vector<int> degrees;
	std::vector<S> values;

	S const &operator[](std::string const &name) const;
};

// names and degrees of the elementary invariants of a supported shape
std::vector<std::pair<std::string, int>> invariant_names(FormShape shape);
bool is_supported(FormShape shape);

// exact polynomial in the s-coordinates (r = 2 only up to n = 4); results are
// cached per calibration address, so a passed record must outlive its use
SparsePoly const &invariant_polynomial(FormShape shape, std::string const &name,
                                       CalibrationRecord const *calib = nullptr);

template <class S>
InvariantSet<S> compute_invariants(SymmetricForm<S> const &f, CalibrationRecord const *calib = nullptr);

// D_{n|r} as a function of the elementary invariants
template <class S> S discriminant(InvariantSet<S> const &inv);
SparsePoly const &discriminant_polynomial(FormShape shape, CalibrationRecord const *calib = nullptr);
std::string discriminant_expression(FormShape shape);

// a x^3 + b x^2 y + c x y^2 + d y^3; equals (27/2) I4 of the cubic
Rational discriminant_23_classical(Rational const &a, Rational const &b, Rational const &c, Rational const &d);

// I2, I3 of (a x^2 + b xy + c y^2)^2
std::pair<Rational, Rational> vertical_invariants_24(Rational const &a, Rational const &b, Rational const &c);

template <class S> S determinant(Matrix<S> m);
// symmetric matrix S_ij of a quadratic form
template <class S> Matrix<S> quadratic_matrix(SymmetricForm<S> const &f);

// constructed test suites
std::vector<FormQ> singular_suite(FormShape shape);
std::vector<FormQ> nonsingular_suite(FormShape shape);

} // namespace intdisc
