#pragma once

#include "intdisc/rational.h"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace intdisc {

struct FormShape
{
	int n = 2; // variables
	int r = 2; // degree

	size_t size() const; // binomial(n+r-1, r)
	bool operator==(FormShape const &) const = default;
};

std::string to_string(FormShape const &shape); // "2|4"

using MultiIndex = std::vector<int>;

// canonical order: descending first exponent, then recursively on the rest
std::vector<MultiIndex> monomials(FormShape const &shape);
size_t monomial_index(FormShape const &shape, MultiIndex const &a);
bool is_valid_index(FormShape const &shape, MultiIndex const &a);
long multinomial(MultiIndex const &a);
std::string coordinate_name(MultiIndex const &a); // "s40", "s111"

// occurrence counts of an r-tuple of 0-based variable indices
MultiIndex count_indices(int n, std::vector<int> const &idx);

template <class S> using Matrix = std::vector<std::vector<S>>;

// Homogeneous degree-r form in n variables. Monomial coefficients s_a are the
// stored data (canonical order), tensor components are derived.
template <class S> class SymmetricForm
{
	FormShape shape_;
	std::vector<S> coeffs_;

  public:
	SymmetricForm() = default;
	explicit SymmetricForm(FormShape shape);
	SymmetricForm(FormShape shape, std::vector<S> coeffs);

	FormShape const &shape() const { return shape_; }
	std::vector<S> const &coeffs() const { return coeffs_; }
	S const &coeff(size_t i) const { return coeffs_.at(i); }
	S const &coeff(MultiIndex const &a) const;

	SymmetricForm with_coeff(size_t i, S value) const;
	bool operator==(SymmetricForm const &) const = default;
};

using FormQ = SymmetricForm<Rational>;
using FormD = SymmetricForm<double>;

template <class S>
SymmetricForm<S> make_form(FormShape shape,
                           std::vector<std::pair<MultiIndex, S>> const &entries);

// idx: r variable indices, 0-based
template <class S> S tensor_component(SymmetricForm<S> const &f, std::vector<int> const &idx);
template <class S> S evaluate(SymmetricForm<S> const &f, std::vector<S> const &x);

// pullback: result(x) = f(U x)
template <class S> SymmetricForm<S> gl_transform(SymmetricForm<S> const &f, Matrix<S> const &U);
template <class S> SymmetricForm<S> multiply(SymmetricForm<S> const &f, SymmetricForm<S> const &g);
template <class S> SymmetricForm<S> pow_form(SymmetricForm<S> const &f, int k);
template <class S> SymmetricForm<S> scale(SymmetricForm<S> const &f, S const &mu);
template <class S> bool is_positive_definite(SymmetricForm<S> const &f);

FormD to_double(FormQ const &f);
double coefficient_scale(FormD const &f); // max |s_a|

long long invariant_count(int n, int r);

template <class S> SymmetricForm<S> random_form(FormShape shape, uint64_t seed);
FormQ random_posdef_quartic(uint64_t seed, int max_attempts = 1000);

// product of random elementary shears, determinant 1
Matrix<Rational> random_unimodular(int n, uint64_t seed, int factors = 4);

} // namespace intdisc
