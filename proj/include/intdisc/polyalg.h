#pragma once

#include "intdisc/rational.h"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace intdisc {

// Exact sparse multivariate polynomial with rational coefficients. Terms are
// kept sorted (graded, then lexicographic descending) without zero entries.
class SparsePoly
{
  public:
	static constexpr int max_vars = 16;
	using Exponent = std::array<uint8_t, max_vars>;
	struct Term
	{
		Exponent exp;
		Rational coeff;
	};

  private:
	std::vector<std::string> vars_;
	std::vector<Term> terms_;

	void normalize(); // sort, merge, drop zeros

  public:
	SparsePoly() = default;
	explicit SparsePoly(std::vector<std::string> vars);
	SparsePoly(Rational const &c); // constant without variables
	SparsePoly(std::vector<std::string> vars, std::vector<Term> terms);

	static SparsePoly constant(std::vector<std::string> vars, Rational const &c);
	static SparsePoly variable(std::vector<std::string> vars, std::string const &name);

	std::vector<std::string> const &vars() const { return vars_; }
	std::vector<Term> const &terms() const { return terms_; }
	int var_index(std::string const &name) const; // -1 if absent

	size_t monomial_count() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	int total_degree() const;
	int degree_in(int var) const;
	bool is_homogeneous(int degree) const;
	Rational constant_term() const;
	Term const &leading_term() const { return terms_.front(); }

	// same polynomial over a (super)set of variables, in the given order
	SparsePoly with_vars(std::vector<std::string> const &vars) const;

	SparsePoly operator-() const;
	SparsePoly &operator+=(SparsePoly const &o);
	SparsePoly &operator-=(SparsePoly const &o);
	SparsePoly &operator*=(SparsePoly const &o);
	SparsePoly &operator*=(Rational const &q);

	friend SparsePoly operator+(SparsePoly a, SparsePoly const &b) { return a += b; }
	friend SparsePoly operator-(SparsePoly a, SparsePoly const &b) { return a -= b; }
	friend SparsePoly operator*(SparsePoly const &a, SparsePoly const &b);
	friend SparsePoly operator*(SparsePoly a, Rational const &q) { return a *= q; }
	friend SparsePoly operator*(Rational const &q, SparsePoly a) { return a *= q; }

	bool operator==(SparsePoly const &o) const;
	bool operator!=(SparsePoly const &o) const { return !(*this == o); }

	std::string to_string() const;
};

inline bool is_zero(SparsePoly const &p) { return p.is_zero(); }

std::vector<std::string> union_vars(std::vector<std::string> const &a,
                                    std::vector<std::string> const &b);

SparsePoly pow(SparsePoly const &p, int k);
SparsePoly scale(SparsePoly const &p, Rational const &q);
SparsePoly differentiate(SparsePoly const &p, std::string const &var);
SparsePoly differentiate(SparsePoly const &p, int var);

// substitute images[i] for vars[i]; all images must share one variable set
SparsePoly compose(SparsePoly const &p, std::vector<SparsePoly> const &images);

// exact quotient p / q; throws DomainError if q does not divide p
SparsePoly exact_divide(SparsePoly const &p, SparsePoly const &q);

// coefficients of var^0 .. var^deg, as polynomials not involving var
std::vector<SparsePoly> coefficients_in(SparsePoly const &p, std::string const &var);

SparsePoly resultant(SparsePoly const &p, SparsePoly const &q, std::string const &var);
// normalized so that discriminant_uni(a s^2 + b s + c) = b^2 - 4ac
SparsePoly discriminant_uni(SparsePoly const &p, std::string const &var);

Rational eval_poly(SparsePoly const &p, std::map<std::string, Rational> const &point);
double eval_poly(SparsePoly const &p, std::map<std::string, double> const &point);

// values aligned with p.vars()
template <class S> S eval_aligned(SparsePoly const &p, std::vector<S> const &values);

// cached double-precision evaluator for hot loops
class PolyEvaluator
{
	int nvars_ = 0;
	int max_deg_ = 0;
	std::vector<double> coeffs_;
	std::vector<uint8_t> exps_; // nvars_ per term

  public:
	PolyEvaluator() = default;
	explicit PolyEvaluator(SparsePoly const &p);
	double operator()(std::vector<double> const &values) const;
};

// "x^2 - 3/4 x*y + 2" style; variables are collected in order of appearance
// unless vars is given
SparsePoly parse_poly(std::string const &text, std::vector<std::string> vars = {});

// golden-file dump: one "e1 e2 ... : coeff" line per term, canonical order
std::string dump_poly(SparsePoly const &p);
SparsePoly read_poly_dump(std::string const &text, std::vector<std::string> vars);

} // namespace intdisc
