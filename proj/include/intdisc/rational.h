#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intdisc {

using Rational = mpq_class;

// mathematically inadmissible input (singular form, divergent series, ...)
class DomainError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// malformed input text or bad arguments
class InputError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// accepts "p/q", integers, decimals and scientific notation, all exactly
Rational parse_rational(std::string_view s);
std::string to_string(Rational const &q);

inline double to_double(Rational const &q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_zero(Rational const &q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

template <class S> S from_rational(Rational const &q);
template <> inline Rational from_rational<Rational>(Rational const &q) { return q; }
template <> inline double from_rational<double>(Rational const &q) { return q.get_d(); }

} // namespace intdisc
