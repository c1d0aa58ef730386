#include "intdisc/rational.h"

#include <cctype>

namespace intdisc {

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

Rational pow10(long e)
{
	mpz_class p;
	mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
	return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

} // namespace

Rational parse_rational(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	if (s.empty())
		throw InputError("empty number");
	std::string const orig(s);

	bool neg = false;
	if (s.front() == '+' || s.front() == '-')
	{
		neg = s.front() == '-';
		s.remove_prefix(1);
	}

	Rational q;
	if (auto slash = s.find('/'); slash != s.npos)
	{
		auto num = s.substr(0, slash), den = s.substr(slash + 1);
		if (!all_digits(num) || !all_digits(den))
			throw InputError("malformed rational '" + orig + "'");
		mpz_class d(std::string(den), 10);
		if (d == 0)
			throw InputError("zero denominator in '" + orig + "'");
		q = Rational(mpz_class(std::string(num), 10), d);
		q.canonicalize();
	}
	else
	{
		long exponent = 0;
		if (auto e = s.find_first_of("eE"); e != s.npos)
		{
			auto es = s.substr(e + 1);
			bool eneg = false;
			if (!es.empty() && (es.front() == '+' || es.front() == '-'))
			{
				eneg = es.front() == '-';
				es.remove_prefix(1);
			}
			if (!all_digits(es) || es.size() > 6)
				throw InputError("malformed exponent in '" + orig + "'");
			exponent = std::stol(std::string(es));
			if (eneg)
				exponent = -exponent;
			s = s.substr(0, e);
		}
		std::string digits;
		if (auto dot = s.find('.'); dot != s.npos)
		{
			auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
			if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
			    (!fp.empty() && !all_digits(fp)))
				throw InputError("malformed decimal '" + orig + "'");
			digits = std::string(ip) + std::string(fp);
			exponent -= static_cast<long>(fp.size());
		}
		else
		{
			if (!all_digits(s))
				throw InputError("malformed number '" + orig + "'");
			digits = std::string(s);
		}
		if (digits.empty())
			digits = "0";
		q = Rational(mpz_class(digits, 10)) * pow10(exponent);
	}
	return neg ? Rational(-q) : q;
}

std::string to_string(Rational const &q) { return q.get_str(); }

} // namespace intdisc
