#include "intdisc/polyalg.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

namespace intdisc {

namespace {

using Exponent = SparsePoly::Exponent;
using Term = SparsePoly::Term;

int degree(Exponent const &e)
{
	int d = 0;
	for (auto x : e)
		d += x;
	return d;
}

// true if a sorts before b: higher total degree first, then lex descending
bool before(Exponent const &a, Exponent const &b)
{
	int da = degree(a), db = degree(b);
	if (da != db)
		return da > db;
	return a > b;
}

struct ExponentHash
{
	size_t operator()(Exponent const &e) const
	{
		uint64_t h = 1469598103934665603ull;
		for (auto x : e)
			h = (h ^ x) * 1099511628211ull;
		return static_cast<size_t>(h);
	}
};

using Accumulator = std::unordered_map<Exponent, Rational, ExponentHash>;

Exponent add(Exponent const &a, Exponent const &b)
{
	Exponent r;
	for (int i = 0; i < SparsePoly::max_vars; ++i)
	{
		int s = a[i] + b[i];
		if (s > 255)
			throw DomainError("polynomial exponent overflow");
		r[i] = static_cast<uint8_t>(s);
	}
	return r;
}

std::vector<Term> collect(Accumulator &acc)
{
	std::vector<Term> out;
	out.reserve(acc.size());
	for (auto &[e, c] : acc)
		if (sgn(c) != 0)
			out.push_back({e, std::move(c)});
	std::sort(out.begin(), out.end(), [](Term const &a, Term const &b) { return before(a.exp, b.exp); });
	return out;
}

// merge two sorted term lists, b scaled by sign
std::vector<Term> merge(std::vector<Term> const &a, std::vector<Term> const &b, bool subtract)
{
	std::vector<Term> out;
	out.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size())
	{
		if (j == b.size() || (i < a.size() && before(a[i].exp, b[j].exp)))
			out.push_back(a[i++]);
		else if (i == a.size() || before(b[j].exp, a[i].exp))
		{
			out.push_back(b[j++]);
			if (subtract)
				out.back().coeff = -out.back().coeff;
		}
		else
		{
			Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
			if (sgn(c) != 0)
				out.push_back({a[i].exp, std::move(c)});
			++i;
			++j;
		}
	}
	return out;
}

Exponent zero_exponent()
{
	Exponent e;
	e.fill(0);
	return e;
}

} // namespace

SparsePoly::SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars))
{
	if (vars_.size() > static_cast<size_t>(max_vars))
		throw InputError("too many polynomial variables");
}

SparsePoly::SparsePoly(Rational const &c)
{
	if (sgn(c) != 0)
		terms_.push_back({zero_exponent(), c});
}

SparsePoly::SparsePoly(std::vector<std::string> vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms))
{
	if (vars_.size() > static_cast<size_t>(max_vars))
		throw InputError("too many polynomial variables");
	normalize();
}

void SparsePoly::normalize()
{
	Accumulator acc;
	for (auto &t : terms_)
		acc[t.exp] += t.coeff;
	terms_ = collect(acc);
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, Rational const &c)
{
	SparsePoly p(std::move(vars));
	if (sgn(c) != 0)
		p.terms_.push_back({zero_exponent(), c});
	return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, std::string const &name)
{
	SparsePoly p(std::move(vars));
	int i = p.var_index(name);
	if (i < 0)
		throw InputError("unknown variable '" + name + "'");
	auto e = zero_exponent();
	e[i] = 1;
	p.terms_.push_back({e, Rational(1)});
	return p;
}

int SparsePoly::var_index(std::string const &name) const
{
	auto it = std::find(vars_.begin(), vars_.end(), name);
	return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int SparsePoly::total_degree() const { return terms_.empty() ? -1 : degree(terms_.front().exp); }

int SparsePoly::degree_in(int var) const
{
	int d = terms_.empty() ? -1 : 0;
	for (auto const &t : terms_)
		d = std::max(d, static_cast<int>(t.exp[var]));
	return d;
}

bool SparsePoly::is_homogeneous(int deg) const
{
	return std::all_of(terms_.begin(), terms_.end(), [&](Term const &t) { return degree(t.exp) == deg; });
}

Rational SparsePoly::constant_term() const
{
	if (!terms_.empty() && degree(terms_.back().exp) == 0)
		return terms_.back().coeff;
	return Rational(0);
}

std::vector<std::string> union_vars(std::vector<std::string> const &a, std::vector<std::string> const &b)
{
	auto out = a;
	for (auto const &v : b)
		if (std::find(out.begin(), out.end(), v) == out.end())
			out.push_back(v);
	return out;
}

SparsePoly SparsePoly::with_vars(std::vector<std::string> const &vars) const
{
	if (vars == vars_)
		return *this;
	std::vector<int> map(vars_.size());
	for (size_t i = 0; i < vars_.size(); ++i)
	{
		auto it = std::find(vars.begin(), vars.end(), vars_[i]);
		if (it == vars.end())
		{
			// a variable may only be dropped if it does not occur
			if (degree_in(static_cast<int>(i)) > 0)
				throw InputError("cannot drop variable '" + vars_[i] + "'");
			map[i] = -1;
		}
		else
			map[i] = static_cast<int>(it - vars.begin());
	}
	std::vector<Term> terms;
	terms.reserve(terms_.size());
	for (auto const &t : terms_)
	{
		auto e = zero_exponent();
		for (size_t i = 0; i < vars_.size(); ++i)
			if (map[i] >= 0)
				e[map[i]] = t.exp[i];
		terms.push_back({e, t.coeff});
	}
	return SparsePoly(vars, std::move(terms));
}

SparsePoly SparsePoly::operator-() const
{
	auto r = *this;
	for (auto &t : r.terms_)
		t.coeff = -t.coeff;
	return r;
}

SparsePoly &SparsePoly::operator+=(SparsePoly const &o)
{
	if (o.vars_ != vars_)
	{
		auto u = union_vars(vars_, o.vars_);
		*this = with_vars(u);
		return *this += o.with_vars(u);
	}
	terms_ = merge(terms_, o.terms_, false);
	return *this;
}

SparsePoly &SparsePoly::operator-=(SparsePoly const &o)
{
	if (o.vars_ != vars_)
	{
		auto u = union_vars(vars_, o.vars_);
		*this = with_vars(u);
		return *this -= o.with_vars(u);
	}
	terms_ = merge(terms_, o.terms_, true);
	return *this;
}

SparsePoly operator*(SparsePoly const &a, SparsePoly const &b)
{
	if (a.vars_ != b.vars_)
	{
		auto u = union_vars(a.vars_, b.vars_);
		return a.with_vars(u) * b.with_vars(u);
	}
	SparsePoly r(a.vars_);
	if (a.terms_.empty() || b.terms_.empty())
		return r;
	if (b.terms_.size() == 1 && degree(b.terms_[0].exp) == 0)
		return a * b.terms_[0].coeff;
	Accumulator acc;
	acc.reserve(a.terms_.size() * b.terms_.size());
	for (auto const &x : a.terms_)
		for (auto const &y : b.terms_)
			acc[add(x.exp, y.exp)] += x.coeff * y.coeff;
	r.terms_ = collect(acc);
	return r;
}

SparsePoly &SparsePoly::operator*=(SparsePoly const &o) { return *this = *this * o; }

SparsePoly &SparsePoly::operator*=(Rational const &q)
{
	if (sgn(q) == 0)
		terms_.clear();
	for (auto &t : terms_)
		t.coeff *= q;
	return *this;
}

bool SparsePoly::operator==(SparsePoly const &o) const
{
	if (vars_ != o.vars_)
	{
		auto u = union_vars(vars_, o.vars_);
		return with_vars(u) == o.with_vars(u);
	}
	if (terms_.size() != o.terms_.size())
		return false;
	for (size_t i = 0; i < terms_.size(); ++i)
		if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
			return false;
	return true;
}

std::string SparsePoly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	bool first = true;
	for (auto const &t : terms_)
	{
		Rational c = t.coeff;
		bool neg = sgn(c) < 0;
		if (neg)
			c = -c;
		s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
		first = false;
		std::string mono;
		for (size_t i = 0; i < vars_.size(); ++i)
		{
			if (t.exp[i] == 0)
				continue;
			if (!mono.empty())
				mono += '*';
			mono += vars_[i];
			if (t.exp[i] > 1)
				mono += fmt::format("^{}", t.exp[i]);
		}
		if (mono.empty())
			s += c.get_str();
		else if (c == 1)
			s += mono;
		else
			s += c.get_str() + "*" + mono;
	}
	return s;
}

SparsePoly pow(SparsePoly const &p, int k)
{
	if (k < 0)
		throw InputError("negative polynomial power");
	SparsePoly r = SparsePoly::constant(p.vars(), 1), base = p;
	while (k > 0)
	{
		if (k & 1)
			r = r * base;
		k >>= 1;
		if (k)
			base = base * base;
	}
	return r;
}

SparsePoly scale(SparsePoly const &p, Rational const &q) { return p * q; }

SparsePoly differentiate(SparsePoly const &p, int var)
{
	if (var < 0 || var >= static_cast<int>(p.vars().size()))
		throw InputError("differentiate: variable index out of range");
	std::vector<Term> terms;
	for (auto const &t : p.terms())
	{
		if (t.exp[var] == 0)
			continue;
		Term d = t;
		d.coeff *= t.exp[var];
		--d.exp[var];
		terms.push_back(std::move(d));
	}
	return SparsePoly(p.vars(), std::move(terms));
}

SparsePoly differentiate(SparsePoly const &p, std::string const &var)
{
	int i = p.var_index(var);
	if (i < 0)
		throw InputError("differentiate: unknown variable '" + var + "'");
	return differentiate(p, i);
}

SparsePoly compose(SparsePoly const &p, std::vector<SparsePoly> const &images)
{
	if (images.size() != p.vars().size())
		throw InputError("compose: need one image per variable");
	std::vector<std::string> target;
	for (auto const &im : images)
		target = union_vars(target, im.vars());
	std::vector<std::vector<SparsePoly>> powers(images.size());
	for (size_t i = 0; i < images.size(); ++i)
		powers[i].push_back(SparsePoly::constant(target, 1));

	Accumulator acc;
	for (auto const &t : p.terms())
	{
		SparsePoly prod = SparsePoly::constant(target, t.coeff);
		for (size_t i = 0; i < images.size(); ++i)
		{
			int e = t.exp[i];
			while (static_cast<int>(powers[i].size()) <= e)
				powers[i].push_back((powers[i].back() * images[i]).with_vars(target));
			if (e > 0)
				prod = prod * powers[i][e];
		}
		prod = prod.with_vars(target);
		for (auto const &x : prod.terms())
			acc[x.exp] += x.coeff;
	}
	return SparsePoly(target, collect(acc));
}

SparsePoly exact_divide(SparsePoly const &p, SparsePoly const &q)
{
	if (q.is_zero())
		throw DomainError("division by zero polynomial");
	auto u = union_vars(p.vars(), q.vars());
	SparsePoly r = p.with_vars(u), d = q.with_vars(u);
	auto const &lt = d.leading_term();
	std::vector<Term> quot;
	while (!r.is_zero())
	{
		auto const &rt = r.leading_term();
		Exponent e;
		for (int i = 0; i < SparsePoly::max_vars; ++i)
		{
			if (rt.exp[i] < lt.exp[i])
				throw DomainError("polynomial division is not exact");
			e[i] = static_cast<uint8_t>(rt.exp[i] - lt.exp[i]);
		}
		Term t{e, rt.coeff / lt.coeff};
		r -= SparsePoly(u, {t}) * d;
		quot.push_back(std::move(t));
	}
	return SparsePoly(u, std::move(quot));
}

std::vector<SparsePoly> coefficients_in(SparsePoly const &p, std::string const &var)
{
	int v = p.var_index(var);
	if (v < 0)
		throw InputError("variable '" + var + "' does not occur in the polynomial's variable list");
	int deg = std::max(p.degree_in(v), 0);
	std::vector<std::vector<Term>> parts(deg + 1);
	for (auto const &t : p.terms())
	{
		Term c = t;
		c.exp[v] = 0;
		parts[t.exp[v]].push_back(std::move(c));
	}
	std::vector<SparsePoly> out;
	for (auto &part : parts)
		out.emplace_back(p.vars(), std::move(part));
	return out;
}

namespace {

SparsePoly bareiss_determinant(std::vector<std::vector<SparsePoly>> m, std::vector<std::string> const &vars)
{
	size_t const n = m.size();
	if (n == 0)
		return SparsePoly::constant(vars, 1);
	SparsePoly prev = SparsePoly::constant(vars, 1);
	int sign = 1;
	for (size_t k = 0; k + 1 < n; ++k)
	{
		if (m[k][k].is_zero())
		{
			size_t i = k + 1;
			while (i < n && m[i][k].is_zero())
				++i;
			if (i == n)
				return SparsePoly(vars);
			std::swap(m[i], m[k]);
			sign = -sign;
		}
		for (size_t i = k + 1; i < n; ++i)
		{
			for (size_t j = k + 1; j < n; ++j)
				m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev).with_vars(vars);
			m[i][k] = SparsePoly(vars);
		}
		prev = m[k][k];
	}
	auto det = m[n - 1][n - 1];
	return sign < 0 ? -det : det;
}

} // namespace

SparsePoly resultant(SparsePoly const &p, SparsePoly const &q, std::string const &var)
{
	if (p.is_zero() || q.is_zero())
		throw DomainError("resultant of the zero polynomial");
	auto u = union_vars(p.vars(), q.vars());
	if (std::find(u.begin(), u.end(), var) == u.end())
		throw InputError("resultant: variable '" + var + "' not present");
	auto pc = coefficients_in(p.with_vars(u), var);
	auto qc = coefficients_in(q.with_vars(u), var);
	size_t m = pc.size() - 1, k = qc.size() - 1, n = m + k;
	std::vector<std::vector<SparsePoly>> syl(n, std::vector<SparsePoly>(n, SparsePoly(u)));
	for (size_t i = 0; i < k; ++i)
		for (size_t j = 0; j <= m; ++j)
			syl[i][i + j] = pc[m - j];
	for (size_t i = 0; i < m; ++i)
		for (size_t j = 0; j <= k; ++j)
			syl[k + i][i + j] = qc[k - j];
	return bareiss_determinant(std::move(syl), u);
}

SparsePoly discriminant_uni(SparsePoly const &p, std::string const &var)
{
	if (p.is_zero())
		throw DomainError("discriminant of the zero polynomial");
	int v = p.var_index(var);
	if (v < 0)
		throw InputError("discriminant: variable '" + var + "' not present");
	int m = p.degree_in(v);
	if (m < 1)
		throw DomainError("discriminant of a polynomial of degree 0 in '" + var + "'");
	auto res = resultant(p, differentiate(p, v), var);
	auto lead = coefficients_in(p, var).back();
	auto d = exact_divide(res, lead).with_vars(p.vars());
	return (m * (m - 1) / 2) % 2 ? -d : d;
}

template <class S> S eval_aligned(SparsePoly const &p, std::vector<S> const &values)
{
	if (values.size() != p.vars().size())
		throw InputError("eval: value count does not match variables");
	S total(0);
	for (auto const &t : p.terms())
	{
		S term = from_rational<S>(t.coeff);
		for (size_t i = 0; i < values.size(); ++i)
			for (int e = 0; e < t.exp[i]; ++e)
				term *= values[i];
		total += term;
	}
	return total;
}

template Rational eval_aligned(SparsePoly const &, std::vector<Rational> const &);
template double eval_aligned(SparsePoly const &, std::vector<double> const &);

template <class S> static S eval_map(SparsePoly const &p, std::map<std::string, S> const &point)
{
	std::vector<S> values;
	for (size_t i = 0; i < p.vars().size(); ++i)
	{
		auto it = point.find(p.vars()[i]);
		if (it == point.end())
		{
			if (p.degree_in(static_cast<int>(i)) > 0)
				throw InputError("unbound variable '" + p.vars()[i] + "'");
			values.push_back(S(0));
		}
		else
			values.push_back(it->second);
	}
	return eval_aligned(p, values);
}

Rational eval_poly(SparsePoly const &p, std::map<std::string, Rational> const &point) { return eval_map(p, point); }
double eval_poly(SparsePoly const &p, std::map<std::string, double> const &point) { return eval_map(p, point); }

PolyEvaluator::PolyEvaluator(SparsePoly const &p) : nvars_(static_cast<int>(p.vars().size()))
{
	for (auto const &t : p.terms())
	{
		coeffs_.push_back(t.coeff.get_d());
		for (int i = 0; i < nvars_; ++i)
		{
			exps_.push_back(t.exp[i]);
			max_deg_ = std::max(max_deg_, static_cast<int>(t.exp[i]));
		}
	}
}

double PolyEvaluator::operator()(std::vector<double> const &values) const
{
	if (static_cast<int>(values.size()) != nvars_)
		throw InputError("eval: value count does not match variables");
	int const stride = max_deg_ + 1;
	std::vector<double> pw(static_cast<size_t>(nvars_) * stride);
	for (int i = 0; i < nvars_; ++i)
	{
		pw[i * stride] = 1.0;
		for (int e = 1; e <= max_deg_; ++e)
			pw[i * stride + e] = pw[i * stride + e - 1] * values[i];
	}
	double total = 0;
	for (size_t t = 0; t < coeffs_.size(); ++t)
	{
		double term = coeffs_[t];
		uint8_t const *e = &exps_[t * nvars_];
		for (int i = 0; i < nvars_; ++i)
			if (e[i])
				term *= pw[i * stride + e[i]];
		total += term;
	}
	return total;
}

namespace {

struct PolyParser
{
	std::string const &s;
	size_t pos = 0;
	std::vector<std::string> vars;
	bool fixed;

	void skip()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			++pos;
	}

	[[noreturn]] void fail(std::string const &what)
	{
		throw InputError(fmt::format("polynomial parse error at {}: {}", pos, what));
	}

	int var(std::string const &name)
	{
		auto it = std::find(vars.begin(), vars.end(), name);
		if (it != vars.end())
			return static_cast<int>(it - vars.begin());
		if (fixed)
			fail("unknown variable '" + name + "'");
		if (vars.size() >= static_cast<size_t>(SparsePoly::max_vars))
			fail("too many variables");
		vars.push_back(name);
		return static_cast<int>(vars.size() - 1);
	}

	int integer()
	{
		skip();
		size_t start = pos;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
			++pos;
		if (start == pos)
			fail("expected integer");
		return std::stoi(s.substr(start, pos - start));
	}

	// returns false at a term boundary
	bool factor(Term &t)
	{
		skip();
		if (pos >= s.size())
			return false;
		char c = s[pos];
		if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
		{
			size_t start = pos;
			while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == '.'))
				++pos;
			t.coeff *= parse_rational(s.substr(start, pos - start));
			return true;
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			size_t start = pos;
			while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
				++pos;
			int v = var(s.substr(start, pos - start));
			int e = 1;
			skip();
			if (pos < s.size() && s[pos] == '^')
			{
				++pos;
				e = integer();
			}
			if (t.exp[v] + e > 255)
				fail("exponent too large");
			t.exp[v] = static_cast<uint8_t>(t.exp[v] + e);
			return true;
		}
		return false;
	}

	// factors joined by optional '*'; a '*' must sit between two factors
	void factors(Term &t)
	{
		size_t before = pos;
		while (factor(t))
		{
			skip();
			if (pos < s.size() && s[pos] == '*')
			{
				++pos;
				if (!factor(t))
					fail("expected a factor after '*'");
			}
		}
		if (pos == before)
			fail("expected a term");
	}

	std::vector<Term> parse()
	{
		std::vector<Term> terms;
		skip();
		while (pos < s.size())
		{
			Term t{zero_exponent(), Rational(1)};
			skip();
			if (s[pos] == '+' || s[pos] == '-')
			{
				if (s[pos] == '-')
					t.coeff = -1;
				++pos;
			}
			factors(t);
			skip();
			if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
				fail(std::string("unexpected character '") + s[pos] + "'");
			terms.push_back(std::move(t));
		}
		return terms;
	}
};

} // namespace

SparsePoly parse_poly(std::string const &text, std::vector<std::string> vars)
{
	bool fixed = !vars.empty();
	PolyParser p{text, 0, std::move(vars), fixed};
	auto terms = p.parse();
	return SparsePoly(p.vars, std::move(terms));
}

std::string dump_poly(SparsePoly const &p)
{
	std::string out;
	for (auto const &t : p.terms())
	{
		for (size_t i = 0; i < p.vars().size(); ++i)
			out += fmt::format("{}{}", i ? " " : "", t.exp[i]);
		out += " : " + t.coeff.get_str() + "\n";
	}
	return out;
}

SparsePoly read_poly_dump(std::string const &text, std::vector<std::string> vars)
{
	std::istringstream in(text);
	std::string line;
	std::vector<Term> terms;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		auto hash = line.find('#');
		if (hash != line.npos)
			line.resize(hash);
		if (line.find_first_not_of(" \t\r") == line.npos)
			continue;
		auto colon = line.find(':');
		if (colon == line.npos)
			throw InputError(fmt::format("line {}: missing ':'", lineno));
		std::istringstream es(line.substr(0, colon));
		Term t{zero_exponent(), parse_rational(line.substr(colon + 1))};
		size_t i = 0;
		std::string tok;
		while (es >> tok)
		{
			if (i >= vars.size())
				throw InputError(fmt::format("line {}: too many exponents", lineno));
			int e = 0;
			try
			{
				e = std::stoi(tok);
			}
			catch (std::exception const &)
			{
				throw InputError(fmt::format("line {}: bad exponent '{}'", lineno, tok));
			}
			if (e < 0 || e > 255)
				throw InputError(fmt::format("line {}: exponent out of range", lineno));
			t.exp[i++] = static_cast<uint8_t>(e);
		}
		if (i != vars.size())
			throw InputError(fmt::format("line {}: expected {} exponents", lineno, vars.size()));
		terms.push_back(std::move(t));
	}
	return SparsePoly(std::move(vars), std::move(terms));
}

} // namespace intdisc
