#include "intdisc/formio.h"

#include "intdisc/polyalg.h"
#include "intdisc/tensornet.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace intdisc {

namespace {

std::string strip(std::string s)
{
	if (auto h = s.find('#'); h != s.npos)
		s.resize(h);
	auto b = s.find_first_not_of(" \t\r");
	if (b == s.npos)
		return {};
	auto e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

int header_value(std::string const &tok, std::string const &key, int lineno)
{
	if (tok.rfind(key + "=", 0) != 0)
		throw InputError(fmt::format("line {}: expected '{}=<int>'", lineno, key));
	try
	{
		size_t used = 0;
		int v = std::stoi(tok.substr(key.size() + 1), &used);
		if (used != tok.size() - key.size() - 1)
			throw InputError("");
		return v;
	}
	catch (std::exception const &)
	{
		throw InputError(fmt::format("line {}: bad value in '{}'", lineno, tok));
	}
}

std::vector<std::string> variable_names(int n)
{
	static std::vector<std::string> const short_names{"x", "y", "z", "w"};
	if (n <= 4)
		return {short_names.begin(), short_names.begin() + n};
	std::vector<std::string> v;
	for (int i = 1; i <= n; ++i)
		v.push_back(fmt::format("x{}", i));
	return v;
}

// expression grammar with parentheses and implicit products
struct ExprParser
{
	std::string const &s;
	std::vector<std::string> const &vars;
	size_t pos = 0;

	[[noreturn]] void fail(std::string const &what) const
	{
		throw InputError(fmt::format("expression parse error at {}: {}", pos, what));
	}

	char peek()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			++pos;
		return pos < s.size() ? s[pos] : '\0';
	}

	SparsePoly expr()
	{
		SparsePoly acc = SparsePoly::constant(vars, 0);
		bool first = true;
		for (;;)
		{
			char c = peek();
			int sign = 1;
			if (c == '+' || c == '-')
			{
				sign = c == '-' ? -1 : 1;
				++pos;
			}
			else if (!first)
				break;
			auto t = product();
			acc = sign > 0 ? acc + t : acc - t;
			first = false;
		}
		return acc;
	}

	SparsePoly product()
	{
		auto acc = power();
		for (;;)
		{
			char c = peek();
			if (c == '*')
			{
				++pos;
				acc = acc * power();
			}
			else if (c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '.')
				acc = acc * power();
			else
				return acc;
		}
	}

	SparsePoly power()
	{
		auto base = atom();
		if (peek() == '^')
		{
			++pos;
			peek();
			size_t start = pos;
			while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
				++pos;
			if (start == pos)
				fail("expected exponent");
			int e = std::stoi(s.substr(start, pos - start));
			if (e > 64)
				fail("exponent too large");
			base = pow(base, e);
		}
		return base;
	}

	SparsePoly atom()
	{
		char c = peek();
		if (c == '(')
		{
			++pos;
			auto e = expr();
			if (peek() != ')')
				fail("expected ')'");
			++pos;
			return e;
		}
		if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
		{
			size_t start = pos;
			while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == '.'))
				++pos;
			return SparsePoly::constant(vars, parse_rational(s.substr(start, pos - start)));
		}
		if (std::isalpha(static_cast<unsigned char>(c)))
		{
			size_t start = pos;
			while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
				++pos;
			auto name = s.substr(start, pos - start);
			if (std::find(vars.begin(), vars.end(), name) == vars.end())
				fail("unknown variable '" + name + "'");
			return SparsePoly::variable(vars, name);
		}
		fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
	}
};

} // namespace

FormQ parse_form(std::string const &text)
{
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	bool have_header = false;
	FormShape shape;
	std::vector<std::pair<MultiIndex, Rational>> entries;
	while (std::getline(in, line))
	{
		++lineno;
		line = strip(line);
		if (line.empty())
			continue;
		if (!have_header)
		{
			std::istringstream hs(line);
			std::string word, a, b, extra;
			hs >> word >> a >> b;
			if (word != "form" || a.empty() || b.empty() || (hs >> extra))
				throw InputError(fmt::format("line {}: expected 'form n=<n> r=<r>'", lineno));
			shape.n = header_value(a, "n", lineno);
			shape.r = header_value(b, "r", lineno);
			if (shape.n < 1 || shape.r < 1 || shape.n > 16 || shape.r > 64)
				throw InputError(fmt::format("line {}: unsupported shape n={} r={}", lineno, shape.n, shape.r));
			have_header = true;
			continue;
		}
		auto eq = line.find('=');
		if (eq == line.npos)
			throw InputError(fmt::format("line {}: expected '<exponents> = <coeff>'", lineno));
		std::istringstream es(line.substr(0, eq));
		MultiIndex a;
		std::string tok;
		while (es >> tok)
		{
			try
			{
				size_t used = 0;
				int v = std::stoi(tok, &used);
				if (used != tok.size())
					throw InputError("");
				a.push_back(v);
			}
			catch (std::exception const &)
			{
				throw InputError(fmt::format("line {}: bad exponent '{}'", lineno, tok));
			}
		}
		auto coeff = strip(line.substr(eq + 1));
		if (coeff.empty())
			throw InputError(fmt::format("line {}: missing coefficient", lineno));
		try
		{
			entries.emplace_back(std::move(a), parse_rational(coeff));
		}
		catch (InputError const &e)
		{
			throw InputError(fmt::format("line {}: {}", lineno, e.what()));
		}
	}
	if (!have_header)
		throw InputError("empty form file");
	return make_form(shape, entries);
}

std::string format_form(FormQ const &f)
{
	std::string out = fmt::format("form n={} r={}\n", f.shape().n, f.shape().r);
	auto ms = monomials(f.shape());
	for (size_t i = 0; i < ms.size(); ++i)
	{
		if (is_zero(f.coeff(i)))
			continue;
		for (size_t k = 0; k < ms[i].size(); ++k)
			out += fmt::format("{}{}", k ? " " : "", ms[i][k]);
		out += " = " + to_string(f.coeff(i)) + "\n";
	}
	return out;
}

std::string read_text_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_text_file(std::string const &path, std::string const &text)
{
	std::ofstream out(path);
	if (!out)
		throw InputError("cannot write '" + path + "'");
	out << text;
	if (!out)
		throw InputError("write to '" + path + "' failed");
}

FormQ read_form_file(std::string const &path) { return parse_form(read_text_file(path)); }

FormQ form_from_expression(std::string const &text, int n)
{
	auto vars = variable_names(n);
	ExprParser parser{text, vars};
	auto p = parser.expr();
	if (parser.peek() != '\0')
		parser.fail("trailing input");
	if (p.is_zero())
		throw InputError("zero polynomial is not a form");
	int r = p.total_degree();
	if (!p.is_homogeneous(r))
		throw InputError("expression '" + text + "' is not homogeneous");
	FormShape shape{n, r};
	std::vector<Rational> c(shape.size(), Rational(0));
	for (auto const &t : p.terms())
	{
		MultiIndex a(t.exp.begin(), t.exp.begin() + n);
		c[monomial_index(shape, a)] = t.coeff;
	}
	return FormQ(shape, std::move(c));
}

std::string format_calibration(CalibrationRecord const &rec)
{
	auto vars = coordinate_names({2, 5});
	std::string out = "# 2|5 invariants of degree 8 and 12 in monomial coefficients\n";
	out += "vars";
	for (auto const &v : vars)
		out += " " + v;
	out += "\n";
	for (auto const &[name, poly] : {std::pair{"I8", &rec.I8}, std::pair{"I12", &rec.I12}})
	{
		out += fmt::format("polynomial {}\n", name);
		out += dump_poly(poly->with_vars(vars));
		out += "end\n";
	}
	for (auto const &[row, ok] : rec.checks)
		out += fmt::format("check {} : {}\n", row, ok ? "pass" : "fail");
	out += fmt::format("checks-passed: {}/{}\n", rec.passed_count(), rec.checks.size());
	return out;
}

CalibrationRecord parse_calibration(std::string const &text)
{
	auto vars = coordinate_names({2, 5});
	std::istringstream in(text);
	std::string line, current, body;
	CalibrationRecord rec;
	bool have8 = false, have12 = false;
	int lineno = 0;
	while (std::getline(in, line))
	{
		++lineno;
		auto s = strip(line);
		if (s.empty())
			continue;
		if (!current.empty())
		{
			if (s == "end")
			{
				auto p = read_poly_dump(body, vars);
				if (current == "I8")
					rec.I8 = p, have8 = true;
				else if (current == "I12")
					rec.I12 = p, have12 = true;
				else
					throw InputError(fmt::format("line {}: unknown polynomial '{}'", lineno, current));
				current.clear();
				body.clear();
			}
			else
				body += s + "\n";
			continue;
		}
		if (s.rfind("vars", 0) == 0)
		{
			std::istringstream vs(s.substr(4));
			std::vector<std::string> got;
			std::string v;
			while (vs >> v)
				got.push_back(v);
			if (got != vars)
				throw InputError(fmt::format("line {}: variable list does not match 2|5 coordinates", lineno));
		}
		else if (s.rfind("polynomial ", 0) == 0)
			current = strip(s.substr(11));
		else if (s.rfind("check ", 0) == 0)
		{
			auto colon = s.rfind(':');
			if (colon == s.npos)
				throw InputError(fmt::format("line {}: malformed check line", lineno));
			rec.checks.emplace_back(strip(s.substr(6, colon - 6)), strip(s.substr(colon + 1)) == "pass");
		}
		else if (s.rfind("checks-passed:", 0) == 0)
			continue;
		else
			throw InputError(fmt::format("line {}: unexpected '{}'", lineno, s));
	}
	if (!current.empty())
		throw InputError("unterminated polynomial block '" + current + "'");
	if (!have8 || !have12)
		throw InputError("calibration file lacks I8 or I12");
	return rec;
}

std::string format_fit(FitFile const &fit)
{
	return fmt::format("c1 = {:.17g}\nc2 = {:.17g}\nrms = {:.6g}\n", fit.c1, fit.c2, fit.rms);
}

FitFile parse_fit(std::string const &text)
{
	std::istringstream in(text);
	std::string line;
	std::map<std::string, double> kv;
	while (std::getline(in, line))
	{
		auto s = strip(line);
		if (s.empty())
			continue;
		auto eq = s.find('=');
		if (eq == s.npos)
			throw InputError("fit file: expected 'key = value' in '" + s + "'");
		try
		{
			kv[strip(s.substr(0, eq))] = std::stod(strip(s.substr(eq + 1)));
		}
		catch (std::exception const &)
		{
			throw InputError("fit file: bad number in '" + s + "'");
		}
	}
	if (!kv.count("c1") || !kv.count("c2"))
		throw InputError("fit file needs c1 and c2");
	return {kv["c1"], kv["c2"], kv.count("rms") ? kv["rms"] : 0.0};
}

} // namespace intdisc
