#include "intdisc/invariants.h"

#include "intdisc/formio.h"
#include "intdisc/printed.h"
#include "intdisc/tensornet.h"
#include "intdisc/wardops.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <fmt/format.h>

namespace intdisc {

bool CalibrationRecord::all_passed() const
{
	return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.second; });
}

int CalibrationRecord::passed_count() const
{
	return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](auto const &c) { return c.second; }));
}

CalibrationRecord derive_25(bool strict)
{
	FormShape const shape{2, 5};
	auto vars = coordinate_names(shape);
	auto I4 = printed_polynomial("I4_25").with_vars(vars);
	auto O0 = build_O0_25();
	auto O4 = build_O4_25();

	CalibrationRecord rec;
	rec.I8 = (Rational(-25, 264) * apply_operator_exact(O4, I4)).with_vars(vars);
	rec.I12 = (Rational(25, 588) * (apply_operator_exact(O4, rec.I8) + Rational(2, 25) * I4 * rec.I8)).with_vars(vars);

	std::vector<SparsePoly> polys{I4, rec.I8, rec.I12};
	for (auto const *name : {"O0_25", "O4_25"})
	{
		auto table = action_table(name);
		for (auto const &c : verify_action_table(table, std::string(name) == "O0_25" ? O0 : O4, polys))
		{
			if (strict && !c.ok)
				throw DomainError(fmt::format("calibration row '{}' fails; residual {}", c.row, c.residual.to_string()));
			bool defining = c.row == "O4 I4" || c.row == "O4 I8";
			rec.checks.emplace_back(defining ? c.row + " (defining)" : c.row, c.ok);
		}
	}
	return rec;
}

CalibrationRecord const &default_calibration()
{
	static CalibrationRecord const rec = derive_25(true);
	return rec;
}

template <class S> S const &InvariantSet<S>::operator[](std::string const &name) const
{
	for (size_t i = 0; i < names.size(); ++i)
		if (names[i] == name)
			return values[i];
	throw InputError("no invariant named '" + name + "' for shape " + to_string(shape));
}

bool is_supported(FormShape shape)
{
	if (shape.r == 2)
		return shape.n >= 1;
	return shape == FormShape{2, 3} || shape == FormShape{2, 4} || shape == FormShape{2, 5} || shape == FormShape{3, 3};
}

std::vector<std::pair<std::string, int>> invariant_names(FormShape shape)
{
	if (shape.r == 2)
		return {{"det", shape.n}};
	if (shape == FormShape{2, 3})
		return {{"I4", 4}};
	if (shape == FormShape{2, 4})
		return {{"I2", 2}, {"I3", 3}};
	if (shape == FormShape{2, 5})
		return {{"I4", 4}, {"I8", 8}, {"I12", 12}};
	if (shape == FormShape{3, 3})
		return {{"I4", 4}, {"I6", 6}};
	throw InputError("unsupported shape " + to_string(shape));
}

namespace {

std::mutex cache_mutex;

SparsePoly symbolic_det(Matrix<SparsePoly> const &m)
{
	size_t n = m.size();
	if (n == 1)
		return m[0][0];
	SparsePoly total;
	for (size_t j = 0; j < n; ++j)
	{
		Matrix<SparsePoly> minor;
		for (size_t i = 1; i < n; ++i)
		{
			std::vector<SparsePoly> row;
			for (size_t k = 0; k < n; ++k)
				if (k != j)
					row.push_back(m[i][k]);
			minor.push_back(std::move(row));
		}
		auto term = m[0][j] * symbolic_det(minor);
		total = j % 2 ? total - term : total + term;
	}
	return total;
}

SparsePoly build_invariant(FormShape shape, std::string const &name, CalibrationRecord const *calib)
{
	auto vars = coordinate_names(shape);
	if (shape.r == 2)
	{
		if (shape.n > 4)
			throw InputError("symbolic determinant limited to n <= 4");
		Matrix<SparsePoly> m(shape.n, std::vector<SparsePoly>(shape.n));
		for (int i = 0; i < shape.n; ++i)
			for (int j = 0; j < shape.n; ++j)
			{
				auto a = count_indices(shape.n, {i, j});
				m[i][j] = SparsePoly::variable(vars, coordinate_name(a)) * Rational(1, multinomial(a));
			}
		return symbolic_det(m).with_vars(vars);
	}
	if (shape == FormShape{2, 3} && name == "I4")
		return printed_polynomial("I4_23").with_vars(vars);
	if (shape == FormShape{2, 4} && (name == "I2" || name == "I3"))
		return printed_polynomial(name + "_24").with_vars(vars);
	if (shape == FormShape{2, 5})
	{
		if (name == "I4")
			return printed_polynomial("I4_25").with_vars(vars);
		auto const &rec = calib ? *calib : default_calibration();
		if (name == "I8")
			return rec.I8.with_vars(vars);
		if (name == "I12")
			return rec.I12.with_vars(vars);
	}
	if (shape == FormShape{3, 3})
	{
		// sign flipped against the printed expansion so that 32 I4^3 + 3 I6^2
		// vanishes on singular cubics
		if (name == "I4")
			return (-printed_polynomial("I4_33")).with_vars(vars);
		if (name == "I6")
			return printed_polynomial("I6_33").with_vars(vars);
	}
	throw InputError(fmt::format("no invariant {} for shape {}", name, to_string(shape)));
}

struct Basis
{
	std::vector<SparsePoly const *> polys;
	std::vector<PolyEvaluator> evals;
};

Basis const &basis(FormShape shape, CalibrationRecord const *calib)
{
	static std::map<std::tuple<int, int, CalibrationRecord const *>, Basis> cache;
	auto const *key_calib = shape == FormShape{2, 5} ? calib : nullptr;
	{
		std::lock_guard lock(cache_mutex);
		auto it = cache.find({shape.n, shape.r, key_calib});
		if (it != cache.end())
			return it->second;
	}
	Basis b;
	for (auto const &[name, deg] : invariant_names(shape))
	{
		auto const &p = invariant_polynomial(shape, name, calib);
		b.polys.push_back(&p);
		b.evals.emplace_back(p);
	}
	std::lock_guard lock(cache_mutex);
	return cache.emplace(std::make_tuple(shape.n, shape.r, key_calib), std::move(b)).first->second;
}

} // namespace

SparsePoly const &invariant_polynomial(FormShape shape, std::string const &name, CalibrationRecord const *calib)
{
	static std::map<std::tuple<int, int, std::string, CalibrationRecord const *>, SparsePoly> cache;
	auto const *key_calib = shape == FormShape{2, 5} ? calib : nullptr;
	auto key = std::make_tuple(shape.n, shape.r, name, key_calib);
	{
		std::lock_guard lock(cache_mutex);
		auto it = cache.find(key);
		if (it != cache.end())
			return it->second;
	}
	// built outside the lock: the 2|5 calibration may recurse into here
	auto p = build_invariant(shape, name, calib);
	std::lock_guard lock(cache_mutex);
	return cache.emplace(key, std::move(p)).first->second;
}

template <class S> Matrix<S> quadratic_matrix(SymmetricForm<S> const &f)
{
	if (f.shape().r != 2)
		throw InputError("quadratic_matrix needs r = 2");
	int n = f.shape().n;
	Matrix<S> m(n, std::vector<S>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			m[i][j] = tensor_component(f, {i, j});
	return m;
}

template <class S> S determinant(Matrix<S> m)
{
	using std::abs;
	size_t n = m.size();
	S det = S(1);
	for (size_t c = 0; c < n; ++c)
	{
		size_t piv = c;
		for (size_t r = c + 1; r < n; ++r)
			if (abs(m[r][c]) > abs(m[piv][c]))
				piv = r;
		if (is_zero(m[piv][c]))
			return S(0);
		if (piv != c)
		{
			std::swap(m[piv], m[c]);
			det = -det;
		}
		det *= m[c][c];
		for (size_t r = c + 1; r < n; ++r)
		{
			S factor = m[r][c] / m[c][c];
			for (size_t k = c; k < n; ++k)
				m[r][k] -= factor * m[c][k];
		}
	}
	return det;
}

template <class S> InvariantSet<S> compute_invariants(SymmetricForm<S> const &f, CalibrationRecord const *calib)
{
	auto shape = f.shape();
	if (!is_supported(shape))
		throw InputError("unsupported shape " + to_string(shape));
	InvariantSet<S> inv;
	inv.shape = shape;
	for (auto const &[name, deg] : invariant_names(shape))
	{
		inv.names.push_back(name);
		inv.degrees.push_back(deg);
	}
	if (shape.r == 2)
	{
		inv.values.push_back(determinant(quadratic_matrix(f)));
		return inv;
	}
	auto const &b = basis(shape, calib);
	for (size_t i = 0; i < b.polys.size(); ++i)
	{
		if constexpr (std::is_same_v<S, double>)
			inv.values.push_back(b.evals[i](f.coeffs()));
		else
			inv.values.push_back(eval_aligned(*b.polys[i], f.coeffs()));
	}
	return inv;
}

template <class S> S discriminant(InvariantSet<S> const &inv)
{
	auto const &sh = inv.shape;
	auto const &v = inv.values;
	if (sh.r == 2)
		return v[0];
	if (sh == FormShape{2, 3})
		return v[0];
	if (sh == FormShape{2, 4})
		return v[0] * v[0] * v[0] - S(6) * v[1] * v[1];
	if (sh == FormShape{2, 5})
		return v[0] * v[0] - S(64) * v[1];
	if (sh == FormShape{3, 3})
		return S(32) * v[0] * v[0] * v[0] + S(3) * v[1] * v[1];
	throw InputError("unsupported shape " + to_string(sh));
}

std::string discriminant_expression(FormShape shape)
{
	if (shape.r == 2)
		return "det";
	if (shape == FormShape{2, 3})
		return "I4";
	if (shape == FormShape{2, 4})
		return "I2^3 - 6 I3^2";
	if (shape == FormShape{2, 5})
		return "I4^2 - 64 I8";
	if (shape == FormShape{3, 3})
		return "32 I4^3 + 3 I6^2";
	throw InputError("unsupported shape " + to_string(shape));
}

SparsePoly const &discriminant_polynomial(FormShape shape, CalibrationRecord const *calib)
{
	static std::map<std::tuple<int, int, CalibrationRecord const *>, SparsePoly> cache;
	auto const *key_calib = shape == FormShape{2, 5} ? calib : nullptr;
	auto key = std::make_tuple(shape.n, shape.r, key_calib);
	{
		std::lock_guard lock(cache_mutex);
		auto it = cache.find(key);
		if (it != cache.end())
			return it->second;
	}
	std::vector<SparsePoly> iv;
	for (auto const &[name, deg] : invariant_names(shape))
		iv.push_back(invariant_polynomial(shape, name, calib));
	auto expr = discriminant_expression(shape);
	SparsePoly d;
	if (shape.r == 2)
		d = iv[0];
	else
	{
		std::vector<std::string> names;
		for (auto const &[name, deg] : invariant_names(shape))
			names.push_back(name);
		d = compose(parse_poly(expr, names), iv).with_vars(coordinate_names(shape));
	}
	std::lock_guard lock(cache_mutex);
	return cache.emplace(key, std::move(d)).first->second;
}

Rational discriminant_23_classical(Rational const &a, Rational const &b, Rational const &c, Rational const &d)
{
	return 27 * a * a * d * d - b * b * c * c - 18 * a * b * c * d + 4 * a * c * c * c + 4 * b * b * b * d;
}

std::pair<Rational, Rational> vertical_invariants_24(Rational const &a, Rational const &b, Rational const &c)
{
	auto q = make_form<Rational>({2, 2}, {{{2, 0}, a}, {{1, 1}, b}, {{0, 2}, c}});
	auto inv = compute_invariants(pow_form(q, 2));
	return {inv["I2"], inv["I3"]};
}

std::vector<FormQ> singular_suite(FormShape shape)
{
	std::vector<std::string> exprs;
	if (shape == FormShape{2, 3})
		exprs = {"x^2 y", "x^3", "(x - y)^2 (x + 2 y)", "(2 x + y)^2 (x - 3 y)", "(x + y)^2 (3 x - y)"};
	else if (shape == FormShape{2, 4})
		exprs = {"(x^2 + y^2)^2", "x^4 + x^2 y^2", "(x - y)^2 (x^2 + x y + 3 y^2)", "x^2 y^2",
		         "(x + 2 y)^2 (x^2 - 5 y^2)", "(x^2 - 2 x y + 7 y^2)^2"};
	else if (shape == FormShape{2, 5})
		exprs = {"(x - y)^2 (x^3 + x y^2 + 2 y^3)", "x^2 y^3", "(x + y)^2 (x^3 - 2 y^3)",
		         "(2 x - y)^2 (x^3 + y^3)", "(x - 3 y)^2 (x + y) (x^2 + y^2)"};
	else if (shape == FormShape{3, 3})
		exprs = {"x y z", "x^3 + y^3 + z^3 - 3 x y z", "x^3 + y^3", "y^2 z - x^3", "y^2 z - x^3 - x^2 z",
		         "x (x^2 + y^2 + z^2)"};
	else if (shape.r == 2)
		exprs = shape.n == 2 ? std::vector<std::string>{"x^2", "(x - y)^2", "(2 x + 3 y)^2"}
		                     : std::vector<std::string>{"x^2 + y^2", "(x + y + z)^2", "x y"};
	else
		throw InputError("no singular suite for " + to_string(shape));
	std::vector<FormQ> out;
	for (auto const &e : exprs)
		out.push_back(form_from_expression(e, shape.n));
	return out;
}

std::vector<FormQ> nonsingular_suite(FormShape shape)
{
	std::vector<std::string> exprs;
	if (shape == FormShape{2, 3})
		exprs = {"x^3 + y^3", "x^3 - x y^2", "x^3 + x^2 y + y^3", "x y (x + y)"};
	else if (shape == FormShape{2, 4})
		exprs = {"x^4 + y^4", "x^4 + x^2 y^2 + y^4", "x^4 - y^4", "x y (x^2 - y^2)", "x^4 + 3 x y^3"};
	else if (shape == FormShape{2, 5})
		exprs = {"x^5 + y^5", "x^5 + x y^4", "x y (x - y) (x + y) (x + 2 y)", "x^5 + x^2 y^3 + y^5"};
	else if (shape == FormShape{3, 3})
		exprs = {"x^3 + y^3 + z^3", "x^3 + y^3 + z^3 + x y z", "y^2 z - x^3 + x z^2", "x^3 + y^3 + z^3 - 6 x y z"};
	else if (shape.r == 2)
		exprs = shape.n == 2 ? std::vector<std::string>{"x^2 + y^2", "x y", "x^2 + 3 x y - y^2"}
		                     : std::vector<std::string>{"x^2 + y^2 + z^2", "x y + z^2", "x^2 - y z + 2 z^2"};
	else
		throw InputError("no nonsingular suite for " + to_string(shape));
	std::vector<FormQ> out;
	for (auto const &e : exprs)
		out.push_back(form_from_expression(e, shape.n));
	return out;
}

template struct InvariantSet<Rational>;
template struct InvariantSet<double>;
template InvariantSet<Rational> compute_invariants(FormQ const &, CalibrationRecord const *);
template InvariantSet<double> compute_invariants(FormD const &, CalibrationRecord const *);
template Rational discriminant(InvariantSet<Rational> const &);
template double discriminant(InvariantSet<double> const &);
template Rational determinant(Matrix<Rational>);
template double determinant(Matrix<double>);
template Matrix<Rational> quadratic_matrix(FormQ const &);
template Matrix<double> quadratic_matrix(FormD const &);

} // namespace intdisc
