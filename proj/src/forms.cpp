#include "intdisc/forms.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

namespace intdisc {

namespace {

long long binomial(long long n, long long k)
{
	if (k < 0 || k > n)
		return 0;
	long long r = 1;
	for (long long i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

// number of monomials of total degree d in m variables
long long count_monomials(int m, int d)
{
	if (m == 0)
		return d == 0 ? 1 : 0;
	return binomial(d + m - 1, m - 1);
}

void enumerate(int n, int left, MultiIndex &cur, std::vector<MultiIndex> &out)
{
	int k = static_cast<int>(cur.size());
	if (k == n - 1)
	{
		cur.push_back(left);
		out.push_back(cur);
		cur.pop_back();
		return;
	}
	for (int a = left; a >= 0; --a)
	{
		cur.push_back(a);
		enumerate(n, left - a, cur, out);
		cur.pop_back();
	}
}

template <class S> bool positive(S const &x) { return x > 0; }

// Sturm-sequence helpers on dense univariate polynomials (low -> high)
template <class S> void trim(std::vector<S> &p)
{
	if constexpr (std::is_same_v<S, double>)
	{
		double m = 0;
		for (auto x : p)
			m = std::max(m, std::abs(x));
		while (!p.empty() && std::abs(p.back()) <= 1e-13 * m)
			p.pop_back();
	}
	else
	{
		while (!p.empty() && is_zero(p.back()))
			p.pop_back();
	}
}

template <class S> std::vector<S> remainder(std::vector<S> a, std::vector<S> const &b)
{
	while (a.size() >= b.size() && !a.empty())
	{
		S q = a.back() / b.back();
		size_t shift = a.size() - b.size();
		for (size_t i = 0; i < b.size(); ++i)
			a[shift + i] -= q * b[i];
		a.pop_back();
		trim(a);
	}
	return a;
}

template <class S> int sign_of(S const &x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

template <class S> int count_real_roots(std::vector<S> p)
{
	trim(p);
	if (p.size() <= 1)
		return 0;
	std::vector<std::vector<S>> seq;
	seq.push_back(p);
	std::vector<S> dp;
	for (size_t i = 1; i < p.size(); ++i)
		dp.push_back(p[i] * S(static_cast<long>(i)));
	trim(dp);
	seq.push_back(dp);
	while (seq.back().size() > 1)
	{
		auto r = remainder(seq[seq.size() - 2], seq.back());
		if (r.empty())
			break;
		for (auto &x : r)
			x = -x;
		seq.push_back(r);
	}
	auto changes = [&](bool minus_inf) {
		int c = 0, last = 0;
		for (auto const &q : seq)
		{
			int s = sign_of(q.back());
			if (minus_inf && (q.size() - 1) % 2 == 1)
				s = -s;
			if (s == 0)
				continue;
			if (last != 0 && s != last)
				++c;
			last = s;
		}
		return c;
	};
	return changes(true) - changes(false);
}

} // namespace

size_t FormShape::size() const { return static_cast<size_t>(count_monomials(n, r)); }

std::string to_string(FormShape const &shape) { return fmt::format("{}|{}", shape.n, shape.r); }

std::vector<MultiIndex> monomials(FormShape const &shape)
{
	std::vector<MultiIndex> out;
	MultiIndex cur;
	if (shape.n >= 1)
		enumerate(shape.n, shape.r, cur, out);
	return out;
}

bool is_valid_index(FormShape const &shape, MultiIndex const &a)
{
	if (static_cast<int>(a.size()) != shape.n)
		return false;
	int sum = 0;
	for (int x : a)
	{
		if (x < 0)
			return false;
		sum += x;
	}
	return sum == shape.r;
}

size_t monomial_index(FormShape const &shape, MultiIndex const &a)
{
	if (!is_valid_index(shape, a))
		throw InputError(fmt::format("multi-index ({}) does not fit shape {}",
		                             fmt::join(a, ","), to_string(shape)));
	long long idx = 0;
	int left = shape.r;
	for (int k = 0; k + 1 < shape.n; ++k)
	{
		for (int e = left; e > a[k]; --e)
			idx += count_monomials(shape.n - k - 1, left - e);
		left -= a[k];
	}
	return static_cast<size_t>(idx);
}

long multinomial(MultiIndex const &a)
{
	long r = 1;
	int total = 0;
	for (int x : a)
		for (int i = 1; i <= x; ++i)
		{
			++total;
			r = r * total / i;
		}
	return r;
}

std::string coordinate_name(MultiIndex const &a)
{
	std::string s = "s";
	bool wide = std::any_of(a.begin(), a.end(), [](int x) { return x > 9; });
	for (size_t i = 0; i < a.size(); ++i)
	{
		if (wide && i > 0)
			s += '_';
		s += std::to_string(a[i]);
	}
	return s;
}

MultiIndex count_indices(int n, std::vector<int> const &idx)
{
	MultiIndex a(n, 0);
	for (int i : idx)
	{
		if (i < 0 || i >= n)
			throw InputError(fmt::format("tensor index {} out of range 0..{}", i, n - 1));
		++a[i];
	}
	return a;
}

template <class S>
SymmetricForm<S>::SymmetricForm(FormShape shape) : shape_(shape), coeffs_(shape.size(), S(0))
{}

template <class S>
SymmetricForm<S>::SymmetricForm(FormShape shape, std::vector<S> coeffs)
    : shape_(shape), coeffs_(std::move(coeffs))
{
	if (coeffs_.size() != shape_.size())
		throw InputError(fmt::format("form {} needs {} coefficients, got {}", to_string(shape_),
		                             shape_.size(), coeffs_.size()));
}

template <class S> S const &SymmetricForm<S>::coeff(MultiIndex const &a) const
{
	return coeffs_[monomial_index(shape_, a)];
}

template <class S> SymmetricForm<S> SymmetricForm<S>::with_coeff(size_t i, S value) const
{
	auto c = coeffs_;
	c.at(i) = std::move(value);
	return SymmetricForm(shape_, std::move(c));
}

template <class S>
SymmetricForm<S> make_form(FormShape shape, std::vector<std::pair<MultiIndex, S>> const &entries)
{
	if (shape.n < 1 || shape.r < 0)
		throw InputError("invalid form shape " + to_string(shape));
	std::vector<S> c(shape.size(), S(0));
	std::vector<bool> seen(shape.size(), false);
	for (auto const &[a, v] : entries)
	{
		auto i = monomial_index(shape, a);
		if (seen[i])
			throw InputError(fmt::format("duplicate multi-index ({})", fmt::join(a, ",")));
		seen[i] = true;
		c[i] = v;
	}
	return SymmetricForm<S>(shape, std::move(c));
}

template <class S> S tensor_component(SymmetricForm<S> const &f, std::vector<int> const &idx)
{
	if (static_cast<int>(idx.size()) != f.shape().r)
		throw InputError("tensor component needs exactly r indices");
	auto a = count_indices(f.shape().n, idx);
	return f.coeff(a) / S(multinomial(a));
}

template <class S> S evaluate(SymmetricForm<S> const &f, std::vector<S> const &x)
{
	if (static_cast<int>(x.size()) != f.shape().n)
		throw InputError("point dimension does not match form");
	auto const ms = monomials(f.shape());
	S total(0);
	for (size_t i = 0; i < ms.size(); ++i)
	{
		if (is_zero(f.coeff(i)))
			continue;
		S term = f.coeff(i);
		for (size_t k = 0; k < x.size(); ++k)
			for (int e = 0; e < ms[i][k]; ++e)
				term *= x[k];
		total += term;
	}
	return total;
}

template <class S> SymmetricForm<S> multiply(SymmetricForm<S> const &f, SymmetricForm<S> const &g)
{
	if (f.shape().n != g.shape().n)
		throw InputError("multiply: variable counts differ");
	FormShape out{f.shape().n, f.shape().r + g.shape().r};
	auto const mf = monomials(f.shape()), mg = monomials(g.shape());
	std::vector<S> c(out.size(), S(0));
	MultiIndex sum(out.n);
	for (size_t i = 0; i < mf.size(); ++i)
	{
		if (is_zero(f.coeff(i)))
			continue;
		for (size_t j = 0; j < mg.size(); ++j)
		{
			if (is_zero(g.coeff(j)))
				continue;
			for (int k = 0; k < out.n; ++k)
				sum[k] = mf[i][k] + mg[j][k];
			c[monomial_index(out, sum)] += f.coeff(i) * g.coeff(j);
		}
	}
	return SymmetricForm<S>(out, std::move(c));
}

template <class S> SymmetricForm<S> gl_transform(SymmetricForm<S> const &f, Matrix<S> const &U)
{
	int const n = f.shape().n, r = f.shape().r;
	if (static_cast<int>(U.size()) != n)
		throw InputError("gl_transform: matrix size does not match form");
	for (auto const &row : U)
		if (static_cast<int>(row.size()) != n)
			throw InputError("gl_transform: matrix is not square");

	// powers[i][k] = (sum_j U_ij x_j)^k
	std::vector<std::vector<SymmetricForm<S>>> powers(n);
	for (int i = 0; i < n; ++i)
	{
		SymmetricForm<S> one(FormShape{n, 0}, std::vector<S>{S(1)});
		std::vector<S> lin(n);
		for (int j = 0; j < n; ++j)
			lin[j] = U[i][j];
		// monomials of degree 1 are e_0, e_1, ... in canonical order
		SymmetricForm<S> L(FormShape{n, 1}, lin);
		powers[i].push_back(one);
		for (int k = 1; k <= r; ++k)
			powers[i].push_back(multiply(powers[i].back(), L));
	}

	auto const ms = monomials(f.shape());
	std::vector<S> c(f.shape().size(), S(0));
	for (size_t m = 0; m < ms.size(); ++m)
	{
		if (is_zero(f.coeff(m)))
			continue;
		SymmetricForm<S> prod = powers[0][ms[m][0]];
		for (int i = 1; i < n; ++i)
			prod = multiply(prod, powers[i][ms[m][i]]);
		for (size_t k = 0; k < c.size(); ++k)
			c[k] += f.coeff(m) * prod.coeff(k);
	}
	return SymmetricForm<S>(f.shape(), std::move(c));
}

template <class S> SymmetricForm<S> pow_form(SymmetricForm<S> const &f, int k)
{
	if (k < 1)
		throw InputError("pow_form: exponent must be >= 1");
	auto out = f;
	for (int i = 1; i < k; ++i)
		out = multiply(out, f);
	return out;
}

template <class S> SymmetricForm<S> scale(SymmetricForm<S> const &f, S const &mu)
{
	auto c = f.coeffs();
	for (auto &x : c)
		x *= mu;
	return SymmetricForm<S>(f.shape(), std::move(c));
}

template <class S> bool is_positive_definite(SymmetricForm<S> const &f)
{
	if (!(f.shape() == FormShape{2, 4}))
		throw InputError("is_positive_definite expects a 2|4 form");
	// canonical order s40, s31, s22, s13, s04 -> S(1,z) coefficients low -> high
	auto const &c = f.coeffs();
	if (!positive(c[0]) || !positive(c[4]))
		return false;
	return count_real_roots(std::vector<S>(c.begin(), c.end())) == 0;
}

FormD to_double(FormQ const &f)
{
	std::vector<double> c;
	c.reserve(f.coeffs().size());
	for (auto const &q : f.coeffs())
		c.push_back(q.get_d());
	return FormD(f.shape(), std::move(c));
}

double coefficient_scale(FormD const &f)
{
	double m = 0;
	for (double x : f.coeffs())
		m = std::max(m, std::abs(x));
	return m;
}

long long invariant_count(int n, int r)
{
	if (n < 2 || r < 2)
		throw InputError("invariant_count needs n >= 2 and r >= 2");
	if (r == 2)
		return 1;
	return binomial(n + r - 1, r) - static_cast<long long>(n) * n + 1;
}

template <> FormQ random_form<Rational>(FormShape shape, uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
	std::vector<Rational> c(shape.size());
	for (auto &x : c)
	{
		x = Rational(num(rng), den(rng));
		x.canonicalize();
	}
	return FormQ(shape, std::move(c));
}

template <> FormD random_form<double>(FormShape shape, uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> u(-1.0, 1.0);
	std::vector<double> c(shape.size());
	for (auto &x : c)
		x = u(rng);
	return FormD(shape, std::move(c));
}

FormQ random_posdef_quartic(uint64_t seed, int max_attempts)
{
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> pos(1, 12), mid(-12, 12), den(1, 3);
	auto draw = [&](std::uniform_int_distribution<int> &d) {
		Rational q(d(rng), den(rng));
		q.canonicalize();
		return q;
	};
	for (int attempt = 0; attempt < max_attempts; ++attempt)
	{
		std::vector<Rational> c(5);
		c[0] = draw(pos);
		c[1] = draw(mid);
		c[2] = draw(mid);
		c[3] = draw(mid);
		c[4] = draw(pos);
		FormQ f(FormShape{2, 4}, std::move(c));
		if (is_positive_definite(f))
			return f;
	}
	throw DomainError(fmt::format("no positive definite quartic after {} attempts", max_attempts));
}

Matrix<Rational> random_unimodular(int n, uint64_t seed, int factors)
{
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> pick(0, n - 1), num(-5, 5), den(1, 3);
	Matrix<Rational> U(n, std::vector<Rational>(n, Rational(0)));
	for (int i = 0; i < n; ++i)
		U[i][i] = 1;
	for (int f = 0; f < factors; ++f)
	{
		int i = pick(rng), j = pick(rng);
		if (i == j)
			j = (i + 1) % n;
		Rational c(num(rng), den(rng));
		c.canonicalize();
		// U <- U * (1 + c E_ij): column j += c * column i
		for (int k = 0; k < n; ++k)
			U[k][j] += c * U[k][i];
	}
	return U;
}

#define INSTANTIATE(S)                                                                             \
	template class SymmetricForm<S>;                                                               \
	template SymmetricForm<S> make_form(FormShape, std::vector<std::pair<MultiIndex, S>> const &); \
	template S tensor_component(SymmetricForm<S> const &, std::vector<int> const &);               \
	template S evaluate(SymmetricForm<S> const &, std::vector<S> const &);                         \
	template SymmetricForm<S> gl_transform(SymmetricForm<S> const &, Matrix<S> const &);           \
	template SymmetricForm<S> multiply(SymmetricForm<S> const &, SymmetricForm<S> const &);        \
	template SymmetricForm<S> pow_form(SymmetricForm<S> const &, int);                             \
	template SymmetricForm<S> scale(SymmetricForm<S> const &, S const &);                          \
	template bool is_positive_definite(SymmetricForm<S> const &);

INSTANTIATE(Rational)
INSTANTIATE(double)

} // namespace intdisc
