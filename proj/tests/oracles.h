#pragma once

// Reference computations that share no code with the library beyond the form
// container: brute-force index sums, classical resultants, frozen values
// computed offline with mpmath at 40 digits.

#include "intdisc/forms.h"
#include "intdisc/tensornet.h"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline Q determinant(std::vector<std::vector<Q>> m)
{
	size_t n = m.size();
	Q det = 1;
	for (size_t c = 0; c < n; ++c)
	{
		size_t p = c;
		while (p < n && m[p][c] == 0)
			++p;
		if (p == n)
			return 0;
		if (p != c)
		{
			std::swap(m[p], m[c]);
			det = -det;
		}
		det *= m[c][c];
		for (size_t r = c + 1; r < n; ++r)
		{
			Q f = m[r][c] / m[c][c];
			for (size_t k = c; k < n; ++k)
				m[r][k] -= f * m[c][k];
		}
	}
	return det;
}

// Sylvester resultant of p (degree dp) and q (degree dq), coefficients from the
// leading one down
inline Q resultant(std::vector<Q> const &p, std::vector<Q> const &q)
{
	size_t dp = p.size() - 1, dq = q.size() - 1, N = dp + dq;
	std::vector<std::vector<Q>> m(N, std::vector<Q>(N, 0));
	for (size_t r = 0; r < dq; ++r)
		for (size_t k = 0; k <= dp; ++k)
			m[r][r + k] = p[k];
	for (size_t r = 0; r < dp; ++r)
		for (size_t k = 0; k <= dq; ++k)
			m[dq + r][r + k] = q[k];
	return determinant(m);
}

// classical discriminant (up to a constant) of sum_k c_k x^(r-k) y^k with c_0 != 0
inline Q binary_discriminant(std::vector<Q> const &c)
{
	size_t r = c.size() - 1;
	std::vector<Q> d;
	for (size_t k = 0; k < r; ++k)
		d.push_back(c[k] * Q(static_cast<long>(r - k)));
	return resultant(c, d) / c[0];
}

// coefficient list c_k of x^(r-k) y^k from a binary form
inline std::vector<Q> binary_coeffs(intdisc::FormQ const &f)
{
	int r = f.shape().r;
	std::vector<Q> c(r + 1);
	for (int k = 0; k <= r; ++k)
		c[k] = f.coeff(intdisc::MultiIndex{r - k, k});
	return c;
}

inline int levi_civita(std::vector<int> const &idx)
{
	int sign = 1;
	auto v = idx;
	for (size_t i = 0; i < v.size(); ++i)
		for (size_t j = i + 1; j < v.size(); ++j)
		{
			if (v[i] == v[j])
				return 0;
			if (v[i] > v[j])
				sign = -sign;
		}
	return sign;
}

// sum over every assignment of edge indices, product of node values; only form
// and eps nodes, no free slots
inline double brute_contract(intdisc::ContractionDiagram const &d, intdisc::FormD const &f)
{
	using intdisc::NodeKind;
	int n = d.n;
	size_t E = d.edges.size();
	std::vector<std::vector<int>> slot_edge(d.nodes.size());
	for (size_t i = 0; i < d.nodes.size(); ++i)
	{
		if (d.nodes[i].kind != NodeKind::form && d.nodes[i].kind != NodeKind::eps)
			throw std::invalid_argument("brute_contract handles form and eps nodes only");
		slot_edge[i].assign(d.nodes[i].valence, -1);
	}
	for (size_t e = 0; e < E; ++e)
	{
		slot_edge[d.edges[e].a.node][d.edges[e].a.slot] = static_cast<int>(e);
		slot_edge[d.edges[e].b.node][d.edges[e].b.slot] = static_cast<int>(e);
	}
	std::vector<int> assign(E, 0);
	double total = 0;
	std::vector<int> idx;
	while (true)
	{
		double prod = 1;
		for (size_t i = 0; i < d.nodes.size() && prod != 0; ++i)
		{
			idx.clear();
			for (int e : slot_edge[i])
				idx.push_back(assign[e]);
			prod *= d.nodes[i].kind == NodeKind::form ? intdisc::tensor_component(f, idx) : levi_civita(idx);
		}
		total += prod;
		size_t k = 0;
		while (k < E && ++assign[k] == n)
			assign[k++] = 0;
		if (k == E)
			break;
	}
	return total * d.normalization.get_d();
}

struct Hyp2F1Ref
{
	double a, b, c, t, value; // real part for t > 1
};

// mpmath hyp2f1 at 40 digits
inline std::vector<Hyp2F1Ref> const &hyp2f1_refs()
{
	static std::vector<Hyp2F1Ref> const refs{
	    {1.0 / 12, 5.0 / 12, 0.5, 0.3, 1.0248667006431613728},
	    {1.0 / 12, 5.0 / 12, 0.5, 0.9, 1.1630239982426281592},
	    {1.0 / 12, 5.0 / 12, 0.5, -7.0, 0.86001494088143312199},
	    {1.0 / 12, 5.0 / 12, 0.5, 2.5, 0.96289280510894924243},
	    {7.0 / 12, 11.0 / 12, 1.5, 0.75, 1.5614603382199815113},
	    {7.0 / 12, 11.0 / 12, 1.5, -0.8, 0.80392040712383964306},
	    {7.0 / 12, 11.0 / 12, 1.5, 30.0, -0.0095306618769408871667},
	    {0.25, 0.75, 1.3, 0.999, 1.5968759198095223172},
	    {-3, 0.5, 1.5, 4.0, -2.5428571428571428571},
	    {0.3, 0.7, 2.0, 0.8, 1.1309324667083271819},
	    {1, 1, 2, 0.6, 1.527151219790258406},
	    {1.5, -0.4, 0.7, -40.0, 6.483938331351341303},
	    {0.5, 0.5, 1.0, 0.99, 2.3527158167797423215},
	};
	return refs;
}

struct G25Ref
{
	double u, v, g;
};

// direct double sum of the defining series with mpmath, 80 anti-diagonals
inline std::vector<G25Ref> const &g25_refs()
{
	static std::vector<G25Ref> const refs{
	    {0, 0, 81.966581582149502764},
	    {0.002, 0.001, 82.401752867339737738},
	    {-0.004, -0.002, 81.246387990892793564},
	    {0.005, 0, 83.041246637108745201},
	};
	return refs;
}

// expected invariant counts, rows r = 2..6, columns n = 2..7
inline constexpr std::array<std::array<long long, 6>, 5> invariant_counts{{{1, 1, 1, 1, 1, 1},
                                                                            {1, 2, 5, 11, 21, 36},
                                                                            {2, 7, 20, 46, 91, 162},
                                                                            {3, 13, 41, 102, 217, 414},
                                                                            {4, 20, 69, 186, 427, 876}}};

} // namespace oracle
