#include "intdisc/tensornet.h"

#include <algorithm>
#include <map>
#include <numeric>

#include <fmt/format.h>

namespace intdisc {

int ContractionDiagram::add_node(NodeKind kind)
{
	int valence = (kind == NodeKind::eps || kind == NodeKind::eps_star) ? n : r;
	nodes.push_back({kind, valence});
	return static_cast<int>(nodes.size()) - 1;
}

void ContractionDiagram::add_eps(std::vector<SlotRef> const &slots)
{
	if (static_cast<int>(slots.size()) != n)
		throw InputError("eps vertex needs exactly n legs");
	int e = add_node(NodeKind::eps);
	for (int k = 0; k < n; ++k)
		edges.push_back({slots[k], SlotRef{e, k}});
}

int ContractionDiagram::form_node_count() const
{
	return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
	                                      [](Node const &x) { return x.kind == NodeKind::form; }));
}

void ContractionDiagram::validate() const
{
	std::vector<std::vector<int>> used(nodes.size());
	for (size_t i = 0; i < nodes.size(); ++i)
	{
		auto const &nd = nodes[i];
		int expect = (nd.kind == NodeKind::eps || nd.kind == NodeKind::eps_star) ? n : r;
		if (nd.valence != expect)
			throw InputError(fmt::format("diagram {}: node {} has valence {}, expected {}", name, i, nd.valence, expect));
		used[i].assign(nd.valence, 0);
	}
	auto mark = [&](SlotRef s) {
		if (s.node < 0 || s.node >= static_cast<int>(nodes.size()) || s.slot < 0 ||
		    s.slot >= nodes[s.node].valence)
			throw InputError(fmt::format("diagram {}: slot ({},{}) out of range", name, s.node, s.slot));
		++used[s.node][s.slot];
	};
	for (auto const &e : edges)
	{
		if (e.a.node == e.b.node)
			throw InputError(fmt::format("diagram {}: self-contraction on node {}", name, e.a.node));
		mark(e.a);
		mark(e.b);
	}
	for (auto const &s : free_slots)
		mark(s);
	for (size_t i = 0; i < nodes.size(); ++i)
		for (int k = 0; k < nodes[i].valence; ++k)
			if (used[i][k] != 1)
				throw InputError(fmt::format("diagram {}: slot ({},{}) used {} times", name, i, k, used[i][k]));
}

std::vector<std::string> builtin_diagram_names()
{
	return {"I4_23", "I2_24", "I3_24", "I4_25", "P_25", "I4_33", "I6_33", "det_2", "det_3"};
}

namespace {

ContractionDiagram binary(std::string name, int r, int forms, std::vector<std::pair<SlotRef, SlotRef>> const &pairs)
{
	ContractionDiagram d;
	d.name = std::move(name);
	d.n = 2;
	d.r = r;
	for (int i = 0; i < forms; ++i)
		d.add_node(NodeKind::form);
	for (auto const &[a, b] : pairs)
		d.add_eps({a, b});
	return d;
}

} // namespace

// Index pairings follow the printed contractions; the normalization makes the
// expansion agree term by term with the printed polynomial.
ContractionDiagram builtin_diagram(std::string const &name)
{
	ContractionDiagram d;
	if (name == "I4_23")
	{
		int const i = 0, j = 1, k = 2, l = 3;
		d = binary(name, 3, 4,
		           {{{i, 0}, {j, 0}}, {{i, 1}, {j, 1}}, {{k, 0}, {l, 0}}, {{k, 1}, {l, 1}}, {{i, 2}, {k, 2}},
		            {{j, 2}, {l, 2}}});
		d.normalization = -1;
	}
	else if (name == "I2_24")
	{
		d = binary(name, 4, 2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{0, 3}, {1, 3}}});
	}
	else if (name == "I3_24")
	{
		d = binary(name, 4, 3,
		           {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {2, 0}}, {{0, 3}, {2, 1}}, {{1, 2}, {2, 2}},
		            {{1, 3}, {2, 3}}});
	}
	else if (name == "I4_25")
	{
		int const i = 0, j = 1, k = 2, l = 3;
		d = binary(name, 5, 4,
		           {{{i, 0}, {j, 0}}, {{i, 1}, {j, 1}}, {{i, 2}, {j, 2}}, {{i, 3}, {k, 3}}, {{i, 4}, {k, 4}},
		            {{j, 3}, {l, 3}}, {{j, 4}, {l, 4}}, {{k, 0}, {l, 0}}, {{k, 1}, {l, 1}}, {{k, 2}, {l, 2}}});
		d.normalization = -1;
	}
	else if (name == "P_25")
	{
		int const i = 0, j = 1, k = 2, l = 3, m = 4, s = 5;
		d = binary(name, 5, 6,
		           {{{i, 1}, {j, 1}}, {{i, 2}, {j, 2}}, {{i, 3}, {k, 3}}, {{i, 4}, {k, 4}}, {{k, 0}, {l, 0}},
		            {{k, 1}, {l, 1}}, {{j, 3}, {m, 3}}, {{j, 4}, {m, 4}}, {{m, 0}, {s, 0}}, {{m, 1}, {s, 1}},
		            {{l, 2}, {s, 2}}, {{l, 3}, {s, 3}}, {{j, 0}, {k, 2}}, {{l, 4}, {m, 2}}});
		d.free_slots = {{i, 0}, {s, 4}};
		d.normalization = -1;
	}
	else if (name == "I4_33" || name == "I6_33")
	{
		d.name = name;
		d.n = 3;
		d.r = 3;
		if (name == "I4_33")
		{
			int const i = 0, j = 1, k = 2, l = 3;
			for (int q = 0; q < 4; ++q)
				d.add_node(NodeKind::form);
			d.add_eps({{i, 0}, {j, 0}, {k, 0}});
			d.add_eps({{i, 1}, {j, 1}, {l, 1}});
			d.add_eps({{i, 2}, {k, 2}, {l, 2}});
			d.add_eps({{l, 0}, {k, 1}, {j, 2}});
			d.normalization = Rational(-1, 4);
		}
		else
		{
			int const i = 0, j = 1, k = 2, l = 3, m = 4, s = 5;
			for (int q = 0; q < 6; ++q)
				d.add_node(NodeKind::form);
			d.add_eps({{i, 0}, {k, 0}, {l, 0}});
			d.add_eps({{i, 1}, {j, 1}, {s, 1}});
			d.add_eps({{j, 0}, {k, 1}, {m, 0}});
			d.add_eps({{l, 1}, {m, 1}, {k, 2}});
			d.add_eps({{m, 2}, {s, 2}, {j, 2}});
			d.add_eps({{l, 2}, {i, 2}, {s, 0}});
			d.normalization = -1;
		}
	}
	else if (name == "det_2")
	{
		d = binary(name, 2, 2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}});
		d.normalization = Rational(1, 2);
	}
	else if (name == "det_3")
	{
		d.name = name;
		d.n = 3;
		d.r = 2;
		for (int q = 0; q < 3; ++q)
			d.add_node(NodeKind::form);
		d.add_eps({{0, 0}, {1, 0}, {2, 0}});
		d.add_eps({{0, 1}, {1, 1}, {2, 1}});
		d.normalization = Rational(1, 6);
	}
	else
		throw InputError("unknown diagram '" + name + "'");
	d.validate();
	return d;
}

template <class S> S const &Tensor<S>::at(std::vector<int> const &idx, int n) const
{
	if (idx.size() != labels.size())
		throw InputError("tensor index rank mismatch");
	size_t off = 0;
	for (int i : idx)
		off = off * n + i;
	return data.at(off);
}

int ContractionPlan::max_rank() const
{
	int m = 0;
	for (auto const &mg : merges)
		m = std::max(m, mg.rank);
	return m;
}

long long ContractionPlan::max_entries(int n) const
{
	long long e = 1;
	for (int i = 0; i < max_rank(); ++i)
		e *= n;
	return e;
}

namespace {

// label of every (node, slot); edges first, then free slots
std::vector<std::vector<int>> slot_labels(ContractionDiagram const &d)
{
	std::vector<std::vector<int>> lab(d.nodes.size());
	for (size_t i = 0; i < d.nodes.size(); ++i)
		lab[i].assign(d.nodes[i].valence, -1);
	int next = 0;
	for (auto const &e : d.edges)
	{
		lab[e.a.node][e.a.slot] = next;
		lab[e.b.node][e.b.slot] = next;
		++next;
	}
	for (auto const &s : d.free_slots)
		lab[s.node][s.slot] = next++;
	return lab;
}

std::vector<int> merged_labels(std::vector<int> const &a, std::vector<int> const &b, int &shared)
{
	std::vector<int> out;
	shared = 0;
	for (int x : a)
		if (std::find(b.begin(), b.end(), x) == b.end())
			out.push_back(x);
		else
			++shared;
	for (int x : b)
		if (std::find(a.begin(), a.end(), x) == a.end())
			out.push_back(x);
	return out;
}

} // namespace

ContractionPlan plan_order(ContractionDiagram const &d)
{
	d.validate();
	auto lab = slot_labels(d);
	ContractionPlan plan;
	plan.initial_tensors = static_cast<int>(d.nodes.size());
	int const first_free = static_cast<int>(d.edges.size());
	for (size_t i = 0; i < d.free_slots.size(); ++i)
		plan.output_labels.push_back(first_free + static_cast<int>(i));

	std::map<int, std::vector<int>> live;
	for (size_t i = 0; i < lab.size(); ++i)
		live[static_cast<int>(i)] = lab[i];
	int next_id = static_cast<int>(lab.size());

	while (live.size() > 1)
	{
		// key: (result rank, -shared, left id, right id); connected pairs preferred
		bool found = false, found_connected = false;
		std::tuple<int, int, int, int> best{};
		std::vector<int> best_labels;
		for (auto a = live.begin(); a != live.end(); ++a)
			for (auto b = std::next(a); b != live.end(); ++b)
			{
				int shared = 0;
				auto res = merged_labels(a->second, b->second, shared);
				bool connected = shared > 0;
				std::tuple<int, int, int, int> key{static_cast<int>(res.size()), -shared, a->first, b->first};
				if (!found || (connected && !found_connected) || (connected == found_connected && key < best))
				{
					found = true;
					found_connected = connected;
					best = key;
					best_labels = std::move(res);
				}
			}
		int l = std::get<2>(best), r = std::get<3>(best);
		plan.merges.push_back({l, r, next_id, best_labels, static_cast<int>(best_labels.size())});
		live.erase(l);
		live.erase(r);
		live[next_id++] = best_labels;
	}
	return plan;
}

namespace {

template <class S> Tensor<S> contract_pair(Tensor<S> const &A, Tensor<S> const &B, std::vector<int> const &out_labels, int n)
{
	std::vector<int> all = out_labels;
	for (int x : A.labels)
		if (std::find(out_labels.begin(), out_labels.end(), x) == out_labels.end())
			all.push_back(x);
	size_t const L = all.size();
	auto strides = [&](std::vector<int> const &labels) {
		std::vector<size_t> st(L, 0);
		size_t s = 1;
		for (size_t k = labels.size(); k-- > 0;)
		{
			auto pos = std::find(all.begin(), all.end(), labels[k]) - all.begin();
			st[pos] = s;
			s *= n;
		}
		return st;
	};
	auto sa = strides(A.labels), sb = strides(B.labels), sr = strides(out_labels);

	Tensor<S> R;
	R.labels = out_labels;
	size_t rsize = 1;
	for (size_t i = 0; i < out_labels.size(); ++i)
		rsize *= n;
	S const zero = A.data.front() - A.data.front();
	R.data.assign(rsize, zero);

	std::vector<int> idx(L, 0);
	size_t total = 1;
	for (size_t i = 0; i < L; ++i)
		total *= n;
	for (size_t it = 0; it < total; ++it)
	{
		size_t oa = 0, ob = 0, orr = 0;
		for (size_t k = 0; k < L; ++k)
		{
			oa += sa[k] * idx[k];
			ob += sb[k] * idx[k];
			orr += sr[k] * idx[k];
		}
		S const &x = A.data[oa];
		if (!is_zero(x))
		{
			S const &y = B.data[ob];
			if (!is_zero(y))
				R.data[orr] += x * y;
		}
		for (size_t k = L; k-- > 0;)
		{
			if (++idx[k] < n)
				break;
			idx[k] = 0;
		}
	}
	return R;
}

template <class S> Tensor<S> eps_tensor(int n, std::vector<int> labels, S const &one)
{
	Tensor<S> t;
	t.labels = std::move(labels);
	size_t size = 1;
	for (int i = 0; i < n; ++i)
		size *= n;
	S const zero = one - one;
	t.data.assign(size, zero);
	std::vector<int> p(n);
	std::iota(p.begin(), p.end(), 0);
	do
	{
		int sign = 1;
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (p[i] > p[j])
					sign = -sign;
		size_t off = 0;
		for (int i : p)
			off = off * n + i;
		t.data[off] = sign > 0 ? one : zero - one;
	} while (std::next_permutation(p.begin(), p.end()));
	return t;
}

// entries: tensor component for each r-tuple
template <class S, class Component>
Tensor<S> form_tensor(int n, int r, std::vector<int> labels, Component comp)
{
	Tensor<S> t;
	t.labels = std::move(labels);
	size_t size = 1;
	for (int i = 0; i < r; ++i)
		size *= n;
	t.data.reserve(size);
	std::vector<int> idx(r, 0);
	for (size_t it = 0; it < size; ++it)
	{
		t.data.push_back(comp(idx));
		for (int k = r; k-- > 0;)
		{
			if (++idx[k] < n)
				break;
			idx[k] = 0;
		}
	}
	return t;
}

template <class S> Tensor<S> permute(Tensor<S> const &t, std::vector<int> const &order, int n)
{
	if (t.labels == order)
		return t;
	Tensor<S> out;
	out.labels = order;
	out.data.resize(t.data.size(), t.data.front());
	size_t const L = order.size();
	std::vector<size_t> src_stride(L);
	for (size_t k = 0; k < L; ++k)
	{
		auto pos = std::find(t.labels.begin(), t.labels.end(), order[k]) - t.labels.begin();
		size_t s = 1;
		for (size_t q = pos + 1; q < t.labels.size(); ++q)
			s *= n;
		src_stride[k] = s;
	}
	std::vector<int> idx(L, 0);
	for (size_t it = 0; it < out.data.size(); ++it)
	{
		size_t src = 0;
		for (size_t k = 0; k < L; ++k)
			src += src_stride[k] * idx[k];
		out.data[it] = t.data[src];
		for (size_t k = L; k-- > 0;)
		{
			if (++idx[k] < n)
				break;
			idx[k] = 0;
		}
	}
	return out;
}

template <class S, class Component>
Tensor<S> run_plan(ContractionDiagram const &d, S const &one, Component comp)
{
	auto plan = plan_order(d);
	auto lab = slot_labels(d);
	std::map<int, Tensor<S>> live;
	for (size_t i = 0; i < d.nodes.size(); ++i)
	{
		switch (d.nodes[i].kind)
		{
		case NodeKind::form:
			live[static_cast<int>(i)] = form_tensor<S>(d.n, d.r, lab[i], comp);
			break;
		case NodeKind::eps:
		case NodeKind::eps_star:
			live[static_cast<int>(i)] = eps_tensor<S>(d.n, lab[i], one);
			break;
		case NodeKind::deriv:
			throw DomainError("diagram " + d.name + ": derivative vertices cannot be bound to a form");
		}
	}
	for (auto const &m : plan.merges)
	{
		auto R = contract_pair(live.at(m.left), live.at(m.right), m.result_labels, d.n);
		live.erase(m.left);
		live.erase(m.right);
		live[m.result] = std::move(R);
	}
	auto result = permute(live.begin()->second, plan.output_labels, d.n);
	return result;
}

} // namespace

template <class S> Tensor<S> contract_numeric(ContractionDiagram const &d, SymmetricForm<S> const &f)
{
	if (f.shape().n != d.n || f.shape().r != d.r)
		throw InputError(fmt::format("diagram {} expects a {}|{} form, got {}", d.name, d.n, d.r, to_string(f.shape())));
	auto t = run_plan<S>(d, S(1), [&](std::vector<int> const &idx) { return tensor_component(f, idx); });
	S const norm = from_rational<S>(d.normalization);
	for (auto &x : t.data)
		x *= norm;
	return t;
}

std::vector<std::string> coordinate_names(FormShape shape)
{
	std::vector<std::string> names;
	for (auto const &a : monomials(shape))
		names.push_back(coordinate_name(a));
	return names;
}

Tensor<SparsePoly> contract_symbolic(ContractionDiagram const &d, FormShape shape)
{
	if (shape.n != d.n || shape.r != d.r)
		throw InputError(fmt::format("diagram {} expects a {}|{} form, got {}", d.name, d.n, d.r, to_string(shape)));
	auto vars = coordinate_names(shape);
	std::vector<SparsePoly> comps;
	for (auto const &a : monomials(shape))
		comps.push_back(SparsePoly::variable(vars, coordinate_name(a)) * Rational(1, multinomial(a)));
	auto one = SparsePoly::constant(vars, 1);
	auto t = run_plan<SparsePoly>(d, one, [&](std::vector<int> const &idx) {
		return comps[monomial_index(shape, count_indices(shape.n, idx))];
	});
	for (auto &x : t.data)
		x = (x * d.normalization).with_vars(vars);
	return t;
}

template struct Tensor<Rational>;
template struct Tensor<double>;
template struct Tensor<SparsePoly>;
template Tensor<Rational> contract_numeric(ContractionDiagram const &, FormQ const &);
template Tensor<double> contract_numeric(ContractionDiagram const &, FormD const &);

} // namespace intdisc
