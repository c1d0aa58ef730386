#pragma once

#include "intdisc/forms.h"
#include "intdisc/polyalg.h"

#include <string>
#include <vector>

namespace intdisc {

enum class NodeKind { form, deriv, eps, eps_star };

struct Node
{
	NodeKind kind;
	int valence;
};

struct SlotRef
{
	int node;
	int slot;
	bool operator==(SlotRef const &) const = default;
};

struct Edge
{
	SlotRef a, b;
};

struct ContractionDiagram
{
	std::string name;
	int n = 2;
	int r = 2;
	std::vector<Node> nodes;
	std::vector<Edge> edges;
	std::vector<SlotRef> free_slots;
	// overall rational factor applied to the contraction value
	Rational normalization = 1;

	int add_node(NodeKind kind);
	// new eps node joined to the given form slots, in order
	void add_eps(std::vector<SlotRef> const &slots);
	void validate() const;
	int form_node_count() const;
};

std::vector<std::string> builtin_diagram_names();
ContractionDiagram builtin_diagram(std::string const &name);

// dense tensor with all dimensions n; last label varies fastest
template <class S> struct Tensor
{
	std::vector<int> labels;
	std::vector<S> data;

	S const &scalar() const { return data.at(0); }
	S const &at(std::vector<int> const &idx, int n) const;
};

struct Merge
{
	int left, right, result;
	std::vector<int> result_labels;
	int rank;
};

struct ContractionPlan
{
	int initial_tensors = 0;
	std::vector<Merge> merges;
	std::vector<int> output_labels; // labels of the free slots, in order

	int max_rank() const;
	long long max_entries(int n) const;
};

ContractionPlan plan_order(ContractionDiagram const &d);

template <class S>
Tensor<S> contract_numeric(ContractionDiagram const &d, SymmetricForm<S> const &f);
Tensor<SparsePoly> contract_symbolic(ContractionDiagram const &d, FormShape shape);

// symbolic coordinates s_a of a shape, in canonical order
std::vector<std::string> coordinate_names(FormShape shape);

} // namespace intdisc
