#pragma once

#include "intdisc/forms.h"
#include "intdisc/polyalg.h"

#include <string>
#include <vector>

namespace intdisc {

// Published closed-form expansions, written in tensor components S_{i...}
// with 1-based indices, e.g. "2 S1111 S2222 - 8 S1112 S1222 + 6 S1122^2".
// Names: I4_23, I2_24, I3_24, D24, I4_25, I4_33, I6_33.
std::vector<std::string> printed_names();
std::string const &printed_text(std::string const &name);
FormShape printed_shape(std::string const &name);

// expansion converted to monomial coordinates s_a
SparsePoly printed_polynomial(std::string const &name);

// tensor-component expression -> polynomial in s-coordinates of the shape
SparsePoly tensor_expression(std::string const &text, FormShape shape);

struct PrintedTable
{
	std::vector<std::string> invariants;
	std::vector<std::string> linear;                 // O I_k
	std::vector<std::vector<std::string>> quadratic; // O (I_k I_m), symmetric
};

// "O0_25", "O4_25", "O4_33"
PrintedTable const &printed_table(std::string const &name);

} // namespace intdisc
