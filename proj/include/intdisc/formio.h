#pragma once

#include "intdisc/forms.h"
#include "intdisc/invariants.h"

#include <string>

namespace intdisc {

// "form n=<n> r=<r>" followed by "<a1> ... <an> = <coeff>" lines; '#' comments
FormQ parse_form(std::string const &text);
std::string format_form(FormQ const &f);
FormQ read_form_file(std::string const &path);

// homogeneous polynomial in x, y, z, w (or x1..xn), e.g. "x^3 + y^3 - 3 x y z"
FormQ form_from_expression(std::string const &text, int n);

std::string format_calibration(CalibrationRecord const &rec);
CalibrationRecord parse_calibration(std::string const &text);

struct FitFile
{
	double c1 = 0;
	double c2 = 0;
	double rms = 0;
};
std::string format_fit(FitFile const &fit);
FitFile parse_fit(std::string const &text);

std::string read_text_file(std::string const &path);
void write_text_file(std::string const &path, std::string const &text);

} // namespace intdisc
