#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace intdisc {

struct AcceptanceOptions
{
	uint64_t seed = 1729;
	int forms_per_case = 10;
};

struct CriterionResult
{
	int id;
	std::string title;
	bool pass;
	std::string detail;
	double seconds = 0;
};

inline constexpr int acceptance_criterion_count = 12;

CriterionResult run_criterion(int id, AcceptanceOptions const &opts = {});
// all criteria when ids is empty
std::vector<CriterionResult> run_acceptance(AcceptanceOptions const &opts = {}, std::vector<int> const &ids = {});
// "criterion  3  PASS  <title>: <detail>"
std::string format_result(CriterionResult const &r);

} // namespace intdisc
