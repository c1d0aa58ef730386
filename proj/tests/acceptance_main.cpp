// Acceptance runner: one line per criterion; exit status 0 only if all pass.
#include "intdisc/acceptance.h"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
	CLI::App app{"acceptance criteria"};
	std::vector<int> ids;
	intdisc::AcceptanceOptions opts;
	app.add_option("--criterion", ids, "criterion number (repeatable)")->check(CLI::Range(1, intdisc::acceptance_criterion_count));
	app.add_option("--seed", opts.seed, "seed for randomized criteria");
	app.add_option("--forms", opts.forms_per_case, "random forms per case")->check(CLI::Range(1, 1000));
	CLI11_PARSE(app, argc, argv);

	bool all = true;
	for (auto const &r : intdisc::run_acceptance(opts, ids))
	{
		std::cout << intdisc::format_result(r) << std::endl;
		all = all && r.pass;
	}
	return all ? 0 : 1;
}
