#include "cli.h"

#include "intdisc/acceptance.h"
#include "intdisc/formio.h"
#include "intdisc/forms.h"
#include "intdisc/invariants.h"
#include "intdisc/jnr.h"
#include "intdisc/oracle.h"
#include "intdisc/polyalg.h"
#include "intdisc/printed.h"
#include "intdisc/specfun.h"
#include "intdisc/tensornet.h"
#include "intdisc/wardops.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

namespace intdisc::cli {

namespace {

using Json = nlohmann::ordered_json;

// JSON has no infinities; non-finite numbers travel as strings in both modes
Json num(double x)
{
	if (std::isfinite(x))
		return x;
	return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

// Collects one ordered document; plain mode flattens it to "key = value" lines,
// followed by raw lines (polynomial dumps, form text)
class Output
{
	Json doc_ = Json::object();
	std::vector<std::string> raw_;

	static void flatten(std::ostream &os, std::string const &prefix, Json const &v)
	{
		if (v.is_object())
		{
			for (auto it = v.begin(); it != v.end(); ++it)
				flatten(os, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
			return;
		}
		if (v.is_array())
		{
			for (size_t i = 0; i < v.size(); ++i)
				flatten(os, fmt::format("{}[{}]", prefix, i), v[i]);
			return;
		}
		os << prefix << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
	}

  public:
	Json &operator[](std::string const &key) { return doc_[key]; }
	void raw(std::string const &key, std::string const &text)
	{
		std::istringstream in(text);
		std::string line;
		Json lines = Json::array();
		while (std::getline(in, line))
		{
			raw_.push_back(line);
			lines.push_back(line);
		}
		doc_[key] = lines;
	}
	Json const &doc() const { return doc_; }
	void print(std::ostream &os, bool json, std::vector<std::string> const &raw_keys = {}) const
	{
		if (json)
		{
			os << doc_.dump(2) << "\n";
			return;
		}
		for (auto it = doc_.begin(); it != doc_.end(); ++it)
			if (std::find(raw_keys.begin(), raw_keys.end(), it.key()) == raw_keys.end())
				flatten(os, it.key(), it.value());
		for (auto const &l : raw_)
			os << l << "\n";
	}
};

FormShape parse_shape(std::string const &s)
{
	auto bar = s.find('|');
	try
	{
		if (bar != s.npos)
		{
			size_t used = 0;
			int n = std::stoi(s.substr(0, bar), &used);
			if (used == bar)
			{
				auto rest = s.substr(bar + 1);
				int r = std::stoi(rest, &used);
				if (used == rest.size() && n >= 1 && r >= 1)
					return {n, r};
			}
		}
	}
	catch (std::exception const &)
	{
	}
	throw InputError("shape must look like '2|4', got '" + s + "'");
}

// runs fn(i) for i < n on up to jobs threads; results land by index, so the
// output order never depends on scheduling. The lowest failing index rethrows.
void parallel_for(size_t n, int jobs, std::function<void(size_t)> const &fn)
{
	if (jobs <= 1 || n <= 1)
	{
		for (size_t i = 0; i < n; ++i)
			fn(i);
		return;
	}
	std::atomic<size_t> next{0};
	std::vector<std::exception_ptr> errors(n);
	std::vector<std::thread> pool;
	for (int t = 0; t < std::min<int>(jobs, static_cast<int>(n)); ++t)
		pool.emplace_back([&] {
			for (size_t i; (i = next++) < n;)
			{
				try
				{
					fn(i);
				}
				catch (...)
				{
					errors[i] = std::current_exception();
				}
			}
		});
	for (auto &th : pool)
		th.join();
	for (auto const &e : errors)
		if (e)
			std::rethrow_exception(e);
}

struct CalibrationOption
{
	std::string path;
	CalibrationRecord record;
	CalibrationRecord const *get()
	{
		if (path.empty())
			return nullptr;
		record = parse_calibration(read_text_file(path));
		return &record;
	}
};

Json invariants_json(InvariantSet<Rational> const &inv)
{
	Json j = Json::object();
	for (size_t i = 0; i < inv.names.size(); ++i)
		j[inv.names[i]] = to_string(inv.values[i]);
	return j;
}

std::string join_names(std::vector<std::string> const &v)
{
	std::string s;
	for (auto const &x : v)
		s += (s.empty() ? "" : ", ") + x;
	return s;
}

// --- subcommands ---------------------------------------------------------

struct Common
{
	bool json = false;
};

int cmd_invariants(std::ostream &out, Common const &c, std::string const &file, CalibrationOption &cal)
{
	auto f = read_form_file(file);
	auto inv = compute_invariants(f, cal.get());
	Output o;
	o["shape"] = to_string(f.shape());
	o["invariants"] = invariants_json(inv);
	auto D = discriminant(inv);
	o["discriminant_expression"] = discriminant_expression(f.shape());
	o["discriminant"] = to_string(D);
	o["singular"] = is_zero(D);
	o.print(out, c.json);
	return ok;
}

int cmd_disc(std::ostream &out, Common const &c, std::string const &file, CalibrationOption &cal)
{
	auto f = read_form_file(file);
	auto const *calib = cal.get();
	auto D = discriminant(compute_invariants(f, calib));
	Output o;
	o["shape"] = to_string(f.shape());
	o["discriminant_expression"] = discriminant_expression(f.shape());
	o["discriminant"] = to_string(D);
	o["discriminant_value"] = num(D.get_d());
	o["singular"] = is_zero(D);
	if (!is_zero(D))
	{
		auto rep = classify_singularity(to_double(f), calib);
		o["relative_discriminant"] = num(rep.relative_discriminant);
		o["regime"] = to_string(rep.regime);
	}
	o.print(out, c.json);
	return ok;
}

std::pair<double, double> parse_constants(std::string const &s)
{
	if (std::filesystem::is_regular_file(s))
	{
		auto fit = parse_fit(read_text_file(s));
		return {fit.c1, fit.c2};
	}
	auto comma = s.find(',');
	if (comma == s.npos)
		throw InputError("--constants expects 'c1,c2' or a fit file");
	try
	{
		return {to_double(parse_rational(s.substr(0, comma))), to_double(parse_rational(s.substr(comma + 1)))};
	}
	catch (std::exception const &)
	{
		throw InputError("--constants expects 'c1,c2' or a fit file, got '" + s + "'");
	}
}

Json branch_json(BranchValue const &v)
{
	Json j = Json::object();
	j["value"] = num(v.value);
	j["phase"] = v.phase;
	j["route"] = v.route;
	if (v.near_singular || v.infinite)
	{
		j["near_singular"] = v.near_singular;
		j["infinite"] = v.infinite;
		j["log_coefficient"] = num(v.log_coefficient);
	}
	return j;
}

int cmd_eval(std::ostream &out, Common const &c, std::string const &file, int branch, std::string const &constants,
             CalibrationOption &cal)
{
	auto f = read_form_file(file);
	auto const *calib = cal.get();
	auto shape = f.shape();
	bool two = shape == FormShape{2, 4} || shape == FormShape{3, 3};
	double c1 = 1, c2 = 0;
	if (!constants.empty())
	{
		if (!two)
			throw InputError("--constants applies to 2|4 and 3|3 only");
		std::tie(c1, c2) = parse_constants(constants);
		branch = 0;
	}
	auto v = evaluate_j(f, branch, c1, c2, calib);
	Output o;
	o["shape"] = to_string(shape);
	Json inv = Json::object();
	for (size_t i = 0; i < v.invariant_names.size(); ++i)
		inv[v.invariant_names[i]] = num(v.invariants[i]);
	o["invariants"] = inv;
	o["discriminant"] = num(v.discriminant);
	if (v.argument.size() == 1)
		o["argument"] = Json{{"t", num(v.argument[0])}};
	else if (v.argument.size() == 2)
		o["argument"] = Json{{"u", num(v.argument[0])}, {"v", num(v.argument[1])}};
	o["regime"] = to_string(v.regime);
	if (branch == 0)
	{
		o["branch"] = "combination";
		o["c1"] = c1;
		o["c2"] = c2;
		o["branch1"] = branch_json(evaluate_j(f, 1, 1, 0, calib));
		o["branch2"] = branch_json(evaluate_j(f, 2, 1, 0, calib));
		o["value"] = num(v.value);
		if (v.infinite)
			o["log_coefficient"] = num(v.log_coefficient);
	}
	else
	{
		o["branch"] = branch;
		auto const bj = branch_json(v);
		for (auto const &[k, x] : bj.items())
			o[k] = x;
		if (shape == FormShape{2, 5})
			o["locus_onset"] = v.locus_onset;
	}
	o.print(out, c.json);
	return ok;
}

int cmd_ward(std::ostream &out, Common const &c, std::string const &file, double step, int branch, double tol,
             CalibrationOption &cal)
{
	auto fq = read_form_file(file);
	auto f = to_double(fq);
	auto const *calib = cal.get();
	FormFunction fn = [&](FormD const &g) { return evaluate_j(g, branch, 1, 0, calib).value; };
	auto base = evaluate_j(f, branch, 1, 0, calib);
	if (base.infinite)
		throw DomainError("form lies on the discriminant locus; no finite derivatives");
	auto qs = ward_pairs(f.shape().n, f.shape().r);
	double floor = default_floor(fn, f);
	Json rows = Json::array();
	double worst = 0;
	bool all = true;
	for (auto const &w : qs)
	{
		auto r = ward_residual(fn, f, w, step, floor);
		bool pass = r.residual < tol;
		all = all && pass;
		worst = std::max(worst, r.residual);
		rows.push_back({{"quadruple", to_string(w)}, {"residual", r.residual}, {"pass", pass}});
	}
	Json doc = Json::object();
	doc["shape"] = to_string(f.shape());
	doc["branch"] = branch;
	doc["step"] = step > 0 ? Json(step) : Json("adaptive");
	doc["tolerance"] = tol;
	doc["quadruples"] = rows;
	doc["worst"] = worst;
	doc["all_pass"] = all;
	if (c.json)
		out << doc.dump(2) << "\n";
	else
	{
		out << "shape = " << doc["shape"].get<std::string>() << "\nbranch = " << branch << "\nstep = "
		    << (step > 0 ? Json(step).dump() : std::string("adaptive")) << "\ntolerance = " << Json(tol).dump() << "\n";
		for (auto const &r : rows)
			out << r["quadruple"].get<std::string>() << " = " << r["residual"].dump() << " "
			    << (r["pass"].get<bool>() ? "pass" : "fail") << "\n";
		out << "worst = " << Json(worst).dump() << "\nall_pass = " << (all ? "true" : "false") << "\n";
	}
	return ok;
}

int cmd_oracle(std::ostream &out, Common const &c, std::string const &file, std::string const &weight, double tol)
{
	auto f = to_double(read_form_file(file));
	Output o;
	o["shape"] = to_string(f.shape());
	o["weight"] = weight;
	QuadratureResult r;
	if (weight == "radial")
		r = radial_oracle(f, tol);
	else
		r = integrate_weight(f, parse_weight(weight), tol);
	o["value"] = num(r.value);
	o["error_estimate"] = num(r.error);
	o["cells"] = r.cells;
	o.print(out, c.json);
	return ok;
}

int cmd_fit(std::ostream &out, Common const &c, std::string const &suite, int random, uint64_t seed,
            std::string const &save, std::string const &outfile, int jobs)
{
	std::vector<std::string> names;
	std::vector<FormQ> forms;
	if (!suite.empty())
	{
		if (!std::filesystem::is_directory(suite))
			throw InputError("suite '" + suite + "' is not a directory");
		std::vector<std::filesystem::path> paths;
		for (auto const &e : std::filesystem::directory_iterator(suite))
			if (e.is_regular_file() && e.path().extension() == ".form")
				paths.push_back(e.path());
		std::sort(paths.begin(), paths.end());
		for (auto const &p : paths)
		{
			names.push_back(p.filename().string());
			forms.push_back(read_form_file(p.string()));
		}
	}
	else
		for (int k = 0; k < random; ++k)
		{
			names.push_back(fmt::format("quartic{:02d}.form", k));
			forms.push_back(random_posdef_quartic(seed + k));
		}
	if (!save.empty())
	{
		std::filesystem::create_directories(save);
		for (size_t i = 0; i < forms.size(); ++i)
			write_text_file((std::filesystem::path(save) / names[i]).string(), format_form(forms[i]));
	}
	std::vector<FitSample> samples(forms.size());
	parallel_for(forms.size(), jobs, [&](size_t i) {
		auto f = to_double(forms[i]);
		samples[i] = {f, integrate_exp_form(f).value};
	});
	auto fit = fit_constants(
	    samples, [](FormD const &f) { return eval_24(f, 1).value; }, [](FormD const &f) { return eval_24(f, 2).value; });
	Output o;
	o["samples"] = fit.samples;
	o["c1"] = fit.c1;
	o["c2"] = fit.c2;
	o["rms"] = fit.rms;
	o["max_relative"] = fit.max_rel;
	if (fit.held_out >= 0)
		o["held_out"] = fit.held_out;
	o["c1_closed_form"] = exact_c1_24();
	if (!outfile.empty())
	{
		write_text_file(outfile, format_fit({fit.c1, fit.c2, fit.rms}));
		o["written"] = outfile;
	}
	o.print(out, c.json);
	return ok;
}

int cmd_calibrate(std::ostream &out, Common const &c, std::string const &outfile)
{
	auto rec = derive_25(false);
	Output o;
	Json checks = Json::object();
	for (auto const &[row, pass] : rec.checks)
		checks[row] = pass ? "pass" : "fail";
	o["checks"] = checks;
	o["checks_passed"] = fmt::format("{}/{}", rec.passed_count(), rec.checks.size());
	o["I8_terms"] = rec.I8.monomial_count();
	o["I12_terms"] = rec.I12.monomial_count();
	if (!outfile.empty())
	{
		write_text_file(outfile, format_calibration(rec));
		o["written"] = outfile;
	}
	o.print(out, c.json);
	if (!rec.all_passed())
		throw DomainError("calibration rows failed; see checks");
	return ok;
}

int cmd_contract(std::ostream &out, Common const &c, std::string const &name, std::string const &file)
{
	auto d = builtin_diagram(name);
	Output o;
	o["diagram"] = name;
	o["shape"] = to_string(FormShape{d.n, d.r});
	if (file.empty())
	{
		auto p = contract_symbolic(d, {d.n, d.r}).scalar().with_vars(coordinate_names({d.n, d.r}));
		o["terms"] = p.monomial_count();
		o["vars"] = join_names(p.vars());
		o.raw("polynomial", dump_poly(p));
		o.print(out, c.json, {"polynomial"});
		return ok;
	}
	auto f = read_form_file(file);
	if (!(f.shape() == FormShape{d.n, d.r}))
		throw InputError(fmt::format("diagram {} needs shape {}, form has {}", name, to_string(FormShape{d.n, d.r}),
		                             to_string(f.shape())));
	auto t = contract_numeric(d, f);
	if (t.labels.empty())
	{
		o["value"] = to_string(t.scalar());
		o["value_double"] = num(t.scalar().get_d());
	}
	else
	{
		Json entries = Json::array();
		for (auto const &x : t.data)
			entries.push_back(to_string(x));
		o["rank"] = t.labels.size();
		o["entries"] = entries;
	}
	o.print(out, c.json);
	return ok;
}

int cmd_expand(std::ostream &out, Common const &c, std::string const &target, std::string const &shape_text,
               CalibrationOption &cal)
{
	Output o;
	if (shape_text.empty() && std::filesystem::is_regular_file(target))
	{
		auto f = read_form_file(target);
		// plain output is itself a valid form file
		if (!c.json)
		{
			out << format_form(f);
			return ok;
		}
		o["shape"] = to_string(f.shape());
		o.raw("form", format_form(f));
		o.print(out, c.json, {"form"});
		return ok;
	}
	SparsePoly p;
	if (shape_text.empty())
	{
		auto names = printed_names();
		if (std::find(names.begin(), names.end(), target) == names.end())
			throw InputError(fmt::format("'{}' is neither a form file nor one of: {}", target, join_names(names)));
		p = printed_polynomial(target).with_vars(coordinate_names(printed_shape(target)));
		o["source"] = "printed " + target;
	}
	else
	{
		auto shape = parse_shape(shape_text);
		auto const *calib = cal.get();
		if (target == "D")
			p = discriminant_polynomial(shape, calib);
		else
			p = invariant_polynomial(shape, target, calib);
		p = p.with_vars(coordinate_names(shape));
		o["source"] = fmt::format("{} of {}", target, to_string(shape));
	}
	o["terms"] = p.monomial_count();
	o["degree"] = p.total_degree();
	o["vars"] = join_names(p.vars());
	o.raw("polynomial", dump_poly(p));
	o.print(out, c.json, {"polynomial"});
	return ok;
}

Hyp2F1Route parse_route(std::string const &s)
{
	for (auto r : {Hyp2F1Route::automatic, Hyp2F1Route::series, Hyp2F1Route::polynomial, Hyp2F1Route::one_minus_t,
	               Hyp2F1Route::pfaff, Hyp2F1Route::euler, Hyp2F1Route::inverse})
		if (to_string(r) == s)
			return r;
	throw InputError("unknown route '" + s + "'");
}

int cmd_hyp(std::ostream &out, Common const &c, double a, double b, double cc, double t, std::string const &route,
            bool integral)
{
	auto r = gauss_2f1_ex(a, b, cc, t, parse_route(route));
	Output o;
	o["a"] = a;
	o["b"] = b;
	o["c"] = cc;
	o["t"] = t;
	o["value"] = num(r.value);
	o["route"] = to_string(r.route);
	o["infinite"] = r.infinite;
	if (r.infinite)
		o["log_coefficient"] = num(r.log_coefficient);
	if (integral)
		o["integral"] = num(hyp2f1_integral(a, b, cc, t));
	o.print(out, c.json);
	return ok;
}

int cmd_g25(std::ostream &out, Common const &c, double u, double v, std::string const &method)
{
	Output o;
	o["u"] = u;
	o["v"] = v;
	o["method"] = method;
	if (method == "series")
	{
		auto s = series_g25(u, v);
		o["g"] = s.g;
		o["gu"] = s.gu;
		o["gv"] = s.gv;
		o["guu"] = s.guu;
		o["guv"] = s.guv;
		o["gvv"] = s.gvv;
		o["diagonals"] = s.diagonals;
		o["tail_bound"] = s.tail;
	}
	else if (method == "integral" || method == "unit-square")
	{
		auto dom = method == "integral" ? G25Domain::first_root : G25Domain::unit_square;
		auto k = kernel_check_g25(u, v, dom);
		o["near_locus"] = k.near_locus;
		o["g"] = integral_g25(u, v, dom);
	}
	else
		throw InputError("--method must be series, integral or unit-square");
	o.print(out, c.json);
	return ok;
}

int cmd_table(std::ostream &out, Common const &c, int max_n, int max_r)
{
	struct Row
	{
		std::string shape, invariants, disc, structure;
	};
	std::vector<Row> rows{
	    {"n|2", "det", "det", "det^(-1/2)"},
	    {"2|3", "I4", "I4", "I4^(-1/6)"},
	    {"2|4", "I2, I3", "I2^3 - 6 I3^2", "I2^(-1/4) 2F1(1/12, 5/12; 1/2; 6 I3^2/I2^3)"},
	    {"2|5", "I4, I8, I12", "I4^2 - 64 I8",
	     "I4^(-1/10) G(I8/I4^2, I12/I4^3), two-variable series in 16u and 128v/3"},
	    {"3|3", "I4, I6", "32 I4^3 + 3 I6^2", "I4^(-1/4) 2F1(1/12, 5/12; 1/2; -3 I6^2/(32 I4^3))"},
	};
	Output o;
	Json cases = Json::object();
	for (auto const &r : rows)
		cases[r.shape] = {{"invariants", r.invariants}, {"discriminant", r.disc}, {"integral", r.structure}};
	o["cases"] = cases;
	Json counts = Json::object();
	for (int r = 2; r <= max_r; ++r)
	{
		Json row = Json::object();
		for (int n = 2; n <= max_n; ++n)
			row[fmt::format("n={}", n)] = invariant_count(n, r);
		counts[fmt::format("r={}", r)] = row;
	}
	o["invariant_counts"] = counts;
	o.print(out, c.json);
	return ok;
}

int cmd_acceptance(std::ostream &out, Common const &c, std::vector<int> const &ids, uint64_t seed, int forms,
                   int jobs)
{
	AcceptanceOptions opts;
	opts.seed = seed;
	opts.forms_per_case = forms;
	std::vector<int> todo = ids;
	if (todo.empty())
		for (int i = 1; i <= acceptance_criterion_count; ++i)
			todo.push_back(i);
	for (int id : todo)
		if (id < 1 || id > acceptance_criterion_count)
			throw InputError(fmt::format("no criterion {}", id));
	std::vector<CriterionResult> results(todo.size());
	parallel_for(todo.size(), jobs, [&](size_t i) { results[i] = run_criterion(todo[i], opts); });
	bool all = true;
	Json arr = Json::array();
	for (auto const &r : results)
	{
		all = all && r.pass;
		arr.push_back({{"criterion", r.id},
		               {"title", r.title},
		               {"pass", r.pass},
		               {"detail", r.detail},
		               {"seconds", r.seconds}});
	}
	if (c.json)
		out << Json{{"seed", seed}, {"criteria", arr}, {"all_pass", all}}.dump(2) << "\n";
	else
	{
		for (auto const &r : results)
			out << format_result(r) << "\n";
		out << fmt::format("{} of {} criteria passed\n",
		                   std::count_if(results.begin(), results.end(), [](auto const &r) { return r.pass; }),
		                   results.size());
	}
	return all ? ok : criteria_failed;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Integral discriminants of homogeneous forms: invariants, closed forms and checks", "intdisc"};
	app.require_subcommand(1);
	app.set_help_all_flag("--help-all", "help for every subcommand");

	Common common;
	CalibrationOption cal;
	std::string file, weight = "exp", constants, suite, save, outfile, method = "series", shape_text, route = "automatic";
	int branch = 1, random = 0, jobs = 1, forms = 10, max_n = 7, max_r = 6;
	double step = 0, tol = 1e-5, a = 0, b = 0, cc = 0, t = 0, u = 0, v = 0, qtol = 1e-10;
	uint64_t seed = AcceptanceOptions{}.seed;
	bool integral = false;
	std::vector<int> criteria;
	std::string diagram, target;

	auto add_json = [&](CLI::App *s) { s->add_flag("--json", common.json, "JSON output"); };
	auto add_cal = [&](CLI::App *s) {
		s->add_option("--calibration", cal.path, "2|5 calibration file (default: derived at startup)")
		    ->check(CLI::ExistingFile);
	};

	auto *inv = app.add_subcommand("invariants", "exact elementary invariants and discriminant of a form file");
	inv->add_option("form", file, "form file")->required();
	add_cal(inv);
	add_json(inv);

	auto *disc = app.add_subcommand("disc", "discriminant of a form file and its singularity regime");
	disc->add_option("form", file, "form file")->required();
	add_cal(disc);
	add_json(disc);

	auto *ev = app.add_subcommand("eval", "evaluate the closed-form integral discriminant");
	ev->add_option("form", file, "form file")->required();
	ev->add_option("--branch", branch, "branch 1 or 2 (2|4 and 3|3)")->check(CLI::IsMember({1, 2}));
	ev->add_option("--constants", constants, "c1,c2 or a fit file: evaluate c1 J1 + c2 J2");
	add_cal(ev);
	add_json(ev);

	auto *ward = app.add_subcommand("ward-check", "finite-difference Ward identity residuals");
	ward->add_option("form", file, "form file")->required();
	ward->add_option("--step", step, "difference step; 0 selects the adaptive ladder")->check(CLI::NonNegativeNumber);
	ward->add_option("--branch", branch, "branch 1 or 2")->check(CLI::IsMember({1, 2}));
	ward->add_option("--tol", tol, "pass threshold for the relative residual");
	add_cal(ward);
	add_json(ward);

	auto *orc = app.add_subcommand("oracle", "direct quadrature of a positive definite binary quartic");
	orc->add_option("form", file, "form file")->required();
	orc->add_option("--weight", weight, "exp, exp2 or radial")->check(CLI::IsMember({"exp", "exp2", "radial"}));
	orc->add_option("--tol", qtol, "relative tolerance");
	add_json(orc);

	auto *fit = app.add_subcommand("fit", "least-squares constants c1, c2 of the 2|4 branches against the oracle");
	auto *suite_opt = fit->add_option("--suite", suite, "directory of .form files");
	auto *random_opt = fit->add_option("--random", random, "use N random positive definite quartics")
	                       ->check(CLI::PositiveNumber);
	suite_opt->excludes(random_opt);
	fit->add_option("--seed", seed, "seed for --random");
	fit->add_option("--save-suite", save, "write the sampled forms to this directory")->needs(random_opt);
	fit->add_option("--out", outfile, "fit file to write");
	fit->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
	add_json(fit);

	auto *calib = app.add_subcommand("calibrate-25", "derive the 2|5 invariants I8, I12 and verify the action tables");
	calib->add_option("--out", outfile, "calibration file to write");
	add_json(calib);

	auto *con = app.add_subcommand("contract", "contract a built-in diagram, symbolically or on a form");
	con->add_option("diagram", diagram, "diagram name")->required()->check(CLI::IsMember(builtin_diagram_names()));
	con->add_option("form", file, "form file (omit for the symbolic polynomial)");
	add_json(con);

	auto *exp = app.add_subcommand("expand", "dump a polynomial, or re-emit a form file canonically");
	exp->add_option("target", target, "form file, tabulated expansion name, invariant name or D")->required();
	exp->add_option("--shape", shape_text, "shape such as 2|5 for invariant names and D");
	add_cal(exp);
	add_json(exp);

	auto *hyp = app.add_subcommand("hyp", "Gauss hypergeometric function");
	hyp->require_subcommand(1);
	add_json(hyp);
	auto *hyp_eval = hyp->add_subcommand("eval", "evaluate 2F1(a, b; c; t)");
	hyp_eval->add_option("--a", a)->required();
	hyp_eval->add_option("--b", b)->required();
	hyp_eval->add_option("--c", cc)->required();
	hyp_eval->add_option("--t", t)->required();
	hyp_eval->add_option("--route", route, "automatic, series, polynomial, one-minus-t, pfaff, euler, inverse");
	hyp_eval->add_flag("--integral", integral, "also evaluate the Euler integral representation");
	add_json(hyp_eval);

	auto *g25 = app.add_subcommand("g25", "2|5 two-variable function G(u, v)");
	g25->add_option("--u", u)->required();
	g25->add_option("--v", v)->required();
	g25->add_option("--method", method, "series, integral or unit-square")
	    ->check(CLI::IsMember({"series", "integral", "unit-square"}));
	add_json(g25);

	auto *tab = app.add_subcommand("table", "summary of the implemented cases and invariant counts");
	tab->add_option("--max-n", max_n, "largest n in the count table")->check(CLI::Range(2, 12));
	tab->add_option("--max-r", max_r, "largest r in the count table")->check(CLI::Range(2, 12));
	add_json(tab);

	auto *acc = app.add_subcommand("acceptance", "run the acceptance criteria");
	acc->add_option("--criterion", criteria, "criterion number (repeatable)");
	acc->add_option("--seed", seed, "seed for randomized criteria");
	acc->add_option("--forms", forms, "random forms per case")->check(CLI::Range(1, 1000));
	acc->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
	add_json(acc);

	std::vector<std::string> argv_store{"intdisc"};
	argv_store.insert(argv_store.end(), args.begin(), args.end());
	std::vector<char *> argv;
	for (auto &s : argv_store)
		argv.push_back(s.data());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (CLI::ParseError const &e)
	{
		int rc = app.exit(e, out, err);
		return rc == 0 ? ok : usage_error;
	}

	try
	{
		if (inv->parsed())
			return cmd_invariants(out, common, file, cal);
		if (disc->parsed())
			return cmd_disc(out, common, file, cal);
		if (ev->parsed())
			return cmd_eval(out, common, file, branch, constants, cal);
		if (ward->parsed())
			return cmd_ward(out, common, file, step, branch, tol, cal);
		if (orc->parsed())
			return cmd_oracle(out, common, file, weight, qtol);
		if (fit->parsed())
		{
			if (suite.empty() && random == 0)
				throw InputError("fit needs --suite <dir> or --random <n>");
			return cmd_fit(out, common, suite, random, seed, save, outfile, jobs);
		}
		if (calib->parsed())
			return cmd_calibrate(out, common, outfile);
		if (con->parsed())
			return cmd_contract(out, common, diagram, file);
		if (exp->parsed())
			return cmd_expand(out, common, target, shape_text, cal);
		if (hyp_eval->parsed())
			return cmd_hyp(out, common, a, b, cc, t, route, integral);
		if (g25->parsed())
			return cmd_g25(out, common, u, v, method);
		if (tab->parsed())
			return cmd_table(out, common, max_n, max_r);
		if (acc->parsed())
			return cmd_acceptance(out, common, criteria, seed, forms, jobs);
	}
	catch (DomainError const &e)
	{
		err << "domain error: " << e.what() << "\n";
		return domain_error;
	}
	catch (InputError const &e)
	{
		err << "input error: " << e.what() << "\n";
		return usage_error;
	}
	catch (std::exception const &e)
	{
		err << "error: " << e.what() << "\n";
		return usage_error;
	}
	return usage_error;
}

} // namespace intdisc::cli
