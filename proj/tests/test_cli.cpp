#include "cli.h"

#include "intdisc/formio.h"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace {

struct Run
{
	int code;
	std::string out, err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = intdisc::cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string data(std::string const &name) { return std::string(INTDISC_DATA_DIR) + "/" + name; }

nlohmann::json run_json(std::vector<std::string> args)
{
	args.push_back("--json");
	auto r = run(args);
	REQUIRE(r.code == 0);
	return nlohmann::json::parse(r.out);
}

bool has_line(std::string const &text, std::string const &line)
{
	std::istringstream in(text);
	for (std::string l; std::getline(in, l);)
		if (l == line)
			return true;
	return false;
}

} // namespace

TEST_CASE("invariants of the Fermat cubic")
{
	auto r = run({"invariants", data("fermat33.form")});
	REQUIRE(r.code == 0);
	CHECK(has_line(r.out, "invariants.I4 = 0"));
	CHECK(has_line(r.out, "invariants.I6 = -6"));
	CHECK(has_line(r.out, "discriminant = 108"));
	auto j = run_json({"invariants", data("fermat33.form")});
	CHECK(j["invariants"]["I6"] == "-6");
	CHECK(j["discriminant"] == "108");
	CHECK(j["singular"] == false);
}

TEST_CASE("disc flags singular forms")
{
	auto j = run_json({"disc", data("hesse_singular33.form")});
	CHECK(j["singular"] == true);
	CHECK(j["discriminant"] == "0");
	CHECK(run_json({"disc", data("double_root25.form")})["singular"] == true);
}

TEST_CASE("eval")
{
	auto j = run_json({"eval", data("fermat24.form")});
	CHECK(j["value"].get<double>() == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-12));
	auto plain = run({"eval", data("fermat24.form")});
	REQUIRE(plain.code == 0);
	CHECK(has_line(plain.out, "value = " + j["value"].dump()));
	auto q = run_json({"eval", data("fermat25.form")});
	CHECK(q["value"].get<double>() == doctest::Approx(76.4775248196387).epsilon(1e-11));
	auto combo = run_json({"eval", data("quartic24.form"), "--constants", "2,0"});
	auto b1 = run_json({"eval", data("quartic24.form"), "--branch", "1"});
	CHECK(combo["value"].get<double>() == doctest::Approx(2 * b1["value"].get<double>()).epsilon(1e-14));
	CHECK(run({"eval", data("cubic23.form"), "--constants", "1,2"}).code == intdisc::cli::usage_error);
}

TEST_CASE("singular evaluations are domain errors")
{
	auto r = run({"ward-check", data("hesse_singular33.form")});
	CHECK(r.code == intdisc::cli::domain_error);
	CHECK(!r.err.empty());
}

TEST_CASE("usage errors")
{
	CHECK(run({"eval", data("fermat24.form"), "--bogus"}).code == intdisc::cli::usage_error);
	CHECK(run({"nosuchcommand"}).code == intdisc::cli::usage_error);
	CHECK(run({"eval", data("missing.form")}).code == intdisc::cli::usage_error);
	CHECK(run({"eval", data("fermat24.form"), "--branch", "3"}).code == intdisc::cli::usage_error);
	CHECK(run({"--help"}).code == intdisc::cli::ok);
}

TEST_CASE("ward-check passes on a generic quartic")
{
	auto r = run({"ward-check", data("quartic24.form")});
	CHECK(r.code == 0);
	CHECK(!r.out.empty());
}

TEST_CASE("oracle")
{
	auto j = run_json({"oracle", data("fermat24.form"), "--weight", "radial"});
	// int (1 + z^4)^(-1/2) dz = Gamma(1/4)^2 / (2 sqrt(pi))
	double want = std::pow(std::tgamma(0.25), 2) / (2 * std::sqrt(std::acos(-1.0)));
	CHECK(j["value"].get<double>() == doctest::Approx(want).epsilon(1e-10));
	CHECK(run({"oracle", data("cubic23.form")}).code != 0);
}

TEST_CASE("hyp and g25")
{
	auto j = run_json({"hyp", "eval", "--a", "1", "--b", "1", "--c", "2", "--t", "0.5"});
	CHECK(j["value"].get<double>() == doctest::Approx(2 * std::log(2.0)).epsilon(1e-14));
	auto g = run_json({"g25", "--u", "0", "--v", "0"});
	CHECK(g["g"].get<double>() == doctest::Approx(81.966581582149502764).epsilon(1e-12));
	// logarithmic singularity at t = 1 is reported, not an error
	auto inf = run_json({"hyp", "eval", "--a", "0.1", "--b", "0.4", "--c", "0.5", "--t", "1"});
	CHECK(inf["infinite"] == true);
	CHECK(inf["log_coefficient"].get<double>() ==
	      doctest::Approx(-std::tgamma(0.5) / (std::tgamma(0.1) * std::tgamma(0.4))).epsilon(1e-12));
	CHECK(run({"hyp", "eval", "--a", "0.1", "--b", "0.4", "--c", "-2", "--t", "0.3"}).code == intdisc::cli::domain_error);
}

TEST_CASE("contract and expand")
{
	auto sym = run({"contract", "I2_24"});
	REQUIRE(sym.code == 0);
	CHECK(!sym.out.empty());
	auto num = run_json({"contract", "I2_24", data("fermat24.form")});
	CHECK(num.contains("value"));
	auto tmp = std::filesystem::temp_directory_path() / "intdisc_cli_roundtrip.form";
	auto e = run({"expand", data("quartic24.form")});
	REQUIRE(e.code == 0);
	intdisc::write_text_file(tmp.string(), e.out);
	CHECK(intdisc::read_form_file(tmp.string()) == intdisc::read_form_file(data("quartic24.form")));
	std::filesystem::remove(tmp);
	CHECK(run({"expand", "I2", "--shape", "2|4"}).code == 0);
	CHECK(run({"expand", "D24"}).code == 0);
}

TEST_CASE("table")
{
	auto j = run_json({"table", "--max-n", "4", "--max-r", "4"});
	CHECK(j.contains("invariant_counts"));
	CHECK(j.contains("cases"));
}

TEST_CASE("acceptance subset")
{
	auto r = run({"acceptance", "--criterion", "12"});
	CHECK(r.code == 0);
	CHECK(r.out.find("PASS") != std::string::npos);
}
