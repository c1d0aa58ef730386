#include "intdisc/printed.h"

#include "intdisc/tensornet.h"

#include <map>

namespace intdisc {

namespace {

struct Entry
{
	FormShape shape;
	std::string text;
};

std::map<std::string, Entry> const &entries()
{
	static std::map<std::string, Entry> const table = {
	    {"I4_23",
	     {{2, 3},
	      "2 S111^2 S222^2 - 12 S111 S112 S122 S222 + 8 S111 S122^3 + 8 S112^3 S222 - 6 S112^2 S122^2"}},
	    {"I2_24", {{2, 4}, "2 S1111 S2222 - 8 S1112 S1222 + 6 S1122^2"}},
	    {"I3_24",
	     {{2, 4},
	      "6 S1111 S1122 S2222 - 6 S1111 S1222^2 - 6 S1112^2 S2222 + 12 S1112 S1122 S1222 - 6 S1122^3"}},
	    {"D24",
	     {{2, 4},
	      "8 S1111^3 S2222^3 - 96 S1111^2 S1112 S1222 S2222^2 - 144 S1111^2 S1122^2 S2222^2"
	      " + 432 S1111^2 S1122 S1222^2 S2222 - 216 S1111^2 S1222^4 + 432 S1111 S1112^2 S1122 S2222^2"
	      " - 48 S1111 S1112^2 S1222^2 S2222 - 1440 S1111 S1112 S1122^2 S1222 S2222"
	      " + 648 S1111 S1122^4 S2222 + 864 S1111 S1112 S1122 S1222^3 + 864 S1112^3 S1122 S1222 S2222"
	      " + 288 S1112^2 S1122^2 S1222^2 - 432 S1111 S1122^3 S1222^2 - 216 S1112^4 S2222^2"
	      " - 512 S1112^3 S1222^3 - 432 S1112^2 S1122^3 S2222"}},
	    {"I4_25",
	     {{2, 5},
		"+2 S11111^2 S22222^2 -20 S11111 S11112 S12222 S22222 +8 S11111 S11122 S11222 S22222"
		" +32 S11111 S11122 S12222^2 -24 S11111 S11222^2 S12222 +32 S11112^2 S11222 S22222"
		" +18 S11112^2 S12222^2 -24 S11112 S11122^2 S22222 -152 S11112 S11122 S11222 S12222"
		" +96 S11112 S11222^3 +96 S11122^3 S12222 -64 S11122^2 S11222^2"}},
	    {"I4_33",
	     {{3, 3},
		"+6 S123^4 -12 S122 S123^2 S133 +6 S122^2 S133^2 +6 S113 S123 S133 S222 -12 S113 S123^2 S223"
		" -6 S113 S122 S133 S223 +18 S113 S122 S123 S233 -6 S113 S122^2 S333 +6 S113^2 S223^2"
		" -6 S113^2 S222 S233 -6 S112 S133^2 S222 +18 S112 S123 S133 S223 -12 S112 S123^2 S233"
		" -6 S112 S122 S133 S233 +6 S112 S122 S123 S333 -6 S112 S113 S223 S233 +6 S112 S113 S222 S333"
		" +6 S112^2 S233^2 -6 S112^2 S223 S333 -6 S111 S133 S223^2 +6 S111 S133 S222 S233"
		" +6 S111 S123 S223 S233 -6 S111 S123 S222 S333 -6 S111 S122 S233^2 +6 S111 S122 S223 S333"}},
	    {"I6_33",
	     {{3, 3},
		"+48 S123^6 -144 S122 S123^4 S133 +144 S122^2 S123^2 S133^2 -48 S122^3 S133^3"
		" +72 S113 S123^3 S133 S222 -144 S113 S123^4 S223 -72 S113 S122 S123 S133^2 S222"
		" +72 S113 S122 S123^2 S133 S223 +216 S113 S122 S123^3 S233 +72 S113 S122^2 S133^2 S223"
		" -216 S113 S122^2 S123 S133 S233 -72 S113 S122^2 S123^2 S333 +72 S113 S122^3 S133 S333"
		" +18 S113^2 S133^2 S222^2 -72 S113^2 S123 S133 S222 S223 +144 S113^2 S123^2 S223^2"
		" -72 S113^2 S123^2 S222 S233 +72 S113^2 S122 S133 S223^2 -36 S113^2 S122 S133 S222 S233"
		" -216 S113^2 S122 S123 S223 S233 +144 S113^2 S122 S123 S222 S333 +162 S113^2 S122^2 S233^2"
		" -144 S113^2 S122^2 S223 S333 -48 S113^3 S223^3 +72 S113^3 S222 S223 S233 -24 S113^3 S222^2 S333"
		" -72 S112 S123^2 S133^2 S222 +216 S112 S123^3 S133 S223 -144 S112 S123^4 S233"
		" +72 S112 S122 S133^3 S222 -216 S112 S122 S123 S133^2 S223 +72 S112 S122 S123^2 S133 S233"
		" +72 S112 S122 S123^3 S333 +72 S112 S122^2 S133^2 S233 -72 S112 S122^2 S123 S133 S333"
		" -36 S112 S113 S133^2 S222 S223 -216 S112 S113 S123 S133 S223^2"
		" +360 S112 S113 S123 S133 S222 S233 +72 S112 S113 S123^2 S223 S233"
		" -216 S112 S113 S123^2 S222 S333 +36 S112 S113 S122 S133 S223 S233"
		" -108 S112 S113 S122 S133 S222 S333 -216 S112 S113 S122 S123 S233^2"
		" +360 S112 S113 S122 S123 S223 S333 -36 S112 S113 S122^2 S233 S333 +72 S112 S113^2 S223^2 S233"
		" -144 S112 S113^2 S222 S233^2 +72 S112 S113^2 S222 S223 S333 +162 S112^2 S133^2 S223^2"
		" -144 S112^2 S133^2 S222 S233 -216 S112^2 S123 S133 S223 S233 +144 S112^2 S123 S133 S222 S333"
		" +144 S112^2 S123^2 S233^2 -72 S112^2 S123^2 S223 S333 +72 S112^2 S122 S133 S233^2"
		" -36 S112^2 S122 S133 S223 S333 -72 S112^2 S122 S123 S233 S333 +18 S112^2 S122^2 S333^2"
		" +72 S112^2 S113 S223 S233^2 -144 S112^2 S113 S223^2 S333 +72 S112^2 S113 S222 S233 S333"
		" -48 S112^3 S233^3 +72 S112^3 S223 S233 S333 -24 S112^3 S222 S333^2 -24 S111 S133^3 S222^2"
		" +144 S111 S123 S133^2 S222 S223 -72 S111 S123^2 S133 S223^2 -216 S111 S123^2 S133 S222 S233"
		" +72 S111 S123^3 S223 S233 +120 S111 S123^3 S222 S333 -144 S111 S122 S133^2 S223^2"
		" +72 S111 S122 S133^2 S222 S233 +360 S111 S122 S123 S133 S223 S233"
		" -72 S111 S122 S123 S133 S222 S333 -72 S111 S122 S123^2 S233^2 -216 S111 S122 S123^2 S223 S333"
		" -144 S111 S122^2 S133 S233^2 +72 S111 S122^2 S133 S223 S333 +144 S111 S122^2 S123 S233 S333"
		" -24 S111 S122^3 S333^2 +72 S111 S113 S133 S223^3 -108 S111 S113 S133 S222 S223 S233"
		" +36 S111 S113 S133 S222^2 S333 -72 S111 S113 S123 S223^2 S233 +144 S111 S113 S123 S222 S233^2"
		" -72 S111 S113 S123 S222 S223 S333 -36 S111 S113 S122 S223 S233^2 +72 S111 S113 S122 S223^2 S333"
		" -36 S111 S113 S122 S222 S233 S333 -36 S111 S112 S133 S223^2 S233 +72 S111 S112 S133 S222 S233^2"
		" -36 S111 S112 S133 S222 S223 S333 -72 S111 S112 S123 S223 S233^2 +144 S111 S112 S123 S223^2 S333"
		" -72 S111 S112 S123 S222 S233 S333 +72 S111 S112 S122 S233^3 -108 S111 S112 S122 S223 S233 S333"
		" +36 S111 S112 S122 S222 S333^2 +18 S111^2 S223^2 S233^2 -24 S111^2 S223^3 S333"
		" -24 S111^2 S222 S233^3 +36 S111^2 S222 S223 S233 S333 -6 S111^2 S222^2 S333^2"}},
	};
	return table;
}

Entry const &entry(std::string const &name)
{
	auto it = entries().find(name);
	if (it == entries().end())
		throw InputError("unknown printed expansion '" + name + "'");
	return it->second;
}

} // namespace

std::vector<std::string> printed_names() { return {"I4_23", "I2_24", "I3_24", "D24", "I4_25", "I4_33", "I6_33"}; }

std::string const &printed_text(std::string const &name) { return entry(name).text; }

FormShape printed_shape(std::string const &name) { return entry(name).shape; }

SparsePoly tensor_expression(std::string const &text, FormShape shape)
{
	auto raw = parse_poly(text);
	auto vars = coordinate_names(shape);
	std::vector<SparsePoly> images;
	for (auto const &v : raw.vars())
	{
		if (v.size() != static_cast<size_t>(shape.r) + 1 || v[0] != 'S')
			throw InputError("bad tensor component '" + v + "'");
		std::vector<int> idx;
		for (size_t k = 1; k < v.size(); ++k)
			idx.push_back(v[k] - '1');
		auto a = count_indices(shape.n, idx);
		images.push_back(SparsePoly::variable(vars, coordinate_name(a)) * Rational(1, multinomial(a)));
	}
	return compose(raw, images).with_vars(vars);
}

SparsePoly printed_polynomial(std::string const &name)
{
	auto const &e = entry(name);
	return tensor_expression(e.text, e.shape);
}

PrintedTable const &printed_table(std::string const &name)
{
	static std::map<std::string, PrintedTable> const tables = {
	    {"O0_25",
	     {{"I4", "I8", "I12"},
	      {"264/25 I4", "2/25 I4^2 + 294/25 I8", "12/25 I4 I8 + 162/5 I12"},
	      {{"928/25 I4^2 - 384/25 I8", "2/25 I4^3 + 1166/25 I4 I8 + 192/5 I12",
	        "12/25 I4^2 I8 + 144/25 I8^2 + 1794/25 I4 I12"},
	       {"2/25 I4^3 + 1166/25 I4 I8 + 192/5 I12", "8/25 I4^2 I8 + 1188/25 I8^2 + 12/5 I4 I12",
	        "9/25 I4 I8^2 + 12/25 I4^2 I12 + 1944/25 I8 I12"},
	       {"12/25 I4^2 I8 + 144/25 I8^2 + 1794/25 I4 I12", "9/25 I4 I8^2 + 12/25 I4^2 I12 + 1944/25 I8 I12",
	        "-54/25 I8^3 + 84/25 I4 I8 I12 + 684/5 I12^2"}}}},
	    {"O4_25",
	     {{"I4", "I8", "I12"},
	      {"-264/25 I8", "-2/25 I4 I8 + 588/25 I12", "363/50 I8^2 - 153/25 I4 I12"},
	      {{"-928/25 I4 I8 - 768/25 I12", "-2/25 I4^2 I8 - 584/25 I8^2 + 524/25 I4 I12",
	        "363/50 I4 I8^2 - 153/25 I4^2 I12 - 696/25 I8 I12"},
	       {"-2/25 I4^2 I8 - 584/25 I8^2 + 524/25 I4 I12", "1/25 I4 I8^2 - 22/25 I4^2 I12 + 2376/25 I8 I12",
	        "603/50 I8^3 - 291/25 I4 I8 I12 + 1188/25 I12^2"},
	       {"363/50 I4 I8^2 - 153/25 I4^2 I12 - 696/25 I8 I12", "603/50 I8^3 - 291/25 I4 I8 I12 + 1188/25 I12^2",
	        "129/5 I8^2 I12 - 606/25 I4 I12^2"}}}},
	    {"O4_33",
	     {{"I4", "I6"},
	      {"-140/9 I4^2", "-98/3 I4 I6"},
	      {{"1/3 I6^2 - 472/9 I4^3", "-770/9 I4^2 I6"}, {"-770/9 I4^2 I6", "256/3 I4^4 - 340/3 I6^2 I4"}}}},
	};
	auto it = tables.find(name);
	if (it == tables.end())
		throw InputError("unknown action table '" + name + "'");
	return it->second;
}

} // namespace intdisc
