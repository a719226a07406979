#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncwb/config.h"

using namespace ncwb;
using config::parse_config;

TEST_CASE("plain permutation session has rational field")
{
	auto s = parse_config("[algebra]\n"
	                      "preset = vn\n"
	                      "n = 4\n"
	                      "[group]\n"
	                      "perm = (1 2)(3 4)\n");
	CHECK(s.field_order == 1);
	REQUIRE(s.alg);
	CHECK(s.alg->ngens() == 4);
	CHECK(s.degree_bound == 12); // default for n <= 4
	REQUIRE(s.group);
	CHECK(s.group->size() == 2);
	CHECK(s.scenario.empty());
}

TEST_CASE("default degree bound drops beyond four generators")
{
	auto s = parse_config("[algebra]\npreset = vn\nn = 6\n");
	CHECK(s.degree_bound == 8);
	CHECK(s.alg->ngens() == 6);
}

TEST_CASE("zeta tokens force the field order")
{
	auto s = parse_config("[algebra]\n"
	                      "preset = vn\n"
	                      "n = 2\n"
	                      "[group]\n"
	                      "diag = zeta(4), -zeta(4)\n");
	CHECK(s.field_order == 4);
	CHECK(s.group->size() == 4);

	// lcm across entries: zeta(4) and zeta(6) need order 12
	auto t = parse_config("[algebra]\n"
	                      "preset = vn\n"
	                      "n = 2\n"
	                      "[group]\n"
	                      "diag = zeta(4), zeta(6)\n");
	CHECK(t.field_order == 12);
}

TEST_CASE("scenario name contributes its root order")
{
	auto s = parse_config("[scenario]\nname = thm5.2\n");
	CHECK(s.field_order == 3);
	CHECK(s.scenario == "thm5.2");
	auto t = parse_config("[scenario]\nname = table-S3\n");
	CHECK(t.field_order == 1);
	CHECK_THROWS_AS(parse_config("[scenario]\nname = nonsense\n"), Error);
}

TEST_CASE("explicit order must contain the required roots")
{
	auto s = parse_config("[field]\n"
	                      "order = 12\n"
	                      "[scenario]\n"
	                      "name = sklyanin-basis-change\n");
	CHECK(s.field_order == 12);
	try {
		parse_config("[field]\n"
		             "order = 4\n"
		             "[scenario]\n"
		             "name = thm5.2\n",
		             "bad.cfg");
		FAIL("expected a validation error");
	} catch (const Error &e) {
		CHECK(std::string(e.what()).find("bad.cfg:2:") == 0);
	}
}

TEST_CASE("sklyanin and down-up presets read their parameters")
{
	auto s = parse_config("[algebra]\n"
	                      "preset = sklyanin\n"
	                      "a = 1\n"
	                      "b = 1\n"
	                      "c = -1\n"
	                      "degree_bound = 6\n");
	CHECK(s.alg->ngens() == 3);
	CHECK(s.degree_bound == 6);
	CHECK_THROWS_AS(parse_config("[algebra]\npreset = sklyanin\na = 1\nb = 1\n"), Error);

	auto d = parse_config("[algebra]\n"
	                      "preset = downup\n"
	                      "alpha = -2\n"
	                      "beta = -1\n");
	CHECK(d.alg->ngens() == 2);
}

TEST_CASE("full matrix generators and closure cap")
{
	auto s = parse_config("[algebra]\n"
	                      "preset = vn\n"
	                      "n = 2\n"
	                      "[group]\n"
	                      "matrix = 0, 1; 1, 0\n"
	                      "diag = -1, -1\n");
	CHECK(s.group->size() == 4);
	CHECK_THROWS_AS(parse_config("[algebra]\n"
	                             "preset = vn\n"
	                             "n = 3\n"
	                             "[group]\n"
	                             "perm = (1 2 3)\n"
	                             "closure_cap = 2\n"),
	                Error);
}

TEST_CASE("errors carry label and line number")
{
	auto line_of = [](const std::string &text) {
		try {
			parse_config(text, "t.cfg");
		} catch (const Error &e) {
			return std::string(e.what());
		}
		return std::string("no error");
	};
	CHECK(line_of("[nope]\n").find("t.cfg:1:") == 0);
	CHECK(line_of("key = 1\n").find("t.cfg:1:") == 0);
	CHECK(line_of("[field]\nbroken line\n").find("t.cfg:2:") == 0);
	CHECK(line_of("[algebra]\npreset = vn\nn = two\n").find("t.cfg:3:") == 0);
	CHECK(line_of("[algebra]\npreset = vn\nn = 4\nq = 1\n").find("t.cfg:4:") == 0);
	CHECK(line_of("[group]\nperm = (1 2)\n").find("t.cfg:2:") == 0); // no algebra
	CHECK(line_of("[algebra]\nn = 4\n") == "t.cfg:2: [algebra] section has no preset");
}

TEST_CASE("comments and blank lines are ignored")
{
	auto s = parse_config("# leading comment\n"
	                      "[algebra]   # trailing\n"
	                      "\n"
	                      "preset = vn # say which\n"
	                      "n = 3\n");
	CHECK(s.alg->ngens() == 3);
}
