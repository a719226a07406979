#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ncwb/parser.h"
#include "ncwb/rewrite.h"

using namespace ncwb::rewrite;
using ncwb::Error;
using ncwb::parser::parse_poly;
using ncwb::scalar::CycloField;
using ncwb::scalar::CycloScalar;

namespace freealg = ncwb::freealg;
static const auto *Q = CycloField::get(1);

namespace {

Presentation vn_pres(int n)
{
	Presentation p;
	std::vector<std::string> names;
	for (int i = 1; i <= n; ++i)
		names.push_back("x" + std::to_string(i));
	p.gens = freealg::Gens::make(names);
	p.order.prec.resize(n);
	for (int i = 0; i < n; ++i)
		p.order.prec[i] = n - 1 - i; // x_n greatest: sorted normal forms
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			p.relations.push_back(freealg::FreePoly::word(p.gens, {i, j}) +
			                      freealg::FreePoly::word(p.gens, {j, i}));
	return p;
}

size_t count_basis(const RewriteSystem &rs, int d)
{
	// count irreducible words of degree d by extension from degree d-1
	std::vector<freealg::Word> cur{{}};
	for (int k = 1; k <= d; ++k) {
		std::vector<freealg::Word> next;
		for (const auto &w : cur)
			for (size_t g = 0; g < rs.gens()->count(); ++g) {
				freealg::Word w2 = w;
				w2.push_back(static_cast<int>(g));
				if (!rs.lead_is_suffix(w2))
					next.push_back(std::move(w2));
			}
		cur = std::move(next);
	}
	return cur.size();
}

} // namespace

TEST_CASE("V_3 completes with no new rules")
{
	RewriteSystem rs = complete(vn_pres(3), 6);
	CHECK(rs.rules().size() == 3);
	for (const auto &rec : rs.certificate())
		CHECK(rec.resolved);
	// PBW count C(n+d-1, d)
	CHECK(count_basis(rs, 2) == 6);
	CHECK(count_basis(rs, 3) == 10);
	CHECK(count_basis(rs, 6) == 28);
	// x2*x1 -> -x1*x2
	auto g = rs.gens();
	CHECK(rs.normal_form(parse_poly("x2*x1", g, Q)) == parse_poly("-x1*x2", g, Q));
}

TEST_CASE("completion adds rules from overlaps")
{
	// x^2 -> x y spawns the infinite family x y^k x -> x y^{k+1}
	Presentation p;
	p.gens = freealg::Gens::make({"x", "y"});
	p.relations.push_back(parse_poly("x^2 - x*y", p.gens, Q));
	RewriteSystem rs = complete(p, 5);
	CHECK(rs.rules().size() == 4); // x^2, xyx, xy^2x, xy^3x
	bool found = false;
	for (const auto &r : rs.rules())
		if (r.lead == freealg::Word{0, 1, 0})
			found = true;
	CHECK(found);
	// basis: words with at most one x
	for (int d = 1; d <= 5; ++d)
		CHECK(count_basis(rs, d) == static_cast<size_t>(d + 1));
}

TEST_CASE("confluence audit on final rules")
{
	Presentation p;
	p.gens = freealg::Gens::make({"x", "y"});
	p.relations.push_back(parse_poly("x^2 - x*y", p.gens, Q));
	RewriteSystem rs = complete(p, 5);
	// reduce every overlap word of the final system both ways
	for (size_t i = 0; i < rs.rules().size(); ++i)
		for (size_t j = 0; j < rs.rules().size(); ++j) {
			const auto &la = rs.rules()[i].lead, &lb = rs.rules()[j].lead;
			for (size_t k = 1; k < la.size() && k < lb.size(); ++k) {
				bool match = true;
				for (size_t t = 0; t < k; ++t)
					if (la[la.size() - k + t] != lb[t])
						match = false;
				if (!match)
					continue;
				freealg::Word u = la;
				u.insert(u.end(), lb.begin() + k, lb.end());
				if (static_cast<int>(u.size()) > rs.bound())
					continue;
				auto left = rs.rules()[i].tail *
				            freealg::FreePoly::word(
				                rs.gens(), freealg::Word(u.begin() + la.size(), u.end()));
				auto right = freealg::FreePoly::word(
				                 rs.gens(),
				                 freealg::Word(u.begin(), u.end() - lb.size())) *
				             rs.rules()[j].tail;
				CHECK(rs.normal_form(left) == rs.normal_form(right));
			}
		}
}

TEST_CASE("normal form is idempotent and linear")
{
	RewriteSystem rs = complete(vn_pres(3), 6);
	auto g = rs.gens();
	auto p = parse_poly("x3*x2*x1 + 2*x2*x1 - x1*x3", g, Q);
	auto q = parse_poly("x2*x3*x1 - x3^2", g, Q);
	CHECK(rs.normal_form(rs.normal_form(p)) == rs.normal_form(p));
	CHECK(rs.normal_form(p + q) == rs.normal_form(p) + rs.normal_form(q));
}

TEST_CASE("filtered W_2")
{
	Presentation p;
	p.gens = freealg::Gens::make({"x1", "x2"});
	p.order.prec = {1, 0};
	p.graded = false;
	p.relations.push_back(parse_poly("x1*x2 + x2*x1 - 1", p.gens, Q));
	RewriteSystem rs = complete(p, 4);
	CHECK(rs.rules().size() == 1);
	CHECK(rs.normal_form(parse_poly("x2*x1", p.gens, Q)) ==
	      parse_poly("1 - x1*x2", p.gens, Q));
	// x2 x1^2 = (1 - x1 x2) x1 = x1 - x1 (1 - x1 x2) = x1^2 x2
	CHECK(rs.normal_form(parse_poly("x2*x1^2", p.gens, Q)) ==
	      parse_poly("x1^2*x2", p.gens, Q));
}

TEST_CASE("graded mode rejects inhomogeneous relations")
{
	Presentation p;
	p.gens = freealg::Gens::make({"x", "y"});
	p.relations.push_back(parse_poly("x*y - x", p.gens, Q));
	CHECK_THROWS_AS(complete(p, 4), Error);
}

TEST_CASE("degree bound enforced")
{
	RewriteSystem rs = complete(vn_pres(2), 3);
	auto g = rs.gens();
	CHECK_THROWS_AS(rs.normal_form(parse_poly("x1^4", g, Q)), Error);
}
