#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ncwb/skew.h"
#include "ncwb/parser.h"
#include <random>

using namespace ncwb::skew;
using ncwb::Error;
using ncwb::action::group_closure;
using ncwb::action::permutation_automorphism;
using ncwb::parser::parse_poly;
using ncwb::scalar::CycloField;
using ncwb::scalar::CycloScalar;
namespace freealg = ncwb::freealg;

static const auto *Q = CycloField::get(1);

static SkewElement rebuild(const Certificate &c, const SkewElement &f)
{
	const auto &a = f.algebra();
	SkewElement out(a, f.group());
	for (const auto &t : c.terms) {
		freealg::FreePoly l(a.gens()), r(a.gens());
		l.add_term(t.left, CycloScalar(1));
		r.add_term(t.right, CycloScalar(1));
		out += skew_mul(skew_mul(l, f), r) * t.coeff;
	}
	return out;
}

TEST_CASE("skew multiplication")
{
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 8);
	auto s2 = group_closure({permutation_automorphism("(1 2)", v2)});
	auto g = v2.gens();
	// (1#(1 2)) (x1#e) = x2#(1 2)
	SkewElement u(parse_poly("1", g, Q), 1, v2, s2);
	SkewElement v(parse_poly("x1", g, Q), 0, v2, s2);
	SkewElement expect(parse_poly("x2", g, Q), 1, v2, s2);
	CHECK(skew_mul(u, v) == expect);
	// degree bound enforced
	auto big = SkewElement(parse_poly("x1^5", g, Q), 0, v2, s2);
	CHECK_THROWS_AS(skew_mul(big, big), Error);
}

TEST_CASE("f_G construction and absorption")
{
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 8);
	auto triv = group_closure({ncwb::action::identity_automorphism(v3)});
	CHECK(make_fG(v3, triv).terms().size() == 1);
	auto s3 = group_closure(
	    {permutation_automorphism("(1 2)", v3), permutation_automorphism("(2 3)", v3)});
	auto f = make_fG(v3, s3);
	CHECK(f.terms().size() == 6);
	for (size_t s = 0; s < s3.size(); ++s) {
		SkewElement one(parse_poly("1", v3.gens(), Q), s, v3, s3);
		CHECK(skew_mul(one, f) == f);
		CHECK(skew_mul(f, one) == f);
	}
}

TEST_CASE("associativity on random triples")
{
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 12);
	auto s2 = group_closure({permutation_automorphism("(1 2)", v2)});
	std::mt19937 rng(7);
	auto rnd = [&]() {
		SkewElement e(v2, s2);
		for (int t = 0; t < 2; ++t) {
			freealg::Word w;
			for (size_t i = 0, k = rng() % 3; i < k; ++i)
				w.push_back(static_cast<int>(rng() % 2));
			std::sort(w.begin(), w.end());
			e.add_term(w, rng() % 2, CycloScalar(static_cast<long>(rng() % 5) - 2));
		}
		return e;
	};
	for (int t = 0; t < 40; ++t) {
		auto a = rnd(), b = rnd(), c = rnd();
		CHECK(skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c)));
	}
}

TEST_CASE("degree-1 slice for the transposition on V_2")
{
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 8);
	auto s2 = group_closure({permutation_automorphism("(1 2)", v2)});
	SliceEngine eng(v2, s2);
	CHECK(eng.dual_mode());
	const auto &s = eng.slice(1);
	REQUIRE(s.intersection.size() == 1);
	auto g = v2.gens();
	auto target = parse_poly("x1 - x2", g, Q);
	// basis vector is a scalar multiple of x1 - x2
	CHECK(eng.is_member(target));
	CHECK_FALSE(eng.is_member(parse_poly("x1", g, Q)));
	CHECK_FALSE(eng.is_member(parse_poly("x1 + x2", g, Q)));
	// certificate reassembles the target
	auto f = make_fG(v2, s2);
	auto cert = eng.certificate(target);
	REQUIRE(cert.has_value());
	CHECK(rebuild(*cert, f) == SkewElement(target, 0, v2, s2));
	CHECK_FALSE(eng.certificate(parse_poly("x1", g, Q)).has_value());
}

TEST_CASE("quotient dimension sequences")
{
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 8);
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 8);
	auto v4 = ncwb::algebra::QuotientAlgebra::vn(4, 8);
	auto s2 = group_closure({permutation_automorphism("(1 2)", v2)});
	CHECK(quotient_dims(v2, s2, 6) == std::vector<size_t>{1, 1, 0, 0, 0, 0, 0});
	auto t12 = group_closure({permutation_automorphism("(1 2)", v3)});
	CHECK(quotient_dims(v3, t12, 6) == std::vector<size_t>{1, 2, 2, 2, 2, 2, 2});
	auto c3 = group_closure({permutation_automorphism("(1 2 3)", v3)});
	CHECK(quotient_dims(v3, c3, 6) == std::vector<size_t>{1, 3, 4, 4, 4, 4, 4});
	auto s3 = group_closure(
	    {permutation_automorphism("(1 2)", v3), permutation_automorphism("(2 3)", v3)});
	CHECK(quotient_dims(v3, s3, 6) == std::vector<size_t>{1, 3, 6, 9, 10, 10, 10});
	auto klein = group_closure({permutation_automorphism("(1 2)(3 4)", v4),
	                            permutation_automorphism("(1 3)(2 4)", v4)});
	CHECK(quotient_dims(v4, klein, 6) == std::vector<size_t>{1, 4, 9, 9, 3, 0, 0});
	auto frank = group_closure({permutation_automorphism("(1 2)(3 4)", v4)});
	CHECK(quotient_dims(v4, frank, 4) == std::vector<size_t>{1, 2, 1, 0, 0});
	auto c4 = group_closure({permutation_automorphism("(1 2 3 4)", v4)});
	CHECK(quotient_dims(v4, c4, 6) == std::vector<size_t>{1, 4, 9, 10, 4, 0, 0});
}

TEST_CASE("sum of squares lies in the Klein-4 ideal")
{
	auto v4 = ncwb::algebra::QuotientAlgebra::vn(4, 8);
	auto klein = group_closure({permutation_automorphism("(1 2)(3 4)", v4),
	                            permutation_automorphism("(1 3)(2 4)", v4)});
	SliceEngine eng(v4, klein);
	auto r = parse_poly("x1^2 + x2^2 + x3^2 + x4^2", v4.gens(), Q);
	CHECK(eng.is_member(r));
	auto cert = eng.certificate(r);
	REQUIRE(cert.has_value());
	CHECK(rebuild(*cert, make_fG(v4, klein)) == SkewElement(r, 0, v4, klein));
}

TEST_CASE("weighted group with scale entries")
{
	auto v4 = ncwb::algebra::QuotientAlgebra::vn(4, 6);
	std::vector<ncwb::matrix::Vec> neg(4, ncwb::matrix::Vec(4, CycloScalar()));
	for (size_t i = 0; i < 4; ++i)
		neg[i][i] = CycloScalar(-1);
	auto wk = group_closure({ncwb::action::automorphism_from_matrix(neg, v4, "-I"),
	                         permutation_automorphism("(1 3)(2 4)", v4)});
	REQUIRE(wk.size() == 4);
	CHECK(quotient_dims(v4, wk, 4) == std::vector<size_t>{1, 4, 8, 0, 0});
}

TEST_CASE("subgroup monotonicity of quotient dims")
{
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 8);
	auto t12 = group_closure({permutation_automorphism("(1 2)", v3)});
	auto s3 = group_closure(
	    {permutation_automorphism("(1 2)", v3), permutation_automorphism("(2 3)", v3)});
	auto big = quotient_dims(v3, s3, 8), small = quotient_dims(v3, t12, 8);
	for (size_t d = 0; d < big.size(); ++d)
		CHECK(big[d] >= small[d]);
}

TEST_CASE("filtered algebras are rejected")
{
	auto w2 = ncwb::algebra::QuotientAlgebra::wn(2, 6);
	auto s2 = group_closure({permutation_automorphism("(1 2)", w2)});
	CHECK_THROWS_WITH_AS(SliceEngine(w2, s2), doctest::Contains("filtered"), Error);
}

TEST_CASE("primal engine on a non-monomial algebra")
{
	auto s = ncwb::algebra::QuotientAlgebra::sklyanin(CycloScalar(1), CycloScalar(2),
	                                                  CycloScalar(3), 6);
	auto c3 = group_closure({permutation_automorphism("(1 2 3)", s)});
	SliceEngine eng(s, c3);
	CHECK_FALSE(eng.dual_mode());
	auto f = make_fG(s, c3);
	CHECK(eng.is_member(f));
	auto x1 = parse_poly("x1", s.gens(), Q), x2 = parse_poly("x2", s.gens(), Q);
	auto prod = skew_mul(skew_mul(x1, f), x2);
	CHECK(eng.is_member(prod));
	auto cert = eng.certificate(prod);
	REQUIRE(cert.has_value());
	CHECK(rebuild(*cert, f) == prod);
	// ambient dims sane: quotient never exceeds dim A_d
	auto dims = eng.quotient_dims(4);
	for (int d = 0; d <= 4; ++d)
		CHECK(dims[static_cast<size_t>(d)] <= s.hilbert_function(d));
}
