#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ncwb/action.h"
#include "ncwb/parser.h"
#include <random>

using namespace ncwb::action;
using ncwb::Error;
using ncwb::parser::parse_poly;
using ncwb::scalar::CycloField;
using ncwb::scalar::CycloScalar;
namespace freealg = ncwb::freealg;

static const auto *Q = CycloField::get(1);

static std::vector<Vec> diag(std::initializer_list<CycloScalar> d)
{
	std::vector<Vec> m(d.size(), Vec(d.size(), CycloScalar()));
	size_t i = 0;
	for (const auto &x : d) {
		m[i][i] = x;
		++i;
	}
	return m;
}

TEST_CASE("permutation automorphisms on V_n")
{
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 6);
	auto s = permutation_automorphism("(1 2 3)", v3);
	CHECK(s.monomial());
	// (1 2) on x1 x2 -> x2 x1 -> -x1 x2
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 6);
	auto t = permutation_automorphism("(1 2)", v2);
	CHECK(act(t, parse_poly("x1*x2", v2.gens(), Q)) == parse_poly("-x1*x2", v2.gens(), Q));
}

TEST_CASE("diagonal and sign actions")
{
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 6);
	// M(a,b) = diag(a, b, ab) with a=2, b=3: x1 x2 -> 6 x1 x2
	auto m = automorphism_from_matrix(diag({CycloScalar(2), CycloScalar(3), CycloScalar(6)}),
	                                  v3, "M(2,3)");
	CHECK(act(m, parse_poly("x1*x2", v3.gens(), Q)) == parse_poly("6*x1*x2", v3.gens(), Q));
	// negation on degree 3 flips sign
	auto v4 = ncwb::algebra::QuotientAlgebra::vn(4, 6);
	auto neg = automorphism_from_matrix(
	    diag({CycloScalar(-1), CycloScalar(-1), CycloScalar(-1), CycloScalar(-1)}), v4, "-I");
	CHECK(act(neg, parse_poly("x1*x2*x3", v4.gens(), Q)) ==
	      parse_poly("-x1*x2*x3", v4.gens(), Q));
}

TEST_CASE("relation preservation is enforced")
{
	auto s = ncwb::algebra::QuotientAlgebra::sklyanin(CycloScalar(1), CycloScalar(1),
	                                                  CycloScalar(-1), 4);
	CHECK_THROWS_WITH_AS(
	    automorphism_from_matrix(diag({CycloScalar(1), CycloScalar(2), CycloScalar(1)}), s, ""),
	    doctest::Contains("does not preserve relation"), Error);
	// singular matrix rejected
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 4);
	std::vector<Vec> zero(2, Vec(2, CycloScalar()));
	CHECK_THROWS_WITH_AS(automorphism_from_matrix(zero, v2, ""),
	                     doctest::Contains("singular"), Error);
}

TEST_CASE("group closure")
{
	auto v4 = ncwb::algebra::QuotientAlgebra::vn(4, 6);
	auto a = permutation_automorphism("(1 2)(3 4)", v4);
	auto b = permutation_automorphism("(1 3)(2 4)", v4);
	auto klein = group_closure({a, b});
	CHECK(klein.size() == 4);
	CHECK(klein.monomial());
	// weighted Klein group of the V_4 example: <-I, (1 3)(2 4)>
	auto neg = automorphism_from_matrix(
	    diag({CycloScalar(-1), CycloScalar(-1), CycloScalar(-1), CycloScalar(-1)}), v4, "-I");
	auto wk = group_closure({neg, b});
	CHECK(wk.size() == 4);
	// infinite group hits the cap
	auto v2 = ncwb::algebra::QuotientAlgebra::vn(2, 4);
	auto bad = automorphism_from_matrix(
	    diag({CycloScalar(2), CycloScalar(mpq_class(1, 2))}), v2, "");
	CHECK_THROWS_WITH_AS(group_closure({bad}, 64), doctest::Contains("cap"), Error);
	// closure of a closed set is the same set
	auto again = group_closure(klein.elems(), 10);
	CHECK(again.size() == 4);
	for (const auto &e : klein.elems())
		CHECK(again.contains(e));
}

TEST_CASE("multiplication table and inverses")
{
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 6);
	auto s3 = group_closure(
	    {permutation_automorphism("(1 2)", v3), permutation_automorphism("(2 3)", v3)});
	CHECK(s3.size() == 6);
	for (size_t i = 0; i < s3.size(); ++i) {
		CHECK(s3.mul(i, s3.inv(i)) == s3.identity());
		CHECK(s3.mul(s3.identity(), i) == i);
	}
	// compose against the table
	for (size_t i = 0; i < s3.size(); ++i)
		for (size_t j = 0; j < s3.size(); ++j)
			CHECK(compose(s3.elem(i), s3.elem(j)) == s3.elem(s3.mul(i, j)));
}

TEST_CASE("action is a homomorphism")
{
	auto v3 = ncwb::algebra::QuotientAlgebra::vn(3, 8);
	auto g1 = permutation_automorphism("(1 2 3)", v3);
	auto g2 = permutation_automorphism("(1 2)", v3);
	std::mt19937 rng(5);
	auto g = v3.gens();
	auto rnd = [&]() {
		freealg::FreePoly p(g);
		for (int t = 0; t < 2; ++t) {
			freealg::Word w;
			for (size_t i = 0, k = rng() % 4; i < k; ++i)
				w.push_back(static_cast<int>(rng() % 3));
			p.add_term(w, CycloScalar(static_cast<long>(rng() % 5) - 2));
		}
		return v3.normal_form(p);
	};
	for (int t = 0; t < 50; ++t) {
		auto p = rnd(), q = rnd();
		CHECK(act(compose(g1, g2), p) == act(g1, act(g2, p)));
		CHECK(act(g1, v3.mul(p, q)) == v3.mul(act(g1, p), act(g1, q)));
	}
	auto p = rnd();
	CHECK(act(inverse(g1), act(g1, p)) == p);
	CHECK(act(g1, act(inverse(g1), p)) == p);
}

TEST_CASE("product action on the twisted tensor")
{
	auto v4 = ncwb::algebra::QuotientAlgebra::vn(4, 4);
	auto t = ncwb::algebra::sign_twist_tensor(v4, v4);
	auto c4 = group_closure({permutation_automorphism("(1 2 3 4)", v4)});
	CHECK(c4.size() == 4);
	auto prod = product_action(c4, c4, t);
	CHECK(prod.size() == 16);
	CHECK(prod.algebra().ngens() == 8);
	// trivial x trivial
	auto triv = group_closure({identity_automorphism(v4)});
	CHECK(product_action(triv, triv, t).size() == 1);
	// G x {e} is a copy of G acting on the first block
	auto left = product_action(c4, triv, t);
	CHECK(left.size() == 4);
	for (const auto &e : left.elems())
		for (size_t i = 0; i < 4; ++i)
			for (size_t j = 0; j < 4; ++j)
				CHECK(e.mat()[4 + i][4 + j] ==
				      (i == j ? CycloScalar(1) : CycloScalar()));
}
