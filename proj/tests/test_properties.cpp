// standalone property suites: rewriting idempotence and confluence audits,
// skew-product associativity, action homomorphism laws, Molien integrality
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncwb/series.h"
#include "ncwb/skew.h"
#include <random>

using namespace ncwb;
using action::ActionGroup;
using action::GradedAutomorphism;
using algebra::QuotientAlgebra;
using freealg::FreePoly;
using freealg::Word;
using scalar::CycloScalar;

namespace {

std::mt19937 rng(20240817); // fixed seed: failures must be reproducible

CycloScalar rand_scalar()
{
	std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
	return CycloScalar(mpq_class(num(rng), den(rng)));
}

FreePoly rand_poly(const QuotientAlgebra &a, int max_len)
{
	std::uniform_int_distribution<int> nterms(1, 3), len(0, max_len),
	    letter(0, static_cast<int>(a.ngens()) - 1);
	FreePoly p(a.gens());
	for (int t = nterms(rng); t > 0; --t) {
		Word w;
		for (int l = len(rng); l > 0; --l)
			w.push_back(letter(rng));
		p.add_term(w, rand_scalar());
	}
	return p;
}

ActionGroup perm_group(const QuotientAlgebra &a, const std::vector<std::string> &cycles)
{
	std::vector<GradedAutomorphism> gens;
	for (const auto &c : cycles)
		gens.push_back(action::permutation_automorphism(c, a));
	return action::group_closure(gens);
}

FreePoly word_poly(const QuotientAlgebra &a, const Word &w)
{
	FreePoly p(a.gens());
	p.add_term(w, CycloScalar(1));
	return p;
}

// replay every recorded overlap against the finished system: each in-bound
// S-polynomial must reduce to zero
void audit_confluence(const QuotientAlgebra &a)
{
	const auto &rs = a.rewriting();
	const auto &rules = rs.rules();
	size_t checked = 0;
	for (const auto &rec : rs.certificate()) {
		if (static_cast<int>(rec.word.size()) > rs.bound())
			continue;
		const auto &ra = rules[rec.rule_a];
		const auto &rb = rules[rec.rule_b];
		Word suffix(rec.word.begin() + static_cast<long>(ra.lead.size()), rec.word.end());
		Word prefix(rec.word.begin(), rec.word.begin() + static_cast<long>(rec.offset));
		FreePoly s = ra.tail * word_poly(a, suffix) - word_poly(a, prefix) * rb.tail;
		CHECK(rs.normal_form(s).is_zero());
		++checked;
	}
	CHECK(checked > 0);
}

} // namespace

TEST_CASE("rewriting: normal form is idempotent and multiplicative")
{
	auto v3 = QuotientAlgebra::vn(3, 12);
	auto skl = QuotientAlgebra::sklyanin(CycloScalar(1), CycloScalar(1),
	                                     CycloScalar(-1), 12);
	for (const auto *a : {&v3, &skl}) {
		for (int trial = 0; trial < 100; ++trial) {
			FreePoly p = rand_poly(*a, 3), q = rand_poly(*a, 3);
			FreePoly np = a->normal_form(p);
			CHECK(a->normal_form(np) == np);
			CHECK(a->normal_form(p * q) ==
			      a->normal_form(np * a->normal_form(q)));
		}
	}
}

TEST_CASE("rewriting: completed systems resolve every recorded overlap")
{
	audit_confluence(QuotientAlgebra::vn(3, 10));
	audit_confluence(QuotientAlgebra::vn(4, 10));
	audit_confluence(QuotientAlgebra::sklyanin(CycloScalar(1), CycloScalar(1),
	                                           CycloScalar(-1), 10));
	audit_confluence(QuotientAlgebra::down_up(CycloScalar(-2), CycloScalar(-1), 10));
}

TEST_CASE("skew product is associative on 100 random triples")
{
	auto a = QuotientAlgebra::vn(3, 12);
	auto g = perm_group(a, {"(1 2)", "(2 3)"});
	std::uniform_int_distribution<size_t> sigma(0, g.size() - 1);
	auto rand_skew = [&] {
		skew::SkewElement e(a, g);
		std::uniform_int_distribution<int> nparts(1, 2);
		for (int k = nparts(rng); k > 0; --k)
			e += skew::SkewElement(a.normal_form(rand_poly(a, 2)), sigma(rng), a, g);
		return e;
	};
	for (int trial = 0; trial < 100; ++trial) {
		auto u = rand_skew(), v = rand_skew(), w = rand_skew();
		CHECK(skew::skew_mul(skew::skew_mul(u, v), w) ==
		      skew::skew_mul(u, skew::skew_mul(v, w)));
	}
}

TEST_CASE("action laws hold on 100 random pairs")
{
	auto a = QuotientAlgebra::vn(4, 12);
	auto g = perm_group(a, {"(1 2 3 4)", "(1 2)"});
	std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
	for (int trial = 0; trial < 100; ++trial) {
		size_t i = pick(rng), j = pick(rng);
		FreePoly p = a.normal_form(rand_poly(a, 3));
		FreePoly q = a.normal_form(rand_poly(a, 3));
		// algebra homomorphism
		CHECK(action::act(g.elem(i), a.normal_form(p * q)) ==
		      a.normal_form(action::act(g.elem(i), p) * action::act(g.elem(i), q)));
		// compatibility with the group law
		CHECK(action::act(g.elem(g.mul(i, j)), p) ==
		      action::act(g.elem(i), action::act(g.elem(j), p)));
	}
}

TEST_CASE("Molien coefficients are nonnegative integers")
{
	struct Case {
		QuotientAlgebra a;
		std::vector<std::string> cycles;
		int order;
	};
	auto check = [](const QuotientAlgebra &a, const ActionGroup &g, int order) {
		auto m = series::molien_hilbert(g, a, order); // internal cross-check too
		for (int d = 0; d <= order; ++d) {
			const auto &c = m.coeff(d);
			REQUIRE(c.is_rational());
			mpq_class v = c.rational();
			CHECK(v.get_den() == 1);
			CHECK(v >= 0);
		}
	};
	{
		auto a = QuotientAlgebra::vn(3, 10);
		check(a, perm_group(a, {"(1 2)", "(2 3)"}), 10);
		check(a, perm_group(a, {"(1 2 3)"}), 10);
	}
	{
		auto a = QuotientAlgebra::vn(4, 10);
		check(a, perm_group(a, {"(1 2)(3 4)", "(1 3)(2 4)"}), 10);
	}
}
