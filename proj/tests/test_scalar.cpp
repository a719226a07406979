#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ncwb/scalar.h"
#include <random>

using namespace ncwb::scalar;
using ncwb::Error;

TEST_CASE("cyclotomic polynomial construction")
{
	// Phi_1 = x - 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_12 = x^4 - x^2 + 1
	CHECK(CycloField::get(1)->degree() == 1);
	CHECK(CycloField::get(3)->degree() == 2);
	CHECK(CycloField::get(4)->degree() == 2);
	CHECK(CycloField::get(12)->degree() == 4);
	auto m12 = CycloField::get(12)->modulus();
	CHECK(m12[0] == 1);
	CHECK(m12[1] == 0);
	CHECK(m12[2] == -1);
	CHECK(m12[3] == 0);
	CHECK(m12[4] == 1);
	CHECK(euler_phi(60) == 16);
}

TEST_CASE("cyclotomic relations")
{
	const auto *f3 = CycloField::get(3);
	CycloScalar z = CycloScalar::zeta(f3);
	// z^2 + z + 1 = 0
	CHECK((z * z + z + CycloScalar(1)).is_zero());
	// (1 - z)(1 - z^2) = 3
	CycloScalar v = (CycloScalar(1) - z) * (CycloScalar(1) - z * z);
	CHECK(v.is_rational());
	CHECK(v.rational() == 3);
	// z^3 = 1
	CHECK((z * z * z) == CycloScalar(1));
}

TEST_CASE("rational arithmetic")
{
	CycloScalar a(mpq_class(2, 3)), b(mpq_class(1, 6));
	CHECK((a + b).rational() == mpq_class(5, 6));
	CHECK((a * b).rational() == mpq_class(1, 9));
	CHECK(a.inv().rational() == mpq_class(3, 2));
}

TEST_CASE("inverse in Q(zeta)")
{
	const auto *f5 = CycloField::get(5);
	CycloScalar z = CycloScalar::zeta(f5);
	CycloScalar x = z * z + CycloScalar(2) * z + CycloScalar(mpq_class(1, 3));
	CHECK((x * x.inv()) == CycloScalar(1));
	CHECK_THROWS_AS(CycloScalar(f5).inv(), Error);
}

TEST_CASE("lift and mixed-order arithmetic")
{
	const auto *f3 = CycloField::get(3);
	const auto *f12 = CycloField::get(12);
	CycloScalar z3 = CycloScalar::zeta(f3);
	CycloScalar lifted = z3.lift(f12);
	CHECK((lifted * lifted * lifted) == CycloScalar(1));
	// primitive: lifted != 1
	CHECK(lifted != CycloScalar(1));
	// mixed arithmetic lifts automatically
	CycloScalar i = CycloScalar::root_of_unity(f12, 4);
	CHECK((i * i) == CycloScalar(-1));
	CHECK((z3 + i).field()->order() == 12);
	// incompatible orders throw
	CHECK_THROWS_AS(CycloScalar::zeta(CycloField::get(5)) + z3, Error);
}

TEST_CASE("field axioms on random elements")
{
	const auto *f = CycloField::get(8);
	std::mt19937 rng(42);
	auto rnd = [&]() {
		std::vector<mpq_class> c;
		for (long i = 0; i < f->degree(); ++i)
			c.emplace_back(static_cast<long>(rng() % 11) - 5,
			               static_cast<long>(rng() % 4) + 1);
		return CycloScalar(f, std::move(c));
	};
	for (int t = 0; t < 25; ++t) {
		CycloScalar x = rnd(), y = rnd(), z = rnd();
		CHECK(((x + y) + z) == (x + (y + z)));
		CHECK((x * (y + z)) == (x * y + x * z));
		CHECK(((x * y) * z) == (x * (y * z)));
		if (!x.is_zero())
			CHECK((x * x.inv()) == CycloScalar(1));
	}
}

TEST_CASE("galois conjugation")
{
	const auto *f5 = CycloField::get(5);
	CycloScalar z = CycloScalar::zeta(f5);
	CycloScalar x = z * z + CycloScalar(7);
	// conjugation by k=-1 is an involution
	CHECK(x.galois(-1).galois(-1) == x);
	// norm-like product of all conjugates of z is rational
	CycloScalar prod = z.galois(1) * z.galois(2) * z.galois(3) * z.galois(4);
	CHECK(prod.is_rational());
	CHECK(prod.rational() == 1);
}

TEST_CASE("literal round trip")
{
	// use m=7 (phi=6) so z^2 is already canonical
	const auto *f7 = CycloField::get(7);
	CycloScalar w = CycloScalar::zeta(f7);
	CycloScalar y = w * w * CycloScalar(mpq_class(-1, 3)) + w + CycloScalar(2);
	CHECK(y.str() == "-1/3*z^2 + z + 2");
	CHECK(CycloScalar::parse(y.str(), f7) == y);
	const auto *f3 = CycloField::get(3);
	CycloScalar z = CycloScalar::zeta(f3);
	CycloScalar x = z * z * CycloScalar(mpq_class(-1, 3)) + z + CycloScalar(2);
	// in Q(zeta_3) the same literal parses and re-prints canonically
	CHECK(CycloScalar::parse("-1/3*z^2 + z + 2", f3) == x);
	CHECK(CycloScalar::parse(x.str(), f3) == x);
	CHECK(CycloScalar::parse("zeta(3)^2*2 + 1/2", f3) ==
	      z * z * CycloScalar(2) + CycloScalar(mpq_class(1, 2)));
	for (const char *lit : {"0", "1", "-1", "5/3", "z", "-z", "2*z^2 - z", "z - 1/7"}) {
		CycloScalar v = CycloScalar::parse(lit, f3);
		CHECK(CycloScalar::parse(v.str(), f3) == v);
	}
	CHECK_THROWS_AS(CycloScalar::parse("z +", f3), Error);
	CHECK_THROWS_AS(CycloScalar::parse("1/0", f3), Error);
}
