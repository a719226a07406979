#pragma once
#include "ncwb/error.h"
#include <gmpxx.h>
#include <string>
#include <vector>

namespace ncwb::scalar {

// The cyclotomic field Q(zeta_m). Instances are interned: get(m) always
// returns the same pointer for the same m, so field identity is pointer
// identity. m=1 is plain Q.
class CycloField {
public:
	static const CycloField *get(long m);

	long order() const { return m_; }
	long degree() const { return static_cast<long>(modulus_.size()) - 1; } // phi(m)
	// monic cyclotomic polynomial Phi_m, coefficient k of x^k at index k
	const std::vector<mpq_class> &modulus() const { return modulus_; }

private:
	explicit CycloField(long m);
	long m_;
	std::vector<mpq_class> modulus_;
};

// Element of Q(zeta_m): polynomial in zeta of degree < phi(m), exact
// rational coefficients, always reduced modulo Phi_m.
class CycloScalar {
public:
	CycloScalar() : field_(CycloField::get(1)), coeff_(1, mpq_class(0)) {}
	CycloScalar(long v) : CycloScalar(mpq_class(v)) {}
	CycloScalar(const mpq_class &v) : field_(CycloField::get(1)), coeff_(1, v) {
		coeff_[0].canonicalize();
	}
	// zero element of a given field
	explicit CycloScalar(const CycloField *f)
	    : field_(f), coeff_(static_cast<size_t>(f->degree()), mpq_class(0)) {}
	// from raw coefficient vector (length <= phi(m); reduced as given)
	CycloScalar(const CycloField *f, std::vector<mpq_class> c);

	// primitive k-th root of unity, living in Q(zeta_m) with k | m
	static CycloScalar root_of_unity(const CycloField *f, long k);
	static CycloScalar zeta(const CycloField *f) { return root_of_unity(f, f->order()); }

	const CycloField *field() const { return field_; }
	const std::vector<mpq_class> &coeff() const { return coeff_; }

	bool is_zero() const;
	bool is_rational() const;
	// requires is_rational()
	mpq_class rational() const;

	// embed into Q(zeta_M) where order() divides M
	CycloScalar lift(const CycloField *target) const;

	CycloScalar operator-() const;
	CycloScalar operator+(const CycloScalar &o) const;
	CycloScalar operator-(const CycloScalar &o) const;
	CycloScalar operator*(const CycloScalar &o) const;
	CycloScalar inv() const; // throws on zero
	CycloScalar operator/(const CycloScalar &o) const { return *this * o.inv(); }
	CycloScalar &operator+=(const CycloScalar &o) { return *this = *this + o; }
	CycloScalar &operator-=(const CycloScalar &o) { return *this = *this - o; }
	CycloScalar &operator*=(const CycloScalar &o) { return *this = *this * o; }
	bool operator==(const CycloScalar &o) const;
	bool operator!=(const CycloScalar &o) const { return !(*this == o); }

	// galois conjugate zeta -> zeta^k, gcd(k, m) = 1; k = -1 gives complex conjugation
	CycloScalar galois(long k) const;

	// literal syntax: signed rational terms in z, e.g. "-1/3*z^2 + z + 2".
	// parse also accepts zeta(k) tokens (k must divide the field order).
	std::string str() const;
	static CycloScalar parse(const std::string &text, const CycloField *f);

private:
	const CycloField *field_;
	std::vector<mpq_class> coeff_; // length phi(m)
};

long euler_phi(long m);

// smallest field containing both operands' fields must be the larger one:
// binary ops lift automatically when one order divides the other, else throw.
} // namespace ncwb::scalar
