#pragma once
#include "ncwb/action.h"

namespace ncwb::skew {

using action::ActionGroup;
using algebra::QuotientAlgebra;
using freealg::FreePoly;
using freealg::Word;
using matrix::Vec;
using scalar::CycloScalar;

// element of the skew group algebra A#G: finitely supported map
// (normal-form word, group index) -> scalar
class SkewElement {
public:
	using Key = std::pair<Word, size_t>;

	SkewElement(const QuotientAlgebra &a, const ActionGroup &g) : alg_(&a), grp_(&g) {}
	// a # g_sigma
	SkewElement(const FreePoly &p, size_t sigma, const QuotientAlgebra &a,
	            const ActionGroup &g);

	const QuotientAlgebra &algebra() const { return *alg_; }
	const ActionGroup &group() const { return *grp_; }
	const std::map<Key, CycloScalar> &terms() const { return terms_; }

	bool is_zero() const { return terms_.empty(); }
	int max_degree() const;
	// terms of word degree d only
	SkewElement component(int d) const;
	// the A-coefficient sitting at group index sigma
	FreePoly poly_at(size_t sigma) const;

	void add_term(const Word &w, size_t sigma, const CycloScalar &c);

	SkewElement operator+(const SkewElement &o) const;
	SkewElement operator-(const SkewElement &o) const;
	SkewElement operator-() const;
	SkewElement operator*(const CycloScalar &c) const;
	SkewElement &operator+=(const SkewElement &o);
	bool operator==(const SkewElement &o) const;

	std::string str() const;

private:
	const QuotientAlgebra *alg_;
	const ActionGroup *grp_;
	std::map<Key, CycloScalar> terms_;
};

// (a#g)(b#h) = a g(b) # gh, bilinearly
SkewElement skew_mul(const SkewElement &u, const SkewElement &v);
// convenience: multiply by a#e on the chosen side
SkewElement skew_mul(const FreePoly &a, const SkewElement &v);
SkewElement skew_mul(const SkewElement &u, const FreePoly &b);

// f_G = sum over g of 1#g
SkewElement make_fG(const QuotientAlgebra &a, const ActionGroup &g);

// degree-d piece of the two-sided ideal (f_G) in A#G
struct IdealSlice {
	int degree = 0;
	size_t ambient_dim = 0;            // dim (A#G)_d
	size_t ideal_dim = 0;              // dim ((f_G))_d
	std::vector<FreePoly> intersection; // basis of ((f_G) cap A)_d
	size_t quotient_dim = 0;           // dim (A/((f_G) cap A))_d
};

// explicit membership witness: target = sum coeff * (left # e) f_G (right # e)
struct Certificate {
	struct Term {
		Word left;
		Word right;
		CycloScalar coeff;
	};
	std::vector<Term> terms;
};

// degree-by-degree computation of (f_G), cached per degree.
// Two engines behind one interface: an annihilator-propagation method for
// sign-monomial data (minus-one-skew algebra, signed-monomial group) whose
// state per degree is a basis of ((f_G)_d)^perp, and a generic row-space
// recursion I_d = A_1 I_{d-1} + I_{d-1} A_1 otherwise. Both are exact; the
// graded slice is the full degree-d piece of the ideal, so membership answers
// are exact for every element within the degree bound.
class SliceEngine {
public:
	SliceEngine(const QuotientAlgebra &a, const ActionGroup &g);

	const QuotientAlgebra &algebra() const { return *alg_; }
	const ActionGroup &group() const { return *grp_; }
	bool dual_mode() const { return dual_; }

	const IdealSlice &slice(int d);
	// componentwise membership of the target in (f_G); exact (graded ideal)
	bool is_member(const SkewElement &target);
	bool is_member(const FreePoly &target); // target # e
	// dim (A/((f_G) cap A))_d for d = 0..D
	std::vector<size_t> quotient_dims(int max_degree);

	// explicit sandwich certificate by tracked enumeration; nullopt when the
	// target is not a member or the row budget would be exceeded
	std::optional<Certificate> certificate(const SkewElement &target,
	                                       size_t max_rows = 20000);
	std::optional<Certificate> certificate(const FreePoly &target,
	                                       size_t max_rows = 20000);

private:
	void extend(int d);
	Vec coord_vec(const SkewElement &e, int d) const; // word-major layout
	const QuotientAlgebra *alg_;
	const ActionGroup *grp_;
	bool dual_;
	// dual: annihilator bases per degree (word-major coordinates);
	// primal: RREF bases of I_d (group-major coordinates, identity block last)
	std::vector<std::vector<Vec>> lambda_;
	std::vector<matrix::RowSpace> ideal_;
	std::vector<IdealSlice> slices_;
};

// one-shot wrappers
IdealSlice ideal_slice(const QuotientAlgebra &a, const ActionGroup &g, int d);
std::vector<size_t> quotient_dims(const QuotientAlgebra &a, const ActionGroup &g,
                                  int max_degree);

} // namespace ncwb::skew
