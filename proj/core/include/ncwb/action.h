#pragma once
#include "ncwb/algebra.h"
#include "ncwb/matrix.h"

namespace ncwb::action {

using algebra::QuotientAlgebra;
using algebra::TwistResult;
using freealg::FreePoly;
using freealg::Word;
using matrix::Vec;
using scalar::CycloScalar;

// invertible matrix on the degree-1 generators, extended multiplicatively.
// Column convention: g(x_j) = sum_i M[i][j] x_i.
class GradedAutomorphism {
public:
	const std::vector<Vec> &mat() const { return mat_; }
	const std::string &label() const { return label_; }
	const QuotientAlgebra *algebra() const { return algebra_; }
	size_t dim() const { return mat_.size(); }

	// signed-monomial fast path: g(x_i) = scale[i] * x_{perm[i]}
	bool monomial() const { return monomial_; }
	const std::vector<int> &perm() const { return perm_; }
	const std::vector<CycloScalar> &scale() const { return scale_; }

	bool operator==(const GradedAutomorphism &o) const { return mat_ == o.mat_; }

	friend GradedAutomorphism automorphism_from_matrix(std::vector<Vec> m,
	                                                   const QuotientAlgebra &a,
	                                                   std::string label);

private:
	std::vector<Vec> mat_;
	std::string label_;
	const QuotientAlgebra *algebra_ = nullptr;
	bool monomial_ = false;
	std::vector<int> perm_;
	std::vector<CycloScalar> scale_;
};

// validates invertibility and that every defining relation maps to 0 in
// normal form; throws with the offending relation otherwise
GradedAutomorphism automorphism_from_matrix(std::vector<Vec> m, const QuotientAlgebra &a,
                                            std::string label = "");

// permutation automorphism from cycle notation, e.g. "(1 2)(3 4)"
GradedAutomorphism permutation_automorphism(const std::string &cycles,
                                            const QuotientAlgebra &a);
std::vector<int> parse_cycles(const std::string &text, size_t n);

// apply g to p (algebra homomorphism, result in normal form)
FreePoly act(const GradedAutomorphism &g, const FreePoly &p);
// action on a basis word: returns the image as a FreePoly
FreePoly act_word(const GradedAutomorphism &g, const Word &w);

GradedAutomorphism compose(const GradedAutomorphism &g, const GradedAutomorphism &h);
GradedAutomorphism inverse(const GradedAutomorphism &g);
GradedAutomorphism identity_automorphism(const QuotientAlgebra &a);

// finite closure with multiplication table; element 0 is the identity
class ActionGroup {
public:
	const QuotientAlgebra &algebra() const { return *alg_; }
	size_t size() const { return elems_.size(); }
	const GradedAutomorphism &elem(size_t i) const { return elems_[i]; }
	const std::vector<GradedAutomorphism> &elems() const { return elems_; }
	size_t mul(size_t i, size_t j) const { return table_[i][j]; }
	size_t inv(size_t i) const { return inv_[i]; }
	size_t identity() const { return 0; }
	// index of g in the element list; throws if absent
	size_t index_of(const GradedAutomorphism &g) const;
	bool contains(const GradedAutomorphism &g) const;
	// true iff every element of h is an element of this group
	bool has_subgroup(const ActionGroup &h) const;
	// all elements are signed-monomial maps
	bool monomial() const;

	friend ActionGroup group_closure(const std::vector<GradedAutomorphism> &gens,
	                                 size_t cap);

private:
	const QuotientAlgebra *alg_ = nullptr;
	std::vector<GradedAutomorphism> elems_;
	std::vector<std::vector<size_t>> table_;
	std::vector<size_t> inv_;
};

ActionGroup group_closure(const std::vector<GradedAutomorphism> &gens, size_t cap = 10000);

// G x H acting block-diagonally on the sign-twisted tensor; verifies the
// twist-compatibility condition on degree-1 tensor pairs
ActionGroup product_action(const ActionGroup &g, const ActionGroup &h, const TwistResult &t);

} // namespace ncwb::action
