#pragma once
#include "ncwb/skew.h"

namespace ncwb::derivation {

using action::ActionGroup;
using algebra::QuotientAlgebra;
using skew::SkewElement;

// Derivation scripts: a line-oriented language for replaying element chains
// inside the two-sided ideal (f_G) of A#G.
//
//   let <name> = <expr>
//   assert <expr> == <expr>
//   assert_in_A <expr>       ; only the identity group component is nonzero
//   assert_nonzero <expr>
//   ; comment
//
// Expressions combine the generator polynomials, rational and root-of-unity
// scalars (zeta(k)), the element f (= sum of 1#g), and previously bound
// names with + - * / ^ and the postfix tag '# e' or '# <index>' attaching a
// group element. Every let-bound element must be built from f or earlier
// bound elements through ring operations, which certifies membership in
// (f_G) by construction; bare polynomials may appear only as factors or
// inside asserts.

struct DerivationStep {
	std::string name;
	std::string text;    // printed value
	int degree = -1;
	bool in_ideal = false;
};

struct DerivationReport {
	bool ok = true;
	std::string failure;           // first divergent step, when !ok
	std::vector<DerivationStep> steps;
	size_t asserts_checked = 0;
	// bound values in order, for downstream consumers of the chain results
	std::vector<std::pair<std::string, SkewElement>> values;
};

// interprets the script; when an oracle engine is supplied, every bound step
// is cross-checked against the linear-algebra membership test
DerivationReport run_derivation(const std::string &script, const QuotientAlgebra &a,
                                const ActionGroup &g,
                                const scalar::CycloField *field,
                                skew::SliceEngine *oracle = nullptr);

// Built-in chains. Each returns script text for the stated data.

// transposition chain on V_n (group must contain the swap of x_i and x_j):
// p_k = x_{a_k}^2 p_{k-1} - p_{k-1} x_{b_k}^2 over all index pairs except
// (i,j), then x_i p_m - p_m x_j collapses to an element of A of degree
// 2*binom(n,2) - 1
std::string transposition_chain(int n, int i, int j);

// Klein-type chain on V_4 for <(1 2)(3 4), (1 3)(2 4)>: derives the sum of
// squares, the elements (x_i - x_j)(x_i^2 + x_j^2), fourth-power relations,
// and the reduction of the squared sum to a single fourth power
std::string square_sum_chain(const ActionGroup &g);

// product-of-transpositions chain on V_{2n} for <(1 2)(3 4)...(2n-1 2n)>:
// degree-1 differences and generator squares
std::string pair_product_chain(int n);

// weighted-permutation chain on V_3 for a finite group of diagonal maps
// diag(a, b, ab) and antidiagonal maps swapping x_1, x_2; derives the
// central element built from the nontrivial weights
std::string diagonal_weight_chain(const ActionGroup &g);

// companion chain producing, for each irreducible factor of the element
// above, a member avoiding that factor; the sum is coprime to it
std::string coprime_witness_chain(const ActionGroup &g);

// chain on a Sklyanin algebra with the diagonal action
// (X, Y, Z) -> (zeta^2 X, zeta Y, Z): derives Y^2 # e and X^2 # e
std::string diagonal_sklyanin_chain();

// chain on V_4 for the group <-I, (1 3)(2 4)>: degree-2 and degree-3
// elements down to the cubes of the generators
std::string weighted_klein_chain(const ActionGroup &g);

} // namespace ncwb::derivation
