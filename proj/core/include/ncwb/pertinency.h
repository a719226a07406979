#pragma once
#include "ncwb/commutative.h"
#include "ncwb/skew.h"

namespace ncwb::pertinency {

using action::ActionGroup;
using algebra::QuotientAlgebra;

// p(A, G) = GKdim A - GKdim (A#G)/(f_G). The lower bound p >= 2 is certified
// through the central subalgebra T = k[x_1^2, ..., x_n^2]: each pairwise
// elimination chain lands h_{i,j} in (f) cap T, and the substitution test
// shows their sum is relatively prime to the Vandermonde product, forcing
// GKdim of the quotient down by two.

struct Pgeq2Certificate {
	bool ok = false;
	std::string failure;                  // first failing step, when !ok
	std::vector<std::string> lines;       // per-pair membership notes
	commutative::RelPrimeReport primality;
};

// A must be the skew preset V_n or the Sklyanin preset with central squares
// (S(1,1,-1)); G a group of permutation automorphisms. When use_oracle is
// set every chain step is cross-checked by the degree-slice membership test.
Pgeq2Certificate certify_p_geq_2(const QuotientAlgebra &a, const ActionGroup &g,
                                 bool use_oracle = false);

struct FiniteDimReport {
	bool finite = false;
	std::vector<size_t> dims;  // quotient slice dims 0..D
	int cutoff = -1;           // first degree with a zero slice
	size_t total_dimension = 0;
	int exact_p = -1;          // = GKdim A when finite (graded propagation)
};
FiniteDimReport finite_dim_check(const QuotientAlgebra &a, const ActionGroup &g, int max_degree);

struct MonotonicityReport {
	bool ok = false;
	std::vector<size_t> group_dims;
	std::vector<size_t> subgroup_dims;
	std::vector<int> violations; // degrees where the inequality fails (bug trap)
};
// checks dim(A/((f_G) cap A))_d >= dim(A/((f_H) cap A))_d for H <= G, d <= D
MonotonicityReport monotonicity_check(const QuotientAlgebra &a, const ActionGroup &sub,
                                      const ActionGroup &grp, int max_degree);

enum class Growth { Zero, Bounded, Polynomial };
struct GrowthEstimate {
	Growth kind = Growth::Zero;
	int degree = 0; // finite-difference order with constant trailing window
	std::string str() const;
};
// classification of the trailing window by successive finite differences
GrowthEstimate gk_growth_estimate(const std::vector<size_t> &dims, size_t window);

enum class Conclusion { ExactGk, AtLeastTwo, EvidenceOnly };

struct PertinencyReport {
	std::string algebra_label;
	std::string group_label;
	int gkdim = -1;
	std::vector<size_t> dims;
	int lower_bound = 0;
	std::string certificate; // how the lower bound was certified
	Conclusion conclusion = Conclusion::EvidenceOnly;
	bool isolated_singularity = false;
	GrowthEstimate growth;

	// never names a value strictly between 2 and GKdim
	std::string conclusion_str() const;
	std::string json() const;
};

// finite-dimensionality first (exact p), then the p >= 2 certificate when the
// preset and action qualify, else evidence only
PertinencyReport pertinency_report(const QuotientAlgebra &a, const ActionGroup &g,
                                   int max_degree, std::string algebra_label = "",
                                   std::string group_label = "");

} // namespace ncwb::pertinency
