#pragma once
#include "ncwb/action.h"

namespace ncwb::series {

using action::ActionGroup;
using action::GradedAutomorphism;
using algebra::QuotientAlgebra;
using scalar::CycloScalar;

// dense univariate polynomial over the scalar field, coefficient of t^k at
// index k; trailing zeros trimmed by the helpers below
using Poly = std::vector<CycloScalar>;

std::string poly_str(const Poly &p);
CycloScalar poly_eval(const Poly &p, const CycloScalar &x);

// exact truncated power series c_0 + c_1 t + ... + c_N t^N
class TruncatedSeries {
public:
	explicit TruncatedSeries(int order)
	    : c_(static_cast<size_t>(order) + 1, CycloScalar()) {}
	explicit TruncatedSeries(std::vector<CycloScalar> c) : c_(std::move(c)) {}

	int order() const { return static_cast<int>(c_.size()) - 1; }
	const CycloScalar &coeff(int n) const { return c_.at(static_cast<size_t>(n)); }
	CycloScalar &coeff(int n) { return c_.at(static_cast<size_t>(n)); }
	const std::vector<CycloScalar> &coeffs() const { return c_; }

	// arithmetic truncates to the smaller order
	TruncatedSeries operator+(const TruncatedSeries &o) const;
	TruncatedSeries operator-(const TruncatedSeries &o) const;
	TruncatedSeries operator*(const TruncatedSeries &o) const;
	TruncatedSeries operator*(const CycloScalar &s) const;
	bool operator==(const TruncatedSeries &o) const { return c_ == o.c_; }

	std::string str() const;  // "1 + 2t + 4t^3 + O(t^4)"
	std::string json() const; // coefficient vector as a JSON array of strings

private:
	std::vector<CycloScalar> c_;
};

// rational function num/den with den(0) = 1, stored with the multiplicity k
// of the factor (1 - t) split off the denominator: den = (1-t)^k * residual,
// residual(1) != 0
struct RationalForm {
	Poly num;
	Poly den;
	int one_minus_t_multiplicity = 0;
	Poly residual;

	TruncatedSeries expand(int order) const;
	std::string str() const; // e.g. "(1-3t+5t^2)/((1+t^2)*(1-t)^4)"
};

// graded trace of g on A: coefficient n is the trace of the matrix of g on
// the degree-n normal-form basis. Requires a graded algebra and N <= bound.
TruncatedSeries trace_series(const GradedAutomorphism &g, const QuotientAlgebra &a,
                             int order);

// rational reconstruction with numerator degree <= p and denominator degree
// <= q (needs order >= p + q + 1); the result is reduced to lowest terms and
// always re-expanded and compared against s exactly; throws when no rational
// function fits within the bounds
RationalForm pade_reconstruct(const TruncatedSeries &s, int p, int q);

// minimal-denominator reconstruction: smallest q <= qmax whose fit re-expands
// to s exactly
RationalForm best_rational(const TruncatedSeries &s, int qmax);

// (1/|G|) sum of trace series = Hilbert series of A^G; every coefficient is
// cross-checked against the direct dimension of the degree-d fixed subspace
// and must be a nonnegative rational integer, else an internal error throws
TruncatedSeries molien_hilbert(const ActionGroup &g, const QuotientAlgebra &a,
                               int order);
// the direct computation used by the cross-check
size_t invariant_dimension(const ActionGroup &g, const QuotientAlgebra &a, int d);

// default truncation 2*(GKdim + group order) + 4, capped by the completion
// bound of a
int default_truncation(const QuotientAlgebra &a, size_t group_order);

// r(A, g) = GKdim A - k where Tr_A(g, t) = 1/((1-t)^k q(t)), q(1) != 0
struct ReflectionInfo {
	int r = 0;
	bool is_reflection = false; // r == 1
	RationalForm trace_form;
};
ReflectionInfo reflection_info(const GradedAutomorphism &g, const QuotientAlgebra &a);
int reflection_number(const GradedAutomorphism &g, const QuotientAlgebra &a);
// min over the non-identity elements; trivial group rejected
int reflection_number_group(const ActionGroup &g, const QuotientAlgebra &a);

// read off the t -> infinity expansion of the trace's rational form:
// Tr_A(g, t) = (-1)^n hdet(g)^{-1} t^{-l} + lower order
struct HdetResult {
	CycloScalar hdet;
	int gorenstein_shift = 0; // l
	int sign_exponent = 0;    // n = GKdim A
};
HdetResult hdet(const GradedAutomorphism &g, const QuotientAlgebra &a);

} // namespace ncwb::series
