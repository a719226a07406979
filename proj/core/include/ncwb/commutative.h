#pragma once
#include "ncwb/freealg.h"

namespace ncwb::commutative {

using scalar::CycloScalar;

// polynomial in commuting variables y1..yn: exponent vector -> coefficient
class CommPoly {
public:
	using Expo = std::vector<int>;

	explicit CommPoly(size_t nvars) : nvars_(nvars) {}
	static CommPoly constant(size_t nvars, const CycloScalar &c);
	static CommPoly var(size_t nvars, size_t i);

	size_t nvars() const { return nvars_; }
	const std::map<Expo, CycloScalar> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t term_count() const { return terms_.size(); }
	int total_degree() const;

	void add_term(const Expo &e, const CycloScalar &c);

	CommPoly operator-() const;
	CommPoly operator+(const CommPoly &o) const;
	CommPoly operator-(const CommPoly &o) const;
	CommPoly operator*(const CommPoly &o) const;
	CommPoly operator*(const CycloScalar &c) const;
	bool operator==(const CommPoly &o) const;
	bool operator!=(const CommPoly &o) const { return !(*this == o); }

	// ring homomorphism y_i -> images[i]; images share a variable count
	CommPoly substitute(const std::vector<CommPoly> &images) const;
	CycloScalar eval(const std::vector<CycloScalar> &point) const;

	std::string str() const;

private:
	size_t nvars_;
	std::map<Expo, CycloScalar> terms_;
};

// Vandermonde product prod_{i<j} (y_i - y_j); n >= 2
CommPoly vdm(int n);

// the degree-C(n,2) witnesses: y_i prod_{(a,b) != (i,j)} (y_a - y_b) for the
// skew preset, (2y_i - y_j) prod (...) for the Sklyanin variant (n = 3 only)
enum class HhatVariant { Vn, Sklyanin };
CommPoly hhat(int n, HhatVariant variant, int i, int j);

// substitutes y_a -> y_b for every a < b; h is coprime to the Vandermonde
// product iff every image is nonzero
struct RelPrimeReport {
	bool relatively_prime = false;
	std::vector<std::string> witnesses; // one line per substitution
};
RelPrimeReport rel_prime_by_substitution(const CommPoly &h, int n);

// maps a free polynomial whose words use every generator an even number of
// times into the y-variables (x_i^2 -> y_i); nullopt if any word is odd
std::optional<CommPoly> to_even_subring(const freealg::FreePoly &p, size_t nvars);

// shared expression grammar in commutative mode over variables y1..yn
CommPoly parse_comm(const std::string &text, size_t nvars, const scalar::CycloField *field);

} // namespace ncwb::commutative
