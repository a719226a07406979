#pragma once
#include "ncwb/rewrite.h"

namespace ncwb::algebra {

using freealg::FreePoly;
using freealg::Gens;
using freealg::Word;
using rewrite::Presentation;
using rewrite::RewriteSystem;
using scalar::CycloScalar;

enum class Preset { Vn, Wn, Sklyanin, DownUp, Custom, TwistedTensor };

// presentation + completed rewriting system + graded normal-form bases
class QuotientAlgebra {
public:
	// (-1)-skew polynomial algebra: x_i x_j + x_j x_i = 0 (i < j)
	static QuotientAlgebra vn(int n, int degree_bound,
	                          const std::vector<std::string> &names = {});
	// filtered variant: x_i x_j + x_j x_i = 1 (i < j)
	static QuotientAlgebra wn(int n, int degree_bound);
	// S(a,b,c): a x_i x_{i+1} + b x_{i+1} x_i + c x_{i+2}^2, indices mod 3
	static QuotientAlgebra sklyanin(const CycloScalar &a, const CycloScalar &b,
	                                const CycloScalar &c, int degree_bound);
	// A(alpha, beta): x^2 y = alpha xyx + beta yx^2, xy^2 = alpha yxy + beta y^2 x
	static QuotientAlgebra down_up(const CycloScalar &alpha, const CycloScalar &beta,
	                               int degree_bound);
	static QuotientAlgebra custom(Presentation p, int degree_bound,
	                              Preset tag = Preset::Custom);

	Preset tag() const { return tag_; }
	bool graded() const { return rs_.graded(); }
	int bound() const { return rs_.bound(); }
	// GK dimension when known from the preset (Vn/Wn: n; Sklyanin/DownUp: 3), else -1
	int gk_dim() const;
	const std::shared_ptr<const Gens> &gens() const { return pres_.gens; }
	size_t ngens() const { return pres_.gens->count(); }
	const Presentation &presentation() const { return pres_; }
	const RewriteSystem &rewriting() const { return rs_; }

	FreePoly normal_form(const FreePoly &p) const { return rs_.normal_form(p); }
	FreePoly mul(const FreePoly &p, const FreePoly &q) const;
	FreePoly gen(int i) const { return FreePoly::generator(pres_.gens, i); }
	FreePoly one() const { return FreePoly::constant(pres_.gens, CycloScalar(1)); }

	// irreducible words of degree d, deterministic order
	const std::vector<Word> &graded_basis(int d) const;
	size_t hilbert_function(int d) const { return graded_basis(d).size(); }
	// position of w in graded_basis(|w|); w must be irreducible
	size_t basis_index(const Word &w) const;

	// true iff nf(e x_i - x_i e) = 0 for all generators i
	bool is_central(const FreePoly &e, int check_bound) const;

	// skew-monomial fast path: every rule is x_j x_i -> c * x_i x_j (j > i)
	bool skew_monomial() const { return skew_monomial_; }
	// all skew constants equal -1 (sign bookkeeping by inversion parity applies)
	bool minus_one_skew() const { return minus_one_skew_; }
	// sign of sorting a concatenation (valid only on the fast path with c = -1)
	static int sort_sign(Word &w); // sorts in place, returns +-1

private:
	QuotientAlgebra(Presentation p, int degree_bound, Preset tag);
	Presentation pres_;
	RewriteSystem rs_;
	Preset tag_;
	bool skew_monomial_ = false;
	bool minus_one_skew_ = false;
	mutable std::vector<std::vector<Word>> basis_;
	mutable std::vector<std::map<Word, size_t>> index_;
};

// named central elements, each verified up to the given degree
struct CentralHandle {
	std::vector<std::string> names;
	std::vector<FreePoly> elements;
	int verified_bound = 0;
};
CentralHandle make_central_handle(const QuotientAlgebra &a,
                                  std::vector<std::pair<std::string, FreePoly>> elems,
                                  int check_bound);

// V_n (x) V_m with the sign twist, = V_{n+m}; records the generator map
struct TwistResult {
	QuotientAlgebra algebra;
	std::vector<std::string> generator_map; // "old -> new" witness lines
	size_t first_factor_size;
};
TwistResult sign_twist_tensor(const QuotientAlgebra &a, const QuotientAlgebra &b);

} // namespace ncwb::algebra
