#include "ncwb/series.h"
#include "ncwb/matrix.h"
#include "json.hpp"
#include <algorithm>
#include <sstream>

namespace ncwb::series {

using freealg::FreePoly;
using freealg::Word;

namespace {

void trim(Poly &p)
{
	while (!p.empty() && p.back().is_zero())
		p.pop_back();
}

bool is_one_scalar(const CycloScalar &c) { return (c - CycloScalar(1)).is_zero(); }

bool is_one_poly(const Poly &p) { return p.size() == 1 && is_one_scalar(p[0]); }

// returns {quotient, remainder}
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly &b)
{
	if (b.empty())
		throw Error("polynomial division by zero");
	Poly q;
	if (a.size() >= b.size())
		q.assign(a.size() - b.size() + 1, CycloScalar());
	CycloScalar lead_inv = b.back().inv();
	while (a.size() >= b.size()) {
		CycloScalar c = a.back() * lead_inv;
		size_t shift = a.size() - b.size();
		q[shift] = c;
		for (size_t i = 0; i < b.size(); ++i)
			a[shift + i] -= c * b[i];
		trim(a);
		if (a.size() < b.size() || a.empty())
			break;
	}
	trim(q);
	return {q, a};
}

Poly poly_div_exact(const Poly &a, const Poly &b)
{
	auto [q, r] = poly_divmod(a, b);
	if (!r.empty())
		throw Error("inexact polynomial division");
	return q;
}

Poly poly_gcd(Poly a, Poly b)
{
	trim(a);
	trim(b);
	while (!b.empty()) {
		auto [q, r] = poly_divmod(a, b);
		(void)q;
		a = std::move(b);
		b = std::move(r);
	}
	if (!a.empty()) {
		CycloScalar inv = a.back().inv();
		for (auto &c : a)
			c *= inv;
	}
	return a;
}

// true when the rendered coefficient is a plain integer literal
bool integer_literal(const std::string &s)
{
	size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
	if (i >= s.size())
		return false;
	return s.find_first_not_of("0123456789", i) == std::string::npos;
}

std::string term_str(const CycloScalar &c, size_t deg)
{
	std::string cs = c.str();
	bool multi = cs.find(' ') != std::string::npos;
	std::ostringstream out;
	if (deg == 0) {
		if (multi)
			out << "(" << cs << ")";
		else
			out << cs;
		return out.str();
	}
	if (cs == "1") {
	} else if (cs == "-1") {
		out << "-";
	} else if (multi) {
		out << "(" << cs << ")*";
	} else if (integer_literal(cs)) {
		out << cs;
	} else {
		out << cs << "*";
	}
	out << "t";
	if (deg > 1)
		out << "^" << deg;
	return out.str();
}

} // namespace

std::string poly_str(const Poly &p)
{
	bool first = true;
	std::ostringstream out;
	for (size_t i = 0; i < p.size(); ++i) {
		if (p[i].is_zero())
			continue;
		std::string t = term_str(p[i], i);
		if (!first && t[0] != '-')
			out << "+";
		out << t;
		first = false;
	}
	if (first)
		return "0";
	return out.str();
}

CycloScalar poly_eval(const Poly &p, const CycloScalar &x)
{
	CycloScalar r;
	for (size_t i = p.size(); i-- > 0;)
		r = r * x + p[i];
	return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &o) const
{
	int n = std::min(order(), o.order());
	TruncatedSeries r(n);
	for (int i = 0; i <= n; ++i)
		r.coeff(i) = coeff(i) + o.coeff(i);
	return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &o) const
{
	int n = std::min(order(), o.order());
	TruncatedSeries r(n);
	for (int i = 0; i <= n; ++i)
		r.coeff(i) = coeff(i) - o.coeff(i);
	return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &o) const
{
	int n = std::min(order(), o.order());
	TruncatedSeries r(n);
	for (int i = 0; i <= n; ++i)
		for (int j = 0; i + j <= n; ++j)
			r.coeff(i + j) += coeff(i) * o.coeff(j);
	return r;
}

TruncatedSeries TruncatedSeries::operator*(const CycloScalar &s) const
{
	TruncatedSeries r(order());
	for (int i = 0; i <= order(); ++i)
		r.coeff(i) = coeff(i) * s;
	return r;
}

std::string TruncatedSeries::str() const
{
	std::ostringstream out;
	out << poly_str(c_) << " + O(t^" << c_.size() << ")";
	return out.str();
}

std::string TruncatedSeries::json() const
{
	nlohmann::json arr = nlohmann::json::array();
	for (const auto &c : c_)
		arr.push_back(c.str());
	return arr.dump();
}

TruncatedSeries RationalForm::expand(int order) const
{
	TruncatedSeries r(order);
	if (num.empty())
		return r;
	if (den.empty() || den[0].is_zero())
		throw Error("rational form has no power-series expansion");
	CycloScalar d0 = den[0].inv();
	for (int n = 0; n <= order; ++n) {
		CycloScalar c = n < static_cast<int>(num.size()) ? num[static_cast<size_t>(n)]
		                                                 : CycloScalar();
		for (size_t j = 1; j < den.size() && static_cast<int>(j) <= n; ++j)
			c -= den[j] * r.coeff(n - static_cast<int>(j));
		r.coeff(n) = c * d0;
	}
	return r;
}

std::string RationalForm::str() const
{
	if (num.empty())
		return "0";
	if (is_one_poly(den))
		return poly_str(num);
	std::string ns = num.size() == 1 ? term_str(num[0], 0) : "(" + poly_str(num) + ")";
	std::vector<std::string> pieces;
	if (!is_one_poly(residual) || one_minus_t_multiplicity == 0)
		pieces.push_back("(" + poly_str(residual) + ")");
	if (one_minus_t_multiplicity > 0) {
		std::string p = "(1-t)";
		if (one_minus_t_multiplicity > 1)
			p += "^" + std::to_string(one_minus_t_multiplicity);
		pieces.push_back(p);
	}
	std::string ds;
	for (const auto &p : pieces) {
		if (!ds.empty())
			ds += "*";
		ds += p;
	}
	if (pieces.size() > 1)
		ds = "(" + ds + ")";
	return ns + "/" + ds;
}

TruncatedSeries trace_series(const GradedAutomorphism &g, const QuotientAlgebra &a,
                             int order)
{
	if (!a.graded())
		throw Error("trace series are defined for graded algebras only");
	if (g.algebra() != &a)
		throw Error("automorphism acts on a different algebra");
	if (order < 0 || order > a.bound())
		throw Error("trace series order exceeds the completion bound");
	TruncatedSeries r(order);
	for (int d = 0; d <= order; ++d) {
		CycloScalar tr;
		for (const Word &w : a.graded_basis(d))
			tr += action::act_word(g, w).coeff(w);
		r.coeff(d) = tr;
	}
	return r;
}

RationalForm pade_reconstruct(const TruncatedSeries &s, int p, int q)
{
	if (p < 0 || q < 0)
		throw Error("negative reconstruction bounds");
	int n = s.order();
	if (n < p + q + 1)
		throw Error("insufficient series terms for the requested bounds");

	// zero series
	bool all_zero = true;
	for (int i = 0; i <= n && all_zero; ++i)
		all_zero = s.coeff(i).is_zero();
	if (all_zero) {
		RationalForm r;
		r.den = {CycloScalar(1)};
		r.residual = r.den;
		return r;
	}

	// denominator b_0..b_q with sum_j b_j c_{m-j} = 0 for m = p+1..n
	std::vector<matrix::Vec> rows;
	for (int m = p + 1; m <= n; ++m) {
		matrix::Vec row(static_cast<size_t>(q) + 1, CycloScalar());
		for (int j = 0; j <= q && j <= m; ++j)
			row[static_cast<size_t>(j)] = s.coeff(m - j);
		rows.push_back(std::move(row));
	}
	auto basis = matrix::nullspace(rows, static_cast<size_t>(q) + 1);
	const matrix::Vec *pick = nullptr;
	for (const auto &v : basis)
		if (!v[0].is_zero()) {
			pick = &v;
			break;
		}
	if (!pick)
		throw Error("no rational function fits within the given bounds");
	Poly den = *pick;
	CycloScalar b0 = den[0].inv();
	for (auto &c : den)
		c *= b0;
	trim(den);

	Poly num(static_cast<size_t>(p) + 1, CycloScalar());
	for (int m = 0; m <= p; ++m)
		for (size_t j = 0; j < den.size() && static_cast<int>(j) <= m; ++j)
			num[static_cast<size_t>(m)] += den[j] * s.coeff(m - static_cast<int>(j));
	trim(num);

	// lowest terms, constant term of the denominator normalized to 1
	Poly g = poly_gcd(num, den);
	if (g.size() > 1) {
		num = poly_div_exact(num, g);
		den = poly_div_exact(den, g);
	}
	CycloScalar d0 = den[0].inv();
	for (auto &c : num)
		c *= d0;
	for (auto &c : den)
		c *= d0;

	RationalForm r;
	r.num = num;
	r.den = den;
	r.residual = den;
	Poly one_minus_t = {CycloScalar(1), CycloScalar(-1)};
	while (!r.residual.empty() && poly_eval(r.residual, CycloScalar(1)).is_zero()) {
		r.residual = poly_div_exact(r.residual, one_minus_t);
		++r.one_minus_t_multiplicity;
	}

	// mandatory exact re-expansion check
	if (!(r.expand(n) == s))
		throw Error("reconstruction failed the re-expansion check");
	return r;
}

RationalForm best_rational(const TruncatedSeries &s, int qmax)
{
	std::string last = "no denominator bound attempted";
	// proper forms first (numerator degree <= q), so that a long polynomial
	// prefix is never mistaken for the answer; generous bounds as a fallback
	for (bool proper : {true, false}) {
		for (int q = 0; q <= qmax; ++q) {
			int p = s.order() - q - 1;
			if (p < 0)
				break;
			if (proper)
				p = std::min(p, q);
			try {
				return pade_reconstruct(s, p, q);
			} catch (const Error &e) {
				last = e.what();
			}
		}
		if (proper && qmax >= s.order() - 1)
			break; // fallback adds nothing
	}
	throw Error("rational reconstruction failed: " + last);
}

size_t invariant_dimension(const ActionGroup &g, const QuotientAlgebra &a, int d)
{
	if (&g.algebra() != &a)
		throw Error("group acts on a different algebra");
	const auto &basis = a.graded_basis(d);
	size_t m = basis.size();
	if (m == 0)
		return 0;

	std::vector<std::vector<FreePoly>> images(g.size());
	bool sparse = true;
	for (size_t gi = 0; gi < g.size(); ++gi) {
		images[gi].reserve(m);
		for (const Word &w : basis) {
			images[gi].push_back(action::act_word(g.elem(gi), w));
			if (images[gi].back().term_count() != 1)
				sparse = false;
		}
	}

	if (sparse) {
		// every group element permutes basis words up to scalar; a fixed
		// vector supported on an orbit exists iff the scalar cocycle is
		// consistent around the orbit: v_{g.w} = c(g, w) v_w
		std::vector<std::optional<CycloScalar>> val(m);
		size_t good = 0;
		for (size_t start = 0; start < m; ++start) {
			if (val[start])
				continue;
			val[start] = CycloScalar(1);
			bool ok = true;
			std::vector<size_t> queue = {start};
			std::vector<size_t> orbit = {start};
			while (!queue.empty()) {
				size_t wi = queue.back();
				queue.pop_back();
				for (size_t gi = 0; gi < g.size(); ++gi) {
					const auto &[w2, c] = *images[gi][wi].terms().begin();
					size_t wj = a.basis_index(w2);
					CycloScalar want = c * *val[wi];
					if (!val[wj]) {
						val[wj] = want;
						queue.push_back(wj);
						orbit.push_back(wj);
					} else if (*val[wj] != want) {
						ok = false;
					}
				}
			}
			(void)orbit;
			if (ok)
				++good;
		}
		return good;
	}

	// dense path: fixed subspace = kernel of (P - I), P the averaged action
	CycloScalar avg = CycloScalar(1) / CycloScalar(static_cast<long>(g.size()));
	std::vector<matrix::Vec> p_minus_i(m, matrix::Vec(m, CycloScalar()));
	for (size_t gi = 0; gi < g.size(); ++gi)
		for (size_t j = 0; j < m; ++j)
			for (const auto &[w2, c] : images[gi][j].terms())
				p_minus_i[a.basis_index(w2)][j] += c * avg;
	for (size_t i = 0; i < m; ++i)
		p_minus_i[i][i] -= CycloScalar(1);
	matrix::RowSpace rs(m);
	for (auto &row : p_minus_i)
		rs.add(std::move(row));
	return m - rs.rank();
}

TruncatedSeries molien_hilbert(const ActionGroup &g, const QuotientAlgebra &a, int order)
{
	if (&g.algebra() != &a)
		throw Error("group acts on a different algebra");
	TruncatedSeries sum(order);
	for (size_t gi = 0; gi < g.size(); ++gi)
		sum = sum + trace_series(g.elem(gi), a, order);
	TruncatedSeries avg = sum * (CycloScalar(1) / CycloScalar(static_cast<long>(g.size())));
	for (int d = 0; d <= order; ++d) {
		const CycloScalar &c = avg.coeff(d);
		if (!c.is_rational())
			throw Error("internal: Molien coefficient is irrational");
		mpq_class v = c.rational();
		if (v.get_den() != 1 || v < 0)
			throw Error("internal: Molien coefficient is not a nonnegative integer");
		size_t direct = invariant_dimension(g, a, d);
		if (v.get_num() != static_cast<long>(direct))
			throw Error("internal: Molien coefficient disagrees with the fixed "
			            "subspace dimension at degree " + std::to_string(d));
	}
	return avg;
}

int default_truncation(const QuotientAlgebra &a, size_t group_order)
{
	int gk = a.gk_dim();
	if (gk < 0)
		throw Error("no GK dimension known for this preset");
	return std::min(a.bound(), 2 * (gk + static_cast<int>(group_order)) + 4);
}

namespace {

int element_order(const GradedAutomorphism &g, const QuotientAlgebra &a)
{
	auto e = action::identity_automorphism(a);
	auto h = g;
	for (int o = 1; o <= 1024; ++o) {
		if (h == e)
			return o;
		h = action::compose(h, g);
	}
	throw Error("automorphism order exceeds 1024");
}

RationalForm trace_rational(const GradedAutomorphism &g, const QuotientAlgebra &a)
{
	int gk = a.gk_dim();
	if (gk < 0)
		throw Error("no GK dimension known for this preset");
	int ord = element_order(g, a);
	int n = default_truncation(a, static_cast<size_t>(ord));
	auto s = trace_series(g, a, n);
	return best_rational(s, std::min(n - 1, gk + ord));
}

} // namespace

ReflectionInfo reflection_info(const GradedAutomorphism &g, const QuotientAlgebra &a)
{
	ReflectionInfo info;
	info.trace_form = trace_rational(g, a);
	if (!is_one_poly(info.trace_form.num))
		throw Error("trace series is not of the reciprocal form 1/((1-t)^k q(t)): " +
		            info.trace_form.str());
	info.r = a.gk_dim() - info.trace_form.one_minus_t_multiplicity;
	info.is_reflection = (info.r == 1);
	return info;
}

int reflection_number(const GradedAutomorphism &g, const QuotientAlgebra &a)
{
	return reflection_info(g, a).r;
}

int reflection_number_group(const ActionGroup &g, const QuotientAlgebra &a)
{
	if (g.size() < 2)
		throw Error("reflection number of a group needs a non-identity element");
	int best = 0;
	bool have = false;
	for (size_t i = 1; i < g.size(); ++i) {
		int r = reflection_number(g.elem(i), a);
		if (!have || r < best) {
			best = r;
			have = true;
		}
	}
	return best;
}

HdetResult hdet(const GradedAutomorphism &g, const QuotientAlgebra &a)
{
	RationalForm form = trace_rational(g, a);
	if (form.num.empty())
		throw Error("zero trace series has no homological determinant");
	HdetResult res;
	res.sign_exponent = a.gk_dim();
	res.gorenstein_shift =
	    static_cast<int>(form.den.size()) - static_cast<int>(form.num.size());
	// leading behaviour at infinity: (lead num / lead den) t^{-l}
	CycloScalar lead = form.den.back() / form.num.back();
	res.hdet = res.sign_exponent % 2 == 0 ? lead : -lead;
	return res;
}

} // namespace ncwb::series
