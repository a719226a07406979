#include "ncwb/algebra.h"
#include <set>

namespace ncwb::algebra {

namespace {

std::vector<std::string> default_names(int n, const std::string &stem)
{
	std::vector<std::string> v;
	for (int i = 1; i <= n; ++i)
		v.push_back(stem + std::to_string(i));
	return v;
}

// precedence making x_n greatest, so x_j x_i (j > i) is the lead word and
// normal-form words are sorted ascending (the PBW convention used throughout)
std::vector<int> ascending_prec(int n)
{
	std::vector<int> prec(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i)
		prec[static_cast<size_t>(i)] = n - 1 - i;
	return prec;
}

} // namespace

QuotientAlgebra::QuotientAlgebra(Presentation p, int degree_bound, Preset tag)
    : pres_(std::move(p)), rs_(rewrite::complete(pres_, degree_bound)), tag_(tag)
{
	// detect the skew-monomial fast path
	size_t n = pres_.gens->count();
	std::set<std::pair<int, int>> covered;
	skew_monomial_ = true;
	minus_one_skew_ = true;
	for (const auto &r : rs_.rules()) {
		if (r.lead.size() != 2 || r.lead[0] == r.lead[1] || r.tail.term_count() != 1) {
			skew_monomial_ = false;
			break;
		}
		const auto &[tw, tc] = *r.tail.terms().begin();
		if (tw.size() != 2 || tw[0] != r.lead[1] || tw[1] != r.lead[0]) {
			skew_monomial_ = false;
			break;
		}
		covered.insert({r.lead[0], r.lead[1]});
		if (tc != CycloScalar(-1))
			minus_one_skew_ = false;
	}
	if (covered.size() != n * (n - 1) / 2)
		skew_monomial_ = false;
	if (!skew_monomial_)
		minus_one_skew_ = false;
}

QuotientAlgebra QuotientAlgebra::vn(int n, int degree_bound, const std::vector<std::string> &names)
{
	if (n < 1)
		throw Error("vn: need n >= 1");
	Presentation p;
	p.gens = Gens::make(names.empty() ? default_names(n, "x") : names);
	if (static_cast<int>(p.gens->count()) != n)
		throw Error("vn: name count mismatch");
	p.order.prec = ascending_prec(n);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			FreePoly r = FreePoly::word(p.gens, {i, j}) + FreePoly::word(p.gens, {j, i});
			p.relations.push_back(std::move(r));
		}
	return QuotientAlgebra(std::move(p), degree_bound, Preset::Vn);
}

QuotientAlgebra QuotientAlgebra::wn(int n, int degree_bound)
{
	if (n < 1)
		throw Error("wn: need n >= 1");
	Presentation p;
	p.gens = Gens::make(default_names(n, "x"));
	p.order.prec = ascending_prec(n);
	p.graded = false;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			FreePoly r = FreePoly::word(p.gens, {i, j}) + FreePoly::word(p.gens, {j, i}) -
			             FreePoly::constant(p.gens, CycloScalar(1));
			p.relations.push_back(std::move(r));
		}
	return QuotientAlgebra(std::move(p), degree_bound, Preset::Wn);
}

QuotientAlgebra QuotientAlgebra::sklyanin(const CycloScalar &a, const CycloScalar &b,
                                          const CycloScalar &c, int degree_bound)
{
	Presentation p;
	p.gens = Gens::make(default_names(3, "x"));
	for (int i = 0; i < 3; ++i) {
		int j = (i + 1) % 3, k = (i + 2) % 3;
		FreePoly r = FreePoly::word(p.gens, {i, j}) * a + FreePoly::word(p.gens, {j, i}) * b +
		             FreePoly::word(p.gens, {k, k}) * c;
		p.relations.push_back(std::move(r));
	}
	return QuotientAlgebra(std::move(p), degree_bound, Preset::Sklyanin);
}

QuotientAlgebra QuotientAlgebra::down_up(const CycloScalar &alpha, const CycloScalar &beta,
                                         int degree_bound)
{
	if (beta.is_zero())
		throw Error("down_up: beta must be nonzero");
	Presentation p;
	p.gens = Gens::make({"x", "y"});
	FreePoly x = FreePoly::generator(p.gens, 0), y = FreePoly::generator(p.gens, 1);
	p.relations.push_back(x * x * y - (x * y * x) * alpha - (y * x * x) * beta);
	p.relations.push_back(x * y * y - (y * x * y) * alpha - (y * y * x) * beta);
	return QuotientAlgebra(std::move(p), degree_bound, Preset::DownUp);
}

QuotientAlgebra QuotientAlgebra::custom(Presentation p, int degree_bound, Preset tag)
{
	return QuotientAlgebra(std::move(p), degree_bound, tag);
}

int QuotientAlgebra::gk_dim() const
{
	switch (tag_) {
	case Preset::Vn:
	case Preset::Wn:
	case Preset::TwistedTensor:
		return static_cast<int>(ngens());
	case Preset::Sklyanin:
	case Preset::DownUp:
		return 3;
	default:
		return -1;
	}
}

int QuotientAlgebra::sort_sign(Word &w)
{
	int sign = 1;
	for (size_t i = 1; i < w.size(); ++i)
		for (size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
			std::swap(w[j], w[j - 1]);
			sign = -sign;
		}
	return sign;
}

FreePoly QuotientAlgebra::mul(const FreePoly &p, const FreePoly &q) const
{
	if (minus_one_skew_) {
		FreePoly r(pres_.gens);
		for (const auto &[w1, c1] : p.terms())
			for (const auto &[w2, c2] : q.terms()) {
				Word w = w1;
				w.insert(w.end(), w2.begin(), w2.end());
				if (static_cast<int>(w.size()) > bound())
					throw Error("product degree exceeds completion bound");
				int s = sort_sign(w);
				r.add_term(w, s > 0 ? c1 * c2 : -(c1 * c2));
			}
		return r;
	}
	return normal_form(p * q);
}

const std::vector<Word> &QuotientAlgebra::graded_basis(int d) const
{
	if (d < 0 || d > bound())
		throw Error("degree " + std::to_string(d) + " outside [0, bound]");
	while (static_cast<int>(basis_.size()) <= d) {
		int k = static_cast<int>(basis_.size());
		std::vector<Word> cur;
		if (k == 0) {
			cur.push_back(Word{});
		} else {
			for (const Word &w : basis_[static_cast<size_t>(k - 1)])
				for (size_t g = 0; g < ngens(); ++g) {
					Word w2 = w;
					w2.push_back(static_cast<int>(g));
					if (!rs_.lead_is_suffix(w2))
						cur.push_back(std::move(w2));
				}
		}
		std::map<Word, size_t> idx;
		for (size_t i = 0; i < cur.size(); ++i)
			idx[cur[i]] = i;
		basis_.push_back(std::move(cur));
		index_.push_back(std::move(idx));
	}
	return basis_[static_cast<size_t>(d)];
}

size_t QuotientAlgebra::basis_index(const Word &w) const
{
	graded_basis(static_cast<int>(w.size()));
	const auto &idx = index_[w.size()];
	auto it = idx.find(w);
	if (it == idx.end())
		throw Error("word is not a basis element: " + word_str(w, *pres_.gens));
	return it->second;
}

bool QuotientAlgebra::is_central(const FreePoly &e, int check_bound) const
{
	if (e.max_degree() + 1 > check_bound || check_bound > bound())
		throw Error("centrality check bound exceeded");
	for (size_t i = 0; i < ngens(); ++i) {
		FreePoly xi = gen(static_cast<int>(i));
		if (!(mul(e, xi) - mul(xi, e)).is_zero())
			return false;
	}
	return true;
}

CentralHandle make_central_handle(const QuotientAlgebra &a,
                                  std::vector<std::pair<std::string, FreePoly>> elems,
                                  int check_bound)
{
	CentralHandle h;
	h.verified_bound = check_bound;
	for (auto &[name, e] : elems) {
		if (!a.is_central(e, check_bound))
			throw Error("element is not central: " + name + " = " + e.str());
		h.names.push_back(name);
		h.elements.push_back(e);
	}
	return h;
}

TwistResult sign_twist_tensor(const QuotientAlgebra &a, const QuotientAlgebra &b)
{
	auto is_vn = [](const QuotientAlgebra &q) {
		return q.tag() == Preset::Vn || q.tag() == Preset::TwistedTensor;
	};
	if (!is_vn(a) || !is_vn(b))
		throw Error("sign_twist_tensor requires (-1)-skew polynomial factors");
	size_t n = a.ngens(), m = b.ngens();
	std::vector<std::string> names;
	bool clash = false;
	for (const auto &nm : b.gens()->names())
		if (a.gens()->index(nm) >= 0)
			clash = true;
	if (clash) {
		for (size_t i = 1; i <= n; ++i)
			names.push_back("y" + std::to_string(i));
		for (size_t i = 1; i <= m; ++i)
			names.push_back("z" + std::to_string(i));
	} else {
		names = a.gens()->names();
		for (const auto &nm : b.gens()->names())
			names.push_back(nm);
	}
	int bound = std::max(a.bound(), b.bound());
	int nm_total = static_cast<int>(n + m);
	Presentation pres;
	pres.gens = Gens::make(names);
	pres.order.prec = ascending_prec(nm_total);
	for (int i = 0; i < nm_total; ++i)
		for (int j = i + 1; j < nm_total; ++j)
			pres.relations.push_back(FreePoly::word(pres.gens, {i, j}) +
			                         FreePoly::word(pres.gens, {j, i}));
	TwistResult r{QuotientAlgebra::custom(std::move(pres), bound, Preset::TwistedTensor), {}, n};
	for (size_t i = 0; i < n; ++i)
		r.generator_map.push_back(a.gens()->names()[i] + " (x) 1 -> " + names[i]);
	for (size_t i = 0; i < m; ++i)
		r.generator_map.push_back("1 (x) " + b.gens()->names()[i] + " -> " + names[n + i]);
	// the preset builder emits exactly the cross relations y_i z_j + z_j y_i = 0
	// demanded by the sign twist, so the result is V_{n+m} by construction;
	// callers cross-check the Hilbert function degree by degree
	return r;
}

} // namespace ncwb::algebra
