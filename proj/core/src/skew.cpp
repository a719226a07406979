#include "ncwb/skew.h"
#include <sstream>

namespace ncwb::skew {

namespace {

FreePoly word_poly(const QuotientAlgebra &a, const Word &w)
{
	FreePoly p(a.gens());
	p.add_term(w, CycloScalar(1));
	return p;
}

std::vector<int> exp_vec(const Word &w, size_t n)
{
	std::vector<int> e(n, 0);
	for (int letter : w)
		e[static_cast<size_t>(letter)]++;
	return e;
}

Word word_of(const std::vector<int> &e)
{
	Word w;
	for (size_t i = 0; i < e.size(); ++i)
		for (int k = 0; k < e[i]; ++k)
			w.push_back(static_cast<int>(i));
	return w;
}

// sign of x_i * (ascending word with exponents e): letters below i hop over x_i
int left_sign(const std::vector<int> &e, size_t i)
{
	int s = 0;
	for (size_t j = 0; j < i; ++j)
		s += e[j];
	return (s % 2) ? -1 : 1;
}

// sign of (ascending word with exponents e) * x_k: letters above k hop over x_k
int right_sign(const std::vector<int> &e, size_t k)
{
	int s = 0;
	for (size_t j = k + 1; j < e.size(); ++j)
		s += e[j];
	return (s % 2) ? -1 : 1;
}

CycloScalar dot(const Vec &a, const Vec &b)
{
	CycloScalar s;
	for (size_t i = 0; i < a.size(); ++i)
		if (!a[i].is_zero() && !b[i].is_zero())
			s += a[i] * b[i];
	return s;
}

// group-major coordinates with the identity block last, so RREF pivots in the
// trailing block identify the intersection with A
size_t group_block(size_t sigma, size_t m)
{
	return sigma == 0 ? m - 1 : sigma - 1;
}

} // namespace

SkewElement::SkewElement(const FreePoly &p, size_t sigma, const QuotientAlgebra &a,
                         const ActionGroup &g)
    : alg_(&a), grp_(&g)
{
	if (sigma >= g.size())
		throw Error("group index out of range");
	FreePoly nf = a.normal_form(p);
	for (const auto &[w, c] : nf.terms())
		add_term(w, sigma, c);
}

int SkewElement::max_degree() const
{
	int d = -1;
	for (const auto &[k, c] : terms_)
		d = std::max(d, static_cast<int>(k.first.size()));
	return d;
}

SkewElement SkewElement::component(int d) const
{
	SkewElement r(*alg_, *grp_);
	for (const auto &[k, c] : terms_)
		if (static_cast<int>(k.first.size()) == d)
			r.terms_[k] = c;
	return r;
}

FreePoly SkewElement::poly_at(size_t sigma) const
{
	FreePoly p(alg_->gens());
	for (const auto &[k, c] : terms_)
		if (k.second == sigma)
			p.add_term(k.first, c);
	return p;
}

void SkewElement::add_term(const Word &w, size_t sigma, const CycloScalar &c)
{
	if (c.is_zero())
		return;
	Key k{w, sigma};
	auto it = terms_.find(k);
	if (it == terms_.end()) {
		terms_.emplace(std::move(k), c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

SkewElement SkewElement::operator+(const SkewElement &o) const
{
	SkewElement r = *this;
	r += o;
	return r;
}

SkewElement &SkewElement::operator+=(const SkewElement &o)
{
	if (alg_ != o.alg_ || grp_ != o.grp_)
		throw Error("skew elements have different ambients");
	for (const auto &[k, c] : o.terms_)
		add_term(k.first, k.second, c);
	return *this;
}

SkewElement SkewElement::operator-() const
{
	SkewElement r(*alg_, *grp_);
	for (const auto &[k, c] : terms_)
		r.terms_[k] = -c;
	return r;
}

SkewElement SkewElement::operator-(const SkewElement &o) const { return *this + (-o); }

SkewElement SkewElement::operator*(const CycloScalar &c) const
{
	SkewElement r(*alg_, *grp_);
	if (c.is_zero())
		return r;
	for (const auto &[k, v] : terms_)
		r.terms_[k] = v * c;
	return r;
}

bool SkewElement::operator==(const SkewElement &o) const
{
	return alg_ == o.alg_ && grp_ == o.grp_ && terms_ == o.terms_;
}

std::string SkewElement::str() const
{
	if (terms_.empty())
		return "0";
	// group components in index order, words via FreePoly printing
	std::ostringstream out;
	bool first = true;
	for (size_t s = 0; s < grp_->size(); ++s) {
		FreePoly p = poly_at(s);
		if (p.is_zero())
			continue;
		if (!first)
			out << " + ";
		first = false;
		std::string label = grp_->elem(s).label();
		if (label.empty())
			label = "g" + std::to_string(s);
		out << "(" << p.str() << ")#" << label;
	}
	return out.str();
}

SkewElement skew_mul(const SkewElement &u, const SkewElement &v)
{
	if (&u.algebra() != &v.algebra() || &u.group() != &v.group())
		throw Error("skew product of elements with different ambients");
	const QuotientAlgebra &a = u.algebra();
	const ActionGroup &g = u.group();
	if (!u.is_zero() && !v.is_zero() &&
	    u.max_degree() + v.max_degree() > a.bound())
		throw Error("skew product degree exceeds completion bound");
	SkewElement r(a, g);
	for (const auto &[ku, cu] : u.terms()) {
		for (const auto &[kv, cv] : v.terms()) {
			FreePoly img = action::act_word(g.elem(ku.second), kv.first);
			FreePoly prod = a.mul(word_poly(a, ku.first), img) * (cu * cv);
			size_t sigma = g.mul(ku.second, kv.second);
			for (const auto &[w, c] : prod.terms())
				r.add_term(w, sigma, c);
		}
	}
	return r;
}

SkewElement skew_mul(const FreePoly &a, const SkewElement &v)
{
	return skew_mul(SkewElement(a, v.group().identity(), v.algebra(), v.group()), v);
}

SkewElement skew_mul(const SkewElement &u, const FreePoly &b)
{
	return skew_mul(u, SkewElement(b, u.group().identity(), u.algebra(), u.group()));
}

SkewElement make_fG(const QuotientAlgebra &a, const ActionGroup &g)
{
	if (&g.algebra() != &a)
		throw Error("group does not act on the given algebra");
	SkewElement f(a, g);
	for (size_t s = 0; s < g.size(); ++s)
		f.add_term(Word{}, s, CycloScalar(1));
	return f;
}

SliceEngine::SliceEngine(const QuotientAlgebra &a, const ActionGroup &g)
    : alg_(&a), grp_(&g)
{
	if (!a.graded())
		throw Error("slice engine requires a graded algebra (filtered rejected)");
	if (&g.algebra() != &a)
		throw Error("group does not act on the given algebra");
	dual_ = a.skew_monomial() && a.minus_one_skew() && g.monomial();
	size_t m = g.size();

	IdealSlice s0;
	s0.degree = 0;
	s0.ambient_dim = m;
	s0.ideal_dim = 1;
	if (m == 1) {
		s0.intersection.push_back(a.one());
		s0.quotient_dim = 0;
	} else {
		s0.quotient_dim = 1;
	}
	slices_.push_back(std::move(s0));

	if (dual_) {
		// annihilator of span{f_G} in degree 0
		matrix::RowSpace sp(m);
		for (size_t i = 1; i < m; ++i) {
			Vec v(m, CycloScalar());
			v[0] = CycloScalar(1);
			v[i] = CycloScalar(-1);
			sp.add(v);
		}
		lambda_.push_back(sp.rows());
	} else {
		matrix::RowSpace sp(m, false);
		sp.add(Vec(m, CycloScalar(1))); // f_G in group-major coordinates
		ideal_.push_back(std::move(sp));
	}
}

Vec SliceEngine::coord_vec(const SkewElement &e, int d) const
{
	size_t m = grp_->size();
	const auto &bs = alg_->graded_basis(d);
	Vec v(bs.size() * m, CycloScalar());
	for (const auto &[k, c] : e.terms()) {
		if (static_cast<int>(k.first.size()) != d)
			throw Error("coordinate vector of inhomogeneous element");
		v[alg_->basis_index(k.first) * m + k.second] = c;
	}
	return v;
}

void SliceEngine::extend(int d)
{
	if (d > alg_->bound())
		throw Error("slice degree exceeds completion bound");
	size_t n = alg_->ngens(), m = grp_->size();
	while (static_cast<int>(slices_.size()) <= d) {
		int lvl = static_cast<int>(slices_.size());
		const auto &bs = alg_->graded_basis(lvl);
		const auto &pbs = alg_->graded_basis(lvl - 1);
		size_t nd = bs.size() * m;
		IdealSlice s;
		s.degree = lvl;
		s.ambient_dim = nd;

		if (dual_) {
			const auto &lam = lambda_[static_cast<size_t>(lvl - 1)];
			size_t q = lam.size();
			std::vector<Vec> next;
			if (q > 0) {
				size_t width = 2 * n * q;
				// unknown blocks: cL_0..cL_{n-1}, cR_0..cR_{n-1}; a
				// functional annihilates the slice iff each left and
				// right letter restriction lies in the span of the
				// previous annihilator basis
				std::vector<Vec> rows;
				auto col = [&](size_t word_idx, size_t sigma) {
					Vec c(q);
					for (size_t t = 0; t < q; ++t)
						c[t] = lam[t][word_idx * m + sigma];
					return c;
				};
				// value at (w, sigma) is defined through the minimal
				// letter i0 of w: lambda(w,.) = s0 * (lam^T cL_{i0})(w - i0,.)
				for (const Word &w : bs) {
					auto e = exp_vec(w, n);
					std::vector<size_t> letters;
					for (size_t i = 0; i < n; ++i)
						if (e[i] > 0)
							letters.push_back(i);
					size_t i0 = letters[0];
					auto e0 = e;
					e0[i0]--;
					int s0 = left_sign(e0, i0);
					size_t c0 = alg_->basis_index(word_of(e0));
					for (size_t sig = 0; sig < m; ++sig) {
						Vec base = col(c0, sig);
						if (s0 < 0)
							for (auto &x : base)
								x = -x;
						for (size_t li = 1; li < letters.size(); ++li) {
							size_t i = letters[li];
							auto ei = e;
							ei[i]--;
							int si = left_sign(ei, i);
							size_t ci = alg_->basis_index(word_of(ei));
							Vec row(width, CycloScalar());
							Vec ri = col(ci, sig);
							for (size_t t = 0; t < q; ++t) {
								row[i * q + t] =
								    si < 0 ? -ri[t] : ri[t];
								row[i0 * q + t] -= base[t];
							}
							rows.push_back(std::move(row));
						}
					}
				}
				// right restrictions: (w'#sig) * x_i lands on
				// sig(x_i) = c * x_k, so the cR_i block must match the
				// defining assignment of w' + k
				for (size_t wpi = 0; wpi < pbs.size(); ++wpi) {
					auto ep = exp_vec(pbs[wpi], n);
					for (size_t sig = 0; sig < m; ++sig) {
						const auto &gs = grp_->elem(sig);
						for (size_t i = 0; i < n; ++i) {
							size_t k = static_cast<size_t>(
							    gs.perm()[i]);
							CycloScalar cf = gs.scale()[i];
							if (right_sign(ep, k) < 0)
								cf = -cf;
							auto e2 = ep;
							e2[k]++;
							size_t i0 = 0;
							while (e2[i0] == 0)
								++i0;
							auto e0 = e2;
							e0[i0]--;
							int s0 = left_sign(e0, i0);
							if (s0 < 0)
								cf = -cf;
							size_t c0 = alg_->basis_index(
							    word_of(e0));
							Vec row(width, CycloScalar());
							Vec rp = col(wpi, sig);
							Vec r0 = col(c0, sig);
							for (size_t t = 0; t < q; ++t) {
								row[(n + i) * q + t] = rp[t];
								row[i0 * q + t] -=
								    cf * r0[t];
							}
							rows.push_back(std::move(row));
						}
					}
				}
				auto sols = matrix::nullspace(rows, width);
				matrix::RowSpace sp(nd);
				for (const auto &v : sols) {
					Vec lamv(nd, CycloScalar());
					for (size_t wi = 0; wi < bs.size(); ++wi) {
						auto e = exp_vec(bs[wi], n);
						size_t i0 = 0;
						while (e[i0] == 0)
							++i0;
						auto e0 = e;
						e0[i0]--;
						int s0 = left_sign(e0, i0);
						size_t c0 = alg_->basis_index(word_of(e0));
						for (size_t sig = 0; sig < m; ++sig) {
							CycloScalar val;
							for (size_t t = 0; t < q; ++t)
								val += lam[t][c0 * m + sig] *
								       v[i0 * q + t];
							if (s0 < 0)
								val = -val;
							lamv[wi * m + sig] = val;
						}
					}
					sp.add(std::move(lamv));
				}
				next = sp.rows();
			}
			size_t qd = next.size();
			s.ideal_dim = nd - qd;
			// ((f_G) cap A)_d = nullspace of the identity-column block
			std::vector<Vec> idrows;
			for (const auto &row : next) {
				Vec r(bs.size());
				bool nz = false;
				for (size_t wi = 0; wi < bs.size(); ++wi) {
					r[wi] = row[wi * m + 0];
					nz = nz || !r[wi].is_zero();
				}
				if (nz)
					idrows.push_back(std::move(r));
			}
			for (const auto &v : matrix::nullspace(idrows, bs.size())) {
				FreePoly p(alg_->gens());
				for (size_t wi = 0; wi < bs.size(); ++wi)
					p.add_term(bs[wi], v[wi]);
				s.intersection.push_back(std::move(p));
			}
			s.quotient_dim = bs.size() - s.intersection.size();
			lambda_.push_back(std::move(next));
		} else {
			// primal recursion I_d = A_1 I_{d-1} + I_{d-1} A_1
			matrix::RowSpace sp(nd);
			const auto &prev = ideal_[static_cast<size_t>(lvl - 1)];
			auto to_vec = [&](const SkewElement &e) {
				Vec v(nd, CycloScalar());
				for (const auto &[k, c] : e.terms())
					v[group_block(k.second, m) * bs.size() +
					  alg_->basis_index(k.first)] = c;
				return v;
			};
			for (const Vec &rowv : prev.rows()) {
				SkewElement e(*alg_, *grp_);
				for (size_t idx = 0; idx < rowv.size(); ++idx) {
					if (rowv[idx].is_zero())
						continue;
					size_t gb = idx / pbs.size(), wi = idx % pbs.size();
					size_t sigma = gb == m - 1 ? 0 : gb + 1;
					e.add_term(pbs[wi], sigma, rowv[idx]);
				}
				for (size_t i = 0; i < n; ++i) {
					FreePoly xi = alg_->gen(static_cast<int>(i));
					sp.add(to_vec(skew_mul(xi, e)));
					sp.add(to_vec(skew_mul(e, xi)));
				}
			}
			s.ideal_dim = sp.rank();
			// rows pivoted in the trailing identity block span the
			// intersection with A
			size_t id_start = (m - 1) * bs.size();
			for (const auto &[pc, ri] : sp.pivots()) {
				if (pc < id_start)
					continue;
				FreePoly p(alg_->gens());
				const Vec &row = sp.rows()[ri];
				for (size_t wi = 0; wi < bs.size(); ++wi)
					p.add_term(bs[wi], row[id_start + wi]);
				s.intersection.push_back(std::move(p));
			}
			s.quotient_dim = bs.size() - s.intersection.size();
			ideal_.push_back(std::move(sp));
		}
		slices_.push_back(std::move(s));
	}
}

const IdealSlice &SliceEngine::slice(int d)
{
	if (d < 0)
		throw Error("negative slice degree");
	extend(d);
	return slices_[static_cast<size_t>(d)];
}

bool SliceEngine::is_member(const SkewElement &target)
{
	if (&target.algebra() != alg_ || &target.group() != grp_)
		throw Error("membership target has a different ambient");
	if (target.is_zero())
		return true;
	int top = target.max_degree();
	extend(top);
	for (int d = 0; d <= top; ++d) {
		SkewElement comp = target.component(d);
		if (comp.is_zero())
			continue;
		if (dual_) {
			Vec v = coord_vec(comp, d);
			for (const auto &row : lambda_[static_cast<size_t>(d)])
				if (!dot(row, v).is_zero())
					return false;
		} else if (d == 0) {
			// I_0 = span f_G: component must be a multiple of f_G
			CycloScalar c0 = comp.poly_at(0).coeff(Word{});
			SkewElement f = make_fG(*alg_, *grp_);
			if (!(comp == f * c0))
				return false;
		} else {
			size_t m = grp_->size();
			const auto &bs = alg_->graded_basis(d);
			Vec v(bs.size() * m, CycloScalar());
			for (const auto &[k, c] : comp.terms())
				v[group_block(k.second, m) * bs.size() +
				  alg_->basis_index(k.first)] = c;
			if (!ideal_[static_cast<size_t>(d)].contains(v))
				return false;
		}
	}
	return true;
}

bool SliceEngine::is_member(const FreePoly &target)
{
	return is_member(SkewElement(target, grp_->identity(), *alg_, *grp_));
}

std::vector<size_t> SliceEngine::quotient_dims(int max_degree)
{
	extend(max_degree);
	std::vector<size_t> out;
	for (int d = 0; d <= max_degree; ++d)
		out.push_back(slices_[static_cast<size_t>(d)].quotient_dim);
	return out;
}

std::optional<Certificate> SliceEngine::certificate(const SkewElement &target,
                                                    size_t max_rows)
{
	if (!is_member(target))
		return std::nullopt;
	Certificate cert;
	if (target.is_zero())
		return cert;
	SkewElement f = make_fG(*alg_, *grp_);
	int top = target.max_degree();
	for (int d = 0; d <= top; ++d) {
		SkewElement comp = target.component(d);
		if (comp.is_zero())
			continue;
		size_t m = grp_->size();
		size_t nd = alg_->graded_basis(d).size() * m;
		size_t count = 0;
		for (int k = 0; k <= d; ++k)
			count += alg_->hilbert_function(k) * alg_->hilbert_function(d - k);
		if (count > max_rows)
			return std::nullopt;
		matrix::RowSpace sp(nd, true);
		std::vector<std::pair<Word, Word>> tags;
		for (int k = 0; k <= d; ++k) {
			for (const Word &a : alg_->graded_basis(k)) {
				SkewElement left = skew_mul(word_poly(*alg_, a), f);
				for (const Word &b : alg_->graded_basis(d - k)) {
					SkewElement sand =
					    skew_mul(left, word_poly(*alg_, b));
					tags.emplace_back(a, b);
					sp.add(coord_vec(sand, d));
				}
			}
		}
		auto combo = sp.express(coord_vec(comp, d));
		if (!combo)
			return std::nullopt; // cannot happen: slice is exact
		for (size_t i = 0; i < combo->size(); ++i)
			if (!(*combo)[i].is_zero())
				cert.terms.push_back(
				    {tags[i].first, tags[i].second, (*combo)[i]});
	}
	return cert;
}

std::optional<Certificate> SliceEngine::certificate(const FreePoly &target,
                                                    size_t max_rows)
{
	return certificate(SkewElement(target, grp_->identity(), *alg_, *grp_), max_rows);
}

IdealSlice ideal_slice(const QuotientAlgebra &a, const ActionGroup &g, int d)
{
	SliceEngine eng(a, g);
	return eng.slice(d);
}

std::vector<size_t> quotient_dims(const QuotientAlgebra &a, const ActionGroup &g,
                                  int max_degree)
{
	SliceEngine eng(a, g);
	return eng.quotient_dims(max_degree);
}

} // namespace ncwb::skew
