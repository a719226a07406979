#include "ncwb/commutative.h"
#include "ncwb/parser.h"
#include <algorithm>
#include <sstream>

namespace ncwb::commutative {

CommPoly CommPoly::constant(size_t nvars, const CycloScalar &c)
{
	CommPoly p(nvars);
	p.add_term(Expo(nvars, 0), c);
	return p;
}

CommPoly CommPoly::var(size_t nvars, size_t i)
{
	if (i >= nvars)
		throw Error("variable index out of range");
	CommPoly p(nvars);
	Expo e(nvars, 0);
	e[i] = 1;
	p.add_term(e, CycloScalar(1));
	return p;
}

int CommPoly::total_degree() const
{
	int d = -1;
	for (const auto &[e, c] : terms_) {
		int t = 0;
		for (int x : e)
			t += x;
		d = std::max(d, t);
	}
	return d;
}

void CommPoly::add_term(const Expo &e, const CycloScalar &c)
{
	if (e.size() != nvars_)
		throw Error("exponent vector length mismatch");
	auto it = terms_.find(e);
	if (it == terms_.end()) {
		if (!c.is_zero())
			terms_.emplace(e, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

CommPoly CommPoly::operator-() const
{
	CommPoly r(nvars_);
	for (const auto &[e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

CommPoly CommPoly::operator+(const CommPoly &o) const
{
	if (nvars_ != o.nvars_)
		throw Error("variable count mismatch");
	CommPoly r = *this;
	for (const auto &[e, c] : o.terms_)
		r.add_term(e, c);
	return r;
}

CommPoly CommPoly::operator-(const CommPoly &o) const { return *this + (-o); }

CommPoly CommPoly::operator*(const CommPoly &o) const
{
	if (nvars_ != o.nvars_)
		throw Error("variable count mismatch");
	CommPoly r(nvars_);
	for (const auto &[e1, c1] : terms_)
		for (const auto &[e2, c2] : o.terms_) {
			Expo e(nvars_);
			for (size_t i = 0; i < nvars_; ++i)
				e[i] = e1[i] + e2[i];
			r.add_term(e, c1 * c2);
		}
	return r;
}

CommPoly CommPoly::operator*(const CycloScalar &c) const
{
	CommPoly r(nvars_);
	if (c.is_zero())
		return r;
	for (const auto &[e, k] : terms_)
		r.terms_.emplace(e, k * c);
	return r;
}

bool CommPoly::operator==(const CommPoly &o) const
{
	return nvars_ == o.nvars_ && terms_ == o.terms_;
}

CommPoly CommPoly::substitute(const std::vector<CommPoly> &images) const
{
	if (images.size() != nvars_)
		throw Error("substitute: need one image per variable");
	size_t target = images.empty() ? 0 : images[0].nvars();
	for (const auto &im : images)
		if (im.nvars() != target)
			throw Error("substitute: image variable counts differ");
	CommPoly r(target);
	for (const auto &[e, c] : terms_) {
		CommPoly t = CommPoly::constant(target, c);
		for (size_t i = 0; i < nvars_; ++i)
			for (int k = 0; k < e[i]; ++k)
				t = t * images[i];
		r = r + t;
	}
	return r;
}

CycloScalar CommPoly::eval(const std::vector<CycloScalar> &point) const
{
	if (point.size() != nvars_)
		throw Error("eval: need one value per variable");
	CycloScalar total;
	for (const auto &[e, c] : terms_) {
		CycloScalar t = c;
		for (size_t i = 0; i < nvars_; ++i)
			for (int k = 0; k < e[i]; ++k)
				t *= point[i];
		total += t;
	}
	return total;
}

std::string CommPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	// highest-degree-first, matching the noncommutative printer
	std::vector<const std::pair<const Expo, CycloScalar> *> order;
	for (const auto &t : terms_)
		order.push_back(&t);
	std::sort(order.begin(), order.end(), [](const auto *a, const auto *b) {
		int da = 0, db = 0;
		for (int x : a->first)
			da += x;
		for (int x : b->first)
			db += x;
		if (da != db)
			return da > db;
		return a->first > b->first;
	});
	for (const auto *t : order) {
		const auto &[e, c] = *t;
		std::string cs = c.str();
		// multi-term coefficients carry spaces around their signs
		bool multi = cs.find(' ') != std::string::npos;
		if (!first) {
			if (!multi && cs[0] == '-') {
				out << " - ";
				cs = cs.substr(1);
			} else {
				out << " + ";
			}
		}
		first = false;
		bool unit = (cs == "1");
		bool any = false;
		std::ostringstream mono;
		for (size_t i = 0; i < nvars_; ++i) {
			if (e[i] == 0)
				continue;
			if (any)
				mono << "*";
			any = true;
			mono << "y" << i + 1;
			if (e[i] > 1)
				mono << "^" << e[i];
		}
		if (!any) {
			out << cs;
			continue;
		}
		if (!unit) {
			if (multi)
				out << "(" << cs << ")*";
			else
				out << cs << "*";
		}
		out << mono.str();
	}
	return out.str();
}

CommPoly vdm(int n)
{
	if (n < 2)
		throw Error("Vandermonde product needs at least two variables");
	size_t nv = static_cast<size_t>(n);
	CommPoly r = CommPoly::constant(nv, CycloScalar(1));
	for (size_t i = 0; i < nv; ++i)
		for (size_t j = i + 1; j < nv; ++j)
			r = r * (CommPoly::var(nv, i) - CommPoly::var(nv, j));
	return r;
}

CommPoly hhat(int n, HhatVariant variant, int i, int j)
{
	if (n < 2 || i < 1 || j < 1 || i >= j || j > n)
		throw Error("hhat needs 1 <= i < j <= n");
	if (variant == HhatVariant::Sklyanin && n != 3)
		throw Error("the Sklyanin variant is defined for three variables");
	size_t nv = static_cast<size_t>(n);
	CommPoly lead(nv);
	if (variant == HhatVariant::Vn) {
		lead = CommPoly::var(nv, static_cast<size_t>(i - 1));
	} else {
		// (1/2)(2y_i - y_k) with k the index complementary to the pair:
		// x_i x_j + x_j x_i = x_k^2 in the Sklyanin algebra with central squares
		int k = 6 - i - j;
		lead = CommPoly::var(nv, static_cast<size_t>(i - 1)) -
		       CommPoly::var(nv, static_cast<size_t>(k - 1)) *
		           CycloScalar(mpq_class(1, 2));
	}
	CommPoly r = lead;
	for (int a = 1; a <= n; ++a)
		for (int b = a + 1; b <= n; ++b) {
			if (a == i && b == j)
				continue;
			r = r * (CommPoly::var(nv, static_cast<size_t>(a - 1)) -
			         CommPoly::var(nv, static_cast<size_t>(b - 1)));
		}
	return r;
}

RelPrimeReport rel_prime_by_substitution(const CommPoly &h, int n)
{
	if (h.nvars() != static_cast<size_t>(n))
		throw Error("variable count mismatch");
	RelPrimeReport rep;
	rep.relatively_prime = true;
	size_t nv = static_cast<size_t>(n);
	for (size_t a = 0; a < nv; ++a)
		for (size_t b = a + 1; b < nv; ++b) {
			std::vector<CommPoly> images;
			for (size_t k = 0; k < nv; ++k)
				images.push_back(CommPoly::var(nv, k == a ? b : k));
			CommPoly image = h.substitute(images);
			std::ostringstream line;
			line << "y" << a + 1 << " -> y" << b + 1 << ": ";
			if (image.is_zero()) {
				rep.relatively_prime = false;
				line << "image is zero (shared factor y" << a + 1 << " - y"
				     << b + 1 << ")";
			} else {
				line << "image nonzero (" << image.term_count() << " terms)";
			}
			rep.witnesses.push_back(line.str());
		}
	return rep;
}

std::optional<CommPoly> to_even_subring(const freealg::FreePoly &p, size_t nvars)
{
	CommPoly r(nvars);
	for (const auto &[w, c] : p.terms()) {
		CommPoly::Expo e(nvars, 0);
		for (int g : w) {
			if (g < 0 || static_cast<size_t>(g) >= nvars)
				return std::nullopt;
			e[static_cast<size_t>(g)]++;
		}
		for (int &x : e) {
			if (x % 2 != 0)
				return std::nullopt;
			x /= 2;
		}
		r.add_term(e, c);
	}
	return r;
}

CommPoly parse_comm(const std::string &text, size_t nvars, const scalar::CycloField *field)
{
	std::vector<std::string> names;
	for (size_t i = 0; i < nvars; ++i)
		names.push_back("y" + std::to_string(i + 1));
	auto gens = freealg::Gens::make(names);
	freealg::FreePoly p = parser::parse_poly(text, gens, field);
	CommPoly r(nvars);
	for (const auto &[w, c] : p.terms()) {
		CommPoly::Expo e(nvars, 0);
		for (int g : w)
			e[static_cast<size_t>(g)]++;
		r.add_term(e, c);
	}
	return r;
}

} // namespace ncwb::commutative
