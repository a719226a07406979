#include "ncwb/scalar.h"
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ncwb::scalar {

namespace {

using Poly = std::vector<mpq_class>; // coefficient k of x^k at index k

void trim(Poly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

// quotient of a / b for monic-leading b (exact division context)
Poly poly_div(Poly a, const Poly &b)
{
	Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
	while (a.size() >= b.size()) {
		mpq_class c = a.back() / b.back();
		size_t shift = a.size() - b.size();
		q[shift] = c;
		for (size_t i = 0; i < b.size(); ++i)
			a[shift + i] -= c * b[i];
		trim(a);
		if (a.empty())
			break;
	}
	return q;
}

Poly cyclotomic(long m)
{
	// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
	Poly num(static_cast<size_t>(m) + 1, mpq_class(0));
	num[0] = -1;
	num[static_cast<size_t>(m)] = 1;
	for (long d = 1; d < m; ++d)
		if (m % d == 0)
			num = poly_div(std::move(num), cyclotomic(d));
	return num;
}

} // namespace

long euler_phi(long m)
{
	long r = m;
	for (long p = 2; p * p <= m; ++p)
		if (m % p == 0) {
			r -= r / p;
			while (m % p == 0)
				m /= p;
		}
	if (m > 1)
		r -= r / m;
	return r;
}

CycloField::CycloField(long m) : m_(m), modulus_(cyclotomic(m)) {}

const CycloField *CycloField::get(long m)
{
	if (m < 1)
		throw Error("cyclotomic order must be positive");
	static std::mutex mu;
	static std::map<long, std::unique_ptr<CycloField>> cache;
	std::lock_guard<std::mutex> lock(mu);
	auto &slot = cache[m];
	if (!slot)
		slot.reset(new CycloField(m));
	return slot.get();
}

CycloScalar::CycloScalar(const CycloField *f, std::vector<mpq_class> c)
    : field_(f), coeff_(std::move(c))
{
	if (static_cast<long>(coeff_.size()) > f->degree())
		throw Error("coefficient vector longer than field degree");
	coeff_.resize(static_cast<size_t>(f->degree()), mpq_class(0));
	for (auto &x : coeff_)
		x.canonicalize();
}

CycloScalar CycloScalar::root_of_unity(const CycloField *f, long k)
{
	if (k < 1 || f->order() % k != 0)
		throw Error("root order " + std::to_string(k) + " does not divide field order " +
		            std::to_string(f->order()));
	long e = f->order() / k;
	// zeta_m^e reduced mod Phi_m
	Poly p(static_cast<size_t>(e) + 1, mpq_class(0));
	p[static_cast<size_t>(e)] = 1;
	const Poly &mod = f->modulus();
	size_t phi = mod.size() - 1;
	for (size_t d = p.size(); d-- > phi;) {
		mpq_class c = p[d];
		if (c == 0)
			continue;
		for (size_t i = 0; i < mod.size(); ++i)
			p[d - phi + i] -= c * mod[i];
	}
	p.resize(phi, mpq_class(0));
	return CycloScalar(f, std::move(p));
}

bool CycloScalar::is_zero() const
{
	for (const auto &c : coeff_)
		if (c != 0)
			return false;
	return true;
}

bool CycloScalar::is_rational() const
{
	for (size_t i = 1; i < coeff_.size(); ++i)
		if (coeff_[i] != 0)
			return false;
	return true;
}

mpq_class CycloScalar::rational() const
{
	if (!is_rational())
		throw Error("scalar is not rational: " + str());
	return coeff_[0];
}

CycloScalar CycloScalar::lift(const CycloField *target) const
{
	if (target == field_)
		return *this;
	long m = field_->order(), M = target->order();
	if (M % m != 0)
		throw Error("cannot lift Q(zeta_" + std::to_string(m) + ") into Q(zeta_" +
		            std::to_string(M) + ")");
	if (m == 1) {
		CycloScalar r(target);
		r.coeff_[0] = coeff_[0];
		return r;
	}
	CycloScalar z = root_of_unity(target, m);
	CycloScalar acc(target);
	// Horner over the coefficient polynomial in zeta_m
	for (size_t i = coeff_.size(); i-- > 0;) {
		acc = acc * z;
		acc.coeff_[0] += coeff_[i];
		acc.coeff_[0].canonicalize();
	}
	return acc;
}

namespace {
// lift both operands into a common field (one order must divide the other)
void align(CycloScalar &a, CycloScalar &b)
{
	if (a.field() == b.field())
		return;
	long ma = a.field()->order(), mb = b.field()->order();
	if (mb % ma == 0)
		a = a.lift(b.field());
	else if (ma % mb == 0)
		b = b.lift(a.field());
	else
		throw Error("incompatible cyclotomic orders " + std::to_string(ma) + " and " +
		            std::to_string(mb));
}
} // namespace

CycloScalar CycloScalar::operator-() const
{
	CycloScalar r = *this;
	for (auto &c : r.coeff_)
		c = -c;
	return r;
}

CycloScalar CycloScalar::operator+(const CycloScalar &o) const
{
	CycloScalar a = *this, b = o;
	align(a, b);
	for (size_t i = 0; i < a.coeff_.size(); ++i)
		a.coeff_[i] += b.coeff_[i];
	return a;
}

CycloScalar CycloScalar::operator-(const CycloScalar &o) const { return *this + (-o); }

CycloScalar CycloScalar::operator*(const CycloScalar &o) const
{
	CycloScalar a = *this, b = o;
	align(a, b);
	size_t phi = a.coeff_.size();
	if (phi == 1) {
		a.coeff_[0] *= b.coeff_[0];
		return a;
	}
	Poly prod(2 * phi - 1, mpq_class(0));
	for (size_t i = 0; i < phi; ++i) {
		if (a.coeff_[i] == 0)
			continue;
		for (size_t j = 0; j < phi; ++j)
			if (b.coeff_[j] != 0)
				prod[i + j] += a.coeff_[i] * b.coeff_[j];
	}
	const Poly &mod = a.field_->modulus();
	for (size_t d = prod.size(); d-- > phi;) {
		mpq_class c = prod[d];
		if (c == 0)
			continue;
		for (size_t i = 0; i < mod.size(); ++i)
			prod[d - phi + i] -= c * mod[i];
	}
	prod.resize(phi);
	return CycloScalar(a.field_, std::move(prod));
}

CycloScalar CycloScalar::inv() const
{
	if (is_zero())
		throw Error("inversion of zero scalar");
	if (is_rational()) {
		CycloScalar r = *this;
		r.coeff_[0] = mpq_class(1) / r.coeff_[0];
		return r;
	}
	// extended Euclid in Q[x]: s*self + t*Phi = gcd = const
	Poly r0 = field_->modulus();
	Poly r1(coeff_);
	trim(r1);
	Poly s0{{mpq_class(0)}}, s1{{mpq_class(1)}}; // Bezout coefficient of self
	while (true) {
		// r0 = q*r1 + r2
		Poly q = poly_div(r0, r1);
		Poly r2 = r0;
		for (size_t i = 0; i < q.size(); ++i) {
			if (q[i] == 0)
				continue;
			for (size_t j = 0; j < r1.size(); ++j)
				r2[i + j] -= q[i] * r1[j];
		}
		trim(r2);
		Poly s2 = s0;
		s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), mpq_class(0));
		for (size_t i = 0; i < q.size(); ++i) {
			if (q[i] == 0)
				continue;
			for (size_t j = 0; j < s1.size(); ++j)
				s2[i + j] -= q[i] * s1[j];
		}
		trim(s2);
		if (r2.empty()) {
			// r1 is the gcd (a nonzero constant since Phi_m is irreducible)
			mpq_class g = r1[0];
			for (auto &c : s1)
				c /= g;
			return CycloScalar(field_, std::move(s1));
		}
		r0 = std::move(r1);
		r1 = std::move(r2);
		s0 = std::move(s1);
		s1 = std::move(s2);
	}
}

bool CycloScalar::operator==(const CycloScalar &o) const
{
	CycloScalar a = *this, b = o;
	try {
		align(a, b);
	} catch (const Error &) {
		return false;
	}
	return a.coeff_ == b.coeff_;
}

CycloScalar CycloScalar::galois(long k) const
{
	long m = field_->order();
	k %= m;
	if (k < 0)
		k += m;
	if (std::gcd(k, m) != 1)
		throw Error("galois exponent must be coprime to the field order");
	CycloScalar zk = root_of_unity(field_, m);
	// zeta^k
	CycloScalar p(field_);
	p.coeff_[0] = 1;
	for (long i = 0; i < k; ++i)
		p = p * zk;
	CycloScalar acc(field_);
	for (size_t i = coeff_.size(); i-- > 0;) {
		acc = acc * p;
		acc.coeff_[0] += coeff_[i];
		acc.coeff_[0].canonicalize();
	}
	return acc;
}

std::string CycloScalar::str() const
{
	std::ostringstream out;
	bool first = true;
	for (size_t i = coeff_.size(); i-- > 0;) {
		const mpq_class &c = coeff_[i];
		if (c == 0)
			continue;
		mpq_class a = c;
		if (first) {
			if (a < 0) {
				out << "-";
				a = -a;
			}
		} else {
			out << (a < 0 ? " - " : " + ");
			if (a < 0)
				a = -a;
		}
		first = false;
		if (i == 0) {
			out << a.get_str();
		} else {
			if (a != 1)
				out << a.get_str() << "*";
			out << "z";
			if (i > 1)
				out << "^" << i;
		}
	}
	if (first)
		out << "0";
	return out.str();
}

namespace {

struct ScalarLexer {
	const std::string &s;
	size_t pos = 0;
	void skip()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			++pos;
	}
	bool eat(char c)
	{
		skip();
		if (pos < s.size() && s[pos] == c) {
			++pos;
			return true;
		}
		return false;
	}
	char peek()
	{
		skip();
		return pos < s.size() ? s[pos] : '\0';
	}
	[[noreturn]] void fail(const std::string &why)
	{
		throw Error("scalar parse error at position " + std::to_string(pos) + ": " + why);
	}
	long integer()
	{
		skip();
		size_t start = pos;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
			++pos;
		if (pos == start)
			fail("expected integer");
		return std::stol(s.substr(start, pos - start));
	}
	mpq_class rational()
	{
		skip();
		size_t start = pos;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
			++pos;
		if (pos == start)
			fail("expected number");
		mpz_class num(s.substr(start, pos - start));
		if (eat('/')) {
			skip();
			size_t dstart = pos;
			while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
				++pos;
			if (pos == dstart)
				fail("expected denominator");
			mpz_class den(s.substr(dstart, pos - dstart));
			if (den == 0)
				fail("zero denominator");
			mpq_class q(num, den);
			q.canonicalize();
			return q;
		}
		return mpq_class(num);
	}
};

} // namespace

CycloScalar CycloScalar::parse(const std::string &text, const CycloField *f)
{
	ScalarLexer lx{text};
	CycloScalar total(f);
	bool any = false;
	while (true) {
		lx.skip();
		if (lx.pos >= lx.s.size())
			break;
		bool neg = false;
		if (lx.eat('+')) {
		} else if (lx.eat('-')) {
			neg = true;
		} else if (any) {
			lx.fail("expected + or -");
		}
		// term: factors joined by '*'
		CycloScalar term(f);
		term.coeff_[0] = 1;
		bool tfirst = true;
		do {
			char c = lx.peek();
			if (c == 'z') {
				++lx.pos;
				long k = 1;
				CycloScalar base = zeta(f);
				if (lx.s.compare(lx.pos, 4, "eta(") == 0) {
					lx.pos += 4;
					long ord = lx.integer();
					if (!lx.eat(')'))
						lx.fail("expected )");
					base = root_of_unity(f, ord);
				}
				if (lx.eat('^'))
					k = lx.integer();
				for (long i = 0; i < k; ++i)
					term = term * base;
			} else if (std::isdigit(static_cast<unsigned char>(c))) {
				term = term * CycloScalar(lx.rational());
			} else if (tfirst) {
				lx.fail("expected term");
			} else {
				lx.fail("expected factor after *");
			}
			tfirst = false;
		} while (lx.eat('*'));
		if (neg)
			term = -term;
		total += term;
		any = true;
	}
	if (!any)
		lx.fail("empty scalar literal");
	return total;
}

} // namespace ncwb::scalar
