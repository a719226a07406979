#include "ncwb/freealg.h"
#include <set>
#include <sstream>

namespace ncwb::freealg {

std::shared_ptr<const Gens> Gens::make(std::vector<std::string> names)
{
	if (names.empty())
		throw Error("generator list is empty");
	std::set<std::string> seen;
	for (const auto &n : names) {
		if (n.empty())
			throw Error("empty generator name");
		if (!seen.insert(n).second)
			throw Error("duplicate generator name: " + n);
	}
	auto g = std::make_shared<Gens>();
	g->names_ = std::move(names);
	return g;
}

int Gens::index(const std::string &name) const
{
	for (size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return static_cast<int>(i);
	return -1;
}

std::string word_str(const Word &w, const Gens &g)
{
	if (w.empty())
		return "1";
	std::ostringstream out;
	for (size_t i = 0; i < w.size();) {
		size_t j = i;
		while (j < w.size() && w[j] == w[i])
			++j;
		if (i > 0)
			out << "*";
		out << g.name(w[i]);
		if (j - i > 1)
			out << "^" << (j - i);
		i = j;
	}
	return out.str();
}

FreePoly FreePoly::generator(std::shared_ptr<const Gens> g, int i)
{
	return word(std::move(g), Word{i});
}

FreePoly FreePoly::word(std::shared_ptr<const Gens> g, Word w)
{
	for (int i : w)
		if (i < 0 || static_cast<size_t>(i) >= g->count())
			throw Error("generator index out of range");
	FreePoly p(std::move(g));
	p.terms_[std::move(w)] = CycloScalar(1);
	return p;
}

FreePoly FreePoly::constant(std::shared_ptr<const Gens> g, CycloScalar c)
{
	FreePoly p(std::move(g));
	if (!c.is_zero())
		p.terms_[Word{}] = std::move(c);
	return p;
}

int FreePoly::max_degree() const
{
	if (terms_.empty())
		return -1;
	return static_cast<int>(terms_.rbegin()->first.size());
}

std::optional<int> FreePoly::homogeneous_degree() const
{
	if (terms_.empty())
		return std::nullopt;
	size_t d = terms_.begin()->first.size();
	if (terms_.rbegin()->first.size() != d)
		return std::nullopt;
	return static_cast<int>(d);
}

FreePoly FreePoly::component(int d) const
{
	FreePoly r(gens_);
	for (const auto &[w, c] : terms_)
		if (static_cast<int>(w.size()) == d)
			r.terms_[w] = c;
	return r;
}

void FreePoly::add_term(const Word &w, const CycloScalar &c)
{
	if (c.is_zero())
		return;
	auto it = terms_.find(w);
	if (it == terms_.end()) {
		terms_[w] = c;
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

CycloScalar FreePoly::coeff(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? CycloScalar() : it->second;
}

void FreePoly::check_same(const FreePoly &o) const
{
	if (gens_ && o.gens_ && gens_ != o.gens_)
		throw Error("generator-set mismatch between polynomials");
}

FreePoly FreePoly::operator-() const
{
	FreePoly r(gens_);
	for (const auto &[w, c] : terms_)
		r.terms_[w] = -c;
	return r;
}

FreePoly FreePoly::operator+(const FreePoly &o) const
{
	check_same(o);
	FreePoly r = *this;
	if (!r.gens_)
		r.gens_ = o.gens_;
	for (const auto &[w, c] : o.terms_)
		r.add_term(w, c);
	return r;
}

FreePoly FreePoly::operator-(const FreePoly &o) const { return *this + (-o); }

FreePoly FreePoly::operator*(const FreePoly &o) const
{
	check_same(o);
	FreePoly r(gens_ ? gens_ : o.gens_);
	for (const auto &[w1, c1] : terms_)
		for (const auto &[w2, c2] : o.terms_) {
			Word w = w1;
			w.insert(w.end(), w2.begin(), w2.end());
			r.add_term(w, c1 * c2);
		}
	return r;
}

FreePoly FreePoly::operator*(const CycloScalar &c) const
{
	FreePoly r(gens_);
	if (c.is_zero())
		return r;
	for (const auto &[w, k] : terms_)
		r.terms_[w] = k * c;
	return r;
}

bool FreePoly::operator==(const FreePoly &o) const
{
	if (terms_.size() != o.terms_.size())
		return false;
	for (auto it1 = terms_.begin(), it2 = o.terms_.begin(); it1 != terms_.end(); ++it1, ++it2)
		if (it1->first != it2->first || it1->second != it2->second)
			return false;
	return true;
}

std::string FreePoly::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream out;
	bool first = true;
	// print highest degree first
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		const auto &[w, c] = *it;
		std::string cs = c.str();
		bool neg = false;
		if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
			neg = true;
			cs = cs.substr(1);
		}
		if (first)
			out << (neg ? "-" : "");
		else
			out << (neg ? " - " : " + ");
		first = false;
		bool unit = (cs == "1");
		bool simple = cs.find(' ') == std::string::npos;
		if (w.empty()) {
			out << (simple ? cs : "(" + cs + ")");
		} else {
			if (!unit)
				out << (simple ? cs : "(" + cs + ")") << "*";
			out << word_str(w, *gens_);
		}
	}
	return out.str();
}

} // namespace ncwb::freealg
