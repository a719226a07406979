#pragma once
#include "ncwb/scalar.h"
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ncwb::freealg {

using scalar::CycloScalar;

// named degree-1 generators of a free algebra; shared by all values built on it
class Gens {
public:
	static std::shared_ptr<const Gens> make(std::vector<std::string> names);
	const std::vector<std::string> &names() const { return names_; }
	size_t count() const { return names_.size(); }
	const std::string &name(int i) const { return names_.at(static_cast<size_t>(i)); }
	// -1 if absent
	int index(const std::string &name) const;

private:
	std::vector<std::string> names_;
};

// word in the generators; empty = 1
using Word = std::vector<int>;

// degree-lexicographic order on words (by generator index); storage order only
struct WordCmp {
	bool operator()(const Word &a, const Word &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

std::string word_str(const Word &w, const Gens &g);

// finitely supported map Word -> CycloScalar; zero coefficients never stored
class FreePoly {
public:
	using Terms = std::map<Word, CycloScalar, WordCmp>;

	FreePoly() = default;
	explicit FreePoly(std::shared_ptr<const Gens> g) : gens_(std::move(g)) {}
	static FreePoly generator(std::shared_ptr<const Gens> g, int i);
	static FreePoly word(std::shared_ptr<const Gens> g, Word w);
	static FreePoly constant(std::shared_ptr<const Gens> g, CycloScalar c);

	const std::shared_ptr<const Gens> &gens() const { return gens_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t term_count() const { return terms_.size(); }

	// degree of the highest word, -1 for zero
	int max_degree() const;
	// the common degree if all words share one
	std::optional<int> homogeneous_degree() const;
	// degree-d homogeneous component
	FreePoly component(int d) const;

	void add_term(const Word &w, const CycloScalar &c);
	CycloScalar coeff(const Word &w) const;

	FreePoly operator-() const;
	FreePoly operator+(const FreePoly &o) const;
	FreePoly operator-(const FreePoly &o) const;
	FreePoly operator*(const FreePoly &o) const; // free (concatenation) product
	FreePoly operator*(const CycloScalar &c) const;
	FreePoly &operator+=(const FreePoly &o) { return *this = *this + o; }
	FreePoly &operator-=(const FreePoly &o) { return *this = *this - o; }
	bool operator==(const FreePoly &o) const;
	bool operator!=(const FreePoly &o) const { return !(*this == o); }

	std::string str() const;

private:
	void check_same(const FreePoly &o) const;
	std::shared_ptr<const Gens> gens_;
	Terms terms_;
};

} // namespace ncwb::freealg
