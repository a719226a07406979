#pragma once
#include "ncwb/freealg.h"

namespace ncwb::rewrite {

using freealg::FreePoly;
using freealg::Gens;
using freealg::Word;
using scalar::CycloScalar;

// degree-lexicographic order with configurable generator precedence
struct MonomialOrder {
	// prec[i] = position of generator i in the precedence list; smaller = greater.
	// Default (empty) = declaration order: generator 0 is greatest.
	std::vector<int> prec;

	int position(int g) const { return prec.empty() ? g : prec[static_cast<size_t>(g)]; }
	bool less(const Word &a, const Word &b) const;
	// the maximal word of p; throws on zero
	Word lead(const FreePoly &p) const;
};

// rewriting rule lead -> tail; every tail word is smaller than lead
struct Rule {
	Word lead;
	FreePoly tail;
};

struct Presentation {
	std::shared_ptr<const Gens> gens;
	std::vector<FreePoly> relations;
	MonomialOrder order;
	bool graded = true; // graded | filtered (tails of lower degree allowed)
};

// one examined overlap ambiguity and its resolution
struct OverlapRecord {
	size_t rule_a, rule_b;
	Word word;          // the overlap word
	size_t offset;      // position of rule_b's lead inside word (rule_a's is at 0)
	bool resolved;      // S-polynomial reduced to zero with the rules present at the time
	size_t new_rule;    // index of the rule added if not resolved (else SIZE_MAX)
};

class RewriteSystem {
public:
	const std::shared_ptr<const Gens> &gens() const { return gens_; }
	const MonomialOrder &order() const { return order_; }
	const std::vector<Rule> &rules() const { return rules_; }
	const std::vector<OverlapRecord> &certificate() const { return certificate_; }
	int bound() const { return bound_; }
	bool graded() const { return graded_; }

	// irreducible representative; linear; throws if max_degree(p) > bound
	FreePoly normal_form(const FreePoly &p) const;
	bool is_irreducible(const Word &w) const;
	// true iff some rule lead equals a suffix of w (the incremental basis test)
	bool lead_is_suffix(const Word &w) const;

	friend RewriteSystem complete(const Presentation &p, int degree_bound);

private:
	FreePoly reduce_word_once(const Word &w, const CycloScalar &c, bool &changed) const;
	void add_relation(FreePoly rel, std::vector<FreePoly> &queue);

	std::shared_ptr<const Gens> gens_;
	MonomialOrder order_;
	std::vector<Rule> rules_;
	std::vector<OverlapRecord> certificate_;
	int bound_ = 0;
	bool graded_ = true;
};

// diamond-lemma completion, truncated at degree_bound: the result is confluent
// on all words of degree <= degree_bound
RewriteSystem complete(const Presentation &p, int degree_bound);

} // namespace ncwb::rewrite
