#include "ncwb/rewrite.h"
#include <set>

namespace ncwb::rewrite {

bool MonomialOrder::less(const Word &a, const Word &b) const
{
	if (a.size() != b.size())
		return a.size() < b.size();
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] != b[i])
			return position(a[i]) > position(b[i]); // larger position = smaller generator
	return false;
}

Word MonomialOrder::lead(const FreePoly &p) const
{
	if (p.is_zero())
		throw Error("lead word of zero polynomial");
	const Word *best = nullptr;
	for (const auto &[w, c] : p.terms())
		if (!best || less(*best, w))
			best = &w;
	return *best;
}

namespace {

// does `pat` occur in `w` at position `pos`?
bool matches_at(const Word &w, const Word &pat, size_t pos)
{
	if (pos + pat.size() > w.size())
		return false;
	for (size_t i = 0; i < pat.size(); ++i)
		if (w[pos + i] != pat[i])
			return false;
	return true;
}

} // namespace

bool RewriteSystem::is_irreducible(const Word &w) const
{
	for (const auto &r : rules_)
		for (size_t p = 0; p + r.lead.size() <= w.size(); ++p)
			if (matches_at(w, r.lead, p))
				return false;
	return true;
}

bool RewriteSystem::lead_is_suffix(const Word &w) const
{
	for (const auto &r : rules_) {
		if (r.lead.size() > w.size())
			continue;
		if (matches_at(w, r.lead, w.size() - r.lead.size()))
			return true;
	}
	return false;
}

FreePoly RewriteSystem::normal_form(const FreePoly &p) const
{
	if (p.max_degree() > bound_)
		throw Error("degree " + std::to_string(p.max_degree()) +
		            " exceeds completion bound " + std::to_string(bound_));
	FreePoly cur = p;
	bool changed = true;
	while (changed) {
		changed = false;
		for (const auto &[w, c] : cur.terms()) {
			// leftmost position, first rule in list order
			size_t best_pos = 0;
			const Rule *hit = nullptr;
			for (size_t pos = 0; pos < w.size() && !hit; ++pos)
				for (const auto &r : rules_)
					if (matches_at(w, r.lead, pos)) {
						hit = &r;
						best_pos = pos;
						break;
					}
			if (!hit)
				continue;
			FreePoly pre(gens_), suf(gens_);
			pre = FreePoly::word(gens_, Word(w.begin(), w.begin() + best_pos));
			suf = FreePoly::word(
			    gens_, Word(w.begin() + best_pos + hit->lead.size(), w.end()));
			FreePoly replaced = (pre * hit->tail * suf) * c;
			Word dead = w;
			CycloScalar cc = c;
			cur.add_term(dead, -cc);
			cur += replaced;
			changed = true;
			break;
		}
	}
	return cur;
}

void RewriteSystem::add_relation(FreePoly rel, std::vector<FreePoly> &queue)
{
	rel = normal_form(rel);
	if (rel.is_zero())
		return;
	if (graded_ && !rel.homogeneous_degree())
		throw Error("relation is not homogeneous in graded mode: " + rel.str());
	Word lead = order_.lead(rel);
	if (!graded_) {
		for (const auto &[w, c] : rel.terms())
			if (w.size() > lead.size())
				throw Error("tail degree exceeds lead degree: " + rel.str());
	}
	CycloScalar lc = rel.coeff(lead);
	FreePoly tail(gens_);
	for (const auto &[w, c] : rel.terms())
		if (w != lead)
			tail.add_term(w, -(c / lc));
	// existing rules whose lead contains the new lead must be rebuilt
	std::vector<Rule> keep;
	for (auto &r : rules_) {
		bool contains = false;
		for (size_t p = 0; p + lead.size() <= r.lead.size(); ++p)
			if (matches_at(r.lead, lead, p))
				contains = true;
		if (contains)
			queue.push_back(FreePoly::word(gens_, r.lead) - r.tail);
		else
			keep.push_back(std::move(r));
	}
	rules_ = std::move(keep);
	rules_.push_back(Rule{std::move(lead), std::move(tail)});
}

RewriteSystem complete(const Presentation &p, int degree_bound)
{
	RewriteSystem rs;
	rs.gens_ = p.gens;
	rs.order_ = p.order;
	rs.bound_ = degree_bound;
	rs.graded_ = p.graded;
	if (!p.order.prec.empty() && p.order.prec.size() != p.gens->count())
		throw Error("precedence list length mismatch");

	std::vector<FreePoly> queue = p.relations;
	for (auto &r : queue)
		if (r.is_zero())
			throw Error("zero relation in presentation");
	while (!queue.empty()) {
		FreePoly rel = queue.back();
		queue.pop_back();
		rs.add_relation(std::move(rel), queue);
	}

	// overlap completion to the degree bound
	std::set<std::tuple<Word, Word, size_t>> seen;
	bool progress = true;
	while (progress) {
		progress = false;
		size_t nr = rs.rules_.size();
		for (size_t i = 0; i < nr && !progress; ++i)
			for (size_t j = 0; j < nr && !progress; ++j) {
				const Word la = rs.rules_[i].lead, lb = rs.rules_[j].lead;
				// overlap: proper suffix of la = proper prefix of lb
				for (size_t k = 1; k < la.size() && k < lb.size(); ++k) {
					bool ok = true;
					for (size_t t = 0; t < k; ++t)
						if (la[la.size() - k + t] != lb[t])
							ok = false;
					if (!ok)
						continue;
					Word u(la.begin(), la.end());
					u.insert(u.end(), lb.begin() + k, lb.end());
					if (static_cast<int>(u.size()) > degree_bound)
						continue;
					size_t offset = la.size() - k;
					if (!seen.insert({la, lb, offset}).second)
						continue;
					// two one-step reducts of u
					FreePoly left =
					    rs.rules_[i].tail *
					    FreePoly::word(rs.gens_, Word(u.begin() + la.size(), u.end()));
					FreePoly right =
					    FreePoly::word(rs.gens_, Word(u.begin(), u.begin() + offset)) *
					    rs.rules_[j].tail;
					FreePoly s = rs.normal_form(left - right);
					OverlapRecord rec{i, j, u, offset, s.is_zero(), SIZE_MAX};
					if (!s.is_zero()) {
						std::vector<FreePoly> q2{s};
						while (!q2.empty()) {
							FreePoly rel = q2.back();
							q2.pop_back();
							rs.add_relation(std::move(rel), q2);
						}
						rec.new_rule = rs.rules_.size() - 1;
						progress = true;
					}
					rs.certificate_.push_back(std::move(rec));
					if (progress)
						break;
				}
			}
	}
	return rs;
}

} // namespace ncwb::rewrite
