#include "ncwb/pertinency.h"
#include "ncwb/derivation.h"
#include "json.hpp"
#include <sstream>

namespace ncwb::pertinency {

using commutative::CommPoly;
using commutative::HhatVariant;
using freealg::FreePoly;
using freealg::Word;
using scalar::CycloScalar;
using skew::SkewElement;

namespace {

bool permutation_action(const ActionGroup &g)
{
	for (const auto &e : g.elems()) {
		if (!e.monomial())
			return false;
		for (const auto &c : e.scale())
			if (c != CycloScalar(1))
				return false;
	}
	return true;
}

// y_k -> x_k^2 image of a central-subalgebra polynomial, in normal form
FreePoly comm_to_algebra(const CommPoly &p, const QuotientAlgebra &a)
{
	FreePoly r(a.gens());
	for (const auto &[e, c] : p.terms()) {
		Word w;
		for (size_t k = 0; k < e.size(); ++k)
			w.insert(w.end(), static_cast<size_t>(2 * e[k]), static_cast<int>(k));
		r.add_term(w, c);
	}
	return a.normal_form(r);
}

} // namespace

Pgeq2Certificate certify_p_geq_2(const QuotientAlgebra &a, const ActionGroup &g,
                                 bool use_oracle)
{
	Pgeq2Certificate cert;
	auto fail = [&cert](std::string why) {
		cert.ok = false;
		cert.failure = std::move(why);
		return cert;
	};

	HhatVariant variant;
	if (a.tag() == algebra::Preset::Vn)
		variant = HhatVariant::Vn;
	else if (a.tag() == algebra::Preset::Sklyanin && a.ngens() == 3)
		variant = HhatVariant::Sklyanin;
	else
		return fail("certification route needs the V_n preset or the "
		            "three-generator Sklyanin preset");
	if (&g.algebra() != &a)
		return fail("group acts on a different algebra");
	if (!permutation_action(g))
		return fail("certification route needs a permutation action");

	int n = static_cast<int>(a.ngens());
	for (int l = 0; l < n; ++l) {
		FreePoly sq = a.normal_form(a.gen(l) * a.gen(l));
		if (!a.is_central(sq, std::min(a.bound(), 4)))
			return fail("generator square " + std::to_string(l + 1) +
			            " is not central");
	}

	const scalar::CycloField *q = scalar::CycloField::get(1);
	std::optional<skew::SliceEngine> oracle;
	if (use_oracle)
		oracle.emplace(a, g);

	CommPoly hsum(static_cast<size_t>(n));
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j) {
			auto script = derivation::transposition_chain(n, i, j);
			auto rep = derivation::run_derivation(script, a, g, q,
			                                      oracle ? &*oracle : nullptr);
			if (!rep.ok)
				return fail("pair (" + std::to_string(i) + "," +
				            std::to_string(j) + "): " + rep.failure);
			const SkewElement &fij = rep.values.back().second;
			FreePoly xi = a.gen(i - 1);
			SkewElement hij = (skew::skew_mul(xi, fij) + skew::skew_mul(fij, xi)) *
			                  CycloScalar(mpq_class(1, 2));
			CommPoly want = commutative::hhat(n, variant, i, j);
			SkewElement expect(comm_to_algebra(want, a), g.identity(), a, g);
			if (!(hij == expect))
				return fail("pair (" + std::to_string(i) + "," +
				            std::to_string(j) +
				            "): h does not match the central-subalgebra form");
			if (oracle && !oracle->is_member(hij))
				return fail("pair (" + std::to_string(i) + "," +
				            std::to_string(j) + "): oracle rejects h");
			hsum = hsum + want;
			std::ostringstream line;
			line << "h_{" << i << "," << j << "} in (f) cap T, degree "
			     << rep.values.back().second.max_degree() + 1
			     << (oracle ? ", oracle confirmed" : "");
			cert.lines.push_back(line.str());
		}

	cert.primality = commutative::rel_prime_by_substitution(hsum, n);
	for (const auto &w : cert.primality.witnesses)
		cert.lines.push_back("primality: " + w);
	if (!cert.primality.relatively_prime)
		return fail("sum of the h_{i,j} shares a factor with the Vandermonde "
		            "product");
	cert.ok = true;
	return cert;
}

FiniteDimReport finite_dim_check(const QuotientAlgebra &a, const ActionGroup &g,
                                 int max_degree)
{
	if (!a.graded())
		throw Error("finite-dimensionality check needs a graded algebra");
	FiniteDimReport rep;
	skew::SliceEngine eng(a, g);
	for (int d = 0; d <= max_degree; ++d) {
		size_t q = eng.slice(d).quotient_dim;
		rep.dims.push_back(q);
		rep.total_dimension += q;
		if (q == 0) {
			// graded propagation: every later slice is zero too
			rep.finite = true;
			rep.cutoff = d;
			break;
		}
	}
	if (rep.finite)
		rep.exact_p = a.gk_dim();
	return rep;
}

MonotonicityReport monotonicity_check(const QuotientAlgebra &a, const ActionGroup &sub,
                                      const ActionGroup &grp, int max_degree)
{
	if (&sub.algebra() != &a || &grp.algebra() != &a)
		throw Error("groups act on a different algebra");
	if (!grp.has_subgroup(sub))
		throw Error("first group is not a subgroup of the second");
	MonotonicityReport rep;
	rep.group_dims = skew::quotient_dims(a, grp, max_degree);
	rep.subgroup_dims = skew::quotient_dims(a, sub, max_degree);
	for (size_t d = 0; d < rep.group_dims.size(); ++d)
		if (rep.group_dims[d] < rep.subgroup_dims[d])
			rep.violations.push_back(static_cast<int>(d));
	rep.ok = rep.violations.empty();
	return rep;
}

std::string GrowthEstimate::str() const
{
	switch (kind) {
	case Growth::Zero:
		return "gk0";
	case Growth::Bounded:
		return "bounded (GK <= 1)";
	case Growth::Polynomial:
		if (degree < 0)
			return "growth unresolved within window";
		return "growth-degree " + std::to_string(degree);
	}
	return "";
}

GrowthEstimate gk_growth_estimate(const std::vector<size_t> &dims, size_t window)
{
	if (window == 0 || window > dims.size())
		throw Error("window must be between 1 and the sequence length");
	std::vector<long> tail(dims.end() - static_cast<long>(window), dims.end());
	GrowthEstimate est;
	if (std::all_of(tail.begin(), tail.end(), [](long v) { return v == 0; })) {
		est.kind = Growth::Zero;
		return est;
	}
	int order = 0;
	while (tail.size() > 1) {
		bool constant = std::all_of(tail.begin(), tail.end(),
		                            [&](long v) { return v == tail[0]; });
		if (constant) {
			est.kind = order == 0 ? Growth::Bounded : Growth::Polynomial;
			est.degree = order;
			return est;
		}
		for (size_t i = 0; i + 1 < tail.size(); ++i)
			tail[i] = tail[i + 1] - tail[i];
		tail.pop_back();
		++order;
	}
	est.kind = Growth::Polynomial;
	est.degree = -1;
	return est;
}

std::string PertinencyReport::conclusion_str() const
{
	std::ostringstream out;
	switch (conclusion) {
	case Conclusion::ExactGk:
		out << "p = " << gkdim << " (certified: finite-dimensional quotient)";
		break;
	case Conclusion::AtLeastTwo:
		if (gkdim == 2)
			out << "p = 2 (certified: 2 <= p <= GKdim = 2)";
		else if (gkdim == 3)
			out << "p = 2 or 3 (p >= 2 certified; exact value open)";
		else
			out << "p >= 2 (certified; exact value open)";
		break;
	case Conclusion::EvidenceOnly:
		out << "evidence only (no certificate)";
		break;
	}
	return out.str();
}

std::string PertinencyReport::json() const
{
	nlohmann::json j;
	j["algebra"] = algebra_label;
	j["group"] = group_label;
	j["gkdim"] = gkdim;
	j["dims"] = dims;
	j["lower_bound"] = lower_bound;
	j["certificate"] = certificate;
	j["conclusion"] = conclusion_str();
	j["isolated_singularity"] = isolated_singularity;
	j["growth"] = growth.str();
	return j.dump();
}

PertinencyReport pertinency_report(const QuotientAlgebra &a, const ActionGroup &g,
                                   int max_degree, std::string algebra_label,
                                   std::string group_label)
{
	PertinencyReport rep;
	if (algebra_label.empty()) {
		switch (a.tag()) {
		case algebra::Preset::Vn:
			algebra_label = "V" + std::to_string(a.ngens());
			break;
		case algebra::Preset::Wn:
			algebra_label = "W" + std::to_string(a.ngens());
			break;
		case algebra::Preset::Sklyanin:
			algebra_label = "S";
			break;
		case algebra::Preset::DownUp:
			algebra_label = "A";
			break;
		default:
			algebra_label = "custom";
		}
	}
	if (group_label.empty())
		group_label = "order-" + std::to_string(g.size());
	rep.algebra_label = std::move(algebra_label);
	rep.group_label = std::move(group_label);
	rep.gkdim = a.gk_dim();

	auto fin = finite_dim_check(a, g, max_degree);
	rep.dims = fin.dims;
	if (fin.finite)
		rep.growth = {Growth::Zero, 0};
	else
		rep.growth = gk_growth_estimate(rep.dims, std::min<size_t>(4, rep.dims.size()));
	if (fin.finite) {
		rep.conclusion = Conclusion::ExactGk;
		rep.lower_bound = rep.gkdim;
		rep.isolated_singularity = true;
		std::ostringstream out;
		out << "zero slice at degree " << fin.cutoff << "; total quotient dimension "
		    << fin.total_dimension;
		rep.certificate = out.str();
		return rep;
	}

	auto cert = certify_p_geq_2(a, g);
	if (cert.ok) {
		rep.conclusion = Conclusion::AtLeastTwo;
		rep.lower_bound = 2;
		rep.certificate = "pairwise chains land h_{i,j} in (f) cap T; sum is "
		                  "relatively prime to the Vandermonde product";
	} else {
		rep.conclusion = Conclusion::EvidenceOnly;
		rep.certificate = "no certificate: " + cert.failure;
	}
	return rep;
}

} // namespace ncwb::pertinency
