#include "ncwb/config.h"
#include "ncwb/parser.h"
#include "ncwb/scenario.h"
#include <fstream>
#include <numeric>
#include <sstream>

namespace ncwb::config {

using scalar::CycloScalar;

namespace {

struct Entry {
	std::string section;
	std::string key;
	std::string value;
	int line;
};

std::string trim(const std::string &s)
{
	size_t a = s.find_first_not_of(" \t\r");
	if (a == std::string::npos)
		return "";
	size_t b = s.find_last_not_of(" \t\r");
	return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string &label, int line, const std::string &msg)
{
	throw Error(label + ":" + std::to_string(line) + ": " + msg);
}

std::vector<Entry> read_entries(const std::string &text, const std::string &label)
{
	std::vector<Entry> out;
	std::istringstream in(text);
	std::string raw, section;
	int line = 0;
	while (std::getline(in, raw)) {
		++line;
		size_t cut = raw.find('#');
		std::string s = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
		if (s.empty())
			continue;
		if (s.front() == '[') {
			if (s.back() != ']')
				fail(label, line, "unterminated section header");
			section = trim(s.substr(1, s.size() - 2));
			if (section != "field" && section != "algebra" && section != "group" &&
			    section != "scenario")
				fail(label, line, "unknown section [" + section + "]");
			continue;
		}
		size_t eq = s.find('=');
		if (eq == std::string::npos)
			fail(label, line, "expected key = value");
		if (section.empty())
			fail(label, line, "entry before any section header");
		out.push_back({section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line});
	}
	return out;
}

// every zeta(k) token in a scalar expression contributes k to the field order
long roots_needed(const std::string &expr)
{
	long m = 1;
	for (size_t i = 0; (i = expr.find("zeta", i)) != std::string::npos; i += 4) {
		size_t p = expr.find_first_not_of(" \t", i + 4);
		if (p == std::string::npos || expr[p] != '(')
			continue;
		size_t q = expr.find(')', p);
		if (q == std::string::npos)
			continue;
		long k = 0;
		try {
			k = std::stol(trim(expr.substr(p + 1, q - p - 1)));
		} catch (...) {
			continue; // the real parse reports the error with context
		}
		if (k > 0)
			m = std::lcm(m, k);
	}
	return m;
}

long parse_long(const Entry &e, const std::string &label)
{
	try {
		size_t used = 0;
		long v = std::stol(e.value, &used);
		if (used != e.value.size())
			throw Error("");
		return v;
	} catch (...) {
		fail(label, e.line, e.key + ": not an integer: '" + e.value + "'");
	}
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	std::istringstream in(s);
	std::string part;
	while (std::getline(in, part, sep))
		out.push_back(trim(part));
	return out;
}

} // namespace

Session parse_config(const std::string &text, const std::string &label)
{
	auto entries = read_entries(text, label);
	Session s;

	// pass 1: field order = lcm of every root order the config mentions
	long need = 1;
	long explicit_order = 0;
	int order_line = 0;
	for (const auto &e : entries) {
		if (e.section == "field" && e.key == "order") {
			order_line = e.line;
			if (e.value != "auto")
				explicit_order = parse_long(e, label);
		} else if (e.section == "algebra" || e.section == "group") {
			need = std::lcm(need, roots_needed(e.value));
		} else if (e.section == "scenario" && e.key == "name") {
			try {
				need = std::lcm(need, scenario::scenario_root_order(e.value));
			} catch (const Error &err) {
				fail(label, e.line, err.what());
			}
		}
	}
	if (explicit_order > 0) {
		if (explicit_order % need != 0)
			fail(label, order_line,
			     "order = " + std::to_string(explicit_order) +
			         " does not contain the required roots (need a multiple of " +
			         std::to_string(need) + ")");
		s.field_order = explicit_order;
	} else {
		s.field_order = need;
	}
	s.field = scalar::CycloField::get(s.field_order);

	auto scalar_of = [&](const Entry &e) {
		try {
			return parser::parse_scalar_expr(e.value, s.field);
		} catch (const Error &err) {
			fail(label, e.line, e.key + ": " + err.what());
		}
	};

	// pass 2: algebra
	std::string preset;
	long n = 0;
	int bound = 0;
	std::map<std::string, std::pair<CycloScalar, bool>> params;
	int algebra_line = 0;
	for (const auto &e : entries) {
		if (e.section != "algebra")
			continue;
		algebra_line = std::max(algebra_line, e.line);
		if (e.key == "preset")
			preset = e.value;
		else if (e.key == "n")
			n = parse_long(e, label);
		else if (e.key == "degree_bound")
			bound = static_cast<int>(parse_long(e, label));
		else if (e.key == "a" || e.key == "b" || e.key == "c" || e.key == "alpha" ||
		         e.key == "beta")
			params[e.key] = {scalar_of(e), true};
		else
			fail(label, e.line, "unknown [algebra] key '" + e.key + "'");
	}
	auto param = [&](const char *k, int line) {
		auto it = params.find(k);
		if (it == params.end())
			fail(label, line, preset + " preset needs parameter '" + std::string(k) + "'");
		return it->second.first;
	};
	if (!preset.empty()) {
		if (bound == 0)
			bound = (preset == "vn" || preset == "wn") && n > 4 ? 8 : 12;
		if (preset == "vn" || preset == "wn") {
			if (n < 2)
				fail(label, algebra_line, "preset " + preset + " needs n >= 2");
			s.alg = std::make_shared<algebra::QuotientAlgebra>(
			    preset == "vn" ? algebra::QuotientAlgebra::vn(static_cast<int>(n), bound)
			                   : algebra::QuotientAlgebra::wn(static_cast<int>(n), bound));
		} else if (preset == "sklyanin") {
			s.alg = std::make_shared<algebra::QuotientAlgebra>(
			    algebra::QuotientAlgebra::sklyanin(param("a", algebra_line),
			                                       param("b", algebra_line),
			                                       param("c", algebra_line), bound));
		} else if (preset == "downup") {
			s.alg = std::make_shared<algebra::QuotientAlgebra>(
			    algebra::QuotientAlgebra::down_up(param("alpha", algebra_line),
			                                      param("beta", algebra_line), bound));
		} else {
			fail(label, algebra_line, "unknown preset '" + preset + "'");
		}
		s.degree_bound = bound;
	} else {
		for (const auto &e : entries)
			if (e.section == "algebra")
				fail(label, e.line, "[algebra] section has no preset");
		s.degree_bound = bound ? bound : 12;
	}

	// pass 3: group
	std::vector<action::GradedAutomorphism> gens;
	for (const auto &e : entries) {
		if (e.section != "group")
			continue;
		if (e.key == "closure_cap") {
			s.closure_cap = static_cast<size_t>(parse_long(e, label));
			continue;
		}
		if (!s.alg)
			fail(label, e.line, "[group] needs an [algebra] section");
		size_t ng = s.alg->ngens();
		try {
			if (e.key == "perm") {
				gens.push_back(action::permutation_automorphism(e.value, *s.alg));
			} else if (e.key == "diag") {
				auto parts = split(e.value, ',');
				if (parts.size() != ng)
					throw Error("need " + std::to_string(ng) + " diagonal entries");
				std::vector<matrix::Vec> m(ng, matrix::Vec(ng, CycloScalar(s.field)));
				for (size_t i = 0; i < ng; ++i)
					m[i][i] = parser::parse_scalar_expr(parts[i], s.field);
				gens.push_back(action::automorphism_from_matrix(m, *s.alg));
			} else if (e.key == "matrix") {
				auto rows = split(e.value, ';');
				if (rows.size() != ng)
					throw Error("need " + std::to_string(ng) + " rows");
				std::vector<matrix::Vec> m;
				for (const auto &row : rows) {
					auto parts = split(row, ',');
					if (parts.size() != ng)
						throw Error("need " + std::to_string(ng) + " entries per row");
					matrix::Vec v;
					for (const auto &p : parts)
						v.push_back(parser::parse_scalar_expr(p, s.field));
					m.push_back(std::move(v));
				}
				gens.push_back(action::automorphism_from_matrix(m, *s.alg));
			} else {
				throw Error("unknown [group] key '" + e.key + "'");
			}
		} catch (const Error &err) {
			fail(label, e.line, e.key + ": " + err.what());
		}
	}
	if (!gens.empty())
		s.group = std::make_shared<action::ActionGroup>(
		    action::group_closure(gens, s.closure_cap));

	// pass 4: scenario
	for (const auto &e : entries) {
		if (e.section != "scenario")
			continue;
		if (e.key != "name")
			fail(label, e.line, "unknown [scenario] key '" + e.key + "'");
		s.scenario = e.value;
	}
	return s;
}

Session load_config(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error("cannot open config file: " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_config(buf.str(), path);
}

} // namespace ncwb::config
