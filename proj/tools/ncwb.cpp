// command-line front end: configuration loading, one-shot computations, and
// the scenario registry. Exit codes: 0 pass, 1 expectation mismatch, 2
// configuration or usage error.
#include "CLI11.hpp"
#include "json.hpp"
#include "ncwb/config.h"
#include "ncwb/derivation.h"
#include "ncwb/parser.h"
#include "ncwb/scenario.h"
#include <fstream>
#include <iostream>

using namespace ncwb;

namespace {

struct Options {
	std::string config_path;
	int degree_bound = -1; // -1: use the session's bound
	long field_order = 0;  // 0: use the session's order
	std::string output = "text";
	int jobs = 1;
};

config::Session session_for(const Options &opt, bool need_algebra, bool need_group)
{
	if (opt.config_path.empty())
		throw Error("this subcommand needs --config <file>");
	auto s = config::load_config(opt.config_path);
	if (opt.field_order > 0) {
		if (opt.field_order % s.field_order != 0)
			throw Error("--field-order must be a multiple of the required order " +
			            std::to_string(s.field_order));
		s.field_order = opt.field_order;
		s.field = scalar::CycloField::get(s.field_order);
	}
	if (need_algebra && !s.alg)
		throw Error("config has no [algebra] section");
	if (need_group && !s.group)
		throw Error("config has no [group] section");
	return s;
}

int bound_of(const Options &opt, const config::Session &s)
{
	int d = opt.degree_bound >= 0 ? opt.degree_bound : s.degree_bound;
	if (s.alg && d > s.alg->bound())
		throw Error("degree bound " + std::to_string(d) +
		            " exceeds the completion bound " + std::to_string(s.alg->bound()));
	return d;
}

void emit(const Options &opt, const nlohmann::json &j, const std::string &text)
{
	if (opt.output == "json")
		std::cout << j.dump() << "\n";
	else
		std::cout << text;
}

int cmd_nf(const Options &opt, const std::string &expr)
{
	auto s = session_for(opt, true, false);
	auto p = s.alg->normal_form(parser::parse_poly(expr, s.alg->gens(), s.field));
	emit(opt, {{"input", expr}, {"normal_form", p.str()}}, p.str() + "\n");
	return 0;
}

int cmd_hilbert(const Options &opt)
{
	auto s = session_for(opt, true, false);
	int d = bound_of(opt, s);
	std::vector<size_t> h;
	for (int k = 0; k <= d; ++k)
		h.push_back(s.alg->hilbert_function(k));
	std::ostringstream out;
	for (int k = 0; k <= d; ++k)
		out << "h(" << k << ") = " << h[k] << "\n";
	emit(opt, {{"hilbert", h}}, out.str());
	return 0;
}

int cmd_trace(const Options &opt, size_t element)
{
	auto s = session_for(opt, true, true);
	if (element >= s.group->size())
		throw Error("element index out of range (group order " +
		            std::to_string(s.group->size()) + ")");
	int d = std::min(bound_of(opt, s),
	                 series::default_truncation(*s.alg, s.group->size()));
	auto tr = series::trace_series(s.group->elem(element), *s.alg, d);
	nlohmann::json j{{"element", element}, {"series", nlohmann::json::parse(tr.json())}};
	std::ostringstream out;
	out << "trace = " << tr.str() << "\n";
	try {
		auto form = series::best_rational(tr, d - 1);
		j["rational"] = form.str();
		out << "rational form = " << form.str() << "\n";
	} catch (const Error &) {
		out << "rational form: no fit within the truncation\n";
	}
	emit(opt, j, out.str());
	return 0;
}

int cmd_molien(const Options &opt)
{
	auto s = session_for(opt, true, true);
	int d = std::min(bound_of(opt, s),
	                 series::default_truncation(*s.alg, s.group->size()));
	auto m = series::molien_hilbert(*s.group, *s.alg, d);
	nlohmann::json j{{"series", nlohmann::json::parse(m.json())}};
	std::ostringstream out;
	out << "fixed-ring Hilbert series = " << m.str() << "\n";
	try {
		auto form = series::best_rational(m, d - 1);
		j["rational"] = form.str();
		out << "rational form = " << form.str() << "\n";
	} catch (const Error &) {
		out << "rational form: no fit within the truncation\n";
	}
	emit(opt, j, out.str());
	return 0;
}

int cmd_member(const Options &opt, const std::string &expr)
{
	auto s = session_for(opt, true, true);
	auto p = s.alg->normal_form(parser::parse_poly(expr, s.alg->gens(), s.field));
	skew::SliceEngine eng(*s.alg, *s.group);
	bool in = eng.is_member(p);
	emit(opt, {{"input", expr}, {"member", in}},
	     std::string(in ? "member" : "not a member") + " of the ideal\n");
	return 0;
}

int cmd_ideal_dims(const Options &opt)
{
	auto s = session_for(opt, true, true);
	int d = bound_of(opt, s);
	auto dims = skew::quotient_dims(*s.alg, *s.group, d);
	std::ostringstream out;
	for (int k = 0; k <= d; ++k)
		out << "dim(A / (ideal cap A))_" << k << " = " << dims[static_cast<size_t>(k)]
		    << "\n";
	emit(opt, {{"quotient_dims", dims}}, out.str());
	return 0;
}

int cmd_derive(const Options &opt, const std::string &script_path, bool oracle)
{
	auto s = session_for(opt, true, true);
	std::ifstream in(script_path);
	if (!in)
		throw Error("cannot open script: " + script_path);
	std::ostringstream buf;
	buf << in.rdbuf();
	std::optional<skew::SliceEngine> eng;
	if (oracle)
		eng.emplace(*s.alg, *s.group);
	auto rep = derivation::run_derivation(buf.str(), *s.alg, *s.group, s.field,
	                                      eng ? &*eng : nullptr);
	nlohmann::json steps = nlohmann::json::array();
	std::ostringstream out;
	for (const auto &st : rep.steps) {
		steps.push_back({{"name", st.name},
		                 {"value", st.text},
		                 {"degree", st.degree},
		                 {"in_ideal", st.in_ideal}});
		out << st.name << " = " << st.text << "\n";
	}
	out << (rep.ok ? "derivation ok" : "derivation FAILED: " + rep.failure) << " ("
	    << rep.asserts_checked << " asserts)\n";
	emit(opt, {{"ok", rep.ok}, {"failure", rep.failure}, {"steps", steps}}, out.str());
	return rep.ok ? 0 : 1;
}

int cmd_pertinency(const Options &opt)
{
	auto s = session_for(opt, true, true);
	int d = bound_of(opt, s);
	auto rep = pertinency::pertinency_report(*s.alg, *s.group, d);
	emit(opt, nlohmann::json::parse(rep.json()),
	     "conclusion: " + rep.conclusion_str() + "\ncertificate: " + rep.certificate +
	         "\n");
	return 0;
}

int cmd_scenario(const Options &opt, const std::string &name, bool all, bool regen,
                 bool list)
{
	if (regen) {
		std::cout << scenario::regenerate_goldens();
		return 0;
	}
	if (list) {
		for (const auto &n : scenario::scenario_names())
			std::cout << n << "\n";
		return 0;
	}
	std::vector<scenario::ScenarioReport> reps;
	if (all) {
		reps = scenario::run_all(opt.jobs);
	} else {
		std::string n = name;
		if (n.empty() && !opt.config_path.empty())
			n = config::load_config(opt.config_path).scenario;
		if (n.empty())
			throw Error("scenario: give a name, --all, --list, or --regen");
		reps.push_back(scenario::run_scenario(n));
	}
	bool ok = true;
	nlohmann::json j = nlohmann::json::array();
	std::ostringstream out;
	for (const auto &r : reps) {
		ok = ok && r.ok;
		j.push_back(nlohmann::json::parse(r.json()));
		out << r.table() << "\n";
	}
	emit(opt, j, out.str());
	return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact workbench for finite group actions on graded algebras"};
	app.require_subcommand(1);
	Options opt;
	app.add_option("--config", opt.config_path, "session config file");
	app.add_option("--degree-bound", opt.degree_bound, "override the working degree");
	app.add_option("--field-order", opt.field_order, "override the cyclotomic order");
	app.add_option("--output", opt.output, "output format")
	    ->check(CLI::IsMember({"text", "json"}));
	app.add_option("--jobs", opt.jobs, "worker count for scenario batches");

	std::string expr, script, scen_name;
	size_t element = 0;
	bool oracle = false, all = false, regen = false, list = false;

	auto *nf = app.add_subcommand("nf", "normal form of an expression");
	nf->add_option("expr", expr)->required();
	auto *hilbert = app.add_subcommand("hilbert", "graded dimensions of the algebra");
	auto *trace = app.add_subcommand("trace", "graded trace series of a group element");
	trace->add_option("--element", element, "group element index (0 = identity)");
	auto *molien = app.add_subcommand("molien", "fixed-ring Hilbert series");
	auto *member = app.add_subcommand("member", "ideal membership of expr # e");
	member->add_option("expr", expr)->required();
	auto *dims = app.add_subcommand("ideal-dims", "quotient dimensions per degree");
	auto *derive = app.add_subcommand("derive", "replay a derivation script");
	derive->add_option("script", script)->required();
	derive->add_flag("--oracle", oracle, "cross-check steps by linear algebra");
	auto *pert = app.add_subcommand("pertinency", "assemble the pertinency report");
	auto *scen = app.add_subcommand("scenario", "run registered scenarios");
	scen->add_option("name", scen_name);
	scen->add_flag("--all", all, "run every scenario");
	scen->add_flag("--regen", regen, "recompute the derived golden values");
	scen->add_flag("--list", list, "list scenario names");

	// accept the global flags after the subcommand too
	for (auto *sc : app.get_subcommands([](const CLI::App *) { return true; }))
		sc->fallthrough();

	try {
		app.parse(argc, argv);
		if (nf->parsed())
			return cmd_nf(opt, expr);
		if (hilbert->parsed())
			return cmd_hilbert(opt);
		if (trace->parsed())
			return cmd_trace(opt, element);
		if (molien->parsed())
			return cmd_molien(opt);
		if (member->parsed())
			return cmd_member(opt, expr);
		if (dims->parsed())
			return cmd_ideal_dims(opt);
		if (derive->parsed())
			return cmd_derive(opt, script, oracle);
		if (pert->parsed())
			return cmd_pertinency(opt);
		if (scen->parsed())
			return cmd_scenario(opt, scen_name, all, regen, list);
	} catch (const CLI::ParseError &e) {
		return app.exit(e) ? 2 : 0;
	} catch (const Error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
