#pragma once
#include "ncwb/pertinency.h"
#include "ncwb/series.h"

namespace ncwb::scenario {

// provenance of an expected value in the registry: taken from the source
// material, immediate from the definitions, or frozen from the oracles
enum class Origin { Reference, Trivial, Derived };
std::string origin_str(Origin o);

struct Check {
	std::string label;
	std::string expected;
	std::string actual;
	Origin origin = Origin::Reference;
	bool pass = false;
};

struct ScenarioReport {
	std::string name;
	bool ok = true;
	std::vector<Check> checks;
	std::vector<std::string> notes;
	std::string table() const; // human-readable
	std::string json() const;  // stable key order
};

const std::vector<std::string> &scenario_names();
// root-of-unity order the scenario's scalars need (1 = plain rationals)
long scenario_root_order(const std::string &name);

ScenarioReport run_scenario(const std::string &name);
// all scenarios in registry order; jobs > 1 is accepted but execution is
// sequential (the interned scalar-field cache is not thread-safe)
std::vector<ScenarioReport> run_all(int jobs = 1);

// derived golden values: frozen registry JSON and its live recomputation
// from the slice oracles ("ncwb scenario --regen" prints the latter)
const char *frozen_goldens();
std::string regenerate_goldens();

} // namespace ncwb::scenario
