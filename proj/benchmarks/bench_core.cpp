// micro-benchmarks for the hot paths: normal forms, ideal-slice extension,
// and trace series
#include "ncwb/series.h"
#include "ncwb/skew.h"
#include <benchmark/benchmark.h>

using namespace ncwb;
using algebra::QuotientAlgebra;
using freealg::FreePoly;
using scalar::CycloScalar;

namespace {

action::ActionGroup perm_group(const QuotientAlgebra &a,
                               const std::vector<std::string> &cycles)
{
	std::vector<action::GradedAutomorphism> gens;
	for (const auto &c : cycles)
		gens.push_back(action::permutation_automorphism(c, a));
	return action::group_closure(gens);
}

void bm_normal_form(benchmark::State &state)
{
	auto n = static_cast<int>(state.range(0));
	auto a = QuotientAlgebra::vn(n, 12);
	// a dense-ish degree-6 input with every word reversed
	FreePoly p(a.gens());
	freealg::Word w;
	for (int k = 0; k < 6; ++k)
		w.push_back((n - 1 - k % n + n) % n);
	p.add_term(w, CycloScalar(1));
	FreePoly q = p;
	for (int k = 0; k < n; ++k)
		q = q * (a.gen(static_cast<size_t>(k)) - a.gen(static_cast<size_t>((k + 1) % n)));
	for (auto _ : state)
		benchmark::DoNotOptimize(a.normal_form(q));
}

void bm_slice_extension(benchmark::State &state)
{
	auto d = static_cast<int>(state.range(0));
	auto a = QuotientAlgebra::vn(4, 12);
	for (auto _ : state) {
		auto g = perm_group(a, {"(1 2)", "(2 3)"});
		skew::SliceEngine eng(a, g);
		benchmark::DoNotOptimize(eng.slice(d).quotient_dim);
	}
}

void bm_trace_series(benchmark::State &state)
{
	auto order = static_cast<int>(state.range(0));
	auto a = QuotientAlgebra::vn(4, 12);
	auto g = action::permutation_automorphism("(1 2 3 4)", a);
	for (auto _ : state)
		benchmark::DoNotOptimize(series::trace_series(g, a, order));
}

void bm_molien(benchmark::State &state)
{
	auto a = QuotientAlgebra::vn(4, 12);
	auto g = perm_group(a, {"(1 2)(3 4)", "(1 3)(2 4)"});
	for (auto _ : state)
		benchmark::DoNotOptimize(series::molien_hilbert(g, a, static_cast<int>(state.range(0))));
}

BENCHMARK(bm_normal_form)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_slice_extension)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_trace_series)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_molien)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
