#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "niep/realize.hpp"
#include "niep/selftest.hpp"
#include "niep/spectra.hpp"
#include "niep/symfunc.hpp"
#include "niep/verify.hpp"

namespace {

// Deterministic feasible instance: conjugate pairs of modulus 1/2 on the
// left semicircle plus a Perron entry with headroom, constant diagonal.
// Moduli are kept small so coefficient growth stays tame at n = 32.
niep::Spectrum make_spectrum(int n) {
    std::vector<std::complex<double>> rest;
    for (int i = 0; i + 2 <= n - 1; i += 2) {
        const double angle = 1.6 + 1.4 * (i / 2 + 1) / ((n + 1) / 2.0);
        rest.emplace_back(0.5 * std::cos(angle), 0.5 * std::sin(angle));
        rest.emplace_back(0.5 * std::cos(angle), -0.5 * std::sin(angle));
    }
    if (static_cast<int>(rest.size()) < n - 1) rest.emplace_back(-0.25, 0.0);
    double deficit = 0.0;
    for (const auto& v : rest) deficit -= v.real();
    return niep::Spectrum(deficit + 0.25 * n, std::move(rest));
}

// Evaluating a degree-n polynomial with large coefficients at small
// eigenvalues loses absolute accuracy, so the full-pipeline benchmark runs
// with a residual tolerance suited to n = 32.
constexpr double kBenchTolerance = 1e-7;

niep::DiagonalList make_diagonal(const niep::Spectrum& sigma) {
    const double share = sigma.s(1) / sigma.n();
    return niep::DiagonalList(
        std::vector<double>(static_cast<std::size_t>(sigma.n()), share));
}

void BM_BuildSymTable(benchmark::State& state) {
    const auto sigma = make_spectrum(static_cast<int>(state.range(0)));
    const auto delta = make_diagonal(sigma);
    const niep::RealList list(delta.entries());
    for (auto _ : state) {
        benchmark::DoNotOptimize(niep::build_sym_table(list));
    }
}
BENCHMARK(BM_BuildSymTable)->Arg(8)->Arg(16)->Arg(32)->Arg(50);

void BM_SolveClosed(benchmark::State& state) {
    const auto sigma = make_spectrum(static_cast<int>(state.range(0)));
    const auto delta = make_diagonal(sigma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(niep::solve_b_closed(sigma, delta));
    }
}
BENCHMARK(BM_SolveClosed)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveRecurrence(benchmark::State& state) {
    const auto sigma = make_spectrum(static_cast<int>(state.range(0)));
    const auto delta = make_diagonal(sigma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(niep::solve_b_recurrence(sigma, delta));
    }
}
BENCHMARK(BM_SolveRecurrence)->Arg(8)->Arg(16)->Arg(32);

void BM_CharpolyStructured(benchmark::State& state) {
    const auto sigma = make_spectrum(static_cast<int>(state.range(0)));
    const auto delta = make_diagonal(sigma);
    const auto solved = niep::solve_b_closed(sigma, delta);
    auto b = solved.b;
    for (double& v : b) v = std::max(v, 0.0);
    const auto matrix = niep::assemble(delta, b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(niep::charpoly_structured(matrix));
    }
}
BENCHMARK(BM_CharpolyStructured)->Arg(8)->Arg(16)->Arg(32);

void BM_CharpolyDense(benchmark::State& state) {
    const auto sigma = make_spectrum(static_cast<int>(state.range(0)));
    const auto delta = make_diagonal(sigma);
    const auto solved = niep::solve_b_closed(sigma, delta);
    auto b = solved.b;
    for (double& v : b) v = std::max(v, 0.0);
    const auto dense = niep::assemble(delta, b).dense();
    for (auto _ : state) {
        benchmark::DoNotOptimize(niep::charpoly_dense(dense));
    }
}
BENCHMARK(BM_CharpolyDense)->Arg(8)->Arg(16)->Arg(32);

void BM_RealizeFull(benchmark::State& state) {
    const auto sigma = make_spectrum(static_cast<int>(state.range(0)));
    const auto delta = make_diagonal(sigma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(niep::realize(sigma, delta, kBenchTolerance));
    }
}
BENCHMARK(BM_RealizeFull)->Arg(5)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
