// Microbenchmarks contrasting the single-pass incremental engine with
// oracle-style batch recomputation, plus the filtration enumerator itself.

#include <benchmark/benchmark.h>

#include "frc/distances.hpp"
#include "frc/engine.hpp"
#include "frc/filtration.hpp"
#include "frc/oracle.hpp"
#include "frc/rng.hpp"
#include "frc/synth.hpp"

namespace {

frc::DistanceMatrix bench_matrix(std::int64_t n) {
    const frc::PointCloud cloud = frc::gen_rgg_points({n, 3, 0.5, 12345});
    return frc::pairwise_distances(cloud);
}

double bench_cutoff(const frc::DistanceMatrix& dist) { return frc::radius_for_density(dist, 0.08); }

void bm_enumerate(benchmark::State& state) {
    const frc::DistanceMatrix dist = bench_matrix(state.range(0));
    const double cutoff = bench_cutoff(dist);
    for (auto _ : state) {
        benchmark::DoNotOptimize(frc::enumerate_vr_filtration(dist, 2, cutoff, 1));
    }
}
BENCHMARK(bm_enumerate)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void bm_incremental_series(benchmark::State& state) {
    const frc::DistanceMatrix dist = bench_matrix(state.range(0));
    const double cutoff = bench_cutoff(dist);
    const frc::Filtration filt = frc::enumerate_vr_filtration(dist, 2, cutoff, 1);
    frc::RunOptions options;
    options.record_events = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frc::run_filtration(filt, 2, 2, cutoff, options));
    }
}
BENCHMARK(bm_incremental_series)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

// One from-scratch oracle evaluation of the complex at the full cutoff; the
// incremental pass above covers every cutoff at once.
void bm_oracle_batch(benchmark::State& state) {
    const frc::DistanceMatrix dist = bench_matrix(state.range(0));
    const double cutoff = bench_cutoff(dist);
    const frc::Filtration filt = frc::enumerate_vr_filtration(dist, 2, cutoff, 1);
    for (auto _ : state) {
        const frc::StaticComplex cx = frc::StaticComplex::from_filtration(filt, cutoff);
        for (int d = 1; d <= 2; ++d) benchmark::DoNotOptimize(frc::oracle_snapshot(cx, d));
    }
}
BENCHMARK(bm_oracle_batch)->Arg(50)->Unit(benchmark::kMillisecond);

void bm_insert_face_throughput(benchmark::State& state) {
    const frc::DistanceMatrix dist = bench_matrix(state.range(0));
    const double cutoff = bench_cutoff(dist);
    const frc::Filtration filt = frc::enumerate_vr_filtration(dist, 2, cutoff, 1);
    std::int64_t faces = 0;
    for (auto _ : state) {
        frc::CurvatureEngine engine(dist.size(), 2);
        for (const frc::Simplex& f : filt.faces)
            if (f.dim() >= 1 && f.dim() <= 2) engine.insert_face(f);
        faces += static_cast<std::int64_t>(filt.faces.size());
        benchmark::DoNotOptimize(engine.state());
    }
    state.SetItemsProcessed(faces);
}
BENCHMARK(bm_insert_face_throughput)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
