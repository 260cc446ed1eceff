#include <benchmark/benchmark.h>

#include "snailamp/array_resonator.hpp"
#include "snailamp/constants.hpp"
#include "snailamp/matching.hpp"
#include "snailamp/network.hpp"
#include "snailamp/snail_cell.hpp"

namespace {

using namespace snailamp;

const SnailParams kCell{0.18, 3, 80e-12};
const ArraySpec kArray{kCell, 67, 30e-15, 0.0};

DeviceDesign paper_design() {
    const double frac = flux_for_frequency(kArray, 6.4e9);
    const FluxBias flux = FluxBias::from_fraction(frac);
    const double z_jpa = characteristic_impedance(kArray, flux);
    const TransformerDesign transformer{
        87.0, 59.0, z_jpa, constants::pi * z_jpa / 2.0, constants::pi / (2.0 * 59.0), 6.4e9};
    return {transformer, kArray, flux, 50.0, 0.0, 0.0};
}

void BM_TaylorCoefficients(benchmark::State& state) {
    double frac = 0.0;
    for (auto _ : state) {
        const FluxBias flux = FluxBias::from_fraction(frac);
        benchmark::DoNotOptimize(taylor_coefficients(flux, kCell));
        frac = frac < 0.5 ? frac + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_TaylorCoefficients);

void BM_KerrFreeFlux(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kerr_free_flux(kCell, 0.01, 0.49));
    }
}
BENCHMARK(BM_KerrFreeFlux);

void BM_Synthesize(benchmark::State& state) {
    const double frac = flux_for_frequency(kArray, 6.4e9);
    const FluxBias flux = FluxBias::from_fraction(frac);
    const PrototypeSpec proto = make_prototype(2, 0.6, 0.175, 6.4e9, 50.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize(proto, kArray, flux));
    }
}
BENCHMARK(BM_Synthesize);

void BM_GainProfile(benchmark::State& state) {
    DeviceDesign device = paper_design();
    device.pump_strength = 110.0;
    const auto points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gain_profile(device, 5.4e9, 7.4e9, points));
    }
    state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_GainProfile)->Arg(201)->Arg(2001);

void BM_CalibratePump(benchmark::State& state) {
    const DeviceDesign device = paper_design();
    const FrequencyBand band{5.4e9, 7.4e9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(calibrate_pump(device, 20.0, band));
    }
}
BENCHMARK(BM_CalibratePump);

}  // namespace

BENCHMARK_MAIN();
