#pragma once

// Reference rates for tests: every option is written as ONE closed-form
// expression over the raw parameters, sharing no intermediate values with the
// library's chained computation. Keep it that way — these exist to catch
// mistakes in the chain.

#include <cmath>
#include <numbers>

#include "fhdim/model.hpp"

namespace testsupport {

struct RawParams {
    double cells, beams, elements;
    double radius_km, density;
    double bandwidth_hz, oversampling;
    double q_time, q_freq, q_llr;
    double subframe_s, cp_s, symbols, numerology, subcarriers, data_res;
    double utilization;
    double mod_order, code_rate;
    double peak_rate_bps, ref_bandwidth_hz;
    double layers, ref_layers, ref_mod;
    double ul_fraction, ul_bytes, time_base_s;
    bool per_user = true;
};

inline RawParams raw(const fhdim::Bundle& b) {
    RawParams p;
    p.cells = b.scenario.num_cells;
    p.beams = b.scenario.beams_per_cell;
    p.elements = b.scenario.antenna_elements_per_beam;
    p.radius_km = b.radio.beam_radius_km;
    p.density = b.service.ue_density_per_km2;
    p.bandwidth_hz = b.radio.bandwidth_hz;
    p.oversampling = b.radio.oversampling;
    p.q_time = b.quantization.q_time_bits;
    p.q_freq = b.quantization.q_freq_bits;
    p.q_llr = b.quantization.q_llr_bits;
    p.subframe_s = b.radio.subframe_duration_s;
    p.cp_s = b.radio.cp_duration_s;
    p.symbols = b.radio.symbols_per_subframe;
    p.numerology = b.radio.numerology;
    p.subcarriers = b.radio.subcarriers_per_rb;
    p.data_res = b.radio.data_res_per_rb;
    p.utilization = b.load.utilization;
    p.mod_order = b.service.modulation_order;
    p.code_rate = b.service.code_rate;
    p.peak_rate_bps = b.service.reference_peak_rate_bps;
    p.ref_bandwidth_hz = b.service.reference_bandwidth_hz;
    p.layers = b.service.num_layers;
    p.ref_layers = b.service.reference_layers;
    p.ref_mod = b.service.reference_modulation;
    p.ul_fraction = b.service.ul_fraction;
    p.ul_bytes = b.service.ul_content_size_bytes;
    p.time_base_s = b.load.signaling_time_base_s;
    p.per_user = b.options.per_user_scaling;
    return p;
}

inline double users_factor(const RawParams& p) {
    return p.per_user ? std::numbers::pi * p.radius_km * p.radius_km * p.density : 1.0;
}

inline double opt8(const RawParams& p) {
    return p.cells * p.beams * users_factor(p) * p.bandwidth_hz * p.elements *
           p.oversampling * 2.0 * p.q_time;
}

inline double opt7_1(const RawParams& p) {
    return p.cells * p.beams * users_factor(p) * p.bandwidth_hz * p.elements *
           p.oversampling * 2.0 * p.q_time *
           (p.subframe_s / (p.subframe_s + p.symbols * (p.numerology + 1.0) * p.cp_s)) *
           (p.q_freq / p.q_time);
}

inline double opt7_2(const RawParams& p) {
    return p.cells * p.beams * users_factor(p) * p.bandwidth_hz * p.elements *
           p.oversampling * 2.0 * p.q_time *
           (p.subframe_s / (p.subframe_s + p.symbols * (p.numerology + 1.0) * p.cp_s)) *
           (p.q_freq / p.q_time) * p.utilization;
}

inline double opt7_3(const RawParams& p) {
    return p.cells * p.beams * users_factor(p) * p.bandwidth_hz * p.elements *
           p.oversampling * 2.0 * p.q_time *
           (p.subframe_s / (p.subframe_s + p.symbols * (p.numerology + 1.0) * p.cp_s)) *
           (p.q_freq / p.q_time) * p.utilization *
           (p.data_res / (p.symbols * p.subcarriers)) * (1.0 / p.elements) *
           (std::log2(p.mod_order) / p.q_freq) * p.q_llr;
}

inline double opt6(const RawParams& p) {
    return p.cells * p.beams * users_factor(p) * p.bandwidth_hz * p.elements *
           p.oversampling * 2.0 * p.q_time *
           (p.subframe_s / (p.subframe_s + p.symbols * (p.numerology + 1.0) * p.cp_s)) *
           (p.q_freq / p.q_time) * p.utilization *
           (p.data_res / (p.symbols * p.subcarriers)) * (1.0 / p.elements) *
           (std::log2(p.mod_order) / p.q_freq) * p.q_llr * (1.0 / p.q_llr) * p.code_rate;
}

inline double opt2(const RawParams& p) {
    return (p.peak_rate_bps * (p.bandwidth_hz / p.ref_bandwidth_hz) *
                (p.layers / p.ref_layers) * (p.mod_order / p.ref_mod) +
            (std::numbers::pi * p.radius_km * p.radius_km * p.density) * p.ul_fraction *
                (p.ul_bytes * 8.0) / p.time_base_s * p.layers) *
           p.cells * p.beams;
}

inline double rate_for(const RawParams& p, fhdim::SplitOption option) {
    switch (option) {
        case fhdim::SplitOption::Opt8: return opt8(p);
        case fhdim::SplitOption::Opt7_1: return opt7_1(p);
        case fhdim::SplitOption::Opt7_2: return opt7_2(p);
        case fhdim::SplitOption::Opt7_3: return opt7_3(p);
        case fhdim::SplitOption::Opt6: return opt6(p);
        case fhdim::SplitOption::Opt2: return opt2(p);
    }
    return 0.0;
}

inline double relative_error(double expected, double actual) {
    if (expected == 0.0) return actual == 0.0 ? 0.0 : 1.0;
    return std::fabs(actual - expected) / std::fabs(expected);
}

}  // namespace testsupport
