#pragma once

#include <array>
#include <string>
#include <vector>

#include "fhdim/model.hpp"

namespace fhdim {

/// Beam footprint on the ground, pi * r^2. Radius must be > 0.
double beam_area_km2(double beam_radius_km);

/// Covered users per beam: footprint area times user density. Inputs >= 0.
double users_per_beam(double area_km2, double density_per_km2);

/// Aggregate service-link sample rate, the product
/// cells * beams * users-per-beam * bandwidth * antenna-elements * oversampling.
/// Units: samples/s.
double service_link_rate(const ScenarioConfig& scenario, const RadioConfig& radio,
                         double n_ue);

/// Option 8 (time-domain IQ forwarding): 2 axes, q_time_bits per sample.
double rate_opt8(double service_link_samples_per_s, const QuantizationConfig& quant);

/// Subframe share left after removing cyclic prefixes, in (0, 1].
double cp_removal_time_factor(const RadioConfig& radio);

/// Option 7.1 (frequency domain, CP removed): scales option 8 by the CP time
/// factor and the frequency/time quantizer ratio.
double rate_opt7_1(double rate_opt8_bps, const RadioConfig& radio,
                   const QuantizationConfig& quant);

/// Option 7.2 (resource-element demapping): only loaded REs are forwarded.
double rate_opt7_2(double rate_opt7_1_bps, const LoadModel& load);

/// Combined factor applied by equalization + demodulation: data-RE share,
/// per-beam combining gain 1/L, and log2(M)/q_freq_bits * q_llr_bits.
double demodulation_factor(const RadioConfig& radio, const ScenarioConfig& scenario,
                           const ServiceProfile& service, const QuantizationConfig& quant);

/// Option 7.3 (equalization and demodulation done onboard).
double rate_opt7_3(double rate_opt7_2_bps, const RadioConfig& radio,
                   const ScenarioConfig& scenario, const ServiceProfile& service,
                   const QuantizationConfig& quant);

/// Option 6 (decoding onboard): one info stream at code_rate instead of
/// q_llr_bits per code bit.
double rate_opt6(double rate_opt7_3_bps, const ServiceProfile& service,
                 const QuantizationConfig& quant);

/// Option 2 per-beam terms and the platform-wide aggregate. The payload term
/// scales the reference peak rate by bandwidth, layer, and modulation ratios;
/// the signaling term spreads per-UE uplink content over the signaling time
/// base. The total multiplies the per-beam sum by cells * beams so it is
/// comparable with the other options' platform-wide rates.
struct Opt2Terms {
    double payload_per_beam_bps = 0.0;
    double signaling_per_beam_bps = 0.0;
    double beam_count = 0.0;
    double total_bps = 0.0;
};

Opt2Terms rate_opt2_terms(const ScenarioConfig& scenario, const RadioConfig& radio,
                          const ServiceProfile& service, const LoadModel& load,
                          double n_ue);

double rate_opt2(const ScenarioConfig& scenario, const RadioConfig& radio,
                 const ServiceProfile& service, const LoadModel& load, double n_ue);

/// Intermediate quantities of one rate-table computation: the chain anchors
/// at option 8 and each later option applies one multiplicative factor;
/// option 2 stands alone with its two additive terms.
struct RateBreakdown {
    double users_per_beam = 0.0;
    double service_link_samples_per_s = 0.0;
    double factor_opt7_1 = 0.0;
    double factor_opt7_2 = 0.0;
    double factor_opt7_3 = 0.0;
    double factor_opt6 = 0.0;
    Opt2Terms opt2;
};

/// Computed fronthaul rate per split option for one bundle.
struct RateTable {
    std::string scenario;  // e.g. "SC1"
    std::string band;      // "S" or "Ka"
    std::string service;   // "eMBB" or "mMTC"
    std::array<double, kSplitOptionCount> rates_bps{};
    RateBreakdown breakdown;

    double rate(SplitOption option) const {
        return rates_bps[static_cast<std::size_t>(option)];
    }
    double& rate(SplitOption option) {
        return rates_bps[static_cast<std::size_t>(option)];
    }
    /// Percentage reduction of `target` relative to `reference`.
    double reduction_vs(SplitOption reference, SplitOption target) const;
};

/// Percentage reduction 100 * (1 - target/reference). Negative when the
/// target exceeds the reference (sweeps can cross over). Reference must be
/// positive.
double reduction_percent(double reference, double target);

/// Runs the full chain for one validated bundle and records all factors.
RateTable compute_rate_table(const Bundle& bundle);

struct McsSweepPoint {
    int modulation_order = 2;
    double code_rate = 1.0;
    RateTable table;
};

/// One rate table per (M, code-rate) pair; the reference modulation is
/// re-derived per pair via the standard lookup rule. Throws std::domain_error
/// on an empty table, an unsupported modulation order, or a code rate outside
/// (0, 1].
std::vector<McsSweepPoint> sweep_mcs(const Bundle& bundle, const McsTable& mcs);

/// Split options whose rate fits within the feeder capacity, in option order.
/// Capacity must be positive.
std::vector<SplitOption> feasible_splits(const RateTable& table,
                                         double feeder_capacity_bps);

}  // namespace fhdim
