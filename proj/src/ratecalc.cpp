#include "fhdim/ratecalc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fhdim {

double beam_area_km2(double beam_radius_km) {
    if (!(beam_radius_km > 0.0)) {
        throw std::domain_error("beam radius must be > 0 km (got " +
                                std::to_string(beam_radius_km) + ")");
    }
    return std::numbers::pi * beam_radius_km * beam_radius_km;
}

double users_per_beam(double area_km2, double density_per_km2) {
    if (area_km2 < 0.0 || density_per_km2 < 0.0) {
        throw std::domain_error("beam area and user density must be >= 0");
    }
    return area_km2 * density_per_km2;
}

double service_link_rate(const ScenarioConfig& scenario, const RadioConfig& radio,
                         double n_ue) {
    return static_cast<double>(scenario.num_cells) * scenario.beams_per_cell * n_ue *
           radio.bandwidth_hz * scenario.antenna_elements_per_beam * radio.oversampling;
}

double rate_opt8(double service_link_samples_per_s, const QuantizationConfig& quant) {
    if (service_link_samples_per_s < 0.0) {
        throw std::domain_error("service-link rate must be >= 0");
    }
    // I and Q axes, q_time_bits each.
    return service_link_samples_per_s * 2.0 * quant.q_time_bits;
}

double cp_removal_time_factor(const RadioConfig& radio) {
    const double cp_total = radio.symbols_per_subframe * (radio.numerology + 1.0) *
                            radio.cp_duration_s;
    return radio.subframe_duration_s / (radio.subframe_duration_s + cp_total);
}

double rate_opt7_1(double rate_opt8_bps, const RadioConfig& radio,
                   const QuantizationConfig& quant) {
    if (rate_opt8_bps < 0.0) throw std::domain_error("rate must be >= 0");
    return rate_opt8_bps * cp_removal_time_factor(radio) *
           (static_cast<double>(quant.q_freq_bits) / quant.q_time_bits);
}

double rate_opt7_2(double rate_opt7_1_bps, const LoadModel& load) {
    if (rate_opt7_1_bps < 0.0) throw std::domain_error("rate must be >= 0");
    return rate_opt7_1_bps * load.utilization;
}

double demodulation_factor(const RadioConfig& radio, const ScenarioConfig& scenario,
                           const ServiceProfile& service,
                           const QuantizationConfig& quant) {
    const double data_re_share =
        static_cast<double>(radio.data_res_per_rb) /
        (static_cast<double>(radio.symbols_per_subframe) * radio.subcarriers_per_rb);
    const double bits_per_symbol = std::log2(static_cast<double>(service.modulation_order));
    return data_re_share * (1.0 / scenario.antenna_elements_per_beam) *
           (bits_per_symbol / quant.q_freq_bits) * quant.q_llr_bits;
}

double rate_opt7_3(double rate_opt7_2_bps, const RadioConfig& radio,
                   const ScenarioConfig& scenario, const ServiceProfile& service,
                   const QuantizationConfig& quant) {
    if (rate_opt7_2_bps < 0.0) throw std::domain_error("rate must be >= 0");
    if (service.modulation_order < 2) {
        throw std::domain_error("modulation order must be >= 2");
    }
    return rate_opt7_2_bps * demodulation_factor(radio, scenario, service, quant);
}

double rate_opt6(double rate_opt7_3_bps, const ServiceProfile& service,
                 const QuantizationConfig& quant) {
    if (rate_opt7_3_bps < 0.0) throw std::domain_error("rate must be >= 0");
    return rate_opt7_3_bps * (1.0 / quant.q_llr_bits) * service.code_rate;
}

Opt2Terms rate_opt2_terms(const ScenarioConfig& scenario, const RadioConfig& radio,
                          const ServiceProfile& service, const LoadModel& load,
                          double n_ue) {
    Opt2Terms terms;
    terms.payload_per_beam_bps =
        service.reference_peak_rate_bps * (radio.bandwidth_hz / service.reference_bandwidth_hz) *
        (static_cast<double>(service.num_layers) / service.reference_layers) *
        (static_cast<double>(service.modulation_order) / service.reference_modulation);
    // Per-UE uplink content in bits, spread over the signaling time base.
    terms.signaling_per_beam_bps = n_ue * service.ul_fraction *
                                   (service.ul_content_size_bytes * 8.0) /
                                   load.signaling_time_base_s * service.num_layers;
    terms.beam_count = static_cast<double>(scenario.num_cells) * scenario.beams_per_cell;
    terms.total_bps =
        (terms.payload_per_beam_bps + terms.signaling_per_beam_bps) * terms.beam_count;
    return terms;
}

double rate_opt2(const ScenarioConfig& scenario, const RadioConfig& radio,
                 const ServiceProfile& service, const LoadModel& load, double n_ue) {
    return rate_opt2_terms(scenario, radio, service, load, n_ue).total_bps;
}

double RateTable::reduction_vs(SplitOption reference, SplitOption target) const {
    return reduction_percent(rate(reference), rate(target));
}

double reduction_percent(double reference, double target) {
    if (!(reference > 0.0)) {
        throw std::domain_error("reduction reference rate must be > 0 (got " +
                                std::to_string(reference) + ")");
    }
    return 100.0 * (1.0 - target / reference);
}

RateTable compute_rate_table(const Bundle& bundle) {
    const auto& sc = bundle.scenario;
    const auto& radio = bundle.radio;
    const auto& svc = bundle.service;
    const auto& quant = bundle.quantization;
    const auto& load = bundle.load;

    RateTable table;
    table.scenario = sc.name;
    table.band = std::string(to_string(radio.band));
    table.service = std::string(to_string(svc.service));

    const double n_ue =
        users_per_beam(beam_area_km2(radio.beam_radius_km), svc.ue_density_per_km2);
    const double link = service_link_rate(sc, radio,
                                          bundle.options.per_user_scaling ? n_ue : 1.0);

    const double r8 = rate_opt8(link, quant);
    const double r71 = rate_opt7_1(r8, radio, quant);
    const double r72 = rate_opt7_2(r71, load);
    const double r73 = rate_opt7_3(r72, radio, sc, svc, quant);
    const double r6 = rate_opt6(r73, svc, quant);
    const Opt2Terms opt2 = rate_opt2_terms(sc, radio, svc, load, n_ue);

    table.rate(SplitOption::Opt8) = r8;
    table.rate(SplitOption::Opt7_1) = r71;
    table.rate(SplitOption::Opt7_2) = r72;
    table.rate(SplitOption::Opt7_3) = r73;
    table.rate(SplitOption::Opt6) = r6;
    table.rate(SplitOption::Opt2) = opt2.total_bps;

    table.breakdown.users_per_beam = n_ue;
    table.breakdown.service_link_samples_per_s = link;
    table.breakdown.factor_opt7_1 =
        cp_removal_time_factor(radio) *
        (static_cast<double>(quant.q_freq_bits) / quant.q_time_bits);
    table.breakdown.factor_opt7_2 = load.utilization;
    table.breakdown.factor_opt7_3 = demodulation_factor(radio, sc, svc, quant);
    table.breakdown.factor_opt6 = svc.code_rate / quant.q_llr_bits;
    table.breakdown.opt2 = opt2;
    return table;
}

std::vector<McsSweepPoint> sweep_mcs(const Bundle& bundle, const McsTable& mcs) {
    if (mcs.entries.empty()) {
        throw std::domain_error("MCS table is empty; nothing to sweep");
    }
    std::vector<McsSweepPoint> points;
    points.reserve(mcs.entries.size());
    int previous_order = 0;
    for (const auto& entry : mcs.entries) {
        if (!(entry.code_rate > 0.0 && entry.code_rate <= 1.0)) {
            throw std::domain_error("code rate must be in (0, 1] (got " +
                                    std::to_string(entry.code_rate) + ")");
        }
        if (entry.modulation_order <= previous_order) {
            throw std::domain_error(
                "MCS modulation orders must be strictly increasing");
        }
        previous_order = entry.modulation_order;
        Bundle variant = bundle;
        variant.service.modulation_order = entry.modulation_order;
        variant.service.code_rate = entry.code_rate;
        variant.service.reference_modulation =
            reference_modulation_for(entry.modulation_order);  // throws on bad M
        points.push_back({entry.modulation_order, entry.code_rate,
                          compute_rate_table(variant)});
    }
    return points;
}

std::vector<SplitOption> feasible_splits(const RateTable& table,
                                         double feeder_capacity_bps) {
    if (!(feeder_capacity_bps > 0.0)) {
        throw std::domain_error("feeder capacity must be > 0 bit/s");
    }
    std::vector<SplitOption> feasible;
    for (SplitOption option : kAllSplitOptions) {
        if (table.rate(option) <= feeder_capacity_bps) feasible.push_back(option);
    }
    return feasible;
}

}  // namespace fhdim
