#include "fhdim/model.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

namespace fhdim {

namespace {

std::string normalize_token(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '-' || c == '.') c = '_';
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

std::string_view to_string(SplitOption option) {
    switch (option) {
        case SplitOption::Opt8: return "Opt8";
        case SplitOption::Opt7_1: return "Opt7_1";
        case SplitOption::Opt7_2: return "Opt7_2";
        case SplitOption::Opt7_3: return "Opt7_3";
        case SplitOption::Opt6: return "Opt6";
        case SplitOption::Opt2: return "Opt2";
    }
    return "?";
}

std::string_view to_string(Band band) {
    return band == Band::S ? "S" : "Ka";
}

std::string_view to_string(ServiceType service) {
    return service == ServiceType::eMBB ? "eMBB" : "mMTC";
}

std::optional<SplitOption> parse_split_option(std::string_view text) {
    const std::string t = normalize_token(text);
    for (SplitOption option : kAllSplitOptions) {
        if (t == normalize_token(to_string(option))) return option;
    }
    return std::nullopt;
}

std::optional<Band> parse_band(std::string_view text) {
    const std::string t = normalize_token(text);
    if (t == "s") return Band::S;
    if (t == "ka") return Band::Ka;
    return std::nullopt;
}

std::optional<ServiceType> parse_service_type(std::string_view text) {
    const std::string t = normalize_token(text);
    if (t == "embb") return ServiceType::eMBB;
    if (t == "mmtc") return ServiceType::mMTC;
    return std::nullopt;
}

long long derived_total_antennas(const ScenarioConfig& scenario) {
    return static_cast<long long>(scenario.num_cells) * scenario.beams_per_cell *
           scenario.antenna_elements_per_beam;
}

int reference_modulation_for(int modulation_order) {
    switch (modulation_order) {
        case 2:
        case 4: return 2;
        case 16: return 4;
        case 64: return 16;
        case 256: return 64;
        default:
            throw std::domain_error("unsupported modulation order " +
                                    std::to_string(modulation_order) +
                                    " (expected one of 2, 4, 16, 64, 256)");
    }
}

bool operator==(const McsTable::Entry& a, const McsTable::Entry& b) {
    return a.modulation_order == b.modulation_order && a.code_rate == b.code_rate;
}

bool operator==(const McsTable& a, const McsTable& b) {
    return a.entries == b.entries;
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return std::tie(a.name, a.altitude_km, a.num_cells, a.beams_per_cell,
                    a.antenna_elements_per_beam, a.total_antennas) ==
           std::tie(b.name, b.altitude_km, b.num_cells, b.beams_per_cell,
                    b.antenna_elements_per_beam, b.total_antennas);
}

bool operator==(const RadioConfig& a, const RadioConfig& b) {
    return std::tie(a.band, a.bandwidth_hz, a.beam_radius_km, a.oversampling,
                    a.numerology, a.cp_duration_s, a.subframe_duration_s,
                    a.symbols_per_subframe, a.subcarriers_per_rb, a.data_res_per_rb) ==
           std::tie(b.band, b.bandwidth_hz, b.beam_radius_km, b.oversampling,
                    b.numerology, b.cp_duration_s, b.subframe_duration_s,
                    b.symbols_per_subframe, b.subcarriers_per_rb, b.data_res_per_rb);
}

bool operator==(const ServiceProfile& a, const ServiceProfile& b) {
    return std::tie(a.service, a.ue_density_per_km2, a.reference_peak_rate_bps,
                    a.reference_bandwidth_hz, a.modulation_order, a.code_rate,
                    a.num_layers, a.reference_layers, a.reference_modulation,
                    a.ul_fraction, a.ul_content_size_bytes) ==
           std::tie(b.service, b.ue_density_per_km2, b.reference_peak_rate_bps,
                    b.reference_bandwidth_hz, b.modulation_order, b.code_rate,
                    b.num_layers, b.reference_layers, b.reference_modulation,
                    b.ul_fraction, b.ul_content_size_bytes);
}

bool operator==(const QuantizationConfig& a, const QuantizationConfig& b) {
    return std::tie(a.q_time_bits, a.q_freq_bits, a.q_llr_bits) ==
           std::tie(b.q_time_bits, b.q_freq_bits, b.q_llr_bits);
}

bool operator==(const LoadModel& a, const LoadModel& b) {
    return std::tie(a.utilization, a.signaling_time_base_s) ==
           std::tie(b.utilization, b.signaling_time_base_s);
}

bool operator==(const ComputeOptions& a, const ComputeOptions& b) {
    return std::tie(a.per_user_scaling, a.allow_custom_reference_modulation) ==
           std::tie(b.per_user_scaling, b.allow_custom_reference_modulation);
}

bool operator==(const Bundle& a, const Bundle& b) {
    return std::tie(a.scenario, a.radio, a.service, a.quantization, a.load,
                    a.options, a.mcs) ==
           std::tie(b.scenario, b.radio, b.service, b.quantization, b.load,
                    b.options, b.mcs);
}

namespace {

struct Checker {
    ValidationReport& report;

    void error(std::string field, std::string message) {
        report.errors.push_back({std::move(field), std::move(message)});
    }
    void warn(std::string field, std::string message) {
        report.warnings.push_back({std::move(field), std::move(message)});
    }
    template <typename T>
    void require(bool ok, std::string field, const char* rule, T got) {
        if (!ok) {
            std::ostringstream msg;
            msg << "must satisfy " << rule << " (got " << got << ")";
            error(std::move(field), msg.str());
        }
    }
};

bool is_identifier(const std::string& text) {
    if (text.empty()) return false;
    for (char ch : text) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') {
            return false;
        }
    }
    return true;
}

void check_scenario(const ScenarioConfig& s, Checker& c) {
    // Names flow into CSV rows and chart labels unquoted.
    if (!is_identifier(s.name)) {
        c.error("scenario.name",
                "must be a non-empty identifier (letters, digits, '_', '-'); got \"" +
                    s.name + "\"");
    }
    c.require(s.altitude_km > 0.0, "scenario.altitude_km", "altitude_km > 0", s.altitude_km);
    c.require(s.num_cells >= 1, "scenario.num_cells", "num_cells >= 1", s.num_cells);
    c.require(s.beams_per_cell >= 1, "scenario.beams_per_cell", "beams_per_cell >= 1",
              s.beams_per_cell);
    c.require(s.antenna_elements_per_beam >= 1, "scenario.antenna_elements_per_beam",
              "antenna_elements_per_beam >= 1", s.antenna_elements_per_beam);
    if (s.num_cells >= 1 && s.beams_per_cell >= 1 && s.antenna_elements_per_beam >= 1 &&
        s.total_antennas != derived_total_antennas(s)) {
        std::ostringstream msg;
        msg << "must equal num_cells * beams_per_cell * antenna_elements_per_beam = "
            << derived_total_antennas(s) << " (got " << s.total_antennas << ")";
        c.error("scenario.total_antennas", msg.str());
    }
}

void check_radio(const RadioConfig& r, Checker& c) {
    c.require(r.bandwidth_hz > 0.0, "radio.bandwidth_hz", "bandwidth_hz > 0", r.bandwidth_hz);
    c.require(r.beam_radius_km > 0.0, "radio.beam_radius_km", "beam_radius_km > 0",
              r.beam_radius_km);
    c.require(r.oversampling >= 1.0, "radio.oversampling", "oversampling >= 1",
              r.oversampling);
    c.require(r.numerology >= 0, "radio.numerology", "numerology >= 0", r.numerology);
    c.require(r.cp_duration_s > 0.0, "radio.cp_duration_s", "cp_duration_s > 0",
              r.cp_duration_s);
    c.require(r.subframe_duration_s > 0.0, "radio.subframe_duration_s",
              "subframe_duration_s > 0", r.subframe_duration_s);
    c.require(r.symbols_per_subframe >= 1, "radio.symbols_per_subframe",
              "symbols_per_subframe >= 1", r.symbols_per_subframe);
    c.require(r.subcarriers_per_rb >= 1, "radio.subcarriers_per_rb",
              "subcarriers_per_rb >= 1", r.subcarriers_per_rb);
    c.require(r.data_res_per_rb >= 0, "radio.data_res_per_rb", "data_res_per_rb >= 0",
              r.data_res_per_rb);
    if (r.symbols_per_subframe >= 1 && r.subcarriers_per_rb >= 1 &&
        r.data_res_per_rb > r.symbols_per_subframe * r.subcarriers_per_rb) {
        std::ostringstream msg;
        msg << "must satisfy data_res_per_rb <= symbols_per_subframe * subcarriers_per_rb = "
            << r.symbols_per_subframe * r.subcarriers_per_rb << " (got " << r.data_res_per_rb
            << ")";
        c.error("radio.data_res_per_rb", msg.str());
    }
}

void check_service(const ServiceProfile& s, bool allow_custom_m_ref, Checker& c) {
    c.require(s.ue_density_per_km2 >= 0.0, "service.ue_density_per_km2",
              "ue_density_per_km2 >= 0", s.ue_density_per_km2);
    c.require(s.reference_peak_rate_bps > 0.0, "service.reference_peak_rate_bps",
              "reference_peak_rate_bps > 0", s.reference_peak_rate_bps);
    c.require(s.reference_bandwidth_hz > 0.0, "service.reference_bandwidth_hz",
              "reference_bandwidth_hz > 0", s.reference_bandwidth_hz);
    c.require(s.code_rate > 0.0 && s.code_rate <= 1.0, "service.code_rate",
              "code_rate in (0, 1]", s.code_rate);
    c.require(s.num_layers >= 1, "service.num_layers", "num_layers >= 1", s.num_layers);
    c.require(s.reference_layers >= 1, "service.reference_layers", "reference_layers >= 1",
              s.reference_layers);
    c.require(s.ul_fraction >= 0.0 && s.ul_fraction <= 1.0, "service.ul_fraction",
              "ul_fraction in [0, 1]", s.ul_fraction);
    c.require(s.ul_content_size_bytes >= 0.0, "service.ul_content_size_bytes",
              "ul_content_size_bytes >= 0", s.ul_content_size_bytes);

    int expected_m_ref = 0;
    try {
        expected_m_ref = reference_modulation_for(s.modulation_order);
    } catch (const std::domain_error&) {
        std::ostringstream msg;
        msg << "must be one of {2, 4, 16, 64, 256} (got " << s.modulation_order << ")";
        c.error("service.modulation_order", msg.str());
        return;
    }
    if (allow_custom_m_ref) {
        c.require(s.reference_modulation >= 1, "service.reference_modulation",
                  "reference_modulation >= 1", s.reference_modulation);
    } else if (s.reference_modulation != expected_m_ref) {
        std::ostringstream msg;
        msg << "must follow the reference-modulation lookup rule {2,4}->2, 16->4, "
               "64->16, 256->64: expected "
            << expected_m_ref << " for modulation_order " << s.modulation_order << " (got "
            << s.reference_modulation << ")";
        c.error("service.reference_modulation", msg.str());
    }
}

void check_quantization(const QuantizationConfig& q, Checker& c) {
    c.require(q.q_time_bits >= 1, "quantization.q_time_bits", "q_time_bits >= 1",
              q.q_time_bits);
    c.require(q.q_freq_bits >= 1, "quantization.q_freq_bits", "q_freq_bits >= 1",
              q.q_freq_bits);
    c.require(q.q_llr_bits >= 1, "quantization.q_llr_bits", "q_llr_bits >= 1", q.q_llr_bits);
    if (q.q_freq_bits > q.q_time_bits) {
        std::ostringstream msg;
        msg << "must satisfy q_freq_bits <= q_time_bits (got " << q.q_freq_bits << " > "
            << q.q_time_bits << ")";
        c.error("quantization.q_freq_bits", msg.str());
    } else if (q.q_freq_bits == q.q_time_bits && q.q_time_bits >= 1) {
        c.warn("quantization.q_freq_bits",
               "q_freq_bits equals q_time_bits; frequency-domain samples usually need "
               "fewer bits");
    }
}

void check_load(const LoadModel& l, Checker& c) {
    c.require(l.utilization >= 0.0 && l.utilization <= 1.0, "load.utilization",
              "utilization in [0, 1]", l.utilization);
    c.require(l.signaling_time_base_s > 0.0, "load.signaling_time_base_s",
              "signaling_time_base_s > 0", l.signaling_time_base_s);
}

void check_mcs(const McsTable& mcs, Checker& c) {
    int previous = 0;
    for (std::size_t i = 0; i < mcs.entries.size(); ++i) {
        const auto& e = mcs.entries[i];
        const std::string field = "mcs_table[" + std::to_string(i) + "]";
        try {
            reference_modulation_for(e.modulation_order);
        } catch (const std::domain_error&) {
            c.error(field + ".modulation_order",
                    "must be one of {2, 4, 16, 64, 256} (got " +
                        std::to_string(e.modulation_order) + ")");
        }
        if (e.modulation_order <= previous) {
            c.error(field + ".modulation_order",
                    "modulation orders must be strictly increasing");
        }
        previous = e.modulation_order;
        c.require(e.code_rate > 0.0 && e.code_rate <= 1.0, field + ".code_rate",
                  "code_rate in (0, 1]", e.code_rate);
    }
}

}  // namespace

ValidationReport validate(const Bundle& bundle) {
    ValidationReport report;
    Checker c{report};
    check_scenario(bundle.scenario, c);
    check_radio(bundle.radio, c);
    check_service(bundle.service, bundle.options.allow_custom_reference_modulation, c);
    check_quantization(bundle.quantization, c);
    check_load(bundle.load, c);
    if (bundle.mcs) check_mcs(*bundle.mcs, c);
    return report;
}

void validate_or_throw(const Bundle& bundle) {
    ValidationReport report = validate(bundle);
    if (!report.ok()) throw InvariantViolation(std::move(report.errors));
}

std::string bundle_label(const Bundle& bundle) {
    return bundle.scenario.name + "-" + std::string(to_string(bundle.radio.band)) + "-" +
           std::string(to_string(bundle.service.service));
}

namespace {

ScenarioConfig make_scenario(int index) {
    ScenarioConfig s;
    if (index == 1) {
        s.name = "SC1";
        s.altitude_km = 600.0;
        s.num_cells = 19;
    } else {
        s.name = "SC2";
        s.altitude_km = 10.0;
        s.num_cells = 8;
    }
    s.beams_per_cell = 1;
    s.antenna_elements_per_beam = 2;
    s.total_antennas = derived_total_antennas(s);
    return s;
}

RadioConfig make_radio(int scenario_index, Band band) {
    RadioConfig r;
    r.band = band;
    r.bandwidth_hz = band == Band::S ? 30e6 : 400e6;
    if (scenario_index == 1) {
        r.beam_radius_km = band == Band::S ? 25.0 : 10.0;
    } else {
        r.beam_radius_km = 6.0;
    }
    r.oversampling = 1.0;
    r.numerology = 0;
    r.cp_duration_s = 4.688e-6;
    r.subframe_duration_s = 1e-3;
    r.symbols_per_subframe = 14;
    r.subcarriers_per_rb = 12;
    r.data_res_per_rb = 110;
    return r;
}

ServiceProfile make_service(ServiceType type, Band band) {
    ServiceProfile s;
    s.service = type;
    if (type == ServiceType::eMBB) {
        s.ue_density_per_km2 = 0.1;
        s.reference_peak_rate_bps = band == Band::S ? 2e6 : 100e6;
        s.modulation_order = 16;
        s.code_rate = 0.64;
    } else {
        s.ue_density_per_km2 = 500.0;
        s.reference_peak_rate_bps = band == Band::S ? 0.256e6 : 7e6;
        s.modulation_order = 4;
        s.code_rate = 0.66;
    }
    s.reference_bandwidth_hz = band == Band::S ? 5e6 : 100e6;
    s.num_layers = 8;
    s.reference_layers = 1;
    s.reference_modulation = reference_modulation_for(s.modulation_order);
    s.ul_fraction = 1.0;
    s.ul_content_size_bytes = 30.0;
    return s;
}

Bundle make_preset(int scenario_index, Band band, ServiceType service) {
    Bundle b;
    b.scenario = make_scenario(scenario_index);
    b.radio = make_radio(scenario_index, band);
    b.service = make_service(service, band);
    b.quantization = QuantizationConfig{16, 10, 3};
    b.load = LoadModel{0.6, 1e-3};
    return b;
}

// Base catalog: one entry per (scenario, band); S band pairs with eMBB,
// Ka band with mMTC.
struct PresetKey {
    int scenario;
    Band band;
    ServiceType service;
};

constexpr std::array<PresetKey, 4> kBasePresets = {{
    {1, Band::S, ServiceType::eMBB},
    {1, Band::Ka, ServiceType::mMTC},
    {2, Band::S, ServiceType::eMBB},
    {2, Band::Ka, ServiceType::mMTC},
}};

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(kBasePresets.size());
    for (const auto& key : kBasePresets) {
        names.push_back(bundle_label(make_preset(key.scenario, key.band, key.service)));
    }
    return names;
}

std::vector<Bundle> preset_scenarios() {
    std::vector<Bundle> bundles;
    bundles.reserve(kBasePresets.size());
    for (const auto& key : kBasePresets) {
        bundles.push_back(make_preset(key.scenario, key.band, key.service));
    }
    return bundles;
}

std::optional<Bundle> find_preset(std::string_view name) {
    const std::string t = normalize_token(name);
    for (int scenario : {1, 2}) {
        for (Band band : {Band::S, Band::Ka}) {
            for (ServiceType service : {ServiceType::eMBB, ServiceType::mMTC}) {
                Bundle b = make_preset(scenario, band, service);
                if (normalize_token(bundle_label(b)) == t) return b;
            }
        }
    }
    return std::nullopt;
}

}  // namespace fhdim
