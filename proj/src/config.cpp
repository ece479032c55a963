#include "fhdim/config.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fhdim::config {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void missing_key(std::string_view origin, const std::string& path) {
    throw SchemaError(std::string(origin) + ": missing required key '" + path + "'");
}

[[noreturn]] void wrong_type(std::string_view origin, const std::string& path,
                             const char* expected) {
    throw SchemaError(std::string(origin) + ": key '" + path + "' expects " + expected);
}

// One config section; tracks which keys were consumed so anything left over
// is rejected.
class Section {
public:
    Section(const json* object, std::string name, std::string_view origin)
        : object_(object), name_(std::move(name)), origin_(origin) {}

    bool present() const { return object_ != nullptr; }

    double number(const std::string& key) {
        const json* v = take(key);
        if (v == nullptr) missing_key(origin_, path(key));
        if (!v->is_number()) wrong_type(origin_, path(key), "a number");
        return v->get<double>();
    }
    double number_or(const std::string& key, double fallback) {
        const json* v = take(key);
        if (v == nullptr) return fallback;
        if (!v->is_number()) wrong_type(origin_, path(key), "a number");
        return v->get<double>();
    }
    long long integer(const std::string& key) {
        const json* v = take(key);
        if (v == nullptr) missing_key(origin_, path(key));
        if (!v->is_number_integer()) wrong_type(origin_, path(key), "an integer");
        return v->get<long long>();
    }
    long long integer_or(const std::string& key, long long fallback) {
        const json* v = take(key);
        if (v == nullptr) return fallback;
        if (!v->is_number_integer()) wrong_type(origin_, path(key), "an integer");
        return v->get<long long>();
    }
    bool boolean_or(const std::string& key, bool fallback) {
        const json* v = take(key);
        if (v == nullptr) return fallback;
        if (!v->is_boolean()) wrong_type(origin_, path(key), "a boolean");
        return v->get<bool>();
    }
    std::string text(const std::string& key) {
        const json* v = take(key);
        if (v == nullptr) missing_key(origin_, path(key));
        if (!v->is_string()) wrong_type(origin_, path(key), "a string");
        return v->get<std::string>();
    }
    std::string text_or(const std::string& key, std::string fallback) {
        const json* v = take(key);
        if (v == nullptr) return fallback;
        if (!v->is_string()) wrong_type(origin_, path(key), "a string");
        return v->get<std::string>();
    }

    void reject_unknown() const {
        if (object_ == nullptr) return;
        for (auto it = object_->begin(); it != object_->end(); ++it) {
            if (!consumed_.count(it.key())) {
                throw SchemaError(std::string(origin_) + ": unknown key '" +
                                  path(it.key()) + "'");
            }
        }
    }

private:
    const json* take(const std::string& key) {
        if (object_ == nullptr) return nullptr;
        auto it = object_->find(key);
        if (it == object_->end()) return nullptr;
        consumed_.insert(key);
        return &*it;
    }
    std::string path(const std::string& key) const { return name_ + "." + key; }

    const json* object_;
    std::string name_;
    std::string_view origin_;
    std::set<std::string> consumed_;
};

const json* section_object(const json& doc, const char* name, std::string_view origin) {
    auto it = doc.find(name);
    if (it == doc.end()) return nullptr;
    if (!it->is_object()) {
        wrong_type(origin, name, "an object section");
    }
    return &*it;
}

McsTable mcs_from_array(const json& array, std::string_view origin) {
    if (!array.is_array()) {
        wrong_type(origin, "mcs_table", "an array of {m, rc} objects");
    }
    McsTable table;
    for (std::size_t i = 0; i < array.size(); ++i) {
        const json& entry = array[i];
        const std::string path = "mcs_table[" + std::to_string(i) + "]";
        if (!entry.is_object()) wrong_type(origin, path, "an {m, rc} object");
        for (auto it = entry.begin(); it != entry.end(); ++it) {
            if (it.key() != "m" && it.key() != "rc") {
                throw SchemaError(std::string(origin) + ": unknown key '" + path + "." +
                                  it.key() + "'");
            }
        }
        auto m = entry.find("m");
        auto rc = entry.find("rc");
        if (m == entry.end()) missing_key(origin, path + ".m");
        if (rc == entry.end()) missing_key(origin, path + ".rc");
        if (!m->is_number_integer()) wrong_type(origin, path + ".m", "an integer");
        if (!rc->is_number()) wrong_type(origin, path + ".rc", "a number");
        table.entries.push_back({m->get<int>(), rc->get<double>()});
    }
    return table;
}

int narrow_int(long long value, std::string_view origin, const std::string& path) {
    if (value < INT32_MIN || value > INT32_MAX) {
        throw SchemaError(std::string(origin) + ": key '" + path +
                          "' is out of range for an integer field");
    }
    return static_cast<int>(value);
}

}  // namespace

Bundle bundle_from_json_text(std::string_view text, std::string_view origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(origin) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError(std::string(origin) + ": document root must be an object");
    }

    static const std::set<std::string> kSections = {"scenario",      "radio", "service",
                                                    "quantization", "load",  "mcs_table",
                                                    "overrides"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!kSections.count(it.key())) {
            throw SchemaError(std::string(origin) + ": unknown key '" + it.key() + "'");
        }
    }

    Section scenario(section_object(doc, "scenario", origin), "scenario", origin);
    Section radio(section_object(doc, "radio", origin), "radio", origin);
    Section service(section_object(doc, "service", origin), "service", origin);
    Section quantization(section_object(doc, "quantization", origin), "quantization",
                         origin);
    Section load(section_object(doc, "load", origin), "load", origin);
    Section overrides(section_object(doc, "overrides", origin), "overrides", origin);

    if (!scenario.present()) missing_key(origin, "scenario");
    if (!radio.present()) missing_key(origin, "radio");
    if (!service.present()) missing_key(origin, "service");

    Bundle b;

    // Band and service type first; several defaults key off them.
    const std::string band_text = radio.text("band");
    const auto band = parse_band(band_text);
    if (!band) {
        throw SchemaError(std::string(origin) +
                          ": key 'radio.band' must be \"S\" or \"Ka\" (got \"" + band_text +
                          "\")");
    }
    const std::string service_text = service.text("service");
    const auto service_type = parse_service_type(service_text);
    if (!service_type) {
        throw SchemaError(std::string(origin) +
                          ": key 'service.service' must be \"eMBB\" or \"mMTC\" (got \"" +
                          service_text + "\")");
    }
    const bool is_s_band = *band == Band::S;
    const bool is_embb = *service_type == ServiceType::eMBB;

    b.scenario.name = scenario.text_or("name", "custom");
    b.scenario.altitude_km = scenario.number("altitude_km");
    b.scenario.num_cells =
        narrow_int(scenario.integer("num_cells"), origin, "scenario.num_cells");
    b.scenario.beams_per_cell = narrow_int(scenario.integer_or("beams_per_cell", 1), origin,
                                           "scenario.beams_per_cell");
    b.scenario.antenna_elements_per_beam =
        narrow_int(scenario.integer_or("antenna_elements_per_beam", 2), origin,
                   "scenario.antenna_elements_per_beam");
    b.scenario.total_antennas =
        scenario.integer_or("total_antennas", derived_total_antennas(b.scenario));

    b.radio.band = *band;
    b.radio.bandwidth_hz = radio.number_or("bandwidth_hz", is_s_band ? 30e6 : 400e6);
    b.radio.beam_radius_km = radio.number("beam_radius_km");
    b.radio.oversampling = radio.number_or("oversampling", 1.0);
    b.radio.numerology =
        narrow_int(radio.integer_or("numerology", 0), origin, "radio.numerology");
    b.radio.cp_duration_s = radio.number_or("cp_duration_s", 4.688e-6);
    b.radio.subframe_duration_s = radio.number_or("subframe_duration_s", 1e-3);
    b.radio.symbols_per_subframe = narrow_int(radio.integer_or("symbols_per_subframe", 14),
                                              origin, "radio.symbols_per_subframe");
    b.radio.subcarriers_per_rb = narrow_int(radio.integer_or("subcarriers_per_rb", 12),
                                            origin, "radio.subcarriers_per_rb");
    b.radio.data_res_per_rb = narrow_int(radio.integer_or("data_res_per_rb", 110), origin,
                                         "radio.data_res_per_rb");

    b.service.service = *service_type;
    b.service.ue_density_per_km2 =
        service.number_or("ue_density_per_km2", is_embb ? 0.1 : 500.0);
    b.service.reference_peak_rate_bps = service.number_or(
        "reference_peak_rate_bps",
        is_embb ? (is_s_band ? 2e6 : 100e6) : (is_s_band ? 0.256e6 : 7e6));
    b.service.reference_bandwidth_hz =
        service.number_or("reference_bandwidth_hz", is_s_band ? 5e6 : 100e6);
    b.service.modulation_order = narrow_int(
        service.integer_or("modulation_order", is_embb ? 16 : 4), origin,
        "service.modulation_order");
    b.service.code_rate = service.number_or("code_rate", is_embb ? 0.64 : 0.66);
    b.service.num_layers =
        narrow_int(service.integer_or("num_layers", 8), origin, "service.num_layers");
    b.service.reference_layers = narrow_int(service.integer_or("reference_layers", 1),
                                            origin, "service.reference_layers");
    int default_m_ref = 0;
    try {
        default_m_ref = reference_modulation_for(b.service.modulation_order);
    } catch (const std::domain_error&) {
        default_m_ref = 0;  // validate() reports the bad modulation order itself
    }
    b.service.reference_modulation =
        narrow_int(service.integer_or("reference_modulation", default_m_ref), origin,
                   "service.reference_modulation");
    b.service.ul_fraction = service.number_or("ul_fraction", 1.0);
    b.service.ul_content_size_bytes = service.number_or("ul_content_size_bytes", 30.0);

    b.quantization.q_time_bits = narrow_int(quantization.integer_or("q_time_bits", 16),
                                            origin, "quantization.q_time_bits");
    b.quantization.q_freq_bits = narrow_int(quantization.integer_or("q_freq_bits", 10),
                                            origin, "quantization.q_freq_bits");
    b.quantization.q_llr_bits = narrow_int(quantization.integer_or("q_llr_bits", 3), origin,
                                           "quantization.q_llr_bits");

    b.load.utilization = load.number_or("utilization", 0.6);
    b.load.signaling_time_base_s = load.number_or("signaling_time_base_s", 1e-3);

    b.options.per_user_scaling = overrides.boolean_or("per_user_scaling", true);
    b.options.allow_custom_reference_modulation =
        overrides.boolean_or("allow_custom_reference_modulation", false);
    // The overrides section may restate the signaling time base; it wins.
    b.load.signaling_time_base_s =
        overrides.number_or("signaling_time_base_s", b.load.signaling_time_base_s);

    if (auto it = doc.find("mcs_table"); it != doc.end()) {
        b.mcs = mcs_from_array(*it, origin);
    }

    scenario.reject_unknown();
    radio.reject_unknown();
    service.reject_unknown();
    quantization.reject_unknown();
    load.reject_unknown();
    overrides.reject_unknown();

    validate_or_throw(b);
    return b;
}

std::string bundle_to_json_text(const Bundle& bundle) {
    ordered_json doc;
    doc["scenario"] = {
        {"name", bundle.scenario.name},
        {"altitude_km", bundle.scenario.altitude_km},
        {"num_cells", bundle.scenario.num_cells},
        {"beams_per_cell", bundle.scenario.beams_per_cell},
        {"antenna_elements_per_beam", bundle.scenario.antenna_elements_per_beam},
        {"total_antennas", bundle.scenario.total_antennas},
    };
    doc["radio"] = {
        {"band", std::string(to_string(bundle.radio.band))},
        {"bandwidth_hz", bundle.radio.bandwidth_hz},
        {"beam_radius_km", bundle.radio.beam_radius_km},
        {"oversampling", bundle.radio.oversampling},
        {"numerology", bundle.radio.numerology},
        {"cp_duration_s", bundle.radio.cp_duration_s},
        {"subframe_duration_s", bundle.radio.subframe_duration_s},
        {"symbols_per_subframe", bundle.radio.symbols_per_subframe},
        {"subcarriers_per_rb", bundle.radio.subcarriers_per_rb},
        {"data_res_per_rb", bundle.radio.data_res_per_rb},
    };
    doc["service"] = {
        {"service", std::string(to_string(bundle.service.service))},
        {"ue_density_per_km2", bundle.service.ue_density_per_km2},
        {"reference_peak_rate_bps", bundle.service.reference_peak_rate_bps},
        {"reference_bandwidth_hz", bundle.service.reference_bandwidth_hz},
        {"modulation_order", bundle.service.modulation_order},
        {"code_rate", bundle.service.code_rate},
        {"num_layers", bundle.service.num_layers},
        {"reference_layers", bundle.service.reference_layers},
        {"reference_modulation", bundle.service.reference_modulation},
        {"ul_fraction", bundle.service.ul_fraction},
        {"ul_content_size_bytes", bundle.service.ul_content_size_bytes},
    };
    doc["quantization"] = {
        {"q_time_bits", bundle.quantization.q_time_bits},
        {"q_freq_bits", bundle.quantization.q_freq_bits},
        {"q_llr_bits", bundle.quantization.q_llr_bits},
    };
    doc["load"] = {
        {"utilization", bundle.load.utilization},
        {"signaling_time_base_s", bundle.load.signaling_time_base_s},
    };
    doc["overrides"] = {
        {"per_user_scaling", bundle.options.per_user_scaling},
        {"allow_custom_reference_modulation",
         bundle.options.allow_custom_reference_modulation},
    };
    if (bundle.mcs) {
        ordered_json rows = ordered_json::array();
        for (const auto& entry : bundle.mcs->entries) {
            rows.push_back({{"m", entry.modulation_order}, {"rc", entry.code_rate}});
        }
        doc["mcs_table"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

Bundle load_bundle(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading config file '" + path.string() + "'");
    }
    return bundle_from_json_text(buffer.str(), path.string());
}

void save_bundle(const Bundle& bundle, const std::filesystem::path& path) {
    const std::string payload = bundle_to_json_text(bundle);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write config file '" + path.string() + "'");
    }
    out << payload;
    out.flush();
    if (!out.good()) {
        out.close();
        std::error_code ec;
        std::filesystem::remove(path, ec);
        throw IoError("error while writing config file '" + path.string() + "'");
    }
}

McsTable load_mcs_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read MCS table file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    json doc;
    try {
        doc = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    const std::string origin = path.string();
    if (doc.is_object()) {
        auto it = doc.find("mcs_table");
        if (it == doc.end()) missing_key(origin, "mcs_table");
        return mcs_from_array(*it, origin);
    }
    return mcs_from_array(doc, origin);
}

McsTable parse_mcs_pairs(std::string_view pairs) {
    McsTable table;
    std::string text(pairs);
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("malformed MCS pair '" + item +
                                        "' (expected M:Rc, e.g. 16:0.64)");
        }
        try {
            std::size_t used = 0;
            const std::string m_text = item.substr(0, colon);
            const std::string rc_text = item.substr(colon + 1);
            const int m = std::stoi(m_text, &used);
            if (used != m_text.size()) throw std::invalid_argument(m_text);
            const double rc = std::stod(rc_text, &used);
            if (used != rc_text.size()) throw std::invalid_argument(rc_text);
            table.entries.push_back({m, rc});
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed MCS pair '" + item +
                                        "' (expected M:Rc, e.g. 16:0.64)");
        }
    }
    if (table.entries.empty()) {
        throw std::invalid_argument("empty MCS pair list");
    }
    return table;
}

}  // namespace fhdim::config
