#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fhdim/errors.hpp"

namespace fhdim {

enum class Band { S, Ka };
enum class ServiceType { eMBB, mMTC };

/// Uplink functional-split options, ordered by how much baseband processing
/// stays onboard the platform: Opt8 forwards raw time-domain IQ, Opt2 is the
/// high-layer DU/CU split.
enum class SplitOption { Opt8, Opt7_1, Opt7_2, Opt7_3, Opt6, Opt2 };

inline constexpr std::array<SplitOption, 6> kAllSplitOptions = {
    SplitOption::Opt8,   SplitOption::Opt7_1, SplitOption::Opt7_2,
    SplitOption::Opt7_3, SplitOption::Opt6,   SplitOption::Opt2};

inline constexpr std::size_t kSplitOptionCount = kAllSplitOptions.size();

std::string_view to_string(SplitOption option);
std::string_view to_string(Band band);
std::string_view to_string(ServiceType service);

/// Parses "Opt7_1" (also accepts the dotted form "Opt7.1", case-insensitive).
std::optional<SplitOption> parse_split_option(std::string_view text);
std::optional<Band> parse_band(std::string_view text);
std::optional<ServiceType> parse_service_type(std::string_view text);

/// Platform and coverage geometry.
struct ScenarioConfig {
    std::string name;                    // short identifier, e.g. "SC1"
    double altitude_km = 0.0;            // platform height, > 0
    int num_cells = 1;                   // cells covered on the ground
    int beams_per_cell = 1;              // beams serving each cell
    int antenna_elements_per_beam = 1;   // elements forming one beam
    long long total_antennas = 0;        // derived: cells * beams * elements
};

/// num_cells * beams_per_cell * antenna_elements_per_beam.
long long derived_total_antennas(const ScenarioConfig& scenario);

/// Band, bandwidth, and OFDM frame constants.
struct RadioConfig {
    Band band = Band::S;
    double bandwidth_hz = 0.0;        // per-beam bandwidth
    double beam_radius_km = 0.0;      // beam footprint radius on the ground
    double oversampling = 1.0;        // samples per second per Hz, >= 1
    int numerology = 0;               // subcarrier-spacing index
    double cp_duration_s = 0.0;       // cyclic prefix duration
    double subframe_duration_s = 0.0;
    int symbols_per_subframe = 1;
    int subcarriers_per_rb = 1;
    int data_res_per_rb = 0;          // data-carrying REs per resource block
};

/// Traffic profile of the served users.
struct ServiceProfile {
    ServiceType service = ServiceType::eMBB;
    double ue_density_per_km2 = 0.0;
    double reference_peak_rate_bps = 0.0;
    double reference_bandwidth_hz = 0.0;
    int modulation_order = 2;           // M, one of {2, 4, 16, 64, 256}
    double code_rate = 1.0;             // in (0, 1]
    int num_layers = 1;
    int reference_layers = 1;
    int reference_modulation = 2;       // M_ref, from the lookup rule
    double ul_fraction = 1.0;           // share of UEs requesting uplink
    double ul_content_size_bytes = 0.0; // average uplink content per UE
};

/// Standard reference modulation order for a modulation order:
/// {2,4} -> 2, 16 -> 4, 64 -> 16, 256 -> 64.
/// Throws std::domain_error for any other modulation order.
int reference_modulation_for(int modulation_order);

/// Bit widths used when forwarding samples, frequency-domain symbols, and
/// demodulated LLRs over the feeder link.
struct QuantizationConfig {
    int q_time_bits = 16;
    int q_freq_bits = 10;
    int q_llr_bits = 3;
};

/// Resource-element load and the time base that turns per-UE uplink content
/// into a signaling rate.
struct LoadModel {
    double utilization = 0.6;             // fraction of loaded REs, in [0, 1]
    double signaling_time_base_s = 1e-3;  // period the uplink content is spread over
};

/// Computation switches (config file `overrides` section).
struct ComputeOptions {
    // Keep the per-user multiplier in the service-link product; turning it
    // off is a sensitivity-study mode.
    bool per_user_scaling = true;
    // Accept reference_modulation values outside the standard lookup rule.
    bool allow_custom_reference_modulation = false;
};

/// Modulation-order / code-rate pairs for sweeps, modulation strictly
/// increasing.
struct McsTable {
    struct Entry {
        int modulation_order = 2;
        double code_rate = 1.0;
    };
    std::vector<Entry> entries;
};

/// One complete, self-contained dimensioning input.
struct Bundle {
    ScenarioConfig scenario;
    RadioConfig radio;
    ServiceProfile service;
    QuantizationConfig quantization;
    LoadModel load;
    ComputeOptions options;
    std::optional<McsTable> mcs;
};

bool operator==(const McsTable::Entry&, const McsTable::Entry&);
bool operator==(const McsTable&, const McsTable&);
bool operator==(const ScenarioConfig&, const ScenarioConfig&);
bool operator==(const RadioConfig&, const RadioConfig&);
bool operator==(const ServiceProfile&, const ServiceProfile&);
bool operator==(const QuantizationConfig&, const QuantizationConfig&);
bool operator==(const LoadModel&, const LoadModel&);
bool operator==(const ComputeOptions&, const ComputeOptions&);
bool operator==(const Bundle&, const Bundle&);

/// Result of checking every domain invariant. Warnings do not block use.
struct ValidationReport {
    std::vector<Diagnostic> errors;
    std::vector<Diagnostic> warnings;

    bool ok() const noexcept { return errors.empty(); }
};

/// Checks all invariants of every member and collects every violation
/// (never fail-fast).
ValidationReport validate(const Bundle& bundle);

/// validate(), throwing InvariantViolation with the full error list on
/// failure.
void validate_or_throw(const Bundle& bundle);

/// "SC1-S-eMBB"-style label derived from scenario name, band, and service.
std::string bundle_label(const Bundle& bundle);

/// Names of the four base parameter sets, in catalog order. These are also
/// the fixture file stems (lowercased, '-' -> '_').
std::vector<std::string> preset_names();

/// The four base parameter-set bundles, one per (scenario, band) pair.
std::vector<Bundle> preset_scenarios();

/// Builds any of the eight scenario x band x service combinations by name
/// ("SC2-Ka-mMTC"; matching ignores case and treats '-', '_' alike).
/// Returns nullopt for unknown names.
std::optional<Bundle> find_preset(std::string_view name);

}  // namespace fhdim
