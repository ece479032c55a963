#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "fhdim/ratecalc.hpp"

namespace fhdim::report {

/// Scientific notation with 6 significant digits and a compact exponent:
/// 4.20104637e12 -> "4.20105e12".
std::string format_rate_sci(double bps);

/// Two decimals: 41.3494 -> "41.35".
std::string format_percent(double percent);

/// Auto-scaled by powers of 1000: 7.16283e12 -> "7.163 Tbit/s".
std::string format_rate_scaled(double bps);

/// CSV with the fixed header
/// scenario,band,service,split_option,rate_bps,reduction_vs_opt8_percent
/// one row per (table, option), LF newlines, byte-deterministic.
std::string render_csv(std::span<const RateTable> tables);

enum class ChartGrouping { by_scenario, by_band };

/// Standalone SVG bar chart: one bar group per table (log rate axis, one bar
/// per split option, value labels in CSV notation). Grouping picks the group
/// order: scenario-major or band-major.
std::string render_bar_chart_svg(std::span<const RateTable> tables,
                                 ChartGrouping grouping);

/// Standalone SVG line chart over a modulation sweep: log-scale x over M,
/// one polyline each for Opt7_3, Opt6, and Opt2.
std::string render_sweep_chart_svg(std::span<const McsSweepPoint> sweep);

/// CSV for sweeps: scenario,band,service,m,rc,opt7_3_bps,opt6_bps,opt2_bps.
std::string render_sweep_csv(std::span<const McsSweepPoint> sweep);

void emit_csv(std::span<const RateTable> tables, const std::filesystem::path& dest);
void emit_bar_chart_svg(std::span<const RateTable> tables, ChartGrouping grouping,
                        const std::filesystem::path& dest);
void emit_sweep_chart_svg(std::span<const McsSweepPoint> sweep,
                          const std::filesystem::path& dest);
void emit_sweep_csv(std::span<const McsSweepPoint> sweep,
                    const std::filesystem::path& dest);

/// Writes pre-rendered text to a file; used by every emitter.
/// Throws IoError on failure and leaves no partial file.
void write_file(const std::string& payload, const std::filesystem::path& dest);

}  // namespace fhdim::report
