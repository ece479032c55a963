#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fhdim/config.hpp"
#include "fhdim/model.hpp"
#include "fhdim/ratecalc.hpp"
#include "fhdim/report.hpp"

namespace {

using namespace fhdim;

struct SourceArgs {
    std::vector<std::string> presets;
    std::vector<std::string> configs;
};

struct OutputArgs {
    std::string out;
    std::string format = "text";
};

void add_source_flags(CLI::App* cmd, SourceArgs& args) {
    cmd->add_option("--preset", args.presets,
                    "named parameter set (repeatable; 'all' selects the base catalog)");
    cmd->add_option("--config", args.configs, "bundle config file (repeatable)");
}

void add_output_flags(CLI::App* cmd, OutputArgs& args,
                      const std::vector<std::string>& formats) {
    cmd->add_option("--out", args.out, "output file path");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember(formats));
}

std::vector<Bundle> resolve_bundles(const SourceArgs& args, const CLI::App* cmd) {
    std::vector<Bundle> bundles;
    for (const std::string& name : args.presets) {
        if (name == "all") {
            for (Bundle& b : preset_scenarios()) bundles.push_back(std::move(b));
            continue;
        }
        std::optional<Bundle> preset = find_preset(name);
        if (!preset) {
            throw std::invalid_argument("unknown preset '" + name +
                                        "'; run `fhdim presets` for the catalog");
        }
        bundles.push_back(std::move(*preset));
    }
    for (const std::string& path : args.configs) {
        bundles.push_back(config::load_bundle(path));
    }
    if (bundles.empty()) {
        std::cerr << "error: select at least one input via --preset or --config\n"
                  << cmd->help() << std::flush;
        throw CLI::RuntimeError(2);
    }
    for (const Bundle& b : bundles) {
        const ValidationReport report = validate(b);
        for (const Diagnostic& w : report.warnings) {
            std::cerr << "warning: " << bundle_label(b) << ": " << w.field << ": "
                      << w.message << "\n";
        }
        if (!report.ok()) throw InvariantViolation(report.errors);
    }
    return bundles;
}

void deliver(const std::string& payload, const OutputArgs& out) {
    if (out.out.empty()) {
        std::cout << payload << std::flush;
    } else {
        report::write_file(payload, out.out);
    }
}

void require_out_path(const OutputArgs& out) {
    if (out.out.empty()) {
        throw std::invalid_argument("--out is required for format '" + out.format + "'");
    }
}

std::string padded(const std::string& text, std::size_t width) {
    std::string out = text;
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string render_compute_text(const std::vector<RateTable>& tables) {
    std::string out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const RateTable& table = tables[i];
        if (i != 0) out += '\n';
        out += "# " + table.scenario + "-" + table.band + "-" + table.service + "\n";
        out += padded("option", 8) + padded("rate", 18) + "vs Opt8\n";
        const double reference = table.rate(SplitOption::Opt8);
        for (SplitOption option : kAllSplitOptions) {
            const double rate = table.rate(option);
            const std::string reduction =
                reference > 0.0
                    ? report::format_percent(reduction_percent(reference, rate)) + "%"
                    : "-";
            out += padded(std::string(to_string(option)), 8) +
                   padded(report::format_rate_scaled(rate), 18) + reduction + "\n";
        }
    }
    return out;
}

int cmd_compute(const SourceArgs& sources, const OutputArgs& output,
                const std::string& group_by, const CLI::App* cmd) {
    const std::vector<Bundle> bundles = resolve_bundles(sources, cmd);
    std::vector<RateTable> tables;
    tables.reserve(bundles.size());
    for (const Bundle& b : bundles) {
        tables.push_back(compute_rate_table(b));
    }
    if (output.format == "text") {
        deliver(render_compute_text(tables), output);
    } else if (output.format == "csv") {
        require_out_path(output);
        report::emit_csv(tables, output.out);
    } else {
        require_out_path(output);
        const auto grouping = group_by == "band" ? report::ChartGrouping::by_band
                                                 : report::ChartGrouping::by_scenario;
        report::emit_bar_chart_svg(tables, grouping, output.out);
    }
    return 0;
}

McsTable resolve_mcs(const std::string& pairs, const std::string& file,
                     const Bundle& bundle) {
    if (!pairs.empty()) return config::parse_mcs_pairs(pairs);
    if (!file.empty()) return config::load_mcs_table(file);
    if (bundle.mcs) return *bundle.mcs;
    throw std::invalid_argument(
        "no MCS table: pass --mcs-pairs or --mcs, or embed mcs_table in the config");
}

std::string render_sweep_text(const std::string& label,
                              const std::vector<McsSweepPoint>& sweep) {
    std::string out = "# " + label + "\n";
    out += padded("m", 5) + padded("rc", 8) + padded("Opt7_3", 14) + padded("Opt6", 14) +
           "Opt2\n";
    for (const McsSweepPoint& p : sweep) {
        char rc[16];
        std::snprintf(rc, sizeof rc, "%.4g", p.code_rate);
        out += padded(std::to_string(p.modulation_order), 5) + padded(rc, 8) +
               padded(report::format_rate_sci(p.table.rate(SplitOption::Opt7_3)), 14) +
               padded(report::format_rate_sci(p.table.rate(SplitOption::Opt6)), 14) +
               report::format_rate_sci(p.table.rate(SplitOption::Opt2)) + "\n";
    }
    return out;
}

int cmd_sweep(const SourceArgs& sources, const OutputArgs& output,
              const std::string& pairs, const std::string& file, const CLI::App* cmd) {
    const std::vector<Bundle> bundles = resolve_bundles(sources, cmd);
    std::vector<std::pair<std::string, std::vector<McsSweepPoint>>> sweeps;
    for (const Bundle& b : bundles) {
        sweeps.emplace_back(bundle_label(b), sweep_mcs(b, resolve_mcs(pairs, file, b)));
    }
    if (output.format == "text") {
        std::string out;
        for (std::size_t i = 0; i < sweeps.size(); ++i) {
            if (i != 0) out += '\n';
            out += render_sweep_text(sweeps[i].first, sweeps[i].second);
        }
        deliver(out, output);
    } else if (output.format == "csv") {
        require_out_path(output);
        std::string out;
        for (std::size_t i = 0; i < sweeps.size(); ++i) {
            const std::string csv = report::render_sweep_csv(sweeps[i].second);
            out += i == 0 ? csv : csv.substr(csv.find('\n') + 1);  // header once
        }
        report::write_file(out, output.out);
    } else {
        require_out_path(output);
        if (sweeps.size() != 1) {
            throw std::invalid_argument("svg sweep output supports exactly one bundle");
        }
        report::emit_sweep_chart_svg(sweeps.front().second, output.out);
    }
    return 0;
}

int cmd_compare(const SourceArgs& sources, const OutputArgs& output,
                const std::string& reference_name, const CLI::App* cmd) {
    const std::optional<SplitOption> reference = parse_split_option(reference_name);
    if (!reference) {
        throw std::invalid_argument("unknown split option '" + reference_name + "'");
    }
    const std::vector<Bundle> bundles = resolve_bundles(sources, cmd);

    struct Row {
        std::string label;
        std::string service;
        std::array<std::optional<double>, kSplitOptionCount> cells;
    };
    std::vector<Row> rows;
    for (const Bundle& b : bundles) {
        const RateTable table = compute_rate_table(b);
        Row row{bundle_label(b), table.service, {}};
        if (table.rate(*reference) > 0.0) {
            for (std::size_t i = 0; i < kSplitOptionCount; ++i) {
                row.cells[i] = table.reduction_vs(*reference, kAllSplitOptions[i]);
            }
        }
        rows.push_back(std::move(row));
    }

    // Cross-service average: mean within each service, then mean across the
    // services present.
    std::array<std::optional<double>, kSplitOptionCount> average;
    for (std::size_t i = 0; i < kSplitOptionCount; ++i) {
        std::map<std::string, std::pair<double, int>> per_service;
        for (const Row& row : rows) {
            if (row.cells[i]) {
                auto& acc = per_service[row.service];
                acc.first += *row.cells[i];
                acc.second += 1;
            }
        }
        if (per_service.empty()) continue;
        double sum = 0.0;
        for (const auto& [service, acc] : per_service) sum += acc.first / acc.second;
        average[i] = sum / static_cast<double>(per_service.size());
    }

    const auto cell_text = [](const std::optional<double>& v) {
        return v ? report::format_percent(*v) : std::string("-");
    };

    std::string out;
    if (output.format == "csv") {
        require_out_path(output);
        out = "bundle";
        for (SplitOption option : kAllSplitOptions) {
            out += ',' + std::string(to_string(option));
        }
        out += '\n';
        for (const Row& row : rows) {
            out += row.label;
            for (const auto& cell : row.cells) out += ',' + cell_text(cell);
            out += '\n';
        }
        out += "average";
        for (const auto& cell : average) out += ',' + cell_text(cell);
        out += '\n';
        report::write_file(out, output.out);
        return 0;
    }

    const auto append_row = [&out](const std::string& head, const auto& cells,
                                   const auto& to_text) {
        std::string line = padded(head, 16);
        for (const auto& cell : cells) line += padded(to_text(cell), 9);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    };
    const auto identity = [](const std::string& s) { return s; };

    out = "reduction vs " + std::string(to_string(*reference)) + " [%]\n";
    std::vector<std::string> header;
    for (SplitOption option : kAllSplitOptions) header.emplace_back(to_string(option));
    append_row("bundle", header, identity);
    for (const Row& row : rows) append_row(row.label, row.cells, cell_text);
    append_row("average", average, cell_text);
    deliver(out, output);
    return 0;
}

double parse_capacity(const std::string& text) {
    static const std::pair<const char*, double> kSuffixes[] = {
        {"Tbps", 1e12}, {"Gbps", 1e9}, {"Mbps", 1e6}, {"kbps", 1e3}, {"bps", 1.0}};
    for (const auto& [suffix, scale] : kSuffixes) {
        const std::string_view sv(text);
        const std::string_view suf(suffix);
        if (sv.size() <= suf.size() || sv.substr(sv.size() - suf.size()) != suf) continue;
        std::string number(sv.substr(0, sv.size() - suf.size()));
        while (!number.empty() && number.back() == ' ') number.pop_back();
        try {
            std::size_t used = 0;
            const double value = std::stod(number, &used);
            if (used != number.size() || !(value > 0.0)) break;
            return value * scale;
        } catch (const std::exception&) {
            break;
        }
    }
    throw std::invalid_argument("cannot parse capacity '" + text +
                                "' (expected e.g. 10Gbps; units: bps, kbps, Mbps, "
                                "Gbps, Tbps)");
}

int cmd_feasible(const SourceArgs& sources, const OutputArgs& output,
                 const std::string& capacity_text, const CLI::App* cmd) {
    if (output.format != "text") {
        throw std::invalid_argument("feasible supports only --format text");
    }
    const double capacity = parse_capacity(capacity_text);
    const std::vector<Bundle> bundles = resolve_bundles(sources, cmd);
    std::string out;
    for (const Bundle& b : bundles) {
        const RateTable table = compute_rate_table(b);
        const std::vector<SplitOption> options = feasible_splits(table, capacity);
        out += bundle_label(b) + ": ";
        if (options.empty()) {
            out += "no feasible split";
        } else {
            for (std::size_t i = 0; i < options.size(); ++i) {
                if (i != 0) out += ' ';
                out += std::string(to_string(options[i]));
            }
        }
        out += '\n';
    }
    deliver(out, output);
    return 0;
}

int cmd_presets() {
    std::string out;
    for (const std::string& name : preset_names()) out += name + '\n';
    std::cout << out << std::flush;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uplink fronthaul (feeder-link) data-rate dimensioning for RAN "
                 "functional splits on non-terrestrial platforms"};
    app.require_subcommand(1);

    SourceArgs sources;
    OutputArgs output;
    std::string group_by = "scenario";
    std::string mcs_pairs;
    std::string mcs_file;
    std::string reference = "Opt8";
    std::string capacity;

    CLI::App* compute = app.add_subcommand(
        "compute", "fronthaul rate per split option for the selected bundles");
    add_source_flags(compute, sources);
    add_output_flags(compute, output, {"text", "csv", "svg"});
    compute->add_option("--group-by", group_by, "svg bar-group order")
        ->check(CLI::IsMember({"scenario", "band"}));

    CLI::App* sweep = app.add_subcommand(
        "sweep", "rates of options 7.3, 6, and 2 across an MCS table");
    add_source_flags(sweep, sources);
    add_output_flags(sweep, output, {"text", "csv", "svg"});
    sweep->add_option("--mcs", mcs_file, "MCS table file (JSON)");
    sweep->add_option("--mcs-pairs", mcs_pairs, "inline pairs, e.g. \"4:0.66,16:0.64\"");

    CLI::App* compare = app.add_subcommand(
        "compare", "reduction matrix relative to a reference split option");
    add_source_flags(compare, sources);
    add_output_flags(compare, output, {"text", "csv"});
    compare->add_option("--reference", reference, "reference option (default Opt8)");

    CLI::App* feasible = app.add_subcommand(
        "feasible", "split options that fit within a feeder-link capacity");
    add_source_flags(feasible, sources);
    add_output_flags(feasible, output, {"text"});
    feasible->add_option("--capacity", capacity, "feeder capacity, e.g. 10Gbps")
        ->required();

    CLI::App* presets =
        app.add_subcommand("presets", "list the base parameter-set names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(sources, output, group_by, compute);
        if (sweep->parsed()) return cmd_sweep(sources, output, mcs_pairs, mcs_file, sweep);
        if (compare->parsed()) return cmd_compare(sources, output, reference, compare);
        if (feasible->parsed()) return cmd_feasible(sources, output, capacity, feasible);
        if (presets->parsed()) return cmd_presets();
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const fhdim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
