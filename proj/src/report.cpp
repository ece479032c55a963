#include "fhdim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fhdim::report {

namespace {

// One fixed color per split option (bar fill and sweep series stroke).
constexpr const char* kOptionColor[kSplitOptionCount] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#b07aa1"};

std::string printf_string(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

std::string coord(double v) { return printf_string("%.2f", v); }

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string table_label(const RateTable& t) {
    return t.scenario + "-" + t.band + "-" + t.service;
}

int band_order(const std::string& band) { return band == "S" ? 0 : 1; }

}  // namespace

std::string format_rate_sci(double bps) {
    std::string s = printf_string("%.5e", bps);
    const auto e = s.find('e');
    if (e == std::string::npos) return s;  // inf/nan
    std::string mantissa = s.substr(0, e);
    bool negative_exp = s[e + 1] == '-';
    std::string digits = s.substr(e + 2);
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    return mantissa + (negative_exp ? "e-" : "e") + digits;
}

std::string format_percent(double percent) {
    return printf_string("%.2f", percent);
}

std::string format_rate_scaled(double bps) {
    const double magnitude = std::fabs(bps);
    const char* unit = "bit/s";
    double scaled = bps;
    if (magnitude >= 1e12) {
        unit = "Tbit/s";
        scaled = bps / 1e12;
    } else if (magnitude >= 1e9) {
        unit = "Gbit/s";
        scaled = bps / 1e9;
    } else if (magnitude >= 1e6) {
        unit = "Mbit/s";
        scaled = bps / 1e6;
    } else if (magnitude >= 1e3) {
        unit = "kbit/s";
        scaled = bps / 1e3;
    }
    return printf_string("%.3f", scaled) + " " + unit;
}

std::string render_csv(std::span<const RateTable> tables) {
    if (tables.empty()) throw std::invalid_argument("nothing to emit");
    std::string out =
        "scenario,band,service,split_option,rate_bps,reduction_vs_opt8_percent\n";
    for (const RateTable& table : tables) {
        const double reference = table.rate(SplitOption::Opt8);
        for (SplitOption option : kAllSplitOptions) {
            out += table.scenario + ',' + table.band + ',' + table.service + ',';
            out += std::string(to_string(option)) + ',';
            out += format_rate_sci(table.rate(option)) + ',';
            // Reduction is undefined when the anchor rate is zero.
            out += reference > 0.0 ? format_percent(reduction_percent(reference,
                                                                      table.rate(option)))
                                   : "-";
            out += '\n';
        }
    }
    return out;
}

namespace {

struct LogAxis {
    double lo_decade = 0.0;
    double hi_decade = 1.0;

    double fraction(double value) const {
        if (!(value > 0.0)) return 0.0;
        const double f = (std::log10(value) - lo_decade) / (hi_decade - lo_decade);
        return std::clamp(f, 0.0, 1.0);
    }
};

LogAxis fit_log_axis(const std::vector<double>& values) {
    LogAxis axis;
    double min_pos = 0.0, max_pos = 0.0;
    for (double v : values) {
        if (v > 0.0) {
            min_pos = min_pos == 0.0 ? v : std::min(min_pos, v);
            max_pos = std::max(max_pos, v);
        }
    }
    if (max_pos == 0.0) return axis;
    // One decade of floor room keeps the smallest bar visibly above zero.
    axis.lo_decade = std::floor(std::log10(min_pos)) - 1.0;
    axis.hi_decade = std::ceil(std::log10(max_pos));
    if (axis.hi_decade <= axis.lo_decade) axis.hi_decade = axis.lo_decade + 1.0;
    return axis;
}

void append_y_grid(std::string& svg, const LogAxis& axis, double plot_x, double plot_y,
                   double plot_w, double plot_h) {
    for (double d = axis.lo_decade; d <= axis.hi_decade + 0.5; d += 1.0) {
        const double y = plot_y + plot_h * (1.0 - (d - axis.lo_decade) /
                                                      (axis.hi_decade - axis.lo_decade));
        svg += "  <line class=\"grid\" x1=\"" + coord(plot_x) + "\" y1=\"" + coord(y) +
               "\" x2=\"" + coord(plot_x + plot_w) + "\" y2=\"" + coord(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        char label[32];
        std::snprintf(label, sizeof label, "1e%d", static_cast<int>(d));
        svg += "  <text class=\"ytick\" x=\"" + coord(plot_x - 8.0) + "\" y=\"" +
               coord(y + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               label + "</text>\n";
    }
}

void append_frame(std::string& svg, double plot_x, double plot_y, double plot_w,
                  double plot_h) {
    svg += "  <rect class=\"frame\" x=\"" + coord(plot_x) + "\" y=\"" + coord(plot_y) +
           "\" width=\"" + coord(plot_w) + "\" height=\"" + coord(plot_h) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
}

std::string svg_header(int width, int height, const std::string& title) {
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "  <title>" + xml_escape(title) + "</title>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
    return svg;
}

}  // namespace

std::string render_bar_chart_svg(std::span<const RateTable> tables,
                                 ChartGrouping grouping) {
    if (tables.empty()) throw std::invalid_argument("nothing to emit");

    constexpr int kWidth = 960, kHeight = 560;
    constexpr double plot_x = 90.0, plot_y = 56.0, plot_w = 780.0, plot_h = 420.0;

    std::vector<std::size_t> order(tables.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const RateTable& ta = tables[a];
        const RateTable& tb = tables[b];
        if (grouping == ChartGrouping::by_band) {
            return std::make_tuple(band_order(ta.band), ta.scenario, ta.service) <
                   std::make_tuple(band_order(tb.band), tb.scenario, tb.service);
        }
        return std::make_tuple(ta.scenario, band_order(ta.band), ta.service) <
               std::make_tuple(tb.scenario, band_order(tb.band), tb.service);
    });

    std::vector<double> all_rates;
    for (const RateTable& t : tables) {
        all_rates.insert(all_rates.end(), t.rates_bps.begin(), t.rates_bps.end());
    }
    const LogAxis axis = fit_log_axis(all_rates);

    std::string svg = svg_header(kWidth, kHeight,
                                 "Fronthaul rate per functional split option");
    append_y_grid(svg, axis, plot_x, plot_y, plot_w, plot_h);

    const double group_w = plot_w / static_cast<double>(order.size());
    const double slot_w = group_w / (kSplitOptionCount + 1.0);

    for (std::size_t g = 0; g < order.size(); ++g) {
        const RateTable& table = tables[order[g]];
        const double group_x = plot_x + group_w * static_cast<double>(g);
        for (std::size_t i = 0; i < kSplitOptionCount; ++i) {
            const double rate = table.rates_bps[i];
            const double h = plot_h * axis.fraction(rate);
            const double x = group_x + slot_w * (0.5 + static_cast<double>(i));
            const double y = plot_y + plot_h - h;
            svg += "  <rect class=\"bar\" x=\"" + coord(x) + "\" y=\"" + coord(y) +
                   "\" width=\"" + coord(slot_w * 0.9) + "\" height=\"" + coord(h) +
                   "\" fill=\"" + kOptionColor[i] + "\"/>\n";
            // Value label, rotated to fit the bar slot.
            const double lx = x + slot_w * 0.45;
            const double ly = y - 6.0;
            svg += "  <text class=\"value\" x=\"" + coord(lx) + "\" y=\"" + coord(ly) +
                   "\" transform=\"rotate(-60 " + coord(lx) + " " + coord(ly) +
                   ")\" font-family=\"sans-serif\" font-size=\"10\">" +
                   format_rate_sci(rate) + "</text>\n";
        }
        svg += "  <text class=\"group\" x=\"" + coord(group_x + group_w / 2.0) + "\" y=\"" +
               coord(plot_y + plot_h + 24.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
               xml_escape(table_label(table)) + "</text>\n";
    }

    // Legend along the bottom edge.
    double legend_x = plot_x;
    const double legend_y = plot_y + plot_h + 48.0;
    for (std::size_t i = 0; i < kSplitOptionCount; ++i) {
        svg += "  <rect class=\"swatch\" x=\"" + coord(legend_x) + "\" y=\"" +
               coord(legend_y - 10.0) + "\" width=\"14\" height=\"14\" fill=\"" +
               kOptionColor[i] + "\"/>\n";
        svg += "  <text x=\"" + coord(legend_x + 20.0) + "\" y=\"" + coord(legend_y + 2.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::string(to_string(kAllSplitOptions[i])) + "</text>\n";
        legend_x += 86.0;
    }

    svg += "  <text x=\"" + coord(plot_x - 70.0) + "\" y=\"" + coord(plot_y - 16.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">rate [bit/s]</text>\n";
    append_frame(svg, plot_x, plot_y, plot_w, plot_h);
    svg += "</svg>\n";
    return svg;
}

std::string render_sweep_chart_svg(std::span<const McsSweepPoint> sweep) {
    if (sweep.empty()) throw std::invalid_argument("nothing to emit");

    constexpr int kWidth = 960, kHeight = 560;
    constexpr double plot_x = 90.0, plot_y = 56.0, plot_w = 780.0, plot_h = 420.0;
    constexpr SplitOption kSeries[3] = {SplitOption::Opt7_3, SplitOption::Opt6,
                                        SplitOption::Opt2};

    std::vector<double> values;
    for (const McsSweepPoint& p : sweep) {
        for (SplitOption option : kSeries) values.push_back(p.table.rate(option));
    }
    const LogAxis y_axis = fit_log_axis(values);

    const double x_lo = std::log2(static_cast<double>(sweep.front().modulation_order));
    const double x_hi = std::log2(static_cast<double>(sweep.back().modulation_order));
    const auto x_pos = [&](int m) {
        if (x_hi <= x_lo) return plot_x + plot_w / 2.0;
        const double f = (std::log2(static_cast<double>(m)) - x_lo) / (x_hi - x_lo);
        return plot_x + plot_w * f;
    };
    const auto y_pos = [&](double rate) {
        return plot_y + plot_h * (1.0 - y_axis.fraction(rate));
    };

    std::string svg = svg_header(
        kWidth, kHeight, "Fronthaul rate vs modulation order and code rate");
    append_y_grid(svg, y_axis, plot_x, plot_y, plot_w, plot_h);

    // x ticks: one per sweep point, log-spaced.
    for (const McsSweepPoint& p : sweep) {
        const double x = x_pos(p.modulation_order);
        svg += "  <line class=\"xtick\" x1=\"" + coord(x) + "\" y1=\"" +
               coord(plot_y + plot_h) + "\" x2=\"" + coord(x) + "\" y2=\"" +
               coord(plot_y + plot_h + 6.0) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        char label[48];
        std::snprintf(label, sizeof label, "%d (rc=%.4g)", p.modulation_order, p.code_rate);
        svg += "  <text x=\"" + coord(x) + "\" y=\"" + coord(plot_y + plot_h + 22.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               label + "</text>\n";
    }

    for (std::size_t s = 0; s < 3; ++s) {
        const SplitOption option = kSeries[s];
        const char* color = kOptionColor[static_cast<std::size_t>(option)];
        std::string points;
        for (const McsSweepPoint& p : sweep) {
            if (!points.empty()) points += ' ';
            points += coord(x_pos(p.modulation_order)) + ',' +
                      coord(y_pos(p.table.rate(option)));
        }
        svg += "  <polyline class=\"series series-" + std::string(to_string(option)) +
               "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    }

    // Legend.
    double legend_x = plot_x;
    const double legend_y = plot_y + plot_h + 48.0;
    for (SplitOption option : kSeries) {
        const char* color = kOptionColor[static_cast<std::size_t>(option)];
        svg += "  <line x1=\"" + coord(legend_x) + "\" y1=\"" + coord(legend_y - 4.0) +
               "\" x2=\"" + coord(legend_x + 18.0) + "\" y2=\"" + coord(legend_y - 4.0) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "  <text x=\"" + coord(legend_x + 24.0) + "\" y=\"" + coord(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               std::string(to_string(option)) + "</text>\n";
        legend_x += 96.0;
    }

    svg += "  <text x=\"" + coord(plot_x - 70.0) + "\" y=\"" + coord(plot_y - 16.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">rate [bit/s]</text>\n";
    svg += "  <text x=\"" + coord(plot_x + plot_w / 2.0) + "\" y=\"" +
           coord(plot_y + plot_h + 40.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
           "modulation order (log scale)</text>\n";
    append_frame(svg, plot_x, plot_y, plot_w, plot_h);
    svg += "</svg>\n";
    return svg;
}

std::string render_sweep_csv(std::span<const McsSweepPoint> sweep) {
    if (sweep.empty()) throw std::invalid_argument("nothing to emit");
    std::string out = "scenario,band,service,m,rc,opt7_3_bps,opt6_bps,opt2_bps\n";
    for (const McsSweepPoint& p : sweep) {
        out += p.table.scenario + ',' + p.table.band + ',' + p.table.service + ',';
        out += std::to_string(p.modulation_order) + ',';
        out += printf_string("%.6g", p.code_rate) + ',';
        out += format_rate_sci(p.table.rate(SplitOption::Opt7_3)) + ',';
        out += format_rate_sci(p.table.rate(SplitOption::Opt6)) + ',';
        out += format_rate_sci(p.table.rate(SplitOption::Opt2)) + '\n';
    }
    return out;
}

void write_file(const std::string& payload, const std::filesystem::path& dest) {
    std::ofstream out(dest, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + dest.string() + "'");
    }
    out << payload;
    out.flush();
    if (!out.good()) {
        out.close();
        std::error_code ec;
        std::filesystem::remove(dest, ec);
        throw IoError("error while writing '" + dest.string() + "'");
    }
}

void emit_csv(std::span<const RateTable> tables, const std::filesystem::path& dest) {
    write_file(render_csv(tables), dest);
}

void emit_bar_chart_svg(std::span<const RateTable> tables, ChartGrouping grouping,
                        const std::filesystem::path& dest) {
    write_file(render_bar_chart_svg(tables, grouping), dest);
}

void emit_sweep_chart_svg(std::span<const McsSweepPoint> sweep,
                          const std::filesystem::path& dest) {
    write_file(render_sweep_chart_svg(sweep), dest);
}

void emit_sweep_csv(std::span<const McsSweepPoint> sweep,
                    const std::filesystem::path& dest) {
    write_file(render_sweep_csv(sweep), dest);
}

}  // namespace fhdim::report
