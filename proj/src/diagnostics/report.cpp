#include "fracton/diagnostics/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "fracton/gf2/io.hpp"

namespace fracton::diagnostics {

std::string format_fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

void write_rank_csv(std::ostream& out, const std::vector<RankScanRecord>& records, const util::OutputStamp& stamp) {
    out << stamp.comment_line() << '\n' << "ensemble,n,trial,k,kT\n";
    for (const auto& r : records) {
        out << r.ensemble << ',' << r.n << ',' << r.trial << ',' << r.k << ',' << r.k_transpose << '\n';
    }
}

void write_rank_summary_csv(std::ostream& out, const std::string& ensemble, const std::vector<RankSummary>& rows,
                            const util::OutputStamp& stamp) {
    out << stamp.comment_line() << '\n' << "ensemble,n,trials,mean_k,min_k,max_k\n";
    for (const auto& r : rows) {
        out << ensemble << ',' << r.n << ',' << r.trials << ',' << format_fixed(r.mean_k, 4) << ',' << r.min_k << ','
            << r.max_k << '\n';
    }
}

void write_confinement_csv(std::ostream& out, const ConfinementCurve& curve, const std::string& witness_file,
                           const util::OutputStamp& stamp) {
    out << stamp.comment_line() << '\n' << "sparsity,trials,min_syndrome_density,witness_file\n";
    for (std::size_t i = 0; i < curve.rows.size(); ++i) {
        const ConfinementRow& row = curve.rows[i];
        out << format_fixed(row.sparsity, 4) << ',' << row.trials << ',';
        if (const auto d = row.density(curve.m)) {
            out << format_fixed(*d) << ',' << witness_file << ':' << (i + 1);
        } else {
            out << ',';
        }
        out << '\n';
    }
}

void write_witnesses(std::ostream& out, const ConfinementCurve& curve) {
    for (const auto& row : curve.rows) {
        out << (row.min_syndrome ? gf2::support_to_string(row.witness) : std::string()) << '\n';
    }
}

void write_ensemble_confinement_csv(std::ostream& out, const EnsembleConfinementCurve& curve,
                                    const std::string& witness_file, const util::OutputStamp& stamp) {
    out << stamp.comment_line() << '\n'
        << "ensemble,n,sparsity,graphs,trials,mean_min_syndrome_density,min_syndrome,witness_graph,witness_file\n";
    for (std::size_t i = 0; i < curve.rows.size(); ++i) {
        const EnsembleConfinementRow& row = curve.rows[i];
        out << curve.ensemble << ',' << curve.n << ',' << format_fixed(row.sparsity, 4) << ',' << row.graphs << ','
            << row.trials << ',' << format_fixed(row.mean_min_density) << ',' << row.min_syndrome << ','
            << row.witness_graph << ',' << witness_file << ':' << (i + 1) << '\n';
    }
}

void write_witnesses(std::ostream& out, const EnsembleConfinementCurve& curve) {
    for (const auto& row : curve.rows) {
        out << gf2::support_to_string(row.witness) << '\n';
    }
}

void write_isolability_csv(std::ostream& out, const IsolabilityReport& report, const util::OutputStamp& stamp) {
    out << stamp.comment_line() << '\n' << "component_id,size,cycle_rank\n";
    for (const auto& c : report.components) {
        out << c.id << ',' << c.size << ',' << c.cycle_rank << '\n';
    }
}

// ---------------------------------------------------------------- plots

namespace {

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;

    double map(double v) const { return log ? std::log10(v) : v; }
    double fraction(double v) const { return (map(v) - lo) / (hi - lo); }
};

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); }

Axis make_axis(const std::vector<Series>& series, bool use_x, bool log) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : series) {
        const auto& values = use_x ? s.x : s.y;
        for (double v : values) {
            if (usable(v, log)) {
                lo = std::min(lo, log ? std::log10(v) : v);
                hi = std::max(hi, log ? std::log10(v) : v);
            }
        }
    }
    if (!std::isfinite(lo)) {
        lo = 0.0;
        hi = 1.0;
    }
    if (log) {
        lo = std::floor(lo);
        hi = std::max(std::ceil(hi), lo + 1.0);
    } else {
        if (!use_x) {
            lo = std::min(lo, 0.0);
        }
        if (hi <= lo) {
            hi = lo + 1.0;
        }
        const double pad = 0.05 * (hi - lo);
        hi += pad;
        if (lo < 0.0 || use_x) {
            lo -= pad;
        }
    }
    return Axis{lo, hi, log};
}

std::vector<double> ticks(const Axis& axis) {
    std::vector<double> out;
    if (axis.log) {
        for (double e = axis.lo; e <= axis.hi + 1e-9; e += 1.0) {
            out.push_back(std::pow(10.0, e));
        }
        return out;
    }
    const double span = axis.hi - axis.lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    for (double v = std::ceil(axis.lo / step) * step; v <= axis.hi + 1e-12; v += step) {
        out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    }
    return out;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

}  // namespace

void write_svg_plot(std::ostream& out, const std::vector<Series>& series, const PlotOptions& options,
                    const util::OutputStamp& stamp) {
    const double left = 70.0, right = 20.0, top = 40.0, bottom = 55.0;
    const double pw = options.width - left - right;
    const double ph = options.height - top - bottom;
    const Axis ax = make_axis(series, true, options.log_x);
    const Axis ay = make_axis(series, false, options.log_y);
    auto px = [&](double v) { return format_fixed(left + ax.fraction(v) * pw, 2); };
    auto py = [&](double v) { return format_fixed(top + (1.0 - ay.fraction(v)) * ph, 2); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- fracton " << stamp.tool_version << " config " << stamp.config_hash << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(options.width, 0) << "\" height=\""
        << format_fixed(options.height, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << format_fixed(options.width / 2, 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(options.title) << "</text>\n";
    out << "<rect x=\"" << format_fixed(left, 2) << "\" y=\"" << format_fixed(top, 2) << "\" width=\""
        << format_fixed(pw, 2) << "\" height=\"" << format_fixed(ph, 2) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : ticks(ax)) {
        out << "<line x1=\"" << px(t) << "\" y1=\"" << format_fixed(top + ph, 2) << "\" x2=\"" << px(t) << "\" y2=\""
            << format_fixed(top + ph + 5, 2) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(t) << "\" y=\"" << format_fixed(top + ph + 18, 2) << "\" text-anchor=\"middle\">"
            << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(ay)) {
        out << "<line x1=\"" << format_fixed(left - 5, 2) << "\" y1=\"" << py(t) << "\" x2=\"" << format_fixed(left, 2)
            << "\" y2=\"" << py(t) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << format_fixed(left - 8, 2) << "\" y=\"" << py(t)
            << "\" text-anchor=\"end\" dominant-baseline=\"middle\">" << tick_label(t) << "</text>\n";
    }
    out << "<text x=\"" << format_fixed(left + pw / 2, 2) << "\" y=\"" << format_fixed(options.height - 12, 2)
        << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
    out << "<text transform=\"translate(16," << format_fixed(top + ph / 2, 2)
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* colour = kPalette[s % std::size(kPalette)];
        std::string points;
        for (std::size_t i = 0; i < std::min(series[s].x.size(), series[s].y.size()); ++i) {
            const double x = series[s].x[i];
            const double y = series[s].y[i];
            if (!usable(x, ax.log) || !usable(y, ay.log)) {
                continue;
            }
            if (!points.empty()) {
                points += ' ';
            }
            points += px(x) + ',' + py(y);
            out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.5\" fill=\"" << colour << "\"/>\n";
        }
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"" << points
            << "\"/>\n";
        const double ly = top + 14.0 + 16.0 * static_cast<double>(s);
        out << "<line x1=\"" << format_fixed(left + 10, 2) << "\" y1=\"" << format_fixed(ly, 2) << "\" x2=\""
            << format_fixed(left + 30, 2) << "\" y2=\"" << format_fixed(ly, 2) << "\" stroke=\"" << colour
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << format_fixed(left + 35, 2) << "\" y=\"" << format_fixed(ly, 2)
            << "\" dominant-baseline=\"middle\">" << escape(series[s].label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace fracton::diagnostics
