#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fracton/diagnostics/diagnostics.hpp"
#include "fracton/util/stamp.hpp"

namespace fracton::diagnostics {

/// Fixed-point rendering with `digits` decimals through snprintf, so output bytes do not
/// depend on stream locale or state.
std::string format_fixed(double x, int digits = 6);

/// Header: ensemble,n,trial,k,kT
void write_rank_csv(std::ostream& out, const std::vector<RankScanRecord>& records, const util::OutputStamp& stamp);

/// Header: n,trials,mean_k,min_k,max_k
void write_rank_summary_csv(std::ostream& out, const std::string& ensemble, const std::vector<RankSummary>& rows,
                            const util::OutputStamp& stamp);

/// Header: sparsity,trials,min_syndrome_density,witness_file
/// The witness column reads "<witness_file>:<line>", pointing at the support list written by
/// write_witnesses for that row; rows with no feasible trial have an empty density and witness.
void write_confinement_csv(std::ostream& out, const ConfinementCurve& curve, const std::string& witness_file,
                           const util::OutputStamp& stamp);

/// One line per row of `curve`: the witness support, empty when the row is infeasible.
void write_witnesses(std::ostream& out, const ConfinementCurve& curve);

/// Header: ensemble,n,sparsity,graphs,trials,mean_min_syndrome_density,min_syndrome,witness_graph,witness_file
void write_ensemble_confinement_csv(std::ostream& out, const EnsembleConfinementCurve& curve,
                                    const std::string& witness_file, const util::OutputStamp& stamp);
void write_witnesses(std::ostream& out, const EnsembleConfinementCurve& curve);

/// Header: component_id,size,cycle_rank
void write_isolability_csv(std::ostream& out, const IsolabilityReport& report, const util::OutputStamp& stamp);

// ---------------------------------------------------------------- plots

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    double width = 640.0;
    double height = 420.0;
};

/// Self-contained SVG line plot with axes, ticks and a legend. Points with non-positive
/// coordinates on a log axis are skipped. The stamp is embedded as an XML comment.
void write_svg_plot(std::ostream& out, const std::vector<Series>& series, const PlotOptions& options,
                    const util::OutputStamp& stamp);

}  // namespace fracton::diagnostics
