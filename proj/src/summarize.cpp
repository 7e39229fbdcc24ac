#include "tapps/summarize.hpp"

#include "tapps/error.hpp"
#include "tapps/frame_ops.hpp"

#include <algorithm>
#include <cmath>

namespace tapps::summarize {

namespace {

double number_at(const DataFrame& df, std::size_t row, std::size_t column) {
    if (auto n = df.at(row, column).to_number()) return *n;
    throw Error(ErrorKind::NonNumericCell, "non-numeric value '" + df.at(row, column).render() +
                                               "' in series '" + df.series_names()[column] +
                                               "' at label '" + df.labels()[row] + "'");
}

double sum(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
}

// Sample (n - 1) divisor below the threshold, population divisor from it on.
CellValue standard_deviation(const std::vector<double>& sorted, double mean) {
    const auto n = sorted.size();
    if (n == 1) return CellValue("NA");
    double squares = 0.0;
    for (double x : sorted) squares += (x - mean) * (x - mean);
    double divisor = n < kPopulationThreshold ? static_cast<double>(n - 1) : static_cast<double>(n);
    return CellValue(std::sqrt(squares / divisor));
}

void require_values(std::size_t n, const std::string& what) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "cannot summarize " + what + ": no values");
    }
}

}  // namespace

SeriesSummary by_series(const DataFrame& df) {
    SeriesSummary out;
    for (const auto& name : kStatistics) out.columns[name];
    for (std::size_t c = 0; c < df.series_count(); ++c) {
        const auto& series = df.series_names()[c];
        require_values(df.row_count(), "series '" + series + "'");
        std::vector<double> data;
        data.reserve(df.row_count());
        for (std::size_t r = 0; r < df.row_count(); ++r) data.push_back(number_at(df, r, c));

        const double total = sum(data);
        const double mean = total / static_cast<double>(data.size());
        std::sort(data.begin(), data.end());
        out.columns["summation"].emplace_back(total);
        out.columns["arithmetic_mean"].emplace_back(mean);
        out.columns["median"].emplace_back(data[data.size() / 2]);
        out.columns["maximum"].emplace_back(data.back());
        out.columns["minimum"].emplace_back(data.front());
        out.columns["count"].emplace_back(static_cast<std::int64_t>(data.size()));
        out.columns["standard_deviation"].push_back(standard_deviation(data, mean));
        out.row_labels.push_back(series);
    }
    return out;
}

LabelSummary by_labels(const DataFrame& df) {
    LabelSummary out;
    out.statistic_series = kStatistics;
    for (std::size_t r = 0; r < df.row_count(); ++r) {
        const auto& label = df.labels()[r];
        require_values(df.series_count(), "label '" + label + "'");
        std::vector<double> data;
        data.reserve(df.series_count());
        for (std::size_t c = 0; c < df.series_count(); ++c) data.push_back(number_at(df, r, c));

        // mean comes from the row as stored, summation from the sorted row
        const double mean = sum(data) / static_cast<double>(data.size());
        std::sort(data.begin(), data.end());
        std::vector<CellValue> stats;
        stats.reserve(kStatistics.size());
        stats.emplace_back(mean);
        stats.emplace_back(static_cast<std::int64_t>(data.size()));
        stats.emplace_back(data.back());
        stats.emplace_back(data[data.size() / 2]);
        stats.emplace_back(data.front());
        stats.push_back(standard_deviation(data, mean));
        stats.emplace_back(sum(data));
        out.rows.emplace_back(label, std::move(stats));
    }
    return out;
}

ParameterSet entry(ParameterSet parameters) {
    if (!parameters.input_frame) {
        throw Error(ErrorKind::MissingInputFrame, "summarize: no input data frame");
    }
    const auto& input = *parameters.input_frame;
    DataFrame results = parameters.results_frame ? *parameters.results_frame : DataFrame();
    const auto method = parameters.analytical_method.value_or("by_series");
    if (method == "by_series") {
        auto summary = by_series(input);
        add_columnar_data(results, summary.columns, summary.row_labels);
    } else if (method == "by_labels") {
        auto summary = by_labels(input);
        DataFrame built(results.name(), summary.statistic_series);
        for (auto& [label, stats] : summary.rows) built.add_row(label, std::move(stats));
        results = std::move(built);
    } else {
        throw Error(ErrorKind::InvalidArgument,
                    "summarize: analytical_method must be 'by_series' or 'by_labels', got '" +
                        method + "'");
    }
    parameters.results_frame = std::move(results);
    return parameters;
}

ParameterSet default_parameters() { return ParameterSet("summarize"); }

}  // namespace tapps::summarize

namespace tapps::template_plugin {

ParameterSet entry(ParameterSet parameters) {
    if (!parameters.input_frame) {
        throw Error(ErrorKind::MissingInputFrame, "template: no input data frame");
    }
    std::string name = parameters.results_frame ? parameters.results_frame->name() : "results";
    DataFrame results = *parameters.input_frame;
    results.set_name(std::move(name));
    parameters.results_frame = std::move(results);
    return parameters;
}

ParameterSet default_parameters() { return ParameterSet("template"); }

}  // namespace tapps::template_plugin

namespace tapps {

PluginRegistry PluginRegistry::builtin() {
    PluginRegistry registry;
    registry.add("summarize", {summarize::entry, summarize::default_parameters()});
    registry.add("template", {template_plugin::entry, template_plugin::default_parameters()});
    return registry;
}

}  // namespace tapps
