#pragma once

#include "tapps/plugin.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tapps::summarize {

/// Statistic names in result-series order.
inline const std::vector<std::string> kStatistics = {
    "arithmetic_mean", "count", "maximum", "median", "minimum", "standard_deviation", "summation",
};

/// Sample standard deviation below this many values, population at or above.
inline constexpr std::size_t kPopulationThreshold = 30;

struct SeriesSummary {
    std::map<std::string, std::vector<CellValue>> columns;  // statistic -> one value per series
    std::vector<std::string> row_labels;                    // input series names
};

struct LabelSummary {
    std::vector<std::pair<std::string, std::vector<CellValue>>> rows;  // label -> statistics
    std::vector<std::string> statistic_series;
};

/// One row per input series. Every cell must be numeric (numeric text counts);
/// throws Error(NonNumericCell) otherwise. Standard deviation of a single
/// value is the text "NA".
SeriesSummary by_series(const DataFrame& df);
/// One row per input label, statistics over that row's cells.
LabelSummary by_labels(const DataFrame& df);

/// Plugin entry: analytical_method "by_series" (default) or "by_labels".
ParameterSet entry(ParameterSet parameters);
ParameterSet default_parameters();

}  // namespace tapps::summarize

namespace tapps::template_plugin {

/// Copies the input frame into the results frame.
ParameterSet entry(ParameterSet parameters);
ParameterSet default_parameters();

}  // namespace tapps::template_plugin
