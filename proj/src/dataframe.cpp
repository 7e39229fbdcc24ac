#include "tapps/dataframe.hpp"

#include "tapps/error.hpp"

#include <algorithm>

namespace tapps {

DataFrame::DataFrame(std::string name, std::vector<std::string> series_names)
    : name_(std::move(name)) {
    for (auto& s : series_names) {
        add_series(std::move(s), {});
    }
}

std::optional<std::size_t> DataFrame::series_index(const std::string& series) const {
    auto it = std::find(series_.begin(), series_.end(), series);
    if (it == series_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - series_.begin());
}

std::size_t DataFrame::require_series(const std::string& series) const {
    if (auto idx = series_index(series)) return *idx;
    throw Error(ErrorKind::UnknownSeries,
                "no series '" + series + "' in data frame '" + name_ + "'");
}

std::optional<std::size_t> DataFrame::label_index(const std::string& label) const {
    auto it = label_lookup_.find(label);
    if (it == label_lookup_.end()) return std::nullopt;
    return it->second;
}

const Row& DataFrame::row(const std::string& label) const {
    if (auto idx = label_index(label)) return rows_[*idx];
    throw Error(ErrorKind::UnknownName, "no label '" + label + "' in data frame '" + name_ + "'");
}

void DataFrame::add_row(std::string label, Row values) {
    if (values.size() != series_.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "row '" + label + "' has " + std::to_string(values.size()) +
                        " values, data frame '" + name_ + "' has " +
                        std::to_string(series_.size()) + " series");
    }
    if (label_lookup_.contains(label)) {
        throw Error(ErrorKind::DuplicateName,
                    "label '" + label + "' already exists in data frame '" + name_ + "'");
    }
    label_lookup_.emplace(label, rows_.size());
    labels_.push_back(std::move(label));
    rows_.push_back(std::move(values));
}

void DataFrame::add_series(std::string series, std::span<const CellValue> values) {
    if (series.empty()) {
        throw Error(ErrorKind::InvalidValue, "series names must be non-empty");
    }
    if (series_index(series)) {
        throw Error(ErrorKind::DuplicateSeries,
                    "series '" + series + "' already exists in data frame '" + name_ + "'");
    }
    if (values.size() != rows_.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "series '" + series + "' has " + std::to_string(values.size()) +
                        " values, data frame '" + name_ + "' has " +
                        std::to_string(rows_.size()) + " rows");
    }
    series_.push_back(std::move(series));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        rows_[i].push_back(values[i]);
    }
}

void DataFrame::replace_row(std::size_t index, Row values) {
    if (values.size() != series_.size()) {
        throw Error(ErrorKind::LengthMismatch, "replacement row has wrong width");
    }
    rows_.at(index) = std::move(values);
}

void DataFrame::rename_series(std::size_t index, std::string new_name) {
    series_.at(index) = std::move(new_name);
}

void DataFrame::rename_label(std::size_t index, std::string new_label) {
    label_lookup_.erase(labels_.at(index));
    label_lookup_.emplace(new_label, index);
    labels_[index] = std::move(new_label);
}

void DataFrame::clear() {
    series_.clear();
    labels_.clear();
    rows_.clear();
    label_lookup_.clear();
}

bool DataFrame::operator==(const DataFrame& other) const {
    return name_ == other.name_ && series_ == other.series_ && labels_ == other.labels_ &&
           rows_ == other.rows_;
}

const DataFrame* MultiDataFrame::find(const std::string& name) const {
    for (const auto& f : frames_) {
        if (f.name() == name) return &f;
    }
    return nullptr;
}

DataFrame* MultiDataFrame::find(const std::string& name) {
    for (auto& f : frames_) {
        if (f.name() == name) return &f;
    }
    return nullptr;
}

const DataFrame& MultiDataFrame::get(const std::string& name) const {
    if (const auto* f = find(name)) return *f;
    throw Error(ErrorKind::UnknownDataFrame, "no data frame named '" + name + "'");
}

DataFrame& MultiDataFrame::get(const std::string& name) {
    if (auto* f = find(name)) return *f;
    throw Error(ErrorKind::UnknownDataFrame, "no data frame named '" + name + "'");
}

void MultiDataFrame::attach(const std::string& name, DataFrame frame) {
    if (contains(name)) {
        throw Error(ErrorKind::DuplicateFrameName, "data frame '" + name + "' already exists");
    }
    frame.set_name(name);
    frames_.push_back(std::move(frame));
}

void MultiDataFrame::replace(const std::string& name, DataFrame frame) {
    auto& slot = get(name);
    frame.set_name(name);
    slot = std::move(frame);
}

void MultiDataFrame::remove(const std::string& name) {
    auto it = std::find_if(frames_.begin(), frames_.end(),
                           [&](const DataFrame& f) { return f.name() == name; });
    if (it == frames_.end()) {
        throw Error(ErrorKind::UnknownDataFrame, "no data frame named '" + name + "'");
    }
    frames_.erase(it);
}

}  // namespace tapps
