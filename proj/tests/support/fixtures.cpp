#include "fixtures.hpp"

#include "tapps/plugin.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace fs = std::filesystem;

namespace tapps::testing {

TempDir::TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
    path_ = fs::canonical(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

fs::path TempDir::write(const std::string& relative, const std::string& content) const {
    auto p = path_ / relative;
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

CellValue random_cell(std::mt19937_64& rng, CellMix mix) {
    static const char* words[] = {"abc", "abd", "x", "NA", "zeta", "two words", "a,b", "q\"t"};
    std::uniform_int_distribution<int> pick(0, 9);
    int kind = pick(rng);
    if (mix == CellMix::Text) kind = 9;
    if (mix == CellMix::Numeric && kind >= 8) kind = kind % 4;
    switch (kind) {
        case 0:
        case 1:
        case 2: return CellValue(std::uniform_int_distribution<std::int64_t>(-5, 5)(rng));
        case 3:
        case 4: return CellValue(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng));
        case 5:
        case 6: return CellValue(std::uniform_real_distribution<double>(-100.0, 100.0)(rng));
        case 7: return CellValue(std::to_string(std::uniform_int_distribution<int>(-9, 9)(rng)));
        case 8: return CellValue(std::uniform_int_distribution<std::int64_t>(-5, 5)(rng) * 1.5);
        default: {
            std::uniform_int_distribution<std::size_t> w(0, std::size(words) - 1);
            return CellValue(words[w(rng)]);
        }
    }
}

DataFrame random_frame(std::mt19937_64& rng, const FrameShape& shape, const std::string& name,
                       bool scramble_labels) {
    std::uniform_int_distribution<std::size_t> rows_d(shape.min_rows, shape.max_rows);
    std::uniform_int_distribution<std::size_t> series_d(shape.min_series, shape.max_series);
    const auto rows = rows_d(rng);
    const auto series = series_d(rng);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < series; ++c) names.push_back("s" + std::to_string(c));
    DataFrame df(name, names);
    std::vector<std::size_t> ids(rows);
    for (std::size_t i = 0; i < rows; ++i) ids[i] = i;
    if (scramble_labels) std::shuffle(ids.begin(), ids.end(), rng);
    for (std::size_t r = 0; r < rows; ++r) {
        Row row;
        for (std::size_t c = 0; c < series; ++c) row.push_back(random_cell(rng, shape.mix));
        df.add_row("r" + std::to_string(ids[r]), std::move(row));
    }
    return df;
}

DataFrame random_numeric_frame(std::mt19937_64& rng, std::size_t rows, std::size_t series) {
    std::vector<std::string> names;
    for (std::size_t c = 0; c < series; ++c) names.push_back("v" + std::to_string(c));
    DataFrame df("N", names);
    std::uniform_real_distribution<double> real(-1e6, 1e6);
    std::uniform_int_distribution<std::int64_t> integer(-1000000, 1000000);
    std::uniform_int_distribution<int> kind(0, 3);
    for (std::size_t r = 0; r < rows; ++r) {
        Row row;
        for (std::size_t c = 0; c < series; ++c) {
            switch (kind(rng)) {
                case 0: row.emplace_back(integer(rng)); break;
                case 1: row.emplace_back(std::to_string(integer(rng))); break;  // numeric text
                default: row.emplace_back(real(rng)); break;
            }
        }
        df.add_row(std::to_string(r + 1), std::move(row));
    }
    return df;
}

std::string synthetic_market_csv() {
    // Category per row: 0 = Open < 820, 1 = Open > 2000, 2 = in between.
    std::vector<int> category(kMarketRows, 2);
    std::fill(category.begin(), category.begin() + kMarketHigh, 1);
    std::fill(category.begin() + kMarketHigh, category.begin() + kMarketHigh + kMarketLow, 0);
    std::mt19937_64 rng(2015);
    std::shuffle(category.begin(), category.end(), rng);

    std::ostringstream os;
    os << "Open,High,Low,Close,Volume,Adj Close\n";
    std::uniform_real_distribution<double> low(700.0, 819.5);
    std::uniform_real_distribution<double> high(2000.5, 3500.0);
    std::uniform_real_distribution<double> mid(821.0, 1999.0);
    std::size_t mid_seen = 0;
    for (std::size_t i = 0; i < kMarketRows; ++i) {
        double open = 0;
        switch (category[i]) {
            case 0: open = low(rng); break;
            case 1: open = high(rng); break;
            default:
                // the boundaries themselves belong to neither extreme
                open = mid_seen == 0 ? 820.0 : mid_seen == 1 ? 2000.0 : mid(rng);
                ++mid_seen;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", open);
        std::string open_text = buf;
        if (i % 7 == 0) {
            // some prices carry a currency sign and a thousands separator
            std::string digits = open_text;
            auto dot = digits.find('.');
            if (dot > 3) digits.insert(dot - 3, ",");
            open_text = "\"$" + digits + "\"";
        }
        os << open_text << ',' << buf << ',' << buf << ',' << buf << ','
           << (100000 + i * 37 % 50000) << ',' << buf << '\n';
    }
    return os.str();
}

std::vector<GoldenEntry> load_golden(const std::string& file) {
    std::ifstream in(fs::path(TAPPS_GOLDEN_DIR) / file);
    if (!in) throw std::runtime_error("cannot open golden file " + file);
    std::vector<GoldenEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("bad golden line: " + line);
        out.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return out;
}

namespace {

std::vector<std::string> statements_of(const std::string& file) {
    std::vector<std::string> out;
    for (auto& e : load_golden(file)) out.push_back(std::move(e.statement));
    return out;
}

}  // namespace

std::vector<std::string> transcript_statements() { return statements_of("transcript_opcodes.tsv"); }

std::vector<std::string> grammar_corpus() { return statements_of("corpus_opcodes.tsv"); }

void prepare_transcript_dirs(const TempDir& root) {
    root.write("data/STI_2015.csv", synthetic_market_csv());
    fs::create_directories(root / "examples");
}

Session session_with_plugins() {
    Session s;
    install_plugins(s, discover_plugins(TAPPS_PLUGINS_DIR, PluginRegistry::builtin()));
    return s;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace tapps::testing
