#pragma once

#include "tapps/dataframe.hpp"
#include "tapps/session.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace tapps::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag = "tapps");
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
    /// Writes a file (creating parent folders) and returns its path.
    std::filesystem::path write(const std::string& relative, const std::string& content) const;

private:
    std::filesystem::path path_;
};

enum class CellMix { Numeric, Mixed, Text };

struct FrameShape {
    std::size_t min_rows = 0, max_rows = 12;
    std::size_t min_series = 1, max_series = 5;
    CellMix mix = CellMix::Mixed;
};

/// Random frame with series s0.., labels r0.. (shuffled label text when
/// scramble_labels is set).
DataFrame random_frame(std::mt19937_64& rng, const FrameShape& shape, const std::string& name = "F",
                       bool scramble_labels = false);

/// A random cell; small integers are frequent so comparisons hit equality.
CellValue random_cell(std::mt19937_64& rng, CellMix mix);

/// Numeric-only frame for the statistics checks, values in [-1e6, 1e6].
DataFrame random_numeric_frame(std::mt19937_64& rng, std::size_t rows, std::size_t series);

/// Writes the transcript stand-in dataset: 6 series (Open, High, Low, Close,
/// Volume, Adj Close), 6996 data rows, exactly 3 rows with Open < 820 and
/// 3919 rows with Open > 2000.
std::string synthetic_market_csv();
inline constexpr std::size_t kMarketRows = 6996;
inline constexpr std::size_t kMarketLow = 3;
inline constexpr std::size_t kMarketHigh = 3919;

struct GoldenEntry {
    std::string opcode;
    std::string statement;
};

/// Reads "opcode<TAB>statement" lines from tests/golden; '#' lines are skipped.
std::vector<GoldenEntry> load_golden(const std::string& file);

/// The executable statements of the worked session, in order (19 entries).
std::vector<std::string> transcript_statements();

/// Hand-written statements covering every grammar production.
std::vector<std::string> grammar_corpus();

/// Lays out the worked session's folders under root: data/STI_2015.csv holding
/// synthetic_market_csv() and an empty examples/ folder.
void prepare_transcript_dirs(const TempDir& root);

/// Session with plugins discovered from the repository's plugins folder.
Session session_with_plugins();

/// Reads a whole file; throws std::runtime_error when it cannot.
std::string slurp(const std::filesystem::path& path);

}  // namespace tapps::testing
