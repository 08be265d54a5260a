#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vqf::ts {

/// Whole hours since the Unix epoch (UTC).
struct TimeStamp {
    std::int64_t hours_since_epoch = 0;

    auto operator<=>(const TimeStamp&) const = default;
    TimeStamp operator+(std::int64_t h) const { return {hours_since_epoch + h}; }
};

struct SeriesPoint {
    TimeStamp t;
    double y = 0.0;               // per-unit capacity factor, in [0, 1]
    std::vector<double> x;        // exogenous covariates, fixed dimension d
};

/// Hourly series of capacity factors with aligned covariates for one region.
///
/// Construction validates every invariant: strictly increasing hourly
/// timestamps, y in [0, 1], and a uniform covariate dimension.
class RegionSeries {
public:
    RegionSeries(std::string region_id,
                 std::vector<std::string> covariate_names,
                 std::vector<SeriesPoint> points);

    const std::string& region_id() const { return region_id_; }
    const std::vector<std::string>& covariate_names() const { return covariate_names_; }
    const std::vector<SeriesPoint>& points() const { return points_; }

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return covariate_names_.size(); }
    const SeriesPoint& operator[](std::size_t i) const { return points_[i]; }
    const SeriesPoint& front() const { return points_.front(); }
    const SeriesPoint& back() const { return points_.back(); }

    TimeStamp start() const { return points_.front().t; }
    /// One past the last timestamp.
    TimeStamp end() const { return points_.back().t + 1; }

    /// Contiguous sub-series covering [begin, end); throws EmptyPartition
    /// when the range captures no points.
    RegionSeries slice(TimeStamp begin, TimeStamp end) const;
    /// Last n points.
    RegionSeries tail(std::size_t n) const;

    std::vector<double> targets() const;
    /// Index of a covariate column, or nullopt.
    std::optional<std::size_t> covariate_index(const std::string& name) const;

private:
    std::string region_id_;
    std::vector<std::string> covariate_names_;
    std::vector<SeriesPoint> points_;
};

/// Appends b to a; the two series must be contiguous in time and share the
/// covariate layout.
RegionSeries concat(const RegionSeries& a, const RegionSeries& b);

/// Removes one covariate column by name (no-op when absent).
RegionSeries drop_covariate(const RegionSeries& series, const std::string& name);

/// Appends a covariate column; values must match the series length.
RegionSeries append_covariate(const RegionSeries& series, const std::string& name,
                              const std::vector<double>& values);

// ---------------------------------------------------------------------------
// Ingestion
// ---------------------------------------------------------------------------

/// Raw samples as read from a file, at minute resolution. Sub-hourly data
/// lives here until harmonize_hourly() folds it onto the hourly grid.
struct SampleSeries {
    struct Sample {
        std::int64_t minutes_since_epoch = 0;
        double y = 0.0;
        std::vector<double> x;
    };

    std::string region_id;
    std::vector<std::string> covariate_names;
    std::vector<Sample> samples;   // strictly increasing in time
};

/// Column mapping for CSV ingestion. When capacity_column is set, the target
/// column holds raw generation and is divided by capacity to obtain the
/// per-unit factor.
struct CsvSchema {
    std::string timestamp_column = "timestamp";
    std::string target_column = "y";
    std::optional<std::string> capacity_column;
    std::vector<std::string> covariate_columns;
};

/// Reads a CSV with a header row. Timestamps are ISO-8601 UTC
/// ("2018-01-01T06:00:00Z", seconds optional and zero) or integer epoch
/// hours. Targets outside [0, 1] are rejected, never clipped.
SampleSeries ingest_csv(std::istream& in, const CsvSchema& schema,
                        const std::string& region_id);
SampleSeries ingest_csv(const std::filesystem::path& path, const CsvSchema& schema,
                        std::string region_id = "");

/// Averages sub-hourly samples within each hour onto the hourly grid.
/// The sample spacing must be uniform, divide one hour exactly, and cover
/// every hour completely; gaps raise IrregularCadence.
RegionSeries harmonize_hourly(const SampleSeries& samples);

/// Writes the canonical CSV form: header "timestamp,y,<covariates...>",
/// epoch-hour timestamps, shortest round-trip number formatting.
void emit_csv(const RegionSeries& series, std::ostream& out);
void emit_csv(const RegionSeries& series, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Splitting and normalization
// ---------------------------------------------------------------------------

/// Three disjoint, chronologically ordered [begin, end) ranges.
struct SplitSpec {
    TimeStamp train_begin, train_end;
    TimeStamp validation_begin, validation_end;
    TimeStamp test_begin, test_end;

    /// Validates ordering/disjointness; throws InvalidSplit.
    static SplitSpec make(TimeStamp train_begin, TimeStamp train_end,
                          TimeStamp validation_begin, TimeStamp validation_end,
                          TimeStamp test_begin, TimeStamp test_end);

    /// Back-to-back ranges of the given lengths starting at `start`.
    static SplitSpec contiguous(TimeStamp start, std::int64_t train_hours,
                                std::int64_t validation_hours, std::int64_t test_hours);
};

struct SplitResult {
    RegionSeries train;
    RegionSeries validation;
    RegionSeries test;
};

SplitResult split(const RegionSeries& series, const SplitSpec& spec);

/// Per-column population mean and standard deviation of the covariates.
/// Constant columns record a standard deviation of 1.
struct CovariateStats {
    std::vector<double> mean;
    std::vector<double> stddev;
};

CovariateStats fit_covariate_stats(const RegionSeries& train);
RegionSeries apply_normalization(const RegionSeries& series, const CovariateStats& stats);

// ---------------------------------------------------------------------------
// Timestamp helpers
// ---------------------------------------------------------------------------

/// Parses ISO-8601 UTC or a plain integer (epoch hours) to epoch minutes.
std::int64_t parse_timestamp_minutes(const std::string& text);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

} // namespace vqf::ts
