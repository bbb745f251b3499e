#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace riskflow {

/// The five daily segments used throughout the pipeline.
enum class TimeInterval { Morning, Midday, Afternoon, Night, Overnight };

inline constexpr int kIntervalCount = 5;

const std::array<TimeInterval, kIntervalCount>& all_intervals();
const char* interval_name(TimeInterval t);
std::optional<TimeInterval> interval_from_name(const std::string& name);
inline int interval_index(TimeInterval t) { return static_cast<int>(t); }

/// Start hours of each interval. The defaults give
/// Morning [06,11), Midday [11,14), Afternoon [14,18), Night [18,23),
/// Overnight [23,24) U [00,06). All boundaries are config-overridable.
struct IntervalScheme {
    int morning_start = 6;
    int midday_start = 11;
    int afternoon_start = 14;
    int night_start = 18;
    int overnight_start = 23;

    /// Throws InvalidParams unless 0 <= morning < midday < afternoon < night
    /// < overnight <= 24, which makes the five ranges partition the day.
    void validate() const;

    TimeInterval interval_of_hour(int hour) const;
};

struct MonthId {
    int year = 0;
    int month = 0; // 1..12

    auto operator<=>(const MonthId&) const = default;

    static std::optional<MonthId> parse(const std::string& text); // "YYYY-MM"
    std::string str() const;
};

struct LocalTime {
    int year = 0, month = 0, day = 0;
    int hour = 0, minute = 0, second = 0;

    MonthId month_id() const { return MonthId{year, month}; }

    /// Parses "YYYY-MM-DDTHH:MM:SS" (a space is accepted in place of 'T').
    static std::optional<LocalTime> parse(const std::string& text);
    std::string str() const;
};

struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;

    bool valid() const { return lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0; }
};

struct CellId {
    int row = 0;
    int col = 0;

    auto operator<=>(const CellId&) const = default;
};

/// Metric grid over a city bounding box. Rows follow latitude, columns follow
/// longitude, under a local equirectangular projection with a fixed
/// meters-per-degree scale at ref_lat.
class GridSpec {
public:
    static constexpr double kMetersPerDegree = 111320.0;

    GridSpec(double min_lat, double min_lon, double max_lat, double max_lon,
             double cell_size = 400.0, std::optional<double> ref_lat = std::nullopt);

    double min_lat() const { return min_lat_; }
    double min_lon() const { return min_lon_; }
    double max_lat() const { return max_lat_; }
    double max_lon() const { return max_lon_; }
    double cell_size() const { return cell_size_; }
    double ref_lat() const { return ref_lat_; }
    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }
    int n_cells() const { return n_rows_ * n_cols_; }

    bool contains(GeoPoint p) const;

    /// Maps a point to its cell; points exactly on the max edges clamp into
    /// the last row/column. Throws OutOfBounds for points outside the box.
    CellId cell_of(GeoPoint p) const;

    bool valid_cell(CellId c) const {
        return c.row >= 0 && c.row < n_rows_ && c.col >= 0 && c.col < n_cols_;
    }

    int linear_index(CellId c) const { return c.row * n_cols_ + c.col; }
    CellId cell_at(int linear) const { return CellId{linear / n_cols_, linear % n_cols_}; }

    /// Geometric center of the cell, clamped into the bounding box so it
    /// always maps back to the same cell.
    GeoPoint cell_center(CellId c) const;

    /// Moore neighborhood clipped to the grid, row-major, never contains c.
    std::vector<CellId> neighbors8(CellId c) const;

    /// Euclidean distance between cell centers in meters (projected plane).
    double center_distance_m(CellId a, CellId b) const;

private:
    double min_lat_, min_lon_, max_lat_, max_lon_;
    double cell_size_;
    double ref_lat_;
    double lon_scale_; // meters per degree of longitude at ref_lat
    int n_rows_, n_cols_;
};

TimeInterval interval_of(const LocalTime& ts, const IntervalScheme& scheme);

} // namespace riskflow
