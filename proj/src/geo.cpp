#include "riskflow/geo.hpp"

#include "riskflow/errors.hpp"

#include <cmath>
#include <cstdio>

namespace riskflow {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const std::array<TimeInterval, kIntervalCount>& all_intervals() {
    static const std::array<TimeInterval, kIntervalCount> order = {
        TimeInterval::Morning, TimeInterval::Midday, TimeInterval::Afternoon,
        TimeInterval::Night, TimeInterval::Overnight};
    return order;
}

const char* interval_name(TimeInterval t) {
    switch (t) {
    case TimeInterval::Morning: return "Morning";
    case TimeInterval::Midday: return "Midday";
    case TimeInterval::Afternoon: return "Afternoon";
    case TimeInterval::Night: return "Night";
    case TimeInterval::Overnight: return "Overnight";
    }
    return "?";
}

std::optional<TimeInterval> interval_from_name(const std::string& name) {
    for (TimeInterval t : all_intervals()) {
        if (name == interval_name(t)) return t;
    }
    return std::nullopt;
}

void IntervalScheme::validate() const {
    const bool ordered = 0 <= morning_start && morning_start < midday_start &&
                         midday_start < afternoon_start && afternoon_start < night_start &&
                         night_start < overnight_start && overnight_start <= 24;
    if (!ordered) {
        throw InvalidParams("interval boundaries must satisfy 0 <= morning < midday < "
                            "afternoon < night < overnight <= 24");
    }
}

TimeInterval IntervalScheme::interval_of_hour(int hour) const {
    if (hour < morning_start || hour >= overnight_start) return TimeInterval::Overnight;
    if (hour < midday_start) return TimeInterval::Morning;
    if (hour < afternoon_start) return TimeInterval::Midday;
    if (hour < night_start) return TimeInterval::Afternoon;
    return TimeInterval::Night;
}

std::optional<MonthId> MonthId::parse(const std::string& text) {
    int y = 0, m = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &y, &m, &extra) != 2) return std::nullopt;
    if (text.size() != 7 || text[4] != '-') return std::nullopt;
    if (m < 1 || m > 12) return std::nullopt;
    return MonthId{y, m};
}

std::string MonthId::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

std::optional<LocalTime> LocalTime::parse(const std::string& text) {
    LocalTime t;
    char sep = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%d", &t.year, &t.month, &t.day, &sep,
                    &t.hour, &t.minute, &t.second) != 7) {
        return std::nullopt;
    }
    if (sep != 'T' && sep != ' ') return std::nullopt;
    if (t.month < 1 || t.month > 12 || t.day < 1 || t.day > 31) return std::nullopt;
    if (t.hour < 0 || t.hour > 23 || t.minute < 0 || t.minute > 59 || t.second < 0 ||
        t.second > 59) {
        return std::nullopt;
    }
    return t;
}

std::string LocalTime::str() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d", year, month, day, hour,
                  minute, second);
    return buf;
}

GridSpec::GridSpec(double min_lat, double min_lon, double max_lat, double max_lon,
                   double cell_size, std::optional<double> ref_lat)
    : min_lat_(min_lat), min_lon_(min_lon), max_lat_(max_lat), max_lon_(max_lon),
      cell_size_(cell_size) {
    if (!(min_lat < max_lat) || !(min_lon < max_lon)) {
        throw InvalidParams("grid bounding box must have min < max on both axes");
    }
    if (!(cell_size > 0.0)) throw InvalidParams("cell_size must be positive");
    if (!GeoPoint{min_lat, min_lon}.valid() || !GeoPoint{max_lat, max_lon}.valid()) {
        throw InvalidParams("grid bounding box outside WGS84 coordinate range");
    }
    ref_lat_ = ref_lat.value_or((min_lat + max_lat) / 2.0);
    lon_scale_ = kMetersPerDegree * std::cos(ref_lat_ * kPi / 180.0);
    if (!(lon_scale_ > 0.0)) throw InvalidParams("ref_lat too close to a pole");
    const double lat_extent_m = (max_lat_ - min_lat_) * kMetersPerDegree;
    const double lon_extent_m = (max_lon_ - min_lon_) * lon_scale_;
    n_rows_ = std::max(1, static_cast<int>(std::ceil(lat_extent_m / cell_size_)));
    n_cols_ = std::max(1, static_cast<int>(std::ceil(lon_extent_m / cell_size_)));
}

bool GridSpec::contains(GeoPoint p) const {
    return p.lat >= min_lat_ && p.lat <= max_lat_ && p.lon >= min_lon_ && p.lon <= max_lon_;
}

CellId GridSpec::cell_of(GeoPoint p) const {
    if (!contains(p)) {
        throw OutOfBounds("point (" + std::to_string(p.lat) + ", " + std::to_string(p.lon) +
                          ") outside grid bounding box");
    }
    const double dy_m = (p.lat - min_lat_) * kMetersPerDegree;
    const double dx_m = (p.lon - min_lon_) * lon_scale_;
    int row = static_cast<int>(std::floor(dy_m / cell_size_));
    int col = static_cast<int>(std::floor(dx_m / cell_size_));
    // Points exactly on the max edges clamp into the last row/col.
    row = std::min(row, n_rows_ - 1);
    col = std::min(col, n_cols_ - 1);
    return CellId{row, col};
}

GeoPoint GridSpec::cell_center(CellId c) const {
    const double lat = min_lat_ + (c.row + 0.5) * cell_size_ / kMetersPerDegree;
    const double lon = min_lon_ + (c.col + 0.5) * cell_size_ / lon_scale_;
    return GeoPoint{std::min(lat, max_lat_), std::min(lon, max_lon_)};
}

std::vector<CellId> GridSpec::neighbors8(CellId c) const {
    std::vector<CellId> out;
    out.reserve(8);
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const CellId n{c.row + dr, c.col + dc};
            if (valid_cell(n)) out.push_back(n);
        }
    }
    return out;
}

double GridSpec::center_distance_m(CellId a, CellId b) const {
    const double dy = (a.row - b.row) * cell_size_;
    const double dx = (a.col - b.col) * cell_size_;
    return std::sqrt(dy * dy + dx * dx);
}

TimeInterval interval_of(const LocalTime& ts, const IntervalScheme& scheme) {
    return scheme.interval_of_hour(ts.hour);
}

} // namespace riskflow
