#pragma once

#include "riskflow/geo.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace riskflow {

struct CrimeEvent {
    LocalTime ts;
    GeoPoint loc;
    std::string kind; // parsed but unused by the model
};

struct Venue {
    std::string id;
    GeoPoint loc;
    std::string category;
};

struct MovementRecord {
    std::string origin_venue;
    std::string dest_venue;
    MonthId month;
    TimeInterval interval = TimeInterval::Morning;
    long long count = 0;
};

/// One rejected input row. Parsers never abort on a bad row; they report it.
struct Reject {
    std::size_t line_no = 0;
    std::string reason;
};

struct CountKey {
    CellId cell;
    MonthId month;
    TimeInterval interval = TimeInterval::Morning;

    auto operator<=>(const CountKey&) const = default;
};

/// Crime counts per (cell, month, interval). Absent keys mean zero.
using CellCounts = std::map<CountKey, long long>;

struct OdKey {
    CellId origin;
    CellId dest;
    MonthId month;
    TimeInterval interval = TimeInterval::Morning;

    auto operator<=>(const OdKey&) const = default;
};

/// Aggregated cell-to-cell movement counts. Origin may equal dest (stationary).
using OdAggregate = std::map<OdKey, long long>;

struct CrimeParse {
    std::vector<CrimeEvent> events;
    std::vector<Reject> rejects;
};

struct VenueParse {
    std::vector<Venue> venues;
    std::vector<Reject> rejects;
};

struct MovementParse {
    std::vector<MovementRecord> records;
    std::vector<Reject> rejects;
};

struct OdResolve {
    OdAggregate od;
    std::vector<Reject> rejects;
};

/// CSV header: datetime,lat,lon[,type]. Throws FileFormat on a bad header.
CrimeParse parse_crimes(std::istream& in, const GridSpec& grid);

/// CSV header: venue_id,lat,lon,category. Later duplicate ids are rejected;
/// an empty category becomes "(unknown)".
VenueParse parse_venues(std::istream& in);

/// CSV header: origin_venue,dest_venue,month,interval,count.
MovementParse parse_movements(std::istream& in);

/// Groups in-box crime events by (cell, month, interval). Total preserved.
CellCounts bin_crimes(const std::vector<CrimeEvent>& crimes, const GridSpec& grid,
                      const IntervalScheme& scheme);

/// Resolves venue-level movements to cell-level OD aggregates. Records that
/// reference unknown or out-of-box venues are rejected; accepted counts are
/// preserved in the aggregate.
OdResolve resolve_movements(const std::vector<MovementRecord>& moves,
                            const std::vector<Venue>& venues, const GridSpec& grid);

void write_rejects(std::ostream& out, const std::vector<Reject>& rejects);

} // namespace riskflow
