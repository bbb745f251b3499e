#pragma once

#include <istream>
#include <string>
#include <vector>

namespace riskflow::csv {

/// Splits one CSV line into fields. Double-quoted fields may contain commas
/// and doubled quotes ("" escapes a quote).
std::vector<std::string> split_line(const std::string& line);

/// Joins fields into one CSV line, quoting only where required.
std::string join_row(const std::vector<std::string>& fields);

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Line-oriented reader that tracks 1-based line numbers (header = line 1).
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Reads the next non-empty row. Returns false at end of input.
    bool next_row(std::vector<std::string>& fields, std::size_t& line_no);

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

} // namespace riskflow::csv
