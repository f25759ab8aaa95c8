#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergmod::csv {

// RFC 4180 field quoting: fields containing comma, quote, CR or LF are
// wrapped in quotes with embedded quotes doubled.
std::string quote(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Reads one record; returns false at end of input.
bool read_row(std::istream& in, std::vector<std::string>& fields);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace bergmod::csv
