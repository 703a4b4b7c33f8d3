#pragma once

#include "lgfo/types.hpp"

#include <iosfwd>

namespace lgfo {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Reads `id,score,group,label` rows. Parse errors name the offending row
// (1-based file line, header is row 1) and column.
Dataset parse_dataset(std::istream& in);
Dataset parse_dataset_file(const std::string& path);

// Inverse of parse_dataset up to float formatting; round-trips exactly.
void write_dataset(const Dataset& dataset, std::ostream& out);

}  // namespace lgfo
