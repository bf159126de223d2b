#ifndef CTMA_CSV_HPP
#define CTMA_CSV_HPP

#include <iosfwd>
#include <string>

#include "ctma/paths.hpp"

namespace ctma::csv {

/// Writes `t,value` rows with 17 significant digits.
void write_path(std::ostream& os, const SamplePath& path);
void write_path(const std::string& filename, const SamplePath& path);

/// Increments are written against their cell end times.
void write_increments(std::ostream& os, const IncrementPath& path);
void write_increments(const std::string& filename, const IncrementPath& path);

/// Reads a `t,value` file back; grid is inferred from the t column.
SamplePath read_path(std::istream& is);
SamplePath read_path(const std::string& filename);

} // namespace ctma::csv

#endif
