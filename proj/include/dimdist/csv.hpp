#ifndef DIMDIST_CSV_HPP
#define DIMDIST_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dimdist/measure.hpp"
#include "dimdist/point.hpp"

namespace dimdist {

/// Deterministic shortest-roundtrip formatting; reruns with identical
/// inputs emit byte-identical files.
std::string format_double(double v);

/// Layout: one row per point, columns `space,coord0,...,coordk`.
void write_points_csv(std::ostream& os, const std::vector<Point>& pts);
void write_points_csv(const std::string& path, const std::vector<Point>& pts);
std::vector<Point> read_points_csv(std::istream& is);
std::vector<Point> read_points_csv_file(const std::string& path);

/// Point columns plus a trailing `weight` column.
void write_measure_csv(std::ostream& os, const DiscreteMeasure& nu);
void write_measure_csv(const std::string& path, const DiscreteMeasure& nu);
DiscreteMeasure read_measure_csv(std::istream& is);

/// Generic numeric table with a header row.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace dimdist

#endif
