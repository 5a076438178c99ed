#include "dimdist/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dimdist/error.hpp"

namespace dimdist {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // prefer the shortest representation that round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

void write_points_csv(std::ostream& os, const std::vector<Point>& pts) {
  std::size_t k = pts.empty() ? 0 : pts.front().x.size();
  os << "space";
  for (std::size_t i = 0; i < k; ++i) os << ",coord" << i;
  os << "\n";
  for (const auto& p : pts) {
    os << space_name(p.space);
    for (double c : p.x) os << "," << format_double(c);
    os << "\n";
  }
}

void write_points_csv(const std::string& path, const std::vector<Point>& pts) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  write_points_csv(os, pts);
}

static std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

std::vector<Point> read_points_csv(std::istream& is) {
  std::vector<Point> pts;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.empty()) continue;
    Point p;
    p.space = space_from_name(fields[0]);
    for (std::size_t i = 1; i < fields.size(); ++i) p.x.push_back(std::stod(fields[i]));
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Point> read_points_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open: " + path);
  return read_points_csv(is);
}

void write_measure_csv(std::ostream& os, const DiscreteMeasure& nu) {
  std::size_t k = nu.atoms.empty() ? 0 : nu.atoms.front().x.size();
  os << "space";
  for (std::size_t i = 0; i < k; ++i) os << ",coord" << i;
  os << ",weight\n";
  for (std::size_t j = 0; j < nu.atoms.size(); ++j) {
    os << space_name(nu.atoms[j].space);
    for (double c : nu.atoms[j].x) os << "," << format_double(c);
    os << "," << format_double(nu.weights[j]) << "\n";
  }
}

void write_measure_csv(const std::string& path, const DiscreteMeasure& nu) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  write_measure_csv(os, nu);
}

DiscreteMeasure read_measure_csv(std::istream& is) {
  std::vector<Point> atoms;
  std::vector<double> weights;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() < 2) continue;
    Point p;
    p.space = space_from_name(fields[0]);
    for (std::size_t i = 1; i + 1 < fields.size(); ++i) p.x.push_back(std::stod(fields[i]));
    atoms.push_back(std::move(p));
    weights.push_back(std::stod(fields.back()));
  }
  return DiscreteMeasure::make(std::move(atoms), std::move(weights));
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_double(row[i]);
    os << "\n";
  }
}

}  // namespace dimdist
