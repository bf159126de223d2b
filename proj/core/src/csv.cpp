#include "ctma/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ctma::csv {

namespace {

void write_rows(std::ostream& os, const Grid& grid, const std::vector<double>& v,
                bool cell_ends) {
    os << "t,value\n";
    char buf[64];
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double t = grid.time(static_cast<std::int64_t>(i) + (cell_ends ? 1 : 0));
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", t, v[i]);
        os << buf;
    }
}

std::ofstream open_out(const std::string& filename) {
    std::ofstream os(filename);
    if (!os) throw Error("cannot open for writing: " + filename);
    return os;
}

} // namespace

void write_path(std::ostream& os, const SamplePath& path) {
    write_rows(os, path.grid, path.values, false);
}

void write_path(const std::string& filename, const SamplePath& path) {
    auto os = open_out(filename);
    write_path(os, path);
}

void write_increments(std::ostream& os, const IncrementPath& path) {
    write_rows(os, path.grid, path.increments, true);
}

void write_increments(const std::string& filename, const IncrementPath& path) {
    auto os = open_out(filename);
    write_increments(os, path);
}

SamplePath read_path(std::istream& is) {
    SamplePath out;
    std::string line;
    std::getline(is, line); // header
    std::vector<double> times;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error("csv: malformed row: " + line);
        times.push_back(std::stod(line.substr(0, comma)));
        out.values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (times.empty()) throw Error("csv: no rows");
    out.grid.t0 = times.front();
    out.grid.n = static_cast<std::int64_t>(times.size());
    out.grid.dt = times.size() > 1
                      ? (times.back() - times.front()) / double(times.size() - 1)
                      : 1.0;
    return out;
}

SamplePath read_path(const std::string& filename) {
    std::ifstream is(filename);
    if (!is) throw Error("cannot open for reading: " + filename);
    return read_path(is);
}

} // namespace ctma::csv
