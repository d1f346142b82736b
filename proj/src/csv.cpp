#include "mscheme/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mscheme {
namespace csv {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    return out;
}

void write_row(std::ofstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace

void write_sweep(const SweepTable& table, const std::string& path) {
    auto out = open_out(path);
    out << "axis,rho11,rho22,rho33,rho44,rho55,p0,p1,p2,p3,p4,"
           "eps0,eps1,eps2,eps3,eps4,residual,gap,dominant_pair\n";
    for (std::size_t i = 0; i < table.axis.values.size(); ++i) {
        std::vector<std::string> cells;
        cells.push_back(format_double(table.axis.values[i]));
        for (double v : table.bare_populations[i]) cells.push_back(format_double(v));
        for (double v : table.dressed_populations[i]) cells.push_back(format_double(v));
        for (double v : table.eigenvalues[i]) cells.push_back(format_double(v));
        cells.push_back(format_double(table.residual[i]));
        cells.push_back(format_double(table.gap[i]));
        cells.push_back(table.dominant_pair[i]);
        write_row(out, cells);
    }
    if (!out) throw IoError("write failed for \"" + path + "\"");
}

void write_trajectory(const Trajectory& traj, const std::string& path) {
    auto out = open_out(path);
    const bool with_tracking = !traj.tracking_error.empty();
    out << "t,rho11,rho22,rho33,rho44,rho55,coh12_abs,coh13_abs";
    if (with_tracking) out << ",tracking_error";
    out << '\n';
    static const char* pops[] = {"rho11", "rho22", "rho33", "rho44", "rho55"};
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        std::vector<std::string> cells;
        cells.push_back(format_double(traj.times[i]));
        for (const char* name : pops)
            cells.push_back(format_double(traj.observables.at(name)[i]));
        cells.push_back(format_double(traj.observables.at("coh12_abs")[i]));
        cells.push_back(format_double(traj.observables.at("coh13_abs")[i]));
        if (with_tracking) cells.push_back(format_double(traj.tracking_error[i]));
        write_row(out, cells);
    }
    if (!out) throw IoError("write failed for \"" + path + "\"");
}

void write_dressed(const DressedBasis& basis, const std::string& path) {
    auto out = open_out(path);
    out << "branch,eps";
    for (int j = 1; j <= kLevels; ++j) out << ",u" << j << "_re,u" << j << "_im";
    out << '\n';
    for (int l = 0; l < kLevels; ++l) {
        std::vector<std::string> cells;
        cells.push_back("e" + std::to_string(l));
        cells.push_back(format_double(basis.eigenvalues[l]));
        for (int j = 0; j < kLevels; ++j) {
            cells.push_back(format_double(basis.vectors(l, j).real()));
            cells.push_back(format_double(basis.vectors(l, j).imag()));
        }
        write_row(out, cells);
    }
    if (!out) throw IoError("write failed for \"" + path + "\"");
}

Table read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open \"" + path + "\" for reading");
    Table table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (first) {
            table.header = cells;
            first = false;
        } else if (!cells.empty()) {
            table.rows.push_back(cells);
        }
    }
    return table;
}

}  // namespace csv
}  // namespace mscheme
