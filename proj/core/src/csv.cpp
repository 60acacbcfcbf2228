#include "hatom/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hatom::io {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string csv_table(const std::string& kind, const std::vector<std::string>& names,
                      const std::vector<std::string>& units,
                      const std::vector<std::vector<double>>& columns) {
    if (names.size() != units.size() || names.size() != columns.size()) {
        throw std::invalid_argument("csv_table: names/units/columns size mismatch");
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != rows) throw std::invalid_argument("csv_table: ragged columns");
    }

    std::string out;
    out += "# hatom-csv v1 kind=" + kind + "\n";
    for (std::size_t j = 0; j < names.size(); ++j) {
        out += names[j] + "[" + units[j] + "]";
        out += (j + 1 < names.size()) ? "," : "\n";
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            out += num(columns[j][i]);
            out += (j + 1 < columns.size()) ? "," : "\n";
        }
    }
    return out;
}

std::string trajectory_csv(const std::string& kind, const TrajectoryRecord& rec) {
    std::vector<std::string> names = {"t",    "rp_x", "rp_y", "rp_z", "pp_x", "pp_y", "pp_z",
                                      "re_x", "re_y", "re_z", "pe_x", "pe_y", "pe_z", "P_x",
                                      "P_y",  "P_z",  "energy", "norm"};
    std::vector<std::string> units = {"atu", "a0", "a0", "a0", "au", "au", "au",
                                      "a0",  "a0", "a0", "au", "au", "au", "au",
                                      "au",  "au", "hartree", "1"};
    const std::size_t n = rec.size();
    std::vector<std::vector<double>> cols(names.size(), std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        cols[j++][i] = rec.t[i];
        cols[j++][i] = rec.r_p[i].x;
        cols[j++][i] = rec.r_p[i].y;
        cols[j++][i] = rec.r_p[i].z;
        cols[j++][i] = rec.p_p[i].x;
        cols[j++][i] = rec.p_p[i].y;
        cols[j++][i] = rec.p_p[i].z;
        cols[j++][i] = rec.r_e[i].x;
        cols[j++][i] = rec.r_e[i].y;
        cols[j++][i] = rec.r_e[i].z;
        cols[j++][i] = rec.p_e[i].x;
        cols[j++][i] = rec.p_e[i].y;
        cols[j++][i] = rec.p_e[i].z;
        cols[j++][i] = rec.P[i].x;
        cols[j++][i] = rec.P[i].y;
        cols[j++][i] = rec.P[i].z;
        cols[j++][i] = rec.energy[i];
        cols[j++][i] = rec.norm[i];
    }
    if (!rec.populations.empty()) {
        const std::size_t m = rec.populations.front().size();
        for (std::size_t s = 0; s < m; ++s) {
            names.push_back("pop_" + std::to_string(rec.n_lo + static_cast<int>(s)));
            units.push_back("1");
            std::vector<double> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = rec.populations[i][s];
            cols.push_back(std::move(col));
        }
    }
    return csv_table(kind, names, units, cols);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace hatom::io
