#include "cugan/data.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cugan/errors.hpp"
#include "cugan/rng.hpp"

namespace cugan {

Dataset make_graded_mixture(int n_modes, double radius, double sigma_min,
                            double sigma_max, int samples_per_mode,
                            std::uint64_t seed) {
    if (n_modes < 1) throw ConfigError("n_modes must be >= 1");
    if (radius < 0.0) throw ConfigError("radius must be >= 0");
    if (!(sigma_min > 0.0) || sigma_min > sigma_max)
        throw ConfigError("need 0 < sigma_min <= sigma_max");
    if (samples_per_mode < 1) throw ConfigError("samples_per_mode must be >= 1");
    if (static_cast<long>(n_modes) * samples_per_mode < 2)
        throw ConfigError("dataset too small: need at least 2 samples");

    const int n = n_modes * samples_per_mode;
    Dataset ds;
    ds.samples = Matrix(n, 2);
    DatasetMeta meta;
    meta.mode_of.resize(n);
    meta.mode_means.resize(n_modes);
    meta.mode_sigmas.resize(n_modes);

    RngStream rng{seed, 0x64617461ULL};
    int row = 0;
    for (int j = 0; j < n_modes; ++j) {
        const double angle = 2.0 * M_PI * j / n_modes;
        const double mx = radius * std::cos(angle);
        const double my = radius * std::sin(angle);
        double sigma = sigma_min;
        if (n_modes > 1) {
            const double frac = static_cast<double>(j) / (n_modes - 1);
            sigma = sigma_min * std::pow(sigma_max / sigma_min, frac);
        }
        meta.mode_means[j] = {mx, my};
        meta.mode_sigmas[j] = sigma;
        for (int i = 0; i < samples_per_mode; ++i, ++row) {
            ds.samples.at(row, 0) = mx + sigma * rng.gaussian();
            ds.samples.at(row, 1) = my + sigma * rng.gaussian();
            meta.mode_of[row] = j;
        }
    }
    ds.meta = std::move(meta);
    return ds;
}

Dataset make_ring_gmm(int n_modes, double radius, double sigma,
                      int samples_per_mode, std::uint64_t seed) {
    return make_graded_mixture(n_modes, radius, sigma, sigma, samples_per_mode, seed);
}

Dataset load_csv_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset file: " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            errno = 0;
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
                throw DataError("non-numeric cell '" + cell + "' at line " +
                                std::to_string(line_no) + " of " + path);
            }
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw DataError("ragged row at line " + std::to_string(line_no) + " of " +
                            path + ": expected " + std::to_string(rows.front().size()) +
                            " columns, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() < 2) {
        throw DataError("dataset too small: " + path + " has " +
                        std::to_string(rows.size()) + " rows, need at least 2");
    }

    Dataset ds;
    ds.samples = Matrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < ds.samples.rows; ++i) {
        for (int j = 0; j < ds.samples.cols; ++j) {
            ds.samples.at(i, j) = rows[i][j];
        }
    }
    return ds;
}

void save_csv_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write dataset file: " + path);
    char buf[40];
    for (int i = 0; i < ds.samples.rows; ++i) {
        for (int j = 0; j < ds.samples.cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", ds.samples.at(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

} // namespace cugan
