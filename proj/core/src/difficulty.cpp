#include "cugan/difficulty.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>

#include "cugan/errors.hpp"

namespace cugan {

DifficultyScores normalize_scores(const RawScores& raw) {
    if (raw.values.empty()) throw ConfigError("normalize_scores: empty input");
    for (double v : raw.values) {
        if (!std::isfinite(v)) throw InvalidScoreError("normalize_scores: non-finite raw score");
    }
    const auto [min_it, max_it] = std::minmax_element(raw.values.begin(), raw.values.end());
    const double lo = *min_it, hi = *max_it;

    DifficultyScores out;
    out.s.resize(raw.values.size());
    if (hi == lo) {
        std::fill(out.s.begin(), out.s.end(), 0.0);
        return out;
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
        out.s[i] = (raw.values[i] - lo) / span * 2.0 - 1.0;
    }
    return out;
}

std::vector<int> rank_by_difficulty(const DifficultyScores& scores) {
    std::vector<int> order(scores.s.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores.s[a] < scores.s[b]; });
    return order;
}

double analytic_difficulty(std::span<const double> sample,
                           std::span<const double> mode_mean, double sigma,
                           DifficultyProxy proxy) {
    double sq = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double d = sample[i] - mode_mean[i];
        sq += d * d;
    }
    const double dist = std::sqrt(sq);
    return proxy == DifficultyProxy::mahalanobis ? dist / sigma : dist;
}

RawScores analytic_scores(const Dataset& ds, DifficultyProxy proxy) {
    if (!ds.meta) {
        throw UnsupportedSourceError(
            "analytic difficulty needs a synthetic dataset with generator metadata; "
            "supply --scores <file> for external data");
    }
    const DatasetMeta& meta = *ds.meta;
    RawScores raw;
    raw.values.resize(ds.size());
    for (int i = 0; i < ds.size(); ++i) {
        const int mode = meta.mode_of[i];
        raw.values[i] = analytic_difficulty(ds.samples.row(i), meta.mode_means[mode],
                                            meta.mode_sigmas[mode], proxy);
    }
    return raw;
}

RawScores load_score_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open score file: " + path);
    RawScores raw;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        errno = 0;
        char* end = nullptr;
        double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str() || *end != '\0' || errno == ERANGE) {
            throw DataError("invalid score '" + line + "' at line " +
                            std::to_string(line_no) + " of " + path);
        }
        if (!std::isfinite(v)) {
            throw InvalidScoreError("non-finite score at line " + std::to_string(line_no) +
                                    " of " + path);
        }
        raw.values.push_back(v);
    }
    return raw;
}

DifficultyScores resolve_scores(const ScoreSource& source, const Dataset& ds) {
    switch (source.kind) {
    case ScoreSource::Kind::constant: {
        DifficultyScores out;
        out.s.assign(static_cast<std::size_t>(ds.size()), 0.0);
        return out;
    }
    case ScoreSource::Kind::analytic:
        return normalize_scores(analytic_scores(ds, source.proxy));
    case ScoreSource::Kind::file: {
        RawScores raw = load_score_file(source.path);
        if (static_cast<int>(raw.values.size()) != ds.size()) {
            throw DataError("score file " + source.path + " has " +
                            std::to_string(raw.values.size()) + " scores but dataset has " +
                            std::to_string(ds.size()) + " samples");
        }
        return normalize_scores(raw);
    }
    }
    throw ConfigError("unknown score source");
}

} // namespace cugan
