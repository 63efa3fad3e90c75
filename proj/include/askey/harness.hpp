#pragma once

#include "askey/transitions.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace askey {

inline const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> v = {"chart-consistency", "boundary-faces", "continuity",
                                               "transitions",       "moments-oracle", "hyp-oracle",
                                               "wilson-reality",    "limits",         "favard-scan",
                                               "jacobi2d"};
    return v;
}

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::optional<int> samples;
    std::optional<int> n_max;
    std::optional<double> tol;
    Backend backend = Backend::binary64;
};

struct CaseRecord {
    std::string label;
    double err = 0;
    double tol = 0;
    bool pass = false;
    bool gating = true;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    int samples = 0;
    double max_rel_err = 0;
    double tol = 0;
    bool pass = false;
    std::uint64_t seed = 0;
    Backend backend = Backend::binary64;
    std::vector<CaseRecord> details;
};

SuiteReport run_suite(const std::string &name, const SuiteConfig &cfg);
std::string to_json(const SuiteReport &r, int indent = 2);

// splitmix-seeded 64-bit engine with a fixed uniform mapping, so samples do not
// depend on the standard library's distribution implementation
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

  private:
    std::mt19937_64 g_;
};

inline constexpr double sample_lo = 1e-3;
inline constexpr double sample_hi = 1.0;
inline constexpr long max_rejections = 1000000;

template <class T> ChartPoint<T> draw_point(ChartId chart, Rng &rng, unsigned zero_mask = 0) {
    ChartPoint<T> p;
    p.chart = chart;
    for (int i = 0; i < dims(chart); ++i) {
        double v = rng.log_uniform(sample_lo, sample_hi);
        p.c[i] = zero_mask & (1u << i) ? T(0) : T(v);
    }
    return p;
}

template <class T> std::vector<ChartPoint<T>> sample_interior(ChartId chart, std::uint64_t seed, int count) {
    if (count < 1)
        throw Error(ErrorKind::BadInput, "count must be >= 1");
    Rng rng(seed);
    std::vector<ChartPoint<T>> out;
    long rejected = 0;
    while (static_cast<int>(out.size()) < count) {
        auto p = draw_point<T>(chart, rng);
        if (interior_violation(p)) {
            if (++rejected >= max_rejections)
                throw Error(ErrorKind::SamplingExhausted, std::string(to_string(chart)) + ": too many rejections");
            continue;
        }
        out.push_back(p);
    }
    return out;
}

// points on a face: the zero coordinates fixed, the rest log-uniform, rejected
// against the closed domain
template <class T> std::vector<ChartPoint<T>> sample_face(ChartId chart, unsigned face, std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<ChartPoint<T>> out;
    long rejected = 0;
    while (static_cast<int>(out.size()) < count) {
        auto p = draw_point<T>(chart, rng, face);
        if (domain_violation(p)) {
            if (++rejected >= max_rejections)
                throw Error(ErrorKind::SamplingExhausted, std::string(to_string(chart)) + ": too many rejections");
            continue;
        }
        out.push_back(p);
    }
    return out;
}

enum class TableFormat { csv, json };

template <class T> std::string emit_table(const ChartPoint<T> &p, int n_max, TableFormat fmt);
extern template std::string emit_table<double>(const ChartPoint<double> &, int, TableFormat);
extern template std::string emit_table<hp>(const ChartPoint<hp> &, int, TableFormat);

struct Sample {
    int n;
    double B;
    double C;
};

struct Candidate {
    std::string name;
    bool is_chart = false;
    std::vector<std::string> param_names;
    std::vector<double> params;
    double residual = 0;
    bool match = false;
};

struct IdentifyResult {
    std::vector<Candidate> candidates;
};

inline constexpr double match_threshold = 1e-8;

IdentifyResult identify(const std::vector<Sample> &samples, std::uint64_t seed = 7, int starts = 32);
std::string to_json(const IdentifyResult &r, int indent = 2);

// relative residual shared by identify and its callers
double sample_residual(const std::vector<Sample> &samples, const std::vector<std::pair<double, double>> &model);

} // namespace askey
