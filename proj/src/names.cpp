#include "askey/charts.hpp"

#include <algorithm>
#include <cctype>

namespace askey {

const char *to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NonFiniteCoefficient: return "NonFiniteCoefficient";
    case ErrorKind::SingularHankel: return "SingularHankel";
    case ErrorKind::PoleInLowerParameter: return "PoleInLowerParameter";
    case ErrorKind::NormalizationPole: return "NormalizationPole";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::BadInput: return "BadInput";
    }
    return "?";
}

const char *to_string(FamilyId f) {
    switch (f) {
    case FamilyId::Wilson: return "Wilson";
    case FamilyId::Racah: return "Racah";
    case FamilyId::ContinuousDualHahn: return "ContinuousDualHahn";
    case FamilyId::ContinuousHahn: return "ContinuousHahn";
    case FamilyId::Hahn: return "Hahn";
    case FamilyId::DualHahn: return "DualHahn";
    case FamilyId::MeixnerPollaczek: return "MeixnerPollaczek";
    case FamilyId::Jacobi: return "Jacobi";
    case FamilyId::Meixner: return "Meixner";
    case FamilyId::Krawtchouk: return "Krawtchouk";
    case FamilyId::Laguerre: return "Laguerre";
    case FamilyId::Charlier: return "Charlier";
    case FamilyId::Hermite: return "Hermite";
    }
    return "?";
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    out.erase(std::remove_if(out.begin(), out.end(), [](char c) { return c == '-' || c == '_'; }), out.end());
    return out;
}

} // namespace

std::optional<FamilyId> family_from_string(std::string_view s) {
    auto key = lower(s);
    for (FamilyId f : all_families)
        if (lower(to_string(f)) == key)
            return f;
    return std::nullopt;
}

const std::vector<std::string> &param_names(FamilyId f) {
    static const std::vector<std::string> wilson{"a", "b", "c", "d"}, racah{"alpha", "beta", "N", "delta"},
        cdh{"a", "b", "c"}, hahn{"alpha", "beta", "N"}, dual_hahn{"gamma", "delta", "N"}, mp{"lambda", "phi"},
        jacobi{"alpha", "beta"}, meixner{"beta", "c"}, kraw{"p", "N"}, laguerre{"alpha"}, charlier{"a"}, none{};
    switch (f) {
    case FamilyId::Wilson:
    case FamilyId::ContinuousHahn: return wilson;
    case FamilyId::Racah: return racah;
    case FamilyId::ContinuousDualHahn: return cdh;
    case FamilyId::Hahn: return hahn;
    case FamilyId::DualHahn: return dual_hahn;
    case FamilyId::MeixnerPollaczek: return mp;
    case FamilyId::Jacobi: return jacobi;
    case FamilyId::Meixner: return meixner;
    case FamilyId::Krawtchouk: return kraw;
    case FamilyId::Laguerre: return laguerre;
    case FamilyId::Charlier: return charlier;
    case FamilyId::Hermite: return none;
    }
    return none;
}

bool has_complex_params(FamilyId f) {
    return f == FamilyId::Wilson || f == FamilyId::ContinuousHahn || f == FamilyId::ContinuousDualHahn;
}

const char *to_string(ChartId c) {
    switch (c) {
    case ChartId::Racah1: return "Racah1";
    case ChartId::Racah2: return "Racah2";
    case ChartId::Racah3: return "Racah3";
    case ChartId::Wilson1: return "Wilson1";
    case ChartId::Wilson2: return "Wilson2";
    case ChartId::Jacobi2D: return "Jacobi2D";
    }
    return "?";
}

std::optional<ChartId> chart_from_string(std::string_view s) {
    auto key = lower(s);
    for (ChartId c : all_charts)
        if (lower(to_string(c)) == key)
            return c;
    return std::nullopt;
}

std::string face_label(unsigned mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) {
            if (!first)
                out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

} // namespace askey
