#pragma once

#include "askey/polyrec.hpp"
#include "askey/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace askey {

enum class FamilyId {
    Wilson,
    Racah,
    ContinuousDualHahn,
    ContinuousHahn,
    Hahn,
    DualHahn,
    MeixnerPollaczek,
    Jacobi,
    Meixner,
    Krawtchouk,
    Laguerre,
    Charlier,
    Hermite,
};

inline constexpr std::array<FamilyId, 13> all_families = {
    FamilyId::Wilson,   FamilyId::Racah,      FamilyId::ContinuousDualHahn, FamilyId::ContinuousHahn,
    FamilyId::Hahn,     FamilyId::DualHahn,   FamilyId::MeixnerPollaczek,   FamilyId::Jacobi,
    FamilyId::Meixner,  FamilyId::Krawtchouk, FamilyId::Laguerre,           FamilyId::Charlier,
    FamilyId::Hermite};

const char *to_string(FamilyId f);
std::optional<FamilyId> family_from_string(std::string_view s);
const std::vector<std::string> &param_names(FamilyId f);
inline int arity(FamilyId f) { return static_cast<int>(param_names(f).size()); }
bool has_complex_params(FamilyId f);

// Parameters are stored complex so Wilson and continuous Hahn fit the same record;
// every other family keeps zero imaginary parts.
template <class T> struct FamilyInstance {
    FamilyId id = FamilyId::Hermite;
    std::array<cx<T>, 4> params{};

    T re(int i) const { return params[i].real(); }
    cx<T> z(int i) const { return params[i]; }

    static FamilyInstance real(FamilyId id, std::initializer_list<T> values) {
        FamilyInstance f;
        f.id = id;
        int i = 0;
        for (const T &v : values)
            f.params[i++] = cx<T>(v, T(0));
        return f;
    }
    static FamilyInstance complex(FamilyId id, std::initializer_list<cx<T>> values) {
        FamilyInstance f;
        f.id = id;
        int i = 0;
        for (const cx<T> &v : values)
            f.params[i++] = v;
        return f;
    }
};

template <class T> struct RacahParams {
    T alpha, beta, N, delta;
    T gamma() const { return -N - T(1); }
};

template <class T> struct WilsonParams {
    cx<T> a, b, c, d;
};

template <class T> RacahParams<T> racah_params(const FamilyInstance<T> &f) {
    return {f.re(0), f.re(1), f.re(2), f.re(3)};
}

template <class T> WilsonParams<T> wilson_params(const FamilyInstance<T> &f) {
    return {f.z(0), f.z(1), f.z(2), f.z(3)};
}

// ---------------------------------------------------------------------------
// direct coefficients

template <class T> std::pair<T, T> racah_an_cn(const RacahParams<T> &p, int n) {
    const T k = T(n);
    const T &al = p.alpha, &be = p.beta, &N = p.N, &de = p.delta;
    T den_a = (2 * k + al + be + 1) * (2 * k + al + be + 2);
    if (den_a == T(0))
        throw Error(ErrorKind::NonFiniteCoefficient, "Racah a_n denominator vanishes at n=" + std::to_string(n));
    T a = (k + al + 1) * (k + al + be + 1) * (k + be + de + 1) * (N - k) / den_a;
    T c = T(0);
    if (n > 0) {
        T den_c = (2 * k + al + be) * (2 * k + al + be + 1);
        if (den_c == T(0))
            throw Error(ErrorKind::NonFiniteCoefficient, "Racah c_n denominator vanishes at n=" + std::to_string(n));
        c = k * (k + al + be + N + 1) * (de - al - k) * (k + be) / den_c;
    }
    return {a, c};
}

template <class T> std::pair<T, T> racah_coeffs(const RacahParams<T> &p, int n) {
    auto [a, c] = racah_an_cn(p, n);
    T C = T(0);
    if (n > 0)
        C = racah_an_cn(p, n - 1).first * c;
    return {a + c, C};
}

template <class T> std::pair<cx<T>, cx<T>> wilson_an_cn(const WilsonParams<T> &p, int n) {
    using C = cx<T>;
    const C k = C(T(n), T(0));
    const C one(T(1), T(0)), two(T(2), T(0));
    const C s = p.a + p.b + p.c + p.d;
    C den_a = (two * k + s - one) * (two * k + s);
    if (den_a == C(0))
        throw Error(ErrorKind::NonFiniteCoefficient, "Wilson a_n denominator vanishes at n=" + std::to_string(n));
    C an = (k + s - one) * (k + p.a + p.b) * (k + p.a + p.c) * (k + p.a + p.d) / den_a;
    C cn = C(0);
    if (n > 0) {
        C den_c = (two * k + s - two) * (two * k + s - one);
        if (den_c == C(0))
            throw Error(ErrorKind::NonFiniteCoefficient, "Wilson c_n denominator vanishes at n=" + std::to_string(n));
        cn = k * (k + p.b + p.c - one) * (k + p.b + p.d - one) * (k + p.c + p.d - one) / den_c;
    }
    return {an, cn};
}

template <class T> std::pair<cx<T>, cx<T>> wilson_coeffs_complex(const WilsonParams<T> &p, int n) {
    auto [an, cn] = wilson_an_cn(p, n);
    cx<T> C = cx<T>(0);
    if (n > 0)
        C = wilson_an_cn(p, n - 1).first * cn;
    return {an + cn - p.a * p.a, C};
}

template <class T> std::pair<T, T> wilson_coeffs(const WilsonParams<T> &p, int n) {
    auto [B, C] = wilson_coeffs_complex(p, n);
    return {B.real(), C.real()};
}

// continuous dual Hahn in the x = y^2 variable, written for all-real parameters
// where no Wilson chart face applies (Wilson positivity case 3)
template <class T> std::pair<T, T> cdh_direct_coeffs(const T &a, const T &b, const T &c, int n) {
    const T k = T(n);
    auto A = [&](const T &m) { return (m + a + b) * (m + a + c); };
    T Cn = k * (k + b + c - 1);
    T C = n > 0 ? A(k - 1) * Cn : T(0);
    return {A(k) + Cn - a * a, C};
}

template <class T> std::pair<T, T> hermite_coeffs(int n) { return {T(0), T(n) / 2}; }

template <class T> std::pair<T, T> laguerre_coeffs(const T &al, int n) {
    const T k = T(n);
    return {2 * k + al + 1, k * (k + al)};
}

// the n=0 value of B and the n=1 value of C are written with the removable
// factor cancelled so that alpha+beta in {0,-1} stays finite
template <class T> std::pair<T, T> jacobi_coeffs(const T &al, const T &be, int n) {
    const T k = T(n);
    const T s = al + be;
    T B = n == 0 ? (be - al) / (s + 2) : (be * be - al * al) / ((2 * k + s) * (2 * k + s + 2));
    T C = T(0);
    if (n == 1)
        C = 4 * (1 + al) * (1 + be) / ((s + 2) * (s + 2) * (s + 3));
    else if (n > 1)
        C = 4 * k * (k + al) * (k + be) * (k + s) / ((2 * k + s - 1) * (2 * k + s) * (2 * k + s) * (2 * k + s + 1));
    return {B, C};
}

// ---------------------------------------------------------------------------
// terminating hypergeometric series

enum class HypKind { F21, F11, F43 };

template <class Z> Z pochhammer(const Z &a, int k) {
    Z r = Z(1);
    for (int j = 0; j < k; ++j)
        r *= a + Z(j);
    return r;
}

template <class Z>
Z hyp_terminating(HypKind kind, const std::vector<Z> &upper, const std::vector<Z> &lower, const Z &z, int n) {
    std::size_t nu = kind == HypKind::F21 ? 2 : kind == HypKind::F11 ? 1 : 4;
    std::size_t nl = kind == HypKind::F43 ? 3 : 1;
    if (upper.size() != nu || lower.size() != nl)
        throw Error(ErrorKind::BadInput, "parameter counts do not match the series kind");
    if (upper[0] != Z(-n))
        throw Error(ErrorKind::BadInput, "first upper parameter must be -n");
    Z sum = Z(1), term = Z(1);
    for (int k = 0; k < n; ++k) {
        Z num = Z(1), den = Z(1);
        for (const auto &u : upper)
            num *= u + Z(k);
        for (const auto &l : lower) {
            Z f = l + Z(k);
            if (f == Z(0))
                throw Error(ErrorKind::PoleInLowerParameter, "lower Pochhammer vanishes at k=" + std::to_string(k));
            den *= f;
        }
        term = term * num / den * z / Z(k + 1);
        sum += term;
    }
    return sum;
}

// monic Racah r_n(x) and monic Wilson w_n(x) from their 4F3 forms
template <class T> T monic_via_hyp(const FamilyInstance<T> &f, const T &x, int n) {
    using Z = cx<T>;
    using std::sqrt;
    if (f.id == FamilyId::Racah) {
        auto p = racah_params(f);
        const Z al(p.alpha), be(p.beta), N(p.N), de(p.delta), ga(p.gamma());
        Z norm = pochhammer(Z(T(n)) + al + be + Z(1), n);
        if (norm == Z(0))
            throw Error(ErrorKind::NormalizationPole, "(n+alpha+beta+1)_n vanishes");
        // x = y (y + gamma + delta + 1)
        Z g = ga + de + Z(1);
        Z y = (-g + sqrt(g * g + Z(4) * Z(x))) / Z(2);
        Z lead = pochhammer(al + Z(1), n) * pochhammer(be + de + Z(1), n) * pochhammer(-N, n) / norm;
        Z F = hyp_terminating<Z>(HypKind::F43, {Z(-n), Z(T(n)) + al + be + Z(1), -y, y + g},
                                 {al + Z(1), be + de + Z(1), ga + Z(1)}, Z(1), n);
        return (lead * F).real();
    }
    if (f.id == FamilyId::Wilson) {
        auto p = wilson_params(f);
        Z s = p.a + p.b + p.c + p.d;
        Z norm = pochhammer(Z(T(n)) + s - Z(1), n);
        if (norm == Z(0))
            throw Error(ErrorKind::NormalizationPole, "(n+a+b+c+d-1)_n vanishes");
        Z y = x >= T(0) ? Z(sqrt(x)) : Z(T(0), sqrt(-x));
        Z iy = Z(T(0), T(1)) * y;
        Z sign = n % 2 ? Z(-1) : Z(1);
        Z lead = sign * pochhammer(p.a + p.b, n) * pochhammer(p.a + p.c, n) * pochhammer(p.a + p.d, n) / norm;
        Z F = hyp_terminating<Z>(HypKind::F43, {Z(-n), Z(T(n)) + s - Z(1), p.a + iy, p.a - iy},
                                 {p.a + p.b, p.a + p.c, p.a + p.d}, Z(1), n);
        return (lead * F).real();
    }
    throw Error(ErrorKind::BadInput, "monic_via_hyp supports Racah and Wilson only");
}

} // namespace askey
