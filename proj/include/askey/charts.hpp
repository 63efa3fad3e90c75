#pragma once

#include "askey/families.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace askey {

enum class ChartId { Racah1, Racah2, Racah3, Wilson1, Wilson2, Jacobi2D };

inline constexpr std::array<ChartId, 6> all_charts = {ChartId::Racah1,  ChartId::Racah2,  ChartId::Racah3,
                                                      ChartId::Wilson1, ChartId::Wilson2, ChartId::Jacobi2D};

const char *to_string(ChartId c);
std::optional<ChartId> chart_from_string(std::string_view s);
inline int dims(ChartId c) { return c == ChartId::Jacobi2D ? 2 : 4; }
inline bool is_racah_chart(ChartId c) {
    return c == ChartId::Racah1 || c == ChartId::Racah2 || c == ChartId::Racah3;
}

template <class T> struct ChartPoint {
    ChartId chart = ChartId::Racah1;
    std::array<T, 4> c{};

    // bit i set <=> coordinate i+1 is exactly zero
    unsigned zero_set() const {
        unsigned m = 0;
        for (int i = 0; i < dims(chart); ++i)
            if (c[i] == T(0))
                m |= 1u << i;
        return m;
    }

    template <class U> ChartPoint<U> as() const {
        ChartPoint<U> q;
        q.chart = chart;
        for (int i = 0; i < 4; ++i)
            q.c[i] = U(c[i]);
        return q;
    }
};

std::string face_label(unsigned mask);

// first violated constraint of the closed chart domain, if any
template <class T> std::optional<std::string> domain_violation(const ChartPoint<T> &p) {
    for (int i = 0; i < dims(p.chart); ++i) {
        if (!is_finite(p.c[i]))
            return "coordinate " + std::to_string(i + 1) + " not finite";
        if (p.c[i] < T(0))
            return "coordinate " + std::to_string(i + 1) + " >= 0";
    }
    const auto &x = p.c;
    switch (p.chart) {
    case ChartId::Racah1:
        if (!(x[0] * x[2] < T(1)))
            return "t1 t3 < 1";
        if (!(x[1] * x[3] < T(1)))
            return "t2 t4 < 1";
        break;
    case ChartId::Racah2:
        if (!(x[1] * x[1] * x[3] < T(1)))
            return "s2^2 s4 < 1";
        break;
    case ChartId::Racah3:
        if (!(x[1] * x[1] * x[2] * x[3] < T(1)))
            return "u2^2 u3 u4 < 1";
        if (!(x[1] * x[2] * (x[0] - x[1]) < T(1)))
            return "u2 u3 (u1 - u2) < 1";
        break;
    default:
        break;
    }
    return std::nullopt;
}

template <class T> std::optional<std::string> interior_violation(const ChartPoint<T> &p) {
    if (auto v = domain_violation(p))
        return v;
    for (int i = 0; i < dims(p.chart); ++i)
        if (!(p.c[i] > T(0)))
            return "coordinate " + std::to_string(i + 1) + " > 0";
    return std::nullopt;
}

template <class T> struct ChartFamily {
    FamilyInstance<T> family;
    AffineScale<T> scale;
};

// top family and (rho, sigma) of an interior chart point
template <class T> ChartFamily<T> chart_to_family(const ChartPoint<T> &p) {
    using std::sqrt;
    if (auto v = interior_violation(p))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(p.chart)) + ": " + *v);
    using Z = cx<T>;
    const T one = T(1), two = T(2);
    switch (p.chart) {
    case ChartId::Racah1: {
        const auto [t1, t2, t3, t4] = p.c;
        T al = one / t1, be = one / (t1 * t2), N = one / (t2 * t4);
        T de = (one + t2 * t3 * t4) / (t1 * t2 * t3 * t4);
        T rho = t1 * t2 * pow_half(one + t2, 3) * t3 * t4 * t4 /
                (sqrt(t1 + t4 + t2 * t4) * sqrt(one + (one + t2) * t3 * t4));
        T sig = -(one + t1) * (one + (one + t2 + t1 * t2) * t3 * t4) /
                (t1 * t2 * (one + t2 + two * t1 * t2) * t3 * t4 * t4);
        return {FamilyInstance<T>::real(FamilyId::Racah, {al, be, N, de}), {rho, sig}};
    }
    case ChartId::Racah2: {
        const auto [s1, s2, s3, s4] = p.c;
        T al = (one + s1) / (s1 * s2), be = (one + s1) / (s1 * s2 * s2 * s3 * s4), N = one / (s2 * s2 * s4);
        T de = (one + s1 + s2 * s4 * (one + s1 + s1 * s2)) / (s1 * s2 * s2 * s4);
        T rho = s1 * pow_half(s2, 5) * s4 / (sqrt(two) * (one + s1));
        T sig = -((one + s1) * (one + s3 - s2 * s2 * s4) + s1 * s2) / (s1 * s2 * s2 * s2 * s4);
        return {FamilyInstance<T>::real(FamilyId::Racah, {al, be, N, de}), {rho, sig}};
    }
    case ChartId::Racah3: {
        const auto [u1, u2, u3, u4] = p.c;
        T al = (one + u1) / u2, be = one / (u1 * u2 * u2 * u3 * u3 * u4), N = one / (u2 * u2 * u3 * u4);
        T de = (one + u4 + u2 * u3 * u4 + u2 * u2 * u3 * u4) / (u2 * u2 * u3 * u4);
        T rho = pow_half(u2, 5) * u3 * u4 / sqrt(two);
        T sig = -(one + u1) * (one + u1 * u3 + u1 * u3 * u4) / (u2 * u2 * u2 * u3 * u4);
        return {FamilyInstance<T>::real(FamilyId::Racah, {al, be, N, de}), {rho, sig}};
    }
    case ChartId::Wilson1: {
        const auto [a1, a2, a3, a4] = p.c;
        T r = sqrt(a1);
        T den = two * a1 * r * a2 * a2 * a3 * a4;
        T im1 = (one - r * a2 * a4) / den, im2 = (one + r * a2 * a4) / den;
        Z a(one / a1, -im1), b(one / (a1 * a2), -im2), c(one / a1, im1), d(one / (a1 * a2), im2);
        T rho = two * sqrt(two) * a1 * a1 * a2 * a2 * a3 * a3 * a4;
        T sig = -one / (4 * a1 * a1 * a1 * a2 * a2 * a2 * a2 * a3 * a3 * a4 * a4) +
                (one - a2) / (two * a1 * a1 * r * a2 * a2 * a2 * (one + a2 - a1 * a2) * a3 * a3 * a4);
        return {FamilyInstance<T>::complex(FamilyId::Wilson, {a, b, c, d}), {rho, sig}};
    }
    case ChartId::Wilson2: {
        const auto [b1, b2, b3, b4] = p.c;
        T re = (one + b1) / (two * b1);
        T im = (one + 4 * b1 * b2) / (two * b1 * b1 * b1 * b2 * b3);
        T q = two + b1 * b3 + b1 * b1 * b1 * b2 * b3 * b3;
        T w = two * b1 * b1 * b1 * b1 * b2 * b3 * b3;
        T cc = one / (b1 * b1 * b1 * b1 * b1 * b1 * b2 * b2 * b3 * b3 * b3 * b4) +
               (q + 3 * b1 * b1 * b1 * b1 * b2 * b3 * b3) / w;
        T dd = -(q + b1 * b1 * b1 * b1 * b2 * b3 * b3) / w;
        T rho = pow_half(b1, 9) * b2 * b3 * b3 / sqrt(two);
        T b1p2 = b1 * b1, b1p4 = b1p2 * b1p2;
        T sig = -(one + 4 * b1 * b2 + 4 * b1p2 * b2 * b4 + 4 * b1p2 * b1 * b2 * b2 * b3 * b4 +
                  4 * b1p4 * b2 * b2 * b3 * b3 * b4 + 4 * b1p4 * b2 * b2 * b3 * b4 * b4 +
                  4 * b1p4 * b1 * b2 * b2 * b3 * b3 * b4 * b4) /
                (4 * b1p4 * b1p2 * b2 * b2 * b3 * b3);
        return {FamilyInstance<T>::complex(FamilyId::Wilson, {Z(re, im), Z(re, -im), Z(cc, T(0)), Z(dd, T(0))}),
                {rho, sig}};
    }
    case ChartId::Jacobi2D: {
        T al = one / p.c[0], be = one / p.c[1];
        T rho = pow_half(al + be, 3) / sqrt(al * be);
        T sig = (al - be) / (al + be);
        return {FamilyInstance<T>::real(FamilyId::Jacobi, {al, be}), {rho, sig}};
    }
    }
    throw Error(ErrorKind::BadInput, "unknown chart");
}

namespace detail {

template <class T> std::pair<T, T> racah1_coeffs(const std::array<T, 4> &t, int n) {
    using std::sqrt;
    const auto [t1, t2, t3, t4] = t;
    const T k = T(n), one = T(1), two = T(2);
    // continuous extensions of t1/D^{1/2}, t4/D^{1/2}, t1 t2 t4/D at D = 0
    const T D = t1 + t4 + t2 * t4;
    const T g1 = D == T(0) ? T(0) : t1 / sqrt(D);
    const T g4 = D == T(0) ? T(0) : t4 / sqrt(D);
    const T h = D == T(0) ? T(0) : t1 * t2 * t4 / D;
    const T P = one + t2 + (k + 1) * t1 * t2;
    const T Q = one + t2 + two * t1 * t2;
    const T X = two * k * t1 * t2 * t3 * t4 * P * Q + t2 * t3 * t4 * (one + t1) * (one + t2) * Q -
                (one - t2 * t2) * (one + t1 * t3);
    const T Y = two * (one - t2) * (one + t2 * t4);
    const T W = one + t3 * t4 + t2 * t3 * t4;
    T B = -(k * pow_half(one + t2, 3) * P) /
          (Q * (one + t2 + two * k * t1 * t2) * (one + t2 + two * (k + 1) * t1 * t2) * sqrt(W)) * (g4 * X - g1 * Y);
    T e = one + t2 + two * k * t1 * t2;
    T C = (one + t2 + k * t1 * t2) * (one + (one - k) * t2 * t4) * (one - k * t1 * t2 * t3 * t4) *
          (W + k * t1 * t2 * t3 * t4) /
          ((one + t2 + (two * k - 1) * t1 * t2) * e * e * (one + t2 + (two * k + 1) * t1 * t2)) * k *
          (one + k * t1) * (one + k * t1 * t2) * (one + t2) * (one + t2) * (one + t2) / W * (one + (k + 1) * h);
    return {B, C};
}

template <class T> std::pair<T, T> racah2_coeffs(const std::array<T, 4> &s, int n) {
    using std::sqrt;
    const auto [s1, s2, s3, s4] = s;
    const T k = T(n), one = T(1), two = T(2);
    const T s2p2 = s2 * s2, s2p3 = s2p2 * s2, s3p2 = s3 * s3;
    const T num =
        two * k * k * (k + 1) * (k + 1) * s1 * s1 * s1 * s2p3 * s2p3 * s3p2 * s4 * s4 * s4 / (one + s1) +
        4 * k * k * (k + 1) * s1 * s1 * s2p2 * s2p2 * s3 * s4 * s4 * (one + s2 * s3 * s4) +
        k * k * s1 * s2p2 * s4 *
            (two + two * s1 - s3 - two * s1 * s3 - two * s1 * s3p2 + 5 * s2 * s3 * s4 + 5 * s1 * s2 * s3 * s4 +
             s2 * s3p2 * s4 + two * s1 * s2 * s3p2 * s4 + 4 * s1 * s2 * s3p2 * s3 * s4 + 3 * s2p2 * s3p2 * s4 * s4 +
             3 * s1 * s2p2 * s3p2 * s4 * s4 - two * s1 * s2p3 * s3p2 * s4 * s4) -
        k * (one + s1 + s2 * s3 * s4 + s1 * s2 * s3 * s4 + s1 * s2p2 * s3 * s4) *
            (one + two * s1 + two * s1 * s3 - s2 * s4 - s1 * s2 * s4 - s2 * s3 * s4 - two * s1 * s2 * s3 * s4 -
             4 * s1 * s2 * s3p2 * s4 - s2p2 * s3 * s4 * s4 - s1 * s2p2 * s3 * s4 * s4 +
             two * s1 * s2p3 * s3 * s4 * s4) +
        (one + s1) * (one + s2 * s3 * s4) *
            (-s1 * s3 - s2 * s4 - s1 * s2 * s4 + s3p2 * s4 + s1 * s3p2 * s4 + two * s1 * s2 * s3p2 * s4 -
             s2p2 * s3 * s4 * s4 - s1 * s2p2 * s3 * s4 * s4 - two * s1 * s2p3 * s3 * s4 * s4);
    const T E = (one + s1) * (one + s2 * s3 * s4), F = s1 * s2p2 * s3 * s4;
    T B = -sqrt(s2) / sqrt(two) * num / ((E + two * k * F) * (E + two * (k + 1) * F));
    const T e2 = E + two * k * F;
    T C = k * (one + s1 + k * s1 * s2) * (one + (one - k) * s2p2 * s4) * (one + s1 + (one - k) * s1 * s2p2 * s4) *
          (one + s1 + k * F) * (E + s1 * s3 + (k + 1) * F) / (two * (one + s1) * (one + s1) * (E + (two * k - 1) * F)) *
          (E + k * F) * ((one + s1) * (one + s3 + s2 * s3 * s4) + (k + 1) * F) / (e2 * e2 * (E + (two * k + 1) * F));
    return {B, C};
}

template <class T> std::pair<T, T> racah3_coeffs(const std::array<T, 4> &u, int n) {
    using std::sqrt;
    const auto [u1, u2, u3, u4] = u;
    const T k = T(n), one = T(1), two = T(2);
    const T u1p2 = u1 * u1, u1p3 = u1p2 * u1, u1p4 = u1p2 * u1p2;
    const T u2p2 = u2 * u2, u2p3 = u2p2 * u2;
    const T u3p2 = u3 * u3, u3p3 = u3p2 * u3, u3p4 = u3p2 * u3p2;
    const T u4p2 = u4 * u4;
    const T num =
        two * k * k * (k + 1) * (k + 1) * u1p2 * u2p3 * u2p3 * u3p4 * u3 * u4p2 * u4 +
        4 * k * k * (k + 1) * u1 * u2p2 * u2p2 * u3p3 * u4p2 * (one + u1 * u2 * u3p2 * u4 + u1p2 * u2 * u3p2 * u4) +
        k * k * u2p2 * u3 * u4 *
            (two - two * u1 * u3 - two * u1p2 * u3p2 - u1 * u3 * u4 - two * u1p2 * u3p2 * u4 +
             5 * u1 * u2 * u3p2 * u4 + 6 * u1p2 * u2 * u3p2 * u4 + two * u1p2 * u2 * u3p3 * u4 +
             4 * u1p3 * u2 * u3p3 * u4 - 4 * u1p2 * u2p2 * u3p3 * u4 + 4 * u1p3 * u2 * u3p4 * u4 +
             4 * u1p4 * u2 * u3p4 * u4 + u1p2 * u2 * u3p3 * u4p2 + u1p3 * u2 * u3p3 * u4p2 +
             4 * u1p3 * u2 * u3p4 * u4p2 + 4 * u1p4 * u2 * u3p4 * u4p2 + 3 * u1p2 * u2p2 * u3p4 * u4p2 +
             5 * u1p3 * u2p2 * u3p4 * u4p2 + two * u1p4 * u2p2 * u3p4 * u4p2 + two * u1p2 * u2p3 * u3p4 * u4p2 +
             two * u1p3 * u2p3 * u3p4 * u4p2) +
        k * (one + u1 * u2 * u3p2 * u4 + u1p2 * u2 * u3p2 * u4 + u1 * u2p2 * u3p2 * u4) *
            (-two - two * u1 * u3 - u4 - two * u1 * u3 * u4 + u2 * u3 * u4 + two * u1 * u2 * u3 * u4 +
             two * u1 * u2 * u3p2 * u4 + 4 * u1p2 * u2 * u3p2 * u4 - 4 * u1 * u2p2 * u3p2 * u4 +
             4 * u1p2 * u2 * u3p3 * u4 + 4 * u1p3 * u2 * u3p3 * u4 + u1 * u2 * u3p2 * u4p2 +
             u1p2 * u2 * u3p2 * u4p2 + 4 * u1p2 * u2 * u3p3 * u4p2 + 4 * u1p3 * u2 * u3p3 * u4p2 +
             u1 * u2p2 * u3p3 * u4p2 + u1p2 * u2p2 * u3p3 * u4p2 + two * u1 * u2p3 * u3p3 * u4p2 +
             two * u1p2 * u2p3 * u3p3 * u4p2) +
        (one + u1 * u2 * u3p2 * u4 + u1p2 * u2 * u3p2 * u4) *
            (-one - u1 * u3 - u1 * u3 * u4 + u1p2 * u3p2 * u4 + u1p3 * u3p2 * u4 - u1 * u2 * u3p2 * u4 -
             two * u1 * u2p2 * u3p2 * u4 + u1p2 * u3p3 * u4 + two * u1p3 * u3p3 * u4 + u1p4 * u3p3 * u4 +
             two * u1p2 * u2 * u3p3 * u4 + two * u1p3 * u2 * u3p3 * u4 + u1p2 * u3p3 * u4p2 +
             two * u1p3 * u3p3 * u4p2 + u1p4 * u3p3 * u4p2 + two * u1p2 * u2 * u3p3 * u4p2 +
             two * u1p3 * u2 * u3p3 * u4p2);
    const T E = one + u1 * u2 * u3p2 * u4 * (one + u1), F = u1 * u2p2 * u3p2 * u4;
    T B = -sqrt(u2) / sqrt(two) * num / ((E + two * k * F) * (E + two * (k + 1) * F));
    const T e2 = E + two * k * F;
    T C = k * (one + u1 + k * u2) * (one + (one - k) * u2p2 * u3 * u4) *
          (one + u4 - u1 * u2 * u3 * u4 + (one - k) * u2p2 * u3 * u4) / two * (E + k * F) *
          (one + u1 * u3 * (one + u4 + u2 * u3 * u4) + (k + 1) * F) / ((E + (two * k - 1) * F) * e2 * e2) *
          (one + k * F) * (one + u1 * u3 * (one + u2 * u3 * u4 + u1 * u2 * u3 * u4) + (k + 1) * F) /
          (E + (two * k + 1) * F);
    return {B, C};
}

template <class T> std::pair<T, T> wilson1_coeffs(const std::array<T, 4> &a, int n) {
    using std::sqrt;
    const auto [a1, a2, a3, a4] = a;
    const T k = T(n), one = T(1), two = T(2);
    const T r = sqrt(a1);
    const T a1p2 = a1 * a1, a1p3 = a1p2 * a1, a2p2 = a2 * a2, a2p3 = a2p2 * a2, a3p2 = a3 * a3;
    const T L = one + a2 - a1 * a2;
    const T num =
        two * k * k * k * k * a1p2 * a1p2 * a2p2 * a2p2 * a3p2 * a4 * L +
        4 * k * k * k * a1p3 * a2p3 * a3p2 * a4 * (two + two * a2 - a1 * a2) * L +
        k * k * a1 * r * a2 *
            (two - two * a2 + r * a2 * a4 * L +
             r * a2 * a3p2 * a4 *
                 (10 + 34 * a2 - 20 * a1 * a2 + 34 * a2p2 - 44 * a1 * a2p2 + 12 * a1p2 * a2p2 + 10 * a2p3 -
                  20 * a1 * a2p3 + 12 * a1p2 * a2p3 - two * a1p3 * a2p3)) +
        k * r * (two + two * a2 - a1 * a2) *
            (two - two * a2 + r * a2 * a4 * L +
             two * r * a2 * a3p2 * a4 *
                 (one + 5 * a2 - two * a1 * a2 + 5 * a2p2 - 6 * a1 * a2p2 + a1p2 * a2p2 + a2p3 - two * a1 * a2p3 +
                  a1p2 * a2p3)) +
        L * (two * r - two * r * a2 + a4 + two * a2 * a4 - a1 * a2 * a4 + a2p2 * a4 - a1 * a2p2 * a4 +
             4 * a2 * a3p2 * a4 * (one + two * a2 - a1 * a2 + a2p2 - a1 * a2p2));
    const T m1 = one + a2 + (k - 1) * a1 * a2;
    T B = num / sqrt(two) / (L * m1 * (one + a2 + k * a1 * a2));
    T C = k / two * (one + a3p2 * m1 * m1) * (one + a1 * a2p2 * a3p2 * a4 * a4 * m1 * m1) * (two - a1 + k * a1) *
          (two + two * a2 + (k - 2) * a1 * a2) * (two + (k - 1) * a1 * a2) /
          ((one + a2 + (k - half<T>()) * a1 * a2) * m1 * m1 * (one + a2 + (k - 3 * half<T>()) * a1 * a2));
    return {B, C};
}

template <class T> std::pair<T, T> wilson2_coeffs(const std::array<T, 4> &b, int n) {
    using std::sqrt;
    const auto [b1, b2, b3, b4] = b;
    const T k = T(n), one = T(1), two = T(2);
    T P1[13], P2[5], P3[7], P4[5];
    P1[0] = one;
    for (int i = 1; i < 13; ++i)
        P1[i] = P1[i - 1] * b1;
    P2[0] = one;
    for (int i = 1; i < 5; ++i)
        P2[i] = P2[i - 1] * b2;
    P3[0] = one;
    for (int i = 1; i < 7; ++i)
        P3[i] = P3[i - 1] * b3;
    P4[0] = one;
    for (int i = 1; i < 5; ++i)
        P4[i] = P4[i - 1] * b4;
    // monomial b1^i b2^j b3^l b4^m
    auto M = [&](int i, int j, int l, int m) { return P1[i] * P2[j] * P3[l] * P4[m]; };
    const T G = M(5, 2, 3, 1);
    const T H = M(6, 2, 3, 1);
    T b1p16 = P1[12] * P1[4];
    const T num =
        8 * k * k * k * k * b1p16 * P2[4] * b2 * P3[6] * b3 * b3 * P4[2] +
        16 * k * k * k * P1[10] * P2[3] * P3[5] * b4 * (one + G + H) +
        4 * k * k * P1[4] * b2 * P3[2] *
            (two - two * M(2, 1, 1, 1) - M(3, 1, 2, 1) + 5 * M(5, 2, 3, 1) + 4 * M(6, 2, 3, 1) - two * M(4, 2, 2, 2) -
             two * M(5, 2, 3, 2) - M(6, 2, 4, 2) - two * M(7, 3, 4, 2) - 4 * M(8, 3, 4, 2) + 8 * M(8, 4, 4, 2) -
             M(8, 3, 5, 2) - two * M(9, 3, 5, 2) + two * M(10, 4, 6, 2) + 4 * M(11, 4, 6, 2) + M(12, 4, 6, 2) -
             4 * M(8, 3, 4, 3) - 4 * M(9, 4, 5, 3) - 4 * M(10, 4, 6, 3) - 4 * M(10, 4, 5, 4) - 4 * M(11, 4, 6, 4)) -
        4 * k * (one + G + H) *
            (two + M(1, 0, 1, 0) - M(3, 1, 2, 0) + two * M(2, 1, 1, 1) + two * M(3, 1, 2, 1) + M(4, 1, 3, 1) +
             two * M(5, 2, 3, 1) + 4 * M(6, 2, 3, 1) - 8 * M(6, 3, 3, 1) + M(6, 2, 4, 1) + two * M(7, 2, 4, 1) +
             M(10, 3, 5, 1) + 4 * M(6, 2, 3, 2) + 4 * M(7, 3, 4, 2) + 4 * M(8, 3, 5, 2) + 4 * M(8, 3, 4, 3) +
             4 * M(9, 3, 5, 3)) -
        (one + G) *
            (4 - 16 * b2 + two * b3 + two * M(1, 0, 1, 0) + M(2, 1, 2, 0) + two * M(3, 1, 2, 0) + M(4, 1, 2, 0) +
             4 * b4 + 8 * M(1, 1, 1, 1) + 4 * M(2, 1, 1, 1) + 8 * M(2, 1, 2, 1) + 4 * M(3, 1, 2, 1) +
             two * M(3, 1, 3, 1) + two * M(4, 1, 3, 1) + 8 * M(4, 2, 3, 1) + 12 * M(5, 2, 3, 1) +
             8 * M(6, 2, 3, 1) - 16 * M(6, 3, 3, 1) + two * M(5, 2, 4, 1) + 6 * M(6, 2, 4, 1) + 4 * M(7, 2, 4, 1) +
             M(7, 3, 5, 1) + 4 * M(8, 3, 5, 1) + 5 * M(9, 3, 5, 1) + two * M(10, 3, 5, 1) + 4 * M(2, 1, 1, 2) +
             4 * M(3, 1, 2, 2) + 4 * M(5, 2, 3, 2) + 8 * M(6, 2, 3, 2) + 4 * M(6, 3, 4, 2) + 8 * M(7, 3, 4, 2) +
             4 * M(7, 3, 5, 2) + 8 * M(8, 3, 5, 2) + 4 * M(7, 3, 4, 3) + 8 * M(8, 3, 4, 3) + 4 * M(8, 3, 5, 3) +
             8 * M(9, 3, 5, 3));
    T B = sqrt(b1) / (4 * sqrt(two)) * num / ((one + G + two * k * H) * (one + G + two * (one + k) * H));
    const T g2 = one + G * (one + two * k * b1);
    const T t = one + (k + 1) * b1;
    T C = k / 8 * (one + k * b1) * (one + k * H) * (one + G * (one + k * b1)) *
          (two + two * b1 * b3 + b1 * b1 * b3 * b3 + 4 * M(3, 1, 2, 0) + 8 * M(4, 2, 2, 0) +
           two * (one - k) * M(4, 1, 2, 0) * (two + b1 * b3) + two * (one - k) * (one - k) * M(8, 2, 4, 0)) /
          ((one + G * (one + (two * k - 1) * b1)) * g2 * g2 * (one + G * (one + (two * k + 1) * b1))) *
          (two + 4 * M(2, 1, 1, 1) + two * M(3, 1, 2, 1) + 4 * M(5, 2, 3, 1) + 4 * (one + k) * M(6, 2, 3, 1) +
           two * M(4, 2, 2, 2) + two * M(5, 2, 3, 2) + M(6, 2, 4, 2) + 8 * M(7, 3, 4, 2) +
           4 * (one + k) * M(8, 3, 4, 2) + 8 * M(8, 4, 4, 2) + two * M(8, 3, 5, 2) * t +
           two * M(10, 4, 6, 2) * t * t);
    return {B, C};
}

template <class T> std::pair<T, T> jacobi2d_coeffs(const std::array<T, 4> &v, int n) {
    using std::sqrt;
    const T ia = v[0], ib = v[1];
    const T k = T(n), one = T(1);
    const T h = ia + ib > T(0) ? ia * ib / (ia + ib) : T(0);
    const T g = ia + ib > T(0) ? (ib - ia) / sqrt(ia + ib) : T(0);
    const T e = one + 2 * k * h;
    T C = 4 * k * (one + k * ia) * (one + k * ib) * (one + k * h) /
          ((one + (2 * k - 1) * h) * e * e * (one + (2 * k + 1) * h));
    T B = g * (4 * k + 2 + 4 * k * (k + 1) * h) / (e * (one + (2 * k + 2) * h));
    return {B, C};
}

} // namespace detail

// closed-form (B_n, C_n) of the chart, continuous on the closed domain
template <class T> std::pair<T, T> chart_coeffs(const ChartPoint<T> &p, int n) {
    if (auto v = domain_violation(p))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(p.chart)) + ": " + *v);
    std::pair<T, T> r;
    switch (p.chart) {
    case ChartId::Racah1: r = detail::racah1_coeffs(p.c, n); break;
    case ChartId::Racah2: r = detail::racah2_coeffs(p.c, n); break;
    case ChartId::Racah3: r = detail::racah3_coeffs(p.c, n); break;
    case ChartId::Wilson1: r = detail::wilson1_coeffs(p.c, n); break;
    case ChartId::Wilson2: r = detail::wilson2_coeffs(p.c, n); break;
    case ChartId::Jacobi2D: r = detail::jacobi2d_coeffs(p.c, n); break;
    }
    if (n == 0)
        r.second = T(0);
    if (!is_finite(r.first) || !is_finite(r.second))
        throw Error(ErrorKind::NonFiniteCoefficient, std::string(to_string(p.chart)) + " coefficient not finite at n=" +
                                                         std::to_string(n));
    return r;
}

template <class T> RecurrenceCoeffs<T> chart_recurrence(const ChartPoint<T> &p) {
    RecurrenceCoeffs<T> rc;
    rc.B = [p](int n) { return chart_coeffs(p, n).first; };
    rc.C = [p](int n) { return chart_coeffs(p, n).second; };
    return rc;
}

} // namespace askey
