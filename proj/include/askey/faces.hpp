#pragma once

#include "askey/charts.hpp"

#include <functional>
#include <string>
#include <vector>

namespace askey {

template <class T> struct FaceImage {
    FamilyInstance<T> family;
    AffineScale<T> scale;
};

// p_n(x; here) = rho^n p_n(rho^{-1} x - sigma; target) on the same chart
template <class T> struct AliasIdentity {
    std::string label;
    ChartPoint<T> target;
    AffineScale<T> scale;
};

template <class T> struct RestrictionRecord {
    ChartId chart = ChartId::Racah1;
    unsigned face = 0;
    FamilyId target = FamilyId::Racah;
    std::vector<unsigned> aliases;
    std::function<FaceImage<T>(const ChartPoint<T> &)> image;
    std::function<std::vector<AliasIdentity<T>>(const ChartPoint<T> &)> identities;
};

// one boldface block: a target family, the faces it covers, its formulas
template <class T> struct FaceBlock {
    FamilyId target;
    std::vector<unsigned> faces;
    std::function<FaceImage<T>(const std::array<T, 4> &)> image;
    std::function<std::vector<AliasIdentity<T>>(const std::array<T, 4> &)> identities;
};

namespace detail {

constexpr unsigned F(std::initializer_list<int> idx) {
    unsigned m = 0;
    for (int i : idx)
        m |= 1u << (i - 1);
    return m;
}

template <class T> using Arr = std::array<T, 4>;

template <class T> FaceImage<T> real_image(FamilyId id, std::initializer_list<T> params, T rho, T sigma) {
    return {FamilyInstance<T>::real(id, params), {rho, sigma}};
}

template <class T> ChartPoint<T> pt(ChartId c, T a, T b, T d, T e) { return {c, {a, b, d, e}}; }

template <class T> std::vector<FaceBlock<T>> racah1_blocks() {
    using std::sqrt;
    const ChartId R = ChartId::Racah1;
    const T one = T(1), two = T(2);
    std::vector<FaceBlock<T>> b;
    b.push_back({FamilyId::Hahn, {F({3})},
                 [=](const Arr<T> &t) {
                     return real_image<T>(FamilyId::Hahn, {one / t[0], one / (t[0] * t[1]), one / (t[1] * t[3])},
                                          pow_half(one + t[1], 3) * t[3] / sqrt(t[0] + t[3] + t[1] * t[3]),
                                          -(one + t[0]) / ((one + t[1] + two * t[0] * t[1]) * t[3]));
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::Jacobi, {F({4}), F({3, 4})},
                 [=](const Arr<T> &t) {
                     return real_image<T>(FamilyId::Jacobi, {one / t[0], one / (t[0] * t[1])},
                                          -pow_half(one + t[1], 3) / (two * sqrt(t[0]) * t[1]),
                                          (t[1] - one) / (one + t[1] + two * t[0] * t[1]));
                 },
                 [=](const Arr<T> &t) {
                     return std::vector<AliasIdentity<T>>{{"t3 -> 0", pt<T>(R, t[0], t[1], T(0), T(0)), {one, T(0)}}};
                 }});
    b.push_back({FamilyId::Meixner, {F({2}), F({2, 3})},
                 [=](const Arr<T> &t) {
                     const auto [t1, t2, t3, t4] = t;
                     return real_image<T>(FamilyId::Meixner,
                                          {(one + t1) / t1, t1 * (one + t3 * t4) / (t1 + t4)},
                                          (one - t1 * t3) * t4 / (sqrt(t1 + t4) * sqrt(one + t3 * t4)),
                                          -(one + t1) * (one + t3 * t4) / ((one - t1 * t3) * t4));
                 },
                 [=](const Arr<T> &t) {
                     const auto [t1, t2, t3, t4] = t;
                     return std::vector<AliasIdentity<T>>{
                         {"(t3,t4) -> (0, t4(1-t1t3)/(1+t3t4))",
                          pt<T>(R, t1, T(0), T(0), t4 * (one - t1 * t3) / (one + t3 * t4)),
                          {one, T(0)}}};
                 }});
    b.push_back({FamilyId::Krawtchouk, {F({1}), F({1, 3})},
                 [=](const Arr<T> &t) {
                     const auto [t1, t2, t3, t4] = t;
                     T K = one + t3 * t4 + t2 * t3 * t4;
                     return real_image<T>(FamilyId::Krawtchouk,
                                          {t2 * K / ((one + t2) * (one + t2 * t3 * t4)), one / (t2 * t4)},
                                          sqrt(t4) * (one + t2) * (one + t2 * t3 * t4) / sqrt(K),
                                          -K / (t4 * (one + t2) * (one + t2 * t3 * t4)));
                 },
                 [=](const Arr<T> &t) {
                     const auto [t1, t2, t3, t4] = t;
                     T K = one + t3 * t4 + t2 * t3 * t4;
                     return std::vector<AliasIdentity<T>>{
                         {"(t2,t3,t4) -> (t2 K, 0, t4/K)", pt<T>(R, T(0), t2 * K, T(0), t4 / K), {one, T(0)}}};
                 }});
    b.push_back({FamilyId::Laguerre, {F({2, 4}), F({2, 3, 4})},
                 [=](const Arr<T> &t) {
                     return real_image<T>(FamilyId::Laguerre, {one / t[0]}, sqrt(t[0]), -(one + t[0]) / t[0]);
                 },
                 [=](const Arr<T> &t) {
                     return std::vector<AliasIdentity<T>>{
                         {"t3 -> 0", pt<T>(R, t[0], T(0), T(0), T(0)), {one, T(0)}}};
                 }});
    b.push_back({FamilyId::Charlier, {F({1, 2}), F({1, 2, 3})},
                 [=](const Arr<T> &t) {
                     const T t3 = t[2], t4 = t[3];
                     return real_image<T>(FamilyId::Charlier, {(one + t3 * t4) / t4}, sqrt(t4) / sqrt(one + t3 * t4),
                                          -(one + t3 * t4) / t4);
                 },
                 [=](const Arr<T> &t) {
                     const T t3 = t[2], t4 = t[3];
                     return std::vector<AliasIdentity<T>>{
                         {"(t3,t4) -> (0, t4/(1+t3t4))", pt<T>(R, T(0), T(0), T(0), t4 / (one + t3 * t4)), {one, T(0)}}};
                 }});
    b.push_back({FamilyId::Hermite, {F({1, 4}), F({1, 2, 4}), F({1, 3, 4}), F({1, 2, 3, 4})},
                 [=](const Arr<T> &) { return real_image<T>(FamilyId::Hermite, {}, sqrt(two), T(0)); },
                 [=](const Arr<T> &t) {
                     return std::vector<AliasIdentity<T>>{
                         {"t3 -> 0", pt<T>(R, T(0), t[1], T(0), T(0)), {one, T(0)}},
                         {"t2 -> 0", pt<T>(R, T(0), T(0), t[2], T(0)), {one, T(0)}},
                         {"origin", pt<T>(R, T(0), T(0), T(0), T(0)), {one, T(0)}}};
                 }});
    return b;
}

template <class T> std::vector<FaceBlock<T>> racah2_blocks() {
    using std::sqrt;
    const ChartId R = ChartId::Racah2;
    const T one = T(1), two = T(2);
    std::vector<FaceBlock<T>> b;
    b.push_back({FamilyId::DualHahn, {F({3})},
                 [=](const Arr<T> &s) {
                     const auto [s1, s2, s3, s4] = s;
                     return real_image<T>(FamilyId::DualHahn,
                                          {(one + s1) / (s1 * s2), one / (s1 * s2 * s2 * s4), one / (s2 * s2 * s4)},
                                          s1 * pow_half(s2, 5) * s4 / (sqrt(two) * (one + s1)),
                                          -((one + s1) * (one - s2 * s2 * s4) + s1 * s2) / (s1 * s2 * s2 * s2 * s4));
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::Meixner, {F({4}), F({3, 4})},
                 [=](const Arr<T> &s) {
                     const auto [s1, s2, s3, s4] = s;
                     return real_image<T>(FamilyId::Meixner,
                                          {(one + s1 + s1 * s2) / (s1 * s2), s1 * (one + s3) / (one + s1 + s1 * s3)},
                                          sqrt(s2) / (sqrt(two) * (one + s1)),
                                          -(one + s1 + s3 + s1 * s2 + s1 * s3) / s2);
                 },
                 [=](const Arr<T> &s) {
                     const auto [s1, s2, s3, s4] = s;
                     T w = one + s1 + s1 * s3;
                     T rho0 = sqrt(one + s3) * sqrt(w) / sqrt(one + s1);
                     T sig0 = s1 * sqrt(s2) * s3 / (sqrt(two) * sqrt(one + s1) * sqrt(one + s3) * sqrt(w));
                     return std::vector<AliasIdentity<T>>{
                         {"(s1,s2,s3) -> (s1(1+s3), s2(1+s1+s1s3)/((1+s1)(1+s3)), 0)",
                          pt<T>(R, s1 * (one + s3), s2 * w / ((one + s1) * (one + s3)), T(0), T(0)),
                          {rho0, sig0}}};
                 }});
    b.push_back({FamilyId::Krawtchouk, {F({1}), F({1, 3})},
                 [=](const Arr<T> &s) {
                     const auto [s1, s2, s3, s4] = s;
                     T K = one + s3 + s2 * s3 * s4;
                     return real_image<T>(FamilyId::Krawtchouk,
                                          {s2 * s4 * K / ((one + s2 * s4) * (one + s2 * s3 * s4)), one / (s2 * s2 * s4)},
                                          sqrt(s2) * (one + s2 * s4) / sqrt(two),
                                          -(one + s3 - s2 * s2 * s4) / (s2 * (one + s2 * s4)));
                 },
                 [=](const Arr<T> &s) {
                     const auto [s1, s2, s3, s4] = s;
                     T K = one + s3 + s2 * s3 * s4;
                     T rho0 = sqrt(K) / (one + s2 * s3 * s4);
                     T sig0 = -sqrt(s2) * s3 * s4 * (s2 + s3) / (sqrt(two) * sqrt(K));
                     return std::vector<AliasIdentity<T>>{
                         {"(s2,s3,s4) -> (s2/K, 0, s4 K^2)", pt<T>(R, T(0), s2 / K, T(0), s4 * K * K), {rho0, sig0}}};
                 }});
    b.push_back({FamilyId::Charlier, {F({1, 4}), F({1, 3, 4})},
                 [=](const Arr<T> &s) {
                     const T s2 = s[1], s3 = s[2];
                     return real_image<T>(FamilyId::Charlier, {(one + s3) / s2}, sqrt(s2) / sqrt(two),
                                          -(one + s3) / s2);
                 },
                 [=](const Arr<T> &s) {
                     const T s2 = s[1], s3 = s[2];
                     return std::vector<AliasIdentity<T>>{
                         {"(s2,s3) -> (s2/(1+s3), 0)", pt<T>(R, T(0), s2 / (one + s3), T(0), T(0)),
                          {sqrt(one + s3), T(0)}}};
                 }});
    std::vector<unsigned> herm;
    for (unsigned m = 0; m < 16; ++m)
        if (m & F({2}))
            herm.push_back(m);
    b.push_back({FamilyId::Hermite, herm,
                 [=](const Arr<T> &s) {
                     const T s1 = s[0], s3 = s[2];
                     return real_image<T>(FamilyId::Hermite, {},
                                          sqrt(one + s3) * sqrt(one + s1 + s1 * s3) / sqrt(one + s1), T(0));
                 },
                 [=](const Arr<T> &s) {
                     const auto [s1, s2, s3, s4] = s;
                     T rho = sqrt(one + s3) * sqrt(one + s1 + s1 * s3) / sqrt(one + s1);
                     T rho0 = sqrt(one + s1 + s1 * s3) / sqrt(one + s1);
                     return std::vector<AliasIdentity<T>>{
                         {"s4 -> 0", pt<T>(R, s1, T(0), s3, T(0)), {one, T(0)}},
                         {"s1 -> 0", pt<T>(R, T(0), T(0), s3, s4), {rho0, T(0)}},
                         {"(s1,s4) -> 0", pt<T>(R, T(0), T(0), s3, T(0)), {rho0, T(0)}},
                         {"s3 -> 0", pt<T>(R, s1, T(0), T(0), s4), {rho, T(0)}},
                         {"(s1,s3) -> 0", pt<T>(R, T(0), T(0), T(0), s4), {rho, T(0)}}};
                 }});
    return b;
}

template <class T> std::vector<FaceBlock<T>> racah3_blocks() {
    using std::sqrt;
    const ChartId R = ChartId::Racah3;
    const T one = T(1), two = T(2);
    std::vector<FaceBlock<T>> b;
    b.push_back({FamilyId::DualHahn, {F({1})},
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     return real_image<T>(FamilyId::DualHahn,
                                          {one / u2, one / (u2 * u2 * u3), one / (u2 * u2 * u3 * u4)},
                                          pow_half(u2, 5) * u3 * u4 / sqrt(two), -one / (u2 * u2 * u2 * u3 * u4));
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::Meixner, {F({3}), F({1, 3})},
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     return real_image<T>(FamilyId::Meixner, {(one + u1 + u2) / u2, one / (one + u4)},
                                          sqrt(u2) * u4 / sqrt(two), -(one + u1) / (u2 * u4));
                 },
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     return std::vector<AliasIdentity<T>>{{"(u1,u2) -> (0, u2/(1+u1))",
                                                           pt<T>(R, T(0), u2 / (one + u1), T(0), u4),
                                                           {sqrt(one + u1), T(0)}}};
                 }});
    b.push_back({FamilyId::Laguerre, {F({4}), F({1, 4}), F({3, 4}), F({1, 3, 4})},
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     return real_image<T>(FamilyId::Laguerre, {(one + u1) / u2}, sqrt(u2) * (one + u1 * u3) / sqrt(two),
                                          -(one + u1) / u2);
                 },
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     T rho1 = one + u1 * u3;
                     T rho0 = sqrt(one + u1) * (one + u1 * u3);
                     return std::vector<AliasIdentity<T>>{
                         {"u3 -> 0", pt<T>(R, u1, u2, T(0), T(0)), {rho1, T(0)}},
                         {"(u1,u2) -> (0, u2/(1+u1))", pt<T>(R, T(0), u2 / (one + u1), u3, T(0)), {rho0, T(0)}},
                         {"(u1,u2,u3) -> (0, u2/(1+u1), 0)", pt<T>(R, T(0), u2 / (one + u1), T(0), T(0)),
                          {rho0, T(0)}}};
                 }});
    std::vector<unsigned> herm;
    for (unsigned m = 0; m < 16; ++m)
        if (m & F({2}))
            herm.push_back(m);
    b.push_back({FamilyId::Hermite, herm,
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     T rho = sqrt(one + u1) * sqrt(one + u1 * u3) * sqrt(one + u4) * sqrt(one + u1 * u3 * (one + u4));
                     return real_image<T>(FamilyId::Hermite, {}, rho, T(0));
                 },
                 [=](const Arr<T> &u) {
                     const auto [u1, u2, u3, u4] = u;
                     T w = sqrt(one + u1 * u3 * (one + u4));
                     T rho = sqrt(one + u1) * sqrt(one + u1 * u3) * sqrt(one + u4) * w;
                     T rho0 = sqrt(one + u1) * sqrt(one + u1 * u3) * w;
                     T rho1 = sqrt(one + u1 * u3) * w;
                     T rho2 = sqrt(one + u4) * w / sqrt(one + u1 * u3);
                     T rho3 = sqrt(one + u4) * sqrt(one + u1 * u3) * w;
                     return std::vector<AliasIdentity<T>>{
                         {"u1 -> 0", pt<T>(R, T(0), T(0), u3, u4), {rho0, T(0)}},
                         {"(u1,u3) -> 0", pt<T>(R, T(0), T(0), T(0), u4), {rho0, T(0)}},
                         {"u3 -> 0", pt<T>(R, u1, T(0), T(0), u4), {rho1, T(0)}},
                         {"u4 -> 0", pt<T>(R, u1, T(0), u3, T(0)), {rho2, T(0)}},
                         {"(u3,u4) -> 0", pt<T>(R, u1, T(0), T(0), T(0)), {rho3, T(0)}},
                         {"(u1,u4) -> 0", pt<T>(R, T(0), T(0), u3, T(0)), {rho, T(0)}},
                         {"origin", pt<T>(R, T(0), T(0), T(0), T(0)), {rho, T(0)}}};
                 }});
    return b;
}

template <class T> FaceImage<T> wilson1_hermite(const Arr<T> &a) {
    using std::sqrt;
    const T one = T(1), two = T(2);
    const T a2 = a[1], a3 = a[2], a4 = a[3];
    T Q = sqrt(one + (one + a2) * (one + a2) * a3 * a3);
    T rho = two * sqrt(two) * Q / pow_half(one + a2, 3);
    T sig = a4 * pow_half(one + a2, 3) * (one + 4 * a2 * a3 * a3) / (4 * Q);
    return real_image<T>(FamilyId::Hermite, {}, rho, sig);
}

template <class T> std::vector<FaceBlock<T>> wilson1_blocks() {
    using std::sqrt;
    using std::atan;
    const ChartId W = ChartId::Wilson1;
    const T one = T(1), two = T(2);
    std::vector<FaceBlock<T>> b;
    b.push_back({FamilyId::ContinuousHahn, {F({4})},
                 [=](const Arr<T> &a) {
                     const auto [a1, a2, a3, a4] = a;
                     using Z = cx<T>;
                     T im = one / (two * a1 * a2 * a3);
                     Z pa(one / a1, im), pb(one / (a1 * a2), -im), pc(one / a1, -im), pd(one / (a1 * a2), im);
                     return FaceImage<T>{FamilyInstance<T>::complex(FamilyId::ContinuousHahn, {pa, pb, pc, pd}),
                                         {two * sqrt(two) * sqrt(a1) * a3,
                                          (one - a2) / (two * a1 * a2 * a3 * (one + a2 - a1 * a2))}};
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::Jacobi, {F({3}), F({3, 4})},
                 [=](const Arr<T> &a) {
                     const auto [a1, a2, a3, a4] = a;
                     return real_image<T>(FamilyId::Jacobi, {two / a1 - one, two / (a1 * a2) - one},
                                          -sqrt(two) / (sqrt(a1) * a2),
                                          -(one - a2) / (one + a2 - a1 * a2) - sqrt(a1) * a2 * a4 / two);
                 },
                 [=](const Arr<T> &a) {
                     return std::vector<AliasIdentity<T>>{
                         {"a4 -> 0", pt<T>(W, a[0], a[1], T(0), T(0)), {one, a[3] / sqrt(two)}}};
                 }});
    b.push_back({FamilyId::MeixnerPollaczek, {F({2}), F({2, 4})},
                 [=](const Arr<T> &a) {
                     const auto [a1, a2, a3, a4] = a;
                     return real_image<T>(FamilyId::MeixnerPollaczek, {one / a1, atan(a3)},
                                          -two * sqrt(two) * sqrt(a1) * a3,
                                          (two - a1) / (two * a1 * a3) - a4 / (4 * sqrt(a1) * a3));
                 },
                 [=](const Arr<T> &a) {
                     return std::vector<AliasIdentity<T>>{
                         {"a4 -> 0", pt<T>(W, a[0], T(0), a[2], T(0)), {one, a[3] / sqrt(two)}}};
                 }});
    b.push_back({FamilyId::Laguerre, {F({2, 3}), F({2, 3, 4})},
                 [=](const Arr<T> &a) {
                     const T a1 = a[0], a4 = a[3];
                     return real_image<T>(FamilyId::Laguerre, {two / a1 - one}, sqrt(two) * sqrt(a1),
                                          one - two / a1 + a4 / (two * sqrt(a1)));
                 },
                 [=](const Arr<T> &a) {
                     return std::vector<AliasIdentity<T>>{
                         {"a4 -> 0", pt<T>(W, a[0], T(0), T(0), T(0)), {one, a[3] / sqrt(two)}}};
                 }});
    std::vector<unsigned> herm;
    for (unsigned m = 0; m < 16; ++m)
        if (m & F({1}))
            herm.push_back(m);
    b.push_back({FamilyId::Hermite, herm, [](const Arr<T> &a) { return wilson1_hermite<T>(a); },
                 [=](const Arr<T> &a) {
                     const auto [a1, a2, a3, a4] = a;
                     T Q = sqrt(one + (one + a2) * (one + a2) * a3 * a3);
                     T s2 = sqrt(two);
                     T c = pow_half(one + a2, 3);
                     T g = one + 4 * a2 * a3 * a3;
                     auto h = wilson1_hermite<T>(a);
                     T rho = h.scale.rho, sig = h.scale.sigma;
                     T rho1 = Q;
                     T rho2 = Q / (c * sqrt(one + a3 * a3));
                     T sig0 = g * a4 / s2;
                     T sig1 = a4 * (g - Q) / (s2 * Q);
                     T sig2 = a4 * c * sqrt(one + a3 * a3) * g / (s2 * Q) - a4 / s2;
                     T sig3 = a4 * g / (s2 * Q);
                     T sig4 = a4 * c * sqrt(one + a3 * a3) * g / (s2 * Q);
                     T sig5 = a4 * c * g / (s2 * Q) - a4 / s2;
                     return std::vector<AliasIdentity<T>>{
                         {"a4 -> 0", pt<T>(W, T(0), a2, a3, T(0)), {one, sig0}},
                         {"a3 -> 0", pt<T>(W, T(0), a2, T(0), a4), {rho1, sig1}},
                         {"a2 -> 0", pt<T>(W, T(0), T(0), a3, a4), {rho2, sig2}},
                         {"(a3,a4) -> 0", pt<T>(W, T(0), a2, T(0), T(0)), {rho1, sig3}},
                         {"(a2,a4) -> 0", pt<T>(W, T(0), T(0), a3, T(0)), {rho2, sig4}},
                         {"(a2,a3) -> 0", pt<T>(W, T(0), T(0), T(0), a4), {rho / (two * s2), sig5}},
                         {"origin", pt<T>(W, T(0), T(0), T(0), T(0)), {rho / (two * s2), two * s2 * sig}}};
                 }});
    return b;
}

template <class T> std::vector<FaceBlock<T>> wilson2_blocks() {
    using std::sqrt;
    using std::atan;
    const ChartId W = ChartId::Wilson2;
    const T one = T(1), two = T(2);
    std::vector<FaceBlock<T>> b;
    b.push_back({FamilyId::ContinuousDualHahn, {F({4})},
                 [=](const Arr<T> &bb) {
                     const auto [b1, b2, b3, b4] = bb;
                     using Z = cx<T>;
                     T b1p3 = b1 * b1 * b1, b1p4 = b1p3 * b1;
                     T re = (one + b1) / (two * b1);
                     T im = (one + 4 * b1 * b2) / (two * b1p3 * b2 * b3);
                     T c = -(two + b1 * b3 + b1p3 * b2 * b3 * b3 + b1p4 * b2 * b3 * b3) / (two * b1p4 * b2 * b3 * b3);
                     return FaceImage<T>{
                         FamilyInstance<T>::complex(FamilyId::ContinuousDualHahn, {Z(re, im), Z(re, -im), Z(c, T(0))}),
                         {pow_half(b1, 9) * b2 * b3 * b3 / sqrt(two),
                          -(one + 4 * b1 * b2) / (4 * b1p3 * b1p3 * b2 * b2 * b3 * b3)}};
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::MeixnerPollaczek, {F({2}), F({2, 4})},
                 [=](const Arr<T> &bb) {
                     const auto [b1, b2, b3, b4] = bb;
                     return real_image<T>(FamilyId::MeixnerPollaczek,
                                          {(one + b1) / (two * b1), atan(b1 * b3 / (two + b1 * b3))},
                                          pow_half(b1, 3) * b3 / sqrt(two), (one - b1 * b4) / (b1 * b1 * b3));
                 },
                 [=](const Arr<T> &bb) {
                     return std::vector<AliasIdentity<T>>{{"b4 -> 0", pt<T>(W, bb[0], T(0), bb[2], T(0)),
                                                           {one, -sqrt(bb[0]) * bb[3] / sqrt(two)}}};
                 }});
    b.push_back({FamilyId::Laguerre, {F({3}), F({2, 3}), F({3, 4}), F({2, 3, 4})},
                 [=](const Arr<T> &bb) {
                     const auto [b1, b2, b3, b4] = bb;
                     return real_image<T>(FamilyId::Laguerre, {one / b1}, -sqrt(b1) / sqrt(two),
                                          b4 - 4 * b2 - one / b1);
                 },
                 [=](const Arr<T> &bb) {
                     const auto [b1, b2, b3, b4] = bb;
                     T sig0 = two * sqrt(two) * sqrt(b1) * b2;
                     T sig1 = -sqrt(b1) * b4 / sqrt(two);
                     return std::vector<AliasIdentity<T>>{
                         {"b2 -> 0", pt<T>(W, b1, T(0), T(0), b4), {one, sig0}},
                         {"b4 -> 0", pt<T>(W, b1, b2, T(0), T(0)), {one, sig1}},
                         {"(b2,b4) -> 0", pt<T>(W, b1, T(0), T(0), T(0)), {one, sig0 + sig1}}};
                 }});
    std::vector<unsigned> herm;
    for (unsigned m = 0; m < 16; ++m)
        if (m & F({1}))
            herm.push_back(m);
    b.push_back({FamilyId::Hermite, herm,
                 [=](const Arr<T> &) { return real_image<T>(FamilyId::Hermite, {}, one, T(0)); },
                 [=](const Arr<T> &) {
                     return std::vector<AliasIdentity<T>>{
                         {"origin", pt<T>(W, T(0), T(0), T(0), T(0)), {one, T(0)}}};
                 }});
    return b;
}

template <class T> std::vector<FaceBlock<T>> jacobi2d_blocks() {
    using std::sqrt;
    const T one = T(1), two = T(2);
    std::vector<FaceBlock<T>> b;
    b.push_back({FamilyId::Laguerre, {F({1})},
                 [=](const Arr<T> &v) {
                     T be = one / v[1];
                     return real_image<T>(FamilyId::Laguerre, {be}, two * sqrt(v[1]), -be);
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::Laguerre, {F({2})},
                 [=](const Arr<T> &v) {
                     T al = one / v[0];
                     return real_image<T>(FamilyId::Laguerre, {al}, -two * sqrt(v[0]), -al);
                 },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    b.push_back({FamilyId::Hermite, {F({1, 2})},
                 [=](const Arr<T> &) { return real_image<T>(FamilyId::Hermite, {}, two * sqrt(two), T(0)); },
                 [](const Arr<T> &) { return std::vector<AliasIdentity<T>>{}; }});
    return b;
}

} // namespace detail

template <class T> std::vector<FaceBlock<T>> face_blocks(ChartId c) {
    switch (c) {
    case ChartId::Racah1: return detail::racah1_blocks<T>();
    case ChartId::Racah2: return detail::racah2_blocks<T>();
    case ChartId::Racah3: return detail::racah3_blocks<T>();
    case ChartId::Wilson1: return detail::wilson1_blocks<T>();
    case ChartId::Wilson2: return detail::wilson2_blocks<T>();
    case ChartId::Jacobi2D: return detail::jacobi2d_blocks<T>();
    }
    return {};
}

// all nonempty faces of a chart, in increasing bitmask order
inline std::vector<unsigned> chart_faces(ChartId c) {
    std::vector<unsigned> out;
    for (unsigned m = 1; m < (1u << dims(c)); ++m)
        out.push_back(m);
    return out;
}

template <class T> RestrictionRecord<T> face_restriction(ChartId chart, unsigned face) {
    if (face >= (1u << dims(chart)))
        throw Error(ErrorKind::BadInput, "face " + face_label(face) + " invalid for " + to_string(chart));
    RestrictionRecord<T> rec;
    rec.chart = chart;
    rec.face = face;
    if (face == 0) {
        rec.target = chart == ChartId::Jacobi2D ? FamilyId::Jacobi
                     : is_racah_chart(chart)    ? FamilyId::Racah
                                                : FamilyId::Wilson;
        rec.image = [](const ChartPoint<T> &p) {
            auto cf = chart_to_family(p);
            return FaceImage<T>{cf.family, cf.scale};
        };
        rec.identities = [](const ChartPoint<T> &) { return std::vector<AliasIdentity<T>>{}; };
        return rec;
    }
    for (auto &blk : face_blocks<T>(chart)) {
        bool hit = false;
        for (unsigned f : blk.faces)
            hit = hit || f == face;
        if (!hit)
            continue;
        rec.target = blk.target;
        for (unsigned f : blk.faces)
            if (f != face)
                rec.aliases.push_back(f);
        rec.image = [fn = blk.image](const ChartPoint<T> &p) { return fn(p.c); };
        rec.identities = [fn = blk.identities](const ChartPoint<T> &p) { return fn(p.c); };
        return rec;
    }
    throw Error(ErrorKind::BadInput, "no restriction registered for face " + face_label(face));
}

} // namespace askey
