#pragma once

#include "askey/checks.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace askey {

enum class TransitionId { T12, T23, T13 };
enum class Direction { forward, backward };

inline constexpr std::array<TransitionId, 3> all_transitions = {TransitionId::T12, TransitionId::T23,
                                                                TransitionId::T13};

inline const char *to_string(TransitionId t) {
    switch (t) {
    case TransitionId::T12: return "T12";
    case TransitionId::T23: return "T23";
    case TransitionId::T13: return "T13";
    }
    return "?";
}

struct TransitionPair {
    TransitionId tag = TransitionId::T12;
    Direction direction = Direction::forward;
};

// forward maps the lower-numbered chart to the higher-numbered one
inline ChartId source_chart(TransitionPair p) {
    static constexpr ChartId lo[] = {ChartId::Racah1, ChartId::Racah2, ChartId::Racah1};
    static constexpr ChartId hi[] = {ChartId::Racah2, ChartId::Racah3, ChartId::Racah3};
    int i = static_cast<int>(p.tag);
    return p.direction == Direction::forward ? lo[i] : hi[i];
}

inline ChartId target_chart(TransitionPair p) {
    TransitionPair q{p.tag, p.direction == Direction::forward ? Direction::backward : Direction::forward};
    return source_chart(q);
}

inline TransitionPair inverse(TransitionPair p) {
    return {p.tag, p.direction == Direction::forward ? Direction::backward : Direction::forward};
}

enum class DiscriminantKind { S, T };

template <class T> struct Discriminant {
    T value;
    T scale;
    DiscriminantKind kind;
};

template <class T> T snap_tolerance() {
    if constexpr (std::is_same_v<T, double>)
        return T(1e-14);
    else
        return 100 * epsilon<T>();
}

// binary64 callers get the radicands and the square-root maps in 50 digits:
// both cancel to near zero along the fold of the 2-to-1 map
template <class T> using wide = std::conditional_t<std::is_same_v<T, double>, hp, T>;

template <class W, class T> std::array<W, 4> widen(const std::array<T, 4> &x) {
    return {W(x[0]), W(x[1]), W(x[2]), W(x[3])};
}

template <class T, class W> std::array<T, 4> narrow(const std::array<W, 4> &x) {
    return {static_cast<T>(x[0]), static_cast<T>(x[1]), static_cast<T>(x[2]), static_cast<T>(x[3])};
}

template <class T> Discriminant<T> discriminant_S(const std::array<T, 4> &s) {
    using W = wide<T>;
    const auto [s1, s2, s3, s4] = widen<W>(s);
    W F = 1 + 2 * s1 + s1 * s1 - s1 * s1 * s2 * s3;
    W a = s4 * s4 * F * F, b = 4 * s1 * s1 * s3 * s4 * (1 + s1);
    W v = a - b, sc = a + b;
    if ((v < W(0) ? -v : v) <= W(snap_tolerance<T>()) * sc)
        v = W(0);
    return {static_cast<T>(v), static_cast<T>(sc), DiscriminantKind::S};
}

template <class T> Discriminant<T> discriminant_T(const std::array<T, 4> &t) {
    using W = wide<T>;
    const auto [t1, t2, t3, t4] = widen<W>(t);
    W L = 1 - t1 * t3 * (1 + t2 * t4);
    W d = t4 - t1 * t1;
    W a = t2 * t2 * t3 * t3 * d * d, b = 4 * t1 * t1 * t2 * t3 * L;
    W v = a - b;
    W sc = a + (b < W(0) ? -b : b);
    if ((v < W(0) ? -v : v) <= W(snap_tolerance<T>()) * sc)
        v = W(0);
    return {static_cast<T>(v), static_cast<T>(sc), DiscriminantKind::T};
}

struct DomainVerdict {
    bool ok = true;
    std::vector<std::string> failed;
};

template <class T> DomainVerdict transition_domain(TransitionPair pair, const ChartPoint<T> &p) {
    DomainVerdict v;
    auto need = [&](bool c, const char *clause) {
        if (!c) {
            v.ok = false;
            v.failed.emplace_back(clause);
        }
    };
    const ChartId src = source_chart(pair);
    if (p.chart != src) {
        v.ok = false;
        v.failed.emplace_back(std::string("point must lie on ") + to_string(src));
        return v;
    }
    for (int i = 0; i < 4; ++i)
        if (!is_finite(p.c[i])) {
            v.ok = false;
            v.failed.emplace_back("finite coordinates");
            return v;
        }
    const auto [x1, x2, x3, x4] = p.c;
    const T zero = T(0), one = T(1);
    const bool fwd = pair.direction == Direction::forward;
    switch (pair.tag) {
    case TransitionId::T12:
        if (fwd) {
            need(x1 >= zero, "t1>=0");
            need(x2 >= zero, "t2>=0");
            need(x3 > zero, "t3>0");
            need(x4 > zero, "t4>0");
            need(x1 * x3 * (one + x2 * x4) < one, "t1t3(1+t2t4)<1");
            need(x2 * x4 < one, "t2t4<1");
        } else {
            need(x1 >= zero, "s1>=0");
            need(x2 > zero, "s2>0");
            need(x3 > zero, "s3>0");
            need(x4 >= zero, "s4>=0");
            need(x2 * x2 * x4 < one, "s2^2s4<1");
        }
        break;
    case TransitionId::T23:
        if (fwd) {
            need(x1 > zero, "s1>0");
            need(x2 >= zero, "s2>=0");
            need(x3 > zero, "s3>0");
            need(x4 > zero, "s4>0");
            need(x2 * x2 * x4 < one, "s2^2s4<1");
            if (v.ok) {
                need(discriminant_S(p.c).value >= zero, "S>=0");
                const auto [w1, w2, w3, w4] = widen<wide<T>>(p.c);
                auto F = 1 + 2 * w1 + w1 * w1 - w1 * w1 * w2 * w3;
                need(-2 * w1 * w1 * w3 + w4 * (1 + w1) * F >= 0, "-2s1^2s3+s4(1+s1)(1+2s1+s1^2-s1^2s2s3)>=0");
            }
        } else {
            need(x1 > zero, "u1>0");
            need(x2 >= zero, "u2>=0");
            need(x3 > zero, "u3>0");
            need(x4 > zero, "u4>0");
            need(x2 * x2 * x3 * x4 < one, "u2^2u3u4<1");
            need(x2 * x3 * (x1 - x2) < one, "u2u3(u1-u2)<1");
            need(x1 * (one + x2 * x3) <= one, "u1(1+u2u3)<=1");
        }
        break;
    case TransitionId::T13:
        if (fwd) {
            need(x1 > zero, "t1>0");
            need(x2 > zero, "t2>0");
            need(x3 > zero, "t3>0");
            need(x4 > zero, "t4>0");
            need(x2 * x4 < one, "t2t4<1");
            if (v.ok) {
                need(discriminant_T(p.c).value >= zero, "T>=0");
                const auto [w1, w2, w3, w4] = widen<wide<T>>(p.c);
                auto L = 1 - w1 * w3 * (1 + w2 * w4);
                need(w2 * w3 * w4 * (w4 - w1 * w1) >= 2 * w1 * w1 * L, "t2t3t4(t4-t1^2)>=2t1^2(1-t1t3(1+t2t4))");
                need(L > 0, "1-t1t3(1+t2t4)>0");
            }
        } else {
            need(x1 > zero, "u1>0");
            need(x2 > zero, "u2>0");
            need(x3 > zero, "u3>0");
            need(x4 > zero, "u4>0");
            need(x2 * x2 * x3 * x4 < one, "u2^2u3u4<1");
            need(x2 * x3 * (x1 - x2) < one, "u2u3(u1-u2)<1");
            need(x1 * (one + x2 * x3) <= one, "u1(1+u2u3)<=1");
        }
        break;
    }
    return v;
}

namespace detail {

template <class T> std::array<T, 4> t_to_s(const std::array<T, 4> &t) {
    const auto [t1, t2, t3, t4] = t;
    T K = 1 - t1 * t2 * t3 * t4;
    return {t1 * t3 / (1 - t1 * t3 - t1 * t2 * t3 * t4), K / t3, K / (t3 * t4), t2 * t3 * t3 * t4 / (K * K)};
}

template <class T> std::array<T, 4> s_to_t(const std::array<T, 4> &s) {
    const auto [s1, s2, s3, s4] = s;
    return {s1 * s2 / (1 + s1), s2 * s3 * s4, (1 + s1) / (s2 * (1 + s1 + s1 * s2 * s2 * s4)), s2 / s3};
}

template <class T> std::array<T, 4> u_to_s(const std::array<T, 4> &u) {
    const auto [u1, u2, u3, u4] = u;
    T E = 1 + u4 * (1 - u1 * u2 * u3);
    return {1 / (u4 * (1 - u1 * u2 * u3)), u2 * E / (1 + u1), u1 * u3 * E, (1 + u1) * (1 + u1) * u3 * u4 / (E * E)};
}

template <class T> std::array<T, 4> s_to_u(const std::array<T, 4> &s) {
    using std::sqrt;
    using W = wide<T>;
    const auto ws = widen<W>(s);
    const auto [s1, s2, s3, s4] = ws;
    W S = sqrt(discriminant_S(ws).value);
    W F = 1 + 2 * s1 + s1 * s1 - s1 * s1 * s2 * s3;
    W G = 1 + s2 * s4 + s1 * s2 * s4;
    W u1 = (-2 * s1 * s1 * s3 + s4 * (1 + s1) * F - (1 + s1) * S) / (2 * s1 * s1 * s3 * G);
    W u2 = s1 * s2 * s2 * s4 / G + s2 * (s4 * F - S) / (2 * s1 * s3 * G);
    W u3 = (-2 * s1 * s1 * s3 + s4 * (1 + s1) * F + (1 + s1) * S) / (2 * s1 * (1 + s1));
    W u4 = 1 / s1 + s2 * (s4 * F - S) / (2 * s1 * (1 + s1));
    return narrow<T>(std::array<W, 4>{u1, u2, u3, u4});
}

template <class T> std::array<T, 4> u_to_t(const std::array<T, 4> &u) {
    const auto [u1, u2, u3, u4] = u;
    return {u2 / (1 + u1), u1 * u2 * u3 * u3 * u4 * (1 + u1),
            (1 + u1) / (u2 * (1 + u4 * (1 - u2 * u3 * (u1 - u2)))), u2 / (u1 * u3 * (1 + u1))};
}

template <class T> std::array<T, 4> t_to_u(const std::array<T, 4> &t) {
    using std::sqrt;
    using W = wide<T>;
    const auto wt = widen<W>(t);
    const auto [t1, t2, t3, t4] = wt;
    W R = sqrt(discriminant_T(wt).value);
    W L = 1 - t1 * t3 * (1 + t2 * t4);
    W M = L + t2 * t3 * t4;
    W d = t4 - t1 * t1;
    W u1 = (t2 * t3 * t4 * d - 2 * t1 * t1 * L - t4 * R) / (2 * t1 * t1 * M);
    W u2 = (t2 * t3 * t4 * (t1 * t1 + t4) - t4 * R) / (2 * t1 * M);
    W u3 = (t2 * t3 * t4 * d - 2 * t1 * t1 * L + t4 * R) / (2 * t1 * t4 * L);
    W u4 = (2 * L + t2 * t3 * d - R) / (2 * t1 * t3);
    return narrow<T>(std::array<W, 4>{u1, u2, u3, u4});
}

} // namespace detail

template <class T> ChartPoint<T> transition(TransitionPair pair, const ChartPoint<T> &p) {
    auto dv = transition_domain(pair, p);
    if (!dv.ok)
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(pair.tag)) + " domain: " + dv.failed.front());
    const bool fwd = pair.direction == Direction::forward;
    ChartPoint<T> q;
    q.chart = target_chart(pair);
    switch (pair.tag) {
    case TransitionId::T12: q.c = fwd ? detail::t_to_s(p.c) : detail::s_to_t(p.c); break;
    case TransitionId::T23: q.c = fwd ? detail::s_to_u(p.c) : detail::u_to_s(p.c); break;
    case TransitionId::T13: q.c = fwd ? detail::t_to_u(p.c) : detail::u_to_t(p.c); break;
    }
    return q;
}

// (rho, sigma) that carries the monic top or face family to the chart polynomials
template <class T> AffineScale<T> point_scale(const ChartPoint<T> &p) {
    auto rec = face_restriction<T>(p.chart, p.zero_set());
    return rec.image(p).scale;
}

template <class T> CheckReport verify_transition(TransitionPair pair, const ChartPoint<T> &p, int n_max, double tol) {
    CheckReport r;
    r.tol = tol;
    ChartPoint<T> q = transition(pair, p);
    ChartPoint<T> back = transition(inverse(pair), q);
    T rt = T(0);
    for (int i = 0; i < 4; ++i) {
        T e = rel_diff(back.c[i], p.c[i]);
        rt = e > rt ? e : rt;
    }
    r.add("round trip", to_double(rt));
    if (p.zero_set() == 0 && q.zero_set() == 0) {
        auto fp = chart_to_family(p).family, fq = chart_to_family(q).family;
        T pe = T(0);
        for (int i = 0; i < 4; ++i) {
            T e = rel_diff(fq.re(i), fp.re(i));
            pe = e > pe ? e : pe;
        }
        r.add("Racah parameters", to_double(pe));
    }
    AffineScale<T> sp = point_scale(p), sq = point_scale(q);
    T ce = T(0);
    for (int n = 0; n <= n_max; ++n) {
        auto a = unrescale_pair(chart_coeffs(p, n), sp);
        auto b = unrescale_pair(chart_coeffs(q, n), sq);
        if (n == 0)
            a.second = b.second = T(0);
        T e = coeff_gap(a, b);
        ce = e > ce ? e : ce;
    }
    r.add("unrescaled recurrence", to_double(ce));
    r.close();
    return r;
}

// the printed box identifications between Racah charts
struct FaceCorrespondence {
    const char *name;
    TransitionPair pair;
    unsigned source_face;
    unsigned target_face;
};

inline const std::vector<FaceCorrespondence> &face_correspondences() {
    static const std::vector<FaceCorrespondence> v = {
        {"Krawtchouk {t1=0} <-> {s1=0}", {TransitionId::T12, Direction::forward}, 1u, 1u},
        {"Meixner {t2=0} <-> {s4=0}", {TransitionId::T12, Direction::forward}, 2u, 8u},
        {"Charlier {t1=t2=0} <-> {s1=s4=0}", {TransitionId::T12, Direction::forward}, 3u, 9u},
        {"Hermite {s2=0} <-> {u2=0}", {TransitionId::T23, Direction::backward}, 2u, 2u},
    };
    return v;
}

} // namespace askey
