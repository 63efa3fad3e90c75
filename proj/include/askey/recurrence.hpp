#pragma once

#include "askey/faces.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace askey {

// where a derived family lives: a face point plus the extra affine step that
// takes the face polynomials to the requested parameters
template <class T> struct FaceAnchor {
    ChartPoint<T> point;
    unsigned face = 0;
    AffineScale<T> extra;
};

namespace detail {

template <class T> void require(bool ok, FamilyId f, const char *what) {
    if (!ok)
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(f)) + ": " + what);
}

template <class T> bool is_real(const cx<T> &z) { return z.imag() == T(0); }

} // namespace detail

template <class T> FaceAnchor<T> face_anchor(const FamilyInstance<T> &f) {
    using detail::require;
    using std::abs;
    using std::atan;
    using std::sqrt;
    using std::tan;
    const T one = T(1), two = T(2), zero = T(0);
    const auto P = [](ChartId c, T a, T b, T d, T e) { return ChartPoint<T>{c, {a, b, d, e}}; };
    const FamilyId id = f.id;
    switch (id) {
    case FamilyId::Hahn: {
        T al = f.re(0), be = f.re(1), N = f.re(2);
        require<T>(al > zero && be > zero, id, "alpha, beta > 0");
        require<T>(N > one, id, "N > 1");
        return {P(ChartId::Racah1, one / al, al / be, zero, be / (al * N)), detail::F({3}), {}};
    }
    case FamilyId::DualHahn: {
        T ga = f.re(0), de = f.re(1), N = f.re(2);
        require<T>(ga > zero && de > zero, id, "gamma, delta > 0");
        require<T>(N > one, id, "N > 1");
        return {P(ChartId::Racah3, zero, one / ga, ga * ga / de, de / N), detail::F({1}), {}};
    }
    case FamilyId::Meixner: {
        T be = f.re(0), c = f.re(1);
        require<T>(be > one, id, "beta > 1");
        require<T>(c > zero && c < one, id, "0 < c < 1");
        T t1 = one / (be - one);
        return {P(ChartId::Racah1, t1, zero, zero, t1 * (one - c) / c), detail::F({2, 3}), {}};
    }
    case FamilyId::Krawtchouk: {
        T p = f.re(0), N = f.re(1);
        require<T>(p > zero && p < one, id, "0 < p < 1");
        require<T>(N > one, id, "N > 1");
        T t2 = p / (one - p);
        return {P(ChartId::Racah1, zero, t2, zero, one / (N * t2)), detail::F({1, 3}), {}};
    }
    case FamilyId::Charlier: {
        T a = f.re(0);
        require<T>(a > zero, id, "a > 0");
        return {P(ChartId::Racah1, zero, zero, zero, one / a), detail::F({1, 2, 3}), {}};
    }
    case FamilyId::ContinuousHahn: {
        cx<T> a = f.z(0), b = f.z(1);
        T th = (a.imag() - b.imag()) / two, ep = (a.imag() + b.imag()) / two;
        if (th < zero) {
            std::swap(a, b);
            th = -th;
        }
        require<T>(th > zero, id, "Im a != Im b");
        T A = a.real(), B = b.real();
        require<T>(A > zero && B > zero, id, "Re a, Re b > 0");
        return {P(ChartId::Wilson1, one / A, A / B, B / (two * th), zero), detail::F({4}), {one, -ep}};
    }
    case FamilyId::ContinuousDualHahn: {
        cx<T> a = f.z(0), c = f.z(2);
        require<T>(detail::is_real<T>(c), id, "c real");
        T I = abs(a.imag());
        require<T>(I > zero, id, "a non-real");
        require<T>(a.real() > half<T>(), id, "Re a > 1/2");
        T b1 = one / (two * a.real() - one);
        T K = -c.real();
        T b1p3 = b1 * b1 * b1, b1p4 = b1p3 * b1;
        T qa = two * b1p4 * K - b1p3 - b1p4 - two * b1p4 * I;
        T qb = 4 * b1 * b1 - 4 * b1p3 * I;
        T qc = 8 * b1;
        std::optional<ChartPoint<T>> hit;
        auto try_root = [&](T b3) {
            if (!(b3 > zero) || hit)
                return;
            T b2 = one / (two * b1p3 * b3 * I - 4 * b1);
            if (b2 > zero && is_finite(b2))
                hit = P(ChartId::Wilson2, b1, b2, b3, zero);
        };
        if (qa == zero) {
            try_root(-qc / qb);
        } else {
            T disc = qb * qb - 4 * qa * qc;
            require<T>(disc >= zero, id, "no Wilson-chart-2 face point");
            T r = sqrt(disc);
            // stable pair of roots
            T q = qb >= zero ? -(qb + r) / two : -(qb - r) / two;
            if (q != zero) {
                try_root(q / qa);
                try_root(qc / q);
            }
        }
        require<T>(hit.has_value(), id, "no Wilson-chart-2 face point with b2, b3 > 0");
        return {*hit, detail::F({4}), {}};
    }
    case FamilyId::MeixnerPollaczek: {
        T la = f.re(0), phi = f.re(1);
        require<T>(la > zero, id, "lambda > 0");
        require<T>(phi > zero && phi < pi<T>(), id, "0 < phi < pi");
        T hp2 = pi<T>() / two;
        require<T>(phi != hp2, id, "phi != pi/2");
        if (phi < hp2)
            return {P(ChartId::Wilson1, one / la, zero, tan(phi), zero), detail::F({2, 4}), {}};
        return {P(ChartId::Wilson1, one / la, zero, tan(pi<T>() - phi), zero), detail::F({2, 4}), {-one, zero}};
    }
    default:
        break;
    }
    throw Error(ErrorKind::BadInput, std::string(to_string(id)) + " has direct coefficients");
}

template <class T> int finite_n_valid(const FamilyInstance<T> &f) {
    using std::floor;
    switch (f.id) {
    case FamilyId::Racah:
    case FamilyId::Hahn:
        return static_cast<int>(to_double(floor(f.re(2))));
    case FamilyId::DualHahn:
        return static_cast<int>(to_double(floor(f.re(2))));
    case FamilyId::Krawtchouk:
        return static_cast<int>(to_double(floor(f.re(1))));
    default:
        return -1;
    }
}

template <class T> RecurrenceCoeffs<T> recurrence_coeffs(const FamilyInstance<T> &f) {
    RecurrenceCoeffs<T> rc;
    switch (f.id) {
    case FamilyId::Hermite:
        rc.B = [](int n) { return hermite_coeffs<T>(n).first; };
        rc.C = [](int n) { return hermite_coeffs<T>(n).second; };
        return rc;
    case FamilyId::Laguerre: {
        T al = f.re(0);
        rc.B = [al](int n) { return laguerre_coeffs(al, n).first; };
        rc.C = [al](int n) { return laguerre_coeffs(al, n).second; };
        return rc;
    }
    case FamilyId::Jacobi: {
        T al = f.re(0), be = f.re(1);
        rc.B = [al, be](int n) { return jacobi_coeffs(al, be, n).first; };
        rc.C = [al, be](int n) { return jacobi_coeffs(al, be, n).second; };
        return rc;
    }
    case FamilyId::Racah: {
        auto p = racah_params(f);
        rc.B = [p](int n) { return racah_coeffs(p, n).first; };
        rc.C = [p](int n) { return racah_coeffs(p, n).second; };
        rc.n_valid = finite_n_valid(f);
        return rc;
    }
    case FamilyId::Wilson: {
        auto p = wilson_params(f);
        rc.B = [p](int n) { return wilson_coeffs(p, n).first; };
        rc.C = [p](int n) { return wilson_coeffs(p, n).second; };
        return rc;
    }
    default:
        break;
    }
    FaceAnchor<T> an = face_anchor(f);
    if (auto v = domain_violation(an.point))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(f.id)) + ": face point violates " + *v);
    auto rec = face_restriction<T>(an.point.chart, an.face);
    AffineScale<T> s = rec.image(an.point).scale;
    auto out = rescale_coeffs(unrescale_coeffs(chart_recurrence(an.point), s), an.extra);
    out.n_valid = finite_n_valid(f);
    return out;
}

enum class PositivityCase { WilsonCase1, WilsonCase2, WilsonCase3, RacahRegion18, Unconstrained };

inline const char *to_string(PositivityCase c) {
    switch (c) {
    case PositivityCase::WilsonCase1: return "WilsonCase1";
    case PositivityCase::WilsonCase2: return "WilsonCase2";
    case PositivityCase::WilsonCase3: return "WilsonCase3";
    case PositivityCase::RacahRegion18: return "RacahRegion18";
    case PositivityCase::Unconstrained: return "Unconstrained";
    }
    return "?";
}

struct PositivityVerdict {
    bool ok = false;
    std::optional<PositivityCase> case_label;
    std::optional<int> failing_n;
    std::string reason;
};

inline constexpr int n_probe = 32;

namespace detail {

template <class T> std::optional<int> first_nonpositive_C(const RecurrenceCoeffs<T> &rc, int n_hi) {
    for (int n = 1; n <= n_hi; ++n) {
        T c = rc.C(n);
        if (!(c > T(0)))
            return n;
    }
    return std::nullopt;
}

// conjugate within a relative hair, so parameters built from conj() or from a
// separate formula are both recognised
template <class T> bool conj_pair(const cx<T> &x, const cx<T> &y) {
    using std::abs;
    T scale = abs(x) + abs(y) + T(1);
    return abs(x.real() - y.real()) <= 64 * epsilon<T>() * scale &&
           abs(x.imag() + y.imag()) <= 64 * epsilon<T>() * scale;
}

} // namespace detail

template <class T> PositivityVerdict positivity_check(const FamilyInstance<T> &f) {
    PositivityVerdict v;
    if (f.id == FamilyId::Racah) {
        auto p = racah_params(f);
        v.case_label = PositivityCase::RacahRegion18;
        if (!(p.alpha > T(0)))
            v.reason = "alpha > 0";
        else if (!(p.beta > T(0)))
            v.reason = "beta > 0";
        else if (!(p.N > T(1)))
            v.reason = "N > 1";
        else if (!(p.delta > p.alpha + p.N))
            v.reason = "delta > alpha + N";
        v.ok = v.reason.empty();
        return v;
    }
    if (f.id == FamilyId::Wilson) {
        auto p = wilson_params(f);
        std::array<cx<T>, 4> z = {p.a, p.b, p.c, p.d};
        int nonreal = 0;
        for (auto &w : z)
            nonreal += w.imag() != T(0);
        if (nonreal == 4) {
            v.case_label = PositivityCase::WilsonCase1;
            bool paired = false;
            for (int j = 1; j < 4 && !paired; ++j) {
                if (!detail::conj_pair<T>(z[0], z[j]))
                    continue;
                std::array<int, 2> rest{};
                int r = 0;
                for (int k = 1; k < 4; ++k)
                    if (k != j)
                        rest[r++] = k;
                paired = detail::conj_pair<T>(z[rest[0]], z[rest[1]]) && z[0].real() > T(0) &&
                         z[rest[0]].real() > T(0);
            }
            v.ok = paired;
            if (!paired)
                v.reason = "two conjugate pairs with positive real parts";
            return v;
        }
        if (nonreal == 2) {
            v.case_label = PositivityCase::WilsonCase2;
            std::vector<cx<T>> cplx, real;
            for (auto &w : z)
                (w.imag() != T(0) ? cplx : real).push_back(w);
            // an equal real pair is a degenerate conjugate pair
            if (real[0] == real[1] && real[0].real() > T(0))
                v.case_label = PositivityCase::WilsonCase1;
            if (!detail::conj_pair<T>(cplx[0], cplx[1]) || !(cplx[0].real() > T(0)))
                v.reason = "conjugate pair with positive real part";
            else if (!(real[0].real() + real[1].real() > T(0)))
                v.reason = "real pair with positive sum";
            v.ok = v.reason.empty();
            return v;
        }
        if (nonreal == 0) {
            v.case_label = PositivityCase::WilsonCase3;
            v.failing_n = detail::first_nonpositive_C(recurrence_coeffs(f), n_probe);
            v.ok = !v.failing_n;
            if (!v.ok)
                v.reason = "C_n > 0";
            return v;
        }
        v.reason = "parameters fit none of the three Wilson cases";
        return v;
    }
    v.case_label = PositivityCase::Unconstrained;
    try {
        auto rc = recurrence_coeffs(f);
        int hi = rc.n_valid >= 0 ? std::min(rc.n_valid, n_probe) : n_probe;
        v.failing_n = detail::first_nonpositive_C(rc, hi);
        v.ok = !v.failing_n;
        if (!v.ok)
            v.reason = "C_n > 0";
    } catch (const Error &e) {
        v.reason = e.what();
    }
    return v;
}

} // namespace askey
