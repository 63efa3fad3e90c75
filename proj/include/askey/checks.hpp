#pragma once

#include "askey/recurrence.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace askey {

struct CheckCase {
    std::string label;
    double err = 0;
};

struct CheckReport {
    double max_rel_err = 0;
    double tol = 0;
    bool pass = false;
    std::vector<CheckCase> cases;

    void add(std::string label, double err) {
        max_rel_err = std::max(max_rel_err, err);
        cases.push_back({std::move(label), err});
    }
    void close() { pass = max_rel_err <= tol; }
};

template <class T> T coeff_gap(const std::pair<T, T> &a, const std::pair<T, T> &b) {
    T e = rel_diff(a.first, b.first);
    T f = rel_diff(a.second, b.second);
    return e > f ? e : f;
}

template <class T>
CheckReport verify_face(ChartId chart, unsigned face, const ChartPoint<T> &p, int n_max, double tol) {
    if (p.chart != chart)
        throw Error(ErrorKind::BadInput, "point belongs to another chart");
    if (auto v = domain_violation(p))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(chart)) + ": " + *v);
    unsigned zs = p.zero_set();
    if ((zs & face) != face)
        throw Error(ErrorKind::OutOfDomain, "point is not on face " + face_label(face));
    auto rec = face_restriction<T>(chart, zs);
    auto img = rec.image(p);
    auto target = rescale_coeffs(recurrence_coeffs(img.family), img.scale);
    CheckReport r;
    r.tol = tol;
    T worst = T(0);
    for (int n = 0; n <= n_max; ++n) {
        auto lhs = chart_coeffs(p, n);
        std::pair<T, T> rhs{target.B(n), n == 0 ? T(0) : target.C(n)};
        T e = coeff_gap(lhs, rhs);
        worst = e > worst ? e : worst;
    }
    r.add(std::string(to_string(rec.target)), to_double(worst));
    for (auto &id : rec.identities(p)) {
        T w = T(0);
        for (int n = 0; n <= n_max; ++n) {
            auto lhs = chart_coeffs(p, n);
            auto rhs = rescale_pair(chart_coeffs(id.target, n), id.scale);
            if (n == 0)
                rhs.second = T(0);
            T e = coeff_gap(lhs, rhs);
            w = e > w ? e : w;
        }
        r.add(id.label, to_double(w));
    }
    r.close();
    return r;
}

struct ContinuityReport {
    std::vector<double> gaps;
    bool pass = false;
};

// halve the face coordinates of an interior base point and watch the
// coefficients approach their values on the face
template <class T>
ContinuityReport continuity_probe(ChartId chart, unsigned face, const ChartPoint<T> &base, int steps, int n_max = 6,
                                  double final_tol = 1e-6, int monotone_tail = 5) {
    if (auto v = interior_violation(base))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(chart)) + ": " + *v);
    ChartPoint<T> lim = base;
    for (int i = 0; i < dims(chart); ++i)
        if (face & (1u << i))
            lim.c[i] = T(0);
    std::vector<std::pair<T, T>> target;
    for (int n = 0; n <= n_max; ++n)
        target.push_back(chart_coeffs(lim, n));
    ContinuityReport r;
    T f = T(1);
    for (int k = 1; k <= steps; ++k) {
        f /= 2;
        ChartPoint<T> q = base;
        for (int i = 0; i < dims(chart); ++i)
            if (face & (1u << i))
                q.c[i] = base.c[i] * f;
        T g = T(0);
        for (int n = 0; n <= n_max; ++n) {
            T e = coeff_gap(chart_coeffs(q, n), target[n]);
            g = e > g ? e : g;
        }
        r.gaps.push_back(to_double(g));
    }
    bool mono = true;
    int m = static_cast<int>(r.gaps.size());
    for (int k = std::max(1, m - monotone_tail); k < m; ++k)
        mono = mono && r.gaps[k] <= r.gaps[k - 1];
    r.pass = !r.gaps.empty() && r.gaps.back() <= final_tol && mono;
    return r;
}

} // namespace askey
