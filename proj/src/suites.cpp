#include "askey/harness.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace askey {

namespace {

using json = nlohmann::ordered_json;

template <class T> constexpr bool is_hp = std::is_same_v<T, hp>;

template <class T> double default_tol(double binary64) { return is_hp<T> ? 1e-30 : binary64; }

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

template <class T> std::string coords_note(const ChartPoint<T> &p) {
    std::ostringstream os;
    os.precision(6);
    os << "(";
    for (int i = 0; i < dims(p.chart); ++i)
        os << (i ? "," : "") << to_double(p.c[i]);
    os << ")";
    return os.str();
}

struct Builder {
    SuiteReport r;
    void add(std::string label, double err, double tol, std::string note = {}) {
        bool ok = std::isfinite(err) && err <= tol;
        r.details.push_back({std::move(label), err, tol, ok, true, std::move(note)});
    }
    void add_bool(std::string label, bool ok, std::string note = {}) {
        r.details.push_back({std::move(label), ok ? 0.0 : 1.0, 0.0, ok, true, std::move(note)});
    }
    void add_info(std::string label, double err, std::string note = {}) {
        r.details.push_back({std::move(label), err, 0.0, true, false, std::move(note)});
    }
    void fail(std::string label, const std::exception &e) {
        r.details.push_back({std::move(label), INFINITY, 0.0, false, true, e.what()});
    }
    SuiteReport finish() {
        r.pass = !r.details.empty();
        r.max_rel_err = 0;
        for (auto &c : r.details) {
            if (!c.gating)
                continue;
            r.pass = r.pass && c.pass;
            if (!(c.err <= r.max_rel_err))
                r.max_rel_err = c.err;
        }
        return r;
    }
};

template <class T> T pair_gap(const std::pair<T, T> &a, const std::pair<T, T> &b, int n) {
    if (n == 0)
        return rel_diff(a.first, b.first);
    return coeff_gap(a, b);
}

// --------------------------------------------------------------------------

template <class T> void chart_consistency(Builder &b, const SuiteConfig &cfg) {
    int samples = cfg.samples.value_or(100);
    int n_max = cfg.n_max.value_or(8);
    double tol = cfg.tol.value_or(default_tol<T>(1e-8));
    b.r.tol = tol;
    b.r.samples = samples * static_cast<int>(all_charts.size());
    for (ChartId c : all_charts) {
        try {
            auto pts = sample_interior<T>(c, sub_seed(cfg.seed, static_cast<int>(c)), samples);
            double worst = 0;
            std::string where;
            for (auto &p : pts) {
                auto cf = chart_to_family(p);
                auto rc = rescale_coeffs(recurrence_coeffs(cf.family), cf.scale);
                T w = T(0);
                for (int n = 0; n <= n_max; ++n) {
                    std::pair<T, T> d{rc.B(n), n ? rc.C(n) : T(0)};
                    T e = pair_gap(chart_coeffs(p, n), d, n);
                    w = e > w ? e : w;
                }
                if (to_double(w) > worst || where.empty()) {
                    worst = std::max(worst, to_double(w));
                    where = coords_note(p);
                }
            }
            b.add(to_string(c), worst, tol, "worst at " + where);
            if constexpr (!is_hp<T>) {
                // same binary64 chart values against the direct route evaluated in high precision
                double wide_err = 0;
                for (auto &p : pts) {
                    auto q = p.template as<hp>();
                    auto cf = chart_to_family(q);
                    auto rc = rescale_coeffs(recurrence_coeffs(cf.family), cf.scale);
                    for (int n = 0; n <= n_max; ++n) {
                        auto a = chart_coeffs(p, n);
                        std::pair<hp, hp> d{rc.B(n), n ? rc.C(n) : hp(0)};
                        wide_err = std::max(wide_err, to_double(pair_gap(std::pair<hp, hp>{a.first, a.second}, d, n)));
                    }
                }
                b.add_info(std::string(to_string(c)) + " vs high-precision direct route", wide_err);
            }
        } catch (const std::exception &e) {
            b.fail(to_string(c), e);
        }
    }
}

template <class T> void boundary_faces(Builder &b, const SuiteConfig &cfg) {
    int samples = cfg.samples.value_or(10);
    int n_max = cfg.n_max.value_or(6);
    double tol = cfg.tol.value_or(default_tol<T>(1e-10));
    b.r.tol = tol;
    int count = 0;
    for (ChartId c : all_charts) {
        for (unsigned f : chart_faces(c)) {
            std::string label = std::string(to_string(c)) + " " + face_label(f);
            try {
                auto pts = sample_face<T>(c, f, sub_seed(cfg.seed, 16 * static_cast<int>(c) + f), samples);
                std::vector<std::pair<std::string, double>> worst;
                for (auto &p : pts) {
                    auto rep = verify_face(c, f, p, n_max, tol);
                    if (worst.empty())
                        for (auto &cc : rep.cases)
                            worst.emplace_back(cc.label, 0.0);
                    for (std::size_t i = 0; i < rep.cases.size(); ++i)
                        worst[i].second = std::max(worst[i].second, rep.cases[i].err);
                    ++count;
                }
                for (auto &[lab, e] : worst)
                    b.add(label + " " + lab, e, tol);
            } catch (const std::exception &e) {
                b.fail(label, e);
            }
        }
    }
    b.r.samples = count;
}

template <class T> ChartPoint<T> continuity_base(ChartId c) {
    ChartPoint<T> p{c, {T(1) / 2, T(1) / 2, T(1) / 2, T(1) / 2}};
    if (c == ChartId::Racah2)
        p.c = {T(1), T(1), T(1), T(1) / 2};
    if (c == ChartId::Jacobi2D)
        p.c = {T(1), T(1), T(0), T(0)};
    return p;
}

inline constexpr int continuity_steps = 20;
inline constexpr int continuity_tail = 5;

template <class T> void continuity(Builder &b, const SuiteConfig &cfg) {
    int n_max = cfg.n_max.value_or(6);
    double tol = cfg.tol.value_or(1e-6);
    b.r.tol = tol;
    int count = 0;
    for (ChartId c : all_charts) {
        for (int i = 0; i < dims(c); ++i) {
            unsigned f = 1u << i;
            std::string label = std::string(to_string(c)) + " " + face_label(f);
            try {
                auto rep = continuity_probe(c, f, continuity_base<T>(c), continuity_steps, n_max, tol, continuity_tail);
                int m = static_cast<int>(rep.gaps.size());
                bool mono = true;
                for (int k = m - continuity_tail; k < m; ++k)
                    mono = mono && rep.gaps[k] <= rep.gaps[k - 1];
                std::string note = "ratio of last two gaps " + fmt(rep.gaps[m - 1] / rep.gaps[m - 2]) +
                                   (mono ? "" : "; gaps not monotone over last steps");
                double err = rep.gaps.back();
                if (!mono)
                    err = std::max(err, 2 * tol);
                b.add(label, err, tol, note);
                ++count;
            } catch (const std::exception &e) {
                b.fail(label, e);
            }
        }
    }
    b.r.samples = count;
}

template <class T> void transitions_suite(Builder &b, const SuiteConfig &cfg) {
    int samples = cfg.samples.value_or(50);
    int n_max = cfg.n_max.value_or(6);
    double tol = cfg.tol.value_or(default_tol<T>(1e-10));
    b.r.tol = tol;
    int count = 0;
    for (TransitionId tid : all_transitions) {
        for (Direction dir : {Direction::forward, Direction::backward}) {
            TransitionPair tp{tid, dir};
            std::string label = std::string(to_string(tid)) + (dir == Direction::forward ? " forward" : " backward");
            try {
                Rng rng(sub_seed(cfg.seed, 10 * static_cast<int>(tid) + static_cast<int>(dir)));
                std::array<double, 3> worst{0, 0, 0};
                int accepted = 0;
                long tries = 0;
                bool image_ok = true;
                while (accepted < samples && tries < max_rejections) {
                    ++tries;
                    auto p = draw_point<T>(source_chart(tp), rng);
                    if (interior_violation(p) || !transition_domain(tp, p).ok)
                        continue;
                    ++accepted;
                    auto rep = verify_transition(tp, p, n_max, tol);
                    for (std::size_t k = 0; k < rep.cases.size() && k < 3; ++k)
                        worst[k] = std::max(worst[k], rep.cases[k].err);
                    image_ok = image_ok && transition_domain(inverse(tp), transition(tp, p)).ok;
                }
                count += accepted;
                if (accepted < samples) {
                    b.add_bool(label + " sampling", false,
                               "accepted " + std::to_string(accepted) + " of " + std::to_string(tries) + " draws");
                    continue;
                }
                std::string note = std::to_string(accepted) + " points from " + std::to_string(tries) + " draws";
                b.add(label + " round trip", worst[0], tol, note);
                b.add(label + " Racah parameters", worst[1], tol);
                b.add(label + " unrescaled recurrence", worst[2], tol);
                b.add_bool(label + " image in inverse domain", image_ok);
            } catch (const std::exception &e) {
                b.fail(label, e);
            }
        }
    }
    int k = 0;
    for (auto &fc : face_correspondences()) {
        try {
            auto pts = sample_face<T>(source_chart(fc.pair), fc.source_face, sub_seed(cfg.seed, 100 + k++), 10);
            double worst = 0;
            bool faces_ok = true;
            int used = 0;
            for (auto &p : pts) {
                if (!transition_domain(fc.pair, p).ok)
                    continue;
                ++used;
                auto q = transition(fc.pair, p);
                auto fp = face_restriction<T>(p.chart, p.zero_set()).target;
                auto fq = face_restriction<T>(q.chart, q.zero_set()).target;
                faces_ok = faces_ok && q.zero_set() == fc.target_face && fp == fq;
                worst = std::max(worst, verify_transition(fc.pair, p, n_max, tol).max_rel_err);
            }
            faces_ok = faces_ok && used > 0;
            b.add_bool(std::string(fc.name) + " faces and families", faces_ok, std::to_string(used) + " points");
            b.add(std::string(fc.name) + " recurrence", worst, tol);
        } catch (const std::exception &e) {
            b.fail(fc.name, e);
        }
    }
    // composition on the triple overlap: reported, not gating
    try {
        Rng rng(sub_seed(cfg.seed, 999));
        TransitionPair t12{TransitionId::T12, Direction::forward}, t23{TransitionId::T23, Direction::forward},
            t13{TransitionId::T13, Direction::forward};
        double worst = 0;
        int got = 0;
        long tries = 0;
        while (got < samples && tries < max_rejections) {
            ++tries;
            auto t = draw_point<T>(ChartId::Racah1, rng);
            if (interior_violation(t) || !transition_domain(t12, t).ok || !transition_domain(t13, t).ok)
                continue;
            auto s = transition(t12, t);
            if (!transition_domain(t23, s).ok)
                continue;
            auto u1 = transition(t23, s), u2 = transition(t13, t);
            for (int i = 0; i < 4; ++i)
                worst = std::max(worst, to_double(rel_diff(u1.c[i], u2.c[i])));
            ++got;
        }
        b.add_info("T13 = T23 o T12 (exploratory)", worst, std::to_string(got) + " points");
    } catch (const std::exception &e) {
        b.r.details.push_back({"T13 = T23 o T12 (exploratory)", INFINITY, 0, true, false, e.what()});
    }
    b.r.samples = count;
}

// normalised moments of the Jacobi weight (1-x)^a (1+x)^b on (-1,1) via y=(1+x)/2 ~ Beta(b+1,a+1)
template <class T> std::vector<T> jacobi_moments(const T &al, const T &be, int count) {
    std::vector<T> ey(count, T(1));
    for (int j = 1; j < count; ++j)
        ey[j] = ey[j - 1] * (be + T(j)) / (al + be + T(j + 1));
    std::vector<T> mu(count, T(0));
    for (int k = 0; k < count; ++k) {
        T binom = T(1);
        for (int j = 0; j <= k; ++j) {
            T term = binom * ey[j];
            for (int i = 0; i < j; ++i)
                term *= 2;
            mu[k] += (k - j) % 2 ? -term : term;
            binom = binom * T(k - j) / T(j + 1);
        }
    }
    return mu;
}

template <class T> void moments_oracle(Builder &b, const SuiteConfig &cfg) {
    int n_max = cfg.n_max.value_or(6);
    double tol = cfg.tol.value_or(default_tol<T>(1e-9));
    b.r.tol = tol;
    const int m = 2 * n_max + 1;
    struct Item {
        std::string label;
        FamilyInstance<T> f;
        std::vector<T> mu;
    };
    std::vector<Item> items;
    {
        std::vector<T> mu(m, T(0));
        T dfact = T(1);
        for (int k = 0; 2 * k < m; ++k) {
            if (k > 0)
                dfact *= T(2 * k - 1);
            T v = dfact;
            for (int i = 0; i < k; ++i)
                v /= 2;
            mu[2 * k] = v;
        }
        items.push_back({"Hermite", FamilyInstance<T>::real(FamilyId::Hermite, {}), mu});
    }
    for (T al : {T(0), T(1) / 2, T(3)}) {
        std::vector<T> mu(m);
        for (int k = 0; k < m; ++k)
            mu[k] = pochhammer(al + T(1), k);
        items.push_back({"Laguerre alpha=" + fmt(to_double(al)), FamilyInstance<T>::real(FamilyId::Laguerre, {al}), mu});
    }
    for (auto ab : {std::pair<T, T>{T(0), T(0)}, std::pair<T, T>{T(1), T(2)}}) {
        items.push_back({"Jacobi (" + fmt(to_double(ab.first)) + "," + fmt(to_double(ab.second)) + ")",
                         FamilyInstance<T>::real(FamilyId::Jacobi, {ab.first, ab.second}),
                         jacobi_moments(ab.first, ab.second, m)});
    }
    for (auto &it : items) {
        try {
            auto rec = build_monic_sequence(recurrence_coeffs(it.f), n_max);
            auto mom = polys_from_moments(MomentSequence<T>{it.mu}, n_max);
            std::vector<T> scaled = it.mu;
            for (auto &v : scaled)
                v *= T(7);
            auto mom7 = polys_from_moments(MomentSequence<T>{scaled}, n_max);
            T w = T(0), w7 = T(0);
            for (int n = 0; n <= n_max; ++n)
                for (int k = 0; k <= n; ++k) {
                    T e = rel_diff(mom[n].coeffs[k], rec[n].coeffs[k]);
                    w = e > w ? e : w;
                    T e7 = rel_diff(mom7[n].coeffs[k], mom[n].coeffs[k]);
                    w7 = e7 > w7 ? e7 : w7;
                }
            b.add(it.label, to_double(w), tol);
            b.add(it.label + " moment scaling", to_double(w7), tol);
        } catch (const std::exception &e) {
            b.fail(it.label, e);
        }
    }
    b.r.samples = static_cast<int>(items.size());
}

// |a-b| against the size of the terms summed when evaluating the polynomial
template <class T> T eval_gap(const MonicPolynomial<T> &p, const T &x, const T &other) {
    using std::abs;
    T v = evaluate(p, x);
    T scale = T(1), xp = T(1);
    for (auto &c : p.coeffs) {
        T t = abs(c) * xp;
        scale = t > scale ? t : scale;
        xp *= abs(x);
    }
    return abs(v - other) / scale;
}

template <class T> FamilyInstance<T> random_racah(Rng &rng, double n_lo) {
    T al = T(rng.log_uniform(0.2, 5)), be = T(rng.log_uniform(0.2, 5));
    T N = T(rng.uniform(n_lo, n_lo + 6));
    T de = al + N + T(rng.log_uniform(0.1, 5));
    return FamilyInstance<T>::real(FamilyId::Racah, {al, be, N, de});
}

template <class T> FamilyInstance<T> random_wilson(Rng &rng, int wcase) {
    using Z = cx<T>;
    using std::conj;
    if (wcase == 1) {
        Z a(T(rng.uniform(0.2, 3)), T(rng.uniform(0.1, 3))), b(T(rng.uniform(0.2, 3)), T(rng.uniform(0.1, 3)));
        return FamilyInstance<T>::complex(FamilyId::Wilson, {a, b, conj(a), conj(b)});
    }
    if (wcase == 2) {
        Z a(T(rng.uniform(0.2, 3)), T(rng.uniform(0.1, 3)));
        double d = rng.uniform(0.1, 3);
        double c = rng.uniform(-d + 0.05, 3);
        return FamilyInstance<T>::complex(FamilyId::Wilson, {a, Z(T(c)), conj(a), Z(T(d))});
    }
    return FamilyInstance<T>::complex(FamilyId::Wilson, {Z(T(rng.uniform(0.1, 3))), Z(T(rng.uniform(0.1, 3))),
                                                         Z(T(rng.uniform(0.1, 3))), Z(T(rng.uniform(0.1, 3)))});
}

template <class T> void hyp_oracle(Builder &b, const SuiteConfig &cfg) {
    int samples = cfg.samples.value_or(20);
    int n_max = cfg.n_max.value_or(6);
    double tol = cfg.tol.value_or(default_tol<T>(1e-9));
    b.r.tol = tol;
    Rng rng(cfg.seed);
    double wr = 0, ww = 0;
    for (int i = 0; i < samples; ++i) {
        try {
            auto f = random_racah<T>(rng, n_max);
            auto polys = build_monic_sequence(recurrence_coeffs(f), n_max);
            auto p = racah_params(f);
            T g = p.gamma() + p.delta + T(1);
            for (int j = 0; j < 5; ++j) {
                T y = T(rng.uniform(0, to_double(p.N)));
                T x = y * (y + g);
                for (int n = 0; n <= n_max; ++n)
                    wr = std::max(wr, to_double(eval_gap(polys[n], x, monic_via_hyp(f, x, n))));
            }
        } catch (const std::exception &e) {
            b.fail("Racah instance " + std::to_string(i), e);
        }
    }
    for (int i = 0; i < samples; ++i) {
        try {
            auto f = random_wilson<T>(rng, 1 + i % 3);
            auto polys = build_monic_sequence(recurrence_coeffs(f), n_max);
            for (int j = 0; j < 5; ++j) {
                T x = T(rng.uniform(-2, 10));
                for (int n = 0; n <= n_max; ++n)
                    ww = std::max(ww, to_double(eval_gap(polys[n], x, monic_via_hyp(f, x, n))));
            }
        } catch (const std::exception &e) {
            b.fail("Wilson instance " + std::to_string(i), e);
        }
    }
    b.add("Racah 4F3 vs recurrence", wr, tol, std::to_string(samples) + " instances x 5 points");
    b.add("Wilson 4F3 vs recurrence", ww, tol, std::to_string(samples) + " instances x 5 points");
    b.r.samples = 2 * samples;
}

template <class T> void wilson_reality(Builder &b, const SuiteConfig &cfg) {
    using std::abs;
    int samples = cfg.samples.value_or(20);
    int n_max = cfg.n_max.value_or(8);
    double tol_im = cfg.tol.value_or(default_tol<T>(1e-10));
    double tol_sym = cfg.tol.value_or(default_tol<T>(1e-12));
    b.r.tol = tol_im;
    Rng rng(cfg.seed);
    for (int wcase = 1; wcase <= 3; ++wcase) {
        std::string tag = "case " + std::to_string(wcase);
        double im = 0, sym = 0;
        bool pos = true, verdict = true;
        std::string why;
        for (int i = 0; i < samples; ++i) {
            try {
                auto f = random_wilson<T>(rng, wcase);
                auto p = wilson_params(f);
                auto v = positivity_check(f);
                bool label_ok = v.case_label && static_cast<int>(*v.case_label) == wcase - 1;
                verdict = verdict && v.ok && label_ok;
                for (int n = 0; n <= n_max; ++n) {
                    auto [B, C] = wilson_coeffs_complex(p, n);
                    im = std::max(im, to_double(abs(B.imag()) / (T(1) + abs(B.real()))));
                    im = std::max(im, to_double(abs(C.imag()) / (T(1) + abs(C.real()))));
                }
                std::array<cx<T>, 4> z = {p.a, p.b, p.c, p.d};
                std::array<int, 4> perm = {0, 1, 2, 3};
                std::vector<std::pair<T, T>> base;
                for (int n = 0; n <= n_max; ++n)
                    base.push_back(wilson_coeffs(p, n));
                while (std::next_permutation(perm.begin(), perm.end())) {
                    WilsonParams<T> q{z[perm[0]], z[perm[1]], z[perm[2]], z[perm[3]]};
                    for (int n = 0; n <= n_max; ++n)
                        sym = std::max(sym, to_double(pair_gap(wilson_coeffs(q, n), base[n], n)));
                }
                auto rc = recurrence_coeffs(f);
                for (int n = 1; n <= n_probe; ++n)
                    if (!(rc.C(n) > T(0))) {
                        pos = false;
                        why = "C_" + std::to_string(n) + " <= 0";
                    }
            } catch (const std::exception &e) {
                b.fail(tag + " instance " + std::to_string(i), e);
            }
        }
        if (wcase < 3)
            b.add(tag + " imaginary parts", im, tol_im);
        b.add(tag + " permutation symmetry", sym, tol_sym);
        b.add_bool(tag + " C_n > 0 for n <= 32", pos, why);
        b.add_bool(tag + " positivity verdict", verdict);
    }
    b.r.samples = 3 * samples;
}

template <class T> void limits(Builder &b, const SuiteConfig &cfg) {
    using std::sqrt;
    int n_max = cfg.n_max.value_or(5);
    double tol = cfg.tol.value_or(1e-4);
    b.r.tol = tol;
    const T two = T(2);
    using Pair = std::pair<T, T>;
    using Fn = std::function<RecurrenceCoeffs<T>(const T &)>;
    auto herm = [](const T &rho) {
        return rescale_coeffs(recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Hermite, {})), {rho, T(0)});
    };
    struct Lim {
        std::string name;
        Fn approx;
        RecurrenceCoeffs<T> target;
    };
    std::vector<Lim> lims;
    lims.push_back({"continuous dual Hahn -> Laguerre (a,b)=(1,2), c -> inf",
                    [](const T &L) {
                        RecurrenceCoeffs<T> rc;
                        rc.B = [L](int n) { return cdh_direct_coeffs(T(1), T(2), L, n).first; };
                        rc.C = [L](int n) { return cdh_direct_coeffs(T(1), T(2), L, n).second; };
                        return rescale_coeffs(rc, {T(1) / L, T(0)});
                    },
                    recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Laguerre, {T(2)}))});
    lims.push_back({"Jacobi -> Laguerre alpha=1, beta -> inf",
                    [two](const T &L) {
                        return rescale_coeffs(recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Jacobi, {T(1), L})),
                                              {-L / two, T(-1)});
                    },
                    recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Laguerre, {T(1)}))});
    lims.push_back({"Jacobi -> Hermite alpha=beta -> inf",
                    [](const T &L) {
                        return rescale_coeffs(recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Jacobi, {L, L})),
                                              {sqrt(L), T(0)});
                    },
                    herm(T(1))});
    lims.push_back({"Laguerre -> Hermite alpha -> inf",
                    [two](const T &L) {
                        return rescale_coeffs(recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Laguerre, {L})),
                                              {T(1) / sqrt(two * L), -L});
                    },
                    herm(T(1))});
    lims.push_back({"rescaled Jacobi -> Hermite corner, (alpha,beta)=(L,2L)",
                    [two](const T &L) {
                        ChartPoint<T> p{ChartId::Jacobi2D, {T(1) / L, T(1) / (two * L), T(0), T(0)}};
                        auto cf = chart_to_family(p);
                        return rescale_coeffs(recurrence_coeffs(cf.family), cf.scale);
                    },
                    herm(two * sqrt(two))});
    lims.push_back({"Hahn (a, 2a, 3a) -> Hermite, a -> inf",
                    [](const T &a) {
                        const T bb = T(2), N = T(3);
                        T rho = pow_half(bb + 1, 3) / (sqrt(a) * sqrt(bb) * sqrt(N) * sqrt(bb + N + 1));
                        T sig = -a * (a + 1) * N / (a * bb + a + 2);
                        return rescale_coeffs(
                            recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Hahn, {a, a * bb, a * N})), {rho, sig});
                    },
                    herm(sqrt(two))});
    lims.push_back({"Meixner (beta, 1/2) -> Hermite, beta -> inf",
                    [](const T &be) {
                        const T c = T(1) / 2;
                        T rho = (1 - c) / (sqrt(c) * sqrt(be - 1));
                        T sig = -be * c / (1 - c);
                        return rescale_coeffs(recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Meixner, {be, c})),
                                              {rho, sig});
                    },
                    herm(sqrt(two))});
    for (auto &lim : lims) {
        try {
            std::vector<double> errs;
            for (int e = 1; e <= 6; ++e) {
                T L = T(1);
                for (int k = 0; k < e; ++k)
                    L *= 10;
                auto rc = lim.approx(L);
                T w = T(0);
                for (int n = 0; n <= n_max; ++n) {
                    Pair a{rc.B(n), n ? rc.C(n) : T(0)}, t{lim.target.B(n), n ? lim.target.C(n) : T(0)};
                    T g = pair_gap(a, t, n);
                    w = g > w ? g : w;
                }
                errs.push_back(to_double(w));
            }
            bool mono = errs[5] <= errs[4] && errs[4] <= errs[3];
            std::string note = "ladder errors";
            for (double e : errs)
                note += " " + fmt(e);
            if (!mono)
                note += "; not monotone over the last 3 rungs";
            b.add(lim.name, mono ? errs.back() : std::max(errs.back(), 2 * tol), tol, note);
        } catch (const std::exception &e) {
            b.fail(lim.name, e);
        }
    }
    b.r.samples = static_cast<int>(lims.size());
}

template <class T> void favard_scan(Builder &b, const SuiteConfig &cfg) {
    int samples = cfg.samples.value_or(50);
    b.r.tol = 0;
    Rng rng(cfg.seed);
    for (int N = 2; N <= 8; ++N) {
        bool ok = true;
        std::string why;
        for (int i = 0; i < samples; ++i) {
            T al = T(rng.log_uniform(0.1, 10)), be = T(rng.log_uniform(0.1, 10));
            T de = al + T(N) + T(rng.log_uniform(0.01, 10));
            auto f = FamilyInstance<T>::real(FamilyId::Racah, {al, be, T(N), de});
            if (!positivity_check(f).ok) {
                ok = false;
                why = "verdict rejected a region point";
            }
            auto p = racah_params(f);
            for (int n = 1; n <= N; ++n)
                if (!(racah_coeffs(p, n).second > T(0))) {
                    ok = false;
                    why = "C_" + std::to_string(n) + " <= 0";
                }
            if (racah_coeffs(p, N + 1).second != T(0)) {
                ok = false;
                why = "C_{N+1} != 0";
            }
        }
        b.add_bool("N=" + std::to_string(N), ok, why);
    }
    b.r.samples = 7 * samples;
}

template <class T> void jacobi2d(Builder &b, const SuiteConfig &cfg) {
    using std::sqrt;
    int samples = cfg.samples.value_or(100);
    int n_max = cfg.n_max.value_or(8);
    double tol = cfg.tol.value_or(default_tol<T>(1e-10));
    b.r.tol = tol;
    const ChartId J = ChartId::Jacobi2D;
    try {
        double worst = 0;
        for (auto &p : sample_interior<T>(J, cfg.seed, samples)) {
            auto cf = chart_to_family(p);
            auto rc = rescale_coeffs(recurrence_coeffs(cf.family), cf.scale);
            for (int n = 0; n <= n_max; ++n)
                worst = std::max(worst, to_double(pair_gap(chart_coeffs(p, n), std::pair<T, T>{rc.B(n), n ? rc.C(n) : T(0)}, n)));
        }
        b.add("interior: closed form vs rescaled Jacobi", worst, tol);
    } catch (const std::exception &e) {
        b.fail("interior", e);
    }
    for (unsigned f : chart_faces(J)) {
        try {
            double worst = 0;
            for (auto &p : sample_face<T>(J, f, sub_seed(cfg.seed, f), 10))
                worst = std::max(worst, verify_face(J, f, p, n_max, tol).max_rel_err);
            b.add("face " + face_label(f), worst, tol);
        } catch (const std::exception &e) {
            b.fail("face " + face_label(f), e);
        }
    }
    try {
        ChartPoint<T> corner{J, {T(0), T(0), T(0), T(0)}};
        const T two = T(2);
        auto herm = rescale_coeffs(recurrence_coeffs(FamilyInstance<T>::real(FamilyId::Hermite, {})),
                                   AffineScale<T>{two * sqrt(two), T(0)});
        T w = T(0);
        for (int n = 0; n <= n_max; ++n)
            w = std::max(w, pair_gap(chart_coeffs(corner, n), std::pair<T, T>{herm.B(n), herm.C(n)}, n));
        b.add("corner: Hermite rescaled by 2^(3/2)", to_double(w), tol);
        auto rep = continuity_probe(J, 3u, continuity_base<T>(J), continuity_steps, n_max, 1e-6, continuity_tail);
        b.add("continuity toward the corner", rep.gaps.back(), 1e-6,
              "ratio of last two gaps " + fmt(rep.gaps[continuity_steps - 1] / rep.gaps[continuity_steps - 2]));
    } catch (const std::exception &e) {
        b.fail("corner", e);
    }
    b.r.samples = samples;
}

template <class T> SuiteReport run_typed(const std::string &name, const SuiteConfig &cfg) {
    Builder b;
    b.r.suite = name;
    b.r.seed = cfg.seed;
    b.r.backend = cfg.backend;
    if (name == "chart-consistency")
        chart_consistency<T>(b, cfg);
    else if (name == "boundary-faces")
        boundary_faces<T>(b, cfg);
    else if (name == "continuity")
        continuity<T>(b, cfg);
    else if (name == "transitions")
        transitions_suite<T>(b, cfg);
    else if (name == "moments-oracle")
        moments_oracle<T>(b, cfg);
    else if (name == "hyp-oracle")
        hyp_oracle<T>(b, cfg);
    else if (name == "wilson-reality")
        wilson_reality<T>(b, cfg);
    else if (name == "limits")
        limits<T>(b, cfg);
    else if (name == "favard-scan")
        favard_scan<T>(b, cfg);
    else if (name == "jacobi2d")
        jacobi2d<T>(b, cfg);
    else
        throw Error(ErrorKind::UnknownSuite, "unknown suite: " + name);
    return b.finish();
}

json num(double v) {
    if (std::isfinite(v))
        return v;
    return nullptr;
}

} // namespace

SuiteReport run_suite(const std::string &name, const SuiteConfig &cfg) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw Error(ErrorKind::UnknownSuite, "unknown suite: " + name);
    return cfg.backend == Backend::binary64 ? run_typed<double>(name, cfg) : run_typed<hp>(name, cfg);
}

std::string to_json(const SuiteReport &r, int indent) {
    json d = json::array();
    for (auto &c : r.details) {
        json e = {{"label", c.label}, {"err", num(c.err)}, {"tol", c.tol}, {"pass", c.pass}, {"gating", c.gating}};
        if (!c.note.empty())
            e["note"] = c.note;
        d.push_back(e);
    }
    json j = {{"schema", 1},
              {"suite", r.suite},
              {"samples", r.samples},
              {"max_rel_err", num(r.max_rel_err)},
              {"tol", r.tol},
              {"pass", r.pass},
              {"seed", r.seed},
              {"backend", to_string(r.backend)},
              {"details", d}};
    return j.dump(indent);
}

} // namespace askey
