#include "doctest.h"

#include "askey/harness.hpp"
#include "textbook.hpp"

#include <optional>

using namespace askey;
using Z = std::complex<double>;

namespace {

using F = FamilyInstance<double>;

double max_gap_vs_textbook(const F &f, int n_max) {
    auto rc = recurrence_coeffs(f);
    double w = 0;
    for (int n = 0; n <= n_max; ++n)
        w = std::max(w, oracle::gap({rc.B(n), n ? rc.C(n) : 0.0}, *oracle::textbook(f, n), n));
    return w;
}

} // namespace

TEST_CASE("family table") {
    CHECK(all_families.size() == 13);
    std::vector<int> want = {4, 4, 3, 4, 3, 3, 2, 2, 2, 2, 1, 1, 0};
    for (std::size_t i = 0; i < all_families.size(); ++i)
        CHECK(arity(all_families[i]) == want[i]);
    CHECK(family_from_string("continuous-dual-hahn") == FamilyId::ContinuousDualHahn);
    CHECK(family_from_string("Meixner_Pollaczek") == FamilyId::MeixnerPollaczek);
    CHECK_FALSE(family_from_string("bessel").has_value());
    CHECK(param_names(FamilyId::Racah) == std::vector<std::string>{"alpha", "beta", "N", "delta"});
}

TEST_CASE("Racah a_n and c_n by hand") {
    RacahParams<double> p{1, 1, 2, 4};
    auto [a0, c0] = racah_an_cn(p, 0);
    CHECK(a0 == doctest::Approx(6));
    CHECK(c0 == 0);
    CHECK(racah_an_cn(p, 1).second == doctest::Approx(1.2));
    CHECK(p.gamma() == -3);
}

TEST_CASE("Racah denominator zero") {
    RacahParams<double> p{-0.5, -0.5, 3, 4};
    try {
        racah_an_cn(p, 0);
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NonFiniteCoefficient);
    }
}

TEST_CASE("Wilson a_n and c_n for a conjugate-pair example") {
    WilsonParams<double> p{Z(1), Z(1, -1), Z(1), Z(1, 1)};
    CHECK(wilson_an_cn(p, 0).second == Z(0));
    auto [B, C] = wilson_coeffs_complex(p, 1);
    CHECK(std::abs(B.imag()) < 1e-14);
    CHECK(std::abs(C.imag()) < 1e-14);
    CHECK(C.real() > 0);
}

TEST_CASE("direct families") {
    auto h = recurrence_coeffs(F::real(FamilyId::Hermite, {}));
    CHECK(h.B(5) == 0);
    CHECK(h.C(5) == 2.5);
    auto l = recurrence_coeffs(F::real(FamilyId::Laguerre, {0.75}));
    CHECK(l.B(3) == doctest::Approx(7.75));
    CHECK(l.C(3) == doctest::Approx(3 * 3.75));
    auto j = recurrence_coeffs(F::real(FamilyId::Jacobi, {0, 0}));
    CHECK(j.B(1) == doctest::Approx(0));
    CHECK(j.C(1) == doctest::Approx(1.0 / 3));
    CHECK(max_gap_vs_textbook(F::real(FamilyId::Jacobi, {1.5, 0.25}), 10) < 1e-14);
}

TEST_CASE("derived families agree with textbook recurrences") {
    struct Item {
        F f;
        int n_max;
    };
    std::vector<Item> items = {
        {F::real(FamilyId::Hahn, {0.7, 1.9, 9}), 8},
        {F::real(FamilyId::Hahn, {3, 0.4, 5.5}), 5},
        {F::real(FamilyId::DualHahn, {0.6, 2.5, 7}), 7},
        {F::real(FamilyId::DualHahn, {4, 0.3, 12}), 10},
        {F::real(FamilyId::Meixner, {2.5, 0.3}), 10},
        {F::real(FamilyId::Meixner, {1.2, 0.85}), 10},
        {F::real(FamilyId::Krawtchouk, {0.3, 8}), 8},
        {F::real(FamilyId::Krawtchouk, {0.8, 5}), 5},
        {F::real(FamilyId::Charlier, {0.4}), 10},
        {F::real(FamilyId::Charlier, {6}), 10},
        {F::real(FamilyId::MeixnerPollaczek, {0.8, 0.6}), 10},
        {F::real(FamilyId::MeixnerPollaczek, {2.0, 2.4}), 10},
        {F::complex(FamilyId::ContinuousHahn, {Z(0.7, 0.4), Z(1.3, -0.9), Z(0.7, -0.4), Z(1.3, 0.9)}), 8},
        {F::complex(FamilyId::ContinuousHahn, {Z(2, 1.5), Z(0.5, 1), Z(2, -1.5), Z(0.5, -1)}), 8},
    };
    // continuous dual Hahn parameters reachable from the b4 = 0 face of the second Wilson chart
    for (auto b : {std::array<double, 4>{1, 1, 1, 0}, {0.5, 0.3, 2, 0}, {2, 0.7, 0.4, 0}}) {
        auto img = face_restriction<double>(ChartId::Wilson2, 8u).image(ChartPoint<double>{ChartId::Wilson2, b});
        REQUIRE(img.family.id == FamilyId::ContinuousDualHahn);
        items.push_back({img.family, 8});
    }
    for (auto &it : items) {
        CAPTURE(to_string(it.f.id));
        CAPTURE(it.f.re(0));
        CHECK(max_gap_vs_textbook(it.f, it.n_max) < 1e-9);
    }
}

TEST_CASE("n_valid follows N") {
    CHECK(recurrence_coeffs(F::real(FamilyId::Hahn, {1, 1, 6.5})).n_valid == 6);
    CHECK(recurrence_coeffs(F::real(FamilyId::Krawtchouk, {0.5, 4})).n_valid == 4);
    CHECK(recurrence_coeffs(F::real(FamilyId::Racah, {1, 1, 3, 6})).n_valid == 3);
    CHECK(recurrence_coeffs(F::real(FamilyId::Charlier, {1})).n_valid == -1);
}

TEST_CASE("derived family outside its face") {
    try {
        recurrence_coeffs(F::real(FamilyId::Charlier, {-1}));
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::OutOfDomain);
    }
    CHECK_THROWS_AS(recurrence_coeffs(F::real(FamilyId::Meixner, {2, 1.5})), Error);
}

TEST_CASE("Meixner from three Racah charts") {
    // the Meixner faces of all three charts land on the same monic recurrence
    std::vector<std::pair<ChartPoint<double>, unsigned>> faces = {
        {{ChartId::Racah1, {0.4, 0, 0.3, 0.7}}, 2u},
        {{ChartId::Racah2, {0.3, 0.5, 0.8, 0}}, 8u},
        {{ChartId::Racah3, {0.6, 0.2, 0, 0.9}}, 4u},
    };
    for (auto &[p, face] : faces) {
        auto rec = face_restriction<double>(p.chart, face);
        REQUIRE(rec.target == FamilyId::Meixner);
        auto img = rec.image(p);
        auto mono = unrescale_coeffs(chart_recurrence(p), img.scale);
        for (int n = 0; n <= 8; ++n) {
            auto want = oracle::meixner(img.family.re(0), img.family.re(1), n);
            CHECK(oracle::gap({mono.B(n), mono.C(n)}, want, n) < 1e-10);
        }
    }
}

TEST_CASE("terminating hypergeometric sums") {
    CHECK(hyp_terminating<Z>(HypKind::F21, {Z(0), Z(2)}, {Z(3)}, Z(0.5), 0) == Z(1));
    auto v = hyp_terminating<Z>(HypKind::F21, {Z(-1), Z(2)}, {Z(3)}, Z(0.5), 1);
    CHECK(std::abs(v - Z(1 - 2 * 0.5 / 3)) < 1e-15);
    // x = 0 gives y = 0 and the -y factor kills every k >= 1 term
    auto r = hyp_terminating<Z>(HypKind::F43, {Z(-1), Z(4), Z(0), Z(2)}, {Z(2), Z(6), Z(-2)}, Z(1), 1);
    CHECK(std::abs(r - Z(1)) < 1e-15);
    try {
        hyp_terminating<Z>(HypKind::F21, {Z(-3), Z(1)}, {Z(-1)}, Z(1), 3);
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::PoleInLowerParameter);
    }
}

TEST_CASE("monic polynomials from the 4F3 forms") {
    auto rac = F::real(FamilyId::Racah, {1, 1, 2, 4});
    CHECK(monic_via_hyp(rac, 3.5, 0) == doctest::Approx(1));
    for (double x : {0.0, 1.0, 7.5})
        CHECK(monic_via_hyp(rac, x, 1) == doctest::Approx(x - 6));
    auto wil = F::complex(FamilyId::Wilson, {Z(1), Z(1, -1), Z(1), Z(1, 1)});
    auto ps = build_monic_sequence(recurrence_coeffs(wil), 4);
    for (double x : {-0.5, 0.3, 2.0, 9.0})
        for (int n = 0; n <= 4; ++n)
            CHECK(monic_via_hyp(wil, x, n) == doctest::Approx(evaluate(ps[n], x)).epsilon(1e-11));
    // leading coefficient: p(x+1) - p(x) for n = 1
    CHECK(monic_via_hyp(wil, 5.0, 1) - monic_via_hyp(wil, 4.0, 1) == doctest::Approx(1));
}

TEST_CASE("positivity verdicts") {
    auto ok = positivity_check(F::real(FamilyId::Racah, {1, 1, 2, 4}));
    CHECK(ok.ok);
    CHECK(ok.case_label == PositivityCase::RacahRegion18);
    CHECK_FALSE(positivity_check(F::real(FamilyId::Racah, {1, 1, 2, 2})).ok);
    auto w = positivity_check(F::complex(FamilyId::Wilson, {Z(1), Z(1, -1), Z(1), Z(1, 1)}));
    CHECK(w.ok);
    CHECK(w.case_label == PositivityCase::WilsonCase1);
    auto w2 = positivity_check(F::complex(FamilyId::Wilson, {Z(0.5, 1), Z(-0.2), Z(0.5, -1), Z(0.9)}));
    CHECK(w2.ok);
    CHECK(w2.case_label == PositivityCase::WilsonCase2);
    auto w3 = positivity_check(F::complex(FamilyId::Wilson, {Z(0.5), Z(1), Z(1.5), Z(2)}));
    CHECK(w3.ok);
    CHECK(w3.case_label == PositivityCase::WilsonCase3);
    auto bad = positivity_check(F::complex(FamilyId::Wilson, {Z(-0.5, 1), Z(1), Z(-0.5, -1), Z(2)}));
    CHECK_FALSE(bad.ok);
    auto m = positivity_check(F::real(FamilyId::Meixner, {2, 0.5}));
    CHECK(m.ok);
    CHECK(m.case_label == PositivityCase::Unconstrained);
}

TEST_CASE("property: Wilson symmetry and reality") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Z a(rng.uniform(0.1, 2), rng.uniform(0.1, 2)), b(rng.uniform(0.1, 2), rng.uniform(0.1, 2));
        WilsonParams<double> p{a, b, std::conj(a), std::conj(b)};
        WilsonParams<double> q{std::conj(b), a, b, std::conj(a)};
        for (int n = 0; n <= 6; ++n) {
            auto [B, C] = wilson_coeffs_complex(p, n);
            CHECK(std::abs(B.imag()) <= 1e-10 * (1 + std::abs(B.real())));
            CHECK(std::abs(C.imag()) <= 1e-10 * (1 + std::abs(C.real())));
            CHECK(coeff_gap(wilson_coeffs(p, n), wilson_coeffs(q, n)) < 1e-12);
            if (n > 0)
                CHECK(C.real() > 0);
        }
    }
}

TEST_CASE("property: Favard positivity on the Racah region") {
    Rng rng(9);
    for (int N = 2; N <= 6; ++N)
        for (int trial = 0; trial < 20; ++trial) {
            double al = rng.log_uniform(0.1, 10), be = rng.log_uniform(0.1, 10);
            RacahParams<double> p{al, be, double(N), al + N + rng.log_uniform(0.01, 10)};
            for (int n = 1; n <= N; ++n)
                CHECK(racah_coeffs(p, n).second > 0);
            CHECK(racah_coeffs(p, N + 1).second == 0);
        }
}

TEST_CASE("high precision derived family matches textbook at 1e-30") {
    using FH = FamilyInstance<hp>;
    auto f = FH::real(FamilyId::Hahn, {hp(7) / 10, hp(19) / 10, hp(9)});
    auto rc = recurrence_coeffs(f);
    for (int n = 0; n <= 6; ++n) {
        auto want = oracle::hahn<hp>(hp(7) / 10, hp(19) / 10, hp(9), n);
        CHECK(to_double(rel_diff(rc.B(n), want.first)) < 1e-30);
        if (n)
            CHECK(to_double(rel_diff(rc.C(n), want.second)) < 1e-30);
    }
}
