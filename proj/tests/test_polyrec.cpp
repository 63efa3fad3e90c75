#include "doctest.h"

#include "askey/harness.hpp"

#include <random>

using namespace askey;

namespace {

RecurrenceCoeffs<double> hermite_rc() {
    return {[](int) { return 0.0; }, [](int n) { return n / 2.0; }};
}

void check_coeffs(const MonicPolynomial<double> &p, std::vector<double> want) {
    REQUIRE(p.coeffs.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k)
        CHECK(p.coeffs[k] == doctest::Approx(want[k]).epsilon(1e-14));
}

} // namespace

TEST_CASE("three-term recurrence builds monic Hermite") {
    auto ps = build_monic_sequence(hermite_rc(), 3);
    REQUIRE(ps.size() == 4);
    check_coeffs(ps[0], {1});
    check_coeffs(ps[2], {-0.5, 0, 1});
    check_coeffs(ps[3], {0, -1.5, 0, 1});
    CHECK(build_monic_sequence(hermite_rc(), 0).size() == 1);
}

TEST_CASE("evaluate") {
    auto ps = build_monic_sequence(hermite_rc(), 3);
    CHECK(evaluate(ps[2], 1.0) == doctest::Approx(0.5));
    CHECK(evaluate(ps[0], 123.0) == 1.0);
    CHECK(evaluate(ps[3], 2.0) == doctest::Approx(5.0));
}

TEST_CASE("non-finite coefficient is reported") {
    RecurrenceCoeffs<double> rc{[](int n) { return n == 1 ? NAN : 0.0; }, [](int) { return 1.0; }};
    try {
        build_monic_sequence(rc, 3);
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NonFiniteCoefficient);
    }
}

TEST_CASE("n_max beyond n_valid is rejected") {
    RecurrenceCoeffs<double> rc = hermite_rc();
    rc.n_valid = 2;
    CHECK_THROWS_AS(build_monic_sequence(rc, 3), Error);
    CHECK_NOTHROW(build_monic_sequence(rc, 2));
}

TEST_CASE("rescale and unrescale") {
    RecurrenceCoeffs<double> rc{[](int n) { return double(n); }, [](int) { return 1.0; }};
    auto r = rescale_coeffs(rc, {2.0, 3.0});
    for (int n = 0; n < 5; ++n) {
        CHECK(r.B(n) == 2.0 * n + 6);
        CHECK(r.C(n) == 4.0);
    }
    auto back = unrescale_coeffs(r, {2.0, 3.0});
    CHECK(back.B(4) == 4.0);
    auto id = rescale_coeffs(rc, {1.0, 0.0});
    CHECK(id.B(3) == 3.0);
    CHECK(id.C(3) == 1.0);
}

TEST_CASE("Laguerre under the Hermite-limit scaling") {
    const double al = 7.0;
    auto lag = recurrence_coeffs(FamilyInstance<double>::real(FamilyId::Laguerre, {al}));
    auto r = rescale_coeffs(lag, {1 / std::sqrt(2 * al), -al});
    for (int n = 0; n < 6; ++n) {
        CHECK(r.B(n) == doctest::Approx((2 * n + 1) / std::sqrt(2 * al)).epsilon(1e-14));
        CHECK(r.C(n) == doctest::Approx(n * (n + al) / (2 * al)).epsilon(1e-14));
    }
}

TEST_CASE("property: rescaled sequence is rho^n p_n(x/rho - sigma)") {
    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> u(-2, 2), pos(0.2, 3);
    for (int trial = 0; trial < 50; ++trial) {
        double b0 = u(g), b1 = u(g), c0 = pos(g), c1 = pos(g);
        RecurrenceCoeffs<double> rc{[=](int n) { return b0 + b1 * n; }, [=](int n) { return c0 * n + c1 * n * n; }};
        double rho = u(g);
        if (std::abs(rho) < 0.1)
            rho = 0.7;
        double sigma = u(g), x = u(g);
        auto p = build_monic_sequence(rc, 8);
        auto q = build_monic_sequence(rescale_coeffs(rc, {rho, sigma}), 8);
        for (int n = 0; n <= 8; ++n) {
            double want = std::pow(rho, n) * evaluate(p[n], x / rho - sigma);
            double got = evaluate(q[n], x);
            CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
            CHECK(q[n].coeffs.back() == 1.0);
        }
    }
}

TEST_CASE("property: unrescale inverts rescale") {
    std::mt19937_64 g(12);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::pair<double, double> bc{u(g), std::abs(u(g))};
        AffineScale<double> s{u(g), u(g)};
        if (std::abs(s.rho) < 0.05)
            s.rho = 1.5;
        auto a = unrescale_pair(rescale_pair(bc, s), s);
        auto b = rescale_pair(unrescale_pair(bc, s), s);
        CHECK(coeff_gap(a, bc) <= 1e-13);
        CHECK(coeff_gap(b, bc) <= 1e-13);
    }
}

TEST_CASE("compose of affine scales") {
    AffineScale<double> a{2, 1}, b{3, -4};
    RecurrenceCoeffs<double> rc{[](int n) { return 0.5 * n; }, [](int n) { return 1.0 + n; }};
    auto two_step = rescale_coeffs(rescale_coeffs(rc, a), b);
    auto one_step = rescale_coeffs(rc, compose(a, b));
    for (int n = 0; n < 5; ++n) {
        CHECK(two_step.B(n) == doctest::Approx(one_step.B(n)));
        CHECK(two_step.C(n) == doctest::Approx(one_step.C(n)));
    }
}

TEST_CASE("Hankel determinants") {
    CHECK(hankel_determinant(MomentSequence<double>{{1, 1, 2}}, 2) == doctest::Approx(1));
    CHECK(hankel_determinant(MomentSequence<double>{{1, 0, 0.5}}, 2) == doctest::Approx(0.5));
    CHECK(hankel_determinant(MomentSequence<double>{{3, 7}}, 0) == 1);
    CHECK(hankel_determinant(MomentSequence<hp>{{hp(1), hp(1), hp(2)}}, 2) == hp(1));
}

TEST_CASE("polynomials from moments") {
    auto lag = polys_from_moments(MomentSequence<double>{{1, 1, 2, 6, 24}}, 2);
    check_coeffs(lag[2], {2, -4, 1});
    auto one = polys_from_moments(MomentSequence<double>{{2, 3}}, 1);
    check_coeffs(one[1], {-1.5, 1});
    auto her = polys_from_moments(MomentSequence<double>{{1, 0, 0.5, 0, 0.75}}, 2);
    check_coeffs(her[2], {-0.5, 0, 1});
    auto rec = build_monic_sequence(hermite_rc(), 2);
    check_coeffs(her[2], rec[2].coeffs);
}

TEST_CASE("singular Hankel matrix") {
    try {
        polys_from_moments(MomentSequence<double>{{1, 1, 1, 1, 1}}, 2);
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::SingularHankel);
    }
}

TEST_CASE("moment polynomials are invariant under scaling the moments") {
    MomentSequence<double> m{{1, 1, 2, 6, 24, 120, 720}};
    MomentSequence<double> m5 = m;
    for (auto &v : m5.mu)
        v *= 5;
    auto a = polys_from_moments(m, 3), b = polys_from_moments(m5, 3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(a[n].coeffs[k] == doctest::Approx(b[n].coeffs[k]).epsilon(1e-12));
}
