#include "doctest.h"

#include "askey/harness.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace askey;

namespace {

ChartPoint<double> at(ChartId c, double a, double b, double d, double e) { return {c, {a, b, d, e}}; }

constexpr TransitionPair t12f{TransitionId::T12, Direction::forward};
constexpr TransitionPair t12b{TransitionId::T12, Direction::backward};
constexpr TransitionPair t23f{TransitionId::T23, Direction::forward};
constexpr TransitionPair t13f{TransitionId::T13, Direction::forward};

bool has_clause(const DomainVerdict &v, const std::string &c) {
    return std::find(v.failed.begin(), v.failed.end(), c) != v.failed.end();
}

template <class T> std::vector<ChartPoint<T>> in_domain(TransitionPair tp, std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<ChartPoint<T>> out;
    while (static_cast<int>(out.size()) < count) {
        auto p = draw_point<T>(source_chart(tp), rng);
        if (!interior_violation(p) && transition_domain(tp, p).ok)
            out.push_back(p);
    }
    return out;
}

} // namespace

TEST_CASE("chart pairs") {
    CHECK(source_chart(t12f) == ChartId::Racah1);
    CHECK(target_chart(t12f) == ChartId::Racah2);
    CHECK(source_chart(t12b) == ChartId::Racah2);
    CHECK(target_chart(t13f) == ChartId::Racah3);
    CHECK(inverse(t12f).direction == Direction::backward);
}

TEST_CASE("second chart to first chart by hand") {
    auto t = transition(t12b, at(ChartId::Racah2, 1, 1, 1, 0.5));
    CHECK(t.chart == ChartId::Racah1);
    CHECK(t.c[0] == doctest::Approx(0.5));
    CHECK(t.c[1] == doctest::Approx(0.5));
    CHECK(t.c[2] == doctest::Approx(0.8));
    CHECK(t.c[3] == doctest::Approx(1));

    auto s = transition(t12f, t);
    CHECK(s.c[0] == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.c[1] == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.c[2] == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.c[3] == doctest::Approx(0.5).epsilon(1e-12));

    // alpha = 1/t1 on one side and (1+s1)/(s1 s2) on the other
    CHECK(chart_to_family(t).family.re(0) == doctest::Approx(2));
    CHECK(chart_to_family(s).family.re(0) == doctest::Approx(2));
    auto rep = verify_transition(t12b, at(ChartId::Racah2, 1, 1, 1, 0.5), 6, 1e-10);
    CHECK(rep.pass);
}

TEST_CASE("domains") {
    CHECK(transition_domain(t12f, at(ChartId::Racah1, 0.5, 0.5, 0.8, 1)).ok);
    auto edge = transition_domain(t12f, at(ChartId::Racah1, 1, 0, 1, 1));
    CHECK_FALSE(edge.ok);
    CHECK(has_clause(edge, "t1t3(1+t2t4)<1"));

    auto s = at(ChartId::Racah2, 1, 0.5, 1, 0.1);
    CHECK(discriminant_S(s.c).value < 0);
    auto vs = transition_domain(t23f, s);
    CHECK_FALSE(vs.ok);
    CHECK(has_clause(vs, "S>=0"));

    auto t = at(ChartId::Racah1, 0.5, 0.5, 0.5, 0.25);
    CHECK(discriminant_T(t.c).value < 0);
    CHECK_FALSE(transition_domain(t13f, t).ok);
    try {
        transition(t13f, t);
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::OutOfDomain);
    }

    auto wrong = transition_domain(t12f, at(ChartId::Racah2, 1, 1, 1, 0.5));
    CHECK_FALSE(wrong.ok);
}

TEST_CASE("discriminants by hand") {
    // S = s4^2 (1+2s1+s1^2-s1^2 s2 s3)^2 - 4 s1^2 s3 s4 (1+s1)
    auto S = discriminant_S<double>({1, 0.5, 1, 0.1});
    CHECK(S.value == doctest::Approx(0.01 * 3.5 * 3.5 - 0.8));
    CHECK(S.kind == DiscriminantKind::S);
    // T = t2^2 t3^2 (t4-t1^2)^2 - 4 t1^2 t2 t3 (1 - t1 t3 (1+t2 t4))
    auto T = discriminant_T<double>({0.5, 0.5, 0.5, 1});
    CHECK(T.value == doctest::Approx(0.0625 * 0.5625 - 0.25 * (1 - 0.25 * 1.5)));
}

TEST_CASE("property: round trips, parameter invariance and recurrences") {
    for (TransitionId id : all_transitions)
        for (Direction d : {Direction::forward, Direction::backward}) {
            TransitionPair tp{id, d};
            CAPTURE(static_cast<int>(id));
            CAPTURE(static_cast<int>(d));
            for (auto &p : in_domain<double>(tp, 31 + 2 * static_cast<int>(id) + static_cast<int>(d), 30)) {
                auto q = transition(tp, p);
                CHECK(q.chart == target_chart(tp));
                CHECK_FALSE(interior_violation(q));
                CHECK(transition_domain(inverse(tp), q).ok);
                auto back = transition(inverse(tp), q);
                for (int i = 0; i < 4; ++i)
                    CHECK(back.c[i] == doctest::Approx(p.c[i]).epsilon(1e-9));

                // both charts unrescale to the textbook Racah recurrence of the source parameters
                auto fp = chart_to_family(p), fq = chart_to_family(q);
                auto f = fp.family;
                for (int n = 0; n <= 6; ++n) {
                    auto want = oracle::racah(f.re(0), f.re(1), -f.re(2) - 1, f.re(3), n);
                    auto a = unrescale_pair(chart_coeffs(p, n), fp.scale);
                    auto b = unrescale_pair(chart_coeffs(q, n), fq.scale);
                    CHECK(oracle::gap(a, want, n) < 1e-7);
                    CHECK(oracle::gap(b, want, n) < 1e-7);
                }
            }
        }
}

TEST_CASE("property: high precision round trips") {
    for (TransitionId id : all_transitions) {
        TransitionPair tp{id, Direction::forward};
        for (auto &p : in_domain<hp>(tp, 91 + static_cast<int>(id), 8)) {
            auto rep = verify_transition(tp, p, 6, 1e-30);
            CHECK(rep.pass);
            CHECK(rep.max_rel_err < 1e-30);
        }
    }
}

TEST_CASE("face identifications") {
    REQUIRE(face_correspondences().size() == 4);
    int k = 0;
    for (auto &fc : face_correspondences()) {
        CAPTURE(std::string(fc.name));
        int used = 0;
        for (auto &p : sample_face<double>(source_chart(fc.pair), fc.source_face, 300 + k, 20)) {
            if (!transition_domain(fc.pair, p).ok)
                continue;
            ++used;
            auto q = transition(fc.pair, p);
            CHECK(q.zero_set() == fc.target_face);
            CHECK(face_restriction<double>(p.chart, p.zero_set()).target ==
                  face_restriction<double>(q.chart, q.zero_set()).target);
            CHECK(verify_transition(fc.pair, p, 6, 1e-9).pass);
        }
        CHECK(used > 0);
        ++k;
    }
    auto p = at(ChartId::Racah1, 0, 0.5, 0.5, 0.5);
    auto q = transition(t12f, p);
    CHECK(q.c[0] == 0);
    CHECK(face_restriction<double>(ChartId::Racah2, q.zero_set()).target == FamilyId::Krawtchouk);
}
