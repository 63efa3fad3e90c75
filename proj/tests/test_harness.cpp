#include "doctest.h"

#include "askey/harness.hpp"

#include "json.hpp"

#include <sstream>

using namespace askey;
using json = nlohmann::json;

namespace {

std::vector<Sample> from_chart(const ChartPoint<double> &p, int n_max) {
    std::vector<Sample> s;
    for (int n = 0; n <= n_max; ++n) {
        auto [B, C] = chart_coeffs(p, n);
        s.push_back({n, B, n ? C : 0.0});
    }
    return s;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("csv table at the Racah1 origin") {
    auto t = lines(emit_table(ChartPoint<double>{ChartId::Racah1, {0, 0, 0, 0}}, 3, TableFormat::csv));
    REQUIRE(t.size() >= 5);
    CHECK(t[0].rfind("# chart Racah1", 0) == 0);
    std::vector<std::string> rows(t.end() - 5, t.end());
    CHECK(rows[0] == "n,B,C");
    CHECK(rows[1] == "0,0,");
    CHECK(rows[2] == "1,0,1");
    CHECK(rows[3] == "2,0,2");
    CHECK(rows[4] == "3,0,3");
}

TEST_CASE("json table") {
    auto j = json::parse(emit_table(ChartPoint<double>{ChartId::Racah1, {0.5, 0.5, 0.5, 0.5}}, 2, TableFormat::json));
    for (const char *k : {"chart", "coords", "rho", "sigma", "rows"})
        CHECK(j.contains(k));
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["C"].is_null());
    CHECK(std::stod(j["params"]["delta"].get<std::string>()) == doctest::Approx(18));

    auto w = json::parse(emit_table(ChartPoint<double>{ChartId::Wilson2, {1, 1, 1, 0}}, 2, TableFormat::json));
    CHECK(w["family"] == "ContinuousDualHahn");
    CHECK(w["face"] == "{4}");
    CHECK(w["params"]["a"] == "1+2.5i");
    CHECK(w["params"]["c"] == "-2.5");

    auto h = json::parse(emit_table(ChartPoint<hp>{ChartId::Racah1, {hp(0), hp(0), hp(0), hp(0)}}, 2, TableFormat::json));
    CHECK(h["rows"][2]["C"].get<double>() == doctest::Approx(2));

    CHECK_THROWS_AS(emit_table(ChartPoint<double>{ChartId::Racah1, {2, 0.5, 0.5, 0.5}}, 2, TableFormat::csv), Error);
}

TEST_CASE("identify Hermite and Laguerre") {
    std::vector<Sample> her, lag;
    for (int n = 0; n < 8; ++n) {
        her.push_back({n, 0.0, n / 2.0});
        lag.push_back({n, 2.0 * n + 1, double(n) * n});
    }
    auto h = identify(her);
    REQUIRE_FALSE(h.candidates.empty());
    CHECK(h.candidates[0].name == "Hermite");
    CHECK(h.candidates[0].residual == 0);
    CHECK(h.candidates[0].match);

    auto l = identify(lag);
    CHECK(l.candidates[0].name == "Laguerre");
    CHECK(l.candidates[0].residual < 1e-10);
    CHECK(std::abs(l.candidates[0].params[0]) < 1e-8);
    for (std::size_t i = 1; i < l.candidates.size(); ++i)
        CHECK(l.candidates[i - 1].residual <= l.candidates[i].residual);
}

TEST_CASE("identify recovers a Racah1 chart point") {
    auto r = identify(from_chart(ChartPoint<double>{ChartId::Racah1, {0.5, 0.5, 0.5, 0.5}}, 9));
    const Candidate *c = nullptr;
    for (auto &k : r.candidates)
        if (k.name == "Racah1")
            c = &k;
    REQUIRE(c);
    CHECK(c->match);
    CHECK(c->residual <= 1e-6);
    for (double v : c->params)
        CHECK(v == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.candidates[0].residual <= c->residual);

    auto j = json::parse(to_json(r));
    CHECK(j["schema"] == 1);
    CHECK(j["candidates"].size() == r.candidates.size());
}

TEST_CASE("identify needs six distinct orders") {
    std::vector<Sample> few;
    for (int n = 0; n < 5; ++n)
        few.push_back({n, 0.0, n / 2.0});
    try {
        identify(few);
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InsufficientSamples);
    }
    std::vector<Sample> repeated(8, Sample{1, 0.0, 0.5});
    CHECK_THROWS_AS(identify(repeated), Error);
}

TEST_CASE("sample residual") {
    std::vector<Sample> s = {{0, 1.0, 0.0}, {1, 2.0, 4.0}};
    CHECK(sample_residual(s, {{1.0, 99.0}, {2.0, 4.0}}) == 0);
    CHECK(sample_residual(s, {{1.0, 0.0}, {2.0, 5.0}}) == doctest::Approx(0.25));
    CHECK(sample_residual(s, {{1.0, 0.0}, {NAN, 4.0}}) == INFINITY);
}

TEST_CASE("suite reports are deterministic and versioned") {
    SuiteConfig cfg;
    cfg.seed = 5;
    auto a = run_suite("favard-scan", cfg), b = run_suite("favard-scan", cfg);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.pass);
    auto j = nlohmann::ordered_json::parse(to_json(a));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema", "suite", "samples", "max_rel_err", "tol", "pass", "seed",
                                           "backend", "details"});
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "favard-scan");
    CHECK(j["seed"] == 5);
    CHECK(j["backend"] == "binary64");
    CHECK(j["details"].is_array());

    cfg.backend = Backend::highprec;
    auto m = run_suite("moments-oracle", cfg);
    CHECK(m.pass);
    CHECK(m.max_rel_err < 1e-30);
    for (auto &c : m.details)
        CHECK(c.err <= c.tol);
}

TEST_CASE("suite pass follows the gating cases") {
    SuiteConfig cfg;
    cfg.samples = 3;
    auto r = run_suite("wilson-reality", cfg);
    bool all = true;
    double worst = 0;
    for (auto &c : r.details)
        if (c.gating) {
            all = all && c.pass;
            worst = std::max(worst, c.err);
        }
    CHECK(r.pass == all);
    CHECK(r.max_rel_err == worst);
    CHECK(r.samples > 0);
}

TEST_CASE("unknown suite") {
    try {
        run_suite("nosuch", SuiteConfig{});
        FAIL("expected error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnknownSuite);
    }
    CHECK(suite_names().size() == 10);
}
