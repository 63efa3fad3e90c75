#include "askey/harness.hpp"

#include "json.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/NonLinearOptimization>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace askey {

namespace {

using Model = std::function<std::pair<double, double>(const Eigen::VectorXd &, int)>;

struct Target {
    std::string name;
    bool is_chart;
    std::vector<std::string> names;
    bool log_space;
    Model model;
};

constexpr double penalty = 1e3;

std::vector<std::string> chart_coord_names(ChartId c) {
    switch (c) {
    case ChartId::Racah1: return {"t1", "t2", "t3", "t4"};
    case ChartId::Racah2: return {"s1", "s2", "s3", "s4"};
    case ChartId::Racah3: return {"u1", "u2", "u3", "u4"};
    case ChartId::Wilson1: return {"a1", "a2", "a3", "a4"};
    case ChartId::Wilson2: return {"b1", "b2", "b3", "b4"};
    case ChartId::Jacobi2D: return {"inv_alpha", "inv_beta"};
    }
    return {};
}

std::vector<Target> targets() {
    std::vector<Target> out;
    for (ChartId c : all_charts) {
        out.push_back({to_string(c), true, chart_coord_names(c), true, [c](const Eigen::VectorXd &x, int n) {
                           ChartPoint<double> p{c, {}};
                           for (int i = 0; i < dims(c); ++i)
                               p.c[i] = std::exp(x[i]);
                           return chart_coeffs(p, n);
                       }});
    }
    auto fam = [](FamilyId f) { return std::vector<std::string>(param_names(f)); };
    out.push_back({"Hermite", false, {}, false, [](const Eigen::VectorXd &, int n) { return hermite_coeffs<double>(n); }});
    out.push_back({"Laguerre", false, fam(FamilyId::Laguerre), false,
                   [](const Eigen::VectorXd &x, int n) { return laguerre_coeffs(x[0], n); }});
    out.push_back({"Jacobi", false, fam(FamilyId::Jacobi), false,
                   [](const Eigen::VectorXd &x, int n) { return jacobi_coeffs(x[0], x[1], n); }});
    out.push_back({"Racah", false, fam(FamilyId::Racah), false, [](const Eigen::VectorXd &x, int n) {
                       return racah_coeffs(RacahParams<double>{x[0], x[1], x[2], x[3]}, n);
                   }});
    out.push_back({"Wilson", false, fam(FamilyId::Wilson), false, [](const Eigen::VectorXd &x, int n) {
                       using Z = std::complex<double>;
                       return wilson_coeffs(WilsonParams<double>{Z(x[0]), Z(x[1]), Z(x[2]), Z(x[3])}, n);
                   }});
    out.push_back({"ContinuousDualHahn", false, fam(FamilyId::ContinuousDualHahn), false,
                   [](const Eigen::VectorXd &x, int n) { return cdh_direct_coeffs(x[0], x[1], x[2], n); }});
    return out;
}

struct Residuals {
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

    const std::vector<Sample> *samples;
    const Model *model;
    int n_in;

    int inputs() const { return n_in; }
    int values() const { return static_cast<int>(2 * samples->size()); }

    int operator()(const Eigen::VectorXd &x, Eigen::VectorXd &f) const {
        for (std::size_t i = 0; i < samples->size(); ++i) {
            const Sample &s = (*samples)[i];
            double B = NAN, C = NAN;
            try {
                std::tie(B, C) = (*model)(x, s.n);
            } catch (const Error &) {
            }
            double rb = (B - s.B) / std::max(1.0, std::abs(s.B));
            double rc = s.n == 0 ? 0.0 : (C - s.C) / std::max(1.0, std::abs(s.C));
            f[2 * i] = std::isfinite(rb) ? rb : penalty;
            f[2 * i + 1] = std::isfinite(rc) ? rc : penalty;
        }
        return 0;
    }

    // central differences with a step floor, so parameters near zero keep a usable Jacobian
    int df(const Eigen::VectorXd &x, Eigen::MatrixXd &jac) const {
        Eigen::VectorXd xp = x, xm = x, fp(values()), fm(values());
        for (int i = 0; i < n_in; ++i) {
            double h = 1e-6 * std::max(1.0, std::abs(x[i]));
            xp[i] = x[i] + h;
            xm[i] = x[i] - h;
            (*this)(xp, fp);
            (*this)(xm, fm);
            jac.col(i) = (fp - fm) / (2 * h);
            xp[i] = xm[i] = x[i];
        }
        return 0;
    }
};

double residual_of(const std::vector<Sample> &samples, const Model &m, const Eigen::VectorXd &x) {
    std::vector<std::pair<double, double>> v;
    for (auto &s : samples) {
        try {
            v.push_back(m(x, s.n));
        } catch (const Error &) {
            v.emplace_back(NAN, NAN);
        }
    }
    return sample_residual(samples, v);
}

} // namespace

double sample_residual(const std::vector<Sample> &samples, const std::vector<std::pair<double, double>> &model) {
    double r = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample &s = samples[i];
        double eb = std::abs(model[i].first - s.B) / std::max(1.0, std::abs(s.B));
        double ec = s.n == 0 ? 0.0 : std::abs(model[i].second - s.C) / std::max(1.0, std::abs(s.C));
        if (!std::isfinite(eb) || !std::isfinite(ec))
            return INFINITY;
        r = std::max({r, eb, ec});
    }
    return r;
}

IdentifyResult identify(const std::vector<Sample> &samples, std::uint64_t seed, int starts) {
    std::set<int> ns;
    for (auto &s : samples)
        ns.insert(s.n);
    if (samples.size() < 6 || ns.size() < 6)
        throw Error(ErrorKind::InsufficientSamples, "identify needs at least 6 samples with distinct n");
    for (auto &s : samples)
        if (s.n < 0)
            throw Error(ErrorKind::BadInput, "sample with negative n");

    IdentifyResult res;
    Rng rng(seed);
    for (auto &t : targets()) {
        Candidate best;
        best.name = t.name;
        best.is_chart = t.is_chart;
        best.param_names = t.names;
        best.residual = INFINITY;
        const int dim = static_cast<int>(t.names.size());
        if (dim == 0) {
            best.residual = residual_of(samples, t.model, Eigen::VectorXd());
        } else {
            for (int k = 0; k < starts; ++k) {
                Eigen::VectorXd x(dim);
                for (int i = 0; i < dim; ++i)
                    x[i] = t.log_space ? std::log(rng.uniform(1e-3, 1.0)) : rng.log_uniform(0.1, 10.0);
                Residuals f{&samples, &t.model, dim};
                Eigen::LevenbergMarquardt<Residuals> lm(f);
                lm.parameters.maxfev = 4000;
                lm.parameters.xtol = 1e-15;
                lm.parameters.ftol = 1e-15;
                lm.minimize(x);
                double r = residual_of(samples, t.model, x);
                if (r < best.residual) {
                    best.residual = r;
                    best.params.assign(x.data(), x.data() + dim);
                    if (t.log_space)
                        for (double &v : best.params)
                            v = std::exp(v);
                }
                if (best.residual < 1e-14)
                    break;
            }
        }
        best.match = best.residual < match_threshold;
        res.candidates.push_back(best);
    }
    std::stable_sort(res.candidates.begin(), res.candidates.end(),
                     [](const Candidate &a, const Candidate &b) { return a.residual < b.residual; });
    return res;
}

std::string to_json(const IdentifyResult &r, int indent) {
    nlohmann::ordered_json cands = nlohmann::ordered_json::array();
    for (auto &c : r.candidates) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < c.param_names.size() && i < c.params.size(); ++i)
            params[c.param_names[i]] = c.params[i];
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["kind"] = c.is_chart ? "chart" : "family";
        e["params"] = params;
        e["residual"] = std::isfinite(c.residual) ? nlohmann::ordered_json(c.residual) : nlohmann::ordered_json(nullptr);
        e["match"] = c.match;
        cands.push_back(e);
    }
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["candidates"] = cands;
    return j.dump(indent);
}

} // namespace askey
