#include "askey/harness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace askey;

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(trim(item));
    return out;
}

// "2", "-1.5", "3i", "1-1i", "0.5+2e-3i"
template <class T> cx<T> parse_complex(const std::string &text) {
    std::string s = trim(text);
    if (s.empty())
        throw Error(ErrorKind::BadInput, "empty number");
    auto real = [&](const std::string &t) -> T {
        if (t.empty() || t == "+")
            return T(1);
        if (t == "-")
            return T(-1);
        std::size_t used = 0;
        double probe = std::stod(t, &used);
        if (used != t.size())
            throw Error(ErrorKind::BadInput, "bad number: " + text);
        if constexpr (std::is_same_v<T, double>)
            return probe;
        else
            return T(t);
    };
    if (s.back() != 'i' && s.back() != 'j')
        return cx<T>(real(s), T(0));
    s.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            cut = i;
            break;
        }
    if (cut == std::string::npos)
        return cx<T>(T(0), real(s));
    return cx<T>(real(s.substr(0, cut)), real(s.substr(cut)));
}

template <class T> std::string show(const T &v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<T>::max_digits10) << v;
    return os.str();
}

template <class T> FamilyInstance<T> parse_family(FamilyId id, const std::string &params) {
    FamilyInstance<T> f;
    f.id = id;
    const auto &names = param_names(id);
    std::vector<bool> seen(names.size(), false);
    for (auto &kv : params.empty() ? std::vector<std::string>{} : split(params, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::BadInput, "expected k=v, got " + kv);
        std::string k = trim(kv.substr(0, eq));
        auto it = std::find(names.begin(), names.end(), k);
        if (it == names.end())
            throw Error(ErrorKind::BadInput, std::string("unknown parameter ") + k + " for " + to_string(id));
        auto i = static_cast<std::size_t>(it - names.begin());
        f.params[i] = parse_complex<T>(kv.substr(eq + 1));
        if (!has_complex_params(id) && f.params[i].imag() != T(0))
            throw Error(ErrorKind::BadInput, std::string(to_string(id)) + " takes real parameters");
        seen[i] = true;
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!seen[i])
            throw Error(ErrorKind::BadInput, "missing parameter " + names[i]);
    return f;
}

template <class T> ChartPoint<T> parse_point(ChartId c, const std::string &coords) {
    auto parts = split(coords, ',');
    if (static_cast<int>(parts.size()) != dims(c))
        throw Error(ErrorKind::BadInput, std::string(to_string(c)) + " needs " + std::to_string(dims(c)) + " coordinates");
    ChartPoint<T> p{c, {}};
    for (int i = 0; i < dims(c); ++i)
        p.c[i] = parse_complex<T>(parts[i]).real();
    if (auto v = domain_violation(p))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(c)) + ": " + *v);
    return p;
}

template <class T> nlohmann::ordered_json eval_rows(const RecurrenceCoeffs<T> &rc, int n, const T &x) {
    auto polys = build_monic_sequence(rc, n);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["x"] = show(x);
    j["value"] = show(evaluate(polys[n], x));
    j["B"] = show(T(rc.B(n)));
    j["C"] = n == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(show(T(rc.C(n))));
    return j;
}

template <class T> int do_eval(const std::string &family, const std::string &params, int n, const std::string &xs) {
    auto id = family_from_string(family);
    if (!id)
        throw Error(ErrorKind::BadInput, "unknown family " + family);
    auto f = parse_family<T>(*id, params);
    auto j = eval_rows(recurrence_coeffs(f), n, parse_complex<T>(xs).real());
    nlohmann::ordered_json out;
    out["family"] = to_string(*id);
    out.update(j);
    std::cout << out.dump(2) << "\n";
    return 0;
}

template <class T> int do_eval_chart(const std::string &chart, const std::string &coords, int n, const std::string &xs) {
    auto c = chart_from_string(chart);
    if (!c)
        throw Error(ErrorKind::BadInput, "unknown chart " + chart);
    auto p = parse_point<T>(*c, coords);
    auto j = eval_rows(chart_recurrence(p), n, parse_complex<T>(xs).real());
    nlohmann::ordered_json out;
    out["chart"] = to_string(*c);
    out["face"] = face_label(p.zero_set());
    out.update(j);
    std::cout << out.dump(2) << "\n";
    return 0;
}

template <class T> int do_table(const std::string &chart, const std::string &coords, int n_max, const std::string &fmt) {
    auto c = chart_from_string(chart);
    if (!c)
        throw Error(ErrorKind::BadInput, "unknown chart " + chart);
    auto p = parse_point<T>(*c, coords);
    std::cout << emit_table(p, n_max, fmt == "json" ? TableFormat::json : TableFormat::csv);
    return 0;
}

int do_identify(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::BadInput, "cannot read " + path);
    auto j = nlohmann::json::parse(in);
    std::vector<Sample> samples;
    for (auto &e : j)
        samples.push_back({e.at("n").get<int>(), e.at("B").get<double>(), e.at("C").get<double>()});
    auto r = identify(samples);
    std::cout << to_json(r) << "\n";
    return !r.candidates.empty() && r.candidates.front().match ? 0 : 1;
}

Backend parse_backend(const std::string &s) {
    if (s == "binary64")
        return Backend::binary64;
    if (s == "highprec")
        return Backend::highprec;
    throw Error(ErrorKind::BadInput, "unknown backend " + s);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Askey-scheme recurrences, charts and verification suites"};
    app.require_subcommand(1);

    std::string backend_flag;
    app.add_option("--backend", backend_flag, "binary64 or highprec (overrides ASKEY_BACKEND)")
        ->check(CLI::IsMember({"binary64", "highprec"}));

    std::string family, params, chart, coords, format = "csv", x = "0", suite, input;
    int n = 0, n_max = 6;

    auto *eval = app.add_subcommand("eval", "evaluate a monic family polynomial");
    eval->add_option("--family", family)->required();
    eval->add_option("--params", params, "k=v,... (complex as 1-1i)");
    eval->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--x", x)->required();

    auto *evc = app.add_subcommand("eval-chart", "evaluate a chart polynomial");
    evc->add_option("--chart", chart)->required();
    evc->add_option("--coords", coords)->required();
    evc->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    evc->add_option("--x", x)->required();

    auto *table = app.add_subcommand("table", "coefficient table at a chart point");
    table->add_option("--chart", chart)->required();
    table->add_option("--coords", coords)->required();
    table->add_option("--nmax", n_max)->check(CLI::NonNegativeNumber);
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    SuiteConfig cfg;
    std::optional<int> samples, suite_nmax;
    std::optional<double> tol;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_option("--nmax", suite_nmax)->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", tol)->check(CLI::PositiveNumber);

    auto *ident = app.add_subcommand("identify", "fit (n, B, C) samples to charts and families");
    ident->add_option("--input", input)->required();

    for (auto *sub : {eval, evc, table, verify})
        sub->add_option("--backend", backend_flag)->check(CLI::IsMember({"binary64", "highprec"}));

    CLI11_PARSE(app, argc, argv);

    try {
        Backend backend = Backend::binary64;
        if (const char *env = std::getenv("ASKEY_BACKEND"); env && *env)
            backend = parse_backend(env);
        if (!backend_flag.empty())
            backend = parse_backend(backend_flag);
        bool wide = backend == Backend::highprec;

        if (*eval)
            return wide ? do_eval<hp>(family, params, n, x) : do_eval<double>(family, params, n, x);
        if (*evc)
            return wide ? do_eval_chart<hp>(chart, coords, n, x) : do_eval_chart<double>(chart, coords, n, x);
        if (*table)
            return wide ? do_table<hp>(chart, coords, n_max, format) : do_table<double>(chart, coords, n_max, format);
        if (*verify) {
            cfg.backend = backend;
            cfg.samples = samples;
            cfg.n_max = suite_nmax;
            cfg.tol = tol;
            auto r = run_suite(suite, cfg);
            std::cout << to_json(r) << "\n";
            return r.pass ? 0 : 1;
        }
        if (*ident)
            return do_identify(input);
    } catch (const Error &e) {
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
