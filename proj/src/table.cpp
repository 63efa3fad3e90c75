#include "askey/harness.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace askey {

namespace {

template <class T> std::string num(const T &v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<T>::max_digits10) << v;
    return os.str();
}

template <class T> std::string param_text(const cx<T> &z) {
    if (z.imag() == T(0))
        return num(T(z.real()));
    std::string im = num(T(z.imag()));
    return num(T(z.real())) + (im.front() == '-' ? "" : "+") + im + "i";
}

} // namespace

template <class T> std::string emit_table(const ChartPoint<T> &p, int n_max, TableFormat fmt) {
    if (auto v = domain_violation(p))
        throw Error(ErrorKind::OutOfDomain, std::string(to_string(p.chart)) + ": " + *v);
    if (n_max < 0)
        throw Error(ErrorKind::BadInput, "n_max must be nonnegative");
    auto rec = face_restriction<T>(p.chart, p.zero_set());
    auto img = rec.image(p);
    const auto &names = param_names(img.family.id);

    if (fmt == TableFormat::json) {
        nlohmann::ordered_json j;
        j["chart"] = to_string(p.chart);
        j["coords"] = nlohmann::json::array();
        for (int i = 0; i < dims(p.chart); ++i)
            j["coords"].push_back(to_double(p.c[i]));
        j["face"] = face_label(p.zero_set());
        j["family"] = to_string(img.family.id);
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < names.size(); ++i)
            params[names[i]] = param_text<T>(img.family.z(static_cast<int>(i)));
        j["params"] = params;
        j["rho"] = to_double(img.scale.rho);
        j["sigma"] = to_double(img.scale.sigma);
        j["rows"] = nlohmann::json::array();
        for (int n = 0; n <= n_max; ++n) {
            auto [B, C] = chart_coeffs(p, n);
            nlohmann::ordered_json row;
            row["n"] = n;
            row["B"] = to_double(B);
            row["C"] = n == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(to_double(C));
            j["rows"].push_back(row);
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "# chart " << to_string(p.chart) << " coords";
    for (int i = 0; i < dims(p.chart); ++i)
        os << (i ? "," : " ") << num(p.c[i]);
    os << "\n# face " << face_label(p.zero_set()) << " family " << to_string(img.family.id);
    for (std::size_t i = 0; i < names.size(); ++i)
        os << " " << names[i] << "=" << param_text<T>(img.family.z(static_cast<int>(i)));
    os << "\n# rho " << num(img.scale.rho) << " sigma " << num(img.scale.sigma) << "\n";
    os << "n,B,C\n";
    for (int n = 0; n <= n_max; ++n) {
        auto [B, C] = chart_coeffs(p, n);
        os << n << "," << num(B) << ",";
        if (n > 0)
            os << num(C);
        os << "\n";
    }
    return os.str();
}

template std::string emit_table<double>(const ChartPoint<double> &, int, TableFormat);
template std::string emit_table<hp>(const ChartPoint<hp> &, int, TableFormat);

} // namespace askey
