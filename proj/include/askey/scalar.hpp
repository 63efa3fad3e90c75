#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace askey {

using hp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                         boost::multiprecision::et_off>;
using hp_complex =
    boost::multiprecision::number<boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<50>>,
                                  boost::multiprecision::et_off>;

template <class T> struct complex_of { using type = std::complex<T>; };
template <> struct complex_of<hp> { using type = hp_complex; };
template <class T> using cx = typename complex_of<T>::type;

enum class Backend { binary64, highprec };

inline const char *to_string(Backend b) { return b == Backend::binary64 ? "binary64" : "highprec"; }

enum class ErrorKind {
    OutOfDomain,
    NonFiniteCoefficient,
    SingularHankel,
    PoleInLowerParameter,
    NormalizationPole,
    UnknownSuite,
    InsufficientSamples,
    SamplingExhausted,
    BadInput,
};

const char *to_string(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

template <class T> inline bool is_finite(const T &v) {
    if constexpr (std::is_same_v<T, double>)
        return std::isfinite(v);
    else
        return (boost::multiprecision::isfinite)(v);
}

template <class T> inline double to_double(const T &v) { return static_cast<double>(v); }

template <class T> inline T pi() { return boost::math::constants::pi<T>(); }

template <class T> inline T half() { return T(1) / 2; }

// x^{3/2}, x^{5/2}, ... without going through pow
template <class T> inline T pow_half(const T &x, int twice_exponent) {
    using std::sqrt;
    T r = twice_exponent % 2 ? sqrt(x) : T(1);
    for (int k = 0; k < twice_exponent / 2; ++k)
        r *= x;
    return r;
}

template <class T> inline T rel_diff(const T &a, const T &b) {
    using std::abs;
    T scale = abs(b) > T(1) ? abs(b) : T(1);
    return abs(a - b) / scale;
}

// machine epsilon of the backend, used to size absolute snap tolerances
template <class T> inline T epsilon() { return std::numeric_limits<T>::epsilon(); }

} // namespace askey
