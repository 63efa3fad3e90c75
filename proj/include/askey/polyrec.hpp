#pragma once

#include "askey/scalar.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace askey {

template <class T> struct MonicPolynomial {
    std::vector<T> coeffs{T(1)};
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// n_valid < 0 means the sequence never terminates
template <class T> struct RecurrenceCoeffs {
    std::function<T(int)> B;
    std::function<T(int)> C;
    int n_valid = -1;
};

template <class T> struct AffineScale {
    T rho = T(1);
    T sigma = T(0);
};

template <class T> struct MomentSequence {
    std::vector<T> mu;
};

template <class T> std::vector<MonicPolynomial<T>> build_monic_sequence(const RecurrenceCoeffs<T> &rc, int n_max) {
    if (n_max < 0)
        throw Error(ErrorKind::BadInput, "n_max must be nonnegative");
    if (rc.n_valid >= 0 && n_max > rc.n_valid)
        throw Error(ErrorKind::OutOfDomain, "n_max " + std::to_string(n_max) + " exceeds n_valid " +
                                                std::to_string(rc.n_valid));
    std::vector<MonicPolynomial<T>> out;
    out.reserve(n_max + 1);
    out.push_back(MonicPolynomial<T>{});
    for (int n = 0; n < n_max; ++n) {
        T b = rc.B(n);
        if (!is_finite(b))
            throw Error(ErrorKind::NonFiniteCoefficient, "B(" + std::to_string(n) + ") is not finite");
        T c = T(0);
        if (n >= 1) {
            c = rc.C(n);
            if (!is_finite(c))
                throw Error(ErrorKind::NonFiniteCoefficient, "C(" + std::to_string(n) + ") is not finite");
        }
        const auto &p = out[n].coeffs;
        std::vector<T> q(n + 2, T(0));
        for (int k = 0; k <= n; ++k) {
            q[k + 1] += p[k];
            q[k] -= b * p[k];
        }
        if (n >= 1) {
            const auto &pm = out[n - 1].coeffs;
            for (int k = 0; k < n; ++k)
                q[k] -= c * pm[k];
        }
        q[n + 1] = T(1);
        out.push_back(MonicPolynomial<T>{std::move(q)});
    }
    return out;
}

template <class T> T evaluate(const MonicPolynomial<T> &p, const T &x) {
    T acc = T(0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// values p_0(x)..p_{n_max}(x) straight from the recurrence
template <class T> std::vector<T> evaluate_sequence(const RecurrenceCoeffs<T> &rc, int n_max, const T &x) {
    std::vector<T> v(n_max + 1);
    v[0] = T(1);
    if (n_max >= 1)
        v[1] = x - rc.B(0);
    for (int n = 1; n < n_max; ++n)
        v[n + 1] = (x - rc.B(n)) * v[n] - rc.C(n) * v[n - 1];
    return v;
}

template <class T> RecurrenceCoeffs<T> rescale_coeffs(const RecurrenceCoeffs<T> &rc, const AffineScale<T> &s) {
    if (s.rho == T(0))
        throw Error(ErrorKind::BadInput, "rho must be nonzero");
    RecurrenceCoeffs<T> out;
    out.B = [B = rc.B, s](int n) { return s.rho * (B(n) + s.sigma); };
    out.C = [C = rc.C, s](int n) { return s.rho * s.rho * C(n); };
    out.n_valid = rc.n_valid;
    return out;
}

template <class T> RecurrenceCoeffs<T> unrescale_coeffs(const RecurrenceCoeffs<T> &rc, const AffineScale<T> &s) {
    if (s.rho == T(0))
        throw Error(ErrorKind::BadInput, "rho must be nonzero");
    RecurrenceCoeffs<T> out;
    out.B = [B = rc.B, s](int n) { return B(n) / s.rho - s.sigma; };
    out.C = [C = rc.C, s](int n) { return C(n) / (s.rho * s.rho); };
    out.n_valid = rc.n_valid;
    return out;
}

template <class T> std::pair<T, T> rescale_pair(const std::pair<T, T> &bc, const AffineScale<T> &s) {
    return {s.rho * (bc.first + s.sigma), s.rho * s.rho * bc.second};
}

template <class T> std::pair<T, T> unrescale_pair(const std::pair<T, T> &bc, const AffineScale<T> &s) {
    return {bc.first / s.rho - s.sigma, bc.second / (s.rho * s.rho)};
}

// composition: rescale(rescale(h, a), b) == rescale(h, compose(a, b))
template <class T> AffineScale<T> compose(const AffineScale<T> &a, const AffineScale<T> &b) {
    return {a.rho * b.rho, a.sigma + b.sigma / a.rho};
}

template <class T> using Matrix = std::vector<std::vector<T>>;

template <class T> T determinant(Matrix<T> a) {
    using std::abs;
    const int n = static_cast<int>(a.size());
    if (n == 0)
        return T(1);
    if constexpr (std::is_same_v<T, double>) {
        double det = 1;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            for (int i = k + 1; i < n; ++i)
                if (abs(a[i][k]) > abs(a[piv][k]))
                    piv = i;
            if (a[piv][k] == 0)
                return 0;
            if (piv != k) {
                std::swap(a[piv], a[k]);
                det = -det;
            }
            det *= a[k][k];
            for (int i = k + 1; i < n; ++i) {
                double f = a[i][k] / a[k][k];
                for (int j = k + 1; j < n; ++j)
                    a[i][j] -= f * a[k][j];
            }
        }
        return det;
    } else {
        // Bareiss fraction-free elimination
        T sign = T(1);
        T prev = T(1);
        for (int k = 0; k < n - 1; ++k) {
            if (a[k][k] == T(0)) {
                int sw = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a[i][k] != T(0)) {
                        sw = i;
                        break;
                    }
                if (sw < 0)
                    return T(0);
                std::swap(a[sw], a[k]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        return sign * a[n - 1][n - 1];
    }
}

template <class T> T hankel_determinant(const MomentSequence<T> &m, int n) {
    if (n == 0)
        return T(1);
    if (static_cast<int>(m.mu.size()) < 2 * n - 1)
        throw Error(ErrorKind::BadInput, "not enough moments for Hankel order " + std::to_string(n));
    Matrix<T> h(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[i][j] = m.mu[i + j];
    return determinant(h);
}

// bordered Hankel determinant expanded along its bottom row (1, x, ..., x^n)
template <class T> std::vector<MonicPolynomial<T>> polys_from_moments(const MomentSequence<T> &m, int n_max) {
    if (static_cast<int>(m.mu.size()) < 2 * n_max)
        throw Error(ErrorKind::BadInput, "need at least 2*n_max moments");
    std::vector<MonicPolynomial<T>> out;
    out.push_back(MonicPolynomial<T>{});
    for (int n = 1; n <= n_max; ++n) {
        T delta = hankel_determinant(m, n);
        if (delta == T(0) || !is_finite(delta))
            throw Error(ErrorKind::SingularHankel, "Hankel determinant of order " + std::to_string(n) + " vanishes");
        std::vector<T> c(n + 1);
        for (int k = 0; k <= n; ++k) {
            if (k == n) {
                c[k] = T(1);
                continue;
            }
            Matrix<T> minor(n, std::vector<T>(n));
            for (int i = 0; i < n; ++i) {
                int col = 0;
                for (int j = 0; j <= n; ++j) {
                    if (j == k)
                        continue;
                    minor[i][col++] = m.mu[i + j];
                }
            }
            T sgn = ((n + k) % 2) ? T(-1) : T(1);
            c[k] = sgn * determinant(minor) / delta;
        }
        out.push_back(MonicPolynomial<T>{std::move(c)});
    }
    return out;
}

} // namespace askey
