#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrices.hpp"

namespace mgspec {

struct Spectrum {
    std::vector<double> values;  // non-increasing
    std::vector<std::pair<double, int>> groups;
    double tol_group = 1e-7;
};

// Adjacent values closer than tol are merged; each group is reported as
// (mean, multiplicity).
inline std::vector<std::pair<double, int>> group_multiplicities(
    const std::vector<double>& values, double tol) {
    std::vector<std::pair<double, int>> groups;
    size_t i = 0;
    while (i < values.size()) {
        size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j - 1] - values[j] <= tol) {
            sum += values[j];
            ++j;
        }
        groups.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return groups;
}

inline Spectrum make_spectrum(std::vector<double> values, double tol_group) {
    if (!std::is_sorted(values.begin(), values.end(), std::greater<double>()))
        std::sort(values.begin(), values.end(), std::greater<double>());
    Spectrum s;
    s.values = std::move(values);
    s.tol_group = tol_group;
    s.groups = group_multiplicities(s.values, tol_group);
    return s;
}

inline bool spectra_equal(const std::vector<double>& a, const std::vector<double>& b,
                          double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("spectra have different lengths");
    for (size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

inline int count_near(const std::vector<double>& values, double x, double tol) {
    int c = 0;
    for (double v : values)
        if (std::fabs(v - x) <= tol) ++c;
    return c;
}

struct EigenResult {
    int order = 0;
    Spectrum spectrum;
    std::vector<double> vectors;  // row-major; column k pairs with values[k]
    int sweeps = 0;
    double off_diagonal = 0.0;
    std::vector<double> off_history;  // off-diagonal norm after each sweep

    double vec(int row, int k) const { return vectors[static_cast<size_t>(row) * order + k]; }
};

namespace detail {

inline double off_norm(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic-by-row Jacobi rotations. Rotations with |a_pq| at or below
// 1e-14 * ||M||_F are skipped; the iteration ends when a full sweep
// applies no rotation.
inline EigenResult jacobi_eigen(const SymMatrix& m, double tol_group = 1e-7) {
    int n = m.order;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("jacobi_eigen requires a symmetric matrix");

    std::vector<double> a = m.a;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    EigenResult res;
    res.order = n;
    double thresh = 1e-14 * m.fro_norm();
    int sweep = 0;
    if (n > 1 && thresh > 0.0) {
        const int max_sweeps = 100;
        for (; sweep < max_sweeps; ++sweep) {
            bool rotated = false;
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    double apq = A(p, q);
                    if (std::fabs(apq) <= thresh) continue;
                    rotated = true;
                    double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                    double t = (theta >= 0 ? 1.0 : -1.0) /
                               (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    double c = 1.0 / std::sqrt(t * t + 1.0);
                    double s = t * c;
                    double tau = s / (1.0 + c);
                    double app = A(p, p), aqq = A(q, q);
                    A(p, p) = app - t * apq;
                    A(q, q) = aqq + t * apq;
                    A(p, q) = A(q, p) = 0.0;
                    for (int k = 0; k < n; ++k) {
                        if (k == p || k == q) continue;
                        double akp = A(k, p), akq = A(k, q);
                        A(k, p) = A(p, k) = akp - s * (akq + tau * akp);
                        A(k, q) = A(q, k) = akq + s * (akp - tau * akq);
                    }
                    for (int k = 0; k < n; ++k) {
                        double vkp = V(k, p), vkq = V(k, q);
                        V(k, p) = vkp - s * (vkq + tau * vkp);
                        V(k, q) = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
            res.off_history.push_back(detail::off_norm(a, n));
            if (!rotated) break;
        }
        if (sweep == max_sweeps)
            throw std::runtime_error("jacobi_eigen failed to converge");
    }
    res.sweeps = sweep;
    res.off_diagonal = detail::off_norm(a, n);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = A(i, i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int x, int y) { return diag[x] > diag[y]; });
    std::vector<double> values(n);
    res.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        values[k] = diag[idx[k]];
        for (int row = 0; row < n; ++row)
            res.vectors[static_cast<size_t>(row) * n + k] = V(row, idx[k]);
    }
    res.spectrum = make_spectrum(std::move(values), tol_group);
    return res;
}

// max |(V diag(values) V^T - M)_ij|
inline double reconstruction_error(const SymMatrix& m, const EigenResult& r) {
    int n = m.order;
    double worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k)
                s += r.vec(i, k) * r.spectrum.values[k] * r.vec(j, k);
            worst = std::max(worst, std::fabs(s - m.at(i, j)));
        }
    return worst;
}

// max |(V^T V - I)_ij|
inline double orthonormality_error(const EigenResult& r) {
    int n = r.order;
    double worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k) s += r.vec(k, i) * r.vec(k, j);
            worst = std::max(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace mgspec
