#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixed_graph.hpp"

namespace mgspec {

enum class MatrixKind { I, ID, IL, IQ, IN };

struct ClosedFormSpectrum {
    std::vector<std::pair<double, long long>> groups;  // (value, multiplicity)

    std::vector<double> expand() const {
        std::vector<double> out;
        for (const auto& [value, mult] : groups)
            out.insert(out.end(), static_cast<size_t>(mult), value);
        std::sort(out.begin(), out.end(), std::greater<double>());
        return out;
    }
};

namespace detail {

inline void push(ClosedFormSpectrum& s, long long mult,
                 const std::function<double()>& value) {
    if (mult > 0) s.groups.emplace_back(value(), mult);
}

}  // namespace detail

// Spectra stated for the complete mixed / complete directed families, the
// oriented paths and cycles, and the closed alternating walk covering a
// 2n-cycle. Supported kinds: IL, IQ, IN.
inline ClosedFormSpectrum closed_form(FamilyKind fam, const std::vector<long long>& params,
                                      MatrixKind kind) {
    using detail::push;
    if (kind != MatrixKind::IL && kind != MatrixKind::IQ && kind != MatrixKind::IN)
        throw std::invalid_argument("closed forms cover IL, IQ and IN only");
    ClosedFormSpectrum s;
    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    };
    const double pi = std::acos(-1.0);

    auto mixed_parts = [&](long long k, long long m) {
        double kk = static_cast<double>(k), mm = static_cast<double>(m);
        if (kind == MatrixKind::IL) {
            push(s, 1, [] { return 0.0; });
            push(s, k - 1, [&] { return 2 * mm * kk; });
            push(s, 2 * m * k - k, [&] { return 2 * mm * kk - 2 * mm; });
        } else if (kind == MatrixKind::IQ) {
            push(s, 1, [&] { return 4 * mm * kk - 4 * mm; });
            push(s, k - 1, [&] { return 2 * mm * kk - 4 * mm; });
            push(s, 2 * m * k - k, [&] { return 2 * mm * kk - 2 * mm; });
        } else {
            push(s, 1, [] { return 0.0; });
            push(s, k - 1, [&] { return kk / (kk - 1); });
            push(s, 2 * m * k - k, [] { return 1.0; });
        }
    };
    auto directed_parts = [&](long long k, long long m) {
        double kk = static_cast<double>(k), mm = static_cast<double>(m);
        if (kind == MatrixKind::IL || kind == MatrixKind::IQ) {
            push(s, 1, [&] { return 2 * mm * kk - 2 * mm; });
            push(s, 1, [] { return 0.0; });
            push(s, k - 1, [&] { return mm * kk; });
            push(s, k - 1, [&] { return mm * kk - 2 * mm; });
            push(s, 2 * k * m - 2 * k, [&] { return mm * kk - mm; });
        } else {
            push(s, 1, [] { return 2.0; });
            push(s, 1, [] { return 0.0; });
            push(s, k - 1, [&] { return kk / (kk - 1); });
            push(s, k - 1, [&] { return (kk - 2) / (kk - 1); });
            push(s, 2 * k * m - 2 * k, [] { return 1.0; });
        }
    };

    switch (fam) {
        case FamilyKind::mixed_multipartite: {
            need(params.size() == 2 && params[0] >= 2 && params[1] >= 1,
                 "mixed multipartite closed form needs k >= 2, m >= 1");
            mixed_parts(params[0], params[1]);
            return s;
        }
        case FamilyKind::directed_multipartite: {
            need(params.size() == 2 && params[0] >= 2 && params[1] >= 1,
                 "directed multipartite closed form needs k >= 2, m >= 1");
            directed_parts(params[0], params[1]);
            return s;
        }
        case FamilyKind::mixed_complete: {
            need(params.size() == 1 && params[0] >= 2, "closed form needs n >= 2");
            mixed_parts(params[0], 1);
            return s;
        }
        case FamilyKind::directed_complete: {
            need(params.size() == 1 && params[0] >= 2, "closed form needs n >= 2");
            directed_parts(params[0], 1);
            return s;
        }
        case FamilyKind::oriented_path_same: {
            need(params.size() == 1 && params[0] >= 2, "oriented path needs n >= 2");
            long long n = params[0];
            push(s, n - 1, [] { return 2.0; });
            push(s, n + 1, [] { return 0.0; });
            return s;
        }
        case FamilyKind::oriented_cycle_same: {
            need(params.size() == 1 && params[0] >= 3, "oriented cycle needs n >= 3");
            long long n = params[0];
            push(s, n, [] { return 2.0; });
            push(s, n, [] { return 0.0; });
            return s;
        }
        case FamilyKind::oriented_cycle_alternating: {
            need(params.size() == 1 && params[0] >= 4 && params[0] % 2 == 0,
                 "alternating cycle needs even n >= 4");
            long long n = params[0];
            push(s, n, [] { return 0.0; });
            for (long long k = 1; k <= n; ++k) {
                double c = std::cos(2.0 * pi * static_cast<double>(k) / static_cast<double>(n));
                if (kind == MatrixKind::IL)
                    push(s, 1, [&] { return 2 - 2 * c; });
                else if (kind == MatrixKind::IQ)
                    push(s, 1, [&] { return 2 + 2 * c; });
                else
                    push(s, 1, [&] { return 1 - c; });
            }
            return s;
        }
        case FamilyKind::alternating_closed: {
            need(params.size() == 1 && params[0] >= 2, "closed alternating walk needs n >= 2");
            long long n = params[0];
            for (long long k = 1; k <= 2 * n; ++k) {
                double c = std::cos(pi * static_cast<double>(k) / static_cast<double>(n));
                if (kind == MatrixKind::IN)
                    push(s, 1, [&] { return 1 - c; });
                else
                    push(s, 1, [&] { return 2 - 2 * c; });
            }
            return s;
        }
        default:
            throw std::invalid_argument("no closed form for this family");
    }
}

}  // namespace mgspec
