#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matrices.hpp"

namespace mgspec {

using BigInt = boost::multiprecision::cpp_int;

// Monic characteristic polynomial det(xI - M) of an integer matrix.
// coeffs[k] multiplies x^(order-k); coeffs[0] == 1.
struct CharPoly {
    int order = 0;
    std::vector<BigInt> coeffs;

    bool operator==(const CharPoly&) const = default;

    double evaluate(double x) const {
        double acc = 0.0;
        for (const BigInt& c : coeffs) acc = acc * x + c.convert_to<double>();
        return acc;
    }

    std::string to_string() const {
        std::string out;
        for (int k = 0; k <= order; ++k) {
            const BigInt& c = coeffs[k];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            int pw = order - k;
            bool unit = mag == 1 && pw > 0;
            if (!unit) out += mag.str();
            if (pw > 0) {
                out += "x";
                if (pw > 1) out += "^" + std::to_string(pw);
            }
        }
        return out.empty() ? "0" : out;
    }
};

// Faddeev-LeVerrier recurrence with exact trace divisions.
inline CharPoly char_poly(const SymMatrix& m) {
    if (!m.integer_exact)
        throw std::invalid_argument("char_poly requires an integer-exact matrix");
    int n = m.order;
    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.iat(i, j);

    CharPoly p;
    p.order = n;
    p.coeffs.assign(n + 1, BigInt(0));
    p.coeffs[0] = 1;
    if (n == 0) return p;

    auto mul = [&](const std::vector<BigInt>& x) {
        std::vector<BigInt> out(static_cast<size_t>(n) * n, BigInt(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const BigInt& aik = a[static_cast<size_t>(i) * n + k];
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j)
                    out[static_cast<size_t>(i) * n + j] += aik * x[static_cast<size_t>(k) * n + j];
            }
        return out;
    };
    auto trace = [&](const std::vector<BigInt>& x) {
        BigInt t = 0;
        for (int i = 0; i < n; ++i) t += x[static_cast<size_t>(i) * n + i];
        return t;
    };

    std::vector<BigInt> mk = a;
    for (int k = 1; k <= n; ++k) {
        BigInt t = trace(mk);
        if (t % k != 0) throw std::logic_error("char_poly trace division is not exact");
        p.coeffs[k] = -t / k;
        if (k == n) {
            // Cayley-Hamilton residual must vanish.
            std::vector<BigInt> final_step = mk;
            for (int i = 0; i < n; ++i)
                final_step[static_cast<size_t>(i) * n + i] += p.coeffs[k];
            final_step = mul(final_step);
            for (const BigInt& x : final_step)
                if (x != 0) throw std::logic_error("char_poly residual is nonzero");
            break;
        }
        for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i) * n + i] += p.coeffs[k];
        mk = mul(mk);
    }
    return p;
}

}  // namespace mgspec
