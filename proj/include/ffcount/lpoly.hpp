// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Integer L-polynomials L(x) = prod_i (1 - alpha_i x) of degree 2g over F_q,
// converted to and from point counts by Newton's identities (all divisions
// exact and asserted), checked against the functional equation
// c_{2g-k} = q^{g-k} c_k, and classified by the p-adic valuations of their
// coefficients. Root moduli are verified numerically on the squarefree part
// only; everything else is exact integer arithmetic.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "ffcount/numeric.hpp"

namespace ffcount {

struct LPolynomial {
    long q = 0;             // base field size
    long g = 0;             // genus; degree exactly 2g
    std::vector<bigint> c;  // ascending coefficients, c[0] = 1, size 2g+1
};

inline LPolynomial make_lpoly(long q, long g, std::vector<bigint> coeffs) {
    check(q >= 3, "make_lpoly: q must be >= 3");
    check(g >= 0, "make_lpoly: negative genus");
    check(static_cast<long>(coeffs.size()) == 2 * g + 1,
          "make_lpoly: need exactly 2g + 1 coefficients");
    return LPolynomial{q, g, std::move(coeffs)};
}

// --- generic integer polynomial helpers --------------------------------------

inline std::vector<bigint> bigpoly_mul(const std::vector<bigint>& a,
                                       const std::vector<bigint>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<bigint> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<bigint> bigpoly_derivative(const std::vector<bigint>& a) {
    std::vector<bigint> out;
    for (size_t i = 1; i < a.size(); ++i) out.push_back(bigint(i) * a[i]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline bigint bigpoly_content(const std::vector<bigint>& a) {
    bigint g = 0;
    for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
    return g == 0 ? bigint(1) : g;
}

inline std::vector<bigint> bigpoly_strip_content(std::vector<bigint> a) {
    bigint g = bigpoly_content(a);
    for (auto& x : a) x /= g;
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

// Primitive gcd over Z via pseudo-remainders with content stripping.
inline std::vector<bigint> bigpoly_gcd(std::vector<bigint> a, std::vector<bigint> b) {
    auto trim = [](std::vector<bigint>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty()) return bigpoly_strip_content(std::move(b));
    if (b.empty()) return bigpoly_strip_content(std::move(a));
    a = bigpoly_strip_content(std::move(a));
    b = bigpoly_strip_content(std::move(b));
    while (!b.empty()) {
        // Pseudo-remainder of a by b.
        std::vector<bigint> r = a;
        const bigint lead = b.back();
        while (r.size() >= b.size()) {
            bigint f = r.back();
            size_t shift = r.size() - b.size();
            for (auto& x : r) x *= lead;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
            trim(r);
            if (r.empty()) break;
        }
        a = std::move(b);
        b = bigpoly_strip_content(std::move(r));
    }
    return a;
}

// Exact quotient in Z[x]; requires b | a with b primitive.
inline std::vector<bigint> bigpoly_divexact(std::vector<bigint> a,
                                            const std::vector<bigint>& b) {
    check(!b.empty(), "bigpoly_divexact: zero divisor");
    if (a.empty()) return {};
    check(a.size() >= b.size(), "bigpoly_divexact: not divisible");
    std::vector<bigint> q(a.size() - b.size() + 1, 0);
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        bigint num = a[k + b.size() - 1];
        check(num % b.back() == 0, "bigpoly_divexact: non-exact division step");
        bigint f = num / b.back();
        q[k] = f;
        if (f != 0)
            for (size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
    }
    for (const auto& x : a) check(x == 0, "bigpoly_divexact: nonzero remainder");
    return q;
}

// --- point counts <-> L-polynomial -------------------------------------------

// Power sums S_n = sum_i alpha_i^n from the counts #C(F_{q^n}) = q^n + 1 - S_n,
// n = 1..counts.size(). Each count must satisfy the Weil bound S_n^2 <= 4g^2 q^n.
inline std::vector<bigint> power_sums_from_counts(long q, long g,
                                                  const std::vector<bigint>& counts) {
    std::vector<bigint> s;
    s.reserve(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) {
        const long n = static_cast<long>(i) + 1;
        bigint sn = q_pow(q, n) + 1 - counts[i];
        check(sn * sn <= bigint(4) * g * g * q_pow(q, n),
              "count at n = " + std::to_string(n) + " violates the Weil bound");
        s.push_back(sn);
    }
    return s;
}

// Newton's identities: k c_k = -sum_{i=1..k} S_i c_{k-i}, exact division
// asserted; the top half is filled by the functional equation
// c_{2g-k} = q^{g-k} c_k.
inline LPolynomial lpoly_from_power_sums(long q, long g, const std::vector<bigint>& s) {
    check(static_cast<long>(s.size()) >= g,
          "lpoly_from_power_sums: need the first g power sums");
    std::vector<bigint> c(2 * g + 1, 0);
    c[0] = 1;
    for (long k = 1; k <= g; ++k) {
        bigint acc = 0;
        for (long i = 1; i <= k; ++i) acc += s[i - 1] * c[k - i];
        check(acc % k == 0, "Newton recurrence: non-integral coefficient at k = " +
                                std::to_string(k));
        c[k] = -acc / k;
    }
    for (long k = 0; k < g; ++k) c[2 * g - k] = q_pow(q, g - k) * c[k];
    return make_lpoly(q, g, std::move(c));
}

inline LPolynomial lpoly_from_counts(long q, long g, const std::vector<bigint>& counts) {
    check(static_cast<long>(counts.size()) >= g,
          "lpoly_from_counts: need counts over the first g extensions");
    return lpoly_from_power_sums(q, g, power_sums_from_counts(q, g, counts));
}

// Forward direction: power sums from the coefficients, then counts.
inline std::vector<bigint> power_sums_from_lpoly(const LPolynomial& l, long upto) {
    check(upto >= 1, "power_sums_from_lpoly: need upto >= 1");
    const long d = 2 * l.g;
    std::vector<bigint> s(upto + 1, 0); // s[0] unused
    for (long n = 1; n <= upto; ++n) {
        bigint acc = 0;
        for (long i = 1; i < n && i <= d; ++i) acc += l.c[i] * s[n - i];
        if (n <= d)
            s[n] = -(bigint(n) * l.c[n] + acc);
        else
            s[n] = -acc;
    }
    return std::vector<bigint>(s.begin() + 1, s.end());
}

inline std::vector<bigint> counts_from_lpoly(const LPolynomial& l, long upto) {
    auto s = power_sums_from_lpoly(l, upto);
    std::vector<bigint> counts;
    counts.reserve(upto);
    for (long n = 1; n <= upto; ++n) counts.push_back(q_pow(l.q, n) + 1 - s[n - 1]);
    return counts;
}

// --- Weil verification --------------------------------------------------------

struct WeilReport {
    bool endpoints = false;          // c_0 = 1 and c_{2g} = q^g
    bool functional_equation = false;
    bool roots_on_circle = false;    // all inverse roots have |alpha| = sqrt(q)
    double max_root_error = 0.0;     // worst | |alpha|/sqrt(q) - 1 |
    bool pass() const { return endpoints && functional_equation && roots_on_circle; }
};

namespace detail {
// Durand-Kerner on the variable-rescaled polynomial M(y) = L(y / sqrt(q)),
// whose roots should sit on the unit circle. Returns worst | |y| - 1 |.
inline double unit_circle_root_error(const std::vector<bigint>& coeffs, long q) {
    const long d = static_cast<long>(coeffs.size()) - 1;
    if (d <= 0) return 0.0;
    const double sq = std::sqrt(static_cast<double>(q));
    std::vector<std::complex<double>> m(d + 1);
    for (long k = 0; k <= d; ++k)
        m[k] = coeffs[k].convert_to<double>() / std::pow(sq, static_cast<double>(k));
    for (long k = 0; k <= d; ++k) m[k] /= m[d]; // monic in y

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (long k = d; k >= 0; --k) acc = acc * z + m[k];
        return acc;
    };
    std::vector<std::complex<double>> z(d);
    for (long k = 0; k < d; ++k) {
        double th = 2.0 * 3.14159265358979323846 * (k + 0.25) / d;
        z[k] = std::complex<double>(std::cos(th), std::sin(th)) * 1.05;
    }
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0.0;
        for (long k = 0; k < d; ++k) {
            std::complex<double> denom = 1.0;
            for (long j = 0; j < d; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            std::complex<double> delta = eval(z[k]) / denom;
            z[k] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    double worst = 0.0;
    for (const auto& zk : z) worst = std::max(worst, std::abs(std::abs(zk) - 1.0));
    return worst;
}
} // namespace detail

inline constexpr double kRootModulusTolerance = 1e-6;

inline WeilReport weil_check(const LPolynomial& l) {
    WeilReport rep;
    const long g = l.g, q = l.q;
    rep.endpoints = (l.c[0] == 1) && (l.c[2 * g] == q_pow(q, g));
    rep.functional_equation = true;
    for (long k = 0; k <= g; ++k)
        if (l.c[2 * g - k] != q_pow(q, g - k) * l.c[k]) rep.functional_equation = false;

    // Root moduli: numeric, on the squarefree part only (multiplicities can
    // be large; the squarefree part keeps Durand-Kerner well conditioned).
    std::vector<bigint> lc = l.c;
    while (!lc.empty() && lc.back() == 0) lc.pop_back();
    if (lc.size() <= 1) {
        rep.roots_on_circle = true;
        return rep;
    }
    auto gcd_part = bigpoly_gcd(lc, bigpoly_derivative(lc));
    auto sqfree = bigpoly_divexact(bigpoly_strip_content(lc), gcd_part);
    rep.max_root_error = detail::unit_circle_root_error(sqfree, q);
    rep.roots_on_circle = rep.max_root_error <= kRootModulusTolerance;
    return rep;
}

// --- classification ------------------------------------------------------------

enum class Classification { maximal, minimal, supersingular, not_supersingular };

inline std::string to_string(Classification c) {
    switch (c) {
    case Classification::maximal: return "maximal";
    case Classification::minimal: return "minimal";
    case Classification::supersingular: return "supersingular";
    default: return "not-supersingular";
    }
}

// Maximal: L = (1 + sqrt(q) x)^{2g} (needs q square); minimal: the same with
// -sqrt(q); supersingular: every Weil number is sqrt(q) times a root of
// unity, equivalent to 2 ord_p(c_i) >= i r for all i (zero coefficients
// pass). Priority: maximal > minimal > supersingular > not_supersingular.
inline Classification classify_lpoly(const LPolynomial& l) {
    auto [p, r] = factor_prime_power(l.q);
    const long g = l.g;
    if (r % 2 == 0) {
        const bigint s = q_pow(p, r / 2);
        bool maximal = true, minimal = true;
        for (long i = 0; i <= 2 * g; ++i) {
            bigint bc = binomial(2 * g, i);
            if (l.c[i] != bc * pow_bigint(s, static_cast<unsigned long>(i))) maximal = false;
            if (l.c[i] != bc * pow_bigint(-s, static_cast<unsigned long>(i))) minimal = false;
        }
        if (maximal) return Classification::maximal;
        if (minimal) return Classification::minimal;
    }
    for (long i = 1; i <= 2 * g; ++i)
        if (2 * p_valuation(l.c[i], p) < i * r) return Classification::not_supersingular;
    return Classification::supersingular;
}

} // namespace ffcount
