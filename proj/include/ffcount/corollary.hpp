// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Inverse-root multiplicities of the closed-form L-polynomial of the model
// y^q - y = x^{q+1} - x^2. Every inverse root is sqrt(q) times a 4p-th root
// of unity, so the normalized power sums T_n = S_n / q^{n/2} are periodic
// with period 4p and a length-4p inverse DFT recovers the multiplicity of
// each class. The float DFT only picks integer candidates; the candidates
// are then validated exactly in Z[zeta_{4p}] (with sqrt(q) adjoined through
// the Gauss sum), which forces the product form to reproduce every power sum
// S_1..S_2g on the nose.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "ffcount/cyclotomic.hpp"
#include "ffcount/excess.hpp"
#include "ffcount/lpoly.hpp"

namespace ffcount {

struct RootClass {
    int sign = 1;       // the +/- in front of the class
    long k = 0;         // power of w = zeta_p
    std::string label;  // "+1", "-w^2", "+i*w", ...
    long slot = 0;      // j: the class root is sqrt(q) * zeta_{4p}^j
    long multiplicity = 0;
};

struct RootMultiplicityTable {
    long q = 0, p = 0;
    int r = 1;
    long genus = 0;
    bool uses_i = false; // true when q = 3 mod 4 (classes +-i w^k)
    std::vector<RootClass> classes; // 2p entries: k = 0..p-1, sign + then -
};

namespace detail {
inline std::string root_class_label(bool uses_i, int sign, long k) {
    std::string s = sign > 0 ? "+" : "-";
    if (uses_i) {
        s += "i";
        if (k > 0) s += "*";
    }
    if (k == 1) s += "w";
    if (k > 1) s += "w^" + std::to_string(k);
    if (!uses_i && k == 0) s += "1";
    return s;
}

inline long root_class_slot(bool uses_i, long p, int sign, long k) {
    long j;
    if (uses_i)
        j = (sign > 0 ? p : 3 * p) + 4 * k;
    else
        j = (sign > 0 ? 0 : 2 * p) + 4 * k;
    return j % (4 * p);
}
} // namespace detail

// Multiplicity table for q = p^r, built by inverse DFT of the normalized
// power sums and validated exactly. Asserted properties: integrality of the
// DFT output (residual < 1e-6), non-negativity, total 2g, support confined
// to the 2p class slots, and exact reproduction of S_1..S_2g in Z[zeta_{4p}].
inline RootMultiplicityTable corollary_table(long p, int r) {
    check(p >= 3 && is_prime(p), "corollary_table: p must be an odd prime");
    check(r >= 1, "corollary_table: r must be >= 1");
    const bigint qb = q_pow(p, r);
    check(qb <= 100000, "corollary_table: q too large for a 2g-degree table");
    const long q = qb.convert_to<long>();
    const long g = q * (q - 1) / 2;
    const long N = 4 * p;

    RootMultiplicityTable table;
    table.q = q;
    table.p = p;
    table.r = r;
    table.genus = g;
    table.uses_i = (q % 4 == 3);

    // Normalized power sums over one period.
    std::vector<double> t(N);
    t[0] = 2.0 * static_cast<double>(g);
    for (long n = 1; n < N; ++n) {
        double e = closed_form_excess(p, r, n).convert_to<double>();
        t[n] = -e / std::pow(static_cast<double>(q), n / 2.0);
    }

    // Inverse DFT; results must be (near-)integers with no imaginary part.
    const double pi = 3.14159265358979323846;
    std::vector<long> mult(N, 0);
    for (long j = 0; j < N; ++j) {
        std::complex<double> acc = 0.0;
        for (long n = 0; n < N; ++n) {
            double th = -2.0 * pi * static_cast<double>(j * n % N) / N;
            acc += t[n] * std::complex<double>(std::cos(th), std::sin(th));
        }
        acc /= static_cast<double>(N);
        double re = acc.real(), im = acc.imag();
        double rounded = std::round(re);
        check(std::abs(re - rounded) < 1e-6 && std::abs(im) < 1e-6,
              "internal-arithmetic-fault: DFT multiplicity is not an integer");
        check(rounded >= -0.5, "internal-arithmetic-fault: negative multiplicity");
        mult[j] = static_cast<long>(rounded);
    }

    long total = 0;
    std::vector<bool> is_class_slot(N, false);
    for (long k = 0; k < p; ++k)
        for (int sign : {+1, -1}) {
            RootClass rc;
            rc.sign = sign;
            rc.k = k;
            rc.label = detail::root_class_label(table.uses_i, sign, k);
            rc.slot = detail::root_class_slot(table.uses_i, p, sign, k);
            rc.multiplicity = mult[rc.slot];
            is_class_slot[rc.slot] = true;
            total += rc.multiplicity;
            table.classes.push_back(std::move(rc));
        }
    for (long j = 0; j < N; ++j)
        check(is_class_slot[j] || mult[j] == 0,
              "internal-arithmetic-fault: multiplicity outside the class slots");
    check(total == 2 * g, "internal-arithmetic-fault: multiplicities must sum to 2g");

    // Exact validation: P_n = sum_j mult_j (sqrt(q) zeta^j)^n must equal
    // S_n = -E(n) for n = 1..2g. Since both sides are power sums of monic
    // degree-2g integer polynomials with constant term 1, this forces the
    // product form prod_j (1 - sqrt(q) zeta^j x)^{mult_j} to BE the closed
    // form L-polynomial.
    QuotientRing<bigint> ring(cyclotomic_4p_modulus<bigint>(p));
    using Elt = QuotientRing<bigint>::Elt;
    Elt sqrt_q;
    if (r % 2 == 0) {
        sqrt_q = ring.from_scalar(q_pow(p, r / 2));
    } else {
        sqrt_q = ring.scale(sqrt_p_element(ring, p), q_pow(p, (r - 1) / 2));
    }
    check(ring.equal(ring.mul(sqrt_q, sqrt_q), ring.from_scalar(q)),
          "internal-arithmetic-fault: sqrt(q) element does not square to q");

    std::vector<Elt> zpow(N);
    for (long j = 0; j < N; ++j) zpow[j] = ring.basis_power(j);
    Elt sq_pow = ring.one(); // sqrt(q)^n, updated per n
    for (long n = 1; n <= 2 * g; ++n) {
        sq_pow = ring.mul(sq_pow, sqrt_q);
        Elt acc = ring.zero();
        for (long j = 0; j < N; ++j)
            if (mult[j] != 0) acc = ring.add(acc, ring.scale(zpow[(j * n) % N], mult[j]));
        Elt pn = ring.mul(acc, sq_pow);
        Elt sn = ring.from_scalar(-closed_form_excess(p, r, n));
        check(ring.equal(pn, sn),
              "internal-arithmetic-fault: product-form power sum differs from the "
              "closed form at n = " + std::to_string(n));
    }
    return table;
}

// The closed-form L-polynomial itself, from the excess power sums.
inline LPolynomial closed_lpoly(long p, int r) {
    const bigint qb = q_pow(p, r);
    check(qb <= 100000, "closed_lpoly: q too large");
    const long q = qb.convert_to<long>();
    const long g = q * (q - 1) / 2;
    std::vector<bigint> s;
    s.reserve(g);
    for (long n = 1; n <= g; ++n) s.push_back(-closed_form_excess(p, r, n));
    return lpoly_from_power_sums(q, g, s);
}

// L-polynomial reconstructed from the table's own classes, exactly: power
// sums are computed in Z[zeta_{4p}], must be rational integers, and feed the
// same Newton recurrence. Independent recomposition for the equality checks.
inline LPolynomial table_lpoly(const RootMultiplicityTable& table) {
    const long p = table.p, N = 4 * p, g = table.genus;
    QuotientRing<bigint> ring(cyclotomic_4p_modulus<bigint>(p));
    using Elt = QuotientRing<bigint>::Elt;
    Elt sqrt_q;
    if (table.r % 2 == 0)
        sqrt_q = ring.from_scalar(q_pow(p, table.r / 2));
    else
        sqrt_q = ring.scale(sqrt_p_element(ring, p), q_pow(p, (table.r - 1) / 2));

    std::vector<Elt> zpow(N);
    for (long j = 0; j < N; ++j) zpow[j] = ring.basis_power(j);
    std::vector<bigint> s;
    s.reserve(g);
    Elt sq_pow = ring.one();
    for (long n = 1; n <= g; ++n) {
        sq_pow = ring.mul(sq_pow, sqrt_q);
        Elt acc = ring.zero();
        for (const auto& rc : table.classes)
            if (rc.multiplicity != 0)
                acc = ring.add(acc, ring.scale(zpow[(rc.slot * n) % N], rc.multiplicity));
        Elt pn = ring.mul(acc, sq_pow);
        for (long i = 1; i < ring.deg(); ++i)
            check(pn[i] == 0, "internal-arithmetic-fault: table power sum not rational");
        s.push_back(pn[0]);
    }
    return lpoly_from_power_sums(table.q, g, s);
}

// Multiplicities exactly as the printed table states them, as exact
// rationals aligned with corollary_table's class order. Three families:
// q square; q nonsquare with q = 1 mod 4; q = 3 mod 4. All square roots
// involved are integers for the relevant parity of r, so the printed values
// are exact rationals (not necessarily non-negative integers; the q-square
// +-1 entries famously are not).
inline std::vector<bigrat> printed_corollary_multiplicities(long p, int r) {
    const bigint qb = q_pow(p, r);
    check(qb <= 100000, "printed_corollary_multiplicities: q too large");
    const long q = qb.convert_to<long>();
    const bigrat half_qm1(q - 1, 2);
    const bigrat q_over_p(q, p);
    std::vector<bigrat> out;

    if (r % 2 == 0) {
        // q a square: sqrt(q) integral.
        const bigint sq = q_pow(p, r / 2);
        for (long k = 0; k < p; ++k)
            for (int sign : {+1, -1}) {
                bigrat base = q_over_p;
                const bigint ssq = sign > 0 ? sq : bigint(-sq);
                if (k == 0) {
                    const bigint num = -ssq * p;
                    base += bigrat(num, bigint(p - 1));
                } else {
                    base += bigrat(ssq, bigint(p));
                }
                out.push_back(base * half_qm1);
            }
        return out;
    }

    // q nonsquare: sqrt(q/p) integral.
    const bigint sqp = q_pow(p, (r - 1) / 2);
    const bool with_i = (q % 4 == 3);
    for (long k = 0; k < p; ++k)
        for (int sign : {+1, -1}) {
            bigrat base = q_over_p;
            if (k != 0) {
                bigint num = legendre(k, p) * sqp;
                if ((sign > 0) != with_i) num = -num;
                base += bigrat(num);
            }
            out.push_back(base * half_qm1);
        }
    return out;
}

} // namespace ffcount
