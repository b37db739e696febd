// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Fiber counts for prescribed trace and subtrace over F_{q^n}/F_q, the
// matching monic-irreducible-polynomial counts via p-free Mobius inversion,
// reduction of a general target to trace zero, and the three-coefficient
// counts (trace, subtrace, third symmetric function) with their exact
// closed-form evaluation at q = 3.
//
// Conventions. F(n, t1, t2) below always means the element count
// |{a in F_{q^n} : trace1(a) = t1, trace2(a) = t2}|. A monic polynomial
// x^n + a_1 x^{n-1} + a_2 x^{n-2} + ... with root b has trace1(b) = -a_1 and
// trace2(b) = +a_2; at the all-zero target, the only one the closed
// irreducible count needs, the sign difference vanishes.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ffcount/cyclotomic.hpp"
#include "ffcount/excess.hpp"
#include "ffcount/qforms.hpp"
#include "ffcount/traces.hpp"

namespace ffcount {

namespace detail {

inline bool all_zero_digits(const digit* d, long len) {
    for (long i = 0; i < len; ++i)
        if (d[i]) return false;
    return true;
}

// Canonical index of a little-endian digit block: d_0 + d_1 p + d_2 p^2 + ...
inline long canonical_index_small(const digit* d, long len, long p) {
    long idx = 0;
    for (long i = len - 1; i >= 0; --i) idx = idx * p + d[i];
    return idx;
}

inline long inv_mod(long a, long p) { // p prime; a must be a unit mod p
    a %= p;
    if (a < 0) a += p;
    check(a != 0, "internal-arithmetic-fault: inv_mod of zero residue");
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const long quot = r / nr;
        t = std::exchange(nt, t - quot * nt);
        r = std::exchange(nr, r - quot * nr);
    }
    check(r == 1, "internal-arithmetic-fault: inv_mod of non-unit");
    return t < 0 ? t + p : t;
}

inline void require_in_field(const Element& e, const FieldPtr& f, const char* who) {
    if (e.field.get() != f.get()) fail(std::string(who) + ": field-mismatch for target element");
}

} // namespace detail

// --- trace-pair fiber counts -------------------------------------------------

// Counts of every (trace1, trace2) target in one enumeration pass. Slot
// layout: index_of(t1) * q + index_of(t2). The subtrace is recovered from
// the trace functionals as (trace1(x)^2 - trace1(x^2)) / 2.
inline std::vector<bigint> trace_pair_distribution_brute(const FieldPtr& ext,
                                                         long budget = kDefaultBudget) {
    detail::require_extension(ext, "trace_pair_distribution_brute");
    const FieldPtr& base = ext->base();
    const bigint qb = base->cardinality();
    if (qb * qb > budget)
        fail("budget-exceeded: distribution needs " + bigint(qb * qb).str() +
             " slots, budget is " + std::to_string(budget));
    const long q = qb.convert_to<long>();
    const long p = ext->characteristic();
    const long lb = base->fp_degree();
    const Element inv2 = base->inv(base->mul_small(base->one(), 2));

    std::vector<long long> cnt(static_cast<std::size_t>(q) * q, 0);
    std::vector<digit> t1(lb), sq(lb), tmp(lb);
    ext->for_each(
        [&](const digit* x) {
            ext->raw_trace(x, t1.data());
            ext->raw_trace_of_product(x, x, sq.data());
            base->raw_mul(t1.data(), t1.data(), tmp.data());
            base->raw_sub(tmp.data(), sq.data(), tmp.data());
            base->raw_mul(tmp.data(), inv2.d.data(), tmp.data());
            const long i1 = detail::canonical_index_small(t1.data(), lb, p);
            const long i2 = detail::canonical_index_small(tmp.data(), lb, p);
            ++cnt[static_cast<std::size_t>(i1) * q + i2];
        },
        budget);
    return std::vector<bigint>(cnt.begin(), cnt.end());
}

// F(n, t1, t2) by enumeration of F_{q^n}.
inline bigint trace_pair_count_brute(const FieldPtr& ext, const Element& t1, const Element& t2,
                                     long budget = kDefaultBudget) {
    detail::require_extension(ext, "trace_pair_count_brute");
    const FieldPtr& base = ext->base();
    detail::require_in_field(t1, base, "trace_pair_count_brute");
    detail::require_in_field(t2, base, "trace_pair_count_brute");
    const long lb = base->fp_degree();
    const Element inv2 = base->inv(base->mul_small(base->one(), 2));

    long long count = 0;
    std::vector<digit> tb(lb), sq(lb), tmp(lb);
    ext->for_each(
        [&](const digit* x) {
            ext->raw_trace(x, tb.data());
            if (!std::equal(tb.begin(), tb.end(), t1.d.begin())) return;
            ext->raw_trace_of_product(x, x, sq.data());
            base->raw_mul(tb.data(), tb.data(), tmp.data());
            base->raw_sub(tmp.data(), sq.data(), tmp.data());
            base->raw_mul(tmp.data(), inv2.d.data(), tmp.data());
            if (std::equal(tmp.begin(), tmp.end(), t2.d.begin())) ++count;
        },
        budget);
    return bigint(count);
}

inline bigint zero_trace_pair_count_brute(const FieldPtr& ext, long budget = kDefaultBudget) {
    const FieldPtr& base = ext->base();
    return trace_pair_count_brute(ext, base->zero(), base->zero(), budget);
}

// F(n, 0, 0) in closed form: q^{n-2} plus excess/q^2, where excess is the
// closed-form projective-count deviation of the trace-zero curve. Exactness
// of the division is an invariant, not a rounding step. n = 1 is the lone
// special case (the single element with trace t1 has subtrace 0).
inline bigint zero_trace_pair_count_closed(long p, int r, long n) {
    if (n == 1) return 1;
    const bigint e = closed_form_excess(p, r, n);
    const bigint q2 = q_pow(p, 2L * r);
    check(e % q2 == 0, "internal-arithmetic-fault: excess not divisible by q^2");
    bigint out = q_pow(p, static_cast<long>(r) * (n - 2));
    out += e / q2;
    check(out >= 0, "internal-arithmetic-fault: negative zero-target count");
    return out;
}

// --- target reduction ---------------------------------------------------------

// For p coprime to n, shifting a by -trace1(a)/n kills the trace and moves
// the subtrace to t2 - ((n-1)/(2n)) t1^2; counts are preserved bijectively.
inline Element reduced_second_target(const FieldPtr& fq, long n, const Element& t1,
                                     const Element& t2) {
    const long p = fq->characteristic();
    check(n >= 1 && n % p != 0, "internal-arithmetic-fault: reduction requires p coprime to n");
    const long s = static_cast<long>(
        (static_cast<long long>((n - 1) % p) * detail::inv_mod((2 * n) % p, p)) % p);
    return fq->sub(t2, fq->mul_small(fq->mul(t1, t1), s));
}

// Printed variant of the same shift, linear in t1 instead of quadratic.
// Kept only so verify can exhibit the difference; no counting path uses it.
inline Element reduced_second_target_printed_variant(const FieldPtr& fq, long n,
                                                     const Element& t1, const Element& t2) {
    const long p = fq->characteristic();
    check(n >= 1 && n % p != 0, "internal-arithmetic-fault: reduction requires p coprime to n");
    const long s = static_cast<long>(
        (static_cast<long long>((n - 1) % p) * detail::inv_mod((2 * n) % p, p)) % p);
    return fq->sub(t2, fq->mul_small(t1, s));
}

struct TargetReduction {
    // p | n with t1 != 0: the fiber count is q^{n-2} for every t2 (shifting x
    // by c moves t2 by -c*t1 while fixing t1, so all subtrace values are
    // equally likely on that fiber). t1/t2 echo the input in this case.
    bool uniform_fiber = false;
    Element t1, t2; // equivalent target with t1 = 0 when uniform_fiber is false
};

inline TargetReduction reduce_target(const FieldPtr& fq, long n, const Element& t1,
                                     const Element& t2) {
    detail::require_in_field(t1, fq, "reduce_target");
    detail::require_in_field(t2, fq, "reduce_target");
    check(n >= 1, "reduce_target: need n >= 1");
    const long p = fq->characteristic();
    if (n % p == 0) {
        if (!fq->is_zero(t1)) return {true, t1, t2};
        return {false, t1, t2};
    }
    return {false, fq->zero(), reduced_second_target(fq, n, t1, t2)};
}

// F(n, t1, t2) in closed form for any target: reduce to t1 = 0, then divide
// the quadratic-form fiber |{x : Q(x) = t2'}| by q (the map x -> x^q - x is
// q-to-1 onto the trace kernel and turns the subtrace into Q). n <= 2 is
// evaluated by exact enumeration: the closed main term q^{n-2} is rational
// at n = 1, and both cases cost at most q^2 elements.
inline bigint trace_pair_count_closed(const FieldPtr& ext, const Element& t1,
                                      const Element& t2) {
    detail::require_extension(ext, "trace_pair_count_closed");
    const FieldPtr& base = ext->base();
    detail::require_in_field(t1, base, "trace_pair_count_closed");
    detail::require_in_field(t2, base, "trace_pair_count_closed");
    const long n = ext->degree();
    const long p = ext->characteristic();
    const int r = static_cast<int>(base->fp_degree());

    if (n <= 2) return trace_pair_count_brute(ext, t1, t2);

    const TargetReduction red = reduce_target(base, n, t1, t2);
    if (red.uniform_fiber) return q_pow(p, static_cast<long>(r) * (n - 2));

    const bigint fiber = qf_value_count_closed(ext, red.t2);
    const bigint q = base->cardinality();
    check(fiber % q == 0, "internal-arithmetic-fault: quadratic-form fiber not divisible by q");
    bigint out = fiber / q;
    if (base->is_zero(red.t2))
        check(out == zero_trace_pair_count_closed(p, r, n),
              "internal-arithmetic-fault: zero-target routes disagree");
    return out;
}

inline bigint trace_pair_count(const FieldPtr& ext, const Element& t1, const Element& t2,
                               Method method, long budget = kDefaultBudget) {
    return method == Method::closed ? trace_pair_count_closed(ext, t1, t2)
                                    : trace_pair_count_brute(ext, t1, t2, budget);
}

// --- irreducible-polynomial counts --------------------------------------------

// Number of monic irreducible x^n + a1 x^{n-1} + a2 x^{n-2} + ... over F_q,
// by enumerating the q^{n-2} free coefficient tuples.
inline bigint irreducible_count_brute(const FieldPtr& fq, long n, const Element& a1,
                                      const Element& a2, long budget = kPolyBudget) {
    if (n < 2) fail("irreducible_count_brute: need n >= 2 (two prescribed coefficients)");
    detail::require_in_field(a1, fq, "irreducible_count_brute");
    detail::require_in_field(a2, fq, "irreducible_count_brute");
    const bigint candidates = pow_bigint(fq->cardinality(), static_cast<unsigned long>(n - 2));
    if (candidates > budget)
        fail("budget-exceeded: " + candidates.str() + " candidate polynomials, budget is " +
             std::to_string(budget));

    const long free_coeffs = n - 2;
    const long lb = fq->fp_degree();
    const long p = fq->characteristic();
    std::vector<digit> od(static_cast<std::size_t>(free_coeffs) * lb, 0);
    std::vector<Element> cs(n + 1, fq->zero());
    cs[n] = fq->one();
    cs[n - 1] = a1;
    cs[n - 2] = a2;

    long long count = 0;
    do {
        for (long i = 0; i < free_coeffs; ++i)
            cs[i] = Element{fq, std::vector<digit>(od.begin() + i * lb, od.begin() + (i + 1) * lb)};
        if (is_irreducible(Poly{fq, cs})) ++count;
    } while (Field::raw_increment(od.data(), free_coeffs * lb, p));
    return bigint(count);
}

// f(n) from F(n) = sum_{d|n, p-free d} f(n/d): the p-free Mobius inversion
// f(n) = sum_{d|n, p-free d} mu(d) F(n/d).
inline bigint p_free_invert(const std::map<long, bigint>& summed, long n, long p) {
    check(n >= 1 && p >= 2, "p_free_invert: need n >= 1 and p >= 2");
    bigint acc = 0;
    for (long d : divisors(n)) {
        if (d % p == 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        const auto it = summed.find(n / d);
        if (it == summed.end())
            fail("incomplete-input: missing summed value at " + std::to_string(n / d));
        acc += mu * it->second;
    }
    return acc;
}

// Printed variant with the Mobius factor evaluated at n instead of at the
// divisor. Kept only so verify can exhibit the difference.
inline bigint p_free_invert_printed_variant(const std::map<long, bigint>& summed, long n,
                                            long p) {
    check(n >= 1 && p >= 2, "p_free_invert_printed_variant: need n >= 1 and p >= 2");
    const int mu_n = mobius(n);
    bigint acc = 0;
    for (long d : divisors(n)) {
        if (d % p == 0) continue;
        const auto it = summed.find(n / d);
        if (it == summed.end())
            fail("incomplete-input: missing summed value at " + std::to_string(n / d));
        acc += mu_n * it->second;
    }
    return acc;
}

// Count of monic irreducibles of degree n over F_q whose top two prescribed
// coefficients vanish, from the zero-target fiber counts:
//   n * I(n) = sum_{d|n, p-free d} mu(d) (F(n/d, 0, 0) - [p|n] q^{n/(pd)}).
// The supplied callback provides F(m, 0, 0); exact divisibility by n and
// non-negativity are invariants.
inline bigint irreducible_zero_count_with(long q, long n,
                                          const std::function<bigint(long)>& zero_pair_count) {
    if (n < 2) fail("irreducible_zero_count: need n >= 2");
    const auto [p, r] = factor_prime_power(q);
    (void)r;
    const bool p_divides_n = (n % p == 0);
    bigint acc = 0;
    for (long d : divisors(n)) {
        if (d % p == 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        bigint term = zero_pair_count(n / d);
        if (p_divides_n) term -= q_pow(q, n / (p * d));
        acc += mu * term;
    }
    check(acc >= 0 && acc % n == 0,
          "internal-arithmetic-fault: inversion sum not a non-negative multiple of n");
    return acc / n;
}

inline bigint irreducible_zero_count_closed(long q, long n) {
    const auto [p, r] = factor_prime_power(q);
    return irreducible_zero_count_with(
        q, n, [&](long m) { return zero_trace_pair_count_closed(p, r, m); });
}

// --- power-coefficient transform ----------------------------------------------

// Trace data of P^d from trace data of P: if P has trace values (t1, t2)
// then P^d has (d t1, C(d,2) t1^2 + d t2). Values here are the symmetric
// functions of the roots (so the signed coefficients), not raw coefficients.
inline std::pair<Element, Element> power_coeff_transform(long d, const Element& t1,
                                                         const Element& t2) {
    check(d >= 1, "power_coeff_transform: need d >= 1");
    if (t1.field.get() != t2.field.get()) fail("power_coeff_transform: field-mismatch");
    const FieldPtr& k = t1.field;
    const long pairs = (d % 2 == 0) ? (d / 2) * (d - 1) : d * ((d - 1) / 2);
    Element u1 = k->mul_small(t1, d);
    Element u2 = k->add(k->mul_small(k->mul(t1, t1), pairs), k->mul_small(t2, d));
    return {std::move(u1), std::move(u2)};
}

// Printed variant with the C(d,2) term linear in t1. Kept only so verify can
// exhibit the difference.
inline std::pair<Element, Element> power_coeff_transform_printed_variant(long d,
                                                                         const Element& t1,
                                                                         const Element& t2) {
    check(d >= 1, "power_coeff_transform_printed_variant: need d >= 1");
    if (t1.field.get() != t2.field.get()) fail("power_coeff_transform_printed_variant: field-mismatch");
    const FieldPtr& k = t1.field;
    const long pairs = (d % 2 == 0) ? (d / 2) * (d - 1) : d * ((d - 1) / 2);
    Element u1 = k->mul_small(t1, d);
    Element u2 = k->add(k->mul_small(t1, pairs), k->mul_small(t2, d));
    return {std::move(u1), std::move(u2)};
}

// --- three-coefficient counts ---------------------------------------------------

struct ThreeCoeffCounts {
    bigint zero_triple;        // |{a : trace1 = trace2 = trace3 = 0}|, counted directly
    bigint pair_count;         // |{x : Tr(x^{q+1}-x^2) = Tr(x^{2q+1}-x^{q+2}) = 0}|
    bigint printed_pair_count; // printed variant: first condition Tr(x^{q+2}-x^2) = 0
};

// One enumeration pass producing all three counts. The two-trace condition
// is the image-side description of the direct count (x -> x^q - x is q-to-1
// onto the trace kernel), so pair_count = q * zero_triple is asserted. The
// printed variant of the first condition is only reported; verify compares
// it and emits an erratum record where it breaks.
inline ThreeCoeffCounts three_coeff_counts_brute(const FieldPtr& ext,
                                                 long budget = kDefaultBudget) {
    detail::require_extension(ext, "three_coeff_counts_brute");
    const FieldPtr& base = ext->base();
    const long n = ext->degree();
    const long len = ext->fp_degree();
    const long lb = base->fp_degree();
    const Element one = ext->one();

    std::vector<digit> u(len), v(len), t(len), w(len), u1(len), y(len), ynext(len);
    std::vector<digit> s1(len), s2(len), s3(len), m(len);
    std::vector<digit> a(lb), b(lb), c(lb), tb(lb);
    long long zero_triple = 0, pair_count = 0, printed_pair = 0;

    ext->for_each(
        [&](const digit* x) {
            ext->raw_frobenius(x, u.data());                          // u = x^q
            ext->raw_sub(u.data(), x, v.data());                      // v = x^q - x
            ext->raw_trace_of_product(x, v.data(), a.data());         // Tr(x^{q+1} - x^2)
            ext->raw_mul(u.data(), v.data(), t.data());
            ext->raw_trace_of_product(x, t.data(), b.data());         // Tr(x^{2q+1} - x^{q+2})
            const bool z2 = detail::all_zero_digits(b.data(), lb);
            if (z2 && detail::all_zero_digits(a.data(), lb)) ++pair_count;
            ext->raw_mul(x, x, w.data());                             // w = x^2
            ext->raw_sub(u.data(), one.d.data(), u1.data());
            ext->raw_trace_of_product(w.data(), u1.data(), c.data()); // Tr(x^{q+2} - x^2)
            if (z2 && detail::all_zero_digits(c.data(), lb)) ++printed_pair;

            // Direct count. trace1 and trace2 come from the trace
            // functionals (trace2 = -Tr(x^2)/2 once trace1 = 0; p is odd);
            // the conjugate walk for the third symmetric function runs only
            // on the survivors, about one element in q^2.
            ext->raw_trace(x, tb.data());
            if (!detail::all_zero_digits(tb.data(), lb)) return;
            ext->raw_trace(w.data(), tb.data());
            if (!detail::all_zero_digits(tb.data(), lb)) return;
            std::fill(s1.begin(), s1.end(), 0);
            std::fill(s2.begin(), s2.end(), 0);
            std::fill(s3.begin(), s3.end(), 0);
            std::copy(x, x + len, y.begin());
            for (long i = 0; i < n; ++i) {
                ext->raw_mul(s2.data(), y.data(), m.data());
                ext->raw_add(s3.data(), m.data(), s3.data());
                ext->raw_mul(s1.data(), y.data(), m.data());
                ext->raw_add(s2.data(), m.data(), s2.data());
                ext->raw_add(s1.data(), y.data(), s1.data());
                if (i + 1 < n) {
                    ext->raw_frobenius(y.data(), ynext.data());
                    std::swap(y, ynext);
                }
            }
            check(detail::all_zero_digits(s1.data(), len) &&
                      detail::all_zero_digits(s2.data(), len),
                  "internal-arithmetic-fault: symmetric-function walk disagrees with traces");
            if (detail::all_zero_digits(s3.data(), len)) ++zero_triple;
        },
        budget);

    ThreeCoeffCounts out{bigint(zero_triple), bigint(pair_count), bigint(printed_pair)};
    check(out.pair_count == base->cardinality() * out.zero_triple,
          "internal-arithmetic-fault: two-trace fiber count is not q times the direct count");
    return out;
}

inline bigint three_coeff_zero_count_brute(const FieldPtr& ext, long budget = kDefaultBudget) {
    return three_coeff_counts_brute(ext, budget).zero_triple;
}

// --- closed-form display for the q = 3 three-coefficient count -------------------

// Ascending integer coefficients of the degree-6 factor whose square is the
// second named curve's L-polynomial at q = 3.
inline const std::vector<bigint>& lpoly_factor_c2_q3() {
    static const std::vector<bigint> v{1, 3, 9, 15, 27, 27, 27};
    return v;
}

// Printed variant of the third named curve's L-polynomial at q = 3
// (ascending). Its x^8 coefficient is inconsistent with the functional
// equation c_{12-k} = 3^{6-k} c_k; the brute-force L-polynomial differs
// exactly there, and verify emits the comparison as an erratum record.
inline const std::vector<bigint>& printed_lpoly_c3_q3() {
    static const std::vector<bigint> v{1,    6,    18,   39,   63,   81,  117,
                                       243,  576,  1053, 1458, 1458, 729};
    return v;
}

// The same list with the x^8 coefficient replaced by the functional-equation
// value 3^2 * c_4 = 567. Tests assert this equals the brute-force
// L-polynomial of the third named curve.
inline const std::vector<bigint>& corrected_lpoly_c3_q3() {
    static const std::vector<bigint> v{1,    6,    18,   39,   63,   81,  117,
                                       243,  567,  1053, 1458, 1458, 729};
    return v;
}

// Ascending coefficients of the first named curve's L-polynomial at q = 3.
// Tests assert this equals both the brute-force L-polynomial and the one
// rebuilt from the closed root-multiplicity table.
inline const std::vector<bigint>& lpoly_c1_q3() {
    static const std::vector<bigint> v{1, 6, 18, 36, 54, 54, 27};
    return v;
}

// Power sums p_1..p_upto of the roots of a monic polynomial with rational
// coefficients (ascending, leading coefficient 1), by Newton's recurrence.
inline std::vector<bigrat> power_sums_from_monic_rational(const std::vector<bigrat>& a,
                                                          long upto) {
    const long d = static_cast<long>(a.size()) - 1;
    check(d >= 0 && a[d] == 1, "power_sums_from_monic_rational: polynomial must be monic");
    std::vector<bigrat> ps;
    ps.reserve(static_cast<std::size_t>(upto));
    for (long k = 1; k <= upto; ++k) {
        bigrat s = 0;
        if (k <= d) {
            bigrat t = a[d - k];
            t *= k;
            s -= t;
        }
        for (long i = 1; i < k && i <= d; ++i) {
            bigrat t = a[d - i];
            t *= ps[k - i - 1];
            s -= t;
        }
        ps.push_back(s);
    }
    return ps;
}

// Power sums of the reciprocal roots of a polynomial with constant term 1
// (ascending coefficients). For an L-polynomial these are the Weil numbers.
inline std::vector<bigrat> power_sums_reciprocal_roots(const std::vector<bigint>& c,
                                                       long upto) {
    check(!c.empty() && c.front() == 1,
          "power_sums_reciprocal_roots: constant term must be 1");
    const std::vector<bigrat> reversed(c.rbegin(), c.rend());
    return power_sums_from_monic_rational(reversed, upto);
}

// Derivation-backed closed form for the q = 3 three-coefficient zero count:
//   F(n, 0, 0, 0) = 3^{n-3} - (1/27) [S_n(L1) + S_n(L2) + 2 S_n(L3)],
// S_n(L) the n-th power sum of the reciprocal roots of L. The two trace
// conditions cut out a pencil with four nonzero rays: one per single curve,
// and two mixed rays carrying the third curve twice (x -> -x identifies
// them, fixing the first argument and negating the second). The result is an
// integer for every n >= 1; exactness is asserted, not rounded.
inline bigint three_coeff_zero_count_closed_q3(
    long n, const std::vector<bigint>& c3_lpoly = corrected_lpoly_c3_q3()) {
    check(n >= 1, "three_coeff_zero_count_closed_q3: need n >= 1");
    const bigrat s1 = power_sums_reciprocal_roots(lpoly_c1_q3(), n)[n - 1];
    const bigrat sa = power_sums_reciprocal_roots(lpoly_factor_c2_q3(), n)[n - 1];
    const bigrat s3 = power_sums_reciprocal_roots(c3_lpoly, n)[n - 1];
    bigrat acc = s1;
    acc += sa + sa; // L2 is the square of the degree-6 factor
    acc += s3 + s3;
    acc /= 27;
    bigrat out = n >= 3 ? bigrat(q_pow(3, n - 3)) : bigrat(bigint(1), q_pow(3, 3 - n));
    out -= acc;
    check(denominator(out) == 1 && numerator(out) >= 0,
          "internal-arithmetic-fault: three-coefficient closed count not a non-negative integer");
    return numerator(out);
}

struct ThreeCoeffClosedValue {
    bool is_rational = false; // all cyclotomic coordinates beyond the rational one vanish
    bool is_integer = false;
    bigrat rational;          // meaningful when is_rational
    bigint value;             // meaningful when is_integer
};

// Printed closed-form display under the integer-power-sum reading: the root
// sums are taken as the integer Newton power sums of the coefficient lists
// (equivalently, sums over reciprocal roots), which folds the 3^{n/2-3}
// prefactor into exact rationals for every n:
//   3^{n-3} + (1/27) [S_n(L1) + 2 S_n(A) + 2 S_n(c3)].
// This keeps the printed + sign and defaults to the printed degree-12 list;
// it is the printed variant that verify compares per n against the
// enumeration count. The derivation-backed form differs by the sign of the
// bracket (see three_coeff_zero_count_closed_q3, which matches the oracle).
inline ThreeCoeffClosedValue three_coeff_printed_value_q3(
    long n, const std::vector<bigint>& c3_lpoly = printed_lpoly_c3_q3()) {
    check(n >= 1, "three_coeff_printed_value_q3: need n >= 1");
    const bigrat s1 = power_sums_reciprocal_roots(lpoly_c1_q3(), n)[n - 1];
    const bigrat sa = power_sums_reciprocal_roots(lpoly_factor_c2_q3(), n)[n - 1];
    const bigrat s3 = power_sums_reciprocal_roots(c3_lpoly, n)[n - 1];
    bigrat acc = s1;
    acc += sa + sa;
    acc += s3 + s3;
    acc /= 27;
    bigrat total = n >= 3 ? bigrat(q_pow(3, n - 3)) : bigrat(bigint(1), q_pow(3, 3 - n));
    total += acc;
    ThreeCoeffClosedValue out;
    out.is_rational = true;
    out.rational = total;
    if (denominator(total) == 1) {
        out.is_integer = true;
        out.value = numerator(total);
    }
    return out;
}

// Exact evaluation of the printed closed-form display for the q = 3
// three-coefficient zero count, strictly as written, inside
// Q[z]/(z^4 - z^2 + 1) with z a primitive 12th root of unity:
//   3^{n-3} + 3^{n/2-3} (z^{3n} + z^{9n} + 2 z^{5n} + 2 z^{7n}
//                        + 2 sum alpha_j^n + 2 sum beta_j^n),
// alpha_j the literal roots of the degree-6 factor above and beta_j the
// literal roots of the injectable degree-12 list (default: printed). For
// odd n the prefactor is 3^{(n-7)/2} sqrt(3) with sqrt(3) = 2z - z^3.
// Under this reading the value is not even rational for most odd n; verify
// emits that as part of the display's erratum record.
inline ThreeCoeffClosedValue three_coeff_display_literal_q3(
    long n, const std::vector<bigint>& c3_lpoly = printed_lpoly_c3_q3()) {
    check(n >= 1, "three_coeff_closed_value_q3: need n >= 1");
    using Ring = QuotientRing<bigrat>;
    const Ring ring(cyclotomic_4p_modulus<bigrat>(3)); // z^4 - z^2 + 1

    const auto monic = [](const std::vector<bigint>& cs) {
        std::vector<bigrat> a;
        a.reserve(cs.size());
        for (const bigint& ci : cs) a.emplace_back(ci, cs.back());
        return a;
    };
    const std::vector<bigrat> sum_alpha =
        power_sums_from_monic_rational(monic(lpoly_factor_c2_q3()), n);
    const std::vector<bigrat> sum_beta = power_sums_from_monic_rational(monic(c3_lpoly), n);

    const auto pow3 = [](long e) {
        return e >= 0 ? bigrat(q_pow(3, e)) : bigrat(bigint(1), q_pow(3, -e));
    };
    const auto zpow = [&](long k) { return ring.basis_power(((k % 12) + 12) % 12); };

    Ring::Elt bracket = ring.add(zpow(3 * n), zpow(9 * n));
    bracket = ring.add(bracket, ring.scale(zpow(5 * n), bigrat(2)));
    bracket = ring.add(bracket, ring.scale(zpow(7 * n), bigrat(2)));
    bigrat tail = sum_alpha[n - 1];
    tail += sum_beta[n - 1];
    tail *= 2;
    bracket = ring.add(bracket, ring.from_scalar(tail));

    Ring::Elt scaled;
    if (n % 2 == 0) {
        scaled = ring.scale(bracket, pow3(n / 2 - 3));
    } else {
        Ring::Elt sqrt3 = ring.sub(ring.scale(ring.basis_power(1), bigrat(2)), ring.basis_power(3));
        check(ring.equal(ring.mul(sqrt3, sqrt3), ring.from_scalar(bigrat(3))),
              "internal-arithmetic-fault: sqrt(3) element check");
        scaled = ring.scale(ring.mul(bracket, sqrt3), pow3((n - 7) / 2));
    }
    const Ring::Elt total = ring.add(ring.from_scalar(pow3(n - 3)), scaled);

    ThreeCoeffClosedValue out;
    out.is_rational = true;
    for (std::size_t i = 1; i < total.size(); ++i)
        if (!(total[i] == 0)) out.is_rational = false;
    if (out.is_rational) {
        out.rational = total[0];
        if (denominator(out.rational) == 1) {
            out.is_integer = true;
            out.value = numerator(out.rational);
        }
    }
    return out;
}

} // namespace ffcount
