// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Relative traces and characteristic polynomials for extensions F_{q^n}/F_q.
// With y_i = a^(q^i) the conjugates of a, the monic characteristic polynomial
// is prod_i (x - y_i) = x^n - T1 x^{n-1} + T2 x^{n-2} - ..., so its x^{n-1}
// coefficient is -trace1(a) and its x^{n-2} coefficient is +trace2(a). Both
// trace routines compute their value along two independent routes and fault
// if the routes disagree.
#pragma once

#include "ffcount/ffield.hpp"

namespace ffcount {

namespace detail {
inline void require_extension(const FieldPtr& f, const char* who) {
    if (f->is_prime_field())
        fail(std::string(who) + ": element must live in an extension field");
}
} // namespace detail

// First power-sum symmetric function of the conjugates: sum_i a^(q^i).
// Conjugate summation, verified to land in F_q and to match the precomputed
// linear functional.
inline Element trace1(const Element& a) {
    const FieldPtr& f = a.field;
    detail::require_extension(f, "trace1");
    const int n = f->degree();
    Element conj = a, acc = f->zero();
    for (int i = 0; i < n; ++i) {
        acc = f->add(acc, conj);
        if (i + 1 < n) conj = f->frobenius(conj);
    }
    check(f->in_base(acc), "internal-arithmetic-fault: trace1 left the base field");
    Element via_sum = f->to_base(acc);
    Element via_table = f->trace_to_base(a);
    check(via_sum == via_table, "internal-arithmetic-fault: trace1 routes disagree");
    return via_sum;
}

// Second elementary symmetric function of the conjugates:
// sum_{i<j} a^(q^i) a^(q^j). Route one is the literal double sum; route two
// is the identity (trace1(a)^2 - trace1(a^2)) / 2, which needs odd
// characteristic. The two must agree.
inline Element trace2(const Element& a) {
    const FieldPtr& f = a.field;
    detail::require_extension(f, "trace2");
    const FieldPtr& base = f->base();
    const int n = f->degree();

    std::vector<Element> y;
    y.reserve(n);
    Element conj = a;
    for (int i = 0; i < n; ++i) {
        y.push_back(conj);
        if (i + 1 < n) conj = f->frobenius(conj);
    }
    Element direct = f->zero();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) direct = f->add(direct, f->mul(y[i], y[j]));
    check(f->in_base(direct), "internal-arithmetic-fault: trace2 left the base field");
    Element via_pairs = f->to_base(direct);

    Element t1 = trace1(a);
    Element tr_sq = f->trace_to_base(f->mul(a, a));
    Element two_inv = base->inv(base->mul_small(base->one(), 2));
    Element via_identity = base->mul(base->sub(base->mul(t1, t1), tr_sq), two_inv);

    check(via_pairs == via_identity, "internal-arithmetic-fault: trace2 routes disagree");
    return via_pairs;
}

// Fast single-pass (trace1, trace2) via the trace functionals; no conjugate
// orbit is formed. Property tests pin it to (trace1, trace2) elementwise.
inline std::pair<Element, Element> trace_pair(const Element& a) {
    const FieldPtr& f = a.field;
    detail::require_extension(f, "trace_pair");
    const FieldPtr& base = f->base();
    Element t1 = base->zero(), tr_sq = base->zero();
    f->raw_trace(a.d.data(), t1.d.data());
    f->raw_trace_of_product(a.d.data(), a.d.data(), tr_sq.d.data());
    Element two_inv = base->inv(base->mul_small(base->one(), 2));
    Element t2 = base->mul(base->sub(base->mul(t1, t1), tr_sq), two_inv);
    return {std::move(t1), std::move(t2)};
}

// Monic characteristic polynomial of a over the base field: the degree-n
// product of (x - y_i) over all n conjugates, multiplicities included.
inline Poly char_poly(const Element& a) {
    const FieldPtr& f = a.field;
    detail::require_extension(f, "char_poly");
    const FieldPtr& base = f->base();
    const int n = f->degree();

    Poly prod = poly_constant(f, f->one());
    Element conj = a;
    for (int i = 0; i < n; ++i) {
        Poly lin{f, {f->neg(conj), f->one()}};
        prod = poly_mul(prod, lin);
        if (i + 1 < n) conj = f->frobenius(conj);
    }
    std::vector<Element> cs;
    cs.reserve(prod.c.size());
    for (const auto& c : prod.c) {
        check(f->in_base(c), "internal-arithmetic-fault: char_poly coefficient not in base");
        cs.push_back(f->to_base(c));
    }
    Poly out{base, std::move(cs)};
    check(out.degree() == n, "internal-arithmetic-fault: char_poly degree");

    // Sign convention pinned: coefficient of x^{n-1} is -T1, of x^{n-2} is +T2.
    check(out.c[n - 1] == base->neg(trace1(a)),
          "internal-arithmetic-fault: char_poly x^{n-1} coefficient is not -trace1");
    if (n >= 2)
        check(out.c[n - 2] == trace2(a),
              "internal-arithmetic-fault: char_poly x^{n-2} coefficient is not +trace2");
    return out;
}

// Monic minimal polynomial: the product over the distinct Frobenius orbit of
// a. Its degree d divides n and char_poly = min_poly^(n/d), which is asserted.
inline Poly min_poly(const Element& a) {
    const FieldPtr& f = a.field;
    detail::require_extension(f, "min_poly");
    const FieldPtr& base = f->base();
    const int n = f->degree();

    std::vector<Element> orbit{a};
    Element conj = f->frobenius(a);
    while (!(conj == a)) {
        orbit.push_back(conj);
        conj = f->frobenius(conj);
        check(static_cast<int>(orbit.size()) <= n, "internal-arithmetic-fault: orbit overflow");
    }
    const int d = static_cast<int>(orbit.size());
    check(n % d == 0, "internal-arithmetic-fault: orbit size must divide n");

    Poly prod = poly_constant(f, f->one());
    for (const auto& y : orbit) prod = poly_mul(prod, Poly{f, {f->neg(y), f->one()}});
    std::vector<Element> cs;
    cs.reserve(prod.c.size());
    for (const auto& c : prod.c) {
        check(f->in_base(c), "internal-arithmetic-fault: min_poly coefficient not in base");
        cs.push_back(f->to_base(c));
    }
    Poly mp{base, std::move(cs)};

    Poly powed = poly_constant(base, base->one());
    for (int i = 0; i < n / d; ++i) powed = poly_mul(powed, mp);
    check(poly_equal(powed, char_poly(a)),
          "internal-arithmetic-fault: min_poly^(n/d) != char_poly");
    return mp;
}

} // namespace ffcount
