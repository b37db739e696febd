// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Point counts of the affine models y^q - y = f(x) over F_q, for f with
// gcd(deg f, p) = 1. For x fixed, y |-> y^q - y is F_q-linear with kernel F_q
// and image exactly the kernel of the relative trace, so x contributes q
// points when Tr_{F_{q^n}/F_q}(f(x)) = 0 and none otherwise; with the single
// place at infinity, #C(F_{q^n}) = q N + 1. Three named models are built in:
//   c1: f = x^{q+1} - x^2              (genus q(q-1)/2)
//   c2: f = x^{2q+1} - x^{q+2}         (genus q(q-1))
//   c3: f = x^{2q+1} - x^{q+2} + x^{q+1} - x^2
// Named models get a structured evaluation through the Frobenius tables; the
// dense Horner route stays public as the independent cross-check.
#pragma once

#include <string>
#include <vector>

#include "ffcount/excess.hpp"
#include "ffcount/ffield.hpp"
#include "ffcount/lpoly.hpp"

namespace ffcount {

struct CurveModel {
    std::string name;     // "c1", "c2", "c3", or "custom"
    FieldPtr coeff_field; // F_q
    Poly f;               // right-hand side, coefficients in coeff_field
    long genus = 0;       // (q - 1)(deg f - 1) / 2
};

inline CurveModel make_custom_curve(const FieldPtr& fq, Poly f, std::string name = "custom") {
    check(fq != nullptr, "make_custom_curve: null field");
    check(f.field == fq, "make_custom_curve: coefficients live in the wrong field");
    f = poly_trim(std::move(f));
    const long d = f.degree();
    check(d >= 1, "make_custom_curve: f must be nonconstant");
    const long p = fq->characteristic();
    if (gcd_long(d, p) != 1)
        fail("make_custom_curve: the genus formula needs gcd(deg f, p) = 1");
    const bigint qb = fq->cardinality();
    check(qb <= 1000000, "make_custom_curve: coefficient field too large");
    const long q = qb.convert_to<long>();
    return CurveModel{std::move(name), fq, std::move(f), (q - 1) * (d - 1) / 2};
}

// The built-in models. All three have degree = 1 mod p, so the genus
// formula applies for every odd q.
inline CurveModel make_named_curve(const FieldPtr& fq, const std::string& name) {
    check(fq != nullptr, "make_named_curve: null field");
    const bigint qb = fq->cardinality();
    check(qb <= 1000000, "make_named_curve: coefficient field too large");
    const long q = qb.convert_to<long>();
    const Element one = fq->one(), mone = fq->neg(fq->one());
    std::vector<std::pair<long, Element>> terms;
    if (name == "c1") {
        terms = {{q + 1, one}, {2, mone}};
    } else if (name == "c2") {
        terms = {{2 * q + 1, one}, {q + 2, mone}};
    } else if (name == "c3") {
        terms = {{2 * q + 1, one}, {q + 2, mone}, {q + 1, one}, {2, mone}};
    } else {
        fail("make_named_curve: unknown model '" + name + "' (want c1, c2, or c3)");
    }
    std::vector<Element> cs(static_cast<size_t>(terms[0].first) + 1, fq->zero());
    for (auto& [e, c] : terms) cs[static_cast<size_t>(e)] = c;
    auto curve = make_custom_curve(fq, poly_from_coeffs(fq, std::move(cs)), name);
    return curve;
}

namespace detail {

inline bool digits_zero(const digit* d, long len) {
    for (long i = 0; i < len; ++i)
        if (d[i]) return false;
    return true;
}

// Dense route: Horner-evaluate f over the top field, then apply the trace
// (the identity when the top field is the coefficient field itself).
inline long curve_trace_zero_count_dense(const CurveModel& curve, const FieldPtr& ext,
                                         long budget) {
    const bool top_is_coeff = (ext == curve.coeff_field);
    const long m = ext->fp_degree();
    const long mb = curve.coeff_field->fp_degree();
    const long d = curve.f.degree();
    std::vector<std::vector<digit>> ce;
    ce.reserve(static_cast<size_t>(d) + 1);
    for (long k = 0; k <= d; ++k) {
        const Element& c = curve.f.c[static_cast<size_t>(k)];
        ce.push_back(top_is_coeff ? c.d : ext->embed(c).d);
    }
    std::vector<digit> acc(m), tr(mb);
    long hits = 0;
    ext->for_each(
        [&](const digit* x) {
            acc = ce[static_cast<size_t>(d)];
            for (long k = d - 1; k >= 0; --k) {
                ext->raw_mul(acc.data(), x, acc.data());
                ext->raw_add(acc.data(), ce[static_cast<size_t>(k)].data(), acc.data());
            }
            if (top_is_coeff) {
                hits += digits_zero(acc.data(), m);
            } else {
                ext->raw_trace(acc.data(), tr.data());
                hits += digits_zero(tr.data(), mb);
            }
        },
        budget);
    return hits;
}

// Structured route for the named models, writing f(x) through u = x^q:
//   c1: x (u - x)   c2: x u (u - x)   c3: x (u + 1)(u - x)
// and fusing the final multiplication by x into the trace functional.
inline long curve_trace_zero_count_structured(const CurveModel& curve, const FieldPtr& ext,
                                              long budget) {
    int model = curve.name == "c1" ? 1 : curve.name == "c2" ? 2 : 3;
    const long m = ext->fp_degree();
    const long mb = curve.coeff_field->fp_degree();
    std::vector<digit> u(m), v(m), w(m), t(m), tr(mb);
    const std::vector<digit> one = ext->one().d;
    long hits = 0;
    ext->for_each(
        [&](const digit* x) {
            ext->raw_frobenius(x, u.data());
            ext->raw_sub(u.data(), x, v.data());
            const digit* arg = v.data();
            if (model == 2) {
                ext->raw_mul(u.data(), v.data(), t.data());
                arg = t.data();
            } else if (model == 3) {
                ext->raw_add(u.data(), one.data(), w.data());
                ext->raw_mul(v.data(), w.data(), t.data());
                arg = t.data();
            }
            ext->raw_trace_of_product(x, arg, tr.data());
            hits += digits_zero(tr.data(), mb);
        },
        budget);
    return hits;
}

inline void require_curve_field(const CurveModel& curve, const FieldPtr& ext) {
    check(ext != nullptr, "count_points: null field");
    check(ext == curve.coeff_field || ext->base() == curve.coeff_field,
          "count_points: need the coefficient field or a relative extension of it");
}

} // namespace detail

// #C(F_{q^n}) by dense evaluation; the independent reference route.
inline bigint count_points_dense(const CurveModel& curve, const FieldPtr& ext,
                                 long budget = kDefaultBudget) {
    detail::require_curve_field(curve, ext);
    long n0 = detail::curve_trace_zero_count_dense(curve, ext, budget);
    return curve.coeff_field->cardinality() * n0 + 1;
}

// #C(F_{q^n}); structured evaluation for the named models over a proper
// extension, dense Horner otherwise.
inline bigint count_points(const CurveModel& curve, const FieldPtr& ext,
                           long budget = kDefaultBudget) {
    detail::require_curve_field(curve, ext);
    if (ext == curve.coeff_field || curve.name == "custom")
        return count_points_dense(curve, ext, budget);
    long n0 = detail::curve_trace_zero_count_structured(curve, ext, budget);
    return curve.coeff_field->cardinality() * n0 + 1;
}

// Closed-form count for the c1 model: q^n + 1 + E(n) with E the closed-form
// charge excess of the defining form.
inline bigint closed_curve_count_c1(long p, int r, long n) {
    check(n >= 1, "closed_curve_count_c1: n must be >= 1");
    return q_pow(p, static_cast<long>(r) * n) + 1 + closed_form_excess(p, r, n);
}

// L-polynomial from brute-force counts over the first g extensions. Builds
// the extension tower on the curve's own coefficient field so elements stay
// interoperable.
inline LPolynomial lpoly_from_curve_brute(const CurveModel& curve, long budget = kDefaultBudget) {
    const auto& fq = curve.coeff_field;
    const long q = fq->cardinality().convert_to<long>();
    std::vector<bigint> counts;
    counts.reserve(static_cast<size_t>(curve.genus));
    for (long n = 1; n <= curve.genus; ++n) {
        FieldPtr ext = (n == 1) ? fq : Field::extension(fq, static_cast<int>(n));
        counts.push_back(count_points(curve, ext, budget));
    }
    return lpoly_from_counts(q, curve.genus, counts);
}

} // namespace ffcount
