// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// The F_q-valued quadratic form Q(x) = Tr(x^{q+1} - x^2) on F_{q^n}, its
// polarization B(x, y) = (Q(x+y) - Q(x) - Q(y)) / 2, radical, rank, and
// exact value-count formulas. The closed zero count deliberately runs
// through a different route (the excess formula) than the closed value
// count (Gram diagonalization), so the two can confirm each other.
#pragma once

#include <vector>

#include "ffcount/excess.hpp"
#include "ffcount/traces.hpp"

namespace ffcount {

enum class Method { brute, closed };

inline Method method_from_string(const std::string& s) {
    if (s == "brute") return Method::brute;
    if (s == "closed") return Method::closed;
    fail("unknown method '" + s + "' (expected brute or closed)");
}

// Q(x) = Tr(x^{q+1} - x^2) = Tr(x * (x^q - x)), evaluated with one Frobenius
// application and one fused trace-of-product.
inline Element qf_eval(const Element& x) {
    const FieldPtr& f = x.field;
    detail::require_extension(f, "qf_eval");
    Element u = f->frobenius(x);
    Element v = f->sub(u, x);
    Element out = f->base()->zero();
    f->raw_trace_of_product(x.d.data(), v.d.data(), out.d.data());
    return out;
}

// Polarization B(x, y), computed both from the definition and from the
// closed form Tr(y^q (x^{q^2} - 2x^q + x)) / 2; the routes must agree.
inline Element polarization(const Element& x, const Element& y) {
    const FieldPtr& f = x.field;
    detail::require_extension(f, "polarization");
    const FieldPtr& base = f->base();
    Element two_inv = base->inv(base->mul_small(base->one(), 2));

    Element via_def = base->mul(
        base->sub(base->sub(qf_eval(f->add(x, y)), qf_eval(x)), qf_eval(y)), two_inv);

    Element xq = f->frobenius(x);
    Element xqq = f->frobenius(xq);
    Element ker = f->add(f->sub(xqq, f->add(xq, xq)), x); // x^{q^2} - 2x^q + x
    Element yq = f->frobenius(y);
    Element tr = base->zero();
    f->raw_trace_of_product(yq.d.data(), ker.d.data(), tr.d.data());
    Element via_closed = base->mul(tr, two_inv);

    check(via_def == via_closed, "internal-arithmetic-fault: polarization routes disagree");
    return via_def;
}

// Radical dimension w of Q on F_{q^n}: the kernel of x -> x^{q^2} - 2x^q + x
// is the kernel of (Frob - 1)^2, of F_q-dimension 1 when p does not divide n
// and 2 when it does.
inline int radical_dim(long n, long p) {
    check(n >= 1, "radical_dim: n must be >= 1");
    check(p >= 3, "radical_dim: p must be an odd prime");
    return n % p == 0 ? 2 : 1;
}

// Enumerated size of the radical (solutions of x^{q^2} - 2x^q + x = 0).
inline bigint radical_size_brute(const FieldPtr& ext, long budget = kDefaultBudget) {
    detail::require_extension(ext, "radical_size_brute");
    const long len = ext->fp_degree();
    std::vector<digit> u(len), w(len), acc(len);
    bigint count = 0;
    ext->for_each(
        [&](const digit* x) {
            ext->raw_frobenius(x, u.data());
            ext->raw_frobenius(u.data(), w.data());
            ext->raw_sub(w.data(), u.data(), acc.data());
            ext->raw_sub(acc.data(), u.data(), acc.data());
            ext->raw_add(acc.data(), x, acc.data());
            for (long i = 0; i < len; ++i)
                if (acc[i]) return;
            ++count;
        },
        budget);
    return count;
}

// Quadratic character of u in its field: 0 for u = 0, else +1 for nonzero
// squares and -1 for non-squares, via u^((q-1)/2).
inline int quadratic_character(const Element& u) {
    const FieldPtr& k = u.field;
    if (k->is_zero(u)) return 0;
    Element s = k->pow(u, (k->cardinality() - 1) / 2);
    if (s == k->one()) return 1;
    check(s == k->neg(k->one()), "internal-arithmetic-fault: u^((q-1)/2) not +-1");
    return -1;
}

// Rank and discriminant (pivot product, well defined modulo squares) of the
// Gram matrix of B on the power basis, by symmetric congruence elimination.
struct GramProfile {
    int rank = 0;
    Element disc; // product of the rank nonzero pivots; one() when rank = 0
};

inline GramProfile gram_profile(const FieldPtr& ext) {
    detail::require_extension(ext, "gram_profile");
    const FieldPtr& base = ext->base();
    const int n = ext->degree();

    // Gram matrix over F_q on the basis z^i.
    std::vector<Element> basis;
    basis.reserve(n);
    Element zi = ext->one();
    for (int i = 0; i < n; ++i) {
        basis.push_back(zi);
        if (i + 1 < n) zi = ext->mul(zi, ext->gen());
    }
    std::vector<std::vector<Element>> a(n, std::vector<Element>(n, base->zero()));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Element b = polarization(basis[i], basis[j]);
            a[i][j] = b;
            a[j][i] = b;
        }

    GramProfile prof;
    prof.disc = base->one();
    for (int k = 0; k < n; ++k) {
        if (base->is_zero(a[k][k])) {
            int swap_with = -1, mix_with = -1;
            for (int l = k + 1; l < n; ++l) {
                if (!base->is_zero(a[l][l]) && swap_with < 0) swap_with = l;
                if (!base->is_zero(a[k][l]) && mix_with < 0) mix_with = l;
            }
            if (swap_with >= 0) {
                std::swap(a[k], a[swap_with]);
                for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][swap_with]);
            } else if (mix_with >= 0) {
                // Add row+column mix_with to k: new a[k][k] = 2 a[k][mix] != 0
                // in odd characteristic.
                for (int j = 0; j < n; ++j) a[k][j] = base->add(a[k][j], a[mix_with][j]);
                for (int i = 0; i < n; ++i) a[i][k] = base->add(a[i][k], a[i][mix_with]);
            } else {
                continue; // row k is zero within the remaining block
            }
        }
        const Element piv = a[k][k];
        check(!base->is_zero(piv), "internal-arithmetic-fault: zero pivot after mixing");
        prof.rank += 1;
        prof.disc = base->mul(prof.disc, piv);
        Element piv_inv = base->inv(piv);
        for (int l = k + 1; l < n; ++l) {
            if (base->is_zero(a[l][k])) continue;
            Element factor = base->mul(a[l][k], piv_inv);
            for (int j = 0; j < n; ++j)
                a[l][j] = base->sub(a[l][j], base->mul(factor, a[k][j]));
            for (int i = 0; i < n; ++i)
                a[i][l] = base->sub(a[i][l], base->mul(factor, a[i][k]));
        }
    }
    return prof;
}

// Exact count of {x : Q(x) = c} from the Gram profile. For rank m and
// radical dimension w = n - m (checked against the closed radical formula):
//   m even: N(c) = q^w (q^{m-1} + v(c) q^{m/2-1} eta),
//           eta = chi((-1)^{m/2} disc), v(0) = q-1, v(c != 0) = -1;
//   m odd:  N(c) = q^w (q^{m-1} + q^{(m-1)/2} chi((-1)^{(m-1)/2} disc) chi(c)).
// The counts are asserted to partition q^n over all c in F_q.
inline bigint qf_value_count_closed(const FieldPtr& ext, const Element& c) {
    detail::require_extension(ext, "qf_value_count_closed");
    const FieldPtr& base = ext->base();
    if (c.field.get() != base.get()) fail("qf_value_count_closed: value must lie in F_q");

    const int n = ext->degree();
    const long p = ext->characteristic();
    GramProfile prof = gram_profile(ext);
    const int m = prof.rank;
    const int w = n - m;
    check(w == radical_dim(n, p), "internal-arithmetic-fault: Gram rank vs radical dimension");

    const bigint q = base->cardinality();
    auto qe = [&](long e) { return pow_bigint(q, static_cast<unsigned long>(e)); };

    bigint n_zero, n_plus, n_minus; // counts for c = 0, chi(c) = +1, chi(c) = -1
    if (m == 0) {
        n_zero = qe(n);
        n_plus = n_minus = 0;
    } else if (m % 2 == 0) {
        Element d = prof.disc;
        if ((m / 2) % 2 == 1) d = base->neg(d);
        const int eta = quadratic_character(d);
        n_zero = qe(w) * (qe(m - 1) + (q - 1) * qe(m / 2 - 1) * eta);
        n_plus = n_minus = qe(w) * (qe(m - 1) - qe(m / 2 - 1) * eta);
    } else {
        Element d = prof.disc;
        if (((m - 1) / 2) % 2 == 1) d = base->neg(d);
        const int eta = quadratic_character(d);
        n_zero = qe(w) * qe(m - 1);
        n_plus = qe(w) * (qe(m - 1) + qe((m - 1) / 2) * eta);
        n_minus = qe(w) * (qe(m - 1) - qe((m - 1) / 2) * eta);
    }
    check(n_zero + ((q - 1) / 2) * (n_plus + n_minus) == qe(n),
          "internal-arithmetic-fault: value counts do not partition q^n");
    check(n_zero >= 0 && n_plus >= 0 && n_minus >= 0,
          "internal-arithmetic-fault: negative value count");

    const int chi = quadratic_character(c);
    return chi == 0 ? n_zero : (chi == 1 ? n_plus : n_minus);
}

// One enumeration pass giving the whole distribution {c -> #Q^{-1}(c)},
// indexed by the canonical index of c in F_q.
inline std::vector<bigint> qf_value_distribution_brute(const FieldPtr& ext,
                                                       long budget = kDefaultBudget) {
    detail::require_extension(ext, "qf_value_distribution_brute");
    const FieldPtr& base = ext->base();
    const long q = base->cardinality().convert_to<long>(); // <= q^n <= budget
    const long p = ext->characteristic();
    const long len = ext->fp_degree();
    const long s = base->fp_degree();

    std::vector<long> dist(q, 0); // counts bounded by the budget, so long suffices
    std::vector<digit> u(len), v(len), t(s);
    ext->for_each(
        [&](const digit* x) {
            ext->raw_frobenius(x, u.data());
            ext->raw_sub(u.data(), x, v.data());
            ext->raw_trace_of_product(x, v.data(), t.data());
            long idx = 0;
            for (long i = s - 1; i >= 0; --i) idx = idx * p + t[i];
            dist[idx] += 1;
        },
        budget);
    return std::vector<bigint>(dist.begin(), dist.end());
}

inline bigint qf_value_count(const FieldPtr& ext, const Element& c, Method method,
                             long budget = kDefaultBudget) {
    if (method == Method::closed) return qf_value_count_closed(ext, c);
    const FieldPtr& base = ext->base();
    if (c.field.get() != base.get()) fail("qf_value_count: value must lie in F_q");
    auto dist = qf_value_distribution_brute(ext, budget);
    return dist[base->index_of(c).convert_to<long>()];
}

// Zero count via the excess route: N(0) = q^{n-1} + E(n)/q, exactly.
// Independent of the Gram route above by construction.
inline bigint qf_zero_count_closed(long p, int r, long n) {
    const bigint q = q_pow(p, r);
    const bigint e = closed_form_excess(p, r, n);
    check(e % q == 0, "internal-arithmetic-fault: excess not divisible by q");
    return q_pow(p, static_cast<long>(r) * (n - 1)) + e / q;
}

inline bigint qf_zero_count(const FieldPtr& ext, Method method, long budget = kDefaultBudget) {
    detail::require_extension(ext, "qf_zero_count");
    if (method == Method::brute) {
        auto dist = qf_value_distribution_brute(ext, budget);
        return dist[0];
    }
    return qf_zero_count_closed(ext->characteristic(),
                                static_cast<int>(ext->base()->fp_degree()), ext->degree());
}

// The zero count equals the main term q^{n-1} exactly iff the rank n - w is
// odd: w = 1 with n even, or w = 2 with n odd.
inline bool zero_count_is_main_term(long n, long p) {
    return (n - radical_dim(n, p)) % 2 == 1;
}

} // namespace ffcount
