// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in F_p, F_q = F_{p^r}, and relative extensions F_{q^n},
// represented as a tower. Elements are flat little-endian digit vectors over
// F_p; each tower level interprets consecutive digit blocks as coefficients
// over its base field. Enumeration order, modulus selection, and all counts
// derived from them are deterministic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ffcount/numeric.hpp"

namespace ffcount {

using digit = std::int32_t;

inline constexpr long kDefaultBudget = 10'000'000;   // element-enumeration cap
inline constexpr long kPolyBudget = 1'000'000;       // polynomial-candidate cap

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A field element: flat base-p digits, little-endian, fixed length equal to
// the field's absolute degree. Trailing zeros are retained (canonical form).
struct Element {
    FieldPtr field;
    std::vector<digit> d;

    bool operator==(const Element& o) const { return d == o.d; }
    bool operator!=(const Element& o) const { return d != o.d; }
};

// Dense polynomial over a field. Little-endian coefficients; normalized so
// the leading coefficient is nonzero (zero polynomial has no coefficients,
// degree() == -1 standing in for "-inf").
struct Poly {
    FieldPtr field;
    std::vector<Element> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
};

namespace detail {
struct Scratch {
    std::vector<std::int64_t> i64;
    std::vector<digit> dg;
};
inline Scratch& tls_scratch() {
    thread_local Scratch s;
    return s;
}
} // namespace detail

class Field : public std::enable_shared_from_this<Field> {
public:
    // --- construction -----------------------------------------------------

    static FieldPtr prime(long p) {
        check_prime(p);
        return FieldPtr(new Field(p));
    }

    // Extension of `base` by a monic irreducible `modulus` of degree >= 1.
    // Rejects non-monic or reducible moduli.
    static FieldPtr extension(const FieldPtr& base, const Poly& modulus);

    // Extension by the deterministic modulus of the given degree: the monic
    // irreducible whose coefficient tuple (c_0, ..., c_{d-1}) is minimal as
    // a base-q integer. `index` skips that many irreducibles first (index 1
    // picks the second-smallest; used to show counts are modulus-independent).
    static FieldPtr extension(const FieldPtr& base, int deg, long index);
    static FieldPtr extension(const FieldPtr& base, int deg) {
        return extension(base, deg, 0);
    }

    // --- identity ----------------------------------------------------------

    long characteristic() const { return p_; }
    bool is_prime_field() const { return !base_; }
    const FieldPtr& base() const { return base_; }
    int degree() const { return deg_; }            // over the base field
    long fp_degree() const { return fp_deg_; }     // over F_p
    const bigint& cardinality() const { return card_; }
    // Cardinality of the base field (p for the prime field itself).
    const bigint& base_cardinality() const;
    const Poly& modulus() const { return modulus_poly_; }

    // --- element constructors ----------------------------------------------

    Element zero() const { return Element{self(), std::vector<digit>(fp_deg_, 0)}; }
    Element one() const {
        Element e = zero();
        e.d[0] = 1;
        return e;
    }
    // Residue class of the extension variable (undefined for prime fields).
    Element gen() const {
        check(!is_prime_field(), "gen: prime field has no extension generator");
        Element e = zero();
        e.d[base_->fp_degree()] = 1; // block 1 = base one
        return e;
    }
    Element from_digits(std::vector<digit> dd) const {
        check(static_cast<long>(dd.size()) == fp_deg_, "from_digits: wrong length");
        for (digit x : dd) check(0 <= x && x < p_, "from_digits: digit out of range");
        return Element{self(), std::move(dd)};
    }
    // Canonical index: the element's digit vector read as a little-endian
    // base-p integer. This matches reading base-field coefficient tuples as
    // base-q integers, so one encoding serves every tower level.
    Element from_index(bigint idx) const {
        check(idx >= 0 && idx < card_, "from_index: index out of range");
        std::vector<digit> dd(fp_deg_, 0);
        for (long i = 0; i < fp_deg_ && idx != 0; ++i) {
            dd[i] = static_cast<digit>(idx % p_);
            idx /= p_;
        }
        return Element{self(), std::move(dd)};
    }
    bigint index_of(const Element& a) const {
        require_mine(a);
        bigint idx = 0;
        for (long i = fp_deg_ - 1; i >= 0; --i) idx = idx * p_ + a.d[i];
        return idx;
    }

    // Coefficient views over the base field.
    std::vector<Element> base_coeffs(const Element& a) const {
        require_mine(a);
        check(!is_prime_field(), "base_coeffs: prime field");
        long s = base_->fp_degree();
        std::vector<Element> out;
        out.reserve(deg_);
        for (int j = 0; j < deg_; ++j)
            out.push_back(Element{base_, std::vector<digit>(a.d.begin() + j * s,
                                                            a.d.begin() + (j + 1) * s)});
        return out;
    }
    Element from_base_coeffs(const std::vector<Element>& cs) const {
        check(!is_prime_field(), "from_base_coeffs: prime field");
        check(static_cast<int>(cs.size()) <= deg_, "from_base_coeffs: too many coefficients");
        long s = base_->fp_degree();
        Element e = zero();
        for (size_t j = 0; j < cs.size(); ++j) {
            base_->require_mine(cs[j]);
            std::copy(cs[j].d.begin(), cs[j].d.end(), e.d.begin() + j * s);
        }
        return e;
    }
    Element embed(const Element& b) const {
        check(!is_prime_field(), "embed: prime field");
        base_->require_mine(b);
        Element e = zero();
        std::copy(b.d.begin(), b.d.end(), e.d.begin());
        return e;
    }
    bool in_base(const Element& a) const {
        require_mine(a);
        if (is_prime_field()) return true;
        for (long i = base_->fp_degree(); i < fp_deg_; ++i)
            if (a.d[i] != 0) return false;
        return true;
    }
    Element to_base(const Element& a) const {
        check(in_base(a), "to_base: element not in the base field");
        long s = base_->fp_degree();
        return Element{base_, std::vector<digit>(a.d.begin(), a.d.begin() + s)};
    }

    // --- arithmetic ----------------------------------------------------------

    bool is_zero(const Element& a) const {
        require_mine(a);
        for (digit x : a.d)
            if (x) return false;
        return true;
    }
    Element add(const Element& a, const Element& b) const {
        require_pair(a, b);
        Element out = zero();
        raw_add(a.d.data(), b.d.data(), out.d.data());
        return out;
    }
    Element sub(const Element& a, const Element& b) const {
        require_pair(a, b);
        Element out = zero();
        raw_sub(a.d.data(), b.d.data(), out.d.data());
        return out;
    }
    Element neg(const Element& a) const {
        require_mine(a);
        Element out = zero();
        raw_neg(a.d.data(), out.d.data());
        return out;
    }
    Element mul(const Element& a, const Element& b) const {
        require_pair(a, b);
        Element out = zero();
        raw_mul(a.d.data(), b.d.data(), out.d.data());
        return out;
    }
    Element mul_small(const Element& a, long k) const { // k as an integer multiple
        long kk = k % p_;
        if (kk < 0) kk += p_;
        Element out = zero();
        for (long i = 0; i < fp_deg_; ++i)
            out.d[i] = static_cast<digit>((static_cast<std::int64_t>(a.d[i]) * kk) % p_);
        return out;
    }
    Element inv(const Element& a) const;
    Element pow(const Element& a, bigint e) const;
    // a^(Q^k) with Q the base-field cardinality; the identity on prime fields.
    Element frobenius(const Element& a, long k = 1) const {
        require_mine(a);
        check(k >= 0, "frobenius: negative power");
        if (is_prime_field()) return a;
        Element out = a;
        Element tmp = zero();
        long kk = k % deg_; // the relative Galois group is cyclic of order deg_
        for (long i = 0; i < kk; ++i) {
            raw_frobenius(out.d.data(), tmp.d.data());
            std::swap(out, tmp);
        }
        return out;
    }
    // Relative trace to the base field via precomputed functionals.
    Element trace_to_base(const Element& a) const {
        require_mine(a);
        check(!is_prime_field(), "trace_to_base: prime field");
        Element out = base_->zero();
        raw_trace(a.d.data(), out.d.data());
        return out;
    }

    // --- enumeration ----------------------------------------------------------

    // Visits every element once, in ascending canonical-index order, as raw
    // digit pointers (valid only during the callback). Refuses when the
    // cardinality exceeds the budget.
    template <class Fn>
    void for_each(Fn&& fn, long budget = kDefaultBudget) const {
        check_budget(budget);
        std::vector<digit> d(fp_deg_, 0);
        do {
            fn(static_cast<const digit*>(d.data()));
        } while (raw_increment(d.data(), fp_deg_, p_));
    }

    class Enumerator {
    public:
        // Returns false once the stream is exhausted.
        bool next(Element& out) {
            if (done_) return false;
            out = Element{field_, digits_};
            done_ = !raw_increment(digits_.data(), static_cast<long>(digits_.size()),
                                   field_->characteristic());
            return true;
        }

    private:
        friend class Field;
        Enumerator(FieldPtr f) : field_(std::move(f)), digits_(field_->fp_degree(), 0) {}
        FieldPtr field_;
        std::vector<digit> digits_;
        bool done_ = false;
    };
    Enumerator enumerate(long budget = kDefaultBudget) const {
        check_budget(budget);
        return Enumerator(self());
    }

    // --- raw kernels (hot paths) -----------------------------------------------
    // Digit arrays must have length fp_degree() (base fp_degree() for traces).
    // Outputs must not alias inputs except where noted.

    void raw_add(const digit* a, const digit* b, digit* out) const { // aliasing ok
        for (long i = 0; i < fp_deg_; ++i) {
            digit s = a[i] + b[i];
            out[i] = s >= p_ ? s - static_cast<digit>(p_) : s;
        }
    }
    void raw_sub(const digit* a, const digit* b, digit* out) const { // aliasing ok
        for (long i = 0; i < fp_deg_; ++i) {
            digit s = a[i] - b[i];
            out[i] = s < 0 ? s + static_cast<digit>(p_) : s;
        }
    }
    void raw_neg(const digit* a, digit* out) const { // aliasing ok
        for (long i = 0; i < fp_deg_; ++i) out[i] = a[i] ? static_cast<digit>(p_) - a[i] : 0;
    }
    void raw_mul(const digit* a, const digit* b, digit* out) const { // out may alias
        auto& s = detail::tls_scratch();
        ensure_scratch(s);
        mul_impl(a, b, out, s.i64.data(), s.dg.data());
    }
    void raw_frobenius(const digit* a, digit* out) const { // out must NOT alias a
        auto& s = detail::tls_scratch();
        ensure_scratch(s);
        frob_impl(a, out, s.i64.data(), s.dg.data());
    }
    void raw_trace(const digit* a, digit* out_base) const {
        auto& s = detail::tls_scratch();
        ensure_scratch(s);
        trace_impl(a, out_base, s.i64.data(), s.dg.data());
    }
    // Tr(a*b) without forming a*b: sum_{i,j} a_i b_j Tr(z^{i+j}).
    void raw_trace_of_product(const digit* a, const digit* b, digit* out_base) const {
        auto& s = detail::tls_scratch();
        ensure_scratch(s);
        trace_prod_impl(a, b, out_base, s.i64.data(), s.dg.data());
    }
    static bool raw_increment(digit* d, long len, long p) { // odometer; false on wrap
        for (long i = 0; i < len; ++i) {
            if (++d[i] < p) return true;
            d[i] = 0;
        }
        return false;
    }

private:
    enum class Kind { Prime, PrimeExt, TowerExt };

    explicit Field(long p)
        : kind_(Kind::Prime), p_(p), deg_(1), fp_deg_(1), card_(p) {}

    Field(FieldPtr base, int deg)
        : kind_(base->is_prime_field() ? Kind::PrimeExt : Kind::TowerExt),
          p_(base->p_),
          base_(std::move(base)),
          deg_(deg),
          fp_deg_(base_->fp_deg_ * deg),
          card_(pow_bigint(base_->card_, static_cast<unsigned long>(deg))) {}

    FieldPtr self() const { return shared_from_this(); }

    static void check_prime(long p) {
        if (p < 3 || !is_prime(p)) fail("characteristic must be an odd prime >= 3");
    }
    void require_mine(const Element& a) const {
        if (a.field.get() != this) fail("field-mismatch: element belongs to another field");
        check(static_cast<long>(a.d.size()) == fp_deg_, "element has wrong digit length");
    }
    void require_pair(const Element& a, const Element& b) const {
        require_mine(a);
        require_mine(b);
    }
    void check_budget(long budget) const {
        if (card_ > budget)
            fail("enumeration budget exceeded: field has " + card_.str() +
                 " elements, budget is " + std::to_string(budget));
    }

    void ensure_scratch(detail::Scratch& s) const {
        if (s.i64.size() < need_i64_) s.i64.resize(need_i64_);
        if (s.dg.size() < need_dg_) s.dg.resize(need_dg_);
    }

    digit norm64(std::int64_t v) const {
        std::int64_t m = v % p_;
        if (m < 0) m += p_;
        return static_cast<digit>(m);
    }

    // --- implementation kernels; scratch laid out per level, bases use tails ---

    void mul_impl(const digit* a, const digit* b, digit* out, std::int64_t* s64,
                  digit* sdg) const {
        switch (kind_) {
        case Kind::Prime:
            out[0] = norm64(static_cast<std::int64_t>(a[0]) * b[0]);
            return;
        case Kind::PrimeExt: {
            const long m = deg_;
            std::int64_t* conv = s64; // 2m-1 lanes
            for (long k = 0; k < 2 * m - 1; ++k) conv[k] = 0;
            if (small_p_) {
                for (long i = 0; i < m; ++i) {
                    std::int64_t ai = a[i];
                    if (!ai) continue;
                    for (long j = 0; j < m; ++j) conv[i + j] += ai * b[j];
                }
                for (long k = 2 * m - 2; k >= m; --k) {
                    std::int64_t c = conv[k] % p_;
                    if (!c) continue;
                    const std::int64_t* row = mod_row_.data();
                    for (long j = 0; j < m; ++j) conv[k - m + j] -= c * row[j];
                }
            } else {
                for (long i = 0; i < m; ++i) {
                    std::int64_t ai = a[i];
                    if (!ai) continue;
                    for (long j = 0; j < m; ++j)
                        conv[i + j] = (conv[i + j] + ai * b[j]) % p_;
                }
                for (long k = 2 * m - 2; k >= m; --k) {
                    std::int64_t c = conv[k] % p_;
                    if (!c) continue;
                    const std::int64_t* row = mod_row_.data();
                    for (long j = 0; j < m; ++j)
                        conv[k - m + j] = (conv[k - m + j] - c * row[j]) % p_;
                }
            }
            for (long i = 0; i < m; ++i) out[i] = norm64(conv[i]);
            return;
        }
        case Kind::TowerExt: {
            const long m = deg_, s = base_->fp_deg_;
            digit* conv = sdg;                    // (2m-1)*s digits
            digit* tmp = conv + (2 * m - 1) * s;  // s digits
            digit* rest = tmp + 2 * s;            // base scratch
            std::fill(conv, conv + (2 * m - 1) * s, 0);
            for (long i = 0; i < m; ++i) {
                const digit* ai = a + i * s;
                if (block_zero(ai, s)) continue;
                for (long j = 0; j < m; ++j) {
                    base_->mul_impl(ai, b + j * s, tmp, s64, rest);
                    base_->raw_add(conv + (i + j) * s, tmp, conv + (i + j) * s);
                }
            }
            for (long k = 2 * m - 2; k >= m; --k) {
                const digit* ck = conv + k * s;
                if (block_zero(ck, s)) continue;
                for (long j = 0; j < m; ++j) {
                    base_->mul_impl(ck, mod_flat_.data() + j * s, tmp, s64, rest);
                    base_->raw_sub(conv + (k - m + j) * s, tmp, conv + (k - m + j) * s);
                }
            }
            std::copy(conv, conv + m * s, out);
            return;
        }
        }
    }

    void frob_impl(const digit* a, digit* out, std::int64_t* s64, digit* sdg) const {
        check(kind_ != Kind::Prime, "raw_frobenius: prime field");
        const long m = deg_;
        if (kind_ == Kind::PrimeExt) {
            std::int64_t* acc = s64; // m lanes
            for (long i = 0; i < m; ++i) acc[i] = 0;
            for (long j = 0; j < m; ++j) {
                std::int64_t aj = a[j];
                if (!aj) continue;
                const digit* col = frob_cols_.data() + j * m;
                if (small_p_) {
                    for (long i = 0; i < m; ++i) acc[i] += aj * col[i];
                } else {
                    for (long i = 0; i < m; ++i) acc[i] = (acc[i] + aj * col[i]) % p_;
                }
            }
            for (long i = 0; i < m; ++i) out[i] = norm64(acc[i]);
        } else {
            const long s = base_->fp_deg_;
            digit* tmp = sdg;        // s digits
            digit* rest = tmp + 2 * s;
            std::fill(out, out + fp_deg_, 0);
            for (long j = 0; j < m; ++j) {
                const digit* aj = a + j * s;
                if (block_zero(aj, s)) continue;
                const digit* col = frob_cols_.data() + j * fp_deg_;
                for (long i = 0; i < m; ++i) {
                    base_->mul_impl(aj, col + i * s, tmp, s64, rest);
                    base_->raw_add(out + i * s, tmp, out + i * s);
                }
            }
        }
    }

    void trace_impl(const digit* a, digit* out_base, std::int64_t* s64, digit* sdg) const {
        check(kind_ != Kind::Prime, "raw_trace: prime field");
        const long m = deg_;
        if (kind_ == Kind::PrimeExt) {
            std::int64_t acc = 0;
            for (long j = 0; j < m; ++j) {
                acc += static_cast<std::int64_t>(a[j]) * tau_[j];
                if (!small_p_) acc %= p_;
            }
            out_base[0] = norm64(acc);
        } else {
            const long s = base_->fp_deg_;
            digit* tmp = sdg;
            digit* rest = tmp + 2 * s;
            std::fill(out_base, out_base + s, 0);
            for (long j = 0; j < m; ++j) {
                const digit* aj = a + j * s;
                if (block_zero(aj, s)) continue;
                base_->mul_impl(aj, tau_flat_.data() + j * s, tmp, s64, rest);
                base_->raw_add(out_base, tmp, out_base);
            }
        }
    }

    void trace_prod_impl(const digit* a, const digit* b, digit* out_base,
                         std::int64_t* s64, digit* sdg) const {
        check(kind_ != Kind::Prime, "raw_trace_of_product: prime field");
        const long m = deg_;
        if (kind_ == Kind::PrimeExt) {
            std::int64_t acc = 0;
            for (long i = 0; i < m; ++i) {
                std::int64_t ai = a[i];
                if (!ai) continue;
                const std::int64_t* trow = tau_.data() + i;
                std::int64_t inner = 0;
                if (small_p_) {
                    for (long j = 0; j < m; ++j) inner += static_cast<std::int64_t>(b[j]) * trow[j];
                } else {
                    for (long j = 0; j < m; ++j)
                        inner = (inner + static_cast<std::int64_t>(b[j]) * trow[j]) % p_;
                }
                acc += ai * (inner % p_);
            }
            out_base[0] = norm64(acc);
        } else {
            const long s = base_->fp_deg_;
            digit* t1 = sdg;
            digit* t2 = sdg + s;
            digit* rest = sdg + 2 * s;
            std::fill(out_base, out_base + s, 0);
            for (long i = 0; i < m; ++i) {
                const digit* ai = a + i * s;
                if (block_zero(ai, s)) continue;
                std::fill(t2, t2 + s, 0);
                for (long j = 0; j < m; ++j) {
                    base_->mul_impl(b + j * s, tau_flat_.data() + (i + j) * s, t1, s64, rest);
                    base_->raw_add(t2, t1, t2);
                }
                base_->mul_impl(ai, t2, t1, s64, rest);
                base_->raw_add(out_base, t1, out_base);
            }
        }
    }

    static bool block_zero(const digit* b, long s) {
        for (long i = 0; i < s; ++i)
            if (b[i]) return false;
        return true;
    }

    void init_extension_tables(const Poly& modulus);

    // --- data ---------------------------------------------------------------

    Kind kind_;
    long p_ = 0;
    FieldPtr base_;        // null for the prime field
    int deg_ = 1;          // degree over base
    long fp_deg_ = 1;      // degree over F_p
    bigint card_;
    bool small_p_ = true;  // p small enough for lazy int64 accumulation

    Poly modulus_poly_;               // over base (empty for prime field)
    std::vector<digit> mod_flat_;     // lower modulus coefficients, deg_ base blocks
    std::vector<std::int64_t> mod_row_; // PrimeExt copy of mod_flat_ in int64
    std::vector<digit> frob_cols_;    // (z^Q)^j for j < deg_, each one element
    std::vector<digit> tau_flat_;     // Tr(z^k) base blocks, k <= 2 deg_ - 2
    std::vector<std::int64_t> tau_;   // PrimeExt copy of tau_flat_

    size_t need_i64_ = 0, need_dg_ = 0;
};

// --- polynomial utilities over a Field --------------------------------------

inline Poly poly_trim(Poly f) {
    while (!f.c.empty() && f.field->is_zero(f.c.back())) f.c.pop_back();
    return f;
}

inline Poly poly_zero(const FieldPtr& k) { return Poly{k, {}}; }

inline Poly poly_from_coeffs(const FieldPtr& k, std::vector<Element> cs) {
    return poly_trim(Poly{k, std::move(cs)});
}

inline Poly poly_x(const FieldPtr& k) { return Poly{k, {k->zero(), k->one()}}; }

inline Poly poly_constant(const FieldPtr& k, const Element& c) {
    return poly_trim(Poly{k, {c}});
}

inline bool poly_is_zero(const Poly& f) { return f.c.empty(); }

inline bool poly_is_monic(const Poly& f) {
    return !f.c.empty() && f.c.back() == f.field->one();
}

inline Element poly_coeff(const Poly& f, int i) {
    if (i < 0 || i > f.degree()) return f.field->zero();
    return f.c[i];
}

inline bool poly_equal(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    const FieldPtr& k = a.field;
    std::vector<Element> out(std::max(a.c.size(), b.c.size()), k->zero());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = k->add(poly_coeff(a, static_cast<int>(i)), poly_coeff(b, static_cast<int>(i)));
    return poly_trim(Poly{k, std::move(out)});
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    const FieldPtr& k = a.field;
    std::vector<Element> out(std::max(a.c.size(), b.c.size()), k->zero());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = k->sub(poly_coeff(a, static_cast<int>(i)), poly_coeff(b, static_cast<int>(i)));
    return poly_trim(Poly{k, std::move(out)});
}

inline Poly poly_scale(const Poly& a, const Element& s) {
    const FieldPtr& k = a.field;
    std::vector<Element> out;
    out.reserve(a.c.size());
    for (const auto& ci : a.c) out.push_back(k->mul(ci, s));
    return poly_trim(Poly{k, std::move(out)});
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    const FieldPtr& k = a.field;
    if (poly_is_zero(a) || poly_is_zero(b)) return poly_zero(k);
    std::vector<Element> out(a.c.size() + b.c.size() - 1, k->zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = k->add(out[i + j], k->mul(a.c[i], b.c[j]));
    return poly_trim(Poly{k, std::move(out)});
}

// Remainder of a by b (b nonzero; leading coefficient inverted as needed).
inline Poly poly_rem(Poly a, const Poly& b) {
    const FieldPtr& k = a.field;
    check(!poly_is_zero(b), "poly_rem: division by zero polynomial");
    const Element lead_inv = k->inv(b.c.back());
    while (a.degree() >= b.degree()) {
        Element factor = k->mul(a.c.back(), lead_inv);
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            a.c[shift + i] = k->sub(a.c[shift + i], k->mul(factor, b.c[i]));
        a = poly_trim(std::move(a));
    }
    return a;
}

// Exact quotient; requires b | a.
inline Poly poly_divexact(Poly a, const Poly& b) {
    const FieldPtr& k = a.field;
    check(!poly_is_zero(b), "poly_divexact: zero divisor");
    if (poly_is_zero(a)) return a;
    check(a.degree() >= b.degree(), "poly_divexact: not divisible");
    const Element lead_inv = k->inv(b.c.back());
    std::vector<Element> q(a.degree() - b.degree() + 1, k->zero());
    while (a.degree() >= b.degree()) {
        Element factor = k->mul(a.c.back(), lead_inv);
        int shift = a.degree() - b.degree();
        q[shift] = factor;
        for (int i = 0; i <= b.degree(); ++i)
            a.c[shift + i] = k->sub(a.c[shift + i], k->mul(factor, b.c[i]));
        a = poly_trim(std::move(a));
    }
    check(poly_is_zero(a), "poly_divexact: nonzero remainder");
    return poly_trim(Poly{k, std::move(q)});
}

inline Poly poly_monic(Poly f) {
    if (poly_is_zero(f)) return f;
    return poly_scale(f, f.field->inv(f.c.back()));
}

inline Poly poly_gcd(Poly a, Poly b) {
    while (!poly_is_zero(b)) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f) {
    return poly_rem(poly_mul(a, b), f);
}

inline Poly poly_powmod(Poly base, bigint e, const Poly& f) {
    check(e >= 0, "poly_powmod: negative exponent");
    Poly r = poly_constant(f.field, f.field->one());
    base = poly_rem(std::move(base), f);
    while (e != 0) {
        if ((e & 1) != 0) r = poly_mulmod(r, base, f);
        base = poly_mulmod(base, base, f);
        e >>= 1;
    }
    return r;
}

inline Element poly_eval(const Poly& f, const Element& x) {
    const FieldPtr& k = f.field;
    Element acc = k->zero();
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = k->add(k->mul(acc, x), *it);
    return acc;
}

inline Poly poly_derivative(const Poly& f) {
    const FieldPtr& k = f.field;
    std::vector<Element> out;
    for (int i = 1; i <= f.degree(); ++i) out.push_back(k->mul_small(f.c[i], i));
    return poly_trim(Poly{k, std::move(out)});
}

// Inverse of a modulo f (gcd must be constant).
inline Poly poly_invmod(const Poly& a, const Poly& f) {
    const FieldPtr& k = a.field;
    // Extended Euclid keeping only the u-coefficients: u*a = g (mod f).
    Poly r0 = f, r1 = poly_rem(a, f);
    Poly u0 = poly_zero(k), u1 = poly_constant(k, k->one());
    check(!poly_is_zero(r1), "poly_invmod: zero is not invertible");
    while (!poly_is_zero(r1)) {
        // r0 = q*r1 + r2
        Poly q_acc = poly_zero(k);
        Poly a2 = r0;
        const Element lead_inv = k->inv(r1.c.back());
        while (a2.degree() >= r1.degree()) {
            Element factor = k->mul(a2.c.back(), lead_inv);
            int shift = a2.degree() - r1.degree();
            std::vector<Element> qv(shift + 1, k->zero());
            qv[shift] = factor;
            Poly qterm{k, std::move(qv)};
            q_acc = poly_add(q_acc, qterm);
            a2 = poly_sub(a2, poly_mul(qterm, r1));
        }
        Poly r2 = a2;
        Poly u2 = poly_sub(u0, poly_mul(q_acc, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    check(r0.degree() == 0, "poly_invmod: argument not invertible (gcd not constant)");
    return poly_rem(poly_scale(u0, k->inv(r0.c[0])), f);
}

// Irreducibility over the coefficient field: f (monic, deg d >= 1) is
// irreducible iff gcd(f, x^(Q^i) - x) = 1 for 1 <= i <= d/2, since
// x^(Q^i) - x is the product of all monic irreducibles of degree dividing i
// and any proper factorization of f contains a factor of degree <= d/2.
inline bool is_irreducible(const Poly& f) {
    check(f.degree() >= 1, "is_irreducible: degree must be >= 1");
    if (!poly_is_monic(f)) fail("is_irreducible: polynomial must be monic");
    const FieldPtr& k = f.field;
    const bigint Q = k->cardinality();
    Poly h = poly_rem(poly_x(k), f); // x^(Q^i) mod f, iterated
    for (int i = 1; i <= f.degree() / 2; ++i) {
        h = poly_powmod(h, Q, f);
        Poly g = poly_gcd(f, poly_sub(h, poly_x(k)));
        if (g.degree() != 0) return false;
    }
    return true;
}

// The monic irreducible of degree d whose coefficient tuple (c_0,...,c_{d-1})
// is minimal as a base-Q integer; `index` skips that many matches first.
inline Poly find_irreducible(const FieldPtr& k, int d, long index = 0) {
    if (d < 1) fail("find_irreducible: degree must be >= 1");
    check(index >= 0, "find_irreducible: negative index");
    std::vector<Element> cs(d + 1, k->zero());
    cs[d] = k->one();
    std::vector<digit> odo(k->fp_degree() * d, 0);
    const long p = k->characteristic();
    long tried = 0;
    while (true) {
        if (++tried > kPolyBudget)
            fail("find_irreducible: candidate budget exceeded");
        for (int j = 0; j < d; ++j)
            cs[j] = k->from_digits(std::vector<digit>(odo.begin() + j * k->fp_degree(),
                                                      odo.begin() + (j + 1) * k->fp_degree()));
        Poly f{k, cs};
        if (is_irreducible(f)) {
            if (index == 0) return f;
            --index;
        }
        if (!Field::raw_increment(odo.data(), static_cast<long>(odo.size()), p))
            fail("find_irreducible: exhausted all candidates"); // unreachable: irreducibles exist
    }
}

inline Poly find_irreducible(long p, int d, long index = 0) {
    return find_irreducible(Field::prime(p), d, index);
}

// --- Field member implementations needing Poly ------------------------------

inline const bigint& Field::base_cardinality() const {
    return is_prime_field() ? card_ : base_->card_;
}

inline FieldPtr Field::extension(const FieldPtr& base, const Poly& modulus) {
    check_prime(base->characteristic());
    if (modulus.field.get() != base.get())
        fail("extension: modulus coefficients must lie in the base field");
    if (modulus.degree() < 1) fail("extension: modulus degree must be >= 1");
    if (!poly_is_monic(modulus)) fail("extension: modulus must be monic");
    if (!is_irreducible(modulus)) fail("extension: modulus is reducible");
    FieldPtr f(new Field(base, modulus.degree()));
    const_cast<Field*>(f.get())->init_extension_tables(modulus);
    return f;
}

inline FieldPtr Field::extension(const FieldPtr& base, int deg, long index) {
    return extension(base, find_irreducible(base, deg, index));
}

inline void Field::init_extension_tables(const Poly& modulus) {
    modulus_poly_ = modulus;
    const long s = base_->fp_deg_;
    const long m = deg_;
    small_p_ = p_ < (1L << 26); // lazy int64 accumulation stays below 2^63

    mod_flat_.assign(m * s, 0);
    for (int j = 0; j < m; ++j)
        std::copy(modulus.c[j].d.begin(), modulus.c[j].d.end(), mod_flat_.begin() + j * s);
    if (kind_ == Kind::PrimeExt) {
        mod_row_.assign(mod_flat_.begin(), mod_flat_.end());
    }

    // Scratch requirements: own usage plus everything the base may need
    // while we are mid-operation (recursion shares one arena).
    if (kind_ == Kind::PrimeExt) {
        need_i64_ = static_cast<size_t>(2 * m + 2);
        need_dg_ = 0;
    } else {
        need_i64_ = base_->need_i64_;
        need_dg_ = static_cast<size_t>((2 * m + 3) * s) + base_->need_dg_;
    }

    // Frobenius columns (z^Q)^j and trace functionals Tr(z^k). Built with the
    // raw kernels; mul works as soon as mod_flat_ is in place.
    auto& scr = detail::tls_scratch();
    ensure_scratch(scr);

    std::vector<digit> z(fp_deg_, 0), zQ(fp_deg_, 0), tmp(fp_deg_, 0);
    z[s] = 1; // the extension variable
    // zQ = z^(Q), Q = base cardinality, by square-and-multiply on raw digits.
    bigint e = base_->card_;
    zQ[0] = 1; // start from one (block 0 = base one)
    {
        std::vector<digit> sq = z;
        while (e != 0) {
            if ((e & 1) != 0) {
                mul_impl(zQ.data(), sq.data(), tmp.data(), scr.i64.data(), scr.dg.data());
                zQ = tmp;
            }
            mul_impl(sq.data(), sq.data(), tmp.data(), scr.i64.data(), scr.dg.data());
            sq = tmp;
            e >>= 1;
        }
    }
    frob_cols_.assign(m * fp_deg_, 0);
    std::vector<digit> cur(fp_deg_, 0);
    cur[0] = 1; // (z^Q)^0
    for (long j = 0; j < m; ++j) {
        std::copy(cur.begin(), cur.end(), frob_cols_.begin() + j * fp_deg_);
        if (j + 1 < m) {
            mul_impl(cur.data(), zQ.data(), tmp.data(), scr.i64.data(), scr.dg.data());
            cur = tmp;
        }
    }

    // tau_k = Tr(z^k) = sum of Frobenius iterates of z^k, for k <= 2m-2.
    tau_flat_.assign((2 * m - 1) * s, 0);
    std::vector<digit> zk(fp_deg_, 0), conj(fp_deg_, 0), acc(fp_deg_, 0);
    zk[0] = 1;
    for (long k = 0; k <= 2 * m - 2; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        conj = zk;
        for (long i = 0; i < m; ++i) {
            raw_add(acc.data(), conj.data(), acc.data());
            if (i + 1 < m) {
                frob_impl(conj.data(), tmp.data(), scr.i64.data(), scr.dg.data());
                conj = tmp;
            }
        }
        for (long t = s; t < fp_deg_; ++t)
            check(acc[t] == 0, "internal-arithmetic-fault: trace functional not in base field");
        std::copy(acc.begin(), acc.begin() + s, tau_flat_.begin() + k * s);
        if (k < 2 * m - 2) {
            mul_impl(zk.data(), z.data(), tmp.data(), scr.i64.data(), scr.dg.data());
            zk = tmp;
        }
    }
    if (kind_ == Kind::PrimeExt) {
        tau_.assign(tau_flat_.begin(), tau_flat_.end());
    }
}

inline Element Field::inv(const Element& a) const {
    require_mine(a);
    if (is_zero(a)) fail("division-by-zero: inv(0)");
    if (is_prime_field()) {
        // Extended Euclid on integers.
        long r0 = p_, r1 = a.d[0], u0 = 0, u1 = 1;
        while (r1) {
            long q = r0 / r1;
            long r2 = r0 - q * r1, u2 = u0 - q * u1;
            r0 = r1; r1 = r2; u0 = u1; u1 = u2;
        }
        long u = u0 % p_;
        if (u < 0) u += p_;
        Element out = zero();
        out.d[0] = static_cast<digit>(u);
        return out;
    }
    // Invert the coefficient polynomial modulo the modulus, over the base.
    Poly ap{base_, base_coeffs(a)};
    ap = poly_trim(std::move(ap));
    Poly iv = poly_invmod(ap, modulus_poly_);
    return from_base_coeffs(iv.c);
}

inline Element Field::pow(const Element& a, bigint e) const {
    require_mine(a);
    if (e < 0) return pow(inv(a), -e);
    Element r = one(), b = a;
    while (e != 0) {
        if ((e & 1) != 0) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

// --- deterministic construction helpers -------------------------------------

// F_{p^r} with the deterministic modulus (r = 1 gives the prime field).
inline FieldPtr make_base_field(long p, int r, long modulus_index = 0) {
    FieldPtr fp = Field::prime(p);
    if (r == 1 && modulus_index == 0) return fp;
    if (r == 1) fail("make_base_field: r = 1 has a unique representation");
    return Field::extension(fp, r, modulus_index);
}

// F_{q^n} as a relative extension of F_q = F_{p^r}.
inline FieldPtr make_extension_field(long p, int r, int n, long modulus_index = 0) {
    return Field::extension(make_base_field(p, r), n, modulus_index);
}

// Cached deterministic fields, so elements from repeated lookups interoperate.
inline FieldPtr standard_base_field(long p, int r) {
    static std::mutex mu;
    static std::vector<std::pair<std::pair<long, int>, FieldPtr>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (auto& kv : cache)
        if (kv.first == std::make_pair(p, r)) return kv.second;
    FieldPtr f = make_base_field(p, r);
    cache.emplace_back(std::make_pair(p, r), f);
    return f;
}

inline FieldPtr standard_extension_field(long p, int r, int n) {
    static std::mutex mu;
    static std::vector<std::pair<std::tuple<long, int, int>, FieldPtr>> cache;
    FieldPtr base = standard_base_field(p, r);
    std::lock_guard<std::mutex> lock(mu);
    for (auto& kv : cache)
        if (kv.first == std::make_tuple(p, r, n)) return kv.second;
    FieldPtr f = Field::extension(base, n);
    cache.emplace_back(std::make_tuple(p, r, n), f);
    return f;
}

inline FieldPtr standard_extension_field_q(long q, int n) {
    auto [p, r] = factor_prime_power(q);
    return standard_extension_field(p, r, n);
}

} // namespace ffcount
