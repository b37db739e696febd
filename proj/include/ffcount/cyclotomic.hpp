// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal exact arithmetic in quotient rings K[x]/(m) for a monic modulus m,
// used with the cyclotomic modulus m = Phi_{4p} so that x represents a
// primitive 4p-th root of unity zeta. Over that ring a square root of p is
// available exactly through the quadratic Gauss sum, letting power-sum
// identities involving sqrt(q) be verified with no floating point at all.
#pragma once

#include <vector>

#include "ffcount/numeric.hpp"

namespace ffcount {

template <class Coef>
class QuotientRing {
public:
    using Elt = std::vector<Coef>; // fixed length deg(), little-endian

    explicit QuotientRing(std::vector<Coef> monic_modulus) : mod_(std::move(monic_modulus)) {
        check(mod_.size() >= 2, "QuotientRing: modulus degree must be >= 1");
        check(mod_.back() == Coef(1), "QuotientRing: modulus must be monic");
    }

    long deg() const { return static_cast<long>(mod_.size()) - 1; }

    Elt zero() const { return Elt(deg(), Coef(0)); }
    Elt one() const { return from_scalar(Coef(1)); }
    Elt from_scalar(const Coef& c) const {
        Elt e = zero();
        e[0] = c;
        return e;
    }

    bool is_zero(const Elt& a) const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }
    bool equal(const Elt& a, const Elt& b) const { return a == b; }

    Elt add(const Elt& a, const Elt& b) const {
        Elt out(a);
        for (long i = 0; i < deg(); ++i) out[i] += b[i];
        return out;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        Elt out(a);
        for (long i = 0; i < deg(); ++i) out[i] -= b[i];
        return out;
    }
    Elt neg(const Elt& a) const {
        Elt out(a);
        for (auto& x : out) x = -x;
        return out;
    }
    Elt scale(const Elt& a, const Coef& s) const {
        Elt out(a);
        for (auto& x : out) x *= s;
        return out;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        const long d = deg();
        std::vector<Coef> conv(2 * d - 1, Coef(0));
        for (long i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < d; ++j) conv[i + j] += a[i] * b[j];
        }
        for (long k = 2 * d - 2; k >= d; --k) {
            if (conv[k] == 0) continue;
            const Coef c = conv[k];
            for (long j = 0; j < d; ++j) conv[k - d + j] -= c * mod_[j];
        }
        conv.resize(d);
        return conv;
    }
    Elt pow(Elt base, long e) const {
        check(e >= 0, "QuotientRing::pow: negative exponent");
        Elt r = one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    // x^k reduced mod the modulus, for k >= 0.
    Elt basis_power(long k) const {
        check(k >= 0, "basis_power: negative exponent");
        Elt x = zero();
        if (deg() >= 2) {
            x[1] = Coef(1);
        } else {
            // degree-1 modulus: x = -m_0
            x[0] = -mod_[0];
        }
        return pow(x, k);
    }

private:
    std::vector<Coef> mod_;
};

// Phi_{4p}(x) = sum_{k=0}^{p-1} (-1)^k x^{2k}, the minimal polynomial of a
// primitive 4p-th root of unity (p an odd prime); degree 2(p-1).
template <class Coef>
inline std::vector<Coef> cyclotomic_4p_modulus(long p) {
    check(p >= 3 && is_prime(p), "cyclotomic_4p_modulus: p must be an odd prime");
    std::vector<Coef> m(2 * (p - 1) + 1, Coef(0));
    for (long k = 0; k <= p - 1; ++k) m[2 * k] = (k % 2 == 0) ? Coef(1) : Coef(-1);
    return m;
}

// Exact sqrt(p) in Z[zeta_{4p}] under the embedding zeta -> e^{2 pi i / 4p}:
// with G = sum_k (k|p) zeta^{4k} (a Gauss sum over zeta_p = zeta^4),
// G = sqrt(p) when p = 1 mod 4 and G = i sqrt(p) when p = 3 mod 4, where
// i = zeta^p. The returned element squares to p, which is asserted.
template <class Coef>
inline typename QuotientRing<Coef>::Elt sqrt_p_element(const QuotientRing<Coef>& ring, long p) {
    auto g = ring.zero();
    for (long k = 1; k <= p - 1; ++k) {
        auto term = ring.basis_power((4 * k) % (4 * p));
        if (legendre(k, p) == 1)
            g = ring.add(g, term);
        else
            g = ring.sub(g, term);
    }
    typename QuotientRing<Coef>::Elt root;
    if (p % 4 == 1) {
        root = g;
    } else {
        // sqrt(p) = -zeta^p * G = G / i.
        root = ring.neg(ring.mul(ring.basis_power(p), g));
    }
    check(ring.equal(ring.mul(root, root), ring.from_scalar(Coef(p))),
          "internal-arithmetic-fault: Gauss sum square is not p");
    return root;
}

} // namespace ffcount
