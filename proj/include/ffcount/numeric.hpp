// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffcount {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Always-on invariant check. The library's correctness story leans on these
// (dual-path agreement, exact divisibility), so they must survive NDEBUG.
inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("ffcount: " + msg);
}

[[noreturn]] inline void fail(const std::string& msg) {
    throw std::invalid_argument("ffcount: " + msg);
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline bigint pow_bigint(const bigint& base, unsigned long e) {
    bigint r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bigint q_pow(long q, long n) {
    check(n >= 0, "q_pow: negative exponent");
    return pow_bigint(bigint(q), static_cast<unsigned long>(n));
}

inline bool is_prime(long m) {
    if (m < 2) return false;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Legendre symbol (a/p) for odd prime p.
inline int legendre(long a, long p) {
    check(p >= 3 && is_prime(p), "legendre: p must be an odd prime");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion with small numbers; p < 2^31 so use 128-bit products.
    long result = 1, base = a;
    unsigned long e = static_cast<unsigned long>((p - 1) / 2);
    while (e) {
        if (e & 1) result = static_cast<long>((__int128)result * base % p);
        base = static_cast<long>((__int128)base * base % p);
        e >>= 1;
    }
    return result == 1 ? 1 : -1; // result is p-1 for non-residues
}

inline int mobius(long m) {
    check(m >= 1, "mobius: argument must be >= 1");
    int mu = 1;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

inline std::vector<long> divisors(long n) {
    check(n >= 1, "divisors: argument must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// q -> (p, r) for odd prime powers; fails otherwise.
inline std::pair<long, int> factor_prime_power(long q) {
    check(q >= 3, "q must be an odd prime power >= 3");
    for (long p = 3; p * p <= q; p += 2) {
        if (q % p == 0) {
            int r = 0;
            long m = q;
            while (m % p == 0) { m /= p; ++r; }
            if (m != 1) fail("q = " + std::to_string(q) + " is not a prime power");
            return {p, r};
        }
    }
    if (!is_prime(q)) fail("q = " + std::to_string(q) + " is not an odd prime power");
    return {q, 1};
}

// p-adic valuation; returns a large sentinel for x = 0 (ord_p(0) = infinity).
inline long p_valuation(const bigint& x, long p) {
    if (x == 0) return 1L << 30;
    bigint y = x < 0 ? bigint(-x) : x;
    long v = 0;
    while (y % p == 0) { y /= p; ++v; }
    return v;
}

inline bigint binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    bigint r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Deterministic RNG for sampled property tests. Fixed seed: identical runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

private:
    std::uint64_t state_;
};

} // namespace ffcount
