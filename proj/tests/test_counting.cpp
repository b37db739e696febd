// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ffcount/counting.hpp"
#include "ffcount/traces.hpp"

using namespace ffcount;

namespace {

std::vector<Element> all_elements(const FieldPtr& f) {
    std::vector<Element> out;
    auto en = f->enumerate();
    Element x = f->zero();
    while (en.next(x)) out.push_back(x);
    return out;
}

// Signed trace data (T1, T2) of a monic polynomial: P = x^d - T1 x^{d-1}
// + T2 x^{d-2} - ...
std::pair<Element, Element> poly_trace_data(const Poly& f) {
    const FieldPtr& k = f.field;
    const int d = f.degree();
    const Element t1 = k->neg(f.c[d - 1]);
    const Element t2 = d >= 2 ? f.c[d - 2] : k->zero();
    return {t1, t2};
}

} // namespace

TEST_CASE("pair-count routes agree on every target", "[counting]") {
    for (long q : {3L, 5L}) {
        const auto [p, r] = factor_prime_power(q);
        for (long n = 1; n <= 5; ++n) {
            const FieldPtr ext = standard_extension_field(p, r, static_cast<int>(n));
            const FieldPtr& fq = ext->base();
            bigint total = 0;
            for (long i1 = 0; i1 < q; ++i1) {
                for (long i2 = 0; i2 < q; ++i2) {
                    const Element t1 = fq->from_index(i1), t2 = fq->from_index(i2);
                    const bigint brute = trace_pair_count_brute(ext, t1, t2);
                    CHECK(trace_pair_count_closed(ext, t1, t2) == brute);
                    total += brute;
                }
            }
            CHECK(total == ext->cardinality()); // the targets partition F_{q^n}
        }
    }
}

TEST_CASE("distribution pass matches single-target counts", "[counting]") {
    const FieldPtr ext = standard_extension_field(3, 1, 4);
    const FieldPtr& f3 = ext->base();
    const std::vector<bigint> dist = trace_pair_distribution_brute(ext);
    REQUIRE(dist.size() == 9);
    for (long i1 = 0; i1 < 3; ++i1)
        for (long i2 = 0; i2 < 3; ++i2)
            CHECK(dist[i1 * 3 + i2] ==
                  trace_pair_count_brute(ext, f3->from_index(i1), f3->from_index(i2)));
}

TEST_CASE("zero-pair anchors over F_3", "[counting]") {
    CHECK(zero_trace_pair_count_closed(3, 1, 1) == 1);
    CHECK(zero_trace_pair_count_closed(3, 1, 3) == 3);
    CHECK(zero_trace_pair_count_closed(3, 1, 5) == 21);
    CHECK(zero_trace_pair_count_closed(3, 1, 6) == 99);
    for (long n = 1; n <= 7; ++n)
        CHECK(zero_trace_pair_count_closed(3, 1, n) ==
              zero_trace_pair_count_brute(standard_extension_field(3, 1, static_cast<int>(n))));
}

TEST_CASE("target reduction preserves counts", "[counting]") {
    const FieldPtr f3 = standard_base_field(3, 1);

    SECTION("p coprime to n: shift to a zero first target") {
        for (long n : {4L, 5L}) {
            const FieldPtr ext = standard_extension_field(3, 1, static_cast<int>(n));
            for (long i1 = 0; i1 < 3; ++i1)
                for (long i2 = 0; i2 < 3; ++i2) {
                    const Element t1 = f3->from_index(i1), t2 = f3->from_index(i2);
                    const TargetReduction red = reduce_target(f3, n, t1, t2);
                    CHECK_FALSE(red.uniform_fiber);
                    CHECK(f3->is_zero(red.t1));
                    CHECK(trace_pair_count_brute(ext, t1, t2) ==
                          trace_pair_count_brute(ext, red.t1, red.t2));
                }
        }
    }

    SECTION("p divides n, nonzero first target: every fiber has q^{n-2}") {
        const FieldPtr ext = standard_extension_field(3, 1, 3);
        for (long i1 = 1; i1 < 3; ++i1)
            for (long i2 = 0; i2 < 3; ++i2) {
                const Element t1 = f3->from_index(i1), t2 = f3->from_index(i2);
                CHECK(reduce_target(f3, 3, t1, t2).uniform_fiber);
                CHECK(trace_pair_count_brute(ext, t1, t2) == 3); // q^{n-2}
            }
        // Zero first target stays a genuine reduction.
        CHECK_FALSE(reduce_target(f3, 3, f3->zero(), f3->one()).uniform_fiber);
    }

    SECTION("the quadratic shift separates from its printed variant") {
        // n = 2, target (2, 0): the shift subtracts ((n-1)/(2n)) t1^2 = t1^2,
        // landing on (0, 2); the printed variant subtracts t1, landing on
        // (0, 1). The fiber sizes 0 vs 2 tell them apart.
        const FieldPtr ext = standard_extension_field(3, 1, 2);
        const Element two = f3->from_index(2), zero = f3->zero();
        CHECK(reduced_second_target(f3, 2, two, zero) == f3->from_index(2));
        CHECK(reduced_second_target_printed_variant(f3, 2, two, zero) == f3->from_index(1));
        CHECK(trace_pair_count_brute(ext, two, zero) == 0);
        CHECK(trace_pair_count_brute(ext, zero, f3->from_index(2)) == 0);
        CHECK(trace_pair_count_brute(ext, zero, f3->from_index(1)) == 2);
    }
}

TEST_CASE("irreducible counts with prescribed coefficients", "[counting]") {
    SECTION("zero-target anchors over F_3") {
        CHECK(irreducible_zero_count_closed(3, 2) == 0); // x^2 is reducible
        CHECK(irreducible_zero_count_closed(3, 5) == 4);
        CHECK(irreducible_zero_count_closed(3, 6) == 15);
    }

    SECTION("closed equals brute on a grid") {
        for (long q : {3L, 5L}) {
            const auto [p, r] = factor_prime_power(q);
            const FieldPtr fq = standard_base_field(p, r);
            const long max_n = q == 3 ? 7 : 5;
            for (long n = 2; n <= max_n; ++n)
                CHECK(irreducible_zero_count_closed(q, n) ==
                      irreducible_count_brute(fq, n, fq->zero(), fq->zero()));
        }
    }

    SECTION("summing over all targets recovers the total count") {
        const FieldPtr f3 = standard_base_field(3, 1);
        // (q^3 - q)/3 = 8 cubics, (q^4 - q^2)/4 = 18 quartics over F_3.
        for (const auto& [n, expected] : std::vector<std::pair<long, long>>{{3, 8}, {4, 18}}) {
            bigint total = 0;
            for (long i1 = 0; i1 < 3; ++i1)
                for (long i2 = 0; i2 < 3; ++i2)
                    total += irreducible_count_brute(f3, n, f3->from_index(i1),
                                                     f3->from_index(i2));
            CHECK(total == expected);
        }
    }

    SECTION("budget is enforced") {
        const FieldPtr f3 = standard_base_field(3, 1);
        CHECK_THROWS_AS(irreducible_count_brute(f3, 12, f3->zero(), f3->zero(), 100),
                        std::invalid_argument);
    }
}

TEST_CASE("p-free Mobius inversion", "[counting]") {
    SECTION("round trip against a synthetic f") {
        SplitMix64 rng(0x2718);
        for (long p : {3L, 5L}) {
            for (long n : {12L, 30L}) {
                std::map<long, bigint> f, summed;
                for (long m = 1; m <= n; ++m)
                    if (n % m == 0) f[m] = bigint(rng.below(1000));
                for (const auto& [m, unused] : f) {
                    bigint acc = 0;
                    for (long d : divisors(m))
                        if (d % p != 0) acc += f.at(m / d);
                    summed[m] = acc;
                }
                for (const auto& [m, fm] : f) CHECK(p_free_invert(summed, m, p) == fm);
            }
        }
    }

    SECTION("printed variant evaluates Mobius at the wrong argument") {
        // Indicator input F = 1 on every divisor, n = 6, p = 5: the true
        // inversion telescopes to 0; freezing mu at n gives mu(6) * 4 = 4.
        std::map<long, bigint> ones;
        for (long m : divisors(6L)) ones[m] = 1;
        CHECK(p_free_invert(ones, 6, 5) == 0);
        CHECK(p_free_invert_printed_variant(ones, 6, 5) == 4);
    }

    SECTION("missing inputs are reported") {
        std::map<long, bigint> partial{{6, bigint(1)}};
        CHECK_THROWS_WITH(p_free_invert(partial, 6, 5),
                          Catch::Matchers::ContainsSubstring("incomplete-input"));
    }
}

TEST_CASE("power-coefficient transform against minimal polynomials", "[counting]") {
    // Exhaustive oracle over F_81/F_3: char_poly = min_poly^m with
    // m = n / deg(min_poly), so the transform must map the minimal trace
    // data to the characteristic trace data.
    const FieldPtr ext = standard_extension_field(3, 1, 4);
    long printed_breaks = 0;
    for (const Element& a : all_elements(ext)) {
        const Poly mp = min_poly(a);
        const long m = 4 / mp.degree();
        const auto [t1, t2] = poly_trace_data(mp);
        const auto [u1, u2] = power_coeff_transform(m, t1, t2);
        const auto [c1, c2] = poly_trace_data(char_poly(a));
        CHECK(u1 == c1);
        CHECK(u2 == c2);

        const auto [v1, v2] = power_coeff_transform_printed_variant(m, t1, t2);
        if (!(v1 == c1) || !(v2 == c2)) ++printed_breaks;
    }
    CHECK(printed_breaks > 0); // the linear-in-t1 variant is not the transform
}

TEST_CASE("three-coefficient counts over F_3", "[counting]") {
    const std::vector<long> triples{1, 1, 1, 1, 11, 33, 99, 225, 711};
    const std::vector<long> printed_pairs{2, 2, 3, 14, 32, 69, 261, 702, 2268};

    SECTION("brute anchors, fiber identity, and the printed first condition") {
        for (long n = 1; n <= 9; ++n) {
            const auto c = three_coeff_counts_brute(
                standard_extension_field(3, 1, static_cast<int>(n)));
            CHECK(c.zero_triple == triples[n - 1]);
            CHECK(c.pair_count == 3 * c.zero_triple);
            CHECK(c.printed_pair_count == printed_pairs[n - 1]);
            // The printed first condition only matches where it is divisible
            // by q by accident of n = 3.
            CHECK((c.printed_pair_count == c.pair_count) == (n == 3));
        }
    }

    SECTION("closed form equals brute") {
        for (long n = 1; n <= 9; ++n)
            CHECK(three_coeff_zero_count_closed_q3(n) == triples[n - 1]);
        CHECK(three_coeff_zero_count_closed_q3(13) == 58995);
    }

    SECTION("printed display: sign flip makes it wrong except at n = 3") {
        const std::vector<std::string> printed_values{"-7/9", "-1/3", "1",  "5",    "7",
                                                      "21",   "63",   "767/3", "783"};
        for (long n = 1; n <= 9; ++n) {
            const ThreeCoeffClosedValue v = three_coeff_printed_value_q3(n);
            REQUIRE(v.is_rational);
            CHECK(v.rational.str() == printed_values[n - 1]);
            if (v.is_integer) CHECK((v.value == triples[n - 1]) == (n == 3));
        }
    }

    SECTION("literal root reading of the display is mostly not rational") {
        const std::vector<bool> rational{false, true, true, true, false,
                                         true,  false, true, false};
        const std::vector<std::string> values{"", "1/9", "1", "775/243", "",
                                              "559/27", "", "530639/2187", ""};
        for (long n = 1; n <= 9; ++n) {
            const ThreeCoeffClosedValue v = three_coeff_display_literal_q3(n);
            CHECK(v.is_rational == rational[n - 1]);
            if (v.is_rational) CHECK(v.rational.str() == values[n - 1]);
        }
    }

    SECTION("the printed degree-12 list breaks the closed form at n = 8") {
        for (long n = 1; n <= 7; ++n)
            CHECK(three_coeff_zero_count_closed_q3(n, printed_lpoly_c3_q3()) ==
                  triples[n - 1]);
        // S_8 is the first power sum touched by the x^8 coefficient; the
        // closed form stops being an integer there.
        CHECK_THROWS_AS(three_coeff_zero_count_closed_q3(8, printed_lpoly_c3_q3()),
                        std::logic_error);
        CHECK(three_coeff_zero_count_closed_q3(9, printed_lpoly_c3_q3()) == 675); // != 711
    }

    SECTION("frozen coefficient lists") {
        CHECK(printed_lpoly_c3_q3()[8] == 576);
        CHECK(corrected_lpoly_c3_q3()[8] == 567);
        for (size_t i = 0; i < 13; ++i)
            if (i != 8) CHECK(printed_lpoly_c3_q3()[i] == corrected_lpoly_c3_q3()[i]);
    }
}
