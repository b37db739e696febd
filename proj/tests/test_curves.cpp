// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ffcount/curves.hpp"

using namespace ffcount;

TEST_CASE("named models and genus", "[curves]") {
    for (long q : {3L, 5L, 9L}) {
        const auto [p, r] = factor_prime_power(q);
        const FieldPtr fq = standard_base_field(p, r);
        const CurveModel c1 = make_named_curve(fq, "c1");
        const CurveModel c2 = make_named_curve(fq, "c2");
        const CurveModel c3 = make_named_curve(fq, "c3");
        CHECK(c1.genus == q * (q - 1) / 2);
        CHECK(c2.genus == q * (q - 1));
        CHECK(c3.genus == q * (q - 1));
        CHECK(c1.f.degree() == q + 1);
        CHECK(c2.f.degree() == 2 * q + 1);
        CHECK(c3.f.degree() == 2 * q + 1);
        CHECK(poly_is_monic(c1.f));
    }
    CHECK_THROWS_AS(make_named_curve(standard_base_field(3, 1), "c4"),
                    std::invalid_argument);
}

TEST_CASE("custom curves", "[curves]") {
    const FieldPtr f3 = standard_base_field(3, 1);
    // Same right-hand side as c1: counts must agree although the custom
    // model runs the dense route.
    const CurveModel c1 = make_named_curve(f3, "c1");
    const CurveModel same = make_custom_curve(f3, c1.f);
    CHECK(same.genus == c1.genus);
    for (int n = 2; n <= 5; ++n) {
        const FieldPtr ext = standard_extension_field(3, 1, n);
        CHECK(count_points(same, ext) == count_points(c1, ext));
    }

    // gcd(deg f, p) = 1 is required by the genus formula.
    const Poly cube = poly_from_coeffs(f3, {f3->zero(), f3->zero(), f3->zero(), f3->one()});
    CHECK_THROWS_AS(make_custom_curve(f3, cube), std::invalid_argument);
}

TEST_CASE("structured evaluation matches dense evaluation", "[curves]") {
    for (long q : {3L, 5L}) {
        const auto [p, r] = factor_prime_power(q);
        const FieldPtr fq = standard_base_field(p, r);
        for (const char* name : {"c1", "c2", "c3"}) {
            const CurveModel curve = make_named_curve(fq, name);
            for (int n = 2; n <= 4; ++n) {
                const FieldPtr ext = standard_extension_field(p, r, n);
                CHECK(count_points(curve, ext) == count_points_dense(curve, ext));
            }
        }
    }
}

TEST_CASE("closed c1 count matches enumeration", "[curves]") {
    for (long q : {3L, 5L}) {
        const auto [p, r] = factor_prime_power(q);
        const FieldPtr fq = standard_base_field(p, r);
        const CurveModel c1 = make_named_curve(fq, "c1");
        for (long n = 1; n <= 5; ++n) {
            const FieldPtr ext =
                n == 1 ? fq : standard_extension_field(p, r, static_cast<int>(n));
            CHECK(closed_curve_count_c1(p, r, n) == count_points(c1, ext));
        }
    }
    CHECK(closed_curve_count_c1(3, 1, 1) == 10); // 3 + 1 + 6
}

TEST_CASE("counts are independent of the modulus choice", "[curves]") {
    const FieldPtr f3 = standard_base_field(3, 1);
    const CurveModel c1 = make_named_curve(f3, "c1");
    const FieldPtr ext0 = Field::extension(f3, 4, 0);
    const FieldPtr ext1 = Field::extension(f3, 4, 1);
    REQUIRE(!poly_equal(ext0->modulus(), ext1->modulus()));
    CHECK(count_points(c1, ext0) == count_points(c1, ext1));

    const FieldPtr f9 = standard_base_field(3, 2);
    const CurveModel rel = make_named_curve(f9, "c1");
    CHECK(count_points(rel, Field::extension(f9, 2, 0)) ==
          count_points(rel, Field::extension(f9, 2, 1)));
}

TEST_CASE("field plumbing is validated", "[curves]") {
    const CurveModel c1 = make_named_curve(standard_base_field(3, 1), "c1");
    // Extension of a different base field: rejected.
    CHECK_THROWS_AS(count_points(c1, standard_extension_field(5, 1, 2)), std::logic_error);
    // Extension of F_9, not of F_3: also rejected (no implicit tower hops).
    CHECK_THROWS_AS(count_points(c1, standard_extension_field(3, 2, 2)), std::logic_error);
}

TEST_CASE("L-polynomials of the q = 3 models", "[curves]") {
    const FieldPtr f3 = standard_base_field(3, 1);

    const LPolynomial l1 = lpoly_from_curve_brute(make_named_curve(f3, "c1"));
    CHECK(l1.c == std::vector<bigint>{1, 6, 18, 36, 54, 54, 27});
    CHECK(weil_check(l1).pass());

    // The second model's L-polynomial is a perfect square.
    const std::vector<bigint> a{1, 3, 9, 15, 27, 27, 27};
    const LPolynomial l2 = lpoly_from_curve_brute(make_named_curve(f3, "c2"));
    CHECK(l2.c == bigpoly_mul(a, a));
    CHECK(weil_check(l2).pass());

    const LPolynomial l3 = lpoly_from_curve_brute(make_named_curve(f3, "c3"));
    CHECK(l3.c == std::vector<bigint>{1, 6, 18, 39, 63, 81, 117, 243, 567, 1053, 1458, 1458,
                                      729});
    CHECK(weil_check(l3).pass());
}
