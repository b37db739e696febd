// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ffcount/corollary.hpp"

using namespace ffcount;

TEST_CASE("table shape across small fields", "[corollary]") {
    for (long q : {3L, 5L, 7L, 9L, 11L}) {
        const auto [p, r] = factor_prime_power(q);
        const RootMultiplicityTable table = corollary_table(p, r);
        CHECK(table.q == q);
        CHECK(table.genus == q * (q - 1) / 2);
        CHECK(table.uses_i == (q % 4 == 3));
        REQUIRE(static_cast<long>(table.classes.size()) == 2 * p);

        long total = 0;
        for (long k = 0; k < p; ++k) {
            const RootClass& plus = table.classes[2 * k];
            const RootClass& minus = table.classes[2 * k + 1];
            CHECK(plus.k == k);
            CHECK(minus.k == k);
            CHECK(plus.sign == 1);
            CHECK(minus.sign == -1);
            CHECK(plus.multiplicity >= 0);
            CHECK(minus.multiplicity >= 0);
            total += plus.multiplicity + minus.multiplicity;
        }
        CHECK(total == 2 * table.genus); // all 2g inverse roots accounted for
    }
}

TEST_CASE("golden multiplicities", "[corollary]") {
    SECTION("q = 3: roots of (3x^2 + 1)(3x^2 + 3x + 1)^2") {
        const RootMultiplicityTable t = corollary_table(3, 1);
        std::vector<std::string> labels;
        std::vector<long> mults;
        for (const RootClass& c : t.classes) {
            labels.push_back(c.label);
            mults.push_back(c.multiplicity);
        }
        CHECK(labels == std::vector<std::string>{"+i", "-i", "+i*w", "-i*w", "+i*w^2",
                                                 "-i*w^2"});
        CHECK(mults == std::vector<long>{1, 1, 2, 0, 0, 2});
    }

    SECTION("q = 9") {
        const RootMultiplicityTable t = corollary_table(3, 2);
        std::vector<std::string> labels;
        std::vector<long> mults;
        for (const RootClass& c : t.classes) {
            labels.push_back(c.label);
            mults.push_back(c.multiplicity);
        }
        CHECK(labels ==
              std::vector<std::string>{"+1", "-1", "+w", "-w", "+w^2", "-w^2"});
        CHECK(mults == std::vector<long>{4, 20, 16, 8, 16, 8});
    }
}

TEST_CASE("table recomposition matches the closed form", "[corollary]") {
    for (long q : {3L, 5L, 7L, 9L, 11L}) {
        const auto [p, r] = factor_prime_power(q);
        const LPolynomial from_table = table_lpoly(corollary_table(p, r));
        const LPolynomial closed = closed_lpoly(p, r);
        CHECK(from_table.c == closed.c);
        CHECK(weil_check(closed).pass());
        CHECK(classify_lpoly(closed) == Classification::supersingular);
    }
    CHECK(closed_lpoly(3, 1).c == std::vector<bigint>{1, 6, 18, 36, 54, 54, 27});
}

TEST_CASE("printed table: exact for odd r, defective at the square +-1 classes",
          "[corollary]") {
    for (long q : {3L, 5L, 7L, 11L}) {
        const auto [p, r] = factor_prime_power(q);
        const RootMultiplicityTable table = corollary_table(p, r);
        const std::vector<bigrat> printed = printed_corollary_multiplicities(p, r);
        REQUIRE(printed.size() == table.classes.size());
        for (size_t i = 0; i < printed.size(); ++i)
            CHECK(printed[i] == bigrat(table.classes[i].multiplicity));
    }

    SECTION("q = 9 printed +-1 entries disagree with the validated table") {
        const RootMultiplicityTable table = corollary_table(3, 2);
        const std::vector<bigrat> printed = printed_corollary_multiplicities(3, 2);
        CHECK(printed[0] == bigrat(-6)); // validated table: 4
        CHECK(printed[1] == bigrat(30)); // validated table: 20
        CHECK(table.classes[0].multiplicity == 4);
        CHECK(table.classes[1].multiplicity == 20);
        // A multiplicity cannot be negative, so the printed value refutes
        // itself; the remaining classes agree.
        for (size_t i = 2; i < printed.size(); ++i)
            CHECK(printed[i] == bigrat(table.classes[i].multiplicity));
        // Both versions still total 2g: the defect cancels in the sum.
        bigrat printed_total(0);
        for (const bigrat& m : printed) printed_total += m;
        CHECK(printed_total == bigrat(2 * table.genus));
    }
}
