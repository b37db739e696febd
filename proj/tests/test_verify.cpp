// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ffcount/verify.hpp"

using namespace ffcount;

TEST_CASE("verification run over the q = 3 grid", "[verify]") {
    const VerifyReport rep = run_verify({3});
    CHECK(rep.grid == std::vector<long>{3});
    CHECK(rep.pass());
    CHECK(rep.seconds > 0.0);
    CHECK(rep.records.size() >= 30);
    for (const CheckRecord& r : rep.records) {
        CHECK((r.expected_source == "oracle" || r.expected_source == "printed"));
        CHECK(r.pass);
        CHECK(!r.name.empty());
    }

    SECTION("all eleven errata are present, in order") {
        const std::vector<std::string> ids{
            "excess-odd-gcd-sign",
            "excess-even-exponent",
            "zero-pair-count-display",
            "square-field-root-multiplicities",
            "power-coefficient-transform",
            "inversion-mobius-argument",
            "reduction-shift-square",
            "reduction-p-divides-n",
            "three-coeff-first-condition",
            "three-coeff-lpoly-coefficient",
            "three-coeff-closed-display",
        };
        REQUIRE(rep.errata.size() == ids.size());
        for (size_t i = 0; i < ids.size(); ++i) {
            CHECK(rep.errata[i].id == ids[i]);
            CHECK(!rep.errata[i].claim.empty());
            CHECK(!rep.errata[i].printed.empty());
            CHECK(!rep.errata[i].computed.empty());
            CHECK(!rep.errata[i].evidence.empty());
        }
    }

    SECTION("errata do not fail the run") {
        // Every erratum also contributes an oracle-side check; those pass,
        // and no record carries the printed-vs-computed delta as a failure.
        long erratum_checks = 0;
        for (const CheckRecord& r : rep.records)
            if (r.name.rfind("errata.", 0) == 0) {
                CHECK(r.pass);
                ++erratum_checks;
            }
        CHECK(erratum_checks >= static_cast<long>(rep.errata.size()));
    }

    SECTION("records are deterministic across runs") {
        const VerifyReport again = run_verify({3});
        REQUIRE(again.records.size() == rep.records.size());
        for (size_t i = 0; i < rep.records.size(); ++i) {
            CHECK(again.records[i].name == rep.records[i].name);
            CHECK(again.records[i].inputs == rep.records[i].inputs);
            CHECK(again.records[i].expected == rep.records[i].expected);
            CHECK(again.records[i].got == rep.records[i].got);
        }
    }
}

TEST_CASE("grid handling", "[verify]") {
    // Orders are sorted and deduplicated; errata are grid-independent.
    const VerifyReport rep = run_verify({5, 3, 5});
    CHECK(rep.grid == std::vector<long>{3, 5});
    CHECK(rep.pass());
    CHECK(rep.errata.size() == 11);

    CHECK_THROWS_AS(run_verify({4}), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(run_verify({8}), std::invalid_argument);  // even characteristic
    CHECK_THROWS_AS(run_verify({}), std::invalid_argument);   // empty grid
    CHECK_THROWS_AS(run_verify({-3}), std::invalid_argument);
}
