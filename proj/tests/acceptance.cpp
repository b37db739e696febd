// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Each numbered criterion prints one [PASS]/[FAIL] line and
// the binary exits 0 only if every line passes. All comparisons are exact
// integer equality; the only tolerance anywhere is the 1e-6 root-modulus
// bound inside weil_check, pinned as kRootModulusTolerance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ffcount/corollary.hpp"
#include "ffcount/counting.hpp"
#include "ffcount/curves.hpp"
#include "ffcount/verify.hpp"

namespace {

using namespace ffcount;

constexpr long kGridCap = 10'000'000; // q^n ceiling for the excess/pair grids

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// 1. Brute-force point counts reproduce the three golden L-polynomials at
// q = 3. The degree-12 polynomial's printed form has one coefficient that no
// curve can produce (it breaks the functional equation); the enumeration
// pins the derivation-backed value and the difference is the recorded
// erratum three-coeff-lpoly-coefficient.
Outcome criterion_golden_lpolys() {
    const FieldPtr f3 = standard_base_field(3, 1);
    const LPolynomial l1 = lpoly_from_curve_brute(make_named_curve(f3, "c1"));
    const LPolynomial l2 = lpoly_from_curve_brute(make_named_curve(f3, "c2"));
    const LPolynomial l3 = lpoly_from_curve_brute(make_named_curve(f3, "c3"));

    const std::vector<bigint> qa{1, 0, 3}, qb{1, 3, 3}; // (3x^2+1), (3x^2+3x+1) ascending
    if (l1.c != bigpoly_mul(qa, bigpoly_mul(qb, qb)) || l1.c != lpoly_c1_q3())
        return {false, "first model disagrees with the stated quadratic product"};
    if (l2.c != bigpoly_mul(lpoly_factor_c2_q3(), lpoly_factor_c2_q3()))
        return {false, "second model disagrees with the stated sextic square"};
    if (l3.c != corrected_lpoly_c3_q3())
        return {false, "third model disagrees with the derivation-backed list"};

    const std::vector<bigint>& printed = printed_lpoly_c3_q3();
    long diffs = 0, where = -1;
    for (std::size_t i = 0; i < printed.size(); ++i)
        if (printed[i] != l3.c[i]) {
            ++diffs;
            where = static_cast<long>(i);
        }
    if (diffs != 1 || where != 8)
        return {false, "printed degree-12 list differs in an unexpected place"};
    return {true,
            "L1 and L2 exact; L3 exact up to the printed x^8 coefficient (576 printed, 567 "
            "counted; the printed value violates the functional equation; recorded erratum)"};
}

// 2. Closed-form excess equals the enumerated curve excess on the full grid
// q in {3,5,7,9}, q^n <= 1e7 (all four gcd(n,2p) cases, both q mod 4
// classes, and the square field).
Outcome criterion_excess_grid() {
    long checked = 0;
    for (long q : {3L, 5L, 7L, 9L}) {
        const auto [p, r] = factor_prime_power(q);
        const CurveModel model = make_named_curve(standard_base_field(p, r), "c1");
        for (long n = 1; q_pow(q, n) <= kGridCap; ++n) {
            const FieldPtr ext = standard_extension_field_q(q, static_cast<int>(n));
            const bigint brute_excess = count_points(model, ext) - (q_pow(q, n) + 1);
            if (closed_form_excess(p, r, n) != brute_excess)
                return {false, "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n)};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (q,n) grid points exact"};
}

// 3. The closed zero-target element count equals enumeration on the same
// grid, including the anchor values at q = 3.
Outcome criterion_pair_counts() {
    long checked = 0;
    for (long q : {3L, 5L, 7L, 9L}) {
        const auto [p, r] = factor_prime_power(q);
        for (long n = 1; q_pow(q, n) <= kGridCap; ++n) {
            const FieldPtr ext = standard_extension_field_q(q, static_cast<int>(n));
            if (zero_trace_pair_count_closed(p, r, n) != zero_trace_pair_count_brute(ext))
                return {false, "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n)};
            ++checked;
        }
    }
    if (zero_trace_pair_count_closed(3, 1, 5) != 21 ||
        zero_trace_pair_count_closed(3, 1, 6) != 99 || zero_trace_pair_count_closed(3, 1, 3) != 3)
        return {false, "anchor values at q=3 disagree"};
    return {true, std::to_string(checked) + " (q,n) grid points exact, anchors 3/21/99 hit"};
}

// 4. Closed irreducible counts equal the polynomial-enumeration oracle for
// q in {3,5}, 2 <= n <= 7, including the anchors.
Outcome criterion_irreducible_counts() {
    long checked = 0;
    for (long q : {3L, 5L}) {
        const FieldPtr fq = standard_base_field(factor_prime_power(q).first,
                                                factor_prime_power(q).second);
        const Element zero = fq->zero();
        for (long n = 2; n <= 7; ++n) {
            if (irreducible_zero_count_closed(q, n) !=
                irreducible_count_brute(fq, n, zero, zero))
                return {false, "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n)};
            ++checked;
        }
    }
    if (irreducible_zero_count_closed(3, 5) != 4 || irreducible_zero_count_closed(3, 6) != 15 ||
        irreducible_zero_count_closed(3, 2) != 0)
        return {false, "anchor values at q=3 disagree"};
    return {true, std::to_string(checked) + " (q,n) points exact, anchors 0/4/15 hit"};
}

// 5. The general-target reduction: the closed route equals enumeration for
// every target pair (t1,t2) in F_q^2, q in {3,5}, n <= 5. The printed
// variants of the reduction shift are the recorded errata
// reduction-shift-square and reduction-p-divides-n.
Outcome criterion_general_targets() {
    long checked = 0;
    for (long q : {3L, 5L}) {
        for (long n = 1; n <= 5; ++n) {
            const FieldPtr ext = standard_extension_field_q(q, static_cast<int>(n));
            const FieldPtr& fq = ext->base();
            for (long i1 = 0; i1 < q; ++i1)
                for (long i2 = 0; i2 < q; ++i2) {
                    const Element t1 = fq->from_index(i1), t2 = fq->from_index(i2);
                    if (trace_pair_count_closed(ext, t1, t2) !=
                        trace_pair_count_brute(ext, t1, t2))
                        return {false, "mismatch at q=" + std::to_string(q) +
                                           " n=" + std::to_string(n) + " target (" +
                                           std::to_string(i1) + "," + std::to_string(i2) + ")"};
                    ++checked;
                }
        }
    }
    return {true, std::to_string(checked) +
                      " targets exact; printed reduction variants recorded as errata"};
}

// 6. The root-multiplicity table from the inverse DFT has non-negative
// integer multiplicities summing to q(q-1), and its product-form
// L-polynomial matches the one built from the closed excess counts (and the
// brute-force one at q = 3).
Outcome criterion_corollary() {
    for (long q : {3L, 5L, 7L, 9L, 11L}) {
        const auto [p, r] = factor_prime_power(q);
        const RootMultiplicityTable table = corollary_table(p, r);
        long total = 0;
        for (const RootClass& c : table.classes) {
            if (c.multiplicity < 0)
                return {false, "negative multiplicity at q=" + std::to_string(q)};
            total += c.multiplicity;
        }
        if (total != q * (q - 1))
            return {false, "multiplicities at q=" + std::to_string(q) + " sum to " +
                               std::to_string(total) + ", expected " + std::to_string(q * (q - 1))};
        if (table_lpoly(table).c != closed_lpoly(p, r).c)
            return {false, "product form disagrees with excess counts at q=" + std::to_string(q)};
    }
    const LPolynomial brute =
        lpoly_from_curve_brute(make_named_curve(standard_base_field(3, 1), "c1"));
    if (table_lpoly(corollary_table(3, 1)).c != brute.c)
        return {false, "product form disagrees with enumeration at q=3"};
    return {true, "q in {3,5,7,9,11}: non-negative integers summing to q(q-1), product form "
                  "matches closed and brute routes"};
}

// 7. Classification: the first model is supersingular at every tested q;
// the second and third models at q = 3 are not.
Outcome criterion_classification() {
    for (long q : {3L, 5L, 7L, 9L, 11L}) {
        const auto [p, r] = factor_prime_power(q);
        if (to_string(classify_lpoly(closed_lpoly(p, r))) != "supersingular")
            return {false, "first model not supersingular at q=" + std::to_string(q)};
    }
    const FieldPtr f3 = standard_base_field(3, 1);
    for (const char* name : {"c2", "c3"}) {
        const LPolynomial l = lpoly_from_curve_brute(make_named_curve(f3, name));
        if (to_string(classify_lpoly(l)) != "not-supersingular")
            return {false, std::string(name) + " not classified as not-supersingular"};
    }
    return {true, "c1 supersingular at q in {3,5,7,9,11}; c2 and c3 not supersingular at q=3"};
}

// 8. The verify property suites (trace identities exhaustively on small
// fields and on >= 1e4 samples above, functional-equation and Weil checks on
// every produced L-polynomial, partition identities, inversion round trips)
// pass on the grid q in {3,5,7,9} with the full errata set.
Outcome criterion_verify_suites() {
    const VerifyReport rep = run_verify({3, 5, 7, 9}, kDefaultBudget);
    long failed = 0;
    for (const CheckRecord& c : rep.records) failed += c.pass ? 0 : 1;
    if (!rep.pass() || failed != 0)
        return {false, std::to_string(failed) + " of " + std::to_string(rep.records.size()) +
                           " checks failed"};
    if (rep.errata.size() != 11)
        return {false, "expected 11 errata records, got " + std::to_string(rep.errata.size())};
    return {true, std::to_string(rep.records.size()) +
                      " checks pass; 11 printed-variant errata; root-modulus tolerance 1e-6"};
}

// 9. Three-coefficient counts at q = 3: enumeration up to n = 13 against the
// printed closed-form display, agreement or a per-n discrepancy note; the
// derivation-backed closed form must match enumeration everywhere.
Outcome criterion_three_coefficients() {
    std::vector<long> agree, differ;
    for (long n = 1; n <= 13; ++n) {
        const FieldPtr ext = standard_extension_field_q(3, static_cast<int>(n));
        const bigint brute = three_coeff_zero_count_brute(ext);
        if (three_coeff_zero_count_closed_q3(n) != brute)
            return {false, "derivation-backed form disagrees with enumeration at n=" +
                               std::to_string(n)};
        const ThreeCoeffClosedValue printed = three_coeff_printed_value_q3(n);
        (printed.is_integer && printed.value == brute ? agree : differ).push_back(n);
    }
    return {true, "closed form matches enumeration for n <= 13; printed display agrees at n=" +
                      join(agree) + " and differs at n=" + join(differ) +
                      " (recorded erratum three-coeff-closed-display)"};
}

bool run_criterion(int idx, const char* name, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d. %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", idx, name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    return o.pass;
}

} // namespace

int main() {
    int passed = 0;
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"golden L-polynomials from point counts", criterion_golden_lpolys},
        {"closed-form excess vs enumeration", criterion_excess_grid},
        {"zero-target element counts vs enumeration", criterion_pair_counts},
        {"irreducible counts vs polynomial enumeration", criterion_irreducible_counts},
        {"general-target reduction on every target", criterion_general_targets},
        {"root-multiplicity table reconstruction", criterion_corollary},
        {"supersingularity classification", criterion_classification},
        {"verify property suites", criterion_verify_suites},
        {"three-coefficient counts vs printed display", criterion_three_coefficients},
    };
    for (std::size_t i = 0; i < criteria.size(); ++i)
        passed += run_criterion(static_cast<int>(i) + 1, criteria[i].first, criteria[i].second);
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
