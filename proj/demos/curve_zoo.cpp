// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// The three named curve models over a small field: genus, point counts over
// the first few extensions, the L-polynomial recovered from those counts,
// and its supersingularity class. For the first model the closed form and
// the root-multiplicity product are printed alongside the enumeration.

#include <iostream>

#include "ffcount/corollary.hpp"
#include "ffcount/curves.hpp"

namespace {

void print_lpoly(const ffcount::LPolynomial& l) {
    std::cout << "[";
    for (std::size_t i = 0; i < l.c.size(); ++i)
        std::cout << (i ? ", " : "") << l.c[i];
    std::cout << "]";
}

} // namespace

int main() {
    using namespace ffcount;

    const long q = 3;
    const auto [p, r] = factor_prime_power(q);
    const FieldPtr fq = standard_base_field(p, r);

    for (const char* name : {"c1", "c2", "c3"}) {
        const CurveModel model = make_named_curve(fq, name);
        std::cout << name << ": y^" << q << " - y = f(x), deg f = " << model.f.degree()
                  << ", genus " << model.genus << "\n";

        std::cout << "  points over F_{" << q << "^n}, n = 1..4:";
        for (long n = 1; n <= 4; ++n) {
            const FieldPtr ext = standard_extension_field_q(q, static_cast<int>(n));
            std::cout << " " << count_points(model, ext);
        }
        std::cout << "\n";

        const LPolynomial l = lpoly_from_curve_brute(model);
        std::cout << "  L-polynomial ";
        print_lpoly(l);
        std::cout << "\n  class: " << to_string(classify_lpoly(l))
                  << ", Weil check: " << (weil_check(l).pass() ? "pass" : "FAIL") << "\n";
    }

    // The first model has two more routes to the same polynomial: the closed
    // excess formula and the root-multiplicity table.
    std::cout << "\nc1 cross-check at q = " << q << ":\n";
    std::cout << "  closed excess route:    ";
    print_lpoly(closed_lpoly(p, r));
    std::cout << "\n  multiplicity product:   ";
    print_lpoly(table_lpoly(corollary_table(p, r)));
    std::cout << "\n";

    const RootMultiplicityTable table = corollary_table(p, r);
    std::cout << "  normalized root classes:";
    for (const RootClass& c : table.classes)
        if (c.multiplicity != 0) std::cout << " " << c.label << " x" << c.multiplicity;
    std::cout << "\n";
    return 0;
}
