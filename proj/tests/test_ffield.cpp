// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ffcount/ffield.hpp"
#include "ffcount/field_json.hpp"

using namespace ffcount;

namespace {

std::vector<long> modulus_indices(const Poly& m) {
    std::vector<long> out;
    for (const Element& c : m.c) out.push_back(m.field->index_of(c).convert_to<long>());
    return out;
}

// Every monic polynomial of the given degree, coefficient tuples in ascending
// base-q order.
std::vector<Poly> all_monics(const FieldPtr& k, int d) {
    const long q = k->cardinality().convert_to<long>();
    long total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    std::vector<Poly> out;
    out.reserve(total);
    for (long idx = 0; idx < total; ++idx) {
        std::vector<Element> c;
        long t = idx;
        for (int i = 0; i < d; ++i) {
            c.push_back(k->from_index(t % q));
            t /= q;
        }
        c.push_back(k->one());
        out.push_back(poly_from_coeffs(k, std::move(c)));
    }
    return out;
}

// A monic polynomial of degree >= 2 is reducible iff some monic polynomial of
// degree at most half divides it.
bool reducible_by_trial_division(const Poly& f) {
    for (int e = 1; e <= f.degree() / 2; ++e)
        for (const Poly& g : all_monics(f.field, e))
            if (poly_is_zero(poly_rem(f, g))) return true;
    return false;
}

} // namespace

TEST_CASE("deterministic moduli are the smallest irreducibles", "[ffield]") {
    CHECK(modulus_indices(standard_base_field(3, 2)->modulus()) == std::vector<long>{1, 0, 1});
    CHECK(modulus_indices(standard_base_field(3, 3)->modulus()) == std::vector<long>{1, 2, 0, 1});
    CHECK(modulus_indices(standard_base_field(5, 2)->modulus()) == std::vector<long>{2, 0, 1});
    // Relative modulus of F_81 over F_9: x^2 + w with w the 4th base element.
    CHECK(modulus_indices(standard_extension_field(3, 2, 2)->modulus()) ==
          std::vector<long>{4, 0, 1});

    SECTION("index skips that many irreducibles") {
        const Poly m0 = find_irreducible(3, 2, 0);
        const Poly m1 = find_irreducible(3, 2, 1);
        CHECK(is_irreducible(m0));
        CHECK(is_irreducible(m1));
        CHECK(modulus_indices(m0) != modulus_indices(m1));
        CHECK(modulus_indices(m0) < modulus_indices(m1)); // lexicographic on tuples
    }
}

TEST_CASE("prime field arithmetic matches integers mod p", "[ffield]") {
    const FieldPtr f7 = Field::prime(7);
    for (long a = 0; a < 7; ++a) {
        for (long b = 0; b < 7; ++b) {
            const Element ea = f7->from_index(a), eb = f7->from_index(b);
            CHECK(f7->index_of(f7->add(ea, eb)) == (a + b) % 7);
            CHECK(f7->index_of(f7->sub(ea, eb)) == ((a - b) % 7 + 7) % 7);
            CHECK(f7->index_of(f7->mul(ea, eb)) == (a * b) % 7);
        }
        if (a != 0) {
            const Element ea = f7->from_index(a);
            CHECK(f7->mul(ea, f7->inv(ea)) == f7->one());
            CHECK(f7->pow(ea, 6) == f7->one()); // Fermat
        }
    }
    CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
}

TEST_CASE("canonical index round trip and enumeration order", "[ffield]") {
    const FieldPtr ext = standard_extension_field(3, 1, 5);
    REQUIRE(ext->cardinality() == 243);

    auto en = ext->enumerate();
    Element x = ext->zero();
    bigint expected = 0;
    std::set<std::vector<digit>> seen;
    while (en.next(x)) {
        CHECK(ext->index_of(x) == expected);
        CHECK(ext->from_index(expected) == x);
        seen.insert(x.d);
        ++expected;
    }
    CHECK(expected == 243);
    CHECK(seen.size() == 243); // every element exactly once

    CHECK_THROWS_AS(ext->enumerate(10), std::invalid_argument);
    CHECK_THROWS_WITH(ext->enumerate(10), Catch::Matchers::ContainsSubstring("budget"));
}

TEST_CASE("element validation", "[ffield]") {
    const FieldPtr f9 = standard_base_field(3, 2);
    CHECK_THROWS_AS(f9->from_index(9), std::logic_error);
    CHECK_THROWS_AS(f9->from_index(-1), std::logic_error);
    CHECK_THROWS_AS(f9->from_digits({1}), std::logic_error);
    CHECK_THROWS_AS(f9->from_digits({1, 3}), std::logic_error);

    // Elements carry their field; cross-field arithmetic is rejected.
    const FieldPtr f25 = standard_base_field(5, 2);
    CHECK_THROWS_AS(f9->add(f9->one(), f25->one()), std::logic_error);
}

TEST_CASE("frobenius is the q-power automorphism fixing the base", "[ffield]") {
    const FieldPtr ext = standard_extension_field(3, 2, 2); // F_81 over F_9
    const FieldPtr& f9 = ext->base();
    const bigint q = f9->cardinality();

    std::vector<Element> all;
    ext->for_each([&](const digit* d) {
        all.push_back(ext->from_digits(std::vector<digit>(d, d + ext->fp_degree())));
    });
    REQUIRE(all.size() == 81);

    for (const Element& a : all) {
        CHECK(ext->frobenius(a) == ext->pow(a, q));
        CHECK(ext->frobenius(a, 2) == a);        // Galois group has order n = 2
        CHECK(ext->pow(a, 81) == a);             // a^(q^n) = a
        CHECK((ext->frobenius(a) == a) == ext->in_base(a));
    }
    for (const Element& a : all) {
        for (const Element& b : all) {
            CHECK(ext->frobenius(ext->add(a, b)) ==
                  ext->add(ext->frobenius(a), ext->frobenius(b)));
            CHECK(ext->frobenius(ext->mul(a, b)) ==
                  ext->mul(ext->frobenius(a), ext->frobenius(b)));
        }
    }

    SECTION("relative trace is the sum of conjugates") {
        for (const Element& a : all) {
            const Element conj_sum = ext->add(a, ext->frobenius(a));
            REQUIRE(ext->in_base(conj_sum));
            CHECK(ext->trace_to_base(a) == ext->to_base(conj_sum));
        }
    }

    SECTION("embedding and projection round trip") {
        for (bigint i = 0; i < 9; ++i) {
            const Element b = f9->from_index(i);
            const Element e = ext->embed(b);
            CHECK(ext->in_base(e));
            CHECK(ext->to_base(e) == b);
        }
    }
}

TEST_CASE("irreducibility test agrees with trial division", "[ffield]") {
    // (q, degree, number of monic irreducibles of that degree)
    const struct {
        long p;
        int d;
        long count;
    } cases[] = {{3, 2, 3}, {3, 3, 8}, {3, 4, 18}, {5, 2, 10}, {5, 3, 40}};
    for (const auto& c : cases) {
        const FieldPtr k = Field::prime(c.p);
        long found = 0;
        for (const Poly& f : all_monics(k, c.d)) {
            const bool irr = is_irreducible(f);
            CHECK(irr == !reducible_by_trial_division(f));
            found += irr ? 1 : 0;
        }
        CHECK(found == c.count);
    }
}

TEST_CASE("extension construction rejects bad moduli", "[ffield]") {
    const FieldPtr f3 = Field::prime(3);
    // x^2 + 2 = (x + 1)(x + 2) over F_3.
    const Poly reducible =
        poly_from_coeffs(f3, {f3->from_index(2), f3->zero(), f3->one()});
    CHECK_THROWS_AS(Field::extension(f3, reducible), std::invalid_argument);

    const Poly scaled = poly_scale(find_irreducible(f3, 2), f3->from_index(2));
    CHECK_THROWS_AS(Field::extension(f3, scaled), std::invalid_argument); // not monic
}

TEST_CASE("field specs serialize and parse", "[ffield][json]") {
    SECTION("prime field") {
        const ojson j = field_to_json(Field::prime(7));
        CHECK(j["p"] == 7);
        CHECK(j["r"] == 1);
        CHECK(j["modulus"] == ojson::array({0, 1}));
        CHECK(field_from_json(j)->cardinality() == 7);
    }

    SECTION("relative extension round trip") {
        const FieldPtr ext = standard_extension_field(3, 2, 2);
        const ojson j = field_to_json(ext);
        CHECK(j["base"]["p"] == 3);
        CHECK(j["base"]["r"] == 2);
        CHECK(j["base"]["modulus"] == ojson::array({1, 0, 1}));
        CHECK(j["n"] == 2);
        CHECK(j["relModulus"] == ojson::array({4, 0, 1}));

        const FieldPtr back = field_from_json(j);
        CHECK(back->cardinality() == ext->cardinality());
        CHECK(back->degree() == ext->degree());
        // Same modulus means digitwise-identical elements.
        CHECK(back->from_index(77) == ext->from_index(77));
        CHECK(field_to_json(back) == j);
    }

    SECTION("rejects malformed specs") {
        CHECK_THROWS_AS(field_from_json_text("{\"p\": 3, \"r\": 1}"),
                        std::invalid_argument); // missing modulus
        CHECK_THROWS_AS(field_from_json_text(
                            "{\"p\": 3, \"r\": 1, \"modulus\": [0, 1], \"extra\": 1}"),
                        std::invalid_argument);
        CHECK_THROWS_AS(field_from_json_text("{\"p\": 3, \"r\": 2, \"modulus\": [2, 0, 1]}"),
                        std::invalid_argument); // reducible
        CHECK_THROWS_AS(field_from_json_text("{\"p\": 3, \"r\": 2, \"modulus\": [1, 0, 2]}"),
                        std::invalid_argument); // not monic
        CHECK_THROWS_AS(field_from_json_text("{\"p\": 4, \"r\": 1, \"modulus\": [0, 1]}"),
                        std::invalid_argument);
    }
}
