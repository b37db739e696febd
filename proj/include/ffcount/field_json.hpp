// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON descriptions of field constructions. An absolute spec gives
// {"p": 3, "r": 2, "modulus": [1, 0, 1]} with the modulus little-endian over
// F_p (leading 1 included). A relative spec nests a base:
// {"base": {...}, "n": 5, "relModulus": [...]} where relModulus entries are
// canonical element indices of the base field (0 <= v < q). Round-trips are
// exact: parsing a spec and re-serializing yields the same JSON.
#pragma once

#include <json.hpp>

#include "ffcount/ffield.hpp"

namespace ffcount {

using ojson = nlohmann::ordered_json;

inline ojson field_to_json(const FieldPtr& f) {
    if (f->is_prime_field())
        return ojson{{"p", f->characteristic()}, {"r", 1}, {"modulus", {0, 1}}};
    if (f->base()->is_prime_field()) {
        ojson mod = ojson::array();
        for (const auto& c : f->modulus().c) mod.push_back(c.d[0]);
        return ojson{{"p", f->characteristic()}, {"r", f->degree()}, {"modulus", mod}};
    }
    ojson rel = ojson::array();
    for (const auto& c : f->modulus().c)
        rel.push_back(f->base()->index_of(c).convert_to<long>());
    return ojson{{"base", field_to_json(f->base())}, {"n", f->degree()}, {"relModulus", rel}};
}

inline FieldPtr field_from_json(const ojson& j) {
    if (!j.is_object()) fail("field spec must be a JSON object");
    if (j.contains("base")) {
        for (auto& [key, val] : j.items())
            if (key != "base" && key != "n" && key != "relModulus")
                fail("field spec: unknown key '" + key + "'");
        if (!j.contains("n") || !j.contains("relModulus"))
            fail("relative field spec needs \"n\" and \"relModulus\"");
        FieldPtr base = field_from_json(j.at("base"));
        long n = j.at("n").get<long>();
        const auto& rel = j.at("relModulus");
        if (!rel.is_array() || static_cast<long>(rel.size()) != n + 1)
            fail("relModulus must list n + 1 coefficients (leading 1 included)");
        std::vector<Element> cs;
        cs.reserve(rel.size());
        for (const auto& v : rel) {
            long idx = v.get<long>();
            if (idx < 0 || bigint(idx) >= base->cardinality())
                fail("relModulus coefficient out of range");
            cs.push_back(base->from_index(idx));
        }
        Poly mod{base, std::move(cs)};
        if (!poly_is_monic(mod)) fail("relModulus must be monic (last entry 1)");
        return Field::extension(base, mod); // validates irreducibility
    }
    for (auto& [key, val] : j.items())
        if (key != "p" && key != "r" && key != "modulus")
            fail("field spec: unknown key '" + key + "'");
    if (!j.contains("p") || !j.contains("r") || !j.contains("modulus"))
        fail("absolute field spec needs \"p\", \"r\", \"modulus\"");
    long p = j.at("p").get<long>();
    long r = j.at("r").get<long>();
    const auto& mod = j.at("modulus");
    if (!mod.is_array() || static_cast<long>(mod.size()) != r + 1)
        fail("modulus must list r + 1 coefficients (leading 1 included)");
    FieldPtr fp = Field::prime(p);
    if (r == 1) {
        // The prime field itself; only the canonical modulus x is accepted.
        if (mod[0].get<long>() != 0 || mod[1].get<long>() != 1)
            fail("r = 1 requires the canonical modulus [0, 1]");
        return fp;
    }
    std::vector<Element> cs;
    cs.reserve(mod.size());
    for (const auto& v : mod) {
        long d = v.get<long>();
        if (d < 0 || d >= p) fail("modulus coefficient out of range [0, p)");
        cs.push_back(fp->from_index(d));
    }
    Poly m{fp, std::move(cs)};
    if (!poly_is_monic(m)) fail("modulus must be monic (last entry 1)");
    return Field::extension(fp, m);
}

inline FieldPtr field_from_json_text(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail("field spec is not valid JSON");
    return field_from_json(j);
}

} // namespace ffcount
