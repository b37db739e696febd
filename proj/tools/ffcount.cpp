// Copyright (c) 2026 The ffcount Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Every subcommand prints one JSON document (or a
// table with --format table); identical invocations produce byte-identical
// output, so timing is opt-in via --timings. Exit codes: 0 success, 1
// computation or usage error, 2 verification failure.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffcount/field_json.hpp"
#include "ffcount/verify.hpp"

namespace {

using ffcount::bigint;
using ffcount::ojson;

constexpr const char* kSchema = "ffcount/1";

// Scalars are JSON numbers while they fit an int64 and decimal strings
// beyond, so arbitrarily large exact counts survive the trip.
ojson num(const bigint& v) {
    static const bigint lo = std::numeric_limits<std::int64_t>::min();
    static const bigint hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

ojson num_list(const std::vector<bigint>& v) {
    ojson out = ojson::array();
    for (const bigint& x : v) out.push_back(x.str()); // coefficients: always strings
    return out;
}

struct Common {
    std::string format = "json";
    std::string out;
    long budget = ffcount::kDefaultBudget;
    bool timings = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", c.out, "Write the output to this file instead of stdout");
    cmd->add_option("--budget", c.budget, "Enumeration budget in elements or candidates");
    cmd->add_flag("--timings", c.timings, "Include wall-clock seconds in the output");
}

// The extension field F_{q^n}: deterministic modulus by default, or exactly
// the construction in a JSON field spec (which must agree with --q/--n when
// both are given).
ffcount::FieldPtr resolve_field(long q, long n, const std::string& spec_path) {
    if (spec_path.empty()) return ffcount::standard_extension_field_q(q, static_cast<int>(n));
    std::ifstream in(spec_path);
    if (!in) ffcount::fail("cannot read field spec '" + spec_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ffcount::FieldPtr ext = ffcount::field_from_json_text(buf.str());
    if (!ext->base()) ffcount::fail("field spec must describe an extension field F_{q^n}");
    const bigint qb = ext->base()->cardinality();
    if (q != 0 && qb != q) ffcount::fail("field spec base order disagrees with --q");
    if (n != 0 && ext->degree() != n) ffcount::fail("field spec degree disagrees with --n");
    return ext;
}

const std::chrono::steady_clock::time_point g_start = std::chrono::steady_clock::now();

int emit(const Common& c, ojson j, std::string table) {
    if (c.timings) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
        if (!j.contains("seconds")) j["seconds"] = secs;
        table += "seconds = " + j["seconds"].dump() + "\n";
    }
    std::string text;
    if (c.format == "json") {
        text = j.dump(2);
        text += '\n';
    } else {
        text = table;
    }
    if (c.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(c.out);
    if (!out) {
        std::cerr << "error: cannot write '" << c.out << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

std::string kv_table(const ojson& j) {
    std::string s;
    for (const auto& [key, val] : j.items()) {
        if (key == "schema" || key == "command") continue;
        s += key + " = " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
    }
    return s;
}

long parse_grid_entry(const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) ffcount::fail("grid entry '" + s + "' is not an integer");
    return v;
}

std::vector<long> parse_grid(std::string grid) {
    if (grid.rfind("q=", 0) == 0) grid = grid.substr(2);
    std::vector<long> qs;
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        qs.push_back(parse_grid_entry(item));
    }
    if (qs.empty()) ffcount::fail("incomplete-input: --grid lists no field orders");
    return qs;
}

ojson check_to_json(const ffcount::CheckRecord& r) {
    return ojson{{"name", r.name},         {"inputs", r.inputs},
                 {"expected_source", r.expected_source}, {"expected", r.expected},
                 {"got", r.got},           {"pass", r.pass}};
}

ojson erratum_to_json(const ffcount::ErratumRecord& e) {
    return ojson{{"id", e.id},
                 {"claim", e.claim},
                 {"printed", e.printed},
                 {"computed", e.computed},
                 {"evidence", e.evidence}};
}

int run(int argc, char** argv) {
    CLI::App app{"ffcount: exact counts of monic irreducibles with prescribed "
                 "coefficients, and the curve counts behind them"};
    app.require_subcommand(1);

    // FFCOUNT_BUDGET sets the default budget; an explicit --budget still wins.
    long env_budget = ffcount::kDefaultBudget;
    if (const char* env = std::getenv("FFCOUNT_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || v <= 0) {
            std::cerr << "error: FFCOUNT_BUDGET is not a positive integer\n";
            return 1;
        }
        env_budget = v;
    }

    // --- field ---
    auto* c_field = app.add_subcommand("field", "Construct a field and print its JSON spec");
    Common field_c;
    field_c.budget = env_budget;
    long field_q = 0, field_n = 0, field_index = 0;
    std::string field_spec;
    c_field->add_option("--q", field_q, "Base field order (odd prime power)");
    c_field->add_option("--n", field_n, "Extension degree over the base (0 = base only)");
    c_field->add_option("--modulus-index", field_index,
                        "Index into the deterministic modulus enumeration");
    c_field->add_option("--field-spec", field_spec, "JSON field spec to parse and echo");
    add_common(c_field, field_c);

    // --- trace ---
    auto* c_trace = app.add_subcommand("trace", "Trace and subtrace of one element");
    Common trace_c;
    trace_c.budget = env_budget;
    long trace_q = 0, trace_n = 0;
    std::string trace_elem, trace_spec;
    c_trace->add_option("--q", trace_q, "Base field order")->required();
    c_trace->add_option("--n", trace_n, "Extension degree")->required();
    c_trace->add_option("--elem", trace_elem, "Element as canonical index in [0, q^n)")
        ->required();
    c_trace->add_option("--field-spec", trace_spec, "JSON field spec override");
    add_common(c_trace, trace_c);

    // --- qform ---
    auto* c_qform = app.add_subcommand("qform", "Fiber counts of the trace quadratic form");
    Common qform_c;
    qform_c.budget = env_budget;
    long qform_q = 0, qform_n = 0, qform_value = 0;
    std::string qform_method = "closed", qform_spec;
    c_qform->add_option("--q", qform_q, "Base field order")->required();
    c_qform->add_option("--n", qform_n, "Extension degree")->required();
    c_qform->add_option("--value", qform_value, "Target value as canonical index in [0, q)");
    c_qform->add_option("--method", qform_method, "Computation route")
        ->check(CLI::IsMember({"brute", "closed"}));
    c_qform->add_option("--field-spec", qform_spec, "JSON field spec override");
    add_common(c_qform, qform_c);

    // --- curve ---
    auto* c_curve = app.add_subcommand("curve", "Point count of a named curve model");
    Common curve_c;
    curve_c.budget = env_budget;
    long curve_q = 0, curve_n = 0;
    std::string curve_name, curve_method = "brute", curve_spec;
    c_curve->add_option("--q", curve_q, "Base field order")->required();
    c_curve->add_option("--n", curve_n, "Extension degree")->required();
    c_curve->add_option("--curve", curve_name, "Curve model")
        ->required()
        ->check(CLI::IsMember({"c1", "c2", "c3"}));
    c_curve->add_option("--method", curve_method, "Computation route")
        ->check(CLI::IsMember({"brute", "closed"}));
    c_curve->add_option("--field-spec", curve_spec, "JSON field spec override");
    add_common(c_curve, curve_c);

    // --- lpoly ---
    auto* c_lpoly = app.add_subcommand("lpoly", "L-polynomial of a named curve model");
    Common lpoly_c;
    lpoly_c.budget = env_budget;
    long lpoly_q = 0;
    std::string lpoly_curve, lpoly_method = "brute";
    c_lpoly->add_option("--q", lpoly_q, "Base field order")->required();
    c_lpoly->add_option("--curve", lpoly_curve, "Curve model")
        ->required()
        ->check(CLI::IsMember({"c1", "c2", "c3"}));
    c_lpoly->add_option("--method", lpoly_method, "Computation route")
        ->check(CLI::IsMember({"brute", "closed", "corollary"}));
    add_common(c_lpoly, lpoly_c);

    // --- classify ---
    auto* c_classify = app.add_subcommand("classify", "Supersingularity class of a curve model");
    Common classify_c;
    classify_c.budget = env_budget;
    long classify_q = 0;
    std::string classify_curve, classify_method = "brute";
    c_classify->add_option("--q", classify_q, "Base field order")->required();
    c_classify->add_option("--curve", classify_curve, "Curve model")
        ->required()
        ->check(CLI::IsMember({"c1", "c2", "c3"}));
    c_classify->add_option("--method", classify_method, "Computation route")
        ->check(CLI::IsMember({"brute", "closed", "corollary"}));
    add_common(c_classify, classify_c);

    // --- count-f ---
    auto* c_countf = app.add_subcommand(
        "count-f", "Elements of F_{q^n} with prescribed trace values (monic-polynomial fibers)");
    Common countf_c;
    countf_c.budget = env_budget;
    long countf_q = 0, countf_n = 0, countf_t1 = 0, countf_t2 = 0;
    std::optional<long> countf_t3;
    std::string countf_method = "closed", countf_spec;
    c_countf->add_option("--q", countf_q, "Base field order")->required();
    c_countf->add_option("--n", countf_n, "Extension degree")->required();
    c_countf->add_option("--t1", countf_t1, "First trace target in [0, q)")->required();
    c_countf->add_option("--t2", countf_t2, "Second trace target in [0, q)")->required();
    c_countf->add_option("--t3", countf_t3,
                         "Third trace target; only the zero triple is supported");
    c_countf->add_option("--method", countf_method, "Computation route")
        ->check(CLI::IsMember({"brute", "closed"}));
    c_countf->add_option("--field-spec", countf_spec, "JSON field spec override");
    add_common(c_countf, countf_c);

    // --- count-i ---
    auto* c_counti = app.add_subcommand(
        "count-i", "Monic irreducibles of degree n with prescribed top coefficients");
    Common counti_c;
    counti_c.budget = env_budget;
    long counti_q = 0, counti_n = 0, counti_t1 = 0, counti_t2 = 0;
    std::string counti_method = "closed";
    c_counti->add_option("--q", counti_q, "Base field order")->required();
    c_counti->add_option("--n", counti_n, "Polynomial degree")->required();
    c_counti->add_option("--t1", counti_t1, "Coefficient of x^{n-1} in [0, q)")->required();
    c_counti->add_option("--t2", counti_t2, "Coefficient of x^{n-2} in [0, q)")->required();
    c_counti->add_option("--method", counti_method, "Computation route")
        ->check(CLI::IsMember({"brute", "closed"}));
    add_common(c_counti, counti_c);

    // --- verify ---
    auto* c_verify = app.add_subcommand("verify", "Oracle-vs-closed grid with errata records");
    Common verify_c;
    verify_c.budget = env_budget;
    std::string verify_grid = "q=3,5";
    c_verify->add_option("--grid", verify_grid, "Base field orders, e.g. \"q=3,5,7,9\"");
    add_common(c_verify, verify_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help(); // delegates to the selected subcommand
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*c_field) {
            ffcount::FieldPtr f;
            if (!field_spec.empty()) {
                f = resolve_field(field_q, field_n, field_spec);
            } else {
                const auto [p, r] = ffcount::factor_prime_power(field_q);
                // The index picks among deterministic moduli of the top field.
                f = field_n > 0 ? ffcount::make_extension_field(p, r, static_cast<int>(field_n),
                                                                field_index)
                                : ffcount::make_base_field(p, r, field_index);
            }
            ojson j{{"schema", kSchema}, {"command", "field"}, {"field", ffcount::field_to_json(f)}};
            return emit(field_c, j, "field = " + ffcount::field_to_json(f).dump() + "\n");
        }

        if (*c_trace) {
            const ffcount::FieldPtr ext = resolve_field(trace_q, trace_n, trace_spec);
            const bigint idx(trace_elem);
            const ffcount::Element x = ext->from_index(idx);
            const auto [t1, t2] = ffcount::trace_pair(x);
            const ffcount::FieldPtr& fq = ext->base();
            ojson j{{"schema", kSchema}, {"command", "trace"},
                    {"q", trace_q},      {"n", trace_n},
                    {"elem", num(idx)},  {"trace1", num(fq->index_of(t1))},
                    {"trace2", num(fq->index_of(t2))}};
            return emit(trace_c, j, kv_table(j));
        }

        if (*c_qform) {
            const ffcount::FieldPtr ext = resolve_field(qform_q, qform_n, qform_spec);
            const ffcount::FieldPtr& fq = ext->base();
            const long p = ext->characteristic();
            const ffcount::Element c = fq->from_index(qform_value);
            const ffcount::Method m = ffcount::method_from_string(qform_method);
            const bigint count = ffcount::qf_value_count(ext, c, m, qform_c.budget);
            const int w = ffcount::radical_dim(qform_n, p);
            ojson j{{"schema", kSchema},  {"command", "qform"},
                    {"q", qform_q},       {"n", qform_n},
                    {"value", qform_value}, {"method", qform_method},
                    {"w", w},             {"rank", qform_n - w},
                    {"N", num(count)},    {"case", ffcount::gcd_case_tag(qform_n, p)}};
            return emit(qform_c, j, kv_table(j));
        }

        if (*c_curve) {
            const ffcount::FieldPtr ext = resolve_field(curve_q, curve_n, curve_spec);
            const ffcount::CurveModel model = ffcount::make_named_curve(ext->base(), curve_name);
            bigint points;
            if (curve_method == "closed") {
                if (curve_name != "c1")
                    ffcount::fail("closed-form point counts exist only for the c1 model");
                const auto [p, r] = ffcount::factor_prime_power(curve_q);
                points = ffcount::closed_curve_count_c1(p, r, curve_n);
            } else {
                points = ffcount::count_points(model, ext, curve_c.budget);
            }
            ojson j{{"schema", kSchema},   {"command", "curve"}, {"q", curve_q},
                    {"n", curve_n},        {"curve", curve_name}, {"genus", model.genus},
                    {"method", curve_method}, {"points", num(points)}};
            return emit(curve_c, j, kv_table(j));
        }

        if (*c_lpoly || *c_classify) {
            const bool classifying = static_cast<bool>(*c_classify);
            const Common& com = classifying ? classify_c : lpoly_c;
            const long q = classifying ? classify_q : lpoly_q;
            const std::string& name = classifying ? classify_curve : lpoly_curve;
            const std::string& method = classifying ? classify_method : lpoly_method;
            const auto [p, r] = ffcount::factor_prime_power(q);
            ffcount::LPolynomial l;
            if (method == "brute") {
                const ffcount::CurveModel model =
                    ffcount::make_named_curve(ffcount::standard_base_field(p, r), name);
                l = ffcount::lpoly_from_curve_brute(model, com.budget);
            } else {
                if (name != "c1")
                    ffcount::fail("closed-form L-polynomials exist only for the c1 model");
                l = method == "closed" ? ffcount::closed_lpoly(p, r)
                                       : ffcount::table_lpoly(ffcount::corollary_table(p, r));
            }
            ojson j{{"schema", kSchema},
                    {"command", classifying ? "classify" : "lpoly"},
                    {"q", q},
                    {"curve", name},
                    {"genus", l.g},
                    {"method", method},
                    {"lpoly", num_list(l.c)}};
            if (classifying) j["class"] = ffcount::to_string(ffcount::classify_lpoly(l));
            return emit(com, j, kv_table(j));
        }

        if (*c_countf) {
            bigint value;
            if (countf_t3.has_value()) {
                if (countf_t1 != 0 || countf_t2 != 0 || *countf_t3 != 0)
                    ffcount::fail("three-coefficient counts support only the zero targets "
                                  "(t1 = t2 = t3 = 0)");
                if (countf_method == "closed") {
                    if (countf_q != 3)
                        ffcount::fail("the closed three-coefficient count exists only at q = 3");
                    ffcount::factor_prime_power(countf_q); // validate q before answering
                    value = ffcount::three_coeff_zero_count_closed_q3(countf_n);
                } else {
                    const ffcount::FieldPtr ext =
                        resolve_field(countf_q, countf_n, countf_spec);
                    value = ffcount::three_coeff_zero_count_brute(ext, countf_c.budget);
                }
            } else {
                const ffcount::FieldPtr ext = resolve_field(countf_q, countf_n, countf_spec);
                const ffcount::FieldPtr& fq = ext->base();
                const ffcount::Element t1 = fq->from_index(countf_t1);
                const ffcount::Element t2 = fq->from_index(countf_t2);
                value = ffcount::trace_pair_count(ext, t1, t2,
                                                  ffcount::method_from_string(countf_method),
                                                  countf_c.budget);
            }
            ojson j{{"schema", kSchema}, {"command", "count-f"}, {"q", countf_q},
                    {"n", countf_n},     {"t1", countf_t1},      {"t2", countf_t2}};
            if (countf_t3.has_value()) j["t3"] = *countf_t3;
            j["method"] = countf_method;
            j["value"] = num(value);
            return emit(countf_c, j, kv_table(j));
        }

        if (*c_counti) {
            const auto [p, r] = ffcount::factor_prime_power(counti_q);
            const ffcount::FieldPtr fq = ffcount::standard_base_field(p, r);
            bigint value;
            if (counti_method == "closed") {
                if (counti_t1 != 0 || counti_t2 != 0)
                    ffcount::fail("the closed irreducible count exists only for the zero "
                                  "coefficient targets");
                value = ffcount::irreducible_zero_count_closed(counti_q, counti_n);
            } else {
                value = ffcount::irreducible_count_brute(fq, counti_n, fq->from_index(counti_t1),
                                                         fq->from_index(counti_t2),
                                                         counti_c.budget);
            }
            ojson j{{"schema", kSchema}, {"command", "count-i"}, {"q", counti_q},
                    {"n", counti_n},     {"t1", counti_t1},      {"t2", counti_t2},
                    {"method", counti_method}, {"value", num(value)}};
            return emit(counti_c, j, kv_table(j));
        }

        if (*c_verify) {
            const ffcount::VerifyReport rep =
                ffcount::run_verify(parse_grid(verify_grid), verify_c.budget);
            ojson checks = ojson::array();
            long failed = 0;
            for (const auto& r : rep.records) {
                checks.push_back(check_to_json(r));
                failed += r.pass ? 0 : 1;
            }
            ojson errata = ojson::array();
            for (const auto& e : rep.errata) errata.push_back(erratum_to_json(e));
            ojson j{{"schema", kSchema},
                    {"command", "verify"},
                    {"grid", rep.grid},
                    {"budget", verify_c.budget},
                    {"pass", rep.pass()},
                    {"counts",
                     ojson{{"checks", static_cast<long>(rep.records.size())},
                           {"failed", failed},
                           {"errata", static_cast<long>(rep.errata.size())}}},
                    {"checks", checks},
                    {"errata", errata}};
            if (verify_c.timings) j["seconds"] = rep.seconds;

            std::string table;
            table += std::string("pass: ") + (rep.pass() ? "yes" : "no") + "\n";
            table += "checks: " + std::to_string(rep.records.size()) +
                     " (failed " + std::to_string(failed) + ")\n";
            for (const auto& r : rep.records)
                if (!r.pass)
                    table += "FAIL " + r.name + " [" + r.inputs + "]: expected " + r.expected +
                             ", got " + r.got + "\n";
            table += "errata: " + std::to_string(rep.errata.size()) + "\n";
            for (const auto& e : rep.errata)
                table += "  " + e.id + ": printed " + e.printed + "; computed " + e.computed +
                         "\n";
            const int code = emit(verify_c, j, table);
            if (code != 0) return code;
            return rep.pass() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        // invalid_argument: bad inputs or budget; logic_error: internal
        // arithmetic fault; runtime_error: malformed big-integer literals.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
