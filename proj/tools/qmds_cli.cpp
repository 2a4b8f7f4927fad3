/**************************************************************************
 * qmds_cli.cpp
 *
 * Copyright 2026 The qmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// Command-line frontend. Exit status: 0 success, 1 domain error, 2 usage error.

#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmds/qmds.hpp"

namespace {

using namespace qmds;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t q = 0;
    std::uint32_t p = 0, e = 1;
    std::size_t r = 0, n = 0, k = 0, d = 0, d_perp = 0;
    std::string in, out, iso, method;
    std::vector<std::size_t> blocks;
    std::vector<std::uint64_t> params;
    std::vector<std::string> head;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 100;
    std::uint64_t budget = kDefaultBudget;
    bool json_out = false;
    bool use_dual_basis = false;
};

FieldPtr field_from_options(const Options& o) {
    if (o.p) return Field::create(o.p, o.e);
    if (o.q) return Field::of_order(o.q);
    throw UsageError("a field is required: pass --q or --p [--e]");
}

LinearCode load_code(const Options& o) {
    if (o.in.empty()) throw UsageError("--in PATH is required");
    return code_from_json(read_json_file(o.in));
}

void emit(const Options& o, const json& j) {
    if (o.out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(o.out, j);
        if (!o.json_out) std::cout << "wrote " << o.out << '\n';
    }
}

std::vector<std::size_t> zero_based_blocks(const Options& o, std::size_t n) {
    if (o.blocks.empty()) throw UsageError("--blocks I,J,... is required");
    std::vector<std::size_t> out;
    for (auto b : o.blocks) {
        if (b == 0 || b > n) throw std::invalid_argument("block " + std::to_string(b) + " outside [1, " + std::to_string(n) + "]");
        out.push_back(b - 1);
    }
    return out;
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s;
}

std::string rational_str(const BigRational& x) {
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

// ---- construct -------------------------------------------------------------

int construct_pi(const Options& o) {
    const auto f = field_from_options(o);
    const std::string mode = o.method.empty() ? "split" : o.method;
    ModuliSet m;
    if (mode == "split")
        m = split_moduli(f, o.r, o.n, RootMode::distinct);
    else if (mode == "repeated")
        m = split_moduli(f, o.r, o.n, RootMode::repeated);
    else if (mode == "irreducible")
        m = irreducible_moduli(f, o.r, o.n);
    else
        throw UsageError("--method must be split, repeated or irreducible");
    std::optional<std::vector<Matrix>> blocks;
    if (o.seed) {
        std::mt19937_64 rng(*o.seed);
        blocks.emplace();
        for (std::size_t i = 0; i < o.n; ++i) blocks->push_back(random_invertible(f, o.r, rng));
    }
    emit(o, code_to_json(pi_code(f, m, o.k, blocks)));
    return 0;
}

int construct_binary_long(const Options& o) {
    emit(o, code_to_json(binary_long_code(o.r)));
    return 0;
}

int construct_repetition_dual(const Options& o) {
    emit(o, code_to_json(repetition_dual_code(o.n, o.r, field_from_options(o))));
    return 0;
}

int construct_subcode(const Options& o) {
    emit(o, code_to_json(qmds_subcode(load_code(o), o.k)));
    return 0;
}

// Input: a code over F_{Q} with r = 1; --q names the base field F_q.
int construct_expand(const Options& o) {
    const auto c = load_code(o);
    if (c.r() != 1) throw std::invalid_argument("expand: input must have block width 1 (a code over the extension field)");
    const auto ext = make_extension(field_from_options(o), c.field());
    const Field& E = *ext->ext();
    std::vector<Elem> powers;
    Elem x = E.one();
    for (std::uint32_t i = 0; i < ext->degree(); ++i, x = E.mul(x, E.primitive())) powers.push_back(x);
    OrderedBasis basis(ext, powers);
    if (o.use_dual_basis) basis = dual_basis(basis);
    emit(o, code_to_json(expand_code(c.generator(), basis)));
    return 0;
}

// ---- analysis --------------------------------------------------------------

int classify_cmd(const Options& o) {
    const auto c = load_code(o);
    ClassifyMethod m = ClassifyMethod::by_minors;
    if (o.method == "distance")
        m = ClassifyMethod::by_distance;
    else if (!o.method.empty() && o.method != "minors")
        throw UsageError("--method must be minors or distance");
    const auto cls = classify(c, m, o.budget);
    if (o.json_out) {
        std::cout << classification_to_json(cls).dump(2) << '\n';
    } else {
        std::cout << cls.label() << ' ' << cls.type() << '\n';
        std::cout << "dual " << cls.dual_type() << '\n';
    }
    return 0;
}

void print_distribution(const Options& o, const WeightDistribution& a) {
    if (o.json_out) {
        std::cout << json{{"n", a.n}, {"r", a.r}, {"k", a.k}, {"q", a.q}, {"counts", counts_to_json(a.counts)}}.dump(2)
                  << '\n';
    } else {
        std::cout << "A = " << join(a.counts) << '\n';
    }
}

int wdist_cmd(const Options& o) {
    const std::string method = o.method.empty() ? "exhaustive" : o.method;
    std::size_t n = 0, r = 0, k = 0;
    std::uint64_t q = 0;
    if (!o.params.empty()) {
        if (o.params.size() != 4) throw UsageError("--params expects n,r,k,q");
        n = o.params[0];
        r = o.params[1];
        k = o.params[2];
        q = o.params[3];
    } else if (method == "formula" || method == "reconstruct") {
        const auto c = load_code(o);
        n = c.n();
        r = c.r();
        k = c.k();
        q = c.q();
    }
    if (method == "exhaustive") {
        print_distribution(o, wdist_exhaustive(load_code(o), o.budget));
        return 0;
    }
    if (method == "formula") {
        const auto a = wdist_formula(n, r, k, q);
        print_distribution(o, a);
        if (a.has_negative()) {
            std::cerr << "negative entries: no dually QMDS code of type [" << n << "," << r << "," << k << "] over F_"
                      << q << '\n';
            return 1;
        }
        return 0;
    }
    if (method == "macwilliams-check") {
        const auto c = load_code(o);
        const auto res = macwilliams_check(wdist_exhaustive(c, o.budget), wdist_exhaustive(dual(c), o.budget));
        bool zero = true;
        json arr = json::array();
        for (const auto& x : res) {
            zero = zero && x == 0;
            arr.push_back(rational_str(x));
        }
        if (o.json_out)
            std::cout << json{{"residuals", arr}, {"satisfied", zero}}.dump(2) << '\n';
        else
            std::cout << (zero ? "MacWilliams identities hold" : "MacWilliams identities FAIL") << '\n';
        return zero ? 0 : 1;
    }
    if (method == "reconstruct") {
        if (!o.d || !o.d_perp) throw UsageError("reconstruct needs --d and --d-perp");
        std::vector<BigInt> head;
        for (const auto& s : o.head) {
            try {
                head.emplace_back(s);
            } catch (const std::exception&) {
                throw UsageError("--head entry '" + s + "' is not an integer");
            }
        }
        print_distribution(o, reconstruct_distribution(head, n, r, k, q, o.d, o.d_perp));
        return 0;
    }
    throw UsageError("--method must be exhaustive, formula, macwilliams-check or reconstruct");
}

int restrict_cmd(const Options& o, bool shorten) {
    const auto c = load_code(o);
    const auto blocks = zero_based_blocks(o, c.n());
    const auto sub = shorten ? shorten_code(c, blocks) : restrict_code(c, blocks);
    if (o.out.empty() && !o.json_out) {
        std::cout << (shorten ? "shortened" : "restricted") << " code: n = " << sub.n() << ", k = " << sub.k() << '\n';
        if (sub.k() > 0 && sub.k() < sub.length()) {
            const auto cls = classify(sub);
            std::cout << cls.label() << ' ' << cls.type() << '\n';
        }
        return 0;
    }
    emit(o, code_to_json(sub));
    return 0;
}

int bounds_cmd(const Options& o) {
    if (!o.q || !o.r || !o.k) throw UsageError("bounds needs --q, --r and --k");
    const auto rep = dually_qmds_bounds(o.q, o.r, o.k, o.n ? std::optional<std::size_t>(o.n) : std::nullopt);
    BoundEntry hamming{"hamming-length", "n <=", "d >= 3, QMDS", 0, Applicability::needs_n};
    if (o.d >= 3) {
        hamming.value = length_bound_hamming(o.d, o.q, o.r, o.k);
        hamming.applicability = Applicability::applies;
    } else if (o.d) {
        hamming.applicability = Applicability::inapplicable;
    }
    std::vector<const BoundEntry*> all = rep.entries();
    all.push_back(&hamming);
    if (o.json_out) {
        json arr = json::array();
        for (const auto* e : all) {
            json row{{"name", e->name}, {"statement", e->statement}, {"hypothesis", e->hypothesis},
                     {"applicability", to_string(e->applicability)}};
            if (e != &hamming || o.d >= 3) row["value"] = e->value.str();
            arr.push_back(row);
        }
        std::cout << json{{"q", o.q}, {"r", o.r}, {"k", o.k}, {"epsilon", rep.epsilon}, {"delta", rep.delta},
                          {"bounds", arr}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "epsilon = " << rep.epsilon << ", delta = " << rep.delta << '\n';
    std::cout << std::left << std::setw(22) << "bound" << std::setw(12) << "statement" << std::setw(14) << "value"
              << std::setw(14) << "status" << "hypothesis" << '\n';
    for (const auto* e : all) {
        const bool has_value = e != &hamming || o.d >= 3;
        std::cout << std::setw(22) << e->name << std::setw(12) << e->statement << std::setw(14)
                  << (has_value ? e->value.str() : std::string("-")) << std::setw(14) << to_string(e->applicability)
                  << e->hypothesis << '\n';
    }
    return 0;
}

int density_cmd(const Options& o) {
    if (!o.seed) throw UsageError("density needs --seed");
    if (!o.q || !o.r || !o.n || !o.k) throw UsageError("density needs --q, --r, --n and --k");
    const auto res = density_experiment(o.n, o.r, o.k, o.q, o.trials, *o.seed);
    std::cout << json{{"empirical", rational_str(res.empirical)},
                      {"theoretical_bound", rational_str(res.theoretical_bound)},
                      {"trials", res.trials},
                      {"seed", res.seed},
                      {"dually_qmds", res.dually_qmds},
                      {"vacuous", res.vacuous},
                      {"sigma", res.sigma},
                      {"within_three_sigma", res.within_three_sigma()}}
                     .dump(2)
              << '\n';
    return 0;
}

// ---- pseudo arcs -----------------------------------------------------------

int arc_from_code_cmd(const Options& o) {
    emit(o, arc_to_json(arc_from_code(load_code(o))));
    return 0;
}

int arc_to_code_cmd(const Options& o) {
    if (o.in.empty()) throw UsageError("--in PATH is required");
    emit(o, code_to_json(code_from_arc(arc_from_json(read_json_file(o.in)))));
    return 0;
}

int arc_params_cmd(const Options& o) {
    if (o.in.empty()) throw UsageError("--in PATH is required");
    const auto p = arc_params(arc_from_json(read_json_file(o.in)));
    if (o.json_out) {
        std::cout << json{{"n", p.n}, {"r", p.r}, {"m", p.m}, {"t", p.t}, {"nondegenerate", p.nondegenerate}}.dump(2)
                  << '\n';
    } else {
        std::cout << "arc [" << p.n << "," << p.r << "," << p.m << "," << p.t << "] "
                  << (p.nondegenerate ? "nondegenerate" : "degenerate") << '\n';
    }
    return 0;
}

// ---- isometries ------------------------------------------------------------

Isometry load_isometry(const Options& o, const LinearCode& c) {
    if (!o.iso.empty()) return isometry_from_json(read_json_file(o.iso), c.field(), c.r());
    if (!o.seed) throw UsageError("pass --iso PATH or --seed for a random isometry");
    std::mt19937_64 rng(*o.seed);
    return random_isometry(c.field(), c.n(), c.r(), rng);
}

int isometry_apply_cmd(const Options& o) {
    const auto c = load_code(o);
    emit(o, code_to_json(apply_isometry(c, load_isometry(o, c))));
    return 0;
}

// The dual isometry maps dual(c) onto dual(iso(c)); both transports are
// checked before the witness is printed.
int isometry_dual_witness_cmd(const Options& o) {
    const auto c = load_code(o);
    const auto iso = load_isometry(o, c);
    iso.validate(c.n(), c.r());
    const auto image = apply_isometry(c, iso);
    const auto diso = dual_isometry(iso);
    const bool dual_ok = same_row_space(apply_isometry(dual(c), diso).canonical(), dual(image).canonical());
    json out{{"isometry", isometry_to_json(*c.field(), iso)}, {"dual_isometry", isometry_to_json(*c.field(), diso)},
             {"dual_verified", dual_ok}};
    if (!c.is_full() && !c.is_zero()) {
        const auto w = arc_equivalence_witness(c, iso);
        json tau = json::array();
        for (auto t : w.tau) tau.push_back(t + 1);
        out["arc_witness"] = json{{"b", matrix_to_json(w.b)},
                                  {"tau", tau},
                                  {"verified", verify_arc_witness(c.parity(), image.parity(), w, c.r())}};
    }
    if (o.json_out || !o.out.empty()) {
        emit(o, out);
    } else {
        std::cout << "dual isometry " << (dual_ok ? "verified" : "FAILED") << '\n';
        if (out.contains("arc_witness"))
            std::cout << "arc witness B " << (out["arc_witness"]["verified"].get<bool>() ? "verified" : "FAILED") << '\n';
    }
    return dual_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmds: linear codes in the folded Hamming metric"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_field = [&](CLI::App* s) {
        s->add_option("--q", o.q, "field order");
        s->add_option("--p", o.p, "field characteristic");
        s->add_option("--e", o.e, "extension degree over F_p");
    };
    auto add_io = [&](CLI::App* s) {
        s->add_option("--in", o.in, "input file");
        s->add_option("--out", o.out, "output file (default: stdout)");
        s->add_flag("--json", o.json_out, "machine-readable output");
    };

    auto* construct = app.add_subcommand("construct", "build a code and write it as JSON");
    construct->require_subcommand(1);
    {
        auto* s = construct->add_subcommand("pi", "polynomial ideal code");
        add_field(s);
        add_io(s);
        s->add_option("--r", o.r)->required();
        s->add_option("--n", o.n)->required();
        s->add_option("--k", o.k)->required();
        s->add_option("--method", o.method, "split | repeated | irreducible");
        s->add_option("--seed", o.seed, "random invertible block matrices (generalized code)");
        s->callback([&] { action = [&] { return construct_pi(o); }; });
    }
    {
        auto* s = construct->add_subcommand("binary-long", "binary [2^{r+1}-1, r, r+1] code");
        add_io(s);
        s->add_option("--r", o.r)->required();
        s->callback([&] { action = [&] { return construct_binary_long(o); }; });
    }
    {
        auto* s = construct->add_subcommand("repetition-dual", "dual of the block repetition code");
        add_field(s);
        add_io(s);
        s->add_option("--r", o.r)->required();
        s->add_option("--n", o.n)->required();
        s->callback([&] { action = [&] { return construct_repetition_dual(o); }; });
    }
    {
        auto* s = construct->add_subcommand("subcode", "QMDS subcode of dimension k");
        add_io(s);
        s->add_option("--k", o.k)->required();
        s->callback([&] { action = [&] { return construct_subcode(o); }; });
    }
    {
        auto* s = construct->add_subcommand("expand", "expand a code over F_{q^r} into F_q^{rn}");
        add_field(s);
        add_io(s);
        s->add_flag("--dual-basis", o.use_dual_basis, "expand in the dual of the power basis");
        s->callback([&] { action = [&] { return construct_expand(o); }; });
    }

    {
        auto* s = app.add_subcommand("classify", "MDS / QMDS / dually QMDS classification");
        add_io(s);
        s->add_option("--method", o.method, "minors | distance");
        s->add_option("--budget", o.budget, "enumeration cap");
        s->callback([&] { action = [&] { return classify_cmd(o); }; });
    }
    {
        auto* s = app.add_subcommand("wdist", "folded weight distributions");
        add_io(s);
        s->add_option("--method", o.method, "exhaustive | formula | macwilliams-check | reconstruct");
        s->add_option("--params", o.params, "n,r,k,q")->delimiter(',');
        s->add_option("--head", o.head, "A_d,...,A_{n-d_perp}")->delimiter(',');
        s->add_option("--d", o.d);
        s->add_option("--d-perp", o.d_perp);
        s->add_option("--budget", o.budget, "enumeration cap");
        s->callback([&] { action = [&] { return wdist_cmd(o); }; });
    }
    for (bool shorten : {false, true}) {
        auto* s = app.add_subcommand(shorten ? "shorten" : "restrict",
                                     shorten ? "shortened code C_I" : "restricted code C^I");
        add_io(s);
        s->add_option("--blocks", o.blocks, "1-based block indices")->delimiter(',')->required();
        s->callback([&o, &action, shorten] { action = [&o, shorten] { return restrict_cmd(o, shorten); }; });
    }
    {
        auto* s = app.add_subcommand("bounds", "length and distance bounds");
        s->add_option("--q", o.q)->required();
        s->add_option("--r", o.r)->required();
        s->add_option("--k", o.k)->required();
        s->add_option("--n", o.n);
        s->add_option("--d", o.d);
        s->add_flag("--json", o.json_out);
        s->callback([&] { action = [&] { return bounds_cmd(o); }; });
    }
    {
        auto* s = app.add_subcommand("density", "fraction of random codes that are dually QMDS (JSON)");
        s->add_option("--q", o.q)->required();
        s->add_option("--r", o.r)->required();
        s->add_option("--n", o.n)->required();
        s->add_option("--k", o.k)->required();
        s->add_option("--trials", o.trials);
        s->add_option("--seed", o.seed)->required();
        s->add_flag("--json", o.json_out);
        s->callback([&] { action = [&] { return density_cmd(o); }; });
    }
    auto* arc = app.add_subcommand("pseudoarc", "code <-> pseudo arc correspondence");
    arc->require_subcommand(1);
    {
        auto* s = arc->add_subcommand("from-code");
        add_io(s);
        s->callback([&] { action = [&] { return arc_from_code_cmd(o); }; });
        s = arc->add_subcommand("to-code");
        add_io(s);
        s->callback([&] { action = [&] { return arc_to_code_cmd(o); }; });
        s = arc->add_subcommand("params");
        add_io(s);
        s->callback([&] { action = [&] { return arc_params_cmd(o); }; });
    }
    auto* iso = app.add_subcommand("isometry", "folded-metric isometries");
    iso->require_subcommand(1);
    {
        auto* s = iso->add_subcommand("apply");
        add_io(s);
        s->add_option("--iso", o.iso, "isometry file (sigma 1-based)");
        s->add_option("--seed", o.seed, "random isometry instead of --iso");
        s->callback([&] { action = [&] { return isometry_apply_cmd(o); }; });
        s = iso->add_subcommand("dual-witness");
        add_io(s);
        s->add_option("--iso", o.iso, "isometry file (sigma 1-based)");
        s->add_option("--seed", o.seed, "random isometry instead of --iso");
        s->callback([&] { action = [&] { return isometry_dual_witness_cmd(o); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
