#include <gie/action_file.hpp>
#include <gie/cli.hpp>
#include <gie/closed_form.hpp>
#include <gie/error.hpp>
#include <gie/integral_equation.hpp>
#include <gie/series.hpp>
#include <gie/suites.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace gie {

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("GIE_SEED");
    if (!env || !*env) return 1;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw Error(Errc::ParseError, "GIE_SEED must be a non-negative integer");
    return v;
}

Json tower_to_json(const PartitionTower& tower, int n) {
    Json j = Json::object();
    for (int k = 0; k <= n; ++k) j["P" + std::to_string(2 * (n - k)) + "*"] = matrix_to_json(tower.levels[k]);
    return j;
}

// Nonzero entries of each block, keyed like the action file.
Json sparse_blocks(const std::vector<RatMatrix>& blocks, int n) {
    Json j = Json::object();
    for (int k = 1; k <= static_cast<int>(blocks.size()); ++k) {
        Json b = block_to_json(blocks[k - 1], n, k);
        if (!b.empty()) j["A" + std::to_string(2 * k)] = b;
    }
    return j;
}

std::vector<RatMatrix> block_difference(const ActionSpec& a, const ActionSpec& b) {
    std::vector<RatMatrix> d;
    for (int k = 1; k <= a.n; ++k) d.push_back(a.block(k) - b.block(k));
    return d;
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
    std::string text = doc.dump(2) + "\n";
    if (path.empty())
        out << text;
    else
        write_text_file(path, text);
}

Json residual_section(const ActionSpec& spec, const EffectiveAction& eff, const Mu& mu) {
    RescaleResidual r = rescale_residual(spec, eff, mu);
    Json j;
    j["mu"] = to_string(mu.value());
    j["blocks"] = sparse_blocks(r.blocks, spec.n);
    j["zero"] = r.blocks_zero();
    j["delta_f"] = grand_constant_to_json(r.delta_f);
    return j;
}

struct MapOptions {
    std::string input, output, method;
    bool display_float = false;
};

int cmd_map(const MapOptions& o, std::ostream& out, std::ostream& err) {
    Json in = parse_json_text(read_text_file(o.input));
    ActionSpec spec = action_from_json(in);
    std::string method = o.method;
    if (method.empty()) method = (spec.n >= 2 && spec.n <= 4) ? "both" : "brute";
    if (method != "brute" && method != "closed" && method != "both")
        throw Error(Errc::ParseError, "method must be brute, closed or both");
    if (method != "brute" && (spec.n < 2 || spec.n > 4))
        throw Error(Errc::Unsupported, "closed forms exist for n = 2, 3, 4 only");

    std::optional<EffectiveAction> brute, closed;
    if (method != "closed") brute = effective_action_bruteforce(spec);
    if (method != "brute") closed = closed_form(spec).action;
    const EffectiveAction& eff = brute ? *brute : *closed;

    Json doc = action_to_json(eff);
    if (o.display_float) doc["A0_float"] = eff.a0.approximate();
    doc["method"] = method;
    doc["partition_tower"] = tower_to_json(partition_tower(spec), spec.n);
    Mu mu(in.contains("mu") ? scalar_from_json(in.at("mu")) : Scalar(1));
    Json residuals;
    residuals["rescale"] = residual_section(spec, eff, mu);
    bool agree = true;
    if (brute && closed) {
        auto diff = block_difference(*closed, *brute);
        agree = *closed == *brute;
        residuals["closed_minus_brute"] = sparse_blocks(diff, spec.n);
        residuals["methods_agree"] = agree;
    }
    doc["residuals"] = residuals;
    emit(doc, o.output, out);
    if (!agree) {
        err << "VerificationFailed: closed form and brute force disagree\n";
        return kExitFailure;
    }
    return kExitOk;
}

struct SolveOptions {
    int n = 0;
    std::string mu, kappa, a2, output;
    bool display_float = false;
};

RatMatrix load_a2(const std::string& path, int n) {
    if (path.empty()) return RatMatrix::identity(n);
    Json j = parse_json_text(read_text_file(path));
    RatMatrix a2 = j.is_object() ? matrix_from_json(j.at("A2")) : matrix_from_json(j);
    if (a2.rows() != n || a2.cols() != n) throw Error(Errc::BadShape, "A2 must be n x n");
    return a2;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
    if (o.n < 2 || o.n > 4) throw Error(Errc::ParseError, "--n must be 2, 3 or 4");
    SolveOutcome outcome;
    if (o.n == 2) {
        if (o.mu.empty()) throw Error(Errc::ParseError, "--mu is required for n = 2");
        outcome = solve_n2(load_a2(o.a2, 2), Mu(parse_scalar(o.mu)));
    } else if (o.n == 3) {
        if (o.mu.empty()) throw Error(Errc::ParseError, "--mu is required for n = 3");
        outcome = solve_n3(Mu(parse_scalar(o.mu)));
    } else {
        if (o.kappa.empty()) throw Error(Errc::ParseError, "--kappa is required for n = 4");
        outcome = solve_n4(load_a2(o.a2, 4), parse_scalar(o.kappa));
        if (!o.mu.empty() && parse_scalar(o.mu) != outcome.mu) {
            outcome.status = SolveStatus::NoSolution;
            outcome.reason = "the ansatz requires μ = 3κ(κ-1)+1 = " + to_string(outcome.mu);
            outcome.mu = parse_scalar(o.mu);
            outcome.spec.reset();
        }
    }

    std::string summary = std::string(solve_status_name(outcome.status)) + ": " + outcome.reason;
    Json doc;
    if (outcome.spec) {
        doc = action_to_json(*outcome.spec);
    } else {
        doc["n"] = o.n;
    }
    doc["status"] = solve_status_name(outcome.status);
    doc["summary"] = summary;
    doc["mu"] = to_string(outcome.mu);
    if (outcome.kappa) doc["kappa"] = to_string(*outcome.kappa);
    if (!outcome.branches.empty()) {
        Json branches = Json::array();
        for (const auto& b : outcome.branches)
            branches.push_back(Json{{"sign", b.sign > 0 ? "upper" : "lower"},
                                    {"residual", b.residual},
                                    {"consistent", b.consistent}});
        doc["branches"] = branches;
    }
    if (outcome.first_residual)
        doc["consistency"] = Json{{"first", to_string(*outcome.first_residual)},
                                  {"second", to_string(*outcome.second_residual)}};

    bool verified = true;
    if (outcome.spec) {
        const ActionSpec& spec = *outcome.spec;
        doc["delta_f"] = grand_constant_to_json(outcome.delta_f);
        if (o.display_float) doc["delta_f_float"] = outcome.delta_f.approximate();
        doc["partition_tower"] = tower_to_json(partition_tower(spec), spec.n);
        Mu mu(outcome.mu);
        EffectiveAction eff = effective_action_bruteforce(spec);
        Json residuals = residual_section(spec, eff, mu);
        verified = residuals["zero"].get<bool>() && eff.a0 - spec.a0 == outcome.delta_f;
        doc["residuals"] = residuals;
        doc["verified"] = verified;
    }
    emit(doc, o.output, out);
    err << summary << "\n";
    if (outcome.status == SolveStatus::NoSolution || !verified) return kExitFailure;
    return kExitOk;
}

int report(const std::vector<CheckResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.passed << "/" << r.total << ")";
        if (!r.ok() && !r.detail.empty()) out << ": " << r.detail;
        out << "\n";
        all = all && r.ok();
    }
    return all ? kExitOk : kExitFailure;
}

std::vector<Scalar> parse_coefficients(const std::string& text) {
    std::vector<Scalar> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        coeffs.push_back(parse_scalar(item));
    }
    if (coeffs.empty()) throw Error(Errc::ParseError, "empty coefficient list");
    return coeffs;
}

int cmd_series(const std::string& check, const std::string& g_text, int degree, std::ostream& out) {
    std::optional<TruncSeries> g;
    if (!g_text.empty()) {
        auto c = parse_coefficients(g_text);
        g = TruncSeries(c, static_cast<int>(c.size()) - 1);
    }
    bool ok = false;
    if (check == "babbage") {
        if (!g) g = TruncSeries({Scalar(0), Scalar(1)}, 1);
        if (degree < 0) degree = 2 * g->max_degree() - 1;
        TruncSeries b = odd_profile(*g, degree);
        out << "G(s) = " << g->to_string("s") << "\n";
        out << "b(t) = " << b.to_string() << "\n";
        ok = babbage_check(b, degree);
        out << "b(b(t)) = t through t^" << degree << ": " << (ok ? "holds" : "fails") << "\n";
    } else if (check == "root") {
        if (!g) g = non_gaussian_series();
        if (degree < 0) degree = 2 * g->max_degree() - 1;
        TruncSeries b = odd_profile(*g, degree);
        ComplexSeries dd = imaginary_double_iterate(b);
        out << "G(s) = " << g->to_string("s") << "\n";
        out << "b(t) = " << b.to_string() << "\n";
        out << "d(d(t)) = " << dd.re.to_string() << " + i[" << dd.im.to_string() << "]\n";
        ok = iterative_root_check(*g, degree);
        out << "d(d(t)) = -t through t^" << degree << ": " << (ok ? "holds" : "fails") << "\n";
    } else if (check == "legendre") {
        if (!g) g = non_gaussian_series();
        if (degree < 0) degree = g->max_degree();
        out << "G(s) = " << g->to_string("s") << "\n";
        ok = legendre_series_check(*g, degree);
        out << "G(s) = G(-s G'(s)^2) + 2 s G'(s) through s^" << degree << ": " << (ok ? "holds" : "fails")
            << "\n";
    } else {
        throw Error(Errc::ParseError, "--check must be babbage, root or legendre");
    }
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Grassmann calculus: action maps and the Grassmann integral equation", "gie"};
    app.require_subcommand(1);

    MapOptions map_opts;
    auto* map = app.add_subcommand("map", "compute the effective action of an action file");
    map->add_option("--input", map_opts.input, "action file")->required();
    map->add_option("--output", map_opts.output, "output file (default: stdout)");
    map->add_option("--method", map_opts.method, "brute | closed | both (default: both when available)");
    map->add_flag("--float", map_opts.display_float, "also print A0 numerically (display only)");

    SolveOptions solve_opts;
    auto* solve = app.add_subcommand("solve", "solve the rescaled fixed-point equation");
    solve->add_option("--n", solve_opts.n, "2, 3 or 4")->required();
    solve->add_option("--mu", solve_opts.mu, "mu = lambda^2 as p/q");
    solve->add_option("--kappa", solve_opts.kappa, "ansatz parameter for n = 4");
    solve->add_option("--a2", solve_opts.a2, "JSON file holding A2 (array or action file)");
    solve->add_option("--output", solve_opts.output, "output file (default: stdout)");
    solve->add_flag("--float", solve_opts.display_float, "also print constants numerically (display only)");

    int verify_n = 0, trials = 25;
    std::string seed_text;
    auto* verify = app.add_subcommand("verify", "closed form versus brute force on random specs");
    verify->add_option("--n", verify_n, "2, 3 or 4 (default: all)");
    verify->add_option("--trials", trials, "trials per n");
    verify->add_option("--seed", seed_text, "seed (default: GIE_SEED or 1)");

    int id_trials = 25;
    auto* identities = app.add_subcommand("identities", "matrix identity and partition tower suites");
    identities->add_option("--trials", id_trials, "random matrices per identity");
    identities->add_option("--seed", seed_text, "seed (default: GIE_SEED or 1)");

    std::string check, g_text;
    int degree = -1;
    auto* series = app.add_subcommand("series", "truncated power series checks");
    series->add_option("--check", check, "babbage | root | legendre")->required();
    series->add_option("--g", g_text, "coefficients of G(s), comma separated from s^0");
    series->add_option("--degree", degree, "check degree");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        auto seed = [&]() -> std::uint64_t {
            if (seed_text.empty()) return default_seed();
            char* end = nullptr;
            unsigned long long v = std::strtoull(seed_text.c_str(), &end, 10);
            if (*end != '\0' || seed_text[0] == '-') throw Error(Errc::ParseError, "--seed must be a non-negative integer");
            return v;
        };
        if (map->parsed()) return cmd_map(map_opts, out, err);
        if (solve->parsed()) return cmd_solve(solve_opts, out, err);
        if (verify->parsed()) {
            if (trials < 1) throw Error(Errc::ParseError, "--trials must be positive");
            std::vector<int> ns = verify_n == 0 ? std::vector<int>{2, 3, 4} : std::vector<int>{verify_n};
            for (int n : ns)
                if (n < 2 || n > 4) throw Error(Errc::ParseError, "--n must be 2, 3 or 4");
            std::uint64_t s = seed();
            out << "seed " << s << "\n";
            std::vector<CheckResult> results;
            for (int n : ns) results.push_back(oracle_equivalence(n, trials, s));
            return report(results, out);
        }
        if (identities->parsed()) {
            if (id_trials < 1) throw Error(Errc::ParseError, "--trials must be positive");
            std::uint64_t s = seed();
            out << "seed " << s << "\n";
            auto results = matrix_identity_suite(s, id_trials);
            auto towers = tower_suite(s, id_trials);
            results.insert(results.end(), towers.begin(), towers.end());
            return report(results, out);
        }
        if (series->parsed()) return cmd_series(check, g_text, degree, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace gie
