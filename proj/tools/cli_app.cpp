#include "cli_app.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "speciso/construct.hpp"
#include "speciso/errors.hpp"
#include "speciso/fixtures.hpp"
#include "speciso/format.hpp"
#include "speciso/oracle.hpp"
#include "speciso/random_graph.hpp"
#include "speciso/refine.hpp"
#include "speciso/report.hpp"

namespace speciso::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

ordered_json input_json(const std::string& path, const Graph& g) {
    ordered_json j;
    j["path"] = path;
    j["digest"] = report::graph_digest(g);
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    return j;
}

const char* witness_kind_name(Witness::Kind kind) {
    switch (kind) {
    case Witness::Kind::size_mismatch: return "size_mismatch";
    case Witness::Kind::edge_count_mismatch: return "edge_count_mismatch";
    case Witness::Kind::signature_mismatch: return "signature_mismatch";
    }
    return "unknown";
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["kind"] = witness_kind_name(w.kind);
    if (w.kind == Witness::Kind::signature_mismatch) {
        j["rank"] = w.rank;
        j["k"] = w.k;
        j["lhs"] = report::decimal(w.lhs);
        j["rhs"] = report::decimal(w.rhs);
    }
    return j;
}

ordered_json work_json(const PowerStats& work) {
    ordered_json j;
    j["matrix_multiplications"] = work.matrix_multiplications;
    j["max_entry_bits"] = report::bit_length(work.max_entry);
    j["max_entry"] = report::decimal(work.max_entry);
    return j;
}

ordered_json trace_json(const std::vector<IndividualizationChoice>& trace) {
    ordered_json rows = ordered_json::array();
    int round = 1;
    for (const IndividualizationChoice& c : trace) {
        ordered_json j;
        j["round"] = round++;
        j["class_index"] = c.class_index;
        j["left_vertex"] = c.left_vertex;
        j["right_vertex"] = c.right_vertex;
        j["override_value"] = c.override_value;
        j["stale_diagonals_would_collide"] = c.stale_diagonals_would_collide;
        rows.push_back(std::move(j));
    }
    return rows;
}

std::string witness_text(const Witness& w) {
    switch (w.kind) {
    case Witness::Kind::size_mismatch:
        return "vertex counts differ";
    case Witness::Kind::edge_count_mismatch:
        return "edge counts differ";
    case Witness::Kind::signature_mismatch:
        return "sorted signature lists differ at rank " + std::to_string(w.rank) +
               ", k=" + std::to_string(w.k) + " (" + report::decimal(w.lhs) + " vs " +
               report::decimal(w.rhs) + ")";
    }
    return "unknown";
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        std::size_t used = 0;
        const int n = std::stoi(token, &used);
        if (used != token.size() || n < 0)
            throw Error("bad --sizes entry: " + token);
        sizes.push_back(n);
    }
    if (sizes.empty())
        throw Error("--sizes parsed to an empty list");
    return sizes;
}

void emit(std::ostream& out, bool as_json, const ordered_json& j,
          const std::string& human) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << human;
}

// ---------------------------------------------------------------- check

int cmd_check(const std::string& path_g, const std::string& path_h, bool as_json,
              std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = load_graph_file(path_g);
    const Graph h = load_graph_file(path_h);
    const RefineOutcome r = refine_fixpoint(g, h);
    const int exit_code = r.stable() ? kExitIsomorphic : kExitNotIsomorphic;

    ordered_json j;
    j["tool"] = "spectral-iso";
    j["command"] = "check";
    j["inputs"] = ordered_json::array({input_json(path_g, g), input_json(path_h, h)});
    j["outcome"] = r.stable() ? "stable" : "not_isomorphic";
    j["witness"] = r.stable() ? ordered_json(nullptr) : witness_json(r.witness);
    j["iterations"] = r.iterations;
    j["class_counts"] = r.class_count_history;
    j["work"] = work_json(r.work);
    j["timing_ms"] = elapsed_ms(start);
    j["exit_code"] = exit_code;

    std::ostringstream human;
    if (r.stable()) {
        human << "stable after " << r.iterations << " iteration(s), "
              << r.partition.count() << " class(es): the signature invariant does not "
              << "distinguish the graphs\n";
    } else {
        human << "not isomorphic: " << witness_text(r.witness) << "\n";
    }
    emit(out, as_json, j, human.str());
    return exit_code;
}

// ---------------------------------------------------------------- map

int cmd_map(const std::string& path_g, const std::string& path_h, bool retry_j,
            bool as_json, std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = load_graph_file(path_g);
    const Graph h = load_graph_file(path_h);
    ConstructOptions options;
    options.retry_right_candidates = retry_j;
    const MapOutcome m = construct_isomorphism(g, h, options);

    int exit_code = kExitNotIsomorphic;
    std::string outcome = "not_isomorphic";
    if (m.kind == MapOutcome::Kind::verified_isomorphism) {
        exit_code = kExitIsomorphic;
        outcome = "verified_isomorphism";
    } else if (m.kind == MapOutcome::Kind::candidate_failed) {
        exit_code = kExitCandidateFailed;
        outcome = "candidate_failed";
    }

    ordered_json j;
    j["tool"] = "spectral-iso";
    j["command"] = "map";
    j["inputs"] = ordered_json::array({input_json(path_g, g), input_json(path_h, h)});
    j["outcome"] = outcome;
    j["witness"] = m.kind == MapOutcome::Kind::not_isomorphic ? witness_json(m.witness)
                                                              : ordered_json(nullptr);
    j["permutation"] =
        m.permutation ? ordered_json(m.permutation->one_indexed_image()) : nullptr;
    j["failing_pair"] = m.failing_pair
                            ? ordered_json::array({m.failing_pair->first, m.failing_pair->second})
                            : ordered_json(nullptr);
    j["refine_class_counts"] = m.refine_history;
    j["individualization_rounds"] = m.individualization_rounds;
    j["trace"] = trace_json(m.trace);
    j["work"] = work_json(m.work);
    j["timing_ms"] = elapsed_ms(start);
    j["exit_code"] = exit_code;

    std::ostringstream human;
    if (m.kind == MapOutcome::Kind::verified_isomorphism) {
        human << "verified isomorphism after " << m.individualization_rounds
              << " individualization round(s):";
        for (int v : m.permutation->one_indexed_image())
            human << ' ' << v;
        human << "\n";
    } else if (m.kind == MapOutcome::Kind::candidate_failed) {
        human << "candidate failed verification: induced permutation breaks edge pair {"
              << m.failing_pair->first << "," << m.failing_pair->second << "}\n";
    } else {
        human << "not isomorphic: " << witness_text(m.witness) << "\n";
    }
    emit(out, as_json, j, human.str());
    return exit_code;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& path_g, const std::string& path_h,
               const std::string& path_p, bool as_json, std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = load_graph_file(path_g);
    const Graph h = load_graph_file(path_h);
    const Permutation p = load_permutation_file(path_p);
    if (p.size() != g.order() || g.order() != h.order())
        throw Error("verify: permutation length " + std::to_string(p.size()) +
                    " does not match graph orders " + std::to_string(g.order()) + "/" +
                    std::to_string(h.order()));

    const bool ok = is_isomorphism(g, h, p);
    const auto violation = first_mapping_violation(g, h, p);
    const int exit_code = ok ? kExitIsomorphic : kExitNotIsomorphic;

    ordered_json j;
    j["tool"] = "spectral-iso";
    j["command"] = "verify";
    j["inputs"] = ordered_json::array({input_json(path_g, g), input_json(path_h, h)});
    j["permutation"] = p.one_indexed_image();
    j["outcome"] = ok ? "verified" : "not_verified";
    j["failing_pair"] = ok ? ordered_json(nullptr)
                           : ordered_json::array({violation.first + 1, violation.second + 1});
    j["timing_ms"] = elapsed_ms(start);
    j["exit_code"] = exit_code;

    std::ostringstream human;
    if (ok)
        human << "permutation is an isomorphism\n";
    else
        human << "permutation is NOT an isomorphism: edge pair {" << violation.first + 1
              << "," << violation.second + 1 << "} disagrees\n";
    emit(out, as_json, j, human.str());
    return exit_code;
}

// ---------------------------------------------------------------- hunt

struct HuntRow {
    std::string name;
    Graph left;
    Graph right;
};

std::vector<HuntRow> hunt_instances(const std::string& family,
                                    const std::vector<int>& sizes, std::uint64_t seed) {
    std::vector<HuntRow> rows;
    if (family == "fixtures") {
        for (auto& p : fixtures::probe_pairs())
            rows.push_back({p.name, std::move(p.left), std::move(p.right)});
        return rows;
    }
    std::uint64_t index = 0;
    for (int n : sizes) {
        const std::uint64_t s0 = mix_seed(seed, index++);
        const std::uint64_t s1 = mix_seed(seed, index++);
        Graph g1, g2a, g2b;
        if (family == "gnp") {
            g1 = generate_random_graph(n, 0.5, s0);
            g2a = generate_random_graph(n, 0.5, s1);
            g2b = generate_random_graph(n, 0.5, mix_seed(s1, 1));
        } else { // regular
            const int degree = (n % 2 == 0) ? 3 : 4;
            if (degree >= n)
                continue; // too small for the fixed degree scheme
            g1 = generate_random_regular(n, degree, s0);
            g2a = generate_random_regular(n, degree, s1);
            g2b = generate_random_regular(n, degree, mix_seed(s1, 1));
        }
        const Permutation sigma = random_permutation(n, mix_seed(s0, 2));
        rows.push_back({family + "-n" + std::to_string(n) + "-relabeled", g1,
                        apply_permutation(g1, sigma)});
        rows.push_back({family + "-n" + std::to_string(n) + "-independent", std::move(g2a),
                        std::move(g2b)});
    }
    return rows;
}

int cmd_hunt(const std::string& family, const std::vector<int>& sizes,
             std::uint64_t seed, int oracle_limit, bool retry_j, bool as_json,
             std::ostream& out) {
    const auto start = Clock::now();
    ConstructOptions options;
    options.retry_right_candidates = retry_j;

    ordered_json rows = ordered_json::array();
    std::ostringstream human;
    int refused = 0, agree = 0, false_positive = 0, construction_failure = 0;

    for (const HuntRow& row : hunt_instances(family, sizes, seed)) {
        const RefineOutcome check = refine_fixpoint(row.left, row.right);
        const MapOutcome map = construct_isomorphism(row.left, row.right, options);

        std::string oracle_verdict;
        bool oracle_iso = false;
        try {
            oracle_iso = exact_isomorphism(row.left, row.right, oracle_limit).has_value();
            oracle_verdict = oracle_iso ? "isomorphic" : "non_isomorphic";
        } catch (const OracleLimitError&) {
            oracle_verdict = "refused";
        }

        std::string classification;
        if (oracle_verdict == "refused") {
            classification = "oracle_refused";
            ++refused;
        } else if (!oracle_iso && check.stable()) {
            // The refinement invariant failed to tell non-isomorphic graphs
            // apart: a completeness counterexample.
            classification = "false_positive";
            ++false_positive;
        } else if (oracle_iso && !map.verified()) {
            classification = "construction_failure";
            ++construction_failure;
        } else {
            classification = "agree";
            ++agree;
        }

        ordered_json r;
        r["name"] = row.name;
        r["order"] = row.left.order();
        r["digests"] = ordered_json::array(
            {report::graph_digest(row.left), report::graph_digest(row.right)});
        r["check"] = check.stable() ? "stable" : "not_isomorphic";
        if (!check.stable() && check.witness.kind == Witness::Kind::signature_mismatch)
            r["check_witness_k"] = check.witness.k;
        r["map"] = map.kind == MapOutcome::Kind::verified_isomorphism ? "verified_isomorphism"
                   : map.kind == MapOutcome::Kind::candidate_failed  ? "candidate_failed"
                                                                     : "not_isomorphic";
        r["oracle"] = oracle_verdict;
        r["classification"] = classification;
        rows.push_back(std::move(r));

        human << row.name << ": check="
              << (check.stable() ? "stable" : "not-isomorphic") << " map="
              << (map.kind == MapOutcome::Kind::verified_isomorphism ? "verified"
                  : map.kind == MapOutcome::Kind::candidate_failed  ? "candidate-failed"
                                                                    : "not-isomorphic")
              << " oracle=" << oracle_verdict << " -> " << classification << "\n";
    }

    const int exit_code = refused > 0 ? kExitOracleRefused : kExitIsomorphic;

    ordered_json j;
    j["tool"] = "spectral-iso";
    j["command"] = "hunt";
    j["family"] = family;
    j["rows"] = std::move(rows);
    ordered_json summary;
    summary["agree"] = agree;
    summary["false_positive"] = false_positive;
    summary["construction_failure"] = construction_failure;
    summary["oracle_refused"] = refused;
    j["summary"] = std::move(summary);
    j["timing_ms"] = elapsed_ms(start);
    j["exit_code"] = exit_code;

    human << "summary: agree=" << agree << " false-positive=" << false_positive
          << " construction-failure=" << construction_failure
          << " oracle-refused=" << refused << "\n";
    emit(out, as_json, j, human.str());
    return exit_code;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, bool as_json,
              std::ostream& out) {
    ordered_json rows = ordered_json::array();
    std::ostringstream human;
    human << "   n  kind        iters  mat-mults  max-entry-bits  bound-bits  time-ms\n";

    std::uint64_t index = 0;
    for (int n : sizes) {
        for (const bool isomorphic_pair : {true, false}) {
            const std::uint64_t s = mix_seed(seed, index++);
            const Graph g = generate_random_graph(n, 0.5, s);
            const Graph h = isomorphic_pair
                                ? apply_permutation(g, random_permutation(n, mix_seed(s, 3)))
                                : generate_random_graph(n, 0.5, mix_seed(s, 4));

            const auto t0 = Clock::now();
            const RefineOutcome r = refine_fixpoint(g, h);
            const long t_ms = elapsed_ms(t0);

            mpz_class bound;
            mpz_ui_pow_ui(bound.get_mpz_t(),
                          2UL * static_cast<unsigned long>(n) * static_cast<unsigned long>(n) +
                              2UL * static_cast<unsigned long>(n),
                          static_cast<unsigned long>(n));

            ordered_json row;
            row["order"] = n;
            row["kind"] = isomorphic_pair ? "relabeled" : "independent";
            row["outcome"] = r.stable() ? "stable" : "not_isomorphic";
            row["iterations"] = r.iterations;
            row["matrix_multiplications"] = r.work.matrix_multiplications;
            row["max_entry_bits"] = report::bit_length(r.work.max_entry);
            row["entry_bound_bits"] = report::bit_length(bound);
            row["timing_ms"] = t_ms;
            rows.push_back(std::move(row));

            char line[160];
            std::snprintf(line, sizeof(line), "%4d  %-11s %5d  %9lu  %14lu  %10lu  %7ld\n",
                          n, isomorphic_pair ? "relabeled" : "independent", r.iterations,
                          r.work.matrix_multiplications,
                          report::bit_length(r.work.max_entry),
                          report::bit_length(bound), t_ms);
            human << line;
        }
    }

    ordered_json j;
    j["tool"] = "spectral-iso";
    j["command"] = "bench";
    j["rows"] = std::move(rows);
    j["exit_code"] = kExitIsomorphic;
    emit(out, as_json, j, human.str());
    return kExitIsomorphic;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectral-signature graph isomorphism engine", "spectral-iso"};
    app.require_subcommand(1);
    // Top-level flags remain valid after the subcommand name.
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON report instead of a human summary");

    std::string path_g, path_h, path_p;
    bool retry_j = false;

    CLI::App* check = app.add_subcommand("check", "signature refinement verdict");
    check->add_option("G", path_g, "first graph (.g6 or .el)")->required();
    check->add_option("H", path_h, "second graph (.g6 or .el)")->required();

    CLI::App* map = app.add_subcommand("map", "construct and verify an isomorphism");
    map->add_option("G", path_g, "first graph (.g6 or .el)")->required();
    map->add_option("H", path_h, "second graph (.g6 or .el)")->required();
    map->add_flag("--retry-j", retry_j,
                  "retry other right-side candidates when a candidate fails");

    CLI::App* verify = app.add_subcommand("verify", "check a supplied permutation");
    verify->add_option("G", path_g, "first graph (.g6 or .el)")->required();
    verify->add_option("H", path_h, "second graph (.g6 or .el)")->required();
    verify->add_option("P", path_p, "permutation file: one line of n 1-indexed images")
        ->required();

    std::string family;
    std::string sizes_text;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int oracle_limit = kDefaultOracleLimit;

    CLI::App* hunt = app.add_subcommand("hunt", "differential runs: engine vs exact oracle");
    hunt->add_option("--family", family, "instance family: gnp, regular or fixtures")
        ->required()
        ->check(CLI::IsMember({"gnp", "regular", "fixtures"}));
    hunt->add_option("--sizes", sizes_text, "comma-separated instance sizes");
    hunt->add_option("--seed", seed, "master seed for random families")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    hunt->add_option("--oracle-limit", oracle_limit, "oracle size guard")
        ->capture_default_str();
    hunt->add_flag("--retry-j", retry_j,
                   "retry other right-side candidates when a candidate fails");

    CLI::App* bench = app.add_subcommand("bench", "timing and entry-size scaling table");
    bench->add_option("--sizes", sizes_text, "comma-separated instance sizes");
    bench->add_option("--seed", seed, "master seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(path_g, path_h, as_json, out);
        if (map->parsed())
            return cmd_map(path_g, path_h, retry_j, as_json, out);
        if (verify->parsed())
            return cmd_verify(path_g, path_h, path_p, as_json, out);
        if (hunt->parsed()) {
            if (family != "fixtures" && !seed_given) {
                err << "error: --seed is required for the " << family << " family\n";
                return kExitUsage;
            }
            std::vector<int> sizes = sizes_text.empty()
                                         ? std::vector<int>{5, 6, 7, 8}
                                         : parse_sizes(sizes_text);
            return cmd_hunt(family, sizes, seed, oracle_limit, retry_j, as_json, out);
        }
        if (bench->parsed()) {
            std::vector<int> sizes = sizes_text.empty()
                                         ? std::vector<int>{8, 16, 24, 32}
                                         : parse_sizes(sizes_text);
            return cmd_bench(sizes, seed, as_json, out);
        }
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitOracleRefused;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace speciso::cli
