#include "symgraph/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symgraph/errors.hpp"
#include "symgraph/extraction.hpp"
#include "symgraph/graph_series.hpp"
#include "symgraph/oracle.hpp"

namespace symgraph::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::vector<int> edge_weights;
    bool all_edge_weights = false;
    bool loops = false;
    std::string format = "text";

    std::vector<int> degrees;
    std::string extractor = "sequences";
    std::vector<int> degree_seq;
    int n_max = 8;
    int max_degree = 6;
    bool f_only = false;

    int verify_n_max = 4;
    std::vector<int> j_universe{1, 2, 3};
    std::vector<int> k_universe{2, 3};
    bool loops_probe = false;
    bool inject_fault = false;
    int oracle_bound = kDefaultOracleBound;
    bool allow_slow = false;
};

std::set<int> positive_set(const std::vector<int>& values, const char* what) {
    if (values.empty()) throw DomainError(std::string(what) + " must be non-empty");
    for (int v : values) {
        if (v < 1) throw DomainError(std::string(what) + " must contain positive integers");
    }
    return {values.begin(), values.end()};
}

std::set<int> range_set(int hi) {
    std::set<int> s;
    for (int v = 1; v <= std::max(hi, 1); ++v) s.insert(v);
    return s;
}

// J from --edge-weights, or {1..relevant} when --all-edge-weights: larger
// weights cannot occur below the relevant degree bound.
std::set<int> resolve_J(const RunConfig& cfg, int relevant) {
    if (cfg.all_edge_weights) return range_set(relevant);
    return positive_set(cfg.edge_weights, "--edge-weights");
}

WeightProfile make_profile(std::set<int> J, bool loops) {
    return WeightProfile{std::move(J), loops ? LoopPolicy::WeightedLoops : LoopPolicy::NoLoops};
}

json set_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

std::string set_text(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
    const auto K = positive_set(cfg.degrees, "--degrees");
    if (cfg.n_max < 0) throw DomainError("--n-max must be non-negative");
    const auto J = resolve_J(cfg, *K.rbegin());
    const auto kind = cfg.extractor == "multisets" ? Extractor::Multisets : Extractor::Sequences;
    const auto table = count_table(make_profile(J, cfg.loops), K, cfg.n_max, kind);
    if (cfg.format == "json") {
        json counts = json::array();
        for (std::size_t n = 0; n < table.counts.size(); ++n) {
            counts.push_back({{"n", n}, {"count", table.counts[n].get_str()}});
        }
        json doc{{"J", set_json(J)}, {"K", set_json(K)}, {"loops", cfg.loops}, {"counts", counts}};
        if (kind == Extractor::Multisets) doc["extractor"] = "multisets";
        out << doc.dump() << "\n";
    } else {
        for (std::size_t n = 0; n < table.counts.size(); ++n) {
            out << (n ? "," : "") << table.counts[n].get_str();
        }
        out << "\n";
    }
    return kOk;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
    if (cfg.max_degree < 0) throw DomainError("--max-degree must be non-negative");
    const auto J = resolve_J(cfg, cfg.max_degree);
    const SymSeries p = cfg.f_only ? build_F(J, cfg.max_degree)
                                   : build_G(make_profile(J, cfg.loops), cfg.max_degree);
    const SymSeries m = p_to_m(p);
    if (cfg.format == "json") {
        out << to_json(m).dump() << "\n";
    } else {
        // The constant term 1 (empty structure) is left implicit.
        out << to_string(m, false) << "\n";
    }
    return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    if (cfg.degree_seq.empty()) throw DomainError("--degree-seq must be non-empty");
    positive_set(cfg.degree_seq, "--degree-seq");
    const int max_d = *std::max_element(cfg.degree_seq.begin(), cfg.degree_seq.end());
    const auto J = resolve_J(cfg, max_d);
    const Integer c = count_degree_sequence(make_profile(J, cfg.loops), cfg.degree_seq);
    if (cfg.format == "json") {
        out << json{{"J", set_json(J)},
                    {"degree_seq", cfg.degree_seq},
                    {"loops", cfg.loops},
                    {"count", c.get_str()}}
                   .dump()
            << "\n";
    } else {
        out << c.get_str() << "\n";
    }
    return kOk;
}

std::vector<std::set<int>> nonempty_subsets(const std::set<int>& universe) {
    const std::vector<int> items(universe.begin(), universe.end());
    std::vector<std::set<int>> out;
    for (unsigned mask = 1; mask < (1u << items.size()); ++mask) {
        std::set<int> s;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (mask & (1u << i)) s.insert(items[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

struct VerifyCase {
    std::set<int> J, K;
    int n;
    Integer algebra, oracle;
};

Integer oracle_count(const RunConfig& cfg, const std::set<int>& J, const std::set<int>& K, int n,
                     std::set<int> diagonal) {
    OracleConfig oc;
    oc.off_diagonal = J;
    oc.off_diagonal.insert(0);
    oc.diagonal = std::move(diagonal);
    oc.row_sums = K;
    oc.n = n;
    oc.bound = cfg.oracle_bound;
    oc.allow_slow = cfg.allow_slow;
    return count_matrices(oc);
}

int cmd_loops_probe(const RunConfig& cfg, const std::vector<std::set<int>>& Js,
                    const std::vector<std::set<int>>& Ks, std::ostream& out) {
    // Candidate diagonal sets for the weighted-loop model.
    const std::vector<std::string> labels{"{0}", "{0,1}", "{0} u J"};
    std::vector<int> agree(labels.size(), 0);
    int total = 0;
    for (const auto& J : Js) {
        for (const auto& K : Ks) {
            const auto table = count_table(make_profile(J, true), K, cfg.verify_n_max);
            std::set<int> with_j = J;
            with_j.insert(0);
            const std::vector<std::set<int>> diagonals{{0}, {0, 1}, with_j};
            for (int n = 0; n <= cfg.verify_n_max; ++n) {
                ++total;
                for (std::size_t c = 0; c < diagonals.size(); ++c) {
                    if (oracle_count(cfg, J, K, n, diagonals[c]) == table.counts[static_cast<std::size_t>(n)]) {
                        ++agree[c];
                    }
                }
            }
        }
    }
    std::vector<std::string> matching;
    for (std::size_t c = 0; c < labels.size(); ++c) {
        if (agree[c] == total) matching.push_back(labels[c]);
    }
    if (cfg.format == "json") {
        json conv = json::array();
        for (std::size_t c = 0; c < labels.size(); ++c) {
            conv.push_back({{"diagonal", labels[c]}, {"agree", agree[c]}, {"cases", total}});
        }
        out << json{{"conventions", conv}, {"matching", matching}}.dump() << "\n";
    } else {
        for (std::size_t c = 0; c < labels.size(); ++c) {
            out << "diagonal " << labels[c] << ": " << agree[c] << "/" << total << " cases agree\n";
        }
        out << "matching diagonal convention: ";
        if (matching.empty()) out << "none";
        for (std::size_t i = 0; i < matching.size(); ++i) out << (i ? ", " : "") << matching[i];
        out << "\n";
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.verify_n_max < 0) throw DomainError("--n-max must be non-negative");
    if (cfg.oracle_bound > kDefaultOracleBound && !cfg.allow_slow) {
        throw DomainError("--oracle-bound above " + std::to_string(kDefaultOracleBound) +
                          " requires --i-know-this-is-slow");
    }
    if (cfg.verify_n_max > cfg.oracle_bound) {
        throw DomainError("--n-max exceeds the oracle bound " + std::to_string(cfg.oracle_bound));
    }
    const auto Js = nonempty_subsets(positive_set(cfg.j_universe, "--j-universe"));
    const auto Ks = nonempty_subsets(positive_set(cfg.k_universe, "--k-universe"));
    if (cfg.loops_probe) return cmd_loops_probe(cfg, Js, Ks, out);

    std::vector<VerifyCase> cases;
    for (const auto& J : Js) {
        for (const auto& K : Ks) {
            const auto table = count_table(make_profile(J, false), K, cfg.verify_n_max);
            for (int n = 0; n <= cfg.verify_n_max; ++n) {
                cases.push_back({J, K, n, table.counts[static_cast<std::size_t>(n)],
                                 oracle_count(cfg, J, K, n, {0})});
            }
        }
    }
    if (cfg.inject_fault && !cases.empty()) cases.front().algebra += 1;

    int mismatches = 0;
    for (const auto& c : cases) mismatches += c.algebra != c.oracle;

    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& c : cases) {
            rows.push_back({{"J", set_json(c.J)},
                            {"K", set_json(c.K)},
                            {"n", c.n},
                            {"algebra", c.algebra.get_str()},
                            {"oracle", c.oracle.get_str()},
                            {"agree", c.algebra == c.oracle}});
        }
        out << json{{"cases", rows}, {"mismatches", mismatches}}.dump() << "\n";
    } else {
        out << "J\tK\tn\talgebra\toracle\n";
        for (const auto& c : cases) {
            out << set_text(c.J) << "\t" << set_text(c.K) << "\t" << c.n << "\t" << c.algebra.get_str()
                << "\t" << c.oracle.get_str() << (c.algebra == c.oracle ? "" : "\tMISMATCH") << "\n";
        }
        if (mismatches == 0) {
            out << "all " << cases.size() << " cases agree\n";
        } else {
            out << mismatches << " of " << cases.size() << " cases disagree\n";
        }
    }
    return mismatches == 0 ? kOk : kMismatch;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool loops_flag = true) {
    auto* ew = sub->add_option("--edge-weights,-J", cfg.edge_weights, "Edge weight set J, e.g. 2,3")
                   ->delimiter(',');
    auto* all = sub->add_flag("--all-edge-weights", cfg.all_edge_weights,
                              "Use every positive edge weight that can matter at this size");
    ew->excludes(all);
    if (loops_flag) sub->add_flag("--loops", cfg.loops, "Allow loops weighted from J");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact enumeration of weighted graphs with constrained degrees", "symgraph"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "Counts of graphs by vertex number with degrees in K");
    add_common(series, cfg);
    series->add_option("--degrees,-K", cfg.degrees, "Degree set K")->delimiter(',')->required();
    series->add_option("--n-max", cfg.n_max, "Largest vertex count")->capture_default_str();
    series->add_option("--extractor", cfg.extractor,
                       "sequences: (sum h_k)^n, all labelled graphs; multisets: sum over degree multisets")
        ->check(CLI::IsMember({"sequences", "multisets"}))
        ->capture_default_str();

    auto* expand = app.add_subcommand("expand", "Monomial-basis expansion of G_J (or F_J)");
    add_common(expand, cfg);
    expand->add_option("--max-degree", cfg.max_degree, "Truncation degree")->capture_default_str();
    expand->add_flag("--f-only", cfg.f_only, "Expand F_J instead of G_J");

    auto* count = app.add_subcommand("count", "Number of graphs with an explicit degree sequence");
    add_common(count, cfg);
    count->add_option("--degree-seq,-d", cfg.degree_seq, "Degree sequence")->delimiter(',')->required();

    auto* verify = app.add_subcommand("verify", "Compare algebraic counts against brute-force enumeration");
    verify->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--n-max", cfg.verify_n_max, "Largest vertex count")->capture_default_str();
    verify->add_option("--j-universe", cfg.j_universe, "Edge weights whose subsets form the J grid")
        ->delimiter(',');
    verify->add_option("--k-universe", cfg.k_universe, "Degrees whose subsets form the K grid")->delimiter(',');
    verify->add_flag("--loops-probe", cfg.loops_probe,
                     "Report which diagonal convention matches the weighted-loop series");
    verify->add_option("--oracle-bound", cfg.oracle_bound, "Largest matrix dimension to enumerate")
        ->capture_default_str();
    verify->add_flag("--i-know-this-is-slow", cfg.allow_slow, "Permit an oracle bound above the default");
    verify->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one algebraic count (harness self-test)")
        ->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
            err << sub->help();
        }
        return kUsage;
    }

    try {
        if (series->parsed()) return cmd_series(cfg, out);
        if (expand->parsed()) return cmd_expand(cfg, out);
        if (count->parsed()) return cmd_count(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return kConsistency;
    }
    return kUsage;
}

}  // namespace symgraph::cli
