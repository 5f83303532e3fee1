// idb: exact independent-domination invariants, bondage certificates, graph
// family generators, and the claim audit, over graph6 or edge-list inputs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "idb/audit.hpp"
#include "idb/bondage.hpp"
#include "idb/census.hpp"
#include "idb/edgelist.hpp"
#include "idb/families.hpp"
#include "idb/graph6.hpp"
#include "idb/json_io.hpp"
#include "idb/products.hpp"
#include "idb/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw idb::Error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

idb::Graph load_graph(const std::string& path, const std::string& format) {
    const std::string text = slurp(path);
    if (format == "edgelist") return idb::parse_edge_list(text);
    // graph6: first non-empty line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line != ">>graph6<<") return idb::parse_graph6(line);
    }
    throw idb::BadHeaderError("no graph6 line found in " + path);
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw idb::Error("cannot open output file: " + path);
    out << text;
}

std::string render_graph(const idb::Graph& g, const std::string& format) {
    return format == "edgelist" ? idb::write_edge_list(g) : idb::write_graph6(g) + "\n";
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "graph format: graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent domination bondage toolkit"};
    app.require_subcommand(1);

    // ---- family ----
    auto* family_cmd = app.add_subcommand("family", "generate a family member");
    std::string fam_name;
    int fam_n = 0, fam_m = 0, fam_q = 0;
    std::string fam_format = "graph6", fam_output;
    family_cmd->add_option("--name", fam_name, "family name")->required();
    family_cmd->add_option("--n", fam_n, "main parameter")->required();
    family_cmd->add_option("--m", fam_m, "second part size (complete_bipartite)");
    family_cmd->add_option("--q", fam_q, "cycle length (gen_friendship)");
    add_format_flag(family_cmd, fam_format);
    family_cmd->add_option("--output", fam_output, "output path (default stdout)");

    // ---- solver commands ----
    struct SolveArgs {
        std::string input = "-";
        std::string format = "graph6";
        std::string output;
        std::uint64_t budget_nodes = 0;
    };
    SolveArgs gi_args, gamma_args, alpha_args;
    const auto add_solve = [&](const char* name, const char* desc, SolveArgs& a) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--input", a.input, "graph file or - for stdin");
        add_format_flag(cmd, a.format);
        cmd->add_option("--output", a.output, "output path (default stdout)");
        cmd->add_option("--budget-nodes", a.budget_nodes, "search node cap (0 = unlimited)");
        return cmd;
    };
    auto* gi_cmd = add_solve("gamma-i", "exact independent domination number", gi_args);
    auto* gamma_cmd = add_solve("gamma", "exact domination number", gamma_args);
    auto* alpha_cmd = add_solve("alpha", "exact independence number", alpha_args);

    // ---- bondage ----
    auto* bondage_cmd = app.add_subcommand("bondage", "exact id-bondage certificate");
    SolveArgs bond_args;
    int bond_threads = 1;
    bool bond_cache = false, bond_no_cache = false;
    bondage_cmd->add_option("--input", bond_args.input, "graph file or - for stdin");
    add_format_flag(bondage_cmd, bond_args.format);
    bondage_cmd->add_option("--output", bond_args.output, "output path (default stdout)");
    bondage_cmd->add_option("--budget-nodes", bond_args.budget_nodes,
                            "per-solve node cap (0 = unlimited)");
    bondage_cmd->add_option("--threads", bond_threads, "worker count for the subset sweep");
    bondage_cmd->add_flag("--cache", bond_cache, "enable the i-set survival cache");
    bondage_cmd->add_flag("--no-cache", bond_no_cache, "disable the i-set cache (default)");

    // ---- product ----
    auto* product_cmd = app.add_subcommand("product", "binary graph operation");
    std::string product_op, product_g, product_h, product_format = "graph6", product_output;
    product_cmd->add_option("--op", product_op, "join, lex, corona or cartesian")
        ->required()
        ->check(CLI::IsMember({"join", "lex", "corona", "cartesian"}));
    product_cmd->add_option("g_file", product_g, "first operand file")->required();
    product_cmd->add_option("h_file", product_h, "second operand file")->required();
    add_format_flag(product_cmd, product_format);
    product_cmd->add_option("--output", product_output, "output path (default stdout)");

    // ---- audit ----
    auto* audit_cmd = app.add_subcommand("audit", "evaluate catalog claims");
    std::string audit_claims = "all", audit_report;
    int audit_max_n = 6, audit_threads = 1;
    std::uint64_t audit_budget = 0;
    audit_cmd->add_option("--claims", audit_claims, "all or a comma-separated id list");
    audit_cmd->add_option("--max-n", audit_max_n, "vertex cap for evaluated graphs");
    audit_cmd->add_option("--report", audit_report, "write the JSON report here");
    audit_cmd->add_option("--threads", audit_threads, "worker count");
    audit_cmd->add_option("--budget-nodes", audit_budget, "per-solve node cap");

    // ---- census ----
    auto* census_cmd = app.add_subcommand("census", "invariant table over a graph stream");
    int census_n = -1;
    std::string census_input, census_output, census_invariants;
    bool census_csv = false, census_json = false, census_dedup = false;
    int census_threads = 1;
    std::uint64_t census_budget = 0;
    census_cmd->add_option("--n", census_n, "built-in labeled enumerator on n vertices (n <= 6)");
    census_cmd->add_option("--input", census_input, "graph6 file, one graph per line, or -");
    census_cmd->add_option("--output", census_output, "output path (default stdout)");
    census_cmd->add_option("--invariants", census_invariants,
                           "comma list from gamma,gamma_i,alpha,b_id (default all)");
    census_cmd->add_flag("--csv", census_csv, "emit CSV");
    census_cmd->add_flag("--json", census_json, "emit JSON (default)");
    census_cmd->add_flag("--dedup", census_dedup, "drop labeled-isomorphic duplicates");
    census_cmd->add_option("--threads", census_threads, "worker count");
    census_cmd->add_option("--budget-nodes", census_budget, "per-record node cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (family_cmd->parsed()) {
            auto fam = idb::family_from_name(fam_name);
            if (!fam) throw UsageError("unknown family name: " + fam_name);
            idb::FamilySpec spec{*fam, fam_n, fam_m, fam_q};
            emit(fam_output, render_graph(idb::make_family(spec), fam_format));
            return kExitOk;
        }

        const auto run_solver = [&](const SolveArgs& a, auto solver) {
            idb::Graph g = load_graph(a.input, a.format);
            idb::IdsResult r = solver(g, idb::Budget{a.budget_nodes});
            emit(a.output, idb::to_json(r).dump(2) + "\n");
        };
        if (gi_cmd->parsed()) {
            run_solver(gi_args, [](const idb::Graph& g, idb::Budget b) { return idb::gamma_i(g, b); });
            return kExitOk;
        }
        if (gamma_cmd->parsed()) {
            run_solver(gamma_args,
                       [](const idb::Graph& g, idb::Budget b) { return idb::domination_number(g, b); });
            return kExitOk;
        }
        if (alpha_cmd->parsed()) {
            run_solver(alpha_args,
                       [](const idb::Graph& g, idb::Budget b) { return idb::independence_number(g, b); });
            return kExitOk;
        }

        if (bondage_cmd->parsed()) {
            if (bond_cache && bond_no_cache)
                throw UsageError("--cache and --no-cache are mutually exclusive");
            idb::Graph g = load_graph(bond_args.input, bond_args.format);
            idb::BondageOptions opts;
            opts.threads = bond_threads;
            opts.use_cache = bond_cache;
            idb::BondageCertificate cert =
                idb::bondage_id(g, idb::Budget{bond_args.budget_nodes}, opts);
            emit(bond_args.output, idb::to_json(cert).dump(2) + "\n");
            return kExitOk;
        }

        if (product_cmd->parsed()) {
            idb::Graph g = load_graph(product_g, product_format);
            idb::Graph h = load_graph(product_h, product_format);
            idb::Graph out;
            if (product_op == "join") out = idb::join(g, h);
            else if (product_op == "lex") out = idb::lexicographic(g, h);
            else if (product_op == "corona") out = idb::corona(g, h);
            else out = idb::cartesian(g, h);
            emit(product_output, render_graph(out, product_format));
            return kExitOk;
        }

        if (audit_cmd->parsed()) {
            idb::AuditOptions opts;
            opts.max_n = audit_max_n;
            opts.threads = audit_threads;
            opts.budget = idb::Budget{audit_budget};
            if (audit_claims != "all") {
                std::stringstream ss(audit_claims);
                std::string id;
                while (std::getline(ss, id, ','))
                    if (!id.empty()) opts.ids.push_back(id);
            }
            idb::AuditReport report = idb::run_audit(opts);
            const std::string text = report.to_json().dump(2) + "\n";
            if (audit_report.empty()) {
                emit("", text);
            } else {
                emit(audit_report, text);
                for (const idb::ClaimReport& cr : report.claims)
                    std::cout << cr.claim.id << ": " << cr.confirmed << " confirmed, "
                              << cr.refuted << " refuted, " << cr.not_applicable
                              << " not applicable, " << cr.budget_exceeded << " budget exceeded\n";
            }
            int budget_hits = 0;
            for (const idb::ClaimReport& cr : report.claims) budget_hits += cr.budget_exceeded;
            return budget_hits > 0 ? kExitBudget : kExitOk;
        }

        if (census_cmd->parsed()) {
            if ((census_n < 0) == census_input.empty())
                throw UsageError("census needs exactly one of --n or --input");
            std::vector<idb::Graph> graphs;
            if (census_n >= 0) {
                if (census_n > 6) throw UsageError("built-in enumerator supports n <= 6");
                graphs = idb::all_labeled_graphs(census_n);
            } else {
                std::string text = slurp(census_input);
                std::istringstream in(text);
                graphs = idb::read_graph6_stream(in);
            }
            idb::CensusOptions opts;
            opts.dedup = census_dedup;
            opts.threads = census_threads;
            opts.budget = idb::Budget{census_budget};
            if (!census_invariants.empty()) {
                opts.with_gamma = opts.with_gamma_i = opts.with_alpha = opts.with_bondage = false;
                std::stringstream ss(census_invariants);
                std::string inv;
                while (std::getline(ss, inv, ',')) {
                    if (inv == "gamma") opts.with_gamma = true;
                    else if (inv == "gamma_i") opts.with_gamma_i = true;
                    else if (inv == "alpha") opts.with_alpha = true;
                    else if (inv == "b_id") opts.with_bondage = true;
                    else if (!inv.empty()) throw UsageError("unknown invariant: " + inv);
                }
            }
            auto records = idb::census(graphs, opts);
            emit(census_output,
                 census_csv ? idb::census_to_csv(records) : idb::census_to_json(records));
            bool budget_hit = false;
            for (const auto& r : records)
                if (r.status == "budget_exceeded") budget_hit = true;
            return budget_hit ? kExitBudget : kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const idb::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const idb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
