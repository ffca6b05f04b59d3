// Command-line surface over the library.  Graphs are given as names (P4,
// 2K3, co-P3+K1, K1,3, ...) or graph6; reports go to stdout or --out.
//
// Exit codes: 0 clean, 1 usage or precondition error, 2 a verification the
// subcommand promises did not hold, 3 search budget exhausted before closure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hexact/reports.hpp"

namespace {

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + ": not a number: " + v);
    }
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size()) throw std::invalid_argument("expected an integer, got \"" + s + "\"");
    return value;
}

std::string subset_vertices(std::uint32_t subset) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < hexact::kMaxVertices; ++v)
        if (subset >> v & 1u) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hexact;

    CLI::App app{"exact-graph toolkit: subset classification, extremal searches, "
                 "Ramsey numbers, certified constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 1;
    SearchBudget budget;
    std::string out_path;
    try {
        workers = static_cast<int>(env_ll("HEXACT_WORKERS", 1));
        budget.max_n = static_cast<int>(env_ll("HEXACT_MAX_N", budget.max_n));
        budget.max_classes_per_level = static_cast<std::size_t>(
            env_ll("HEXACT_MAX_CLASSES", static_cast<long long>(budget.max_classes_per_level)));
        budget.time_limit_ms = env_ll("HEXACT_TIME_LIMIT_MS", budget.time_limit_ms);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    app.add_option("--workers", workers, "threads used inside level expansion");
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    auto add_budget = [&budget](CLI::App* cmd) {
        cmd->add_option("--max-n", budget.max_n, "stop above this order");
        cmd->add_option("--max-classes", budget.max_classes_per_level,
                        "stop when a level holds more classes");
        cmd->add_option("--time-limit-ms", budget.time_limit_ms,
                        "wall clock budget, 0 means none");
    };

    std::string arg_a, arg_b, witness_out, construct_kind;
    std::vector<std::string> construct_args;
    int arg_k = 0, upto = 9, search_upto = 5;

    CLI::App* c_compare = app.add_subcommand("compare", "classify ordered pair (F, H)");
    c_compare->add_option("F", arg_a)->required();
    c_compare->add_option("H", arg_b)->required();

    CLI::App* c_check = app.add_subcommand("exact-check", "test every |H|-subset of G against H");
    c_check->add_option("G", arg_a)->required();
    c_check->add_option("H", arg_b)->required();

    CLI::App* c_leg = app.add_subcommand("leg-table", "verdict for every class of order |H|");
    c_leg->add_option("H", arg_a)->required();

    CLI::App* c_f = app.add_subcommand("search-f", "maximum order of a graph exact for H");
    c_f->add_option("H", arg_a)->required();
    c_f->add_option("--witness-out", witness_out, "write extremal graph6 lines to this file");
    add_budget(c_f);

    CLI::App* c_g = app.add_subcommand("search-g",
                                       "least n forcing a comparable subset, both routes");
    c_g->add_option("H", arg_a)->required();
    add_budget(c_g);

    CLI::App* c_ramsey = app.add_subcommand("ramsey", "two-color Ramsey number R(A, B)");
    c_ramsey->add_option("A", arg_a)->required();
    c_ramsey->add_option("B", arg_b)->required();
    add_budget(c_ramsey);

    CLI::App* c_framsey = app.add_subcommand(
        "family-ramsey", "R(U(H), U(co-H)) over the one-edge-extension families");
    c_framsey->add_option("H", arg_a)->required();
    add_budget(c_framsey);

    CLI::App* c_construct = app.add_subcommand("construct", "build and certify a construction");
    c_construct->add_option("kind", construct_kind,
                            "vertex-transitive | alpha | matching | path-extremal | "
                            "matching-extremal")
        ->required();
    c_construct->add_option("args", construct_args, "construction parameters");

    CLI::App* c_lin = app.add_subcommand("linforest",
                                         "endpoint set of a longest-path peeling of G");
    c_lin->add_option("G", arg_a)->required();
    c_lin->add_option("k", arg_k, "G must have no path on k vertices")->required();

    CLI::App* c_t1 = app.add_subcommand("table1", "f and g for every reference of order 2..4");
    add_budget(c_t1);

    CLI::App* c_t2 = app.add_subcommand("table2", "f(P_k) against the closed form");
    c_t2->add_option("--upto", upto, "last k, at most 9");
    c_t2->add_option("--search-upto", search_upto, "run the from-scratch search through this k");
    add_budget(c_t2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ostringstream report;
    int status = 0;
    try {
        if (app.got_subcommand(c_compare)) {
            report << to_string(compare(parse_graph(arg_a), parse_graph(arg_b))) << '\n';
        } else if (app.got_subcommand(c_check)) {
            const SmallGraph g = parse_graph(arg_a);
            const SmallGraph h = parse_graph(arg_b);
            const ExactnessReport rep = is_exact(g, h);
            if (rep.exact) {
                report << "exact\n";
            } else {
                report << "violation: subset " << subset_vertices(rep.violation->subset)
                       << " induces a " << to_string(rep.violation->verdict) << " of "
                       << encode_graph6(h) << '\n';
            }
        } else if (app.got_subcommand(c_leg)) {
            report << leg_table_text(leg_table(parse_graph(arg_a)));
        } else if (app.got_subcommand(c_f)) {
            const SearchOutcome o = search_f(parse_graph(arg_a), budget, workers);
            report << outcome_summary(o) << census_csv(o.levels);
            const std::string wit = witness_lines(o.witnesses);
            if (!witness_out.empty()) {
                std::ofstream f(witness_out);
                f << wit;
            } else {
                report << wit;
            }
            if (o.kind == OutcomeKind::LowerBoundOnly) status = 3;
        } else if (app.got_subcommand(c_g)) {
            const SmallGraph h = parse_graph(arg_a);
            const int via_def = g_direct(h, budget, workers);
            const RamseyResult rr = ramsey(h, complement(h), budget, workers);
            report << "g by subset search: " << via_def << '\n';
            report << "g by Ramsey route:  " << rr.value
                   << (rr.established ? "" : " (budget exhausted, lower bound)") << '\n';
            if (!rr.established)
                status = 3;
            else if (via_def != rr.value)
                status = 2;
            else
                report << "routes agree\n";
        } else if (app.got_subcommand(c_ramsey)) {
            const RamseyResult r = ramsey(parse_graph(arg_a), parse_graph(arg_b), budget, workers);
            report << ramsey_json(r).dump(2) << '\n';
            if (!r.established) status = 3;
        } else if (app.got_subcommand(c_framsey)) {
            const SmallGraph h = parse_graph(arg_a);
            const FamilySet a = u_set(h);
            const FamilySet b = u_set(complement(h));
            report << "U(H):    " << witness_lines(a.members);
            report << "U(co-H): " << witness_lines(b.members);
            const RamseyResult r = family_ramsey(a, b, budget, workers);
            report << ramsey_json(r).dump(2) << '\n';
            if (!r.established) status = 3;
        } else if (app.got_subcommand(c_construct)) {
            const std::vector<std::string>& p = construct_args;
            auto arity = [&p](std::size_t want, const char* usage) {
                if (p.size() != want)
                    throw std::invalid_argument(std::string("construct ") + usage);
            };
            Construction c;
            if (construct_kind == "vertex-transitive") {
                arity(2, "vertex-transitive <F> <t>");
                c = vertex_transitive_union(parse_graph(p[0]), parse_int(p[1]));
            } else if (construct_kind == "alpha") {
                arity(1, "alpha <H>");
                c = alpha_construction(parse_graph(p[0]));
            } else if (construct_kind == "matching") {
                arity(1, "matching <H>");
                c = matching_construction(parse_graph(p[0]));
            } else if (construct_kind == "path-extremal") {
                arity(1, "path-extremal <k>");
                c = path_extremal(parse_int(p[0]));
            } else if (construct_kind == "matching-extremal") {
                arity(1, "matching-extremal <n>");
                c = matching_extremal(parse_int(p[0]));
            } else {
                throw std::invalid_argument("unknown construction kind \"" + construct_kind +
                                            "\"");
            }
            const ExactnessReport rep = certify(c);
            report << manifest_line(c, rep);
            if (!c.vacuous && !rep.exact) status = 2;
        } else if (app.got_subcommand(c_lin)) {
            const ForestCertificate cert = extract_linear_forest(parse_graph(arg_a), arg_k);
            report << certificate_text(cert);
            if (!cert.components_ok || !cert.bound_met) status = 2;
        } else if (app.got_subcommand(c_t1)) {
            const std::vector<Table1Row> rows = table1_rows(budget, workers);
            report << table1_csv(rows);
            for (const Table1Row& r : rows)
                if (!r.ok) {
                    std::cerr << "mismatch in row " << r.name << ": f=" << r.f << " g=" << r.g
                              << " expected f=" << r.f_expected << " g=" << r.g_expected
                              << '\n';
                    status = 2;
                }
        } else if (app.got_subcommand(c_t2)) {
            const std::vector<Table2Row> rows = table2_rows(upto, search_upto, budget, workers);
            report << table2_csv(rows);
            for (const Table2Row& r : rows)
                if (!r.ok) {
                    std::cerr << "mismatch in row k=" << r.k << '\n';
                    status = 2;
                }
        }
    } catch (const budget_exhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (out_path.empty()) {
        std::cout << report.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return 1;
        }
        f << report.str();
    }
    return status;
}
