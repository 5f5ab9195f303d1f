#include "preinforce/bounds.hpp"
#include "preinforce/closed_forms.hpp"
#include "preinforce/graph.hpp"
#include "preinforce/json_io.hpp"
#include "preinforce/pdomination.hpp"
#include "preinforce/reduction.hpp"
#include "preinforce/reinforcement.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace preinforce;

namespace {

constexpr int kGammaGuard = 24;
constexpr int kReinforceGuard = 20;
constexpr int kMuGuard = 18;

struct GuardRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_guard(const Graph& g, int guard, bool force, const char* op) {
    if (force) return;
    if (g.vertex_count() > guard)
        throw GuardRefusal(std::string(op) + ": graph has " +
                           std::to_string(g.vertex_count()) +
                           " vertices, over the default guard of " +
                           std::to_string(guard) + " (use --force to override)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// family mini-language: path:N | cycle:N | kpartite:a,b,c | file:PATH
struct FamilySpec {
    std::string kind;
    int n = 0;
    PartiteSpec parts;
    std::string path;
    std::string display;
};

FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("family must look like path:N, cycle:N, "
                                 "kpartite:a,b,c or file:PATH, got '" + text + "'");
    FamilySpec fam;
    fam.kind = text.substr(0, colon);
    std::string arg = text.substr(colon + 1);
    fam.display = text;
    if (fam.kind == "path" || fam.kind == "cycle") {
        fam.n = std::stoi(arg);
    } else if (fam.kind == "kpartite") {
        std::istringstream in(arg);
        std::string tok;
        while (std::getline(in, tok, ','))
            fam.parts.parts.push_back(std::stoi(tok));
        if (fam.parts.parts.size() < 2)
            throw std::runtime_error("kpartite needs at least two part sizes");
    } else if (fam.kind == "file") {
        fam.path = arg;
    } else {
        throw std::runtime_error("unknown family kind '" + fam.kind + "'");
    }
    return fam;
}

Graph build_family(const FamilySpec& fam) {
    if (fam.kind == "path") return path_graph(fam.n);
    if (fam.kind == "cycle") return cycle_graph(fam.n);
    if (fam.kind == "kpartite") return complete_multipartite(fam.parts);
    return parse_edge_list(read_file(fam.path));
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

int run_gamma(const FamilySpec& fam, int p, const std::string& format, bool force) {
    Graph g = build_family(fam);
    check_guard(g, kGammaGuard, force, "gamma");
    DominationResult res = gamma_p(g, p);
    json j{{"gamma_p", res.gamma_p}, {"witness", res.witness.to_vector()}};
    std::ostringstream text;
    text << "gamma_p = " << res.gamma_p << '\n'
         << "witness = {" << join_ints(res.witness.to_vector(), ", ") << "}\n";
    emit(j, format, text.str());
    return 0;
}

int run_eta(const FamilySpec& fam, int p, const std::string& format, bool force) {
    Graph g = build_family(fam);
    check_guard(g, kReinforceGuard, force, "eta");
    EtaResult res = eta_p(g, p);
    json j{{"eta_p", res.eta_p}, {"witness_X", res.witness_X.to_vector()}};
    std::ostringstream text;
    text << "eta_p = " << res.eta_p << '\n'
         << "witness_X = {" << join_ints(res.witness_X.to_vector(), ", ") << "}\n";
    emit(j, format, text.str());
    return 0;
}

int run_reinforce(const FamilySpec& fam, int p, const std::string& format,
                  bool force, const std::string& cert_out) {
    Graph g = build_family(fam);
    check_guard(g, kReinforceGuard, force, "reinforce");
    ReinforcementCertificate cert = r_p(g, p);
    if (!cert_out.empty()) write_file(cert_out, certificate_to_json(cert) + "\n");
    std::ostringstream text;
    text << "r_p = " << cert.r_p << '\n';
    if (cert.r_p == 0)
        text << "gamma_p = " << cert.gamma_before
             << " <= p, nothing to reinforce (convention)\n";
    else {
        text << "B =";
        for (const Edge& e : cert.edges_B) text << " {" << e.u << "," << e.v << "}";
        text << '\n';
    }
    text << "X = {" << join_ints(cert.witness_X.to_vector(), ", ") << "}\n"
         << "gamma_before = " << cert.gamma_before
         << ", gamma_after = " << cert.gamma_after << '\n';
    emit(json(cert), format, text.str());
    return 0;
}

int run_mu(const FamilySpec& fam, int p, const std::string& format, bool force) {
    Graph g = build_family(fam);
    check_guard(g, kMuGuard, force, "mu");
    int value = mu_p(g, p);
    emit(json{{"mu_p", value}}, format, "mu_p = " + std::to_string(value) + "\n");
    return 0;
}

int run_bounds(const FamilySpec& fam, int p, const std::string& format, bool force) {
    Graph g = build_family(fam);
    check_guard(g, kMuGuard, force, "bounds");
    BoundReport rep = bound_report(g, p);
    std::ostringstream text;
    auto line = [&](const char* name, std::optional<int> value) {
        text << name << ": ";
        if (!value) {
            text << "n/a\n";
            return;
        }
        text << *value << " ("
             << (rep.r_p_exact <= *value ? "holds" : "VIOLATED")
             << (rep.r_p_exact == *value ? ", tight" : "") << ")\n";
    };
    text << "r_p_exact: " << rep.r_p_exact << '\n';
    line("mu_p", rep.mu_p);
    line("Delta_plus_p", rep.Delta_plus_p);
    line("delta_plus_p", rep.delta_plus_p);
    if (rep.corollary22_value)
        text << "corollary22_value: " << *rep.corollary22_value << " ("
             << (rep.r_p_exact == *rep.corollary22_value ? "equality holds"
                                                         : "VIOLATED")
             << ")\n";
    else
        text << "corollary22_value: n/a\n";
    text << "all_hold: " << (rep.all_hold ? "true" : "false") << '\n';
    emit(json(rep), format, text.str());
    return rep.all_hold ? 0 : 1;
}

int run_formula(const FamilySpec& fam, int p, const std::string& format) {
    json j{{"family", fam.display}, {"p", p}};
    std::ostringstream text;
    if (fam.kind == "path" || fam.kind == "cycle") {
        bool is_path = fam.kind == "path";
        if (p == 1) {
            int r = r_1_path_cycle(fam.n);
            j["gamma_p"] = nullptr;  // no p=1 closed form; use the exact solver
            j["r_p"] = r;
            text << "r_1 = " << r << " (no closed form for gamma_1)\n";
        } else {
            int gamma = is_path ? gamma_p_path(fam.n, p) : gamma_p_cycle(fam.n, p);
            bool applicable =
                is_path ? r_p_path_applicable(fam.n, p) : r_p_cycle_applicable(fam.n, p);
            int r = applicable ? (is_path ? r_p_path(fam.n, p) : r_p_cycle(fam.n, p)) : 0;
            j["gamma_p"] = gamma;
            j["r_p"] = r;
            text << "gamma_p = " << gamma << '\n' << "r_p = " << r;
            if (!applicable) text << " (gamma_p <= p, convention)";
            text << '\n';
        }
    } else if (fam.kind == "kpartite") {
        int gamma = gamma_p_multipartite(fam.parts, p);
        j["gamma_p"] = gamma;
        text << "gamma_p = " << gamma << '\n';
        if (gamma <= p) {
            j["r_p"] = 0;
            text << "r_p = 0 (gamma_p <= p, convention)\n";
        } else {
            MultipartiteFormulaResult res = r_p_multipartite_detail(fam.parts, p);
            j["r_p"] = res.r_p;
            j["minimizer_multiset"] = res.minimizer_multiset;
            text << "r_p = " << res.r_p << '\n'
                 << "minimizer multiset = {" << join_ints(res.minimizer_multiset, ", ")
                 << "}\n";
            json table = json::array();
            text << "script_X (multiset, f, f*):\n";
            for (const IndexSubset& x : script_X(fam.parts, p)) {
                std::vector<int> multiset;
                for (int i : x.indices)
                    multiset.push_back(fam.parts.parts[static_cast<std::size_t>(i)]);
                std::sort(multiset.begin(), multiset.end());
                int f = part_sum(fam.parts, x);
                std::optional<int> fs = f_star(fam.parts, p, x);
                table.push_back({{"multiset", multiset},
                                 {"f", f},
                                 {"f_star", fs ? json(*fs) : json(nullptr)}});
                text << "  {" << join_ints(multiset, ",") << "}  f=" << f << "  f*=";
                if (fs)
                    text << *fs;
                else
                    text << "undefined (shown as 0 in displays)";
                text << '\n';
            }
            j["script_X"] = table;
        }
    } else {
        throw std::runtime_error("formula needs a path, cycle or kpartite family");
    }
    emit(j, format, text.str());
    return 0;
}

int run_reduce(const std::string& cnf_path, int p, const std::string& format,
               const std::string& out_graph, const std::string& out_labels) {
    Cnf3 cnf = parse_dimacs_cnf(read_file(cnf_path));
    if (!cnf.literal_coverage_ok())
        std::cerr << "warning: not every literal appears in a clause; the gadget "
                     "is still well-defined but the equivalence theorem assumes "
                     "coverage\n";
    GadgetGraph gadget = build_gadget(cnf, p);
    std::string edge_text = serialize_edge_list(gadget.graph);
    std::string label_text = serialize_labels(gadget);
    if (format == "json") {
        json edges = json::array();
        for (const Edge& e : gadget.graph.edges()) edges.push_back({e.u, e.v});
        json j{{"n", gadget.graph.vertex_count()},
               {"m", gadget.graph.edge_count()},
               {"edges", edges},
               {"labels", gadget.labels},
               {"literal_coverage_ok", cnf.literal_coverage_ok()}};
        std::cout << j.dump(2) << '\n';
    }
    if (!out_graph.empty()) write_file(out_graph, edge_text);
    if (!out_labels.empty()) write_file(out_labels, label_text);
    if (format != "json" && out_graph.empty()) {
        std::cout << edge_text;
        if (out_labels.empty()) {
            std::cout << "# labels (vertex role)\n";
            std::istringstream in(label_text);
            std::string line;
            while (std::getline(in, line)) std::cout << "# " << line << '\n';
        }
    }
    return 0;
}

int run_verify(const std::string& cnf_path, int p, const std::string& format,
               bool force) {
    Cnf3 cnf = parse_dimacs_cnf(read_file(cnf_path));
    int guard = force ? 64 : 24;
    GadgetGraph gadget = build_gadget(cnf, p);
    if (gadget.graph.vertex_count() > guard)
        throw GuardRefusal("verify: gadget has " +
                           std::to_string(gadget.graph.vertex_count()) +
                           " vertices, over the guard of " + std::to_string(guard));
    SatResult sat = sat_bruteforce(cnf);
    ReinforcementCertificate cert = r_p(gadget.graph, p);
    bool holds = sat.satisfiable == (cert.r_p == 1);
    json j{{"satisfiable", sat.satisfiable},
           {"r_p", cert.r_p},
           {"equivalence_holds", holds},
           {"gamma_p", cert.gamma_before}};
    std::ostringstream text;
    text << "equivalence " << (holds ? "holds" : "FAILS") << ": SAT="
         << (sat.satisfiable ? "true" : "false") << ", r_p=" << cert.r_p << '\n';
    emit(j, format, text.str());
    return holds ? 0 : 1;
}

int run_verify_cert(const FamilySpec& fam, int p, const std::string& cert_path,
                    const std::string& format, bool force) {
    Graph g = build_family(fam);
    check_guard(g, kGammaGuard, force, "verify-cert");
    ReinforcementCertificate cert = certificate_from_json(read_file(cert_path));
    CertFailure why = CertFailure::none;
    bool ok = validate_certificate(g, p, cert, &why);
    json j{{"valid", ok}, {"reason", to_string(why)}};
    std::ostringstream text;
    text << (ok ? "valid" : std::string("invalid: ") + to_string(why)) << '\n';
    emit(j, format, text.str());
    return ok ? 0 : 1;
}

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.hi < r.lo) throw std::runtime_error("empty range '" + text + "'");
    return r;
}

int run_sweep(const std::string& family_text, const std::string& p_text,
              const std::string& format, bool force) {
    auto colon = family_text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("sweep family must be path:RANGE, cycle:RANGE "
                                 "or kpartite:a,b,c");
    std::string kind = family_text.substr(0, colon);
    Range p_range = parse_range(p_text);
    bool mismatch = false;
    json rows = json::array();
    std::ostringstream text;
    text << "instance,p,gamma_p,r_p_formula,r_p_exact,mu_p,bounds_hold\n";

    auto add_row = [&](const std::string& instance, int p, const Graph& g,
                       std::optional<int> formula_r) {
        check_guard(g, kMuGuard, force, "sweep");
        DominationResult dom = gamma_p(g, p);
        ReinforcementCertificate cert = r_p(g, p);
        BoundReport rep = bound_report(g, p);
        int formula = formula_r.value_or(cert.r_p);
        if (formula != cert.r_p || !rep.all_hold) mismatch = true;
        rows.push_back({{"instance", instance},
                        {"p", p},
                        {"gamma_p", dom.gamma_p},
                        {"r_p_formula", formula},
                        {"r_p_exact", cert.r_p},
                        {"mu_p", rep.mu_p},
                        {"bounds_hold", rep.all_hold}});
        text << instance << ',' << p << ',' << dom.gamma_p << ',' << formula << ','
             << cert.r_p << ',' << rep.mu_p << ','
             << (rep.all_hold ? "true" : "false") << '\n';
    };

    if (kind == "path" || kind == "cycle") {
        Range n_range = parse_range(family_text.substr(colon + 1));
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            Graph g = kind == "path" ? path_graph(n) : cycle_graph(n);
            for (int p = p_range.lo; p <= p_range.hi; ++p) {
                std::optional<int> formula;
                if (p == 1) {
                    if (n >= 4) formula = r_1_path_cycle(n);
                } else if (kind == "path") {
                    formula = r_p_path_applicable(n, p) ? r_p_path(n, p) : 0;
                } else {
                    formula = r_p_cycle_applicable(n, p) ? r_p_cycle(n, p) : 0;
                }
                add_row(kind + ":" + std::to_string(n), p, g, formula);
            }
        }
    } else if (kind == "kpartite") {
        FamilySpec fam = parse_family(family_text);
        Graph g = complete_multipartite(fam.parts);
        for (int p = p_range.lo; p <= p_range.hi; ++p) {
            int gamma = gamma_p_multipartite(fam.parts, p);
            int formula = gamma > p ? r_p_multipartite(fam.parts, p) : 0;
            add_row(family_text, p, g, formula);
        }
    } else {
        throw std::runtime_error("sweep supports path, cycle and kpartite families");
    }

    if (format == "json")
        std::cout << rows.dump(2) << '\n';
    else
        std::cout << text.str();
    return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-domination and p-reinforcement toolkit"};
    app.require_subcommand(1);

    std::string family, format = "text", cnf_path, cert_path, cert_out;
    std::string out_graph, out_labels, p_text = "1";
    int p = 1;
    bool force = false;

    auto add_common = [&](CLI::App* cmd, bool needs_family) {
        if (needs_family)
            cmd->add_option("--family", family,
                            "path:N | cycle:N | kpartite:a,b,c | file:PATH")
                ->required();
        cmd->add_option("-p,--p", p, "domination parameter p >= 1")
            ->check(CLI::PositiveNumber)
            ->required();
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--force", force, "override the size guard");
    };

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "exact p-domination number");
    add_common(gamma_cmd, true);
    CLI::App* eta_cmd = app.add_subcommand("eta", "minimum total deficiency eta_p");
    add_common(eta_cmd, true);
    CLI::App* reinforce_cmd =
        app.add_subcommand("reinforce", "exact r_p with a certificate");
    add_common(reinforce_cmd, true);
    reinforce_cmd->add_option("--cert-out", cert_out,
                              "also write the certificate JSON to this file");
    CLI::App* mu_cmd = app.add_subcommand("mu", "mu_p upper bound value");
    add_common(mu_cmd, true);
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "exact r_p against every applicable bound");
    add_common(bounds_cmd, true);
    CLI::App* formula_cmd =
        app.add_subcommand("formula", "closed-form gamma_p/r_p for families");
    add_common(formula_cmd, true);

    CLI::App* reduce_cmd =
        app.add_subcommand("reduce", "build the 3SAT reinforcement gadget");
    reduce_cmd->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
    reduce_cmd->add_option("-p,--p", p)->check(CLI::PositiveNumber)->required();
    reduce_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    reduce_cmd->add_option("-o,--output", out_graph, "edge-list output file");
    reduce_cmd->add_option("--labels", out_labels, "label sidecar output file");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check satisfiable <=> r_p(gadget) = 1 on one instance");
    verify_cmd->add_option("--cnf", cnf_path)->required();
    verify_cmd->add_option("-p,--p", p)->check(CLI::PositiveNumber)->required();
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--force", force);

    CLI::App* verify_cert_cmd =
        app.add_subcommand("verify-cert", "validate a reinforcement certificate");
    add_common(verify_cert_cmd, true);
    verify_cert_cmd->add_option("--cert", cert_path, "certificate JSON file")
        ->required();

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "table of formula vs exact over a family range");
    sweep_cmd->add_option("--family", family, "path:A..B | cycle:A..B | kpartite:a,b,c")
        ->required();
    sweep_cmd->add_option("-p,--p", p_text, "p or range a..b")->required();
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sweep_cmd->add_flag("--force", force);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gamma_cmd->parsed()) return run_gamma(parse_family(family), p, format, force);
        if (eta_cmd->parsed()) return run_eta(parse_family(family), p, format, force);
        if (reinforce_cmd->parsed())
            return run_reinforce(parse_family(family), p, format, force, cert_out);
        if (mu_cmd->parsed()) return run_mu(parse_family(family), p, format, force);
        if (bounds_cmd->parsed())
            return run_bounds(parse_family(family), p, format, force);
        if (formula_cmd->parsed()) return run_formula(parse_family(family), p, format);
        if (reduce_cmd->parsed())
            return run_reduce(cnf_path, p, format, out_graph, out_labels);
        if (verify_cmd->parsed()) return run_verify(cnf_path, p, format, force);
        if (verify_cert_cmd->parsed())
            return run_verify_cert(parse_family(family), p, cert_path, format, force);
        if (sweep_cmd->parsed()) return run_sweep(family, p_text, format, force);
    } catch (const GuardRefusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
