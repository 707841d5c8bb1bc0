// Command-line front end: gate-time queries, closed-form evolution with
// brute-force leakage diagnostics, distance sweeps, cluster-state checks,
// catalog listing. Data goes to stdout, diagnostics to stderr.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dipolar/cluster.hpp"
#include "dipolar/constants.hpp"
#include "dipolar/dipolar.hpp"
#include "dipolar/errors.hpp"
#include "dipolar/feasibility.hpp"
#include "dipolar/gates.hpp"

namespace {

using namespace dipolar;

std::string sci(double value, int decimals = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", decimals, value);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::vector<PhysicalSystem> resolve_catalog(const std::string& catalog_path) {
    if (!catalog_path.empty()) return load_catalog(catalog_path);
    if (const char* env = std::getenv("DIPOLAR_CATALOG"); env && *env) return load_catalog(env);
    return builtin_catalog();
}

struct InlineParams {
    double gamma_down = 0.0;
    double gamma_up = 0.0;
    double j = 0.0;
    int n = 0;
};

PhysicalSystem system_from_inline(const InlineParams& p) {
    const double two_j_exact = 2.0 * p.j;
    const long long two_j = std::llround(two_j_exact);
    if (std::abs(two_j_exact - static_cast<double>(two_j)) > 1e-9 || two_j < 0) {
        throw std::runtime_error("--J must be a non-negative integer or half-integer");
    }
    const long long two_j_up = two_j + 2LL * p.n;
    if (two_j_up < 0) throw std::runtime_error("--n must keep J+n >= 0");

    PhysicalSystem sys;
    sys.name = "custom";
    sys.two_j_down = static_cast<int>(two_j);
    sys.two_j_up = static_cast<int>(two_j_up);
    sys.gamma_down = p.gamma_down;
    sys.gamma_up = p.gamma_up;
    return sys;
}

void print_report_human(const FeasibilityReport& r) {
    std::cout << "system            " << r.system << "\n";
    std::cout << "d_m               " << sci(r.d) << "\n";
    std::cout << "t_cz_s            " << sci(r.t_cz) << "\n";
    std::cout << "coherence_ratio   "
              << (r.coherence_ratio ? sci(*r.coherence_ratio) : std::string("-")) << "\n";
    std::cout << "verdict           " << r.verdict << "\n";
}

void print_report_csv_row(const FeasibilityReport& r, bool with_system) {
    if (with_system) std::cout << csv_escape(r.system) << ",";
    std::cout << sci(r.d) << "," << sci(r.t_cz) << ","
              << (r.coherence_ratio ? sci(*r.coherence_ratio) : std::string(""));
    if (with_system) std::cout << "," << r.verdict;
    std::cout << "\n";
}

nlohmann::json report_to_json(const FeasibilityReport& r) {
    nlohmann::json j{{"system", r.system},
                     {"d_m", r.d},
                     {"t_cz_s", r.t_cz},
                     {"verdict", r.verdict}};
    if (r.coherence_ratio) j["coherence_ratio"] = *r.coherence_ratio;
    else j["coherence_ratio"] = nullptr;
    return j;
}

int cmd_systems(const std::string& catalog_path, const std::string& format) {
    const auto catalog = resolve_catalog(catalog_path);
    if (format == "json") {
        std::cout << catalog_to_json(catalog) << "\n";
    } else if (format == "csv") {
        std::cout << "name,two_j_down,two_j_up,gamma_down,gamma_up,coherence_time_s,note\n";
        for (const auto& sys : catalog) {
            std::cout << csv_escape(sys.name) << "," << sys.two_j_down << "," << sys.two_j_up
                      << "," << sci(sys.gamma_down) << "," << sci(sys.gamma_up) << ","
                      << (sys.coherence_time_s ? sci(*sys.coherence_time_s) : std::string(""))
                      << "," << csv_escape(sys.note) << "\n";
        }
    } else {
        for (const auto& sys : catalog) {
            std::cout << sys.name << "\n";
            std::cout << "  levels       2j_down=" << sys.two_j_down
                      << " 2j_up=" << sys.two_j_up << " (n=" << sys.level_offset() << ")\n";
            std::cout << "  gamma_down   " << sci(sys.gamma_down, 6) << " rad/(s*T)\n";
            std::cout << "  gamma_up     " << sci(sys.gamma_up, 6) << " rad/(s*T)\n";
            std::cout << "  coherence_s  "
                      << (sys.coherence_time_s ? sci(*sys.coherence_time_s, 6) : std::string("-"))
                      << "\n";
            if (!sys.note.empty()) std::cout << "  note         " << sys.note << "\n";
        }
    }
    return 0;
}

int cmd_gatetime(const PhysicalSystem& sys, double d, const std::string& format) {
    const FeasibilityReport report = gate_report(sys, d);
    if (format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "system,d_m,t_cz_s,coherence_ratio,verdict\n";
        print_report_csv_row(report, true);
    } else {
        print_report_human(report);
    }
    return 0;
}

int cmd_spin_half_demo(double gamma, double d, const std::string& format) {
    using constants::hbar;
    using constants::mu0;
    using constants::pi;

    ParticleSpace space({Sector{AngularMomentumLabel(1), gamma}});
    QubitChoice q(space, LevelRef{0, -1}, LevelRef{0, 1});

    const ComplexMatrix h = dipole_hamiltonian(space, space, CouplingGeometry{d});
    const ComplexMatrix restricted = qubit_projection(h, q, q);
    const double flip_flop = std::abs(restricted(1, 2));
    const double predicted = mu0 * gamma * gamma * hbar * hbar / (8.0 * pi * d * d * d);
    const double leak = leakage_norm(h, q, q);

    if (format == "csv") {
        std::cout << "quantity,value\n";
        std::cout << "gamma_rad_per_sT," << sci(gamma) << "\n";
        std::cout << "d_m," << sci(d) << "\n";
        std::cout << "flip_flop_J," << sci(flip_flop) << "\n";
        std::cout << "flip_flop_predicted_J," << sci(predicted) << "\n";
        std::cout << "leakage_norm_J," << sci(leak) << "\n";
    } else {
        std::cout << "spin-1/2 counterexample: levels |1/2,-1/2> and |1/2,+1/2>\n";
        std::cout << "gamma                  " << sci(gamma, 6) << " rad/(s*T)\n";
        std::cout << "d                      " << sci(d, 6) << " m\n";
        std::cout << "flip-flop |<ud|H|du>|  " << sci(flip_flop) << " J\n";
        std::cout << "predicted mu0 g^2 hbar^2 / (8 pi d^3): " << sci(predicted) << " J\n";
        std::cout << "leakage norm           " << sci(leak) << " J\n";
        std::cout << "the nonzero flip-flop element couples |du> and |ud>, so this choice "
                     "of levels gives no Ising form\n";
    }
    return 0;
}

int cmd_evolve(const PhysicalSystem& sys, double d, std::optional<double> t_end, bool until_cz,
               int steps, const std::string& format) {
    using constants::hbar;

    const QubitChoice q = qubit_choice(sys);
    const CouplingGeometry g{d};

    double horizon = 0.0;
    if (until_cz) {
        horizon = cz_gate_time(q, q, g).t_cz;
    } else if (t_end) {
        horizon = *t_end;
        if (!(horizon >= 0.0)) throw std::runtime_error("--t must be non-negative");
    } else {
        throw std::runtime_error("evolve: need --t or --until-cz");
    }

    const ComplexMatrix h = dipole_hamiltonian(q.space(), q.space(), g);

    const bool csv = format == "csv";
    if (csv) {
        std::cout << "t_s,phi1,phi2,phi3,phi4,phi,cz_fidelity,leakage\n";
    } else {
        std::cout << "t_s              phi1             phi2             phi3             "
                     "phi4             phi              cz_fidelity      leakage\n";
    }

    for (int i = 0; i <= steps; ++i) {
        const double t = (i == steps) ? horizon : horizon * i / steps;
        const DiagonalPropagator u = propagate(q, q, g, t);
        const double phi = controlled_phase(u);
        const double fid = cz_fidelity(u);
        // brute-force check: full-space propagator, amplitude outside the
        // qubit subspace
        const ComplexMatrix full = expm_hermitian(h, -t / hbar);
        const double leak = leakage_norm(full, q, q);

        const char* sep = csv ? "," : " ";
        const int decimals = csv ? 12 : 9;
        std::cout << sci(t, decimals) << sep << sci(u.phases[0], decimals) << sep
                  << sci(u.phases[1], decimals) << sep << sci(u.phases[2], decimals) << sep
                  << sci(u.phases[3], decimals) << sep << sci(phi, decimals) << sep
                  << sci(fid, decimals) << sep << sci(leak, decimals) << "\n";
    }
    return 0;
}

int cmd_sweep(const PhysicalSystem& sys, double d_min, double d_max, int points,
              const std::string& format) {
    const auto reports = sweep_distance(sys, d_min, d_max, points);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "human") {
        std::cout << "d_m              t_cz_s           coherence_ratio\n";
        for (const auto& r : reports) {
            std::cout << sci(r.d, 9) << " " << sci(r.t_cz, 9) << " "
                      << (r.coherence_ratio ? sci(*r.coherence_ratio, 9) : std::string("-"))
                      << "\n";
        }
    } else {
        std::cout << "d_m,t_cz_s,coherence_ratio\n";
        for (const auto& r : reports) print_report_csv_row(r, false);
    }
    return 0;
}

int cmd_cluster(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw ParseError("cluster: cannot open '" + path + "'");
    const QubitGraph graph = parse_edge_list(in);
    const StateVector state = graph_state(graph);

    bool all_ok = true;
    for (int v = 0; v < graph.n_qubits(); ++v) {
        const double expectation = stabilizer_expectation(state, graph, v);
        std::cout << "vertex " << v << " expectation " << sci(expectation) << "\n";
        if (std::abs(expectation - 1.0) > tol) all_ok = false;
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"magnetic dipole-dipole Ising gates between highest-weight "
                 "angular-momentum qubits"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"human", "csv", "json"};
    std::string catalog_path;
    std::string system_name;
    InlineParams inline_params;
    double d = 0.0;

    auto add_catalog = [&](CLI::App* cmd) {
        cmd->add_option("--catalog", catalog_path,
                        "catalog JSON file (default: $DIPOLAR_CATALOG or builtin)");
    };
    auto add_format = [&](CLI::App* cmd, std::string& target) {
        cmd->add_option("--format", target, "output format")->check(CLI::IsMember(formats));
    };
    auto add_system = [&](CLI::App* cmd, bool d_required = true) {
        cmd->add_option("--system", system_name, "catalog system name");
        cmd->add_option("--gamma-down", inline_params.gamma_down,
                        "gyromagnetic ratio of |down>, rad/(s*T)");
        cmd->add_option("--gamma-up", inline_params.gamma_up,
                        "gyromagnetic ratio of |up>, rad/(s*T)");
        cmd->add_option("--J", inline_params.j, "angular momentum of |down> (integer or half-integer)");
        cmd->add_option("--n", inline_params.n, "level offset, |up> has J+n");
        auto* dopt = cmd->add_option("--d", d, "dipole distance, meters")
                         ->check(CLI::PositiveNumber);
        if (d_required) dopt->required();
    };

    auto resolve_target = [&](CLI::App* cmd) -> PhysicalSystem {
        const bool has_inline = cmd->count("--gamma-down") || cmd->count("--gamma-up") ||
                                cmd->count("--J") || cmd->count("--n");
        if (!system_name.empty() && has_inline) {
            throw std::runtime_error("give either --system or inline --gamma-down/--gamma-up/--J/--n");
        }
        if (!system_name.empty()) {
            return find_system(resolve_catalog(catalog_path), system_name);
        }
        if (cmd->count("--gamma-down") && cmd->count("--gamma-up") && cmd->count("--J") &&
            cmd->count("--n")) {
            return system_from_inline(inline_params);
        }
        throw std::runtime_error("need --system NAME or all of --gamma-down/--gamma-up/--J/--n");
    };

    auto* systems = app.add_subcommand("systems", "list the physical-system catalog");
    std::string systems_format = "human";
    add_catalog(systems);
    add_format(systems, systems_format);

    auto* gatetime = app.add_subcommand("gatetime", "controlled-Z gate time at a distance");
    std::string gatetime_format = "human";
    add_catalog(gatetime);
    add_format(gatetime, gatetime_format);
    add_system(gatetime);

    auto* evolve = app.add_subcommand(
        "evolve", "phase evolution with brute-force leakage diagnostics");
    std::string evolve_format = "human";
    add_catalog(evolve);
    add_format(evolve, evolve_format);
    add_system(evolve, /*d_required=*/false);
    double t_flag = -1.0;
    bool until_cz = false;
    int steps = 10;
    bool spin_half_demo = false;
    double demo_gamma = 4.4e10;
    evolve->add_option("--t", t_flag, "evolution time, seconds");
    evolve->add_flag("--until-cz", until_cz, "evolve up to the controlled-Z time");
    evolve->add_option("--steps", steps, "number of output intervals")
        ->check(CLI::PositiveNumber);
    evolve->add_flag("--spin-half-demo", spin_half_demo,
                     "show the pure spin-1/2 counterexample instead of evolving");
    evolve->add_option("--gamma", demo_gamma,
                       "gyromagnetic ratio for --spin-half-demo, rad/(s*T)");

    auto* sweep = app.add_subcommand("sweep", "gate time over a distance range (CSV)");
    std::string sweep_format = "csv";
    add_catalog(sweep);
    add_format(sweep, sweep_format);
    sweep->add_option("--system", system_name, "catalog system name");
    sweep->add_option("--gamma-down", inline_params.gamma_down, "inline gamma of |down>");
    sweep->add_option("--gamma-up", inline_params.gamma_up, "inline gamma of |up>");
    sweep->add_option("--J", inline_params.j, "inline angular momentum of |down>");
    sweep->add_option("--n", inline_params.n, "inline level offset");
    double d_min = 0.0, d_max = 0.0;
    int points = 10;
    sweep->add_option("--d-min", d_min, "smallest distance, meters")->required();
    sweep->add_option("--d-max", d_max, "largest distance, meters")->required();
    sweep->add_option("--points", points, "number of sweep points");

    auto* cluster = app.add_subcommand("cluster", "build a graph state and check stabilizers");
    std::string graph_path;
    double cluster_tol = 1e-10;
    cluster->add_option("graph", graph_path, "edge-list file: first line n, then `a b` pairs")
        ->required();
    cluster->add_option("--tol", cluster_tol, "stabilizer tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(systems)) return cmd_systems(catalog_path, format);
        if (app.got_subcommand(gatetime)) return cmd_gatetime(resolve_target(gatetime), d, format);
        if (app.got_subcommand(evolve)) {
            if (spin_half_demo) {
                return cmd_spin_half_demo(demo_gamma, evolve->count("--d") ? d : 1e-7, format);
            }
            std::optional<double> t_end;
            if (evolve->count("--t")) t_end = t_flag;
            if (t_end && until_cz) throw std::runtime_error("give either --t or --until-cz");
            if (!evolve->count("--d")) throw std::runtime_error("evolve: --d is required");
            return cmd_evolve(resolve_target(evolve), d, t_end, until_cz, steps, format);
        }
        if (app.got_subcommand(sweep)) {
            return cmd_sweep(resolve_target(sweep), d_min, d_max, points, format);
        }
        if (app.got_subcommand(cluster)) return cmd_cluster(graph_path, cluster_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
