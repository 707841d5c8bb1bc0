#include "dipolar/feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dipolar/constants.hpp"
#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

void validate_system(const PhysicalSystem& sys) {
    if (sys.name.empty()) throw ParseError("catalog entry: empty name");
    if (sys.two_j_down < 0 || sys.two_j_up < 0) {
        throw ParseError("catalog entry '" + sys.name + "': 2j values must be non-negative");
    }
    if ((sys.two_j_up - sys.two_j_down) % 2 != 0) {
        throw ParseError("catalog entry '" + sys.name +
                         "': levels must differ by an integer number of angular momentum quanta");
    }
    if (!std::isfinite(sys.gamma_down) || !std::isfinite(sys.gamma_up)) {
        throw ParseError("catalog entry '" + sys.name + "': gamma must be finite");
    }
    if (sys.coherence_time_s && !(*sys.coherence_time_s > 0.0)) {
        throw ParseError("catalog entry '" + sys.name + "': coherence time must be positive");
    }
}

json system_to_json(const PhysicalSystem& sys) {
    json j{{"name", sys.name},
           {"two_j_down", sys.two_j_down},
           {"two_j_up", sys.two_j_up},
           {"gamma_down", sys.gamma_down},
           {"gamma_up", sys.gamma_up},
           {"note", sys.note}};
    if (sys.coherence_time_s) j["coherence_time_s"] = *sys.coherence_time_s;
    return j;
}

PhysicalSystem system_from_json(const json& j) {
    PhysicalSystem sys;
    try {
        sys.name = j.at("name").get<std::string>();
        sys.two_j_down = j.at("two_j_down").get<int>();
        sys.two_j_up = j.at("two_j_up").get<int>();
        sys.gamma_down = j.at("gamma_down").get<double>();
        sys.gamma_up = j.at("gamma_up").get<double>();
        if (j.contains("coherence_time_s")) {
            sys.coherence_time_s = j.at("coherence_time_s").get<double>();
        }
        if (j.contains("note")) sys.note = j.at("note").get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("catalog entry: ") + e.what());
    }
    validate_system(sys);
    return sys;
}

} // namespace

std::vector<PhysicalSystem> builtin_catalog() {
    const double gamma_nv = 2.3 * constants::bohr_magneton / constants::hbar;
    return {
        {"BH2+", 0, 4, -3.8e7, -3.8e7, std::nullopt,
         "nonpolar molecular ion; rotational levels |0,0> and |2,2>"},
        {"Rb87", 2, 4, -4.4e10, 4.4e10, 21.0,
         "ground hyperfine levels |1,1> and |2,2>; the 21 s coherence was measured for the "
         "|1,0>/|2,0> clock pair, not these stretched levels"},
        {"NV", 2, 0, gamma_nv, 0.0, 3.0e-7,
         "ground triplet |1,1> and metastable singlet |0,0>; the singlet lifetime of about "
         "0.3 us bounds the usable window"},
    };
}

QubitChoice qubit_choice(const PhysicalSystem& sys) {
    validate_system(sys);
    ParticleSpace space({Sector{AngularMomentumLabel(sys.two_j_down), sys.gamma_down},
                         Sector{AngularMomentumLabel(sys.two_j_up), sys.gamma_up}});
    return QubitChoice(std::move(space), LevelRef{0, sys.two_j_down},
                       LevelRef{1, sys.two_j_up});
}

FeasibilityReport gate_report(const PhysicalSystem& sys, double d) {
    validate_system(sys);
    if (!(d > 0.0) || !std::isfinite(d)) throw BadRange("gate_report: d must be positive");

    // The coupling bracket decides solvability before any space is built, so
    // a degenerate level choice (n = 0 with equal gammas) reports ZeroCoupling
    // instead of failing space construction.
    const double bracket =
        sys.gamma_up * (0.5 * sys.two_j_up) - sys.gamma_down * (0.5 * sys.two_j_down);
    if (bracket == 0.0) {
        throw ZeroCoupling("gate_report: '" + sys.name + "' has gup*(J+n) = gdown*J");
    }

    const QubitChoice q = qubit_choice(sys);
    const GateResult gate = cz_gate_time(q, q, CouplingGeometry{d});

    FeasibilityReport report;
    report.system = sys.name;
    report.d = d;
    report.t_cz = gate.t_cz;
    if (sys.coherence_time_s) {
        report.coherence_ratio = *sys.coherence_time_s / gate.t_cz;
        report.verdict = *report.coherence_ratio > 1.0 ? "favorable" : "unfavorable";
    } else {
        report.verdict = "unknown";
    }
    return report;
}

std::vector<FeasibilityReport> sweep_distance(const PhysicalSystem& sys, double d_min,
                                              double d_max, int points) {
    if (!(d_min > 0.0) || !(d_min < d_max) || !std::isfinite(d_max)) {
        throw BadRange("sweep_distance: need 0 < d_min < d_max");
    }
    if (points < 2) throw BadRange("sweep_distance: need at least two points");

    const double log_min = std::log(d_min);
    const double log_max = std::log(d_max);
    std::vector<FeasibilityReport> reports;
    reports.reserve(points);
    for (int i = 0; i < points; ++i) {
        double d = d_min;
        if (i == points - 1) {
            d = d_max;
        } else if (i > 0) {
            d = std::exp(log_min + (log_max - log_min) * i / (points - 1));
        }
        reports.push_back(gate_report(sys, d));
    }
    return reports;
}

std::string catalog_to_json(const std::vector<PhysicalSystem>& catalog) {
    json arr = json::array();
    for (const auto& sys : catalog) arr.push_back(system_to_json(sys));
    return arr.dump(2);
}

std::vector<PhysicalSystem> catalog_from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    if (!parsed.is_array()) throw ParseError("catalog: top level must be a JSON array");
    std::vector<PhysicalSystem> catalog;
    for (const auto& item : parsed) catalog.push_back(system_from_json(item));
    return catalog;
}

std::vector<PhysicalSystem> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("catalog: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return catalog_from_json(buffer.str());
}

const PhysicalSystem& find_system(const std::vector<PhysicalSystem>& catalog,
                                  const std::string& name) {
    for (const auto& sys : catalog) {
        if (sys.name == name) return sys;
    }
    const std::string folded = lower(name);
    for (const auto& sys : catalog) {
        if (lower(sys.name) == folded) return sys;
    }
    throw UnknownSystem("unknown system '" + name + "'");
}

} // namespace dipolar
