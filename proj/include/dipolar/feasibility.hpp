#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dipolar/dipolar.hpp"
#include "dipolar/gates.hpp"

namespace dipolar {

// Catalog entry for one physical qubit carrier: the |down> and |up> multiplets
// with their gyromagnetic ratios, plus an optional coherence time used to
// judge whether a gate completes inside the coherent window.
struct PhysicalSystem {
    std::string name;
    int two_j_down = 0;
    int two_j_up = 0;
    double gamma_down = 0.0; // rad/(s*T)
    double gamma_up = 0.0;   // rad/(s*T)
    std::optional<double> coherence_time_s;
    std::string note;

    int level_offset() const noexcept { return (two_j_up - two_j_down) / 2; } // n
};

struct FeasibilityReport {
    std::string system;
    double d = 0.0;    // meters
    double t_cz = 0.0; // seconds
    std::optional<double> coherence_ratio; // coherence_time / t_cz
    std::string verdict; // "favorable" | "unfavorable" | "unknown"
};

// The three built-in case studies: BH2+ molecular rotor, Rb87 hyperfine
// levels, NV center triplet/singlet pair.
std::vector<PhysicalSystem> builtin_catalog();

// Two-sector particle space and highest-weight level choice for a system.
QubitChoice qubit_choice(const PhysicalSystem& sys);

FeasibilityReport gate_report(const PhysicalSystem& sys, double d);

// Logarithmically spaced reports over [d_min, d_max], endpoints included,
// ascending in d. Throws BadRange unless 0 < d_min < d_max and points >= 2.
std::vector<FeasibilityReport> sweep_distance(const PhysicalSystem& sys, double d_min,
                                              double d_max, int points);

// Catalog JSON: array of objects with keys name, two_j_down, two_j_up,
// gamma_down, gamma_up, optional coherence_time_s, note.
std::string catalog_to_json(const std::vector<PhysicalSystem>& catalog);
std::vector<PhysicalSystem> catalog_from_json(const std::string& text);
std::vector<PhysicalSystem> load_catalog(const std::string& path);

// Exact-name match first, then case-insensitive. Throws UnknownSystem.
const PhysicalSystem& find_system(const std::vector<PhysicalSystem>& catalog,
                                  const std::string& name);

} // namespace dipolar
