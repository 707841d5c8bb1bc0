#pragma once

#include <array>

#include "dipolar/dipolar.hpp"

namespace dipolar {

// diag(e^{i phi1}, ..., e^{i phi4}) on |dd>, |du>, |ud>, |uu>, each phase
// wrapped to [0, 2pi). Phase convention: phi_k = -lambda_k t / hbar.
struct DiagonalPropagator {
    std::array<double, 4> phases{};
};

struct GateResult {
    double t_cz = 0.0;           // seconds
    double phase_rate = 0.0;     // rad/s, d(controlled phase)/dt
    double fidelity_at_tcz = 0.0;
};

double wrap_angle(double radians); // into [0, 2pi)

// Closed-form propagator of the Ising Hamiltonian for time t seconds.
// Requires highest-weight qubit choices on identical particles.
DiagonalPropagator propagate(const QubitChoice& qa, const QubitChoice& qb,
                             CouplingGeometry g, double t);

// phi = phi4 - phi3 - phi2 + phi1 mod 2pi, the only component of a diagonal
// two-qubit propagator that survives removal of global and single-qubit
// z-phases.
double controlled_phase(const DiagonalPropagator& u);

// Overlap with controlled-Z after removing local phases: |3 - e^{i phi}| / 4.
double cz_fidelity(const DiagonalPropagator& u);

// Time at which the controlled phase reaches pi:
//   t_cz = 2 pi^2 d^3 / (mu0 hbar [gup (J+n) - gdown J]^2).
// Throws ZeroCoupling when the bracket vanishes (phase frozen).
GateResult cz_gate_time(const QubitChoice& qa, const QubitChoice& qb, CouplingGeometry g);

} // namespace dipolar
