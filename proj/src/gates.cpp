#include "dipolar/gates.hpp"

#include <cmath>
#include <complex>

#include "dipolar/constants.hpp"
#include "dipolar/errors.hpp"

namespace dipolar {

using constants::hbar;
using constants::pi;
using constants::two_pi;

double wrap_angle(double radians) {
    double w = std::fmod(radians, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi) w = 0.0;
    return w;
}

DiagonalPropagator propagate(const QubitChoice& qa, const QubitChoice& qb, CouplingGeometry g,
                             double t) {
    const IsingEigenvalues lambda = ising_eigenvalues(qa, qb, g);
    DiagonalPropagator u;
    u.phases[0] = wrap_angle(-lambda.lambda1 * t / hbar);
    u.phases[1] = wrap_angle(-lambda.lambda2 * t / hbar);
    u.phases[2] = wrap_angle(-lambda.lambda3 * t / hbar);
    u.phases[3] = wrap_angle(-lambda.lambda4 * t / hbar);
    return u;
}

double controlled_phase(const DiagonalPropagator& u) {
    return wrap_angle(u.phases[3] - u.phases[2] - u.phases[1] + u.phases[0]);
}

double cz_fidelity(const DiagonalPropagator& u) {
    const double phi = controlled_phase(u);
    return std::abs(complexd{3.0, 0.0} - std::polar(1.0, phi)) / 4.0;
}

GateResult cz_gate_time(const QubitChoice& qa, const QubitChoice& qb, CouplingGeometry g) {
    if (!qa.highest_weight() || !qb.highest_weight()) {
        throw NotHighestWeight("cz_gate_time: qubit levels must be highest-weight states");
    }
    const double bracket = qa.gamma_up() * qa.j_up() - qa.gamma_down() * qa.j_down();
    if (bracket == 0.0) {
        throw ZeroCoupling("cz_gate_time: gup*(J+n) equals gdown*J, controlled phase is frozen");
    }
    // d(phi)/dt = eta hbar [gup (J+n) - gdown J]^2; validates the pair via
    // ising_eigenvalues before using the closed form.
    (void)ising_eigenvalues(qa, qb, g);

    GateResult res;
    res.phase_rate = eta(g) * hbar * bracket * bracket;
    res.t_cz = pi / res.phase_rate;
    res.fidelity_at_tcz = cz_fidelity(propagate(qa, qb, g, res.t_cz));
    return res;
}

} // namespace dipolar
