#include "dipolar/dipolar.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dipolar/constants.hpp"
#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

using constants::hbar;
using constants::mu0;
using constants::pi;

// Assemble a block-diagonal operator from per-sector blocks.
template <typename BlockFn>
ComplexMatrix block_diagonal(const ParticleSpace& p, BlockFn&& block) {
    ComplexMatrix out(p.dim(), p.dim());
    for (std::size_t s = 0; s < p.sectors().size(); ++s) {
        const ComplexMatrix b = block(p.sectors()[s]);
        const std::size_t off = p.sector_offset(s);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    }
    return out;
}

void require_positive_distance(CouplingGeometry g) {
    if (!(g.d > 0.0) || !std::isfinite(g.d)) {
        throw std::invalid_argument("coupling geometry: distance must be positive and finite");
    }
}

void require_identical_species(const QubitChoice& qa, const QubitChoice& qb) {
    if (!(qa == qb)) {
        throw std::invalid_argument(
            "ising_eigenvalues: the two qubits must be identical physical systems");
    }
}

} // namespace

ParticleSpace::ParticleSpace(std::vector<Sector> sectors) : sectors_(std::move(sectors)) {
    if (sectors_.empty()) throw std::invalid_argument("ParticleSpace: at least one sector required");
    for (std::size_t s = 0; s < sectors_.size(); ++s) {
        if (!std::isfinite(sectors_[s].gamma)) {
            throw std::invalid_argument("ParticleSpace: gamma must be finite");
        }
        if (sectors_[s].j.two_j < 0) {
            throw std::invalid_argument("ParticleSpace: 2j must be non-negative");
        }
        for (std::size_t t = 0; t < s; ++t) {
            if (sectors_[s] == sectors_[t]) {
                throw std::invalid_argument("ParticleSpace: duplicate (j, gamma) sector");
            }
        }
        offsets_.push_back(dim_);
        dim_ += static_cast<std::size_t>(sectors_[s].j.dimension());
    }
}

std::size_t ParticleSpace::sector_offset(std::size_t s) const {
    if (s >= offsets_.size()) throw IndexOutOfSpace("sector_offset: sector index out of range");
    return offsets_[s];
}

std::size_t ParticleSpace::level_index(std::size_t sector, int two_m) const {
    if (sector >= sectors_.size()) throw IndexOutOfSpace("level_index: sector index out of range");
    const int two_j = sectors_[sector].j.two_j;
    if (two_m > two_j || two_m < -two_j || (two_j - two_m) % 2 != 0) {
        throw IndexOutOfSpace("level_index: 2m = " + std::to_string(two_m) +
                              " not in multiplet with 2j = " + std::to_string(two_j));
    }
    return offsets_[sector] + static_cast<std::size_t>((two_j - two_m) / 2);
}

QubitChoice::QubitChoice(ParticleSpace space, LevelRef down, LevelRef up)
    : space_(std::move(space)), down_(down), up_(up) {
    down_index_ = space_.level_index(down_.sector, down_.two_m);
    up_index_ = space_.level_index(up_.sector, up_.two_m);
    if (down_index_ == up_index_) {
        throw std::invalid_argument("QubitChoice: down and up must be distinct basis states");
    }
    highest_weight_ = down_.two_m == space_.sectors()[down_.sector].j.two_j &&
                      up_.two_m == space_.sectors()[up_.sector].j.two_j;
}

ComplexMatrix moment_z(const ParticleSpace& p) {
    return block_diagonal(
        p, [](const Sector& s) { return complexd{s.gamma * hbar, 0.0} * jz_matrix(s.j); });
}

ComplexMatrix moment_plus(const ParticleSpace& p) {
    return block_diagonal(
        p, [](const Sector& s) { return complexd{s.gamma * hbar, 0.0} * jplus_matrix(s.j); });
}

ComplexMatrix moment_minus(const ParticleSpace& p) {
    return moment_plus(p).adjoint();
}

ComplexMatrix particle_jz(const ParticleSpace& p) {
    return block_diagonal(p, [](const Sector& s) { return jz_matrix(s.j); });
}

double eta(CouplingGeometry g) {
    require_positive_distance(g);
    return mu0 / (2.0 * pi * g.d * g.d * g.d);
}

ComplexMatrix dipole_hamiltonian(const ParticleSpace& a, const ParticleSpace& b,
                                 CouplingGeometry g) {
    require_positive_distance(g);
    const double prefactor = mu0 / (4.0 * pi * g.d * g.d * g.d);

    const ComplexMatrix maz = moment_z(a);
    const ComplexMatrix mbz = moment_z(b);
    const ComplexMatrix map = moment_plus(a);
    const ComplexMatrix mam = moment_minus(a);
    const ComplexMatrix mbp = moment_plus(b);
    const ComplexMatrix mbm = moment_minus(b);

    ComplexMatrix h = complexd{-2.0, 0.0} * kron(maz, mbz);
    h += complexd{0.5, 0.0} * (kron(map, mbm) + kron(mam, mbp));
    h *= complexd{prefactor, 0.0};
    return h;
}

ComplexMatrix qubit_projection(const ComplexMatrix& h, const QubitChoice& qa,
                               const QubitChoice& qb) {
    const std::size_t dim_b = qb.space().dim();
    const std::size_t expected = qa.space().dim() * dim_b;
    if (h.rows() != expected || h.cols() != expected) {
        throw IndexOutOfSpace("qubit_projection: operator does not match the product space");
    }
    const std::size_t idx[4] = {
        qa.down_index() * dim_b + qb.down_index(),
        qa.down_index() * dim_b + qb.up_index(),
        qa.up_index() * dim_b + qb.down_index(),
        qa.up_index() * dim_b + qb.up_index(),
    };
    ComplexMatrix out(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = h(idx[r], idx[c]);
    return out;
}

double leakage_norm(const ComplexMatrix& h, const QubitChoice& qa, const QubitChoice& qb) {
    const std::size_t dim_b = qb.space().dim();
    const std::size_t expected = qa.space().dim() * dim_b;
    if (h.rows() != expected || h.cols() != expected) {
        throw IndexOutOfSpace("leakage_norm: operator does not match the product space");
    }
    const std::size_t idx[4] = {
        qa.down_index() * dim_b + qb.down_index(),
        qa.down_index() * dim_b + qb.up_index(),
        qa.up_index() * dim_b + qb.down_index(),
        qa.up_index() * dim_b + qb.up_index(),
    };

    // M = Q H P has rank <= 4, so ||M|| is the root of the largest eigenvalue
    // of the 4x4 Gram matrix built from the qubit columns with qubit rows
    // removed. Exact spectral norm at O(dim^2) cost.
    ComplexMatrix cols(expected, 4);
    for (std::size_t r = 0; r < expected; ++r)
        for (std::size_t c = 0; c < 4; ++c) cols(r, c) = h(r, idx[c]);
    for (std::size_t r : idx)
        for (std::size_t c = 0; c < 4; ++c) cols(r, c) = 0.0;

    return operator_norm(cols);
}

IsingEigenvalues ising_eigenvalues(const QubitChoice& qa, const QubitChoice& qb,
                                   CouplingGeometry g) {
    if (!qa.highest_weight() || !qb.highest_weight()) {
        throw NotHighestWeight("ising_eigenvalues: qubit levels must be highest-weight states");
    }
    require_identical_species(qa, qb);

    const double e = eta(g);
    const double gd = qa.gamma_down();
    const double gu = qa.gamma_up();
    const double jd = qa.j_down();  // J
    const double ju = qa.j_up();    // J + n

    IsingEigenvalues lambda;
    lambda.lambda1 = -e * gd * gd * hbar * hbar * jd * jd;
    lambda.lambda2 = -e * gd * gu * hbar * hbar * jd * ju;
    lambda.lambda3 = lambda.lambda2;
    lambda.lambda4 = -e * gu * gu * hbar * hbar * ju * ju;
    return lambda;
}

} // namespace dipolar
