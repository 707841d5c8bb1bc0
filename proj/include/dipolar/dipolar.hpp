#pragma once

#include <cstddef>
#include <vector>

#include "dipolar/angmom.hpp"
#include "dipolar/cmatrix.hpp"

namespace dipolar {

// One multiplet with its gyromagnetic ratio. gamma may be negative or zero
// (the NV intermediate singlet has gamma = 0).
struct Sector {
    AngularMomentumLabel j;
    double gamma = 0.0; // rad/(s*T)

    friend bool operator==(const Sector& a, const Sector& b) noexcept {
        return a.j == b.j && a.gamma == b.gamma;
    }
};

// Direct sum of sectors making up one physical qubit carrier. Basis states are
// ordered sector by sector, highest m first inside each sector.
class ParticleSpace {
public:
    explicit ParticleSpace(std::vector<Sector> sectors);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Sector>& sectors() const noexcept { return sectors_; }
    std::size_t sector_offset(std::size_t s) const;

    // Basis index of |j_s, m> with m given as 2m. Throws IndexOutOfSpace for
    // bad sector indices or m outside the multiplet.
    std::size_t level_index(std::size_t sector, int two_m) const;

    friend bool operator==(const ParticleSpace& a, const ParticleSpace& b) noexcept {
        return a.sectors_ == b.sectors_;
    }

private:
    std::vector<Sector> sectors_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
};

struct LevelRef {
    std::size_t sector = 0;
    int two_m = 0;

    friend bool operator==(LevelRef a, LevelRef b) noexcept {
        return a.sector == b.sector && a.two_m == b.two_m;
    }
};

// The two levels selected as |down> and |up> inside a ParticleSpace.
// Construction validates the refs; highest_weight() reports whether both
// levels sit at m = j of their sector, which is what the Ising reduction
// requires. Non-highest choices stay constructible for counterexample runs.
class QubitChoice {
public:
    QubitChoice(ParticleSpace space, LevelRef down, LevelRef up);

    const ParticleSpace& space() const noexcept { return space_; }
    LevelRef down() const noexcept { return down_; }
    LevelRef up() const noexcept { return up_; }

    std::size_t down_index() const noexcept { return down_index_; }
    std::size_t up_index() const noexcept { return up_index_; }

    const Sector& down_sector() const { return space_.sectors()[down_.sector]; }
    const Sector& up_sector() const { return space_.sectors()[up_.sector]; }

    double j_down() const { return down_sector().j.j(); }
    double j_up() const { return up_sector().j.j(); }
    double gamma_down() const { return down_sector().gamma; }
    double gamma_up() const { return up_sector().gamma; }

    bool highest_weight() const noexcept { return highest_weight_; }

    friend bool operator==(const QubitChoice& a, const QubitChoice& b) noexcept {
        return a.space_ == b.space_ && a.down_ == b.down_ && a.up_ == b.up_;
    }

private:
    ParticleSpace space_;
    LevelRef down_;
    LevelRef up_;
    std::size_t down_index_ = 0;
    std::size_t up_index_ = 0;
    bool highest_weight_ = false;
};

// Two dipoles centered on the laboratory z-axis, separated by d meters.
struct CouplingGeometry {
    double d = 0.0;
};

// Magnetic moment operators, J/T. Block-diagonal over sectors: within sector s
// the block is gamma_s * hbar * (J matrix); ladder operators never connect
// different multiplets.
ComplexMatrix moment_z(const ParticleSpace& p);
ComplexMatrix moment_plus(const ParticleSpace& p);
ComplexMatrix moment_minus(const ParticleSpace& p);

// Block-diagonal dimensionless Jz over all sectors (no gamma, no hbar).
// The dipole Hamiltonian commutes with jz(a) (x) I + I (x) jz(b).
ComplexMatrix particle_jz(const ParticleSpace& p);

// Coupling prefactor mu0 / (2 pi d^3); eta * gamma^2 * hbar^2 is in joules.
double eta(CouplingGeometry g);

// Two-particle dipole-dipole Hamiltonian on the tensor product space
// (dim a.dim * b.dim), in joules:
//   H = mu0/(4 pi d^3) [ -2 mu_az mu_bz + (mu_a+ mu_b- + mu_a- mu_b+)/2 ]
// Hermitian by construction.
ComplexMatrix dipole_hamiltonian(const ParticleSpace& a, const ParticleSpace& b,
                                 CouplingGeometry g);

// 4x4 restriction of an operator on the product space to the computational
// basis |dd>, |du>, |ud>, |uu>.
ComplexMatrix qubit_projection(const ComplexMatrix& h, const QubitChoice& qa,
                               const QubitChoice& qb);

// ||Q H P|| where P projects onto the 4-dimensional qubit subspace and
// Q = I - P. Zero certifies that the subspace is invariant under h. Works for
// any operator on the product space (Hamiltonian or propagator).
double leakage_norm(const ComplexMatrix& h, const QubitChoice& qa, const QubitChoice& qb);

// Closed-form diagonal of the Hamiltonian on the computational basis, joules:
//   lambda1 = -eta gdown^2 hbar^2 J^2
//   lambda2 = lambda3 = -eta gdown gup hbar^2 J (J+n)
//   lambda4 = -eta gup^2 hbar^2 (J+n)^2
// Requires highest-weight choices and identical particle species.
struct IsingEigenvalues {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
};

IsingEigenvalues ising_eigenvalues(const QubitChoice& qa, const QubitChoice& qb,
                                   CouplingGeometry g);

} // namespace dipolar
