#pragma once

#include "dipolar/cmatrix.hpp"

namespace dipolar {

// One angular-momentum multiplet. Stores 2j so half-integer j stays exact.
// Basis order is fixed throughout the library: m = j, j-1, ..., -j
// (highest weight first), so index k holds two_m = two_j - 2k.
struct AngularMomentumLabel {
    int two_j = 0;

    AngularMomentumLabel() = default;
    explicit AngularMomentumLabel(int two_j_value);

    int dimension() const noexcept { return two_j + 1; }
    double j() const noexcept { return 0.5 * two_j; }

    friend bool operator==(AngularMomentumLabel a, AngularMomentumLabel b) noexcept {
        return a.two_j == b.two_j;
    }
};

// Dimensionless operators (units of hbar).
ComplexMatrix jz_matrix(AngularMomentumLabel j);
ComplexMatrix jplus_matrix(AngularMomentumLabel j);
ComplexMatrix jminus_matrix(AngularMomentumLabel j);

} // namespace dipolar
