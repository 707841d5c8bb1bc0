#include "dipolar/angmom.hpp"

#include <cmath>
#include <stdexcept>

namespace dipolar {

AngularMomentumLabel::AngularMomentumLabel(int two_j_value) : two_j(two_j_value) {
    if (two_j < 0) throw std::invalid_argument("AngularMomentumLabel: 2j must be non-negative");
}

ComplexMatrix jz_matrix(AngularMomentumLabel j) {
    const int dim = j.dimension();
    ComplexMatrix m(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const int two_m = j.two_j - 2 * k;
        m(k, k) = 0.5 * two_m;
    }
    return m;
}

ComplexMatrix jplus_matrix(AngularMomentumLabel j) {
    const int dim = j.dimension();
    ComplexMatrix m(dim, dim);
    // <j, m+1| J+ |j, m> = sqrt(j(j+1) - m(m+1)); in 2j units the radicand is
    // (two_j(two_j+2) - two_m(two_m+2)) / 4, exactly zero at m = j.
    for (int k = 1; k < dim; ++k) {
        const int two_m = j.two_j - 2 * k;
        const int radicand = j.two_j * (j.two_j + 2) - two_m * (two_m + 2);
        m(k - 1, k) = 0.5 * std::sqrt(static_cast<double>(radicand));
    }
    return m;
}

ComplexMatrix jminus_matrix(AngularMomentumLabel j) {
    return jplus_matrix(j).adjoint();
}

} // namespace dipolar
