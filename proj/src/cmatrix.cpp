#include "dipolar/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, complexd{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complexd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("operator*: inner dimension mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const complexd a = (*this)(r, k);
            if (a == complexd{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

std::vector<complexd> ComplexMatrix::column(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("column: index out of range");
    std::vector<complexd> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const complexd f = a(ra, ca);
            if (f == complexd{0.0, 0.0}) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
        }
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& v : a.entries()) s += std::norm(v);
    return std::sqrt(s);
}

double hermiticity_deviation(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("hermiticity_deviation: matrix not square");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r; c < a.cols(); ++c)
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

HermitianEigensystem eigh(const ComplexMatrix& input) {
    if (!input.is_square()) throw std::invalid_argument("eigh: matrix not square");
    const std::size_t n = input.rows();

    // Symmetrize; diagonal becomes exactly real.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = frobenius_norm(a);
    const double stop = scale * 1e-15;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const complexd apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= scale * 1e-300 || r == 0.0) continue;

                const complexd phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0)
                                     ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- U^dagger A U with the plane rotation
                //   U = [[c, -s phase], [s conj(phase), c]] on (p, q).
                for (std::size_t i = 0; i < n; ++i) {
                    const complexd aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a(i, q) = -s * phase * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const complexd apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * phase * aqj;
                    a(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                // Exact 2x2 block values; annihilated pair set to zero.
                a(p, p) = app * c * c + 2.0 * r * s * c + aqq * s * s;
                a(q, q) = app * s * s - 2.0 * r * s * c + aqq * c * c;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t i = 0; i < n; ++i) {
                    const complexd vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(phase) * viq;
                    v(i, q) = -s * phase * vip + c * viq;
                }
            }
        }
    }

    HermitianEigensystem res;
    res.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.values[i] = a(i, i).real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return res.values[x] < res.values[y]; });

    HermitianEigensystem sorted;
    sorted.values.resize(n);
    sorted.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = res.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, k) = v(i, order[k]);
    }
    return sorted;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale) {
    if (!h.is_square()) throw std::invalid_argument("expm_hermitian: matrix not square");
    const double magnitude = max_abs(h);
    if (hermiticity_deviation(h) > 1e-10 * magnitude) {
        throw NonHermitianInput("expm_hermitian: input exceeds Hermitian tolerance");
    }

    const auto eig = eigh(h);
    const std::size_t n = h.rows();

    std::vector<complexd> phases(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = scale * eig.values[k];
        phases[k] = complexd{std::cos(angle), std::sin(angle)};
    }

    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const complexd left = eig.vectors(i, k) * phases[k];
            if (left == complexd{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += left * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

double operator_norm(const ComplexMatrix& a) {
    // Gram matrix of the smaller side keeps the eigenproblem minimal.
    const ComplexMatrix g =
        (a.cols() <= a.rows()) ? a.adjoint() * a : a * a.adjoint();
    if (max_abs(g) == 0.0) return 0.0;
    const auto eig = eigh(g);
    const double lambda_max = eig.values.back();
    return std::sqrt(std::max(lambda_max, 0.0));
}

} // namespace dipolar
