#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dipolar/cmatrix.hpp"

namespace dipolar {

// Desk-scale pure statevector: at most 12 qubits (4096 amplitudes). Qubit q
// maps to bit q of the basis index.
class StateVector {
public:
    static constexpr int max_qubits = 12;

    StateVector(int n_qubits, std::vector<complexd> amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    const std::vector<complexd>& amplitudes() const noexcept { return amplitudes_; }
    complexd amplitude(std::size_t basis_index) const { return amplitudes_.at(basis_index); }

private:
    int n_qubits_ = 0;
    std::vector<complexd> amplitudes_;
};

// Undirected graph on qubit vertices; edges stored normalized (a < b),
// duplicates merged. Self-loops are rejected.
class QubitGraph {
public:
    QubitGraph(int n_qubits, const std::vector<std::pair<int, int>>& edges);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    std::vector<int> neighbors(int vertex) const;

private:
    int n_qubits_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// |+>^n, all amplitudes 2^{-n/2}. Throws SizeLimit outside 1 <= n <= 12.
StateVector plus_state(int n_qubits);

// Sign-flip on basis states where qubits a and b are both 1.
StateVector apply_cz(const StateVector& s, int a, int b);

// CZ along every edge applied to |+>^n; edge order is irrelevant.
StateVector graph_state(const QubitGraph& g);

// <s| X_v prod_{w in nbr(v)} Z_w |s>; equals 1 on graph_state(g) vertices.
double stabilizer_expectation(const StateVector& s, const QubitGraph& g, int vertex);

// Edge-list format: first line `n`, remaining lines `a b` with 0-based
// vertices. Throws ParseError on malformed content or self-loops.
QubitGraph parse_edge_list(std::istream& in);

} // namespace dipolar
