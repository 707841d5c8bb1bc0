#include "dipolar/cluster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

void require_qubit_count(int n) {
    if (n < 1 || n > StateVector::max_qubits) {
        throw SizeLimit("qubit count must be between 1 and " +
                        std::to_string(StateVector::max_qubits));
    }
}

void require_vertex(int v, int n, const char* op) {
    if (v < 0 || v >= n) throw IndexOutOfRange(std::string(op) + ": vertex out of range");
}

} // namespace

StateVector::StateVector(int n_qubits, std::vector<complexd> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    require_qubit_count(n_qubits_);
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n");
    }
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("StateVector: state must be normalized");
    }
}

QubitGraph::QubitGraph(int n_qubits, const std::vector<std::pair<int, int>>& edges)
    : n_qubits_(n_qubits) {
    if (n_qubits_ < 1) throw std::invalid_argument("QubitGraph: need at least one vertex");
    for (auto [a, b] : edges) {
        require_vertex(a, n_qubits_, "QubitGraph");
        require_vertex(b, n_qubits_, "QubitGraph");
        if (a == b) throw std::invalid_argument("QubitGraph: self-loops are not allowed");
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<int> QubitGraph::neighbors(int vertex) const {
    require_vertex(vertex, n_qubits_, "neighbors");
    std::vector<int> out;
    for (auto [a, b] : edges_) {
        if (a == vertex) out.push_back(b);
        if (b == vertex) out.push_back(a);
    }
    return out;
}

StateVector plus_state(int n_qubits) {
    require_qubit_count(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    return StateVector(n_qubits, std::vector<complexd>(dim, complexd{amp, 0.0}));
}

StateVector apply_cz(const StateVector& s, int a, int b) {
    require_vertex(a, s.n_qubits(), "apply_cz");
    require_vertex(b, s.n_qubits(), "apply_cz");
    if (a == b) throw IndexOutOfRange("apply_cz: control and target must differ");

    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    std::vector<complexd> amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
    }
    return StateVector(s.n_qubits(), std::move(amps));
}

StateVector graph_state(const QubitGraph& g) {
    StateVector s = plus_state(g.n_qubits());
    for (auto [a, b] : g.edges()) s = apply_cz(s, a, b);
    return s;
}

double stabilizer_expectation(const StateVector& s, const QubitGraph& g, int vertex) {
    require_vertex(vertex, s.n_qubits(), "stabilizer_expectation");
    if (g.n_qubits() != s.n_qubits()) {
        throw std::invalid_argument("stabilizer_expectation: graph and state sizes differ");
    }

    const std::size_t x_mask = std::size_t{1} << vertex;
    std::size_t z_mask = 0;
    for (int w : g.neighbors(vertex)) z_mask |= std::size_t{1} << w;

    // K_v |s> = sum_i s_i (-1)^{|i & z|} |i ^ x>
    complexd acc{0.0, 0.0};
    const auto& amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double sign = (std::popcount(i & z_mask) % 2 == 0) ? 1.0 : -1.0;
        acc += std::conj(amps[i ^ x_mask]) * sign * amps[i];
    }
    return acc.real();
}

QubitGraph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1) {
                throw ParseError("edge list line 1: expected a positive qubit count");
            }
        } else {
            int a = 0, b = 0;
            if (!(fields >> a)) continue; // blank line
            if (!(fields >> b)) {
                throw ParseError("edge list line " + std::to_string(line_no) +
                                 ": expected two vertex indices");
            }
            if (a == b) {
                throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop");
            }
            if (a < 0 || b < 0 || a >= n || b >= n) {
                throw ParseError("edge list line " + std::to_string(line_no) +
                                 ": vertex out of range");
            }
            edges.emplace_back(a, b);
        }
        std::string trailing;
        if (fields >> trailing) {
            throw ParseError("edge list line " + std::to_string(line_no) + ": trailing tokens");
        }
    }
    if (n < 0) throw ParseError("edge list: empty input");
    return QubitGraph(n, edges);
}

} // namespace dipolar
