#include "mscheme/model.hpp"

#include <cmath>
#include <queue>
#include <set>

namespace mscheme {

namespace {

int find_root(std::array<int, kLevels>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

CouplingMap::CouplingMap(std::array<CouplingEdge, 4> edges) : edges_(edges) {
    std::set<std::pair<int, int>> seen;
    std::array<int, kLevels> parent{0, 1, 2, 3, 4};
    for (const auto& e : edges_) {
        if (e.field < 1 || e.field > 4)
            throw InvalidTopology("field index must be in 1..4");
        if (!e.lower.valid() || !e.upper.valid())
            throw InvalidTopology("level index out of range");
        if (!e.lower.is_ground() || !e.upper.is_excited())
            throw InvalidTopology("each edge must join a ground level {1,3,5} to an excited level {2,4}");
        if (!seen.insert({e.lower.value, e.upper.value}).second)
            throw InvalidTopology("duplicate coupling edge");
        int a = find_root(parent, e.lower.idx());
        int b = find_root(parent, e.upper.idx());
        if (a == b)
            throw CyclicTopology("coupling graph contains a cycle; closed-loop phase condition unsupported");
        parent[a] = b;
    }
    std::set<int> fields;
    for (const auto& e : edges_) fields.insert(e.field);
    if (fields.size() != 4)
        throw InvalidTopology("each field index 1..4 must appear exactly once");
}

CouplingMap CouplingMap::m_scheme() {
    CouplingMap m({CouplingEdge{1, {1}, {2}}, CouplingEdge{2, {3}, {2}},
                   CouplingEdge{3, {3}, {4}}, CouplingEdge{4, {5}, {4}}});
    m.name_ = "m_scheme";
    return m;
}

CouplingMap CouplingMap::variant() {
    CouplingMap m({CouplingEdge{1, {1}, {2}}, CouplingEdge{2, {5}, {2}},
                   CouplingEdge{3, {3}, {4}}, CouplingEdge{4, {5}, {4}}});
    m.name_ = "variant";
    return m;
}

void SystemParams::validate() const {
    auto check_finite = [](double v, const char* field) {
        if (!std::isfinite(v))
            throw ValidationError(std::string(field) + " must be finite");
    };
    static const char* omega_names[] = {"omega1", "omega2", "omega3", "omega4"};
    static const char* delta_names[] = {"delta1", "delta2", "delta3", "delta4"};
    for (int k = 0; k < 4; ++k) {
        check_finite(rabi[k].real(), omega_names[k]);
        check_finite(rabi[k].imag(), omega_names[k]);
        check_finite(detuning[k], delta_names[k]);
    }
    const std::pair<double, const char*> rates[] = {
        {decay.g12, "gamma12"}, {decay.g23, "gamma23"}, {decay.g25, "gamma25"},
        {decay.g14, "gamma14"}, {decay.g34, "gamma34"}, {decay.g45, "gamma45"},
        {dephasing, "gamma_d"}};
    for (const auto& [v, name] : rates) {
        check_finite(v, name);
        if (v < 0)
            throw ValidationError(std::string(name) + " must be >= 0, got " + std::to_string(v));
    }
}

std::array<double, 5> frame_energies(const CouplingMap& topology,
                                     const std::array<double, 4>& detunings,
                                     std::vector<LevelIndex>* unreachable) {
    std::array<double, 5> theta{};
    std::array<bool, 5> known{};
    known[0] = true;  // theta_1 = 0 anchors the frame

    // adjacency keyed by 0-based level
    std::array<std::vector<const CouplingEdge*>, 5> adj;
    for (const auto& e : topology.edges()) {
        adj[e.lower.idx()].push_back(&e);
        adj[e.upper.idx()].push_back(&e);
    }

    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int at = frontier.front();
        frontier.pop();
        for (const CouplingEdge* e : adj[at]) {
            double dk = detunings[e->field - 1];
            int other = (e->lower.idx() == at) ? e->upper.idx() : e->lower.idx();
            if (known[other]) continue;
            // theta_upper - theta_lower = delta_k
            theta[other] = (other == e->upper.idx()) ? theta[at] + dk : theta[at] - dk;
            known[other] = true;
            frontier.push(other);
        }
    }
    if (unreachable) {
        unreachable->clear();
        for (int i = 0; i < kLevels; ++i)
            if (!known[i]) unreachable->push_back(LevelIndex{i + 1});
    }
    return theta;
}

Hamiltonian build_hamiltonian(const SystemParams& params) {
    params.validate();
    Hamiltonian h;
    h.frame_energies = frame_energies(params.topology, params.detuning);
    for (int i = 0; i < kLevels; ++i) h.matrix(i, i) = h.frame_energies[i];
    for (const auto& e : params.topology.edges()) {
        const Complex omega = params.rabi[e.field - 1];
        h.matrix(e.upper.idx(), e.lower.idx()) = omega;
        h.matrix(e.lower.idx(), e.upper.idx()) = std::conj(omega);
    }
    return h;
}

}  // namespace mscheme
