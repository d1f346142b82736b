#include "mscheme/dressed.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace mscheme {

namespace {

constexpr double kOverlapThreshold = 0.70710678118654752;  // 1/sqrt(2)

void fix_phases(Matrix5c& u) {
    for (int i = 0; i < kLevels; ++i) {
        int jmax = 0;
        double best = -1.0;
        for (int j = 0; j < kLevels; ++j) {
            const double mag = std::abs(u(i, j));
            if (mag > best + 1e-15) {
                best = mag;
                jmax = j;
            }
        }
        const Complex z = u(i, jmax);
        if (std::abs(z) > 0) u.row(i) *= std::conj(z) / std::abs(z);
    }
}

}  // namespace

DressedBasis diagonalize(const Hamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Matrix5c> es(h.matrix);
    if (es.info() != Eigen::Success)
        throw Error("Hermitian eigendecomposition failed");
    const auto& w = es.eigenvalues();       // ascending
    Matrix5c u = es.eigenvectors().transpose();  // row i = eigenvector i
    fix_phases(u);

    // transfer pair first: the two branches living on bare levels {4,5}; the
    // member crossing zero at large negative detuning would otherwise steal
    // the e0 slot from the dark branch
    std::vector<int> order{0, 1, 2, 3, 4};
    auto weight45 = [&](int i) {
        return std::norm(u(i, 3)) + std::norm(u(i, 4));
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight45(a) > weight45(b); });
    const int p1 = order[0], p2 = order[1];
    const int i4 = (std::norm(u(p1, 4)) >= std::norm(u(p2, 4))) ? p1 : p2;
    const int i3 = (i4 == p1) ? p2 : p1;

    std::vector<int> rest{order[2], order[3], order[4]};
    std::sort(rest.begin(), rest.end());
    int i0 = rest[0];
    for (int i : rest)
        if (std::abs(w(i)) < std::abs(w(i0))) i0 = i;
    std::vector<int> others;
    for (int i : rest)
        if (i != i0) others.push_back(i);
    std::sort(others.begin(), others.end(), [&](int a, int b) { return w(a) < w(b); });

    const std::array<int, 5> by_label{i0, others[0], others[1], i3, i4};
    DressedBasis basis;
    for (int l = 0; l < kLevels; ++l) {
        basis.eigenvalues[l] = w(by_label[l]);
        basis.vectors.row(l) = u.row(by_label[l]);
    }
    return basis;
}

std::vector<DressedBasis> track_branches(const std::vector<Hamiltonian>& h_sequence) {
    if (h_sequence.empty()) throw ValidationError("track_branches needs a nonempty sweep");
    std::vector<DressedBasis> out;
    out.reserve(h_sequence.size());
    out.push_back(diagonalize(h_sequence.front()));

    for (std::size_t n = 1; n < h_sequence.size(); ++n) {
        const DressedBasis& prev = out.back();
        const DressedBasis raw = diagonalize(h_sequence[n]);

        // O(l, j) = |<e_l(n-1)|e_j(n)>|
        Eigen::Matrix<double, kLevels, kLevels> overlap;
        for (int l = 0; l < kLevels; ++l)
            for (int j = 0; j < kLevels; ++j)
                overlap(l, j) =
                    std::abs((prev.vectors.row(l).conjugate() * raw.vectors.row(j).transpose())(0, 0));

        struct Cand {
            double o;
            int l, j;
        };
        std::vector<Cand> cands;
        for (int l = 0; l < kLevels; ++l)
            for (int j = 0; j < kLevels; ++j) cands.push_back({overlap(l, j), l, j});
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.o != b.o) return a.o > b.o;
            return std::tie(a.l, a.j) < std::tie(b.l, b.j);
        });

        std::array<int, kLevels> match;
        match.fill(-1);
        std::array<bool, kLevels> used_j{};
        for (const Cand& c : cands) {
            if (match[c.l] != -1 || used_j[c.j]) continue;
            match[c.l] = c.j;
            used_j[c.j] = true;
        }
        for (int l = 0; l < kLevels; ++l) {
            if (overlap(l, match[l]) < kOverlapThreshold)
                throw AmbiguousTracking(
                    "branch overlap " + std::to_string(overlap(l, match[l])) +
                    " below 1/sqrt(2) between sweep points " + std::to_string(n - 1) + " and " +
                    std::to_string(n) + "; refine the sweep grid near this interval");
        }

        DressedBasis next;
        for (int l = 0; l < kLevels; ++l) {
            next.eigenvalues[l] = raw.eigenvalues[match[l]];
            next.vectors.row(l) = raw.vectors.row(match[l]);
        }
        out.push_back(next);
    }
    return out;
}

std::array<double, 5> dressed_populations(const Matrix5c& rho, const DressedBasis& basis) {
    std::array<double, 5> p{};
    for (int l = 0; l < kLevels; ++l) {
        const Complex val =
            (basis.vectors.row(l).conjugate() * rho * basis.vectors.row(l).transpose())(0, 0);
        p[l] = val.real();
    }
    return p;
}

DecayExpansion decay_expansion(const DressedBasis& basis, LevelIndex source, LevelIndex target) {
    if (!source.valid() || !source.is_excited())
        throw ValidationError("decay_expansion source must be an excited level {2,4}");
    if (!target.valid() || !target.is_ground())
        throw ValidationError("decay_expansion target must be a ground level {1,3,5}");
    DecayExpansion ex;
    ex.source = source;
    ex.target = target;
    for (int a = 0; a < kLevels; ++a)
        for (int b = 0; b < kLevels; ++b)
            ex.coefficients(a, b) =
                std::conj(basis.vectors(a, source.idx())) * basis.vectors(b, target.idx());
    return ex;
}

std::vector<DominantTerm> dominant_terms(const DecayExpansion& expansion, double threshold,
                                         const std::vector<int>& branches) {
    if (threshold <= 0.0 || threshold > 1.0)
        throw ValidationError("dominant_terms threshold must be in (0, 1]");
    double max_mag = 0;
    for (int a : branches)
        for (int b : branches)
            max_mag = std::max(max_mag, std::abs(expansion.coefficients(a, b)));
    std::vector<DominantTerm> terms;
    for (int a : branches)
        for (int b : branches) {
            const double mag = std::abs(expansion.coefficients(a, b));
            if (max_mag > 0 && mag >= threshold * max_mag)
                terms.push_back({a, b, mag});
        }
    std::sort(terms.begin(), terms.end(), [](const DominantTerm& x, const DominantTerm& y) {
        if (x.magnitude != y.magnitude) return x.magnitude > y.magnitude;
        return std::tie(x.bra_branch, x.ket_branch) < std::tie(y.bra_branch, y.ket_branch);
    });
    return terms;
}

std::string pair_tag(const DominantTerm& term) {
    return "e" + std::to_string(term.bra_branch) + "e" + std::to_string(term.ket_branch);
}

}  // namespace mscheme
