#include "topoctl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "topoctl/errors.hpp"

namespace topoctl {

namespace {

void phase_fix(Eigen::Ref<Eigen::VectorXcd> v) {
    int imax = 0;
    double best = -1;
    for (int i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best + 1e-15) {
            best = a;
            imax = i;
        }
    }
    if (best <= 0) return;
    v *= std::conj(v[imax]) / best;
}

bool is_zero(const Eigen::MatrixXcd& M) {
    return M.size() == 0 || M.cwiseAbs().maxCoeff() < kSymmetryTol;
}

}  // namespace

Eigen::VectorXcd SpectralDecomposition::mode(int index_1based) const {
    if (index_1based < 1 || index_1based > eigenvalues.size())
        throw IndexOutOfRange("mode index " + std::to_string(index_1based) +
                              " outside 1.." + std::to_string(eigenvalues.size()));
    return eigenvectors.col(index_1based - 1);
}

Eigen::MatrixXcd bdg_dynamics_matrix(const QuadraticHamiltonian& H) {
    const int N = H.N;
    Eigen::MatrixXcd M(2 * N, 2 * N);
    if (H.stat == Statistics::Fermi) {
        M << H.A, H.B, -H.B.conjugate(), -H.A.conjugate();
    } else {
        M << H.A, -H.B, H.B.conjugate(), -H.A.conjugate();
    }
    return M;
}

Eigen::VectorXd site_weights(const Eigen::VectorXcd& U) {
    const int N = int(U.size()) / 2;
    Eigen::VectorXd w(N);
    for (int j = 0; j < N; ++j) w[j] = std::norm(U[j]) + std::norm(U[N + j]);
    return w;
}

SpectralDecomposition eigenmodes(const QuadraticHamiltonian& H) {
    const int N = H.N;
    SpectralDecomposition out;
    out.stat = H.stat;
    out.eigenvalues.resize(2 * N);
    out.eigenvectors.resize(2 * N, 2 * N);

    if (H.stat == Statistics::Fermi) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(bdg_dynamics_matrix(H));
        if (es.info() != Eigen::Success) throw SolverFailure("fermionic eigensolve failed");
        out.eigenvalues = es.eigenvalues();
        out.eigenvectors = es.eigenvectors();
    } else {
        if (!is_zero(H.B))
            throw UnsupportedDecomposition(
                "bosonic diagonalization is only supported for B = 0");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.A);
        if (es.info() != Eigen::Success) throw SolverFailure("bosonic eigensolve failed");
        // annihilation sector carries (alpha, [psi; 0]); creation sector is
        // the -conj(A) block with (-alpha, [0; conj(psi)])
        struct Entry {
            double val;
            int src;
            bool creation;
        };
        std::vector<Entry> entries;
        entries.reserve(2 * N);
        for (int i = 0; i < N; ++i) {
            entries.push_back({es.eigenvalues()[i], i, false});
            entries.push_back({-es.eigenvalues()[i], i, true});
        }
        std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.val != b.val) return a.val < b.val;
            return a.creation < b.creation;
        });
        for (int l = 0; l < 2 * N; ++l) {
            out.eigenvalues[l] = entries[l].val;
            Eigen::VectorXcd col = Eigen::VectorXcd::Zero(2 * N);
            if (entries[l].creation)
                col.tail(N) = es.eigenvectors().col(entries[l].src).conjugate();
            else
                col.head(N) = es.eigenvectors().col(entries[l].src);
            out.eigenvectors.col(l) = col;
        }
    }

    for (int l = 0; l < 2 * N; ++l) phase_fix(out.eigenvectors.col(l));

    try {
        out.edge_labels = identify_edge_modes(out, H);
    } catch (const NoMidGapMode&) {
        out.edge_labels.reset();
    }
    return out;
}

EdgeLabels identify_edge_modes(const SpectralDecomposition& spec,
                               const QuadraticHamiltonian& H) {
    const int N = spec.N();
    const int M = 2 * N;
    const int quarter = (N + 3) / 4;

    Eigen::VectorXd outer_weight(M), left_weight(M);
    for (int l = 0; l < M; ++l) {
        const Eigen::VectorXd w = site_weights(spec.eigenvectors.col(l));
        double outer = 0, left = 0;
        for (int j = 0; j < N; ++j) {
            if (j < quarter || j >= N - quarter) outer += w[j];
            if (j < N / 2) left += w[j];
        }
        outer_weight[l] = outer;
        left_weight[l] = left;
    }

    const double span = spec.eigenvalues[M - 1] - spec.eigenvalues[0];
    const double mean_spacing = span / double(M - 1);

    std::vector<int> candidates;
    for (int l = 0; l < M; ++l)
        if (outer_weight[l] >= 0.6) candidates.push_back(l);

    // isolation: the gap between the surrounding bulk eigenvalues must be
    // wide, and the candidate must not hug either edge of it
    std::vector<int> midgap;
    for (int l : candidates) {
        const double e = spec.eigenvalues[l];
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (int m = 0; m < M; ++m) {
            if (std::find(candidates.begin(), candidates.end(), m) != candidates.end())
                continue;
            const double v = spec.eigenvalues[m];
            if (v <= e && v > lo) lo = v;
            if (v >= e && v < hi) hi = v;
        }
        if (!std::isfinite(lo) || !std::isfinite(hi)) continue;
        const double gap = hi - lo;
        if (gap < 5.0 * mean_spacing) continue;
        if (std::min(e - lo, hi - e) < 0.2 * gap) continue;
        midgap.push_back(l);
    }

    if (midgap.empty()) throw NoMidGapMode("no localized mid-gap state found");

    if (midgap.size() > 2) {
        std::sort(midgap.begin(), midgap.end(),
                  [&](int a, int b) { return outer_weight[a] > outer_weight[b]; });
        midgap.resize(2);
        std::sort(midgap.begin(), midgap.end());
    }

    EdgeLabels labels;
    if (midgap.size() == 1) {
        labels.left = labels.right = midgap[0] + 1;
        return labels;
    }

    if (H.stat == Statistics::Fermi) {
        int a = midgap[0], b = midgap[1];  // ascending eigenvalue order
        const double split =
            std::abs(spec.eigenvalues[b] - spec.eigenvalues[a]);
        if (split < 1e-10 && left_weight[a] < left_weight[b]) std::swap(a, b);
        labels.left = a + 1;
        labels.right = b + 1;
    } else {
        // sectors never mix for B = 0: the annihilation-sector mode is the
        // left mode, the creation-sector one the right mode
        int a = midgap[0], b = midgap[1];
        const auto creation_frac = [&](int l) {
            return spec.eigenvectors.col(l).tail(N).squaredNorm() /
                   spec.eigenvectors.col(l).squaredNorm();
        };
        if (creation_frac(a) < creation_frac(b)) {
            labels.left = a + 1;
            labels.right = b + 1;
        } else {
            labels.left = b + 1;
            labels.right = a + 1;
        }
    }
    return labels;
}

TrackedEigenpair tracked_eigenvector(const QuadraticHamiltonian& H0,
                                     const QuadraticHamiltonian& H1, double eta,
                                     const Eigen::VectorXcd& ref) {
    if (H0.stat != Statistics::Bose || H1.stat != Statistics::Bose)
        throw UnsupportedDecomposition("eigenvector tracking is bosonic (B = 0) only");
    if (!is_zero(H0.B) || !is_zero(H1.B))
        throw UnsupportedDecomposition("eigenvector tracking requires B = 0");
    if (H0.N != H1.N) throw DimensionMismatch("H0 and H1 differ in size");
    const int N = H0.N;
    if (ref.size() != 2 * N) throw DimensionMismatch("ref has wrong length");

    const Eigen::MatrixXcd M = H0.A + eta * H1.A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success) throw SolverFailure("tracking eigensolve failed");

    TrackedEigenpair best;
    double best_ov = -1;
    std::complex<double> best_z;
    for (int i = 0; i < N; ++i) {
        for (bool creation : {false, true}) {
            Eigen::VectorXcd U = Eigen::VectorXcd::Zero(2 * N);
            if (creation)
                U.tail(N) = es.eigenvectors().col(i).conjugate();
            else
                U.head(N) = es.eigenvectors().col(i);
            const std::complex<double> z = ref.dot(U);  // conj(ref) . U
            if (std::abs(z) > best_ov) {
                best_ov = std::abs(z);
                best_z = z;
                best.W = U;
                best.lambda = creation ? -es.eigenvalues()[i] : es.eigenvalues()[i];
            }
        }
    }
    if (best_ov < 0.5)
        throw TrackingLost("best overlap " + std::to_string(best_ov) +
                           " < 0.5 at eta = " + std::to_string(eta));
    best.W *= std::conj(best_z) / best_ov;
    return best;
}

}  // namespace topoctl
