#include "topoctl/quadratic.hpp"

#include <cmath>
#include <string>

#include "topoctl/errors.hpp"

namespace topoctl {

QuadraticHamiltonian validate_quadratic(const Eigen::MatrixXcd& A,
                                        const Eigen::MatrixXcd& B,
                                        Statistics stat) {
    if (A.rows() != A.cols() || B.rows() != B.cols())
        throw DimensionMismatch("A and B must be square");
    if (A.rows() != B.rows())
        throw DimensionMismatch("A is " + std::to_string(A.rows()) + "x" +
                                std::to_string(A.cols()) + " but B is " +
                                std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
    const int N = int(A.rows());
    if (N < 2) throw DimensionMismatch("need N >= 2, got " + std::to_string(N));

    const double herm = (A - A.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kSymmetryTol)
        throw SymmetryViolation("A not Hermitian, max residual " + std::to_string(herm));

    const double eps = stat_sign(stat);
    const double bsym = (B - eps * B.transpose()).cwiseAbs().maxCoeff();
    if (bsym > kSymmetryTol)
        throw SymmetryViolation(std::string("B violates ") +
                                (stat == Statistics::Fermi ? "antisymmetry" : "symmetry") +
                                ", max residual " + std::to_string(bsym));

    return QuadraticHamiltonian{N, A, B, stat};
}

double stat_norm(const Eigen::VectorXcd& q, Statistics stat) {
    const int N = int(q.size()) / 2;
    const double c2 = q.head(N).squaredNorm();
    const double d2 = q.tail(N).squaredNorm();
    return stat == Statistics::Fermi ? c2 + d2 : std::abs(c2 - d2);
}

double mode_norm(const ModeVector& Q) { return stat_norm(Q.q, Q.stat); }

ModeVector make_mode_vector(Eigen::VectorXcd q, Statistics stat) {
    if (q.size() % 2 != 0) throw DimensionMismatch("mode vector length must be 2N");
    const double n = stat_norm(q, stat);
    if (std::abs(n - 1.0) > kModeNormTol)
        throw NormViolation("mode vector norm " + std::to_string(n) + " != 1");
    return ModeVector{std::move(q), stat};
}

}  // namespace topoctl
