#include "topoctl/control.hpp"

#include <cmath>
#include <string>

#include "topoctl/errors.hpp"

namespace topoctl {

namespace {
constexpr double kPicardTol = 1e-10;
constexpr int kPicardCap = 200;
constexpr double kPicardDamping = 0.5;
}  // namespace

Eigen::MatrixXcd build_p_matrix(const SpectralDecomposition& spec, int target_index_1based) {
    const Eigen::VectorXcd U = spec.mode(target_index_1based);
    return -(U * U.adjoint());
}

double p_matrix_field(const Eigen::VectorXcd& q, const Eigen::MatrixXcd& P,
                      const Eigen::MatrixXcd& Hk, double Fk) {
    if (P.rows() != q.size() || Hk.rows() != q.size())
        throw DimensionMismatch("p_matrix_field: size mismatch");
    const Eigen::VectorXcd Pq = P * q;
    const Eigen::VectorXcd Hq = Hk * q;
    // i <q| [Hk, P] |q>
    const std::complex<double> z =
        std::complex<double>(0, 1) * (Hq.dot(Pq) - Pq.dot(Hq));
    if (std::abs(z.imag()) > 1e-9)
        throw NonRealField("field has imaginary residual " + std::to_string(z.imag()));
    return Fk * z.real();
}

double overlap_field(const Eigen::VectorXcd& q, const Eigen::VectorXcd& QT,
                     const Eigen::MatrixXcd& Hk, double Fk) {
    if (QT.size() != q.size() || Hk.rows() != q.size())
        throw DimensionMismatch("overlap_field: size mismatch");
    return Fk * (q.dot(Hk * QT) * QT.dot(q)).imag();
}

double dual_target_field(const Eigen::VectorXcd& q, const Eigen::VectorXcd& QT1,
                         const Eigen::VectorXcd& QT2, const Eigen::MatrixXcd& Hk,
                         double Fk) {
    if (QT1.size() != q.size() || QT2.size() != q.size() || Hk.rows() != q.size())
        throw DimensionMismatch("dual_target_field: size mismatch");
    const std::complex<double> z1 = q.dot(Hk * QT1) * QT1.dot(q);
    const std::complex<double> z2 = q.dot(Hk * QT2) * QT2.dot(q);
    return Fk * (z1 - z2).imag();
}

double square_wave_wrap(double inner_field, double Fclip) {
    if (inner_field > 0) return Fclip;
    if (inner_field < 0) return -Fclip;
    return 0.0;
}

// ---------------------------------------------------------------------------

ImplicitTracker::ImplicitTracker(const QuadraticHamiltonian& H0,
                                 const QuadraticHamiltonian& H1,
                                 const Eigen::VectorXcd& ref) {
    if (H0.stat != Statistics::Bose || H1.stat != Statistics::Bose)
        throw UnsupportedDecomposition("implicit tracking is bosonic only");
    if (H0.B.cwiseAbs().maxCoeff() > kSymmetryTol ||
        H1.B.cwiseAbs().maxCoeff() > kSymmetryTol)
        throw UnsupportedDecomposition("implicit tracking requires B = 0");
    if (H0.A.imag().cwiseAbs().maxCoeff() > 1e-12 ||
        H1.A.imag().cwiseAbs().maxCoeff() > 1e-12)
        throw UnsupportedDecomposition("implicit tracking requires real hopping matrices");
    if (H0.N != H1.N) throw DimensionMismatch("H0 and H1 differ in size");
    A0_ = H0.A.real();
    A1_ = H1.A.real();

    const int N = H0.N;
    if (ref.size() != 2 * N) throw DimensionMismatch("tracker ref has wrong length");
    const double nc = ref.head(N).squaredNorm();
    const double nd = ref.tail(N).squaredNorm();
    sector_d_ = nd > nc;
    Eigen::VectorXcd sec = sector_d_ ? ref.tail(N) : ref.head(N);
    if (sec.imag().cwiseAbs().maxCoeff() > 1e-9 * sec.norm())
        throw UnsupportedDecomposition("tracker ref must be a real sector vector");
    w_ = sec.real().normalized();
    dense_solve(0.0);
}

void ImplicitTracker::dense_solve(double eta) {
    const Eigen::MatrixXd S = A0_ + eta * A1_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    if (es.info() != Eigen::Success) throw SolverFailure("tracker eigensolve failed");
    int best = 0;
    double best_ov = -1;
    for (int i = 0; i < S.rows(); ++i) {
        const double ov = std::abs(w_.dot(es.eigenvectors().col(i)));
        if (ov > best_ov) {
            best_ov = ov;
            best = i;
        }
    }
    if (best_ov < 0.5)
        throw TrackingLost("tracked mode lost at eta = " + std::to_string(eta) +
                           " (overlap " + std::to_string(best_ov) + ")");
    Eigen::VectorXd v = es.eigenvectors().col(best);
    if (w_.dot(v) < 0) v = -v;
    w_ = v;
    s_ = es.eigenvalues()[best];
    eta_ = eta;
}

void ImplicitTracker::refresh(double eta) {
    if (std::abs(eta - eta_) < 1e-13) return;

    const Eigen::MatrixXd S = A0_ + eta * A1_;
    const int N = int(S.rows());
    double sigma = s_ + (eta - eta_) * w_.dot(A1_ * w_);
    Eigen::VectorXd x = w_;
    const double scale = S.cwiseAbs().rowwise().sum().maxCoeff();
    bool converged = false;
    for (int it = 0; it < 8; ++it) {
        Eigen::MatrixXd shifted = S;
        shifted.diagonal().array() -= sigma;
        Eigen::VectorXd y = Eigen::PartialPivLU<Eigen::MatrixXd>(shifted).solve(x);
        if (!y.allFinite()) break;
        const double n = y.norm();
        if (n == 0) break;
        x = y / n;
        sigma = x.dot(S * x);
        if ((S * x - sigma * x).norm() <= 1e-12 * scale) {
            converged = true;
            break;
        }
    }
    if (!converged || std::abs(w_.dot(x)) < 0.9) {
        dense_solve(eta);
        return;
    }
    if (w_.dot(x) < 0) x = -x;
    w_ = x;
    s_ = sigma;
    eta_ = eta;
    (void)N;
}

double ImplicitTracker::lambda() const { return sector_d_ ? -s_ : s_; }

Eigen::VectorXcd ImplicitTracker::W2N() const {
    const int N = int(w_.size());
    Eigen::VectorXcd W = Eigen::VectorXcd::Zero(2 * N);
    if (sector_d_)
        W.tail(N) = w_.cast<std::complex<double>>();
    else
        W.head(N) = w_.cast<std::complex<double>>();
    return W;
}

double ImplicitTracker::overlap_sq(const Eigen::VectorXcd& q) const {
    const int N = int(w_.size());
    const auto sec = sector_d_ ? q.tail(N) : q.head(N);
    std::complex<double> z = 0;
    for (int i = 0; i < N; ++i) z += w_[i] * sec[i];
    return std::norm(z);
}

double solve_eta(const Eigen::VectorXcd& q, ImplicitTracker& tracker,
                 double theta_slope, double eta_seed) {
    double eta = eta_seed;
    for (int m = 0; m < kPicardCap; ++m) {
        tracker.refresh(eta);
        const double g = theta_slope * (1.0 - tracker.overlap_sq(q));
        const double next = eta + kPicardDamping * (g - eta);
        const double delta = std::abs(next - eta);
        eta = next;
        if (delta < kPicardTol) {
            tracker.refresh(eta);
            return eta;
        }
    }
    throw NoConvergence("eta fixed point did not converge in " +
                        std::to_string(kPicardCap) + " iterations");
}

double implicit_field(const Eigen::VectorXcd& q, const ImplicitTracker& tracker,
                      const Eigen::VectorXcd& h1diag, double eta, double F1) {
    const Eigen::VectorXcd W = tracker.W2N();
    std::complex<double> qH1W = 0, Wq = 0;
    for (int i = 0; i < q.size(); ++i) {
        qH1W += std::conj(q[i]) * h1diag[i] * W[i];
        Wq += std::conj(W[i]) * q[i];
    }
    return eta + F1 * (qH1W * Wq).imag();
}

// ---------------------------------------------------------------------------

Eigen::VectorXcd control_dyn_diag(const QuadraticHamiltonian& Hk) {
    Eigen::MatrixXcd offdiag = Hk.A;
    offdiag.diagonal().setZero();
    if (offdiag.cwiseAbs().maxCoeff() > kSymmetryTol ||
        Hk.B.cwiseAbs().maxCoeff() > kSymmetryTol)
        throw UnsupportedDecomposition(
            "control generators must be on-site (diagonal A, zero B)");
    Eigen::VectorXcd d(2 * Hk.N);
    d.head(Hk.N) = Hk.A.diagonal();
    d.tail(Hk.N) = -Hk.A.diagonal().conjugate();
    return d;
}

PMatrixLaw::PMatrixLaw(Eigen::VectorXcd target, std::vector<Eigen::VectorXcd> hk_diags,
                       std::vector<double> gains)
    : U_(std::move(target)), gains_(std::move(gains)) {
    if (hk_diags.size() != gains_.size())
        throw DimensionMismatch("one gain per control generator");
    vk_.reserve(hk_diags.size());
    for (const auto& d : hk_diags) {
        if (d.size() != U_.size()) throw DimensionMismatch("control diagonal size");
        vk_.push_back(d.cwiseProduct(U_));
    }
}

void PMatrixLaw::fields(const Eigen::VectorXcd& q, double, double* out) {
    const std::complex<double> b = U_.dot(q);
    for (std::size_t k = 0; k < vk_.size(); ++k)
        out[k] = 2.0 * gains_[k] * (q.dot(vk_[k]) * b).imag();
}

double PMatrixLaw::lyapunov(const Eigen::VectorXcd& q) {
    return -std::norm(U_.dot(q));
}

std::unique_ptr<ControlLaw> PMatrixLaw::clone() const {
    return std::make_unique<PMatrixLaw>(*this);
}

OverlapLaw::OverlapLaw(Eigen::VectorXcd target, Eigen::VectorXcd hk_diag, double gain)
    : QT_(std::move(target)), F1_(gain) {
    if (hk_diag.size() != QT_.size()) throw DimensionMismatch("control diagonal size");
    w_ = hk_diag.cwiseProduct(QT_);
}

void OverlapLaw::fields(const Eigen::VectorXcd& q, double, double* out) {
    out[0] = F1_ * (q.dot(w_) * QT_.dot(q)).imag();
}

double OverlapLaw::lyapunov(const Eigen::VectorXcd& q) {
    return 1.0 - std::norm(QT_.dot(q));
}

std::unique_ptr<ControlLaw> OverlapLaw::clone() const {
    return std::make_unique<OverlapLaw>(*this);
}

DualTargetLaw::DualTargetLaw(Eigen::VectorXcd target1, Eigen::VectorXcd target2,
                             Eigen::VectorXcd hk_diag, double gain)
    : QT1_(std::move(target1)), QT2_(std::move(target2)), F1_(gain) {
    if (hk_diag.size() != QT1_.size() || QT1_.size() != QT2_.size())
        throw DimensionMismatch("dual target sizes");
    if ((QT1_ - QT2_).norm() < 1e-12)
        throw DimensionMismatch("dual targets must differ");
    w1_ = hk_diag.cwiseProduct(QT1_);
    w2_ = hk_diag.cwiseProduct(QT2_);
}

void DualTargetLaw::fields(const Eigen::VectorXcd& q, double, double* out) {
    const std::complex<double> z1 = q.dot(w1_) * QT1_.dot(q);
    const std::complex<double> z2 = q.dot(w2_) * QT2_.dot(q);
    out[0] = F1_ * (z1 - z2).imag();
}

double DualTargetLaw::lyapunov(const Eigen::VectorXcd& q) {
    return 2.0 - std::norm(QT1_.dot(q)) + std::norm(QT2_.dot(q));
}

std::unique_ptr<ControlLaw> DualTargetLaw::clone() const {
    return std::make_unique<DualTargetLaw>(*this);
}

ImplicitLaw::ImplicitLaw(const QuadraticHamiltonian& H0, const QuadraticHamiltonian& H1,
                         const Eigen::VectorXcd& target, double theta_slope, double gain)
    : tracker_(H0, H1, target),
      h1diag_(control_dyn_diag(H1)),
      theta_slope_(theta_slope),
      F1_(gain) {}

void ImplicitLaw::fields(const Eigen::VectorXcd& q, double, double* out) {
    eta_ = solve_eta(q, tracker_, theta_slope_, eta_);
    out[0] = implicit_field(q, tracker_, h1diag_, eta_, F1_);
}

double ImplicitLaw::lyapunov(const Eigen::VectorXcd& q) {
    eta_ = solve_eta(q, tracker_, theta_slope_, eta_);
    return 1.0 - tracker_.overlap_sq(q);
}

std::unique_ptr<ControlLaw> ImplicitLaw::clone() const {
    return std::make_unique<ImplicitLaw>(*this);
}

SquareWaveLaw::SquareWaveLaw(std::unique_ptr<ControlLaw> inner, std::vector<double> clips,
                             double dwell)
    : inner_(std::move(inner)), clips_(std::move(clips)), dwell_(dwell) {
    if (int(clips_.size()) != inner_->num_fields())
        throw DimensionMismatch("one clip level per inner field");
    for (double c : clips_)
        if (c <= 0) throw DimensionMismatch("clip levels must be positive");
    sign_.assign(clips_.size(), 0.0);
    flip_time_.assign(clips_.size(), 0.0);
}

void SquareWaveLaw::fields(const Eigen::VectorXcd& q, double t, double* out) {
    inner_->fields(q, t, out);
    for (std::size_t k = 0; k < clips_.size(); ++k) {
        const double s = out[k] > 0 ? 1.0 : (out[k] < 0 ? -1.0 : 0.0);
        if (!armed_) {
            sign_[k] = s;
            flip_time_[k] = t;
        } else if (s != sign_[k]) {
            if (dwell_ <= 0 || t - flip_time_[k] >= dwell_) {
                sign_[k] = s;
                flip_time_[k] = t;
            }
        }
        out[k] = clips_[k] * sign_[k];
    }
    armed_ = true;
}

double SquareWaveLaw::lyapunov(const Eigen::VectorXcd& q) { return inner_->lyapunov(q); }

std::unique_ptr<ControlLaw> SquareWaveLaw::clone() const {
    auto copy = std::make_unique<SquareWaveLaw>(inner_->clone(), clips_, dwell_);
    copy->sign_ = sign_;
    copy->flip_time_ = flip_time_;
    copy->armed_ = armed_;
    return copy;
}

ScaledLaw::ScaledLaw(std::unique_ptr<ControlLaw> inner, double scale)
    : inner_(std::move(inner)), scale_(scale) {}

void ScaledLaw::fields(const Eigen::VectorXcd& q, double t, double* out) {
    inner_->fields(q, t, out);
    for (int k = 0; k < num_fields(); ++k) out[k] *= scale_;
}

std::unique_ptr<ControlLaw> ScaledLaw::clone() const {
    return std::make_unique<ScaledLaw>(inner_->clone(), scale_);
}

}  // namespace topoctl
