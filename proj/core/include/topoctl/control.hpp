#pragma once

#include <memory>
#include <vector>

#include "topoctl/spectral.hpp"

namespace topoctl {

// ---------------------------------------------------------------------------
// Free-standing field formulas (dense, used directly by tests and wrapped by
// the law objects below).

// P = -U^T U^T-dagger for the target column; V(Q) = Q^dag P Q.
Eigen::MatrixXcd build_p_matrix(const SpectralDecomposition& spec, int target_index_1based);

// f_k = i F_k Q^dag [Hk, P] Q, the choice that makes dV/dt <= 0.
// Imaginary residual above 1e-9 throws NonRealField.
double p_matrix_field(const Eigen::VectorXcd& q, const Eigen::MatrixXcd& P,
                      const Eigen::MatrixXcd& Hk, double Fk);

// f = F Im(Q^dag Hk Q_T Q_T^dag Q) for V = 1 - |Q^dag Q_T|^2.
double overlap_field(const Eigen::VectorXcd& q, const Eigen::VectorXcd& QT,
                     const Eigen::MatrixXcd& Hk, double Fk);

// f = F Im(Q^dag Hk Q_T1 Q_T1^dag Q - Q^dag Hk Q_T2 Q_T2^dag Q)
// for V = 2 - |Q^dag Q_T1|^2 + |Q^dag Q_T2|^2.
double dual_target_field(const Eigen::VectorXcd& q, const Eigen::VectorXcd& QT1,
                         const Eigen::VectorXcd& QT2, const Eigen::MatrixXcd& Hk,
                         double Fk);

// +F' / -F' / 0 by the sign of the inner field.
double square_wave_wrap(double inner_field, double Fclip);

// ---------------------------------------------------------------------------
// Tracked eigenpair machinery for the implicit law. B = 0 bosonic chains
// decouple into annihilation (A) and creation (-A) sector blocks, so the
// tracked mode lives in one N-dimensional real-symmetric problem. refresh()
// warm-starts inverse iteration from the cached pair and falls back to a
// dense solve when the iteration degrades; results match tracked_eigenvector
// to solver precision.
class ImplicitTracker {
public:
    ImplicitTracker(const QuadraticHamiltonian& H0, const QuadraticHamiltonian& H1,
                    const Eigen::VectorXcd& ref);

    void refresh(double eta);  // throws TrackingLost on an avoided-crossing jump

    double eta_cached() const { return eta_; }
    double lambda() const;                 // eigenvalue of the 2N dynamics matrix
    const Eigen::VectorXd& w() const { return w_; }
    bool creation_sector() const { return sector_d_; }
    Eigen::VectorXcd W2N() const;          // sector vector embedded in 2N

    // |W^dag q|^2 without materializing the embedding
    double overlap_sq(const Eigen::VectorXcd& q) const;

private:
    void dense_solve(double eta);

    Eigen::MatrixXd A0_, A1_;
    bool sector_d_ = false;  // true: creation sector, block -(A0 + eta A1)
    Eigen::VectorXd w_;
    double s_ = 0;           // eigenvalue of A0 + eta A1 along the tracked branch
    double eta_ = 0;
};

// Fixed point of eta = theta_slope * (1 - |Q^dag W_{T,eta}|^2), damped Picard
// iteration seeded from eta_seed (tolerance 1e-10, cap 200 -> NoConvergence).
// The tracker is left refreshed at the returned eta.
double solve_eta(const Eigen::VectorXcd& q, ImplicitTracker& tracker,
                 double theta_slope, double eta_seed);

// f1 = eta + F1 Im(Q^dag H1 W W^dag Q), evaluated on the tracker's current W.
double implicit_field(const Eigen::VectorXcd& q, const ImplicitTracker& tracker,
                      const Eigen::VectorXcd& h1diag, double eta, double F1);

// ---------------------------------------------------------------------------
// Law objects consumed by evolve(). fields() may mutate internal state (the
// implicit tracker, square-wave dwell memory), so each trajectory owns its
// own clone.

class ControlLaw {
public:
    virtual ~ControlLaw() = default;
    virtual int num_fields() const = 0;
    virtual void fields(const Eigen::VectorXcd& q, double t, double* out) = 0;
    virtual double lyapunov(const Eigen::VectorXcd& q) = 0;
    // square-wave laws sample the sign once per step and hold it through the
    // integrator stages; continuous laws re-evaluate per stage
    virtual bool hold_per_step() const { return false; }
    virtual std::unique_ptr<ControlLaw> clone() const = 0;
};

// Diagonal dynamics operator of a number-operator control: the 2N diagonal
// of its dynamics matrix (site s -> +1 at s, -1 at N+s).
Eigen::VectorXcd control_dyn_diag(const QuadraticHamiltonian& Hk);

class PMatrixLaw final : public ControlLaw {
public:
    // target: eigenvector defining P = -U U^dag; hk_diags: one diagonal per control
    PMatrixLaw(Eigen::VectorXcd target, std::vector<Eigen::VectorXcd> hk_diags,
               std::vector<double> gains);

    int num_fields() const override { return int(gains_.size()); }
    void fields(const Eigen::VectorXcd& q, double t, double* out) override;
    double lyapunov(const Eigen::VectorXcd& q) override;
    std::unique_ptr<ControlLaw> clone() const override;

private:
    Eigen::VectorXcd U_;
    std::vector<Eigen::VectorXcd> vk_;  // Hk U, precomputed
    std::vector<double> gains_;
};

class OverlapLaw final : public ControlLaw {
public:
    OverlapLaw(Eigen::VectorXcd target, Eigen::VectorXcd hk_diag, double gain);

    int num_fields() const override { return 1; }
    void fields(const Eigen::VectorXcd& q, double t, double* out) override;
    double lyapunov(const Eigen::VectorXcd& q) override;
    std::unique_ptr<ControlLaw> clone() const override;

private:
    Eigen::VectorXcd QT_, w_;  // w = H1 QT
    double F1_;
};

class DualTargetLaw final : public ControlLaw {
public:
    DualTargetLaw(Eigen::VectorXcd target1, Eigen::VectorXcd target2,
                  Eigen::VectorXcd hk_diag, double gain);

    int num_fields() const override { return 1; }
    void fields(const Eigen::VectorXcd& q, double t, double* out) override;
    double lyapunov(const Eigen::VectorXcd& q) override;
    std::unique_ptr<ControlLaw> clone() const override;

private:
    Eigen::VectorXcd QT1_, QT2_, w1_, w2_;
    double F1_;
};

class ImplicitLaw final : public ControlLaw {
public:
    ImplicitLaw(const QuadraticHamiltonian& H0, const QuadraticHamiltonian& H1,
                const Eigen::VectorXcd& target, double theta_slope, double gain);

    int num_fields() const override { return 1; }
    void fields(const Eigen::VectorXcd& q, double t, double* out) override;
    double lyapunov(const Eigen::VectorXcd& q) override;
    std::unique_ptr<ControlLaw> clone() const override;

    double eta() const { return eta_; }

private:
    ImplicitTracker tracker_;
    Eigen::VectorXcd h1diag_;
    double theta_slope_, F1_;
    double eta_ = 0;
};

class SquareWaveLaw final : public ControlLaw {
public:
    // dwell: minimum time between sign flips (0 = none)
    SquareWaveLaw(std::unique_ptr<ControlLaw> inner, std::vector<double> clips,
                  double dwell = 0);

    int num_fields() const override { return int(clips_.size()); }
    void fields(const Eigen::VectorXcd& q, double t, double* out) override;
    double lyapunov(const Eigen::VectorXcd& q) override;
    bool hold_per_step() const override { return true; }
    std::unique_ptr<ControlLaw> clone() const override;

private:
    std::unique_ptr<ControlLaw> inner_;
    std::vector<double> clips_;
    double dwell_;
    std::vector<double> sign_, flip_time_;
    bool armed_ = false;
};

// (1 + delta) scaling of every emitted field; the control-perturbation
// protocol.
class ScaledLaw final : public ControlLaw {
public:
    ScaledLaw(std::unique_ptr<ControlLaw> inner, double scale);

    int num_fields() const override { return inner_->num_fields(); }
    void fields(const Eigen::VectorXcd& q, double t, double* out) override;
    double lyapunov(const Eigen::VectorXcd& q) override { return inner_->lyapunov(q); }
    bool hold_per_step() const override { return inner_->hold_per_step(); }
    std::unique_ptr<ControlLaw> clone() const override;

private:
    std::unique_ptr<ControlLaw> inner_;
    double scale_;
};

}  // namespace topoctl
