#pragma once

// Truncated Fock-space representation of one driven oscillator axis:
// operator matrices, the displacement unitary, the invariant-based analytic
// state and a brute-force Schroedinger propagator used as its oracle.

#include "lrdipole/auxiliary.hpp"
#include "lrdipole/params.hpp"

#include <Eigen/Dense>

#include <functional>

namespace lrdipole {

using OperatorMatrix = Eigen::MatrixXcd;

/// Amplitude mass allowed in the last two basis states.
inline constexpr double kTailTolerance = 1e-10;

/// State on the truncated basis |0>, ..., |N-1>.
class FockVector
{
public:
  explicit FockVector(Eigen::VectorXcd amps);

  /// |n> in a basis of size dim.
  static FockVector basis(Eigen::Index dim, Eigen::Index n);

  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  cplx operator[](Eigen::Index i) const { return amps_[i]; }

  double norm() const { return amps_.norm(); }

  /// |amp[N-1]|^2 + |amp[N-2]|^2
  double tail_mass() const;
  bool truncation_safe() const { return tail_mass() < kTailTolerance; }

  FockVector scaled(cplx factor) const { return FockVector(factor * amps_); }

private:
  Eigen::VectorXcd amps_;
};

struct LadderPair
{
  OperatorMatrix a;
  OperatorMatrix a_dag;
};

/// a|n> = sqrt(n)|n-1>, a^dag = a^H. Requires N >= 2.
LadderPair ladder_matrices(Eigen::Index N);

/// omega a^dag a + c(t) (a^dag + a)
OperatorMatrix hamiltonian_matrix(const OscillatorParams& params,
                                  DriveAxis axis, double t, Eigen::Index N);

/// alpha a^dag a + eta a^dag + conj(eta) a + delta
OperatorMatrix invariant_matrix(double alpha, const AuxiliaryState& aux,
                                Eigen::Index N);

OperatorMatrix invariant_matrix(const OscillatorParams& params, DriveAxis axis,
                                double t, Eigen::Index N,
                                const SolverOptions& options = {});

/// Sorted eigenvalues of the top-left `block` x `block` corner of I(t).
Eigen::VectorXd invariant_spectrum(const OscillatorParams& params,
                                   DriveAxis axis, double t, Eigen::Index N,
                                   Eigen::Index block,
                                   const SolverOptions& options = {});

using AuxiliaryProvider = std::function<AuxiliaryState(double t)>;

/// Frobenius norm of dI/dt + (1/i)[I, H1] on the top-left (N-4) block, with
/// dI/dt from a centered difference of step h. `aux` supplies eta and delta.
double liouville_residual(const OscillatorParams& params, DriveAxis axis,
                          double t, Eigen::Index N, double h,
                          const AuxiliaryProvider& aux);

double liouville_residual(const OscillatorParams& params, DriveAxis axis,
                          double t, Eigen::Index N, double h = 1e-5,
                          const SolverOptions& options = {});

/// exp(-i tau K) for Hermitian K via eigendecomposition.
OperatorMatrix hermitian_exponential(const OperatorMatrix& K, double tau);

/// exp(gamma a^dag - conj(gamma) a) |state>. Throws TruncationError if the
/// input or output violates the tail-mass bound.
FockVector displacement_apply(cplx gamma, const FockVector& state);

/// exp(-i total) D(-beta) |n> from precomputed beta and total phase.
FockVector analytic_state_from(cplx beta, double total_phase, int n,
                               Eigen::Index N);

/// Invariant-based exact solution starting from |n> at t = 0.
/// Requires n <= N/4.
FockVector analytic_state(const OscillatorParams& params, DriveAxis axis,
                          int n, double t, Eigen::Index N,
                          const SolverOptions& options = {});

using OracleObserver = std::function<void(double t, const FockVector& state)>;

/// Steps psi <- exp(-i dt H(t_mid)) psi from t = 0 to t1 with the step
/// adjusted to land on t1. Requires dt * max(omega, Omega, c0 sqrt(N)) <= 0.05.
/// The observer, if any, sees t = 0 and every step. Throws TruncationError as
/// soon as the tail mass exceeds kTailTolerance.
FockVector propagate_oracle(const OscillatorParams& params, DriveAxis axis,
                            const FockVector& psi0, double t1, double dt,
                            const OracleObserver& observer = {});

/// <psi| a |psi>
cplx expect_a(const FockVector& state);

/// <psi| M |psi>
cplx expectation(const OperatorMatrix& op, const FockVector& state);

/// <x|y>. Throws DimensionError on mismatched sizes.
cplx fidelity(const FockVector& x, const FockVector& y);

} // namespace lrdipole
