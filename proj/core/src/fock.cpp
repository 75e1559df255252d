#include "lrdipole/fock.hpp"

#include "lrdipole/errors.hpp"
#include "lrdipole/phases.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lrdipole {

namespace {

constexpr cplx I{0.0, 1.0};

void require_dim(Eigen::Index N, Eigen::Index minimum, const char* where)
{
  if (N < minimum) {
    std::ostringstream msg;
    msg << where << ": basis size must be >= " << minimum << ", got " << N;
    throw PreconditionError(msg.str());
  }
}

std::string truncation_message(const char* where, double tail, Eigen::Index N)
{
  std::ostringstream msg;
  msg << where << ": tail mass " << tail << " exceeds " << kTailTolerance
      << " on a basis of size " << N << "; try a larger basis (e.g. --fock-dim "
      << 2 * N << ")";
  return msg.str();
}

} // namespace

FockVector::FockVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {}

FockVector FockVector::basis(Eigen::Index dim, Eigen::Index n)
{
  if (n < 0 || n >= dim)
    throw PreconditionError("FockVector::basis: index outside the basis");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps[n] = 1.0;
  return FockVector(std::move(amps));
}

double FockVector::tail_mass() const
{
  const Eigen::Index n = dim();
  double mass = std::norm(amps_[n - 1]);
  if (n >= 2)
    mass += std::norm(amps_[n - 2]);
  return mass;
}

LadderPair ladder_matrices(Eigen::Index N)
{
  require_dim(N, 2, "ladder_matrices");
  OperatorMatrix a = OperatorMatrix::Zero(N, N);
  for (Eigen::Index n = 1; n < N; ++n)
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  OperatorMatrix a_dag = a.adjoint();
  return {std::move(a), std::move(a_dag)};
}

OperatorMatrix hamiltonian_matrix(const OscillatorParams& params,
                                  DriveAxis axis, double t, Eigen::Index N)
{
  require_dim(N, 2, "hamiltonian_matrix");
  const double omega = params.frequency(axis);
  const double c = drive_value(params, axis, t);
  OperatorMatrix h = OperatorMatrix::Zero(N, N);
  for (Eigen::Index n = 0; n < N; ++n)
    h(n, n) = omega * static_cast<double>(n);
  for (Eigen::Index n = 0; n + 1 < N; ++n) {
    const double off = c * std::sqrt(static_cast<double>(n + 1));
    h(n, n + 1) = off;
    h(n + 1, n) = off;
  }
  return h;
}

OperatorMatrix invariant_matrix(double alpha, const AuxiliaryState& aux,
                                Eigen::Index N)
{
  require_dim(N, 2, "invariant_matrix");
  OperatorMatrix inv = OperatorMatrix::Zero(N, N);
  for (Eigen::Index n = 0; n < N; ++n)
    inv(n, n) = alpha * static_cast<double>(n) + aux.delta;
  for (Eigen::Index n = 0; n + 1 < N; ++n) {
    const double root = std::sqrt(static_cast<double>(n + 1));
    inv(n + 1, n) = aux.eta * root;            // eta a^dag
    inv(n, n + 1) = std::conj(aux.eta) * root; // conj(eta) a
  }
  return inv;
}

OperatorMatrix invariant_matrix(const OscillatorParams& params, DriveAxis axis,
                                double t, Eigen::Index N,
                                const SolverOptions& options)
{
  return invariant_matrix(params.alpha,
                          auxiliary_state(params, axis, t, options), N);
}

Eigen::VectorXd invariant_spectrum(const OscillatorParams& params,
                                   DriveAxis axis, double t, Eigen::Index N,
                                   Eigen::Index block,
                                   const SolverOptions& options)
{
  if (block < 1 || block > N)
    throw PreconditionError("invariant_spectrum: block must lie in [1, N]");
  const OperatorMatrix inv = invariant_matrix(params, axis, t, N, options);
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(
    inv.topLeftCorner(block, block), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

namespace {

double liouville_residual_from(const OscillatorParams& params, DriveAxis axis,
                               double t, Eigen::Index N, double h,
                               const AuxiliaryState& before,
                               const AuxiliaryState& at,
                               const AuxiliaryState& after)
{
  const OperatorMatrix inv = invariant_matrix(params.alpha, at, N);
  const OperatorMatrix forward = invariant_matrix(params.alpha, after, N);
  const OperatorMatrix backward = invariant_matrix(params.alpha, before, N);
  const OperatorMatrix ham = hamiltonian_matrix(params, axis, t, N);

  const OperatorMatrix commutator = inv * ham - ham * inv;
  const OperatorMatrix residual =
    (forward - backward) / (2.0 * h) - I * commutator;
  const Eigen::Index block = N - 4;
  return residual.topLeftCorner(block, block).norm();
}

void require_liouville_inputs(Eigen::Index N, double h)
{
  require_dim(N, 6, "liouville_residual");
  if (!(h > 0.0))
    throw PreconditionError("liouville_residual: h must be positive");
}

} // namespace

double liouville_residual(const OscillatorParams& params, DriveAxis axis,
                          double t, Eigen::Index N, double h,
                          const AuxiliaryProvider& aux)
{
  require_liouville_inputs(N, h);
  return liouville_residual_from(params, axis, t, N, h, aux(t - h), aux(t),
                                 aux(t + h));
}

double liouville_residual(const OscillatorParams& params, DriveAxis axis,
                          double t, Eigen::Index N, double h,
                          const SolverOptions& options)
{
  require_liouville_inputs(N, h);
  if (axis == DriveAxis::X && options.path == EtaPath::ClosedForm) {
    return liouville_residual(params, axis, t, N, h, [&](double s) {
      return auxiliary_state(params, axis, s, options);
    });
  }
  // One quadrature for all three points keeps the difference quotient free
  // of grid-to-grid quadrature noise.
  if (!(t - h > 0.0))
    throw PreconditionError("liouville_residual: numeric path needs t > h");
  const double grid[] = {0.0, t - h, t, t + h};
  const std::vector<cplx> eta = eta_on_grid(params, axis, grid, options);
  auto state = [&](std::size_t k) {
    return AuxiliaryState{eta[k], delta_of_eta(eta[k], params.alpha)};
  };
  return liouville_residual_from(params, axis, t, N, h, state(1), state(2),
                                 state(3));
}

OperatorMatrix hermitian_exponential(const OperatorMatrix& K, double tau)
{
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(K);
  if (solver.info() != Eigen::Success)
    throw NonFiniteError("hermitian_exponential: eigensolver failed");
  const Eigen::VectorXcd phases =
    (-I * tau * solver.eigenvalues().cast<cplx>()).array().exp();
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

FockVector displacement_apply(cplx gamma, const FockVector& state)
{
  const Eigen::Index N = state.dim();
  require_dim(N, 2, "displacement_apply");
  if (!state.truncation_safe())
    throw TruncationError(
      truncation_message("displacement_apply (input)", state.tail_mass(), N));
  if (gamma == cplx(0.0, 0.0))
    return state;

  // exp(G) with G = gamma a^dag - conj(gamma) a = -i K, K = i G Hermitian.
  OperatorMatrix K = OperatorMatrix::Zero(N, N);
  for (Eigen::Index n = 0; n + 1 < N; ++n) {
    const double root = std::sqrt(static_cast<double>(n + 1));
    K(n + 1, n) = I * gamma * root;
    K(n, n + 1) = -I * std::conj(gamma) * root;
  }
  FockVector out(hermitian_exponential(K, 1.0) * state.amps());
  if (!out.truncation_safe())
    throw TruncationError(
      truncation_message("displacement_apply", out.tail_mass(), N));
  return out;
}

FockVector analytic_state_from(cplx beta, double total_phase, int n,
                               Eigen::Index N)
{
  const FockVector displaced = displacement_apply(-beta, FockVector::basis(N, n));
  return displaced.scaled(std::exp(-I * total_phase));
}

FockVector analytic_state(const OscillatorParams& params, DriveAxis axis,
                          int n, double t, Eigen::Index N,
                          const SolverOptions& options)
{
  require_dim(N, 2, "analytic_state");
  if (n < 0 || 4 * static_cast<Eigen::Index>(n) > N)
    throw PreconditionError("analytic_state: need 0 <= n <= N/4");
  const AuxiliaryState aux = auxiliary_state(params, axis, t, options);
  const PhaseBreakdown phase = phases_at(params, axis, n, t, options);
  return analytic_state_from(beta_of_eta(aux.eta, params.alpha), phase.total,
                             n, N);
}

FockVector propagate_oracle(const OscillatorParams& params, DriveAxis axis,
                            const FockVector& psi0, double t1, double dt,
                            const OracleObserver& observer)
{
  const Eigen::Index N = psi0.dim();
  require_dim(N, 2, "propagate_oracle");
  if (!(dt > 0.0) || !(t1 > 0.0))
    throw PreconditionError("propagate_oracle: t1 and dt must be positive");

  const double omega = params.frequency(axis);
  const double c0 = std::abs(drive_amplitude(params, axis));
  const double scale =
    std::max({omega, params.Omega, c0 * std::sqrt(static_cast<double>(N))});
  if (dt * scale > 0.05) {
    std::ostringstream msg;
    msg << "propagate_oracle: dt=" << dt << " too large, need dt <= "
        << 0.05 / scale;
    throw PreconditionError(msg.str());
  }
  if (!psi0.truncation_safe())
    throw TruncationError(
      truncation_message("propagate_oracle (input)", psi0.tail_mass(), N));

  const auto steps = std::max<long long>(1, std::llround(t1 / dt));
  const double h = t1 / static_cast<double>(steps);

  Eigen::VectorXd diag(N);
  Eigen::VectorXd sub(N - 1);
  for (Eigen::Index n = 0; n < N; ++n)
    diag[n] = omega * static_cast<double>(n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  Eigen::VectorXcd psi = psi0.amps();
  Eigen::VectorXd re(N), im(N);
  Eigen::VectorXcd rotated(N);

  if (observer)
    observer(0.0, psi0);

  for (long long step = 0; step < steps; ++step) {
    const double t_mid = (static_cast<double>(step) + 0.5) * h;
    const double c = drive_value(params, axis, t_mid);
    for (Eigen::Index n = 0; n + 1 < N; ++n)
      sub[n] = c * std::sqrt(static_cast<double>(n + 1));

    // H(t_mid) is real symmetric tridiagonal: H = Q diag(lambda) Q^T.
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::MatrixXd& Q = solver.eigenvectors();
    const Eigen::VectorXd& lambda = solver.eigenvalues();

    re.noalias() = Q.transpose() * psi.real();
    im.noalias() = Q.transpose() * psi.imag();
    for (Eigen::Index k = 0; k < N; ++k)
      rotated[k] = std::exp(-I * (h * lambda[k])) * cplx(re[k], im[k]);
    re.noalias() = Q * rotated.real();
    im.noalias() = Q * rotated.imag();
    psi.real() = re;
    psi.imag() = im;

    const double tail = std::norm(psi[N - 1]) + std::norm(psi[N - 2]);
    if (tail >= kTailTolerance)
      throw TruncationError(truncation_message("propagate_oracle", tail, N));

    if (observer)
      observer(static_cast<double>(step + 1) * h, FockVector(psi));
  }
  return FockVector(std::move(psi));
}

cplx expect_a(const FockVector& state)
{
  cplx sum{0.0, 0.0};
  for (Eigen::Index n = 0; n + 1 < state.dim(); ++n)
    sum += std::conj(state[n]) * std::sqrt(static_cast<double>(n + 1)) *
           state[n + 1];
  return sum;
}

cplx expectation(const OperatorMatrix& op, const FockVector& state)
{
  if (op.rows() != state.dim() || op.cols() != state.dim())
    throw DimensionError("expectation: operator and state sizes differ");
  return state.amps().dot(op * state.amps());
}

cplx fidelity(const FockVector& x, const FockVector& y)
{
  if (x.dim() != y.dim())
    throw DimensionError("fidelity: states have different basis sizes");
  return x.amps().dot(y.amps());
}

} // namespace lrdipole
