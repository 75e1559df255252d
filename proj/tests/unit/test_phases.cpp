#include "lrdipole/errors.hpp"
#include "lrdipole/phases.hpp"
#include "lrdipole/quadrature.hpp"

#include "reference_oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace lrdipole;
using namespace lrdipole::testing;

namespace {

constexpr double kPi = std::numbers::pi;

OscillatorParams reference()
{
  return {kRefMu, kRefOmega1, kRefOmega2, kRefOmega, kRefQ, kRefE, 1.0};
}

std::vector<cplx> circle(std::size_t samples, bool counterclockwise)
{
  std::vector<cplx> out(samples + 1);
  for (std::size_t i = 0; i <= samples; ++i) {
    const double angle = 2.0 * kPi * static_cast<double>(i) / samples;
    out[i] = std::polar(1.0, counterclockwise ? angle : -angle);
  }
  out.back() = out.front();
  return out;
}

} // namespace

TEST(PhaseIntegrand, BareOscillator)
{
  OscillatorParams p = reference();
  p.E = 0.0;
  PhaseRates r = phase_integrand(p, DriveAxis::X, 0, 3.0);
  EXPECT_EQ(r.geometric, 0.0);
  EXPECT_EQ(r.dynamical, 0.0);
  p.omega1 = 2.0;
  r = phase_integrand(p, DriveAxis::X, 3, 3.0);
  EXPECT_EQ(r.geometric, 0.0);
  EXPECT_EQ(r.dynamical, 6.0);
}

TEST(PhaseIntegrand, StaticFieldHasNoGeometricRate)
{
  OscillatorParams p = reference();
  p.Omega = 0.0;
  SolverOptions options;
  options.initial_condition = InitialCondition::HomogeneousFree;
  for (double t : {0.0, 5.0, 50.0})
    EXPECT_NEAR(phase_integrand(p, DriveAxis::X, 1, t, options).geometric, 0.0, 1e-16);
}

TEST(PhaseIntegrand, GeometricRateIsMinusImBetaStarBetaDot)
{
  const OscillatorParams p = reference();
  for (double t : {0.4, 2.0, 11.0}) {
    const cplx beta = closed_form_eta(p, t);
    const cplx rate = beta_dot(p, DriveAxis::X, beta, t);
    // (i/2)(b' b* - b'* b), evaluated literally
    const cplx literal = cplx(0.0, 0.5) * (rate * std::conj(beta) - std::conj(rate) * beta);
    EXPECT_LT(std::abs(literal.imag()), 1e-14);
    EXPECT_NEAR(phase_integrand(p, DriveAxis::X, 0, t).geometric, literal.real(), 1e-15);
  }
}

TEST(AccumulatePhases, BareOscillatorFullTurn)
{
  OscillatorParams p = reference();
  p.E = 0.0;
  const double grid[] = {0.0, kPi, 2.0 * kPi};
  const auto phases = accumulate_phases(p, DriveAxis::X, 1, grid);
  EXPECT_NEAR(phases.back().total, 2.0 * kPi, 1e-13);
  EXPECT_EQ(phases.back().geometric, 0.0);
}

TEST(AccumulatePhases, BareOscillatorIsLinear)
{
  OscillatorParams p = reference();
  p.E = 0.0;
  p.omega1 = 1.7;
  const std::vector<double> grid = uniform_grid(30.0, 0.5);
  const auto phases = accumulate_phases(p, DriveAxis::X, 4, grid);
  for (const PhaseBreakdown& ph : phases)
    EXPECT_NEAR(ph.total, 4 * 1.7 * ph.t, 1e-11);
}

TEST(AccumulatePhases, DecompositionAndContinuity)
{
  const OscillatorParams p = reference();
  const std::vector<double> grid = uniform_grid(100.0, 0.25);
  const auto phases = accumulate_phases(p, DriveAxis::X, 2, grid);
  EXPECT_EQ(phases.front().total, 0.0);
  for (const PhaseBreakdown& ph : phases)
    EXPECT_NEAR(ph.total, ph.dynamical - ph.geometric, 1e-12);
  // n = 2 dominates: the total keeps growing past 2 pi without wrapping.
  EXPECT_GT(phases.back().total, 150.0);
}

TEST(AccumulatePhases, GridHalvingIsStable)
{
  const OscillatorParams p = reference();
  const std::vector<double> coarse = uniform_grid(50.0, 0.2);
  const std::vector<double> fine = uniform_grid(50.0, 0.1);
  const auto a = accumulate_phases(p, DriveAxis::X, 1, coarse);
  const auto b = accumulate_phases(p, DriveAxis::X, 1, fine);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(a[k].total, b[2 * k].total, 1e-10);
    EXPECT_NEAR(a[k].geometric, b[2 * k].geometric, 1e-10);
  }
}

TEST(AccumulatePhases, GeometricPhaseIndependentOfQuantumNumber)
{
  const OscillatorParams p = reference();
  const std::vector<double> grid = uniform_grid(20.0, 0.5);
  const auto zero = accumulate_phases(p, DriveAxis::X, 0, grid);
  const auto five = accumulate_phases(p, DriveAxis::X, 5, grid);
  for (std::size_t k = 0; k < grid.size(); ++k)
    EXPECT_EQ(zero[k].geometric, five[k].geometric);
}

TEST(AccumulatePhases, AlphaInvariance)
{
  OscillatorParams p = reference();
  const double grid[] = {0.0, 12.0, 24.0};
  const auto base = accumulate_phases(p, DriveAxis::X, 1, grid);
  p.alpha = 4.5;
  const auto scaled = accumulate_phases(p, DriveAxis::X, 1, grid);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(base[k].geometric, scaled[k].geometric, 1e-12);
    EXPECT_NEAR(base[k].total, scaled[k].total, 1e-12);
  }
}

TEST(AccumulatePhases, NumericPathAgreesWithClosedForm)
{
  const OscillatorParams p = reference();
  SolverOptions numeric;
  numeric.path = EtaPath::Numeric;
  const double grid[] = {0.0, 15.0, 30.0};
  const auto a = accumulate_phases(p, DriveAxis::X, 1, grid);
  const auto b = accumulate_phases(p, DriveAxis::X, 1, grid, numeric);
  for (std::size_t k = 0; k < 3; ++k)
    EXPECT_NEAR(a[k].total, b[k].total, 1e-9);
}

TEST(AccumulatePhases, RejectsNonUniformGrid)
{
  const double grid[] = {0.0, 1.0, 3.0};
  EXPECT_THROW(accumulate_phases(reference(), DriveAxis::X, 0, grid), GridError);
}

TEST(CommensuratePeriod, SimpleRatios)
{
  LoopSpec s = commensurate_period(1.0, 0.5);
  EXPECT_EQ(s.p, 2);
  EXPECT_EQ(s.q, 1);
  EXPECT_NEAR(s.period, 4.0 * kPi, 1e-12);

  s = commensurate_period(3.0, 2.0);
  EXPECT_EQ(s.p, 3);
  EXPECT_EQ(s.q, 2);
  EXPECT_NEAR(s.period, 2.0 * kPi, 1e-12);

  s = commensurate_period(1.0, 0.3);
  EXPECT_EQ(s.p, 10);
  EXPECT_EQ(s.q, 3);
  // Both frequencies complete whole turns.
  EXPECT_NEAR(std::remainder(1.0 * s.period, 2.0 * kPi), 0.0, 1e-12 * s.period);
  EXPECT_NEAR(std::remainder(0.3 * s.period, 2.0 * kPi), 0.0, 1e-12 * s.period);
}

TEST(CommensuratePeriod, IrrationalRatio)
{
  EXPECT_THROW(commensurate_period(1.0, 1.0 / std::sqrt(2.0), 100), IncommensurateError);
  EXPECT_THROW(commensurate_period(1.0, 0.0), PreconditionError);
}

TEST(LoopSignedArea, UnitCircle)
{
  EXPECT_NEAR(loop_signed_area(circle(10000, true)), kPi, 1e-6);
  EXPECT_NEAR(loop_signed_area(circle(10000, false)), -kPi, 1e-6);
}

TEST(LoopSignedArea, OpenCurveRejected)
{
  std::vector<cplx> arc = circle(100, true);
  arc.pop_back();
  EXPECT_THROW(loop_signed_area(arc), OpenCurveError);
}

TEST(LoopSignedArea, DualityWithGeometricPhase)
{
  OscillatorParams p = reference();
  p.Omega = 0.5;
  const LoopSpec loop = commensurate_period(p.omega1, p.Omega);
  for (InitialCondition ic : {InitialCondition::DefaultB, InitialCondition::HomogeneousFree}) {
    SolverOptions options;
    options.initial_condition = ic;
    constexpr std::size_t samples = 20000;
    std::vector<double> times(samples + 1);
    for (std::size_t i = 0; i <= samples; ++i)
      times[i] = loop.period * static_cast<double>(i) / samples;
    const double area = loop_signed_area(beta_on_grid(p, DriveAxis::X, times, options));
    const double geometric = phases_at(p, DriveAxis::X, 0, loop.period, options).geometric;
    EXPECT_NEAR(geometric, -2.0 * area, 1e-6);
  }
}

TEST(BerrySweep, ZeroField)
{
  OscillatorParams p = reference();
  p.E = 0.0;
  const double omegas[] = {0.1, 0.2};
  for (const BerryRow& row : berry_sweep(p, omegas)) {
    EXPECT_EQ(row.phase_per_cycle, 0.0);
    EXPECT_EQ(row.loop_area, 0.0);
  }
}

TEST(BerrySweep, RatioConvergesAndMatchesEllipse)
{
  const OscillatorParams p = reference();
  const double omegas[] = {0.1, 0.05, 0.025};
  const auto rows = berry_sweep(p, omegas);
  ASSERT_EQ(rows.size(), 3u);
  const double d1 = std::abs(rows[1].ratio - rows[0].ratio);
  const double d2 = std::abs(rows[2].ratio - rows[1].ratio);
  EXPECT_GE(d1 / d2, 2.0);
  for (const BerryRow& row : rows) {
    OscillatorParams q = p;
    q.Omega = row.Omega;
    EXPECT_NEAR(row.phase_per_cycle, ellipse_cycle_phase(q), 1e-6 * ellipse_cycle_phase(q));
    EXPECT_LT(row.area_check_residual, 1e-6);
  }
}

TEST(BerrySweep, CyclesRepeat)
{
  const double omegas[] = {0.2};
  const auto rows = berry_sweep(reference(), omegas, 3);
  ASSERT_EQ(rows.front().cycle_phases.size(), 3u);
  for (double phase : rows.front().cycle_phases)
    EXPECT_NEAR(phase, rows.front().cycle_phases.front(), 1e-9);
}

TEST(BerrySweep, RejectsNonAdiabaticOmega)
{
  const double omegas[] = {0.6};
  EXPECT_THROW(berry_sweep(reference(), omegas), PreconditionError);
}
