#include "lrdipole/errors.hpp"
#include "lrdipole/params.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lrdipole;

namespace {

OscillatorParams unit_params()
{
  OscillatorParams p;
  p.mu = 1.0;
  p.omega1 = 1.0;
  p.omega2 = 1.0;
  p.Q = 1.0;
  p.E = 1.0;
  return p;
}

} // namespace

TEST(DriveAmplitude, UnitConstants)
{
  EXPECT_NEAR(drive_amplitude(unit_params(), DriveAxis::X), 0.70710678, 1e-8);
}

TEST(DriveAmplitude, ZeroField)
{
  OscillatorParams p = unit_params();
  p.E = 0.0;
  EXPECT_EQ(drive_amplitude(p, DriveAxis::X), 0.0);
}

TEST(DriveAmplitude, Arithmetic)
{
  OscillatorParams p;
  p.Q = 2.0;
  p.E = 3.0;
  p.mu = 0.5;
  p.omega1 = 2.0;
  EXPECT_NEAR(drive_amplitude(p, DriveAxis::X), 4.24264069, 1e-8);
}

TEST(DriveAmplitude, SignFollowsCoupling)
{
  OscillatorParams p = unit_params();
  p.E = -2.0;
  EXPECT_LT(drive_amplitude(p, DriveAxis::Y), 0.0);
}

TEST(DriveValue, InitialValues)
{
  OscillatorParams p = unit_params();
  p.Omega = 0.7;
  EXPECT_EQ(drive_value(p, DriveAxis::X, 0.0), drive_amplitude(p, DriveAxis::X));
  EXPECT_EQ(drive_value(p, DriveAxis::Y, 0.0), 0.0);
}

TEST(DriveValue, CosineZero)
{
  OscillatorParams p = unit_params();
  p.Omega = 0.5;
  EXPECT_NEAR(drive_value(p, DriveAxis::X, std::numbers::pi), 0.0, 1e-15);
}

TEST(DriveValue, ParityAndPeriodicity)
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> time(-50.0, 50.0);
  OscillatorParams p = unit_params();
  p.Omega = 0.37;
  p.omega2 = 2.1;
  const double period = 2.0 * std::numbers::pi / p.Omega;
  for (int i = 0; i < 200; ++i) {
    const double t = time(rng);
    const double cx = drive_value(p, DriveAxis::X, t);
    const double sy = drive_value(p, DriveAxis::Y, t);
    EXPECT_NEAR(drive_value(p, DriveAxis::X, -t), cx, 1e-15 * std::max(1.0, std::abs(cx)));
    EXPECT_NEAR(drive_value(p, DriveAxis::Y, -t), -sy, 1e-15 * std::max(1.0, std::abs(sy)));
    EXPECT_NEAR(drive_value(p, DriveAxis::X, t + period), cx, 1e-12);
    EXPECT_NEAR(drive_value(p, DriveAxis::Y, t + period), sy, 1e-12);
  }
}

TEST(DriveValue, DependsOnlyOnFieldCouplingProduct)
{
  OscillatorParams a = unit_params();
  a.Q = 0.4;
  a.E = 0.5;
  a.Omega = 0.3;
  OscillatorParams b = a;
  b.Q = 0.4 * 8.0;
  b.E = 0.5 / 8.0;
  for (double t : {0.0, 0.3, 4.0, 17.5})
    EXPECT_NEAR(drive_value(a, DriveAxis::X, t), drive_value(b, DriveAxis::X, t), 1e-16);
}

TEST(OscillatorParams, Validation)
{
  OscillatorParams p;
  EXPECT_NO_THROW(p.validate());
  p.alpha = 0.0;
  EXPECT_THROW(p.validate(), PreconditionError);
  p = OscillatorParams{};
  p.mu = -1.0;
  EXPECT_THROW(p.validate(), PreconditionError);
  p = OscillatorParams{};
  p.Omega = -0.1;
  EXPECT_THROW(p.validate(), PreconditionError);
  p = OscillatorParams{};
  p.omega2 = 0.0;
  EXPECT_THROW(p.validate(), PreconditionError);
  p = OscillatorParams{};
  p.E = std::nan("");
  EXPECT_THROW(p.validate(), PreconditionError);
}
