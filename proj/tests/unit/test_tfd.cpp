#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thermoqubit/gate_encoding.hpp"
#include "thermoqubit/observables.hpp"
#include "thermoqubit/tfd.hpp"

namespace thermoqubit {
namespace {

TEST(ThermalVacuumDensity, GeometricDiagonal) {
  for (double n_bar : {0.0, 0.1, 0.5, 1.0, 10.0}) {
    const ThermalParams p = ThermalParams::from_n_bar(n_bar);
    const FockMatrix rho = thermal_vacuum_density(p);
    const auto geo = testing::geometric_diagonal(n_bar, rho.cutoff());
    for (int i = 0; i <= rho.cutoff(); ++i) {
      EXPECT_NEAR(rho(i, i).real(), geo[static_cast<std::size_t>(i)], 1e-14);
    }
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
    EXPECT_NEAR(number_moments(rho).mean, n_bar, 1e-8 * std::max(1.0, n_bar));
  }
}

TEST(ThermalVacuumDensity, TraceBelowOneByTailMass) {
  const ThermalParams p = ThermalParams::from_n_bar(1.0);
  const FockMatrix rho = thermal_vacuum_density(p, 10, 1.0);
  EXPECT_NEAR(1.0 - rho.trace().real(), vacuum_tail_mass(p, 10), 1e-15);
}

TEST(BogoliubovUnitary, UnitaryAndTwoModeSqueezes) {
  const ThermalParams p = ThermalParams::from_n_bar(0.5);
  const FockMatrix u = bogoliubov_unitary(p, 30);
  EXPECT_LT(max_abs_difference(u.adjoint() * u, FockMatrix::identity(30, 2)), 1e-12);
  const FockVector vac = u * FockVector::basis(30, 0, 0);
  const auto series = testing::squeezed_vacuum_series(p.theta, 30);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_NEAR(std::abs(vac[static_cast<std::size_t>(n * 31 + n)] - Complex(series[static_cast<std::size_t>(n)])),
                0.0, 1e-10);
  }
}

TEST(BogoliubovUnitary, SectorBlocksEqualDenseExponential) {
  for (double n_bar : {0.1, 1.0}) {
    const ThermalParams p = ThermalParams::from_n_bar(n_bar);
    const int cutoff = 8;
    const FockMatrix dense = matrix_exponential(bogoliubov_generator(p, cutoff));
    const FockMatrix blocks = bogoliubov_unitary(p, cutoff, 1.0);
    EXPECT_LT(max_abs_difference(dense, blocks), 1e-13) << n_bar;
  }
}

TEST(BogoliubovUnitary, DenseCap) {
  EXPECT_THROW(bogoliubov_unitary(ThermalParams::from_n_bar(0.1), 65), CutoffError);
}

TEST(ThermalVacuumState, ReductionAndMean) {
  const ThermalParams p = ThermalParams::from_n_bar(0.5);
  const FockVector vac = thermal_vacuum_state(p, kAutoCutoff, 1e-14);
  EXPECT_NEAR(vac.norm(), 1.0, 1e-12);
  const FockMatrix reduced = reduced_density(vac, Mode::original);
  const auto geo = testing::geometric_diagonal(0.5, vac.cutoff());
  double off = 0.0;
  for (int i = 0; i <= vac.cutoff(); ++i) {
    EXPECT_NEAR(reduced(i, i).real(), geo[static_cast<std::size_t>(i)], 1e-10);
    for (int j = 0; j <= vac.cutoff(); ++j) if (i != j) off = std::max(off, std::abs(reduced(i, j)));
  }
  EXPECT_EQ(off, 0.0);
  const FockVector n_vac = apply(number_operator(vac.cutoff()), vac, Mode::original);
  EXPECT_NEAR(vac.data().dot(n_vac.data()).real(), 0.5, 1e-10);
}

TEST(ThermalVacuumState, ZeroTemperatureIsDoubledVacuum) {
  const FockVector vac = thermal_vacuum_state(ThermalParams::from_n_bar(0.0));
  EXPECT_EQ(vac[0], Complex(1.0));
  EXPECT_NEAR(vac.norm(), 1.0, 0.0);
}

TEST(ThermalNumberStates, OrthonormalUpToTail) {
  const ThermalParams p = ThermalParams::from_n_bar(0.3);
  const auto states = thermal_number_states(p, 80);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex g = states[i].data().dot(states[j].data());
      EXPECT_NEAR(std::abs(g - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12) << i << j;
    }
  }
}

TEST(ThermalNumberStates, EqualsBogoliubovImageOfNumberStates) {
  // |m(β)> built by raising on the thermal vacuum equals U(β)|m, 0~> exactly.
  const ThermalParams p = ThermalParams::from_n_bar(0.2);
  const int cutoff = 40;
  const auto states = thermal_number_states(p, cutoff);
  const FockMatrix u = bogoliubov_unitary(p, cutoff);
  for (std::size_t i = 0; i < 4; ++i) {
    const FockVector ref = u * FockVector::basis(cutoff, PhysicalAmplitudes::kFockLevels[i], 0);
    // Compare on the low part, away from the truncation edge.
    double worst = 0.0;
    for (int nt = 0; nt <= 20; ++nt)
      for (int n = 0; n <= 20; ++n) {
        const auto idx = static_cast<std::size_t>(nt * (cutoff + 1) + n);
        worst = std::max(worst, std::abs(ref[idx] - states[i][idx]));
      }
    EXPECT_LT(worst, 1e-10) << i;
  }
}

class TripleAgreement : public ::testing::TestWithParam<double> {};

TEST_P(TripleAgreement, ThreeRoutesCoincide) {
  const ThermalParams p = ThermalParams::from_n_bar(GetParam());
  const auto amps = PhysicalAmplitudes::reference();
  const FockMatrix expansion = thermal_state_density_expansion(amps, p);
  const FockMatrix op = thermal_state_density_operator(amps, p);
  const FockMatrix doubled = reduced_density(thermal_state_vector(amps, p), Mode::original);
  ASSERT_EQ(expansion.cutoff(), op.cutoff());
  ASSERT_EQ(expansion.cutoff(), doubled.cutoff());
  EXPECT_LT(max_abs_difference(expansion, op), 1e-9);
  EXPECT_LT(max_abs_difference(expansion, doubled), 1e-9);
  for (const FockMatrix* r : {&expansion, &op, &doubled}) {
    EXPECT_LT(hermiticity_defect(*r), 1e-12);
    EXPECT_NEAR(r->trace().real(), 1.0, 1e-9);
    EXPECT_GE(min_eigenvalue(*r), -1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Temperatures, TripleAgreement,
                         ::testing::Values(0.0, 0.1, 0.3, 1.0, 3.0));

TEST(TripleAgreement, RandomComplexAmplitudes) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> temp(0.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto amps = testing::random_amplitudes(rng);
    const ThermalParams p = ThermalParams::from_n_bar(temp(rng));
    const FockMatrix expansion = thermal_state_density_expansion(amps, p);
    const FockMatrix op = thermal_state_density_operator(amps, p);
    const FockMatrix doubled = reduced_density(thermal_state_vector(amps, p), Mode::original);
    EXPECT_LT(max_abs_difference(expansion, op), 1e-9) << trial;
    EXPECT_LT(max_abs_difference(expansion, doubled), 1e-9) << trial;
    EXPECT_LT(hermiticity_defect(expansion), 1e-12);
  }
}

TEST(ThermalStateDensity, ZeroTemperatureIsPureProjector) {
  const auto amps = PhysicalAmplitudes::reference();
  const ThermalParams p = ThermalParams::from_n_bar(0.0);
  const FockMatrix rho = thermal_state_density_expansion(amps, p);
  EXPECT_LT(max_abs_difference(rho, projector(physical_state(amps, rho.cutoff()))), 1e-15);
}

TEST(ThermalStateDensity, VacuumAmplitudesGiveThermalState) {
  const PhysicalAmplitudes vac{1.0, 0.0, 0.0, 0.0};
  const ThermalParams p = ThermalParams::from_n_bar(0.7);
  const FockMatrix rho = thermal_state_density_expansion(vac, p);
  const FockMatrix ref = thermal_vacuum_density(p, rho.cutoff(), 1.0);
  EXPECT_LT(max_abs_difference(rho, ref), 1e-15);
}

TEST(ThermalStateDensity, RejectsUnnormalizedAmplitudes) {
  const PhysicalAmplitudes bad{1.0, 1.0, 0.0, 0.0};
  EXPECT_THROW(thermal_state_density_expansion(bad, ThermalParams::from_n_bar(0.1)),
               std::invalid_argument);
  EXPECT_THROW(thermal_state_vector(bad, ThermalParams::from_n_bar(0.1)), std::invalid_argument);
}

TEST(ThermalStateDensity, ExplicitCutoffTooSmall) {
  EXPECT_THROW(thermal_state_density_expansion(PhysicalAmplitudes::reference(),
                                               ThermalParams::from_n_bar(1.0), 8),
               CutoffError);
}

TEST(GateThermalization, ParityGateResidual) {
  const auto amps = PhysicalAmplitudes::reference();
  const FockMatrix gate = half_period_gate_matrix(40);
  for (double n_bar : {0.0, 0.2, 0.5}) {
    EXPECT_LT(gate_thermalization_residual(gate, amps, ThermalParams::from_n_bar(n_bar)), 1e-8)
        << n_bar;
  }
}

TEST(GateThermalization, RandomUnitaryGate) {
  std::mt19937_64 rng(8);
  const int cutoff = 20;
  Matrix h(cutoff + 1, cutoff + 1);
  for (int i = 0; i <= cutoff; ++i)
    for (int j = 0; j <= cutoff; ++j) h(i, j) = testing::random_complex(rng);
  h = 0.5 * (h + h.adjoint()).eval();
  const FockMatrix gate(matrix_exponential(Matrix(Complex(0.0, 1.0) * h)), cutoff);
  const auto amps = testing::random_amplitudes(rng);
  EXPECT_LT(gate_thermalization_residual(gate, amps, ThermalParams::from_n_bar(0.1)), 1e-8);
}

TEST(GateThermalization, RejectsNonUnitaryGate) {
  Matrix m = Matrix::Identity(21, 21);
  m(0, 0) = 2.0;
  const FockMatrix gate(m, 20);
  EXPECT_THROW(gate_thermalization_residual(gate, PhysicalAmplitudes::reference(),
                                            ThermalParams::from_n_bar(0.1)),
               std::invalid_argument);
}

}  // namespace
}  // namespace thermoqubit

namespace thermoqubit {
namespace {

TEST(ThermalVacuumDensity, ZeroTemperatureAndUnitOccupation) {
  const FockMatrix cold = thermal_vacuum_density(ThermalParams::from_n_bar(0.0));
  EXPECT_EQ(cold(0, 0), Complex(1.0));
  EXPECT_EQ(cold.data().cwiseAbs().sum(), 1.0);

  const FockMatrix one = thermal_vacuum_density(ThermalParams::from_n_bar(1.0));
  EXPECT_DOUBLE_EQ(one(0, 0).real(), 0.5);
  EXPECT_DOUBLE_EQ(one(1, 1).real(), 0.25);
  for (int n = 1; n <= one.cutoff(); ++n) EXPECT_LT(one(n, n).real(), one(n - 1, n - 1).real());

  const FockMatrix half = thermal_vacuum_density(ThermalParams::from_n_bar(0.5), 40);
  EXPECT_NEAR((half * number_operator(40)).trace().real(), 0.5, 1e-10);
}

TEST(ThermalStateDensity, ExpansionMatchesOperatorAtFixedCutoff) {
  const ThermalParams p = ThermalParams::from_n_bar(0.5);
  const auto amps = PhysicalAmplitudes::reference();
  EXPECT_LT(max_abs_difference(thermal_state_density_expansion(amps, p, 60),
                               thermal_state_density_operator(amps, p, 60)),
            1e-10);
}

TEST(ThermalStateDensity, OperatorRouteSpecialCases) {
  std::mt19937_64 rng(77);
  const ThermalParams cold = ThermalParams::from_n_bar(0.0);
  const auto amps = testing::random_amplitudes(rng);
  const FockMatrix rho = thermal_state_density_operator(amps, cold);
  EXPECT_LT(max_abs_difference(rho, projector(physical_state(amps, rho.cutoff()))), 1e-15);

  const FockMatrix one = thermal_state_density_operator({0.0, 1.0, 0.0, 0.0}, cold);
  EXPECT_LT(max_abs_difference(one, projector(FockVector::basis(one.cutoff(), 1))), 1e-15);

  for (double n_bar : {0.1, 1.0, 10.0}) {
    const FockMatrix r =
        thermal_state_density_operator(PhysicalAmplitudes::reference(), ThermalParams::from_n_bar(n_bar));
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-10) << n_bar;
  }
}

TEST(BogoliubovUnitary, IdentityAtZeroAngle) {
  const FockMatrix u = bogoliubov_unitary(ThermalParams::from_n_bar(0.0), 12);
  EXPECT_EQ(max_abs_difference(u, FockMatrix::identity(12, 2)), 0.0);
}

TEST(BogoliubovUnitary, ReductionAndMeanAtFixedCutoff) {
  const double theta = 0.6;
  const double n_bar = std::sinh(theta) * std::sinh(theta);
  const ThermalParams p = ThermalParams::from_n_bar(n_bar);
  const FockMatrix u = bogoliubov_unitary(p, 40);
  const FockVector vac = u * FockVector::basis(40, 0, 0);
  const FockMatrix reduced = reduced_density(vac, Mode::original);
  EXPECT_LT(max_abs_difference(reduced, thermal_vacuum_density(p, 40)), 1e-10);
  const FockVector n_vac = apply(number_operator(40), vac, Mode::original);
  EXPECT_NEAR(vac.data().dot(n_vac.data()).real(), n_bar, 1e-10);
}

TEST(BogoliubovUnitary, ThermalAverageEqualsVacuumExpectation) {
  // <0(β)|A ⊗ I|0(β)> = tr(ρ_β A) for A = N and N².
  const ThermalParams p = ThermalParams::from_n_bar(0.8);
  const FockVector vac = thermal_vacuum_state(p, kAutoCutoff, 1e-14);
  const FockMatrix rho = thermal_vacuum_density(p, vac.cutoff(), 1e-14);
  const FockMatrix n = number_operator(vac.cutoff());
  for (const FockMatrix& a : {n, n * n}) {
    const double lhs = vac.data().dot(apply(a, vac, Mode::original).data()).real();
    EXPECT_NEAR(lhs, (rho * a).trace().real(), 1e-9);
  }
}

TEST(ThermalNumberStates, ZeroAngleAndNorms) {
  const auto cold = thermal_number_states(ThermalParams::from_n_bar(0.0), 8);
  for (std::size_t i = 0; i < 4; ++i) {
    const FockVector expected = FockVector::basis(8, PhysicalAmplitudes::kFockLevels[i], 0);
    EXPECT_LT((cold[i].data() - expected.data()).cwiseAbs().maxCoeff(), 1e-15);
  }
  const double theta = 0.5;
  const auto warm =
      thermal_number_states(ThermalParams::from_n_bar(std::sinh(theta) * std::sinh(theta)), 40);
  for (const auto& s : warm) EXPECT_NEAR(s.norm(), 1.0, 1e-9);
}

TEST(GateThermalization, TrivialCases) {
  std::mt19937_64 rng(4);
  const auto amps = testing::random_amplitudes(rng);
  EXPECT_LT(gate_thermalization_residual(half_period_gate_matrix(20), amps,
                                         ThermalParams::from_n_bar(0.0)),
            1e-12);
  EXPECT_LT(gate_thermalization_residual(FockMatrix::identity(20), amps,
                                         ThermalParams::from_n_bar(0.3)),
            1e-12);
}

}  // namespace
}  // namespace thermoqubit
