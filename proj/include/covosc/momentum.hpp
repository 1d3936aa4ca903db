#ifndef COVOSC_MOMENTUM_HPP
#define COVOSC_MOMENTUM_HPP

#include <complex>
#include <utility>

#include "covosc/covariant.hpp"
#include "covosc/grid.hpp"

namespace covosc {

/// Relative longitudinal momentum and relative energy of the quark pair.
struct MomentumPoint {
    double q_z;
    double q_0;
};

/// Light-cone momenta q_u = (q_0 - q_z)/sqrt2, q_v = (q_0 + q_z)/sqrt2.
LightConePoint momentum_light_cone(const MomentumPoint& p);
MomentumPoint momentum_from_light_cone(const LightConePoint& p);

struct QuarkPairCoords {
    SpacetimePoint x_a;
    SpacetimePoint x_b;
};

struct QuarkPairMomenta {
    MomentumPoint p_a;
    MomentumPoint p_b;
};

/// Hadron center X = (x_a + x_b)/2 and quark separation x = (x_a - x_b)/(2 sqrt2).
std::pair<SpacetimePoint, SpacetimePoint> pair_to_relative(const QuarkPairCoords& pair);
QuarkPairCoords pair_from_relative(const SpacetimePoint& center, const SpacetimePoint& rel);

/// Hadronic four-momentum P = p_a + p_b and separation q = sqrt2 (p_a - p_b).
std::pair<MomentumPoint, MomentumPoint> momenta_to_relative(const QuarkPairMomenta& pair);
QuarkPairMomenta momenta_from_relative(const MomentumPoint& total, const MomentumPoint& rel);

/// Momentum-energy wave function
///   phi_eta(q_z, q_0) = pi^{-1/2} exp{ -(1/2)(e^{eta} q_u^2 + e^{-eta} q_v^2) }.
double momentum_wavefunction(double eta, const MomentumPoint& p);

/// Direct double-quadrature Fourier transform of psi_eta on the grid,
///   (1/2pi) \iint psi_eta(z, t) e^{i (q_z z - kernel_sign q_0 t)} dz dt.
/// kernel_sign = +1 is the scalar-product convention that maps psi_eta
/// onto phi_eta; -1 flips the relative sign between the space and time
/// phases (a pure conjugation would be invisible because the integrand
/// is even) and exists for fault-sensitivity tests.
std::complex<double> fourier_transform_point(double eta, const GridSpec& grid,
                                             const MomentumPoint& q, int kernel_sign = +1);

/// Max |transform - phi_eta| over a 13x13 probe grid covering |q| <= 3.
/// Requires grid extent >= 8 per axis and >= 256 points per axis.
double fourier_duality_check(double eta, const GridSpec& grid, int kernel_sign = +1);

/// Var(q_z) of |phi_eta|^2 marginalized over q_0; equals cosh(eta)/2.
double momentum_marginal_variance(double eta);

/// Longitudinal marginal density of |phi_eta|^2; same functional form as
/// the spatial marginal.
double momentum_marginal_density(double eta, double q_z);

/// Longitudinal position- and momentum-marginal densities sampled on a
/// 1D grid, plus their common standard deviation sqrt(cosh(eta)/2).
struct PartonProfile {
    std::vector<double> coordinates;
    std::vector<double> position_density;
    std::vector<double> momentum_density;
    double sigma;
};

PartonProfile parton_profile(double eta, const Grid1D& grid);

} // namespace covosc

#endif
