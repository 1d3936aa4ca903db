#ifndef COVOSC_COVARIANT_HPP
#define COVOSC_COVARIANT_HPP

#include "covosc/grid.hpp"

namespace covosc {

struct SpacetimePoint {
    double z;
    double t;
};

struct LightConePoint {
    double u;
    double v;
};

/// u = (z + t)/sqrt2, v = (z - t)/sqrt2.
LightConePoint to_light_cone(const SpacetimePoint& p);
SpacetimePoint from_light_cone(const LightConePoint& p);

/// Boost along z by rapidity eta:
///   (z', t') = (z cosh(eta/2) + t sinh(eta/2), z sinh(eta/2) + t cosh(eta/2)).
/// Preserves z^2 - t^2.
SpacetimePoint boost_point(double eta, const SpacetimePoint& p);

/// The same boost in light-cone coordinates: (u, v) -> (e^{eta/2} u, e^{-eta/2} v).
LightConePoint boost_light_cone(double eta, const LightConePoint& p);

/// Lorentz-squeezed ground state
///   psi_eta(z, t) = pi^{-1/2} exp{ -(1/2)(e^{-eta} u^2 + e^{eta} v^2) }.
double boosted_wavefunction(double eta, const SpacetimePoint& p);

/// Residuals of the invariant oscillator equation
///   (1/2)[ (z^2 - t^2) psi - psi_zz + psi_tt ] = 0
/// over a grid, from analytic Gaussian derivatives and from a central
/// second-order finite-difference stencil at the grid spacing.
struct ResidualReport {
    double max_analytic;
    double max_finite_difference;
    double max_discrepancy; ///< sup |analytic - finite difference|
};

ResidualReport invariant_equation_residual(double eta, const GridSpec& grid);

/// 1/e contour of |psi_eta|^2: semi-axes along the light-cone axes.
struct SqueezeEllipse {
    double semi_axis_u; ///< e^{eta/2}
    double semi_axis_v; ///< e^{-eta/2}
    double area;        ///< pi, boost-invariant
};

SqueezeEllipse squeeze_ellipse(double eta);

/// Var(z) of |psi_eta|^2 marginalized over t; equals cosh(eta)/2.
double spatial_marginal_variance(double eta);

/// Longitudinal marginal density of |psi_eta|^2:
///   p(z) = exp(-z^2 / cosh(eta)) / sqrt(pi cosh(eta)).
double spatial_marginal_density(double eta, double z);

} // namespace covosc

#endif
