#include "covosc/covariant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covosc/coupled.hpp"

namespace covosc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

LightConePoint to_light_cone(const SpacetimePoint& p)
{
    return {(p.z + p.t) * kInvSqrt2, (p.z - p.t) * kInvSqrt2};
}

SpacetimePoint from_light_cone(const LightConePoint& p)
{
    return {(p.u + p.v) * kInvSqrt2, (p.u - p.v) * kInvSqrt2};
}

SpacetimePoint boost_point(double eta, const SpacetimePoint& p)
{
    const double ch = std::cosh(0.5 * eta);
    const double sh = std::sinh(0.5 * eta);
    return {p.z * ch + p.t * sh, p.z * sh + p.t * ch};
}

LightConePoint boost_light_cone(double eta, const LightConePoint& p)
{
    const double s = std::exp(0.5 * eta);
    return {p.u * s, p.v / s};
}

double boosted_wavefunction(double eta, const SpacetimePoint& p)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("boosted_wavefunction: |eta| exceeds 20");
    const LightConePoint lc = to_light_cone(p);
    const double expo = -0.5 * (std::exp(-eta) * lc.u * lc.u + std::exp(eta) * lc.v * lc.v);
    return std::exp(expo) / std::sqrt(std::numbers::pi);
}

ResidualReport invariant_equation_residual(double eta, const GridSpec& grid)
{
    grid.validate();
    if (std::abs(grid.z_min) > 4.0 || std::abs(grid.z_max) > 4.0
        || std::abs(grid.t_min) > 4.0 || std::abs(grid.t_max) > 4.0)
        throw std::domain_error("invariant_equation_residual: grid must lie within |z|,|t| <= 4");
    if (grid.dz() > 0.05 || grid.dt() > 0.05)
        throw std::domain_error("invariant_equation_residual: grid spacing must be <= 0.05");

    const double c = std::cosh(eta);
    const double s = std::sinh(eta);
    const double hz = grid.dz();
    const double ht = grid.dt();

    ResidualReport report{0.0, 0.0, 0.0};
    for (int i = 0; i < grid.n_z; ++i) {
        const double z = grid.z_at(i);
        for (int j = 0; j < grid.n_t; ++j) {
            const double t = grid.t_at(j);
            const double psi = boosted_wavefunction(eta, {z, t});

            // Gaussian exponent Q = cosh(eta)(z^2+t^2) - 2 sinh(eta) z t,
            // psi_zz = ((Q_z/2)^2 - cosh(eta)) psi, and likewise in t.
            const double qz = c * z - s * t;
            const double qt = c * t - s * z;
            const double psi_zz = (qz * qz - c) * psi;
            const double psi_tt = (qt * qt - c) * psi;
            const double analytic = 0.5 * ((z * z - t * t) * psi - psi_zz + psi_tt);

            const double fd_zz = (boosted_wavefunction(eta, {z + hz, t})
                                  - 2.0 * psi
                                  + boosted_wavefunction(eta, {z - hz, t})) / (hz * hz);
            const double fd_tt = (boosted_wavefunction(eta, {z, t + ht})
                                  - 2.0 * psi
                                  + boosted_wavefunction(eta, {z, t - ht})) / (ht * ht);
            const double fd = 0.5 * ((z * z - t * t) * psi - fd_zz + fd_tt);

            report.max_analytic = std::max(report.max_analytic, std::abs(analytic));
            report.max_finite_difference = std::max(report.max_finite_difference, std::abs(fd));
            report.max_discrepancy = std::max(report.max_discrepancy, std::abs(analytic - fd));
        }
    }
    return report;
}

SqueezeEllipse squeeze_ellipse(double eta)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("squeeze_ellipse: |eta| exceeds 20");
    const double a = std::exp(0.5 * eta);
    return {a, 1.0 / a, std::numbers::pi};
}

double spatial_marginal_variance(double eta)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("spatial_marginal_variance: |eta| exceeds 20");
    return 0.5 * std::cosh(eta);
}

double spatial_marginal_density(double eta, double z)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("spatial_marginal_density: |eta| exceeds 20");
    const double c = std::cosh(eta);
    return std::exp(-z * z / c) / std::sqrt(std::numbers::pi * c);
}

} // namespace covosc
