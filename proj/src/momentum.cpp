#include "covosc/momentum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "covosc/coupled.hpp"

namespace covosc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
// "x = (x_a - x_b)/2 sqrt2" read as division by 2*sqrt2; the alternative
// binding would make this 1/sqrt2.
constexpr double kSeparationScale = 1.0 / (2.0 * std::numbers::sqrt2);
}

LightConePoint momentum_light_cone(const MomentumPoint& p)
{
    return {(p.q_0 - p.q_z) * kInvSqrt2, (p.q_0 + p.q_z) * kInvSqrt2};
}

MomentumPoint momentum_from_light_cone(const LightConePoint& p)
{
    return {(p.v - p.u) * kInvSqrt2, (p.u + p.v) * kInvSqrt2};
}

std::pair<SpacetimePoint, SpacetimePoint> pair_to_relative(const QuarkPairCoords& pair)
{
    const SpacetimePoint center{0.5 * (pair.x_a.z + pair.x_b.z),
                                0.5 * (pair.x_a.t + pair.x_b.t)};
    const SpacetimePoint rel{(pair.x_a.z - pair.x_b.z) * kSeparationScale,
                             (pair.x_a.t - pair.x_b.t) * kSeparationScale};
    return {center, rel};
}

QuarkPairCoords pair_from_relative(const SpacetimePoint& center, const SpacetimePoint& rel)
{
    const double half = 0.5 / kSeparationScale;
    return {{center.z + half * rel.z, center.t + half * rel.t},
            {center.z - half * rel.z, center.t - half * rel.t}};
}

std::pair<MomentumPoint, MomentumPoint> momenta_to_relative(const QuarkPairMomenta& pair)
{
    const MomentumPoint total{pair.p_a.q_z + pair.p_b.q_z, pair.p_a.q_0 + pair.p_b.q_0};
    const MomentumPoint rel{std::numbers::sqrt2 * (pair.p_a.q_z - pair.p_b.q_z),
                            std::numbers::sqrt2 * (pair.p_a.q_0 - pair.p_b.q_0)};
    return {total, rel};
}

QuarkPairMomenta momenta_from_relative(const MomentumPoint& total, const MomentumPoint& rel)
{
    const double h = 0.5 / std::numbers::sqrt2;
    return {{0.5 * total.q_z + h * rel.q_z, 0.5 * total.q_0 + h * rel.q_0},
            {0.5 * total.q_z - h * rel.q_z, 0.5 * total.q_0 - h * rel.q_0}};
}

double momentum_wavefunction(double eta, const MomentumPoint& p)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("momentum_wavefunction: |eta| exceeds 20");
    const LightConePoint lc = momentum_light_cone(p);
    const double expo = -0.5 * (std::exp(eta) * lc.u * lc.u + std::exp(-eta) * lc.v * lc.v);
    return std::exp(expo) / std::sqrt(std::numbers::pi);
}

std::complex<double> fourier_transform_point(double eta, const GridSpec& grid,
                                             const MomentumPoint& q, int kernel_sign)
{
    grid.validate();
    const double hz = grid.dz();
    const double ht = grid.dt();
    const double sign = kernel_sign >= 0 ? 1.0 : -1.0;

    // trapezoid in both axes; separable phase factors cached per axis
    std::vector<std::complex<double>> phase_z(grid.n_z), phase_t(grid.n_t);
    std::vector<double> wz(grid.n_z, 1.0), wt(grid.n_t, 1.0);
    wz.front() = wz.back() = 0.5;
    wt.front() = wt.back() = 0.5;
    for (int i = 0; i < grid.n_z; ++i)
        phase_z[i] = std::polar(1.0, q.q_z * grid.z_at(i));
    for (int j = 0; j < grid.n_t; ++j)
        phase_t[j] = std::polar(1.0, -sign * q.q_0 * grid.t_at(j));

    std::complex<double> acc = 0.0;
    for (int i = 0; i < grid.n_z; ++i) {
        const double z = grid.z_at(i);
        std::complex<double> row = 0.0;
        for (int j = 0; j < grid.n_t; ++j)
            row += wt[j] * boosted_wavefunction(eta, {z, grid.t_at(j)}) * phase_t[j];
        acc += wz[i] * phase_z[i] * row;
    }
    return acc * (hz * ht / (2.0 * std::numbers::pi));
}

double fourier_duality_check(double eta, const GridSpec& grid, int kernel_sign)
{
    grid.validate();
    if (grid.z_max < 8.0 || grid.z_min > -8.0 || grid.t_max < 8.0 || grid.t_min > -8.0)
        throw std::domain_error("fourier_duality_check: grid extent must cover |z|,|t| <= 8");
    if (grid.n_z < 256 || grid.n_t < 256)
        throw std::domain_error("fourier_duality_check: need >= 256 points per axis");

    constexpr int kProbe = 13;
    constexpr double kProbeExtent = 3.0;
    double max_dev = 0.0;
    for (int a = 0; a < kProbe; ++a) {
        const double qz = -kProbeExtent + 2.0 * kProbeExtent * a / (kProbe - 1);
        for (int b = 0; b < kProbe; ++b) {
            const double q0 = -kProbeExtent + 2.0 * kProbeExtent * b / (kProbe - 1);
            const std::complex<double> f =
                fourier_transform_point(eta, grid, {qz, q0}, kernel_sign);
            const double expected = momentum_wavefunction(eta, {qz, q0});
            max_dev = std::max(max_dev, std::abs(f - expected));
        }
    }
    return max_dev;
}

double momentum_marginal_variance(double eta)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("momentum_marginal_variance: |eta| exceeds 20");
    return 0.5 * std::cosh(eta);
}

double momentum_marginal_density(double eta, double q_z)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("momentum_marginal_density: |eta| exceeds 20");
    const double c = std::cosh(eta);
    return std::exp(-q_z * q_z / c) / std::sqrt(std::numbers::pi * c);
}

PartonProfile parton_profile(double eta, const Grid1D& grid)
{
    grid.validate();
    PartonProfile profile;
    profile.coordinates.resize(grid.n);
    profile.position_density.resize(grid.n);
    profile.momentum_density.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.at(i);
        profile.coordinates[i] = x;
        profile.position_density[i] = spatial_marginal_density(eta, x);
        profile.momentum_density[i] = momentum_marginal_density(eta, x);
    }
    profile.sigma = std::sqrt(momentum_marginal_variance(eta));
    return profile;
}

} // namespace covosc
