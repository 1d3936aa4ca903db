#include "covosc/coupled.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covosc {

void OscillatorParams::validate() const
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::domain_error("OscillatorParams: mass must be positive");
    if (!std::isfinite(A) || !std::isfinite(C))
        throw std::domain_error("OscillatorParams: non-finite coefficients");
    if (!(A > std::abs(C)))
        throw std::domain_error("overdamped coupling: require A > |C|");
}

NormalModeData normal_modes(const OscillatorParams& params)
{
    params.validate();
    const double K = std::sqrt(params.A * params.A - params.C * params.C);
    // exp(2 eta) = ((A-C)/(A+C))^{1/2}
    const double eta = 0.25 * std::log((params.A - params.C) / (params.A + params.C));
    const double omega = std::sqrt(K / params.m);
    return NormalModeData{
        .K = K,
        .eta = eta,
        .omega = omega,
        .omega_slow = omega * std::exp(eta),
        .omega_fast = omega * std::exp(-eta),
    };
}

std::pair<double, double> eigenfrequency_oracle(const OscillatorParams& params)
{
    params.validate();
    return {std::sqrt((params.A + params.C) / params.m),
            std::sqrt((params.A - params.C) / params.m)};
}

std::pair<double, double> to_normal_coords(double x1, double x2)
{
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return {(x1 + x2) * inv_sqrt2, (x1 - x2) * inv_sqrt2};
}

double hamiltonian_value(const OscillatorParams& params, const PhaseSpaceState& s)
{
    params.validate();
    return 0.5 * ((s.p1 * s.p1 + s.p2 * s.p2) / params.m
                  + params.A * (s.x1 * s.x1 + s.x2 * s.x2)
                  + 2.0 * params.C * s.x1 * s.x2);
}

double hamiltonian_normal_form(const OscillatorParams& params, const PhaseSpaceState& s)
{
    const NormalModeData nm = normal_modes(params);
    // momenta transform under the same orthogonal map as positions
    const auto [y1, y2] = to_normal_coords(s.x1, s.x2);
    const auto [q1, q2] = to_normal_coords(s.p1, s.p2);
    return (q1 * q1 + q2 * q2) / (2.0 * params.m)
         + 0.5 * nm.K * (std::exp(-2.0 * nm.eta) * y1 * y1
                         + std::exp(2.0 * nm.eta) * y2 * y2);
}

double ground_state(double eta, double x1, double x2)
{
    if (!std::isfinite(x1) || !std::isfinite(x2))
        throw std::domain_error("ground_state: non-finite position");
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("ground_state: |eta| exceeds 20");
    const double sp = x1 + x2;
    const double sm = x1 - x2;
    const double expo = -0.25 * (std::exp(-eta) * sp * sp + std::exp(eta) * sm * sm);
    return std::exp(expo) / std::sqrt(std::numbers::pi);
}

} // namespace covosc
