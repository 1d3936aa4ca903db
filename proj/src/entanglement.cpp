#include "covosc/entanglement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "covosc/coupled.hpp"

namespace covosc {

double SchmidtSeries::truncation_bound() const
{
    const int kmax = int(coefficients.size()) - 1;
    return std::pow(lambda * lambda, kmax + 1);
}

SchmidtSeries expansion_coefficients(double eta, int kmax)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("expansion_coefficients: |eta| exceeds 20");
    if (kmax < 0)
        throw std::domain_error("expansion_coefficients: kmax must be >= 0");

    const double lambda = std::tanh(0.5 * eta);
    const double prefactor = 1.0 / std::cosh(0.5 * eta);
    SchmidtSeries series;
    series.lambda = lambda;
    series.coefficients.resize(kmax + 1);
    double c = prefactor;
    for (int k = 0; k <= kmax; ++k) {
        series.coefficients[k] = c;
        c *= lambda;
    }
    return series;
}

double schmidt_probability(double eta, int k)
{
    const double l2 = std::pow(std::tanh(0.5 * eta), 2);
    return (1.0 - l2) * std::pow(l2, k);
}

double coefficient_projection_oracle(double eta, int j, int k, const QuadratureRule& rule)
{
    if (j < 0 || k < 0 || j > 60 || k > 60)
        throw std::domain_error("coefficient_projection_oracle: index out of range");
    if (rule.order() < 96)
        throw std::domain_error("coefficient_projection_oracle: quadrature order must be >= 96");

    const std::size_t n = rule.order();
    // cache the 1D eigenfunction samples
    std::vector<double> fj(n), fk(n);
    for (std::size_t i = 0; i < n; ++i) {
        fj[i] = hermite_function(j, rule.nodes[i]);
        fk[i] = hermite_function(k, rule.nodes[i]);
    }
    double acc = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        double row = 0.0;
        for (std::size_t b = 0; b < n; ++b)
            row += rule.total_weights[b] * ground_state(eta, rule.nodes[a], rule.nodes[b]) * fk[b];
        acc += rule.total_weights[a] * fj[a] * row;
    }
    return acc;
}

double reconstruct(double eta, double x1, double x2, int kmax)
{
    const SchmidtSeries series = expansion_coefficients(eta, kmax);
    double acc = 0.0;
    for (int k = 0; k <= kmax; ++k)
        acc += series.coefficients[k] * hermite_function(k, x1) * hermite_function(k, x2);
    return acc;
}

SchmidtSpectrum reduced_density_eigenvalues(double eta, const QuadratureRule& rule, int kmax)
{
    if (rule.order() < 96)
        throw std::domain_error("reduced_density_eigenvalues: quadrature order must be >= 96");
    if (kmax < 0)
        throw std::domain_error("reduced_density_eigenvalues: kmax must be >= 0");

    const int n = int(rule.order());
    // G_{im} = sqrt(W_i) psi(x_i, x_m) sqrt(W_m); the symmetrized kernel
    // is G G^T, positive semidefinite by construction.
    Eigen::MatrixXd G(n, n);
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i)
        s[i] = std::sqrt(rule.total_weights[i]);
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m)
            G(i, m) = s[i] * ground_state(eta, rule.nodes[i], rule.nodes[m]) * s[m];

    Eigen::MatrixXd kernel = G * G.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("reduced_density_eigenvalues: eigensolver failed");

    Eigen::VectorXd ev = solver.eigenvalues(); // ascending
    SchmidtSpectrum spectrum;
    const int count = std::min(kmax + 1, n);
    spectrum.probabilities.resize(count);
    for (int k = 0; k < count; ++k)
        spectrum.probabilities[k] = ev[n - 1 - k];
    return spectrum;
}

double entanglement_entropy(double eta)
{
    if (!(std::abs(eta) <= kMaxRapidity))
        throw std::range_error("entanglement_entropy: |eta| exceeds 20");
    const double ch2 = std::pow(std::cosh(0.5 * eta), 2);
    const double sh2 = std::pow(std::sinh(0.5 * eta), 2);
    const double sh_term = sh2 > 0.0 ? sh2 * std::log(sh2) : 0.0;
    return ch2 * std::log(ch2) - sh_term;
}

} // namespace covosc
