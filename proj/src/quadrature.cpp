#include "covosc/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace covosc {

namespace {
constexpr double kPiQuarterInv = 0.7511255444649425; // pi^{-1/4}
}

double hermite_polynomial_normalized(int k, double x)
{
    double pm = 0.0;
    double p = kPiQuarterInv;
    for (int j = 0; j < k; ++j) {
        const double pn = x * std::sqrt(2.0 / (j + 1)) * p
                        - std::sqrt(double(j) / (j + 1)) * pm;
        pm = p;
        p = pn;
    }
    return p;
}

double hermite_function(int k, double x)
{
    if (k < 0 || k > kMaxFockIndex)
        throw std::domain_error("hermite_function: Fock index out of range: "
                                + std::to_string(k));
    if (!std::isfinite(x))
        throw std::domain_error("hermite_function: non-finite argument");

    double pm = 0.0;
    double p = kPiQuarterInv * std::exp(-0.5 * x * x);
    for (int j = 0; j < k; ++j) {
        const double pn = x * std::sqrt(2.0 / (j + 1)) * p
                        - std::sqrt(double(j) / (j + 1)) * pm;
        pm = p;
        p = pn;
    }
    return p;
}

QuadratureRule gauss_hermite(int n)
{
    if (n < 1 || n > kMaxQuadratureOrder)
        throw std::domain_error("gauss_hermite: order out of range: "
                                + std::to_string(n));

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.total_weights.resize(n);

    // Golub-Welsch: the nodes are the eigenvalues of the symmetric
    // tridiagonal Jacobi matrix with zero diagonal and off-diagonal
    // entries sqrt(j/2).  The eigensolve gives every root a reliable
    // starting point at any order; plain asymptotic guess chains skip
    // roots once n grows past ~200.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j < n; ++j) {
        const double b = std::sqrt(0.5 * j);
        jacobi(j, j - 1) = b;
        jacobi(j - 1, j) = b;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        jacobi, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_hermite: Jacobi eigensolve failed");
    const Eigen::VectorXd raw = solver.eigenvalues(); // ascending

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Positive roots, largest first; Newton-polish the eigenvalue on the
        // orthonormal Hermite polynomial, p_n'(x) = sqrt(2n) p_{n-1}(x).
        double z = raw[n - 1 - i];
        constexpr int kMaxIter = 20;
        constexpr double kTol = 1e-14;
        bool converged = false;
        for (int it = 0; it < kMaxIter; ++it) {
            const double pn = hermite_polynomial_normalized(n, z);
            const double pd = std::sqrt(2.0 * n) * hermite_polynomial_normalized(n - 1, z);
            const double dz = pn / pd;
            z -= dz;
            if (std::abs(dz) <= kTol * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("gauss_hermite: Newton iteration failed");

        // Total weight from the bounded function recurrence:
        //   w = 2 / (p_n'(x))^2,  w e^{x^2} = 1 / (n phi_{n-1}(x)^2).
        const double phi = hermite_function(std::min(n - 1, kMaxFockIndex), z);
        double total;
        if (n - 1 <= kMaxFockIndex) {
            total = 1.0 / (n * phi * phi);
        } else {
            // past the configured Fock cap, run the recurrence locally
            double pm = 0.0, p = kPiQuarterInv * std::exp(-0.5 * z * z);
            for (int j = 0; j < n - 1; ++j) {
                const double pn2 = z * std::sqrt(2.0 / (j + 1)) * p
                                 - std::sqrt(double(j) / (j + 1)) * pm;
                pm = p;
                p = pn2;
            }
            total = 1.0 / (n * p * p);
        }
        const int hi = n - 1 - i;
        rule.nodes[hi] = z;
        rule.nodes[i] = -z;
        rule.total_weights[hi] = total;
        rule.total_weights[i] = total;
        const double w = total * std::exp(-z * z);
        rule.weights[hi] = w;
        rule.weights[i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0; // exact midpoint for odd orders
    return rule;
}

double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g,
                     const QuadratureRule& rule)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.order(); ++i) {
        const double x = rule.nodes[i];
        const double fv = f(x);
        const double gv = g(x);
        if (!std::isfinite(fv) || !std::isfinite(gv))
            throw std::runtime_error("inner_product: non-finite integrand at node x = "
                                     + std::to_string(x));
        acc += rule.total_weights[i] * fv * gv;
    }
    return acc;
}

} // namespace covosc
