#ifndef COVOSC_QUADRATURE_HPP
#define COVOSC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace covosc {

/// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
///
/// `total_weights[i]` stores w_i * exp(x_i^2), computed without the
/// intermediate under/overflow that hits the plain weights for large
/// orders.  Quadrature of a plain integral \int f dx uses the total
/// weights; quadrature against the Gaussian weight uses `weights`.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> total_weights;

    std::size_t order() const { return nodes.size(); }
};

inline constexpr int kMaxQuadratureOrder = 512;
inline constexpr int kMaxFockIndex = 200;

/// Normalized harmonic-oscillator eigenfunction
///   phi_k(x) = (2^k k! sqrt(pi))^{-1/2} H_k(x) e^{-x^2/2},
/// evaluated with the three-term recurrence on the normalized
/// functions themselves (raw H_k overflows past k ~ 150).
double hermite_function(int k, double x);

/// Orthonormal Hermite polynomial p_k(x) = H_k(x) / sqrt(2^k k! sqrt(pi)),
/// i.e. phi_k without the Gaussian factor.  Used by the node solver.
double hermite_polynomial_normalized(int k, double x);

/// Gauss-Hermite rule of the given order, 1 <= n <= 512.  Nodes are the
/// roots of H_n found by Newton refinement of asymptotic guesses.
QuadratureRule gauss_hermite(int n);

/// \int f(x) g(x) dx by weight-compensated Gauss-Hermite quadrature.
/// Throws if f or g is non-finite at any node.
double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g,
                     const QuadratureRule& rule);

} // namespace covosc

#endif
