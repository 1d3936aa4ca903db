#ifndef COVOSC_ENTANGLEMENT_HPP
#define COVOSC_ENTANGLEMENT_HPP

#include <vector>

#include "covosc/quadrature.hpp"

namespace covosc {

/// Schmidt expansion of the coupled ground state,
///   psi_eta(x1, x2) = sum_k c_k phi_k(x1) phi_k(x2),
///   c_k = tanh^k(eta/2) / cosh(eta/2).
struct SchmidtSeries {
    double lambda;                    ///< tanh(eta/2), in (-1, 1)
    std::vector<double> coefficients; ///< c_0 .. c_kmax, sign-carrying

    /// 1 - sum c_k^2 is bounded by lambda^{2(kmax+1)}.
    double truncation_bound() const;
};

/// Eigenvalues of the reduced density kernel: p_k = (1 - lambda^2) lambda^{2k}.
struct SchmidtSpectrum {
    std::vector<double> probabilities; ///< descending
};

SchmidtSeries expansion_coefficients(double eta, int kmax);

/// Closed-form Schmidt probability p_k.
double schmidt_probability(double eta, int k);

/// 2D quadrature projection <phi_j(x1) phi_k(x2), psi_eta>; the numerical
/// oracle for the expansion coefficients.  Diagonal (j == k) projections
/// reproduce c_k; off-diagonal projections vanish.
double coefficient_projection_oracle(double eta, int j, int k, const QuadratureRule& rule);

inline double coefficient_projection_oracle(double eta, int k, const QuadratureRule& rule)
{
    return coefficient_projection_oracle(eta, k, k, rule);
}

/// Partial Schmidt sum sum_{k<=kmax} c_k phi_k(x1) phi_k(x2).
double reconstruct(double eta, double x1, double x2, int kmax);

/// Discretize the reduced density kernel rho(x1, x1') = \int psi psi dx2 on
/// the quadrature nodes with symmetric weight scaling and diagonalize it.
/// Returns the leading kmax+1 eigenvalues in descending order.
SchmidtSpectrum reduced_density_eigenvalues(double eta, const QuadratureRule& rule, int kmax);

/// von Neumann entropy of the reduced state, in nats:
///   S = cosh^2(eta/2) ln cosh^2(eta/2) - sinh^2(eta/2) ln sinh^2(eta/2).
double entanglement_entropy(double eta);

} // namespace covosc

#endif
