#ifndef COVOSC_COUPLED_HPP
#define COVOSC_COUPLED_HPP

#include <utility>

namespace covosc {

/// Parameters of the coupled two-oscillator Hamiltonian
///   H = (1/2){ p1^2/m + p2^2/m + A x1^2 + A x2^2 + 2C x1 x2 }.
struct OscillatorParams {
    double m = 1.0; ///< common mass, > 0
    double A = 1.0; ///< diagonal spring coefficient, > |C|
    double C = 0.0; ///< coupling coefficient

    void validate() const;
};

/// Normal-mode quantities of the diagonalized Hamiltonian.
struct NormalModeData {
    double K;          ///< sqrt(A^2 - C^2)
    double eta;        ///< squeeze parameter, exp(2 eta) = sqrt((A-C)/(A+C))
    double omega;      ///< sqrt(K/m)
    double omega_slow; ///< omega * e^{+eta}  (<= omega_fast when C >= 0)
    double omega_fast; ///< omega * e^{-eta}
};

struct PhaseSpaceState {
    double x1, x2;
    double p1, p2;
};

/// Diagonalize the coupled Hamiltonian into normal modes.
NormalModeData normal_modes(const OscillatorParams& params);

/// Independent check: eigenvalues of the potential matrix [[A,C],[C,A]]
/// are A +/- C, giving frequencies (sqrt((A+C)/m), sqrt((A-C)/m)).
std::pair<double, double> eigenfrequency_oracle(const OscillatorParams& params);

/// (x1, x2) -> (y1, y2) = ((x1+x2)/sqrt2, (x1-x2)/sqrt2); self-inverse.
std::pair<double, double> to_normal_coords(double x1, double x2);

/// Energy of a phase-space state under the coupled Hamiltonian.
double hamiltonian_value(const OscillatorParams& params, const PhaseSpaceState& state);

/// Same energy evaluated through the diagonal normal-mode form; agrees
/// with hamiltonian_value to rounding.
double hamiltonian_normal_form(const OscillatorParams& params, const PhaseSpaceState& state);

/// Entangled ground state in oscillator units,
///   (1/sqrt(pi)) exp{ -(1/4)[ e^{-eta}(x1+x2)^2 + e^{eta}(x1-x2)^2 ] }.
/// Factorizes as phi_0(x1) phi_0(x2) at eta = 0.
double ground_state(double eta, double x1, double x2);

/// Largest |eta| for which wave-function evaluation is allowed before
/// the densities underflow.
inline constexpr double kMaxRapidity = 20.0;

} // namespace covosc

#endif
