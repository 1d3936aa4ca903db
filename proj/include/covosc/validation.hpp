#ifndef COVOSC_VALIDATION_HPP
#define COVOSC_VALIDATION_HPP

#include <string>
#include <vector>

namespace covosc {

struct CheckResult {
    std::string name;
    double deviation;
    double tolerance;
    bool pass;
};

/// Full oracle suite: normalization, Schmidt projection, kernel spectrum,
/// PDE residual, Fourier duality, width law, boost-group properties.
/// Every tolerance is fixed here.
std::vector<CheckResult> run_validation_suite();

} // namespace covosc

#endif
