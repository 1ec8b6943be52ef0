// Exact mutual information for jointly Gaussian linear models
// y = sum_k A_k s_k + noise, evaluated through covariance log-determinants.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sdof/complex_matrix.hpp"

namespace sdof {

enum class SignalRole {
    useful,      // counted in the numerator covariance only
    nuisance,    // counted in both covariances (unknown interference)
    conditioned  // known and subtracted; contributes to neither covariance
};

struct SignalComponent {
    ComplexMatrix mixing;  // observations x symbols
    double power = 0.0;    // per-symbol variance, linear scale
    SignalRole role = SignalRole::nuisance;
    std::string label;     // identity tag so estimators can re-assign roles
};

class LinearModel {
public:
    LinearModel(std::vector<SignalComponent> components, double noise_variance = 1.0)
        : components_(std::move(components)), noise_variance_(noise_variance) {
        if (components_.empty()) throw std::invalid_argument("LinearModel: no components");
        if (!(noise_variance_ > 0.0)) throw std::invalid_argument("LinearModel: noise variance must be > 0");
        bool any_useful = false;
        const std::size_t rows = components_.front().mixing.rows();
        for (const auto& c : components_) {
            if (c.mixing.rows() != rows)
                throw std::invalid_argument("LinearModel: observation row counts disagree");
            if (c.mixing.cols() == 0)
                throw std::invalid_argument("LinearModel: component without symbols");
            if (!c.mixing.is_finite())
                throw std::invalid_argument("LinearModel: non-finite mixing entry");
            if (!(c.power >= 0.0))
                throw std::invalid_argument("LinearModel: negative component power");
            any_useful |= c.role == SignalRole::useful;
        }
        if (!any_useful) throw std::invalid_argument("LinearModel: no useful component");
    }

    const std::vector<SignalComponent>& components() const { return components_; }
    double noise_variance() const { return noise_variance_; }
    std::size_t observations() const { return components_.front().mixing.rows(); }

private:
    std::vector<SignalComponent> components_;
    double noise_variance_;
};

// A mutual information is nonnegative; tiny negatives are floating-point
// cancellation and clamp to zero, anything below the band is a failure of
// the model construction and must surface, not be hidden.
inline double clamp_mi(double value) {
    constexpr double band = -1e-9;
    if (value < band) throw std::runtime_error("gaussian_mi: negative beyond tolerance, value=" + std::to_string(value));
    return value < 0.0 ? 0.0 : value;
}

/// I(useful ; observations | conditioned) in bits for one model invocation.
inline double gaussian_mi(const LinearModel& model) {
    const std::size_t n = model.observations();
    ComplexMatrix cond(n, n);
    for (std::size_t i = 0; i < n; ++i) cond(i, i) = model.noise_variance();

    ComplexMatrix full = cond;
    for (const auto& c : model.components()) {
        if (c.role == SignalRole::conditioned || c.power == 0.0) continue;
        const ComplexMatrix covariance = cplx(c.power) * c.mixing.gram();
        full = full + covariance;
        if (c.role == SignalRole::nuisance) cond = cond + covariance;
    }
    return clamp_mi(log_det_hermitian_psd(full) - log_det_hermitian_psd(cond));
}

}  // namespace sdof
