#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ttr {

using State = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    double w = std::remainder(a, kTwoPi);
    if (w <= -M_PI) w += kTwoPi;
    return w;
}

/// Weighted state-space metric. Coordinates flagged angular are compared
/// modulo 2*pi with signed distance in (-pi, pi].
struct Metric {
    Eigen::VectorXd weights;       // strictly positive, one per coordinate
    std::vector<bool> angular;     // true for wrapped coordinates

    Metric() = default;
    Metric(Eigen::VectorXd w, std::vector<bool> ang)
        : weights(std::move(w)), angular(std::move(ang)) {
        if (static_cast<std::size_t>(weights.size()) != angular.size())
            throw std::invalid_argument("Metric: weights/angular size mismatch");
    }

    Eigen::Index dim() const { return weights.size(); }

    /// Signed per-coordinate difference a - b, wrapped on angular coordinates.
    Eigen::VectorXd difference(const State& a, const State& b) const {
        Eigen::VectorXd d = a - b;
        for (Eigen::Index i = 0; i < d.size(); ++i)
            if (angular[static_cast<std::size_t>(i)]) d[i] = wrap_angle(d[i]);
        return d;
    }

    double squared_distance(const State& a, const State& b) const {
        const Eigen::VectorXd d = difference(a, b);
        return (weights.array() * d.array().square()).sum();
    }

    double distance(const State& a, const State& b) const {
        return std::sqrt(squared_distance(a, b));
    }

    /// Distance over the non-angular (position) coordinates only.
    double position_distance(const State& a, const State& b) const {
        double s = 0.0;
        for (Eigen::Index i = 0; i < weights.size(); ++i) {
            if (angular[static_cast<std::size_t>(i)]) continue;
            const double d = a[i] - b[i];
            s += weights[i] * d * d;
        }
        return std::sqrt(s);
    }

    std::vector<Eigen::Index> position_indices() const {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < weights.size(); ++i)
            if (!angular[static_cast<std::size_t>(i)]) idx.push_back(i);
        return idx;
    }
};

inline bool all_finite(const Eigen::Ref<const Eigen::VectorXd>& v) {
    return v.allFinite();
}

}  // namespace ttr
