#include "ttr/sysdyn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ttr {

ControlSequence::ControlSequence(std::vector<double> prim, std::vector<double> dur)
    : primitives(std::move(prim)), durations(std::move(dur)) {
    if (primitives.size() != durations.size())
        throw std::invalid_argument("ControlSequence: primitive/duration length mismatch");
    for (double tau : durations) {
        if (!(tau >= 0.0) || !std::isfinite(tau))
            throw std::invalid_argument("ControlSequence: durations must be finite and >= 0");
    }
}

double ControlSequence::total_duration() const {
    double t = 0.0;
    for (double tau : durations) t += tau;
    return t;
}

ControlSequence ControlSequence::concat(const ControlSequence& tail) const {
    ControlSequence out = *this;
    out.primitives.insert(out.primitives.end(), tail.primitives.begin(), tail.primitives.end());
    out.durations.insert(out.durations.end(), tail.durations.begin(), tail.durations.end());
    return out;
}

SystemModel make_dubins(double heading_weight) {
    SystemModel m;
    m.name = "dubins";
    m.dimension = 3;
    m.control_set = {-1.0, 0.0, 1.0};
    m.control_min = -1.0;
    m.control_max = 1.0;
    m.vector_field = [](const State& x, double u, State& dx) {
        dx[0] = std::cos(x[2]);
        dx[1] = std::sin(x[2]);
        dx[2] = u;
    };
    Eigen::VectorXd w(3);
    w << 1.0, 1.0, heading_weight;
    m.metric = Metric(w, {false, false, true});
    return m;
}

double eval_control(const ControlSequence& seq, double t) {
    const double T_hat = seq.total_duration();
    if (!(t >= -T_hat && t <= 0.0))
        throw std::domain_error("eval_control: t outside [-T_hat, 0]");
    // Walk boundaries from the front; a boundary instant resolves to the
    // later segment, so zero-duration segments are skipped.
    double seg_end = -T_hat;
    const std::size_t K = seq.segments();
    for (std::size_t j = 0; j + 1 < K; ++j) {
        seg_end += seq.durations[j];
        if (t < seg_end) return seq.primitives[j];
    }
    return seq.primitives.back();
}

ControlSequence tail_from(const ControlSequence& seq, double t) {
    const double T_hat = seq.total_duration();
    if (!(t >= -T_hat && t <= 0.0))
        throw std::domain_error("tail_from: t outside [-T_hat, 0]");
    ControlSequence out;
    double seg_start = -T_hat;
    for (std::size_t j = 0; j < seq.segments(); ++j) {
        const double seg_end = seg_start + seq.durations[j];
        if (seg_end > t) {
            const double lo = std::max(seg_start, t);
            const double remaining = seg_end - lo;
            if (remaining > 0.0) {
                out.primitives.push_back(seq.primitives[j]);
                out.durations.push_back(remaining);
            }
        }
        seg_start = seg_end;
    }
    return out;
}

double sequence_cost(const ControlSequence& seq,
                     const std::function<double(double)>& cost_fn) {
    double c = 0.0;
    for (std::size_t j = 0; j < seq.segments(); ++j)
        c += cost_fn(seq.primitives[j]) * seq.durations[j];
    return c;
}

namespace {

void rk4_step(const SystemModel& model, State& x, double u, double h,
              State& k1, State& k2, State& k3, State& k4, State& tmp, double sign) {
    model.vector_field(x, u, k1);
    tmp = x + (0.5 * h * sign) * k1;
    model.vector_field(tmp, u, k2);
    tmp = x + (0.5 * h * sign) * k2;
    model.vector_field(tmp, u, k3);
    tmp = x + (h * sign) * k3;
    model.vector_field(tmp, u, k4);
    x += (h * sign / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Integrates a list of (u, tau) segments from x0, with dense output at
// multiples of dt, segment switches, and the requested extra offsets
// (expressed as elapsed time from the start of integration).
Trajectory integrate_segments(const SystemModel& model, const State& x0,
                              const std::vector<std::pair<double, double>>& segs,
                              double dt, double t_origin, double t_sign,
                              std::vector<double> extra_elapsed) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (x0.size() != model.dimension)
        throw std::invalid_argument("integrate: state dimension mismatch");

    Trajectory traj;
    traj.times.push_back(t_origin);
    traj.states.push_back(x0);

    std::sort(extra_elapsed.begin(), extra_elapsed.end());
    std::size_t next_extra = 0;
    const double kTimeEps = 1e-12;

    State x = x0, k1(x0.size()), k2(x0.size()), k3(x0.size()), k4(x0.size()), tmp(x0.size());
    double elapsed = 0.0;
    for (const auto& [u, tau] : segs) {
        if (tau <= 0.0) continue;
        const double seg_end = elapsed + tau;
        while (elapsed < seg_end - kTimeEps) {
            double target = std::min(elapsed + dt, seg_end);
            while (next_extra < extra_elapsed.size() &&
                   extra_elapsed[next_extra] <= elapsed + kTimeEps)
                ++next_extra;
            if (next_extra < extra_elapsed.size())
                target = std::min(target, extra_elapsed[next_extra]);
            const double h = target - elapsed;
            rk4_step(model, x, u, h, k1, k2, k3, k4, tmp, t_sign);
            if (!x.allFinite())
                throw std::runtime_error("integrate: non-finite state encountered");
            elapsed = target;
            traj.times.push_back(t_origin + t_sign * elapsed);
            traj.states.push_back(x);
        }
        elapsed = seg_end;
        if (std::abs(traj.times.back() - (t_origin + t_sign * elapsed)) > kTimeEps) {
            traj.times.back() = t_origin + t_sign * elapsed;  // absorb rounding
        }
    }
    return traj;
}

}  // namespace

Trajectory integrate_forward(const SystemModel& model, const State& x0,
                             const ControlSequence& seq, double dt,
                             const std::vector<double>& extra_times) {
    const double T_hat = seq.total_duration();
    std::vector<std::pair<double, double>> segs;
    segs.reserve(seq.segments());
    for (std::size_t j = 0; j < seq.segments(); ++j)
        segs.emplace_back(seq.primitives[j], seq.durations[j]);
    // Forward time runs -T_hat -> 0; elapsed = t + T_hat.
    std::vector<double> extra;
    for (double t : extra_times) extra.push_back(t + T_hat);
    Trajectory traj = integrate_segments(model, x0, segs, dt, -T_hat, +1.0, std::move(extra));
    return traj;
}

Trajectory integrate_backward(const SystemModel& model, const State& xT,
                              const ControlSequence& seq, double dt,
                              const std::vector<double>& extra_times) {
    std::vector<std::pair<double, double>> segs;
    for (std::size_t j = seq.segments(); j-- > 0;)
        segs.emplace_back(seq.primitives[j], seq.durations[j]);
    return integrate_segments(model, xT, segs, dt, 0.0, +1.0, extra_times);
}

}  // namespace ttr
