#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ttr/state.hpp"

namespace ttr {

/// Piecewise-constant control: K primitives held for K non-negative
/// durations, anchored so the last segment ends at t = 0.
struct ControlSequence {
    std::vector<double> primitives;
    std::vector<double> durations;

    ControlSequence() = default;
    ControlSequence(std::vector<double> prim, std::vector<double> dur);

    std::size_t segments() const { return primitives.size(); }
    double total_duration() const;
    bool empty() const { return primitives.empty(); }

    /// Concatenation: rhs is appended closer to t = 0.
    ControlSequence concat(const ControlSequence& tail) const;
};

struct SystemModel {
    std::string name;
    int dimension = 0;
    std::vector<double> control_set;                        // admissible primitives
    std::function<void(const State&, double, State&)> vector_field;
    Metric metric;
    double control_min = 0.0;
    double control_max = 0.0;
};

/// Unit-speed planar car: state (px, py, theta), control u = dtheta/dt in [-1, 1].
SystemModel make_dubins(double heading_weight = 1.0);

struct Trajectory {
    std::vector<double> times;   // strictly increasing
    std::vector<State> states;   // same length as times

    const State& start() const { return states.front(); }
    const State& end() const { return states.back(); }
    std::size_t size() const { return states.size(); }
};

/// Control value active at time t in [-T_hat, 0]. Boundary instants belong to
/// the later (higher-index) segment; t = 0 returns the last primitive.
double eval_control(const ControlSequence& seq, double t);

/// Integrates dx/dt = f(x, u(t)) over t in [-T_hat, 0] with x(-T_hat) = x0
/// by fixed-step RK4. Steps are split exactly at primitive switch times and
/// at any requested extra sample times, so the control is constant within
/// every step. Returned times run from -T_hat to 0.
Trajectory integrate_forward(const SystemModel& model, const State& x0,
                             const ControlSequence& seq, double dt,
                             const std::vector<double>& extra_times = {});

/// Integrates the reversed system dx/ds = -f(x, u) from xT, traversing the
/// segments in reverse order. Returned times are elapsed backward time s in
/// [0, T_hat]; states[0] = xT and states.back() is the trajectory endpoint,
/// i.e. the state from which replaying seq forward reproduces xT.
Trajectory integrate_backward(const SystemModel& model, const State& xT,
                              const ControlSequence& seq, double dt,
                              const std::vector<double>& extra_times = {});

/// Sum of cost_fn(u_j) * tau_j; equals total duration for unit running cost.
double sequence_cost(const ControlSequence& seq,
                     const std::function<double(double)>& cost_fn);

inline double sequence_cost(const ControlSequence& seq) {
    return seq.total_duration();
}

/// Suffix of seq active on [t, 0]; the segment containing t is truncated to
/// its remaining duration. t must lie in [-T_hat, 0].
ControlSequence tail_from(const ControlSequence& seq, double t);

}  // namespace ttr
