#pragma once
#include <stdexcept>
#include <string>

namespace omitsim {

struct sim_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : sim_error {
    using sim_error::sim_error;
};

// steady state / params supplied to an operation do not belong together
struct contract_error : sim_error {
    using sim_error::sim_error;
};

struct solver_error : sim_error {
    using sim_error::sim_error;
};

struct arity_error : sim_error {
    using sim_error::sim_error;
};

// phase unwrapping found an increment too close to pi
struct grid_error : sim_error {
    grid_error(const std::string& msg, std::size_t index)
        : sim_error(msg), index(index) {}
    std::size_t index;
};

struct convergence_error : sim_error {
    convergence_error(const std::string& msg, double last, double previous)
        : sim_error(msg), last_estimate(last), previous_estimate(previous) {}
    double last_estimate;
    double previous_estimate;
};

struct instability_error : sim_error {
    instability_error(const std::string& msg, double t_blowup)
        : sim_error(msg), blowup_time(t_blowup) {}
    double blowup_time;
};

struct stiffness_error : sim_error {
    using sim_error::sim_error;
};

struct alignment_error : sim_error {
    using sim_error::sim_error;
};

struct config_error : sim_error {
    using sim_error::sim_error;
};

struct scenario_error : sim_error {
    using sim_error::sim_error;
};

struct io_error : sim_error {
    using sim_error::sim_error;
};

} // namespace omitsim
