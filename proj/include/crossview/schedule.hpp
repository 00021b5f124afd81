#pragma once

#include <cstdint>
#include <string>

#include "crossview/error.hpp"
#include "crossview/rng.hpp"

namespace crossview {

enum class ScheduleFunction {
    linear,
    exp_fast_to_slow,
    exp_slow_to_fast,
    random_baseline,
};

ScheduleFunction schedule_function_from_string(const std::string& name);
std::string to_string(ScheduleFunction f);

// Progress-dependent parameter schedule
//   eta(t) = eta_init + (eta_final - eta_init) * f(t/n)
// with f one of: f1(x) = x, f2(x) = (1-exp(-lambda x))/(1-exp(-lambda)),
// f3(x) = (exp(lambda x)-1)/(exp(lambda)-1), or a uniform random draw per
// epoch (the non-progressive baseline).
struct ScheduleSpec {
    double eta_init = 0.0;
    double eta_final = 0.0;
    int total_epochs = 1;
    ScheduleFunction function = ScheduleFunction::linear;
    double lambda = 3.0;
    std::uint64_t random_seed = 0;  // random_baseline only

    void validate() const;
};

// The pacing function f on [0,1] for the deterministic variants.
double schedule_shape(ScheduleFunction f, double x, double lambda);

// eta(t) for epoch t in [0, n]. Endpoints are returned exactly.
double schedule_value(const ScheduleSpec& spec, int t);

struct CurriculumState {
    int epoch = 0;
    double theta_deg = 360.0;  // ground FoV, clamped to (0, 360]
    double sat_value = 0.0;    // rotation probability p or angle phi
};

// Evaluates the ground-FoV schedule and the satellite schedule at epoch t.
// sat_is_probability selects the [0,1] clamp for discrete-rotation p.
CurriculumState curriculum_for_epoch(const ScheduleSpec& theta_spec,
                                     const ScheduleSpec& sat_spec, int t,
                                     bool sat_is_probability = true);

}  // namespace crossview
