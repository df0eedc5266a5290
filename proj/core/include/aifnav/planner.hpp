#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aifnav/inference.hpp"
#include "aifnav/model.hpp"
#include "aifnav/rng.hpp"

namespace aifnav {

// Candidate action sequence with its imagined pose trajectory and expected
// free energy (lower = more desirable).
struct Policy {
    std::vector<Action> actions;
    std::vector<Pose> pose_path;  // one pose per step
    double efe = 0.0;
};

struct PlannerConfig {
    int horizon = 4;
    double gamma = 8.0;          // softmax temperature on -G
    double novelty_weight = 1.0; // 0 restores the bare information-gain objective
    uint64_t rng_seed = 0;
};

struct RolloutStep {
    std::vector<double> state_probs;  // q(s_tau | pi)
    std::vector<double> obs_probs;    // q(o_tau | pi)
};

// Pushes the belief through the transition model one action at a time.
std::vector<RolloutStep> rollout(const GenerativeModel& model, const Belief& belief,
                                 const Policy& policy);

// Per-step expected free energy:
//   G_tau = -I(s;o) - novelty_weight * E_q[1 / obs_count_mass(s)]
// with zero utility (no prior preference). I(s;o) is the mutual information
// between state and observation under q(s) and the observation likelihood.
double step_efe(const GenerativeModel& model, const std::vector<double>& q_s,
                const PlannerConfig& cfg);

double policy_efe(const GenerativeModel& model, const Belief& belief,
                  const Policy& policy, const PlannerConfig& cfg);

// Enumerates all action sequences up to cfg.horizon, sharing rollout prefixes.
// A step whose target pose carries no anchored state is kept as a final probe
// step and the branch ends there, so wall probes stay in the candidate set
// while trajectories beyond the imagined frontier are cut. Returns scored
// policies in a deterministic order.
std::vector<Policy> plan_policies(const GenerativeModel& model, const Belief& belief,
                                  const PlannerConfig& cfg);

// Softmax posterior over policies P(pi) = sigma(-gamma * G); exposed for tests
// and for the EFE field dump.
std::vector<double> policy_posterior(const std::vector<Policy>& policies,
                                     const PlannerConfig& cfg);

// Samples a policy from the softmax posterior and returns its first action.
Action select_action(const std::vector<Policy>& policies, const PlannerConfig& cfg,
                     Rng& rng);

// Delimited table of every candidate policy, its pose trajectory and its EFE,
// for external plotting. `step` labels the planning invocation.
std::string efe_field_csv(const std::vector<Policy>& policies, int step);

std::vector<Policy> dump_efe_field(const GenerativeModel& model, const Belief& belief,
                                   const PlannerConfig& cfg);

}  // namespace aifnav
