#pragma once

#include <set>
#include <vector>

#include "aifnav/model.hpp"
#include "aifnav/types.hpp"

namespace aifnav {

// Categorical over the current state set plus a point-estimate pose.
// confidence is always max(state_probs).
struct Belief {
    std::vector<double> state_probs;
    Pose pose;
    double confidence = 0.0;
};

// What one environment step looked like from the agent's side: whether a door
// was actually traversed, the observed room color, and which cardinal
// directions are walled off in the room it now occupies.
struct StepOutcome {
    bool moved = false;
    ObsId observation = 0;
    std::set<Action> blocked_dirs;
};

enum class ConfidenceStatus { Confident, Lost };

Pose predict_pose(Pose pose, Action action, bool moved);

// Transition-predicted state prior B_a * prev (the prior used inside
// infer_state, also needed for the free-energy diagnostic).
std::vector<double> predict_states(const GenerativeModel& model,
                                   const std::vector<double>& prev_probs, Action action);

// One sequential Bayes step:
//   posterior(s) ∝ A_o[o|s] * A_p[p'|s] * sum_{s'} B_s[s|s',a] * prev[s']
// with p' = predict_pose(prev.pose, action, outcome.moved). A pose that has no
// registered position row contributes no evidence (uniform factor); that only
// happens when the agent has been displaced externally.
Belief infer_state(const GenerativeModel& model, const Belief& prev, Action action,
                   const StepOutcome& outcome);

// Complexity minus accuracy for the just-completed step. Diagnostic only.
double variational_free_energy(const GenerativeModel& model, const Belief& posterior,
                               const std::vector<double>& prior_pred, ObsId obs);

ConfidenceStatus check_confidence(const Belief& belief, double threshold);

}  // namespace aifnav
