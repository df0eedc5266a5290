#pragma once

#include <set>

#include "aifnav/inference.hpp"
#include "aifnav/model.hpp"

namespace aifnav {

// Count-increment scales for real and imagined transitions. Experienced
// evidence must outweigh imagination so the agent confirms its priors
// instead of over-trusting them.
struct LearningConfig {
    double lr_experienced = 1.0;
    double lr_imagined = 0.1;
    double epsilon_floor = 0.01;
    double strong_count = 10.0;

    void validate() const;
};

// Accumulates one real step into the counts:
//   trans[s',s,a] += lr_exp * new[s'] * prev[s]
//   obs[o,s']     += lr_exp * new[s']
//   pos[p',s']    += lr_exp * new[s']
// and promotes the modal new state to Experienced. No-op while lost.
void update_on_step(GenerativeModel& model, const Belief& prev_belief, Action action,
                    const Belief& new_belief, const StepOutcome& outcome,
                    const LearningConfig& cfg, bool lost);

// Grows the map over the one-step predictions from the current modal state:
// unblocked directions get an Imagined state at the predicted pose (if none
// exists) with weak forward and reverse transition links; blocked directions
// and Stay get weak self-links. Each (state, action) prior is seeded at most
// once, which makes the whole operation idempotent. No-op while lost.
void extend_map(GenerativeModel& model, const Belief& belief,
                const std::set<Action>& blocked_dirs, const LearningConfig& cfg, bool lost);

}  // namespace aifnav
