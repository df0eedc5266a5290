#include "aifnav/learning.hpp"

#include <algorithm>
#include <stdexcept>

namespace aifnav {

void LearningConfig::validate() const {
    if (lr_experienced <= 0.0 || lr_imagined <= 0.0 || epsilon_floor <= 0.0 ||
        strong_count <= 0.0)
        throw std::invalid_argument("learning constants must be positive");
    if (lr_experienced <= lr_imagined)
        throw std::invalid_argument("lr_experienced must exceed lr_imagined");
}

namespace {

StateId modal_state(const Belief& b) {
    return static_cast<StateId>(
        std::max_element(b.state_probs.begin(), b.state_probs.end()) -
        b.state_probs.begin());
}

}  // namespace

void update_on_step(GenerativeModel& model, const Belief& prev_belief, Action action,
                    const Belief& new_belief, const StepOutcome& outcome,
                    const LearningConfig& cfg, bool lost) {
    if (lost) return;

    const int n = model.num_states();
    const double lr = cfg.lr_experienced;

    for (StateId prev = 0; prev < n; ++prev) {
        const double qp = prev_belief.state_probs[prev];
        if (qp == 0.0) continue;
        for (StateId next = 0; next < n; ++next) {
            const double qn = new_belief.state_probs[next];
            if (qn == 0.0) continue;
            model.add_trans_count(next, prev, action, lr * qn * qp);
        }
    }

    const int pos_idx = model.ensure_position(new_belief.pose);
    for (StateId next = 0; next < n; ++next) {
        const double qn = new_belief.state_probs[next];
        if (qn == 0.0) continue;
        model.add_obs_count(outcome.observation, next, lr * qn);
        model.add_pos_count(pos_idx, next, lr * qn);
    }

    model.set_experienced(modal_state(new_belief));
}

namespace {

// Every (state, action) transition prior is seeded at most once, whether by
// the state's own extension pass or by a neighbor's reverse link.
void seed_once(GenerativeModel& model, StateId from, Action a, StateId to, double lr) {
    if (model.action_seeded(from, a)) return;
    model.add_trans_count(to, from, a, lr);
    model.mark_seeded(from, a);
}

}  // namespace

void extend_map(GenerativeModel& model, const Belief& belief,
                const std::set<Action>& blocked_dirs, const LearningConfig& cfg,
                bool lost) {
    if (lost) return;

    const StateId cur = modal_state(belief);
    const double lr = cfg.lr_imagined;

    for (Action a : cardinal_actions()) {
        if (blocked_dirs.count(a)) {
            seed_once(model, cur, a, cur, lr);
            continue;
        }
        const Pose target = belief.pose + delta(a);
        StateId next;
        if (auto existing = model.state_at(target)) {
            next = *existing;
        } else {
            next = model.grow_state(target, StateStatus::Imagined);
        }
        seed_once(model, cur, a, next, lr);
        seed_once(model, next, inverse(a), cur, lr);
    }

    seed_once(model, cur, Action::Stay, cur, lr);
}

}  // namespace aifnav
