#include "aifnav/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aifnav {

Pose predict_pose(Pose pose, Action action, bool moved) {
    return moved ? pose + delta(action) : pose;
}

std::vector<double> predict_states(const GenerativeModel& model,
                                   const std::vector<double>& prev_probs, Action action) {
    const int n = model.num_states();
    std::vector<double> pred(n, 0.0);
    for (int prev = 0; prev < n; ++prev) {
        if (prev_probs[prev] == 0.0) continue;
        const auto col = model.trans_col(prev, action);
        for (int next = 0; next < n; ++next) pred[next] += col[next] * prev_probs[prev];
    }
    return pred;
}

Belief infer_state(const GenerativeModel& model, const Belief& prev, Action action,
                   const StepOutcome& outcome) {
    if (outcome.observation >= model.num_obs())
        throw std::invalid_argument("observation outside the known alphabet; grow first");

    const Pose next_pose = predict_pose(prev.pose, action, outcome.moved);
    const auto pos_idx = model.position_index(next_pose);

    const int n = model.num_states();
    std::vector<double> post = predict_states(model, prev.state_probs, action);
    for (StateId s = 0; s < n; ++s) {
        post[s] *= model.obs_prob(outcome.observation, s);
        if (pos_idx) post[s] *= model.pos_prob(*pos_idx, s);
    }

    double mass = 0.0;
    for (double v : post) mass += v;
    if (!(mass > 0.0))
        throw std::runtime_error("inference produced an all-zero posterior");
    for (double& v : post) v /= mass;

    Belief out;
    out.state_probs = std::move(post);
    out.pose = next_pose;
    out.confidence = *std::max_element(out.state_probs.begin(), out.state_probs.end());
    return out;
}

double variational_free_energy(const GenerativeModel& model, const Belief& posterior,
                               const std::vector<double>& prior_pred, ObsId obs) {
    const std::vector<double> prior = normalized(prior_pred);
    double complexity = 0.0;
    double accuracy = 0.0;
    for (StateId s = 0; s < model.num_states(); ++s) {
        const double q = posterior.state_probs[s];
        if (q <= 0.0) continue;
        complexity += q * std::log(q / prior[s]);
        accuracy += q * std::log(model.obs_prob(obs, s));
    }
    return complexity - accuracy;
}

ConfidenceStatus check_confidence(const Belief& belief, double threshold) {
    return belief.confidence < threshold ? ConfidenceStatus::Lost
                                         : ConfidenceStatus::Confident;
}

}  // namespace aifnav
