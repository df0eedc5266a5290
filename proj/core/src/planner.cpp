#include "aifnav/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "aifnav/textio.hpp"

namespace aifnav {

namespace {

// Normalized matrices and novelty bonuses, computed once per planning call.
struct PlanModel {
    int num_states = 0;
    std::vector<std::vector<double>> trans[kNumActions];  // [prev] -> column over next
    std::vector<std::vector<double>> obs_cols;            // [s] -> column over o
    std::vector<double> novelty;                          // 1 / obs count mass

    explicit PlanModel(const GenerativeModel& m) : num_states(m.num_states()) {
        for (Action a : all_actions()) {
            auto& t = trans[static_cast<int>(a)];
            t.reserve(num_states);
            for (StateId s = 0; s < num_states; ++s) t.push_back(m.trans_col(s, a));
        }
        obs_cols.reserve(num_states);
        novelty.reserve(num_states);
        for (StateId s = 0; s < num_states; ++s) {
            obs_cols.push_back(m.obs_counts().normalized_col(s));
            novelty.push_back(1.0 / m.obs_count_mass(s));
        }
    }
};

std::vector<double> push_belief(const PlanModel& pm, const std::vector<double>& q,
                                Action a) {
    std::vector<double> out(pm.num_states, 0.0);
    const auto& t = pm.trans[static_cast<int>(a)];
    for (int prev = 0; prev < pm.num_states; ++prev) {
        if (q[prev] == 0.0) continue;
        const auto& col = t[prev];
        for (int next = 0; next < pm.num_states; ++next) out[next] += col[next] * q[prev];
    }
    double mass = 0.0;
    for (double v : out) mass += v;
    for (double& v : out) v /= mass;
    return out;
}

std::vector<double> obs_marginal(const PlanModel& pm, const std::vector<double>& q) {
    const int num_obs = static_cast<int>(pm.obs_cols.empty() ? 0 : pm.obs_cols[0].size());
    std::vector<double> out(num_obs, 0.0);
    for (int s = 0; s < pm.num_states; ++s) {
        if (q[s] == 0.0) continue;
        for (int o = 0; o < num_obs; ++o) out[o] += pm.obs_cols[s][o] * q[s];
    }
    return out;
}

// I(s;o) under joint q(s) * A[o|s], plus the count-inverse novelty bonus.
double step_efe_impl(const PlanModel& pm, const std::vector<double>& q,
                     const PlannerConfig& cfg) {
    const auto q_o = obs_marginal(pm, q);
    double info_gain = 0.0;
    double novelty = 0.0;
    for (int s = 0; s < pm.num_states; ++s) {
        if (q[s] == 0.0) continue;
        const auto& col = pm.obs_cols[s];
        for (size_t o = 0; o < col.size(); ++o) {
            if (col[o] == 0.0) continue;
            info_gain += q[s] * col[o] * std::log(col[o] / q_o[o]);
        }
        novelty += q[s] * pm.novelty[s];
    }
    return -info_gain - cfg.novelty_weight * novelty;
}

struct PlanContext {
    const GenerativeModel& model;
    const PlanModel& pm;
    const PlannerConfig& cfg;
    std::vector<Policy>& out;
    std::vector<Action> actions;
    std::vector<Pose> poses;
};

void expand(PlanContext& ctx, const std::vector<double>& q, Pose pose, double g_acc,
            int depth) {
    for (Action a : all_actions()) {
        const Pose target = pose + delta(a);
        const auto q_next = push_belief(ctx.pm, q, a);
        const double g = g_acc + step_efe_impl(ctx.pm, q_next, ctx.cfg);

        ctx.actions.push_back(a);
        ctx.poses.push_back(target);

        const bool anchored = ctx.model.state_at(target).has_value();
        if (anchored && depth + 1 < ctx.cfg.horizon) {
            expand(ctx, q_next, target, g, depth + 1);
        } else {
            // Leaf: horizon reached, or a probe step into a pose the model
            // holds no state for (wall or beyond the imagined frontier).
            ctx.out.push_back(Policy{ctx.actions, ctx.poses, g});
        }

        ctx.actions.pop_back();
        ctx.poses.pop_back();
    }
}

}  // namespace

std::vector<RolloutStep> rollout(const GenerativeModel& model, const Belief& belief,
                                 const Policy& policy) {
    const PlanModel pm(model);
    std::vector<RolloutStep> out;
    out.reserve(policy.actions.size());
    std::vector<double> q = belief.state_probs;
    for (Action a : policy.actions) {
        q = push_belief(pm, q, a);
        out.push_back(RolloutStep{q, obs_marginal(pm, q)});
    }
    return out;
}

double step_efe(const GenerativeModel& model, const std::vector<double>& q_s,
                const PlannerConfig& cfg) {
    return step_efe_impl(PlanModel(model), q_s, cfg);
}

double policy_efe(const GenerativeModel& model, const Belief& belief,
                  const Policy& policy, const PlannerConfig& cfg) {
    const PlanModel pm(model);
    std::vector<double> q = belief.state_probs;
    double g = 0.0;
    for (Action a : policy.actions) {
        q = push_belief(pm, q, a);
        g += step_efe_impl(pm, q, cfg);
    }
    return g;
}

std::vector<Policy> plan_policies(const GenerativeModel& model, const Belief& belief,
                                  const PlannerConfig& cfg) {
    if (cfg.horizon < 1) throw std::invalid_argument("planner horizon must be >= 1");
    const PlanModel pm(model);
    std::vector<Policy> out;
    PlanContext ctx{model, pm, cfg, out, {}, {}};
    expand(ctx, belief.state_probs, belief.pose, 0.0, 0);
    return out;
}

std::vector<double> policy_posterior(const std::vector<Policy>& policies,
                                     const PlannerConfig& cfg) {
    if (policies.empty()) throw std::invalid_argument("no candidate policies");
    double g_min = policies[0].efe;
    for (const auto& p : policies) g_min = std::min(g_min, p.efe);

    std::vector<double> probs(policies.size());
    double mass = 0.0;
    for (size_t i = 0; i < policies.size(); ++i) {
        probs[i] = std::exp(-cfg.gamma * (policies[i].efe - g_min));
        mass += probs[i];
    }
    for (double& v : probs) v /= mass;
    return probs;
}

Action select_action(const std::vector<Policy>& policies, const PlannerConfig& cfg,
                     Rng& rng) {
    const auto probs = policy_posterior(policies, cfg);
    const int pick = rng.sample_categorical(probs);
    return policies[pick].actions.front();
}

std::vector<Policy> dump_efe_field(const GenerativeModel& model, const Belief& belief,
                                   const PlannerConfig& cfg) {
    return plan_policies(model, belief, cfg);
}

std::string efe_field_csv(const std::vector<Policy>& policies, int step) {
    std::string out = "# aifnav-efe v1\n";
    out += "step,actions,poses,efe\n";
    for (const auto& p : policies) {
        out += std::to_string(step);
        out += ',';
        for (size_t i = 0; i < p.actions.size(); ++i) {
            if (i) out += '|';
            out += to_string(p.actions[i]);
        }
        out += ',';
        for (size_t i = 0; i < p.pose_path.size(); ++i) {
            if (i) out += '|';
            out += std::to_string(p.pose_path[i].x) + ':' + std::to_string(p.pose_path[i].y);
        }
        out += ',';
        out += format_double(p.efe);
        out += '\n';
    }
    return out;
}

}  // namespace aifnav
