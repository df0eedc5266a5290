#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "aifnav/matrix.hpp"
#include "aifnav/types.hpp"

namespace aifnav {

// Pseudo-count constants used when initializing likelihood columns.
// epsilon keeps every categorical proper; strong encodes "high certainty"
// for directly observed evidence while staying revisable.
struct PriorConfig {
    double epsilon = 0.01;
    double strong = 10.0;

    friend bool operator==(const PriorConfig&, const PriorConfig&) = default;
};

struct StateInfo {
    StateStatus status = StateStatus::Imagined;
    Pose anchor;
    // One bit per action: the transition prior for (state, action) has been
    // seeded once by map extension. Keeps extend_map idempotent.
    uint8_t seeded_actions = 0;

    friend bool operator==(const StateInfo&, const StateInfo&) = default;
};

// The agent's growing generative model, stored as Dirichlet pseudo-counts:
//   obs_counts   [num_obs x num_states]        A_o = P(o | s)
//   pos_counts   [num_positions x num_states]  A_p = P(p | s)
//   trans_counts [num_states x num_states] x 5 B_s = P(s_t | s_{t-1}, a)
// Pose dynamics are exact integer arithmetic (predict_pose), not a matrix.
class GenerativeModel {
public:
    // Empty shell; usable model instances come from create().
    GenerativeModel() = default;

    // One Experienced state anchored at (0,0) whose observation column is
    // concentrated on the first observation.
    static GenerativeModel create(ObsId first_obs, PriorConfig prior = {});

    int num_obs() const { return obs_counts_.rows(); }
    int num_states() const { return static_cast<int>(states_.size()); }
    int num_positions() const { return pos_counts_.rows(); }
    const PriorConfig& prior() const { return prior_; }

    // Expands the observation alphabet with the next dense id. The new row is
    // all-epsilon; columns renormalize lazily at read time.
    void grow_observation(ObsId new_obs);

    // Adds a state anchored at a previously unoccupied pose. The observation
    // column starts uniform, the position column one-hot at the anchor, and
    // the transition row/column at the floor. Returns the new id.
    StateId grow_state(Pose anchor, StateStatus status);

    std::optional<StateId> state_at(Pose p) const;
    std::optional<int> position_index(Pose p) const;
    Pose position(int index) const { return positions_[index]; }
    // Registers a position row if missing; returns its index.
    int ensure_position(Pose p);

    const StateInfo& state(StateId s) const { return states_[s]; }
    void set_experienced(StateId s) { states_[s].status = StateStatus::Experienced; }
    bool action_seeded(StateId s, Action a) const {
        return states_[s].seeded_actions & (1u << static_cast<int>(a));
    }
    void mark_seeded(StateId s, Action a) {
        states_[s].seeded_actions |= (1u << static_cast<int>(a));
    }

    const GrowableMatrix& obs_counts() const { return obs_counts_; }
    const GrowableMatrix& pos_counts() const { return pos_counts_; }
    const GrowableMatrix& trans_counts(Action a) const {
        return trans_counts_[static_cast<int>(a)];
    }

    void add_obs_count(ObsId o, StateId s, double amount) { obs_counts_.at(o, s) += amount; }
    void add_pos_count(int pos_index, StateId s, double amount) {
        pos_counts_.at(pos_index, s) += amount;
    }
    void add_trans_count(StateId next, StateId prev, Action a, double amount) {
        trans_counts_[static_cast<int>(a)].at(next, prev) += amount;
    }

    // Normalized reads.
    double obs_prob(ObsId o, StateId s) const {
        return obs_counts_.at(o, s) / obs_counts_.col_sum(s);
    }
    double pos_prob(int pos_index, StateId s) const {
        return pos_counts_.at(pos_index, s) / pos_counts_.col_sum(s);
    }
    // Normalized B_s[: | prev, a].
    std::vector<double> trans_col(StateId prev, Action a) const {
        return trans_counts_[static_cast<int>(a)].normalized_col(prev);
    }
    // Total observation pseudo-count mass of a state; its inverse is the
    // parameter-novelty bonus used by the planner.
    double obs_count_mass(StateId s) const { return obs_counts_.col_sum(s); }

    friend bool operator==(const GenerativeModel&, const GenerativeModel&) = default;

private:
    PriorConfig prior_;
    GrowableMatrix obs_counts_;
    GrowableMatrix pos_counts_;
    std::array<GrowableMatrix, kNumActions> trans_counts_;
    std::vector<StateInfo> states_;
    std::vector<Pose> positions_;
    std::map<Pose, int> pose_to_position_;
    std::map<Pose, StateId> pose_to_state_;
};

}  // namespace aifnav
