#include "aifnav/model.hpp"

#include <stdexcept>
#include <string>

namespace aifnav {

const char* to_string(Action a) {
    switch (a) {
        case Action::North: return "north";
        case Action::East: return "east";
        case Action::South: return "south";
        case Action::West: return "west";
        case Action::Stay: return "stay";
    }
    return "?";
}

Action action_from_string(const std::string& name) {
    for (Action a : all_actions())
        if (name == to_string(a)) return a;
    throw std::invalid_argument("unknown action name: " + name);
}

GrowableMatrix normalized(const GrowableMatrix& counts) {
    GrowableMatrix out = counts;
    for (int c = 0; c < counts.cols(); ++c) {
        const double s = counts.col_sum(c);
        for (int r = 0; r < counts.rows(); ++r) out.at(r, c) = counts.at(r, c) / s;
    }
    return out;
}

std::vector<double> normalized(const std::vector<double>& counts) {
    double s = 0.0;
    for (double v : counts) s += v;
    std::vector<double> out = counts;
    for (double& v : out) v /= s;
    return out;
}

GenerativeModel GenerativeModel::create(ObsId first_obs, PriorConfig prior) {
    if (first_obs < 0) throw std::invalid_argument("observation ids are non-negative");
    GenerativeModel m;
    m.prior_ = prior;

    const int num_obs = first_obs + 1;
    m.obs_counts_ = GrowableMatrix(num_obs, 1, prior.epsilon);
    m.obs_counts_.at(first_obs, 0) = prior.strong;

    m.pos_counts_ = GrowableMatrix(1, 1, prior.strong);
    m.positions_.push_back(Pose{0, 0});
    m.pose_to_position_[Pose{0, 0}] = 0;

    for (auto& t : m.trans_counts_) t = GrowableMatrix(1, 1, prior.epsilon);

    m.states_.push_back(StateInfo{StateStatus::Experienced, Pose{0, 0}, 0});
    m.pose_to_state_[Pose{0, 0}] = 0;
    return m;
}

void GenerativeModel::grow_observation(ObsId new_obs) {
    if (new_obs != num_obs())
        throw std::invalid_argument("observation ids must stay dense: expected " +
                                    std::to_string(num_obs()) + ", got " +
                                    std::to_string(new_obs));
    obs_counts_.add_row(prior_.epsilon);
}

int GenerativeModel::ensure_position(Pose p) {
    auto it = pose_to_position_.find(p);
    if (it != pose_to_position_.end()) return it->second;
    const int idx = num_positions();
    pos_counts_.add_row(prior_.epsilon);
    positions_.push_back(p);
    pose_to_position_[p] = idx;
    return idx;
}

StateId GenerativeModel::grow_state(Pose anchor, StateStatus status) {
    if (pose_to_state_.count(anchor))
        throw std::invalid_argument("a state is already anchored at this pose");

    const StateId s = num_states();
    obs_counts_.add_col(prior_.epsilon);

    const int pos_idx = ensure_position(anchor);
    pos_counts_.add_col(prior_.epsilon);
    pos_counts_.at(pos_idx, s) = prior_.strong;

    for (auto& t : trans_counts_) {
        t.add_row(prior_.epsilon);
        t.add_col(prior_.epsilon);
    }

    states_.push_back(StateInfo{status, anchor, 0});
    pose_to_state_[anchor] = s;
    return s;
}

std::optional<StateId> GenerativeModel::state_at(Pose p) const {
    auto it = pose_to_state_.find(p);
    if (it == pose_to_state_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> GenerativeModel::position_index(Pose p) const {
    auto it = pose_to_position_.find(p);
    if (it == pose_to_position_.end()) return std::nullopt;
    return it->second;
}

}  // namespace aifnav
