#include "aifnav/snapshot.hpp"

#include <nlohmann/json.hpp>

namespace aifnav {

using nlohmann::json;

std::string model_to_json(const GenerativeModel& model) {
    json j;
    j["format"] = "aifnav-model";
    j["version"] = 1;
    j["num_obs"] = model.num_obs();
    j["num_states"] = model.num_states();
    j["num_positions"] = model.num_positions();
    j["epsilon"] = model.prior().epsilon;
    j["strong"] = model.prior().strong;

    json states = json::array();
    for (StateId s = 0; s < model.num_states(); ++s) {
        const StateInfo& info = model.state(s);
        states.push_back({
            {"id", s},
            {"status", info.status == StateStatus::Experienced ? "experienced" : "imagined"},
            {"anchor", {info.anchor.x, info.anchor.y}},
        });
    }
    j["states"] = states;

    json positions = json::array();
    for (int p = 0; p < model.num_positions(); ++p)
        positions.push_back({model.position(p).x, model.position(p).y});
    j["positions"] = positions;

    // One normalized column per state: the conditional given that state.
    json obs_cols = json::array();
    json pos_cols = json::array();
    for (StateId s = 0; s < model.num_states(); ++s) {
        obs_cols.push_back(model.obs_counts().normalized_col(s));
        pos_cols.push_back(model.pos_counts().normalized_col(s));
    }
    j["obs_likelihood"] = obs_cols;
    j["pos_likelihood"] = pos_cols;

    json trans;
    for (Action a : all_actions()) {
        json per_prev = json::array();
        for (StateId prev = 0; prev < model.num_states(); ++prev)
            per_prev.push_back(model.trans_col(prev, a));
        trans[to_string(a)] = per_prev;
    }
    j["transitions"] = trans;

    return j.dump(2) + "\n";
}

}  // namespace aifnav
