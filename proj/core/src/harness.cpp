#include "aifnav/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "aifnav/snapshot.hpp"
#include "aifnav/textio.hpp"

namespace aifnav {

namespace {

// Environment colors are arbitrary ids; the agent's alphabet is dense in
// order of first appearance.
class ObservationEncoder {
public:
    ObsId encode(int color) {
        auto it = ids_.find(color);
        if (it != ids_.end()) return it->second;
        const ObsId id = static_cast<ObsId>(ids_.size());
        ids_[color] = id;
        return id;
    }

private:
    std::map<int, ObsId> ids_;
};

void check_column_sums(const GrowableMatrix& counts, const char* what) {
    for (int c = 0; c < counts.cols(); ++c) {
        double sum = 0.0;
        for (double v : counts.normalized_col(c)) {
            if (!(v >= 0.0)) throw std::runtime_error(std::string(what) + ": negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::runtime_error(std::string(what) + ": column does not normalize");
    }
}

void check_model_invariants(const GenerativeModel& model, const Belief& belief) {
    check_column_sums(model.obs_counts(), "obs likelihood");
    check_column_sums(model.pos_counts(), "pos likelihood");
    for (Action a : all_actions()) check_column_sums(model.trans_counts(a), "transitions");

    double sum = 0.0;
    double max_p = 0.0;
    for (double v : belief.state_probs) {
        if (!(v >= 0.0)) throw std::runtime_error("belief: negative probability");
        sum += v;
        max_p = std::max(max_p, v);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::runtime_error("belief does not normalize");
    if (belief.confidence != max_p) throw std::runtime_error("confidence is not max belief");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

struct RoomPoseFrame {
    int start_row = 0;
    int start_col = 0;

    Pose pose_of(int r, int c) const { return Pose{c - start_col, start_row - r}; }
    std::pair<int, int> cell_of(Pose p) const { return {start_row - p.y, start_col + p.x}; }
};

RunResult run_driver(const RunConfig& cfg, bool random_actions) {
    cfg.learning.validate();
    const RoomWorldSpec spec = load_env(cfg.env);
    if (cfg.accuracy_threshold <= 0.0 || cfg.accuracy_threshold > 1.0)
        throw std::invalid_argument("accuracy threshold must be in (0,1]");

    auto [env, first_color, first_blocked] = reset(spec, cfg.seed);
    const int start_room = spec.room_index(env.row, env.col);

    ObservationEncoder encoder;
    const ObsId first_obs = encoder.encode(first_color);
    GenerativeModel model = GenerativeModel::create(
        first_obs, PriorConfig{cfg.learning.epsilon_floor, cfg.learning.strong_count});
    Belief belief{{1.0}, Pose{0, 0}, 1.0};
    bool lost = false;
    extend_map(model, belief, first_blocked, cfg.learning, lost);

    const int total_rooms = spec.room_count();
    std::vector<uint8_t> visited(total_rooms, 0);
    visited[start_room] = 1;
    int rooms_seen = 1;

    RunResult result;
    result.env = cfg.env;
    result.seed = cfg.seed;
    result.start_room = start_room;
    if (rooms_seen == total_rooms) result.steps_to_discovery = 0;

    double accuracy =
        transition_accuracy(model, spec, match_states_to_rooms(model, spec, start_room));
    if (result.steps_to_discovery && accuracy >= cfg.accuracy_threshold)
        result.steps_to_complete = 0;

    TraceRecord first;
    first.step = 0;
    first.initial = true;
    first.observation = first_obs;
    first.pose = belief.pose;
    first.confidence = belief.confidence;
    first.lost = lost;
    first.accuracy = accuracy;
    result.trace.push_back(first);
    if (cfg.check_invariants) check_model_invariants(model, belief);

    const bool writing = !cfg.output_dir.empty();
    if (writing) std::filesystem::create_directories(cfg.output_dir);

    Rng rng(cfg.planner.rng_seed);
    for (int t = 1; t <= cfg.max_steps && !result.steps_to_complete; ++t) {
        if (cfg.teleport && cfg.teleport->at_step == t) {
            auto [r, c] = spec.rooms().at(cfg.teleport->room);
            env.row = r;
            env.col = c;
        }

        Action action;
        if (random_actions) {
            action = all_actions()[rng.uniform_int(kNumActions)];
        } else {
            const auto policies = plan_policies(model, belief, cfg.planner);
            if (cfg.dump_efe && writing)
                write_file(std::filesystem::path(cfg.output_dir) /
                               ("efe_" + std::to_string(t - 1) + ".csv"),
                           efe_field_csv(policies, t - 1));
            action = select_action(policies, cfg.planner, rng);
        }

        auto [next_env, env_step] = step(spec, env, action);
        env = next_env;
        const int room = spec.room_index(env.row, env.col);
        if (!visited[room]) {
            visited[room] = 1;
            if (++rooms_seen == total_rooms) result.steps_to_discovery = t;
        }

        const ObsId obs = encoder.encode(env_step.color);
        if (obs == model.num_obs()) model.grow_observation(obs);

        StepOutcome outcome{env_step.moved, obs, env_step.blocked};
        // While lost the pose estimate freezes so the anchor frame cannot be
        // dragged along by moves the agent cannot account for.
        if (lost) outcome.moved = false;

        const auto prior_pred = predict_states(model, belief.state_probs, action);
        const Belief new_belief = infer_state(model, belief, action, outcome);
        const double vfe = variational_free_energy(model, new_belief, prior_pred, obs);
        lost = check_confidence(new_belief, cfg.confidence_threshold) ==
               ConfidenceStatus::Lost;

        update_on_step(model, belief, action, new_belief, outcome, cfg.learning, lost);
        extend_map(model, new_belief, outcome.blocked_dirs, cfg.learning, lost);
        belief = new_belief;

        accuracy = transition_accuracy(model, spec,
                                       match_states_to_rooms(model, spec, start_room));
        if (!result.steps_to_complete && rooms_seen == total_rooms &&
            accuracy >= cfg.accuracy_threshold)
            result.steps_to_complete = t;

        TraceRecord rec;
        rec.step = t;
        rec.action = action;
        rec.observation = obs;
        rec.moved = env_step.moved;
        rec.pose = belief.pose;
        rec.confidence = belief.confidence;
        rec.vfe = vfe;
        rec.lost = lost;
        rec.accuracy = accuracy;
        result.trace.push_back(rec);
        if (cfg.check_invariants) check_model_invariants(model, belief);
    }

    result.final_accuracy = accuracy;
    result.model = std::move(model);

    if (writing) {
        const std::filesystem::path dir(cfg.output_dir);
        write_file(dir / "trace.csv", trace_csv(result));
        write_file(dir / "model.json", model_to_json(result.model));
        write_file(dir / "transitions.csv",
                   transition_plot_csv(result.model, spec,
                                       match_states_to_rooms(result.model, spec,
                                                             start_room)));
    }
    return result;
}

}  // namespace

RunResult run_episode(const RunConfig& cfg) { return run_driver(cfg, false); }

RunResult random_baseline(const RunConfig& cfg) { return run_driver(cfg, true); }

std::vector<int> match_states_to_rooms(const GenerativeModel& model,
                                       const RoomWorldSpec& spec, int start_room) {
    const auto all = spec.rooms();
    const RoomPoseFrame frame{all.at(start_room).first, all.at(start_room).second};
    std::vector<int> out(model.num_states(), -1);
    for (StateId s = 0; s < model.num_states(); ++s) {
        if (model.state(s).status != StateStatus::Experienced) continue;
        auto [r, c] = frame.cell_of(model.state(s).anchor);
        out[s] = spec.room_index(r, c);
    }
    return out;
}

double transition_accuracy(const GenerativeModel& model, const RoomWorldSpec& spec,
                           const std::vector<int>& state_to_room) {
    if (state_to_room.empty() || state_to_room[0] < 0) return 0.0;
    const auto all = spec.rooms();
    auto [r0, c0] = all.at(state_to_room[0]);
    const RoomPoseFrame frame{r0, c0};

    double total = 0.0;
    int pairs = 0;
    for (StateId s = 0; s < model.num_states(); ++s) {
        const int room = state_to_room[s];
        if (room < 0) continue;
        auto [r, c] = all.at(room);
        for (Action a : all_actions()) {
            int tr = r, tc = c;
            if (a != Action::Stay && spec.door(r, c, a)) {
                const Pose d = delta(a);
                tr -= d.y;
                tc += d.x;
            }
            const auto successor = model.state_at(frame.pose_of(tr, tc));
            const auto col = model.trans_col(s, a);
            total += successor ? col[*successor] : 0.0;
            ++pairs;
        }
    }
    return pairs ? total / pairs : 0.0;
}

int oracle_steps(const RoomWorldSpec& spec, int start_room) {
    const int n = spec.room_count();
    if (n > 20)
        throw std::runtime_error("covering-walk search supports at most 20 rooms, got " +
                                 std::to_string(n));
    if (start_room < 0 || start_room >= n)
        throw std::invalid_argument("start room out of range");

    // Neighbor lists over door moves.
    const auto all = spec.rooms();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        auto [r, c] = all[i];
        for (Action a : cardinal_actions()) {
            if (!spec.door(r, c, a)) continue;
            const Pose d = delta(a);
            adj[i].push_back(spec.room_index(r - d.y, c + d.x));
        }
    }

    const uint32_t full = (1u << n) - 1;
    const uint32_t start_mask = 1u << start_room;
    if (start_mask == full) return 0;

    // Breadth-first over (room, visited-set); every edge costs one step, so
    // the first full set popped is optimal.
    std::vector<bool> seen(static_cast<size_t>(n) << n, false);
    std::queue<std::pair<int, uint32_t>> frontier;
    frontier.emplace(start_room, start_mask);
    seen[(static_cast<size_t>(start_room) << n) | start_mask] = true;
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        for (size_t level = frontier.size(); level > 0; --level) {
            auto [room, mask] = frontier.front();
            frontier.pop();
            for (int next : adj[room]) {
                const uint32_t next_mask = mask | (1u << next);
                if (next_mask == full) return depth;
                const size_t key = (static_cast<size_t>(next) << n) | next_mask;
                if (!seen[key]) {
                    seen[key] = true;
                    frontier.emplace(next, next_mask);
                }
            }
        }
    }
    throw std::runtime_error("environment is not coverable from this start");
}

namespace {

struct Stats {
    double median = 0, mean = 0, min = 0, max = 0;
};

Stats aggregate(std::vector<double> values) {
    Stats s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    s.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    s.min = values.front();
    s.max = values.back();
    return s;
}

BatchRow make_row(const std::string& env, const std::string& method,
                  const std::vector<double>& discovery,
                  const std::vector<double>& complete, int failures) {
    BatchRow row;
    row.env = env;
    row.method = method;
    row.runs = static_cast<int>(discovery.size());
    row.failures = failures;
    const Stats d = aggregate(discovery);
    row.discovery_median = d.median;
    row.discovery_mean = d.mean;
    row.discovery_min = d.min;
    row.discovery_max = d.max;
    const Stats c = aggregate(complete);
    row.complete_median = c.median;
    row.complete_mean = c.mean;
    row.complete_min = c.min;
    row.complete_max = c.max;
    return row;
}

}  // namespace

std::vector<BatchRow> batch(const RunConfig& base, const std::vector<std::string>& envs,
                            int n_seeds) {
    if (n_seeds < 1) throw std::invalid_argument("need at least one seed");
    std::vector<BatchRow> rows;
    for (const auto& env : envs) {
        const RoomWorldSpec spec = load_env(env);
        std::vector<double> agent_d, agent_c, rand_d, rand_c, oracle_d;
        int agent_fail = 0, rand_fail = 0;
        for (int i = 0; i < n_seeds; ++i) {
            RunConfig cfg = base;
            cfg.env = env;
            cfg.seed = base.seed + static_cast<uint64_t>(i);
            cfg.planner.rng_seed = cfg.seed;
            cfg.output_dir.clear();

            const RunResult agent = run_episode(cfg);
            agent_d.push_back(agent.steps_to_discovery.value_or(cfg.max_steps));
            agent_c.push_back(agent.steps_to_complete.value_or(cfg.max_steps));
            agent_fail += agent.steps_to_complete ? 0 : 1;

            const RunResult rnd = random_baseline(cfg);
            rand_d.push_back(rnd.steps_to_discovery.value_or(cfg.max_steps));
            rand_c.push_back(rnd.steps_to_complete.value_or(cfg.max_steps));
            rand_fail += rnd.steps_to_complete ? 0 : 1;

            oracle_d.push_back(oracle_steps(spec, agent.start_room));
        }
        rows.push_back(make_row(env, "agent", agent_d, agent_c, agent_fail));
        rows.push_back(make_row(env, "random", rand_d, rand_c, rand_fail));
        rows.push_back(make_row(env, "oracle", oracle_d, oracle_d, 0));
    }
    return rows;
}

std::string trace_csv(const RunResult& result) {
    std::string out = "# aifnav-trace v1\n";
    out += "step,action,observation,moved,pose_x,pose_y,confidence,vfe,lost,accuracy\n";
    for (const auto& rec : result.trace) {
        out += std::to_string(rec.step);
        out += ',';
        out += rec.initial ? "init" : to_string(rec.action);
        out += ',';
        out += std::to_string(rec.observation);
        out += ',';
        out += rec.moved ? '1' : '0';
        out += ',';
        out += std::to_string(rec.pose.x);
        out += ',';
        out += std::to_string(rec.pose.y);
        out += ',';
        out += format_double(rec.confidence);
        out += ',';
        out += format_double(rec.vfe);
        out += ',';
        out += rec.lost ? '1' : '0';
        out += ',';
        out += format_double(rec.accuracy);
        out += '\n';
    }
    return out;
}

std::string batch_csv(const std::vector<BatchRow>& rows) {
    std::string out = "# aifnav-batch v1\n";
    out +=
        "env,method,runs,failures,discovery_median,discovery_mean,discovery_min,"
        "discovery_max,complete_median,complete_mean,complete_min,complete_max\n";
    for (const auto& r : rows) {
        out += r.env + ',' + r.method + ',' + std::to_string(r.runs) + ',' +
               std::to_string(r.failures) + ',' + format_double(r.discovery_median) +
               ',' + format_double(r.discovery_mean) + ',' +
               format_double(r.discovery_min) + ',' + format_double(r.discovery_max) +
               ',' + format_double(r.complete_median) + ',' +
               format_double(r.complete_mean) + ',' + format_double(r.complete_min) +
               ',' + format_double(r.complete_max) + '\n';
    }
    return out;
}

std::string transition_plot_csv(const GenerativeModel& model, const RoomWorldSpec& spec,
                                const std::vector<int>& state_to_room) {
    std::string out = "# aifnav-transitions v1\n";
    out += "pose_x,pose_y,state,room,action,successor,successor_pose_x,successor_pose_y,"
           "probability\n";
    for (StateId s = 0; s < model.num_states(); ++s) {
        const Pose anchor = model.state(s).anchor;
        const int room = s < static_cast<StateId>(state_to_room.size()) ? state_to_room[s] : -1;
        for (Action a : all_actions()) {
            const auto col = model.trans_col(s, a);
            for (StateId next = 0; next < model.num_states(); ++next) {
                const Pose next_anchor = model.state(next).anchor;
                out += std::to_string(anchor.x) + ',' + std::to_string(anchor.y) + ',' +
                       std::to_string(s) + ',' + std::to_string(room) + ',' +
                       to_string(a) + ',' + std::to_string(next) + ',' +
                       std::to_string(next_anchor.x) + ',' +
                       std::to_string(next_anchor.y) + ',' + format_double(col[next]) +
                       '\n';
            }
        }
    }
    return out;
}

}  // namespace aifnav
