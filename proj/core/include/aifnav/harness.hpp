#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aifnav/inference.hpp"
#include "aifnav/learning.hpp"
#include "aifnav/model.hpp"
#include "aifnav/planner.hpp"
#include "aifnav/roomworld.hpp"

namespace aifnav {

// Test hook: relocate the environment agent to `room` right before the action
// of step `at_step` is taken.
struct Teleport {
    int at_step = 0;
    int room = 0;
};

struct RunConfig {
    std::string env = "grid3x3";
    uint64_t seed = 0;
    int max_steps = 200;
    double accuracy_threshold = 0.6;
    double confidence_threshold = 0.5;
    PlannerConfig planner;
    LearningConfig learning;
    std::string output_dir;  // empty: no files written
    bool dump_efe = false;
    bool check_invariants = false;
    std::optional<Teleport> teleport;
};

struct TraceRecord {
    int step = 0;
    Action action = Action::Stay;
    bool initial = false;  // step-0 record carries the first observation, no action
    ObsId observation = 0;
    bool moved = false;
    Pose pose;
    double confidence = 0.0;
    double vfe = 0.0;
    bool lost = false;
    double accuracy = 0.0;
};

struct RunResult {
    std::string env;
    uint64_t seed = 0;
    int start_room = -1;
    std::optional<int> steps_to_discovery;  // first step with every room visited
    std::optional<int> steps_to_complete;   // first step with accuracy >= threshold
    double final_accuracy = 0.0;
    std::vector<TraceRecord> trace;
    GenerativeModel model;
};

// Full exploration episode: observe, grow the alphabet on new colors, infer,
// learn, extend the map, check completion, plan by expected free energy, act.
// Deterministic given the seed. Writes trace/snapshot/transition files into
// cfg.output_dir when set.
RunResult run_episode(const RunConfig& cfg);

// Identical loop with uniformly random actions; isolates the planner's
// contribution.
RunResult random_baseline(const RunConfig& cfg);

// Maps each Experienced state to the ground-truth room its anchor pose lands
// on, using the start room as the origin; -1 for imagined or unmappable states.
std::vector<int> match_states_to_rooms(const GenerativeModel& model,
                                       const RoomWorldSpec& spec, int start_room);

// Mean probability mass the learned transitions put on the correct successor
// room (self for walls and Stay) over all (visited room, action) pairs.
// Unvisited rooms are excluded from the mean; episode completion additionally
// requires them all visited.
double transition_accuracy(const GenerativeModel& model, const RoomWorldSpec& spec,
                           const std::vector<int>& state_to_room);

// Length of the shortest walk from `start_room` that visits every room,
// found by exhaustive search over (room, visited-set) states. Refuses rooms
// counts beyond the search budget.
int oracle_steps(const RoomWorldSpec& spec, int start_room);

struct BatchRow {
    std::string env;
    std::string method;  // "agent", "random" or "oracle"
    int runs = 0;
    int failures = 0;  // runs that hit max_steps without completing
    double discovery_median = 0, discovery_mean = 0, discovery_min = 0, discovery_max = 0;
    double complete_median = 0, complete_mean = 0, complete_min = 0, complete_max = 0;
};

// Multi-seed sweep over environments: EFE agent, random baseline and the
// covering-walk oracle, aggregated per environment. Failures enter the
// aggregates at max_steps.
std::vector<BatchRow> batch(const RunConfig& base, const std::vector<std::string>& envs,
                            int n_seeds);

std::string trace_csv(const RunResult& result);
std::string batch_csv(const std::vector<BatchRow>& rows);

// Full normalized transition tensor annotated with pose anchors and matched
// ground-truth rooms, one row per (state, action, successor).
std::string transition_plot_csv(const GenerativeModel& model, const RoomWorldSpec& spec,
                                const std::vector<int>& state_to_room);

}  // namespace aifnav
