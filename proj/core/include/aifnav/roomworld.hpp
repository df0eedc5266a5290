#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aifnav/matrix.hpp"
#include "aifnav/types.hpp"

namespace aifnav {

// Ground-truth grid of rooms. Row 0 is the northernmost row, so the North
// action decreases the row index. h_doors[r][c] connects (r,c)-(r,c+1),
// v_doors[r][c] connects (r,c)-(r+1,c). mask marks non-room cells (used for
// T and donut shapes).
struct RoomWorldSpec {
    int width = 0;
    int height = 0;
    std::vector<int> colors;      // height*width, row-major
    std::vector<uint8_t> h_doors; // height x (width-1), row-major
    std::vector<uint8_t> v_doors; // (height-1) x width, row-major
    std::vector<uint8_t> mask;    // height*width, 1 = not a room

    bool in_grid(int r, int c) const {
        return r >= 0 && r < height && c >= 0 && c < width;
    }
    bool is_room(int r, int c) const { return in_grid(r, c) && !mask[r * width + c]; }
    int color(int r, int c) const { return colors[r * width + c]; }

    // Door present between (r,c) and the adjacent cell toward `a`.
    bool door(int r, int c, Action a) const;

    // Cardinal directions without a door out of (r,c).
    std::set<Action> blocked_dirs(int r, int c) const;

    int room_count() const;
    // Dense index over unmasked cells, row-major; -1 for masked.
    int room_index(int r, int c) const;
    std::vector<std::pair<int, int>> rooms() const;

    int distinct_colors() const;

    // Throws std::invalid_argument with the offending location if the door
    // graph is malformed or disconnected.
    void validate() const;
};

// Built-in environments from the experiments: fully connected square grids,
// their aliased recolorings, a T-maze and a donut ring.
std::vector<std::string> preset_names();
RoomWorldSpec preset(const std::string& name);

// T-maze builder: a horizontal bar of west+1+east rooms on top of a stem of
// `stem` rooms under the bar's center column.
RoomWorldSpec make_tmaze(int west_arm, int east_arm, int stem);

// Accepts a preset name or a path to an environment config file.
RoomWorldSpec load_env(const std::string& name_or_path);

RoomWorldSpec parse_env_json(const std::string& text);
std::string env_to_json(const RoomWorldSpec& spec);

struct EnvState {
    int row = 0;
    int col = 0;
    int step_count = 0;
};

struct EnvStep {
    bool moved = false;
    int color = 0;
    std::set<Action> blocked;
};

// Uniformly random unmasked start room (seeded).
std::tuple<EnvState, int, std::set<Action>> reset(const RoomWorldSpec& spec,
                                                  uint64_t seed);

std::pair<EnvState, EnvStep> step(const RoomWorldSpec& spec, const EnvState& state,
                                  Action action);

// Deterministic one-hot room transition tensor, one [next x prev] matrix per
// action: doors move, walls and Stay self-loop.
std::vector<GrowableMatrix> ground_truth_transitions(const RoomWorldSpec& spec);

}  // namespace aifnav
