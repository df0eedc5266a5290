#include "aifnav/roomworld.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace aifnav {

using nlohmann::json;

bool RoomWorldSpec::door(int r, int c, Action a) const {
    switch (a) {
        case Action::North: return r > 0 && v_doors[(r - 1) * width + c];
        case Action::South: return r + 1 < height && v_doors[r * width + c];
        case Action::East: return c + 1 < width && h_doors[r * (width - 1) + c];
        case Action::West: return c > 0 && h_doors[r * (width - 1) + c - 1];
        case Action::Stay: return false;
    }
    return false;
}

std::set<Action> RoomWorldSpec::blocked_dirs(int r, int c) const {
    std::set<Action> out;
    for (Action a : cardinal_actions())
        if (!door(r, c, a)) out.insert(a);
    return out;
}

int RoomWorldSpec::room_count() const {
    int n = 0;
    for (uint8_t m : mask) n += m ? 0 : 1;
    return n;
}

int RoomWorldSpec::room_index(int r, int c) const {
    if (!is_room(r, c)) return -1;
    int idx = 0;
    for (int i = 0; i < r * width + c; ++i)
        if (!mask[i]) ++idx;
    return idx;
}

std::vector<std::pair<int, int>> RoomWorldSpec::rooms() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (!mask[r * width + c]) out.emplace_back(r, c);
    return out;
}

int RoomWorldSpec::distinct_colors() const {
    std::set<int> seen;
    for (auto [r, c] : rooms()) seen.insert(color(r, c));
    return static_cast<int>(seen.size());
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::string cell(int r, int c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

std::pair<int, int> neighbor(int r, int c, Action a) {
    const Pose d = delta(a);
    return {r - d.y, c + d.x};
}

}  // namespace

void RoomWorldSpec::validate() const {
    if (width < 1 || height < 1) fail("environment dimensions must be positive");
    const size_t cells = static_cast<size_t>(width) * height;
    if (colors.size() != cells) fail("colors must hold width*height entries");
    if (mask.size() != cells) fail("mask must hold width*height entries");
    if (h_doors.size() != static_cast<size_t>(height) * (width - 1))
        fail("h_doors must hold height*(width-1) entries");
    if (v_doors.size() != static_cast<size_t>(height - 1) * width)
        fail("v_doors must hold (height-1)*width entries");
    if (room_count() == 0) fail("environment has no rooms");

    for (auto [r, c] : rooms())
        if (color(r, c) < 0) fail("negative color id at " + cell(r, c));

    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            for (Action a : {Action::East, Action::South}) {
                if (!door(r, c, a)) continue;
                auto [nr, nc] = neighbor(r, c, a);
                if (!is_room(r, c) || !is_room(nr, nc))
                    fail("door between " + cell(r, c) + " and " + cell(nr, nc) +
                         " touches a non-room cell");
            }
        }
    }

    // Every room reachable through doors.
    const auto all = rooms();
    std::vector<uint8_t> seen(cells, 0);
    std::queue<std::pair<int, int>> frontier;
    frontier.push(all.front());
    seen[all.front().first * width + all.front().second] = 1;
    while (!frontier.empty()) {
        auto [r, c] = frontier.front();
        frontier.pop();
        for (Action a : cardinal_actions()) {
            if (!door(r, c, a)) continue;
            auto [nr, nc] = neighbor(r, c, a);
            if (!seen[nr * width + nc]) {
                seen[nr * width + nc] = 1;
                frontier.emplace(nr, nc);
            }
        }
    }
    for (auto [r, c] : all)
        if (!seen[r * width + c]) fail("room " + cell(r, c) + " is unreachable");
}

namespace {

RoomWorldSpec make_grid(int w, int h, std::vector<int> colors) {
    RoomWorldSpec s;
    s.width = w;
    s.height = h;
    s.colors = std::move(colors);
    s.mask.assign(static_cast<size_t>(w) * h, 0);
    s.h_doors.assign(static_cast<size_t>(h) * (w - 1), 1);
    s.v_doors.assign(static_cast<size_t>(h - 1) * w, 1);
    return s;
}

// Doors between every pair of adjacent unmasked cells.
void connect_all_rooms(RoomWorldSpec& s) {
    s.h_doors.assign(static_cast<size_t>(s.height) * (s.width - 1), 0);
    s.v_doors.assign(static_cast<size_t>(s.height - 1) * s.width, 0);
    for (int r = 0; r < s.height; ++r)
        for (int c = 0; c + 1 < s.width; ++c)
            if (s.is_room(r, c) && s.is_room(r, c + 1))
                s.h_doors[r * (s.width - 1) + c] = 1;
    for (int r = 0; r + 1 < s.height; ++r)
        for (int c = 0; c < s.width; ++c)
            if (s.is_room(r, c) && s.is_room(r + 1, c))
                s.v_doors[r * s.width + c] = 1;
}

RoomWorldSpec make_donut(std::vector<int> ring_colors) {
    RoomWorldSpec s;
    s.width = 4;
    s.height = 4;
    s.mask.assign(16, 0);
    for (int r : {1, 2})
        for (int c : {1, 2}) s.mask[r * 4 + c] = 1;
    s.colors.assign(16, 0);
    size_t k = 0;
    for (auto [r, c] : s.rooms()) s.colors[r * 4 + c] = ring_colors.at(k++);
    connect_all_rooms(s);
    return s;
}

}  // namespace

RoomWorldSpec make_tmaze(int west_arm, int east_arm, int stem) {
    if (west_arm < 1 || east_arm < 1 || stem < 1)
        fail("t-maze arms and stem must be at least one room each");
    RoomWorldSpec s;
    s.width = west_arm + 1 + east_arm;
    s.height = 1 + stem;
    const int center = west_arm;
    s.mask.assign(static_cast<size_t>(s.width) * s.height, 1);
    for (int c = 0; c < s.width; ++c) s.mask[c] = 0;  // bar along the top row
    for (int r = 1; r < s.height; ++r) s.mask[r * s.width + center] = 0;
    s.colors.assign(static_cast<size_t>(s.width) * s.height, 0);
    int next_color = 0;
    for (auto [r, c] : s.rooms()) s.colors[r * s.width + c] = next_color++;
    connect_all_rooms(s);
    return s;
}

std::vector<std::string> preset_names() {
    return {"grid3x3", "grid3x3_aliased", "grid4x4", "grid4x4_aliased",
            "tmaze",   "donut",           "donut_aliased"};
}

RoomWorldSpec preset(const std::string& name) {
    RoomWorldSpec s;
    if (name == "grid3x3") {
        s = make_grid(3, 3, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    } else if (name == "grid3x3_aliased") {
        // 6 colors over 9 rooms; 0, 1 and 2 each appear twice.
        s = make_grid(3, 3, {0, 1, 2, 3, 4, 0, 5, 2, 1});
    } else if (name == "grid4x4") {
        s = make_grid(4, 4, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    } else if (name == "grid4x4_aliased") {
        // 8 colors, each in two mirrored rooms.
        s = make_grid(4, 4, {0, 1, 2, 3, 4, 5, 6, 7, 7, 6, 5, 4, 3, 2, 1, 0});
    } else if (name == "tmaze") {
        s = make_tmaze(1, 1, 4);
    } else if (name == "donut") {
        s = make_donut({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    } else if (name == "donut_aliased") {
        s = make_donut({0, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1, 0});
    } else {
        fail("unknown preset: " + name);
    }
    s.validate();
    return s;
}

RoomWorldSpec load_env(const std::string& name_or_path) {
    const auto names = preset_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end())
        return preset(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) fail("no such preset or environment file: " + name_or_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_env_json(buf.str());
}

namespace {

template <typename T>
std::vector<T> flat_array(const json& j, const std::string& key, size_t expected) {
    if (!j.contains(key)) fail("environment config is missing \"" + key + "\"");
    std::vector<T> out;
    for (const auto& v : j.at(key)) out.push_back(v.get<T>());
    if (out.size() != expected)
        fail("\"" + key + "\" holds " + std::to_string(out.size()) + " entries, expected " +
             std::to_string(expected));
    return out;
}

}  // namespace

RoomWorldSpec parse_env_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(std::string("environment config is not valid JSON: ") + e.what());
    }
    if (j.value("format", "") != "aifnav-env")
        fail("environment config must declare format \"aifnav-env\"");
    if (j.value("version", 0) != 1) fail("unsupported environment config version");

    RoomWorldSpec s;
    s.width = j.value("width", 0);
    s.height = j.value("height", 0);
    if (s.width < 1 || s.height < 1) fail("environment dimensions must be positive");
    const size_t cells = static_cast<size_t>(s.width) * s.height;
    s.colors = flat_array<int>(j, "colors", cells);
    s.h_doors = flat_array<uint8_t>(j, "h_doors", static_cast<size_t>(s.height) * (s.width - 1));
    s.v_doors = flat_array<uint8_t>(j, "v_doors", static_cast<size_t>(s.height - 1) * s.width);
    if (j.contains("mask"))
        s.mask = flat_array<uint8_t>(j, "mask", cells);
    else
        s.mask.assign(cells, 0);
    s.validate();
    return s;
}

std::string env_to_json(const RoomWorldSpec& spec) {
    json j;
    j["format"] = "aifnav-env";
    j["version"] = 1;
    j["width"] = spec.width;
    j["height"] = spec.height;
    j["colors"] = spec.colors;
    j["h_doors"] = spec.h_doors;
    j["v_doors"] = spec.v_doors;
    j["mask"] = spec.mask;
    return j.dump(2) + "\n";
}

std::tuple<EnvState, int, std::set<Action>> reset(const RoomWorldSpec& spec,
                                                  uint64_t seed) {
    const auto all = spec.rooms();
    std::mt19937_64 rng(seed);
    const auto [r, c] = all[rng() % all.size()];
    return {EnvState{r, c, 0}, spec.color(r, c), spec.blocked_dirs(r, c)};
}

std::pair<EnvState, EnvStep> step(const RoomWorldSpec& spec, const EnvState& state,
                                  Action action) {
    EnvState next = state;
    EnvStep out;
    if (action != Action::Stay && spec.door(state.row, state.col, action)) {
        auto [nr, nc] = neighbor(state.row, state.col, action);
        next.row = nr;
        next.col = nc;
        out.moved = true;
    }
    next.step_count = state.step_count + 1;
    out.color = spec.color(next.row, next.col);
    out.blocked = spec.blocked_dirs(next.row, next.col);
    return {next, out};
}

std::vector<GrowableMatrix> ground_truth_transitions(const RoomWorldSpec& spec) {
    const int n = spec.room_count();
    std::vector<GrowableMatrix> out(kNumActions, GrowableMatrix(n, n, 0.0));
    for (auto [r, c] : spec.rooms()) {
        const int src = spec.room_index(r, c);
        for (Action a : all_actions()) {
            int dst = src;
            if (a != Action::Stay && spec.door(r, c, a)) {
                auto [nr, nc] = neighbor(r, c, a);
                dst = spec.room_index(nr, nc);
            }
            out[static_cast<int>(a)].at(dst, src) = 1.0;
        }
    }
    return out;
}

}  // namespace aifnav
