#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace aifnav {

// Discrete motion alphabet: four cardinal moves plus staying put.
enum class Action : int { North = 0, East = 1, South = 2, West = 3, Stay = 4 };

inline constexpr int kNumActions = 5;

inline constexpr std::array<Action, kNumActions> all_actions() {
    return {Action::North, Action::East, Action::South, Action::West, Action::Stay};
}

inline constexpr std::array<Action, 4> cardinal_actions() {
    return {Action::North, Action::East, Action::South, Action::West};
}

// North<->South, East<->West; Stay is its own inverse.
inline constexpr Action inverse(Action a) {
    switch (a) {
        case Action::North: return Action::South;
        case Action::South: return Action::North;
        case Action::East: return Action::West;
        case Action::West: return Action::East;
        case Action::Stay: return Action::Stay;
    }
    return Action::Stay;
}

// Room-grid coordinates relative to the exploration start, y pointing north.
struct Pose {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Pose&, const Pose&) = default;
};

inline constexpr Pose delta(Action a) {
    switch (a) {
        case Action::North: return {0, 1};
        case Action::East: return {1, 0};
        case Action::South: return {0, -1};
        case Action::West: return {-1, 0};
        case Action::Stay: return {0, 0};
    }
    return {0, 0};
}

inline constexpr Pose operator+(Pose p, Pose d) { return {p.x + d.x, p.y + d.y}; }

const char* to_string(Action a);
Action action_from_string(const std::string& name);

// Dense indices into the growing observation alphabet / state set.
using ObsId = int;
using StateId = int;

enum class StateStatus : uint8_t { Experienced, Imagined };

}  // namespace aifnav
