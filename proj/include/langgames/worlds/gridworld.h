// Copyright 2026 The Langgames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LANGGAMES_WORLDS_GRIDWORLD_H_
#define LANGGAMES_WORLDS_GRIDWORLD_H_

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "langgames/worlds/environment.h"

namespace langgames {

// Column grows eastwards, row grows northwards; (0,0) is the south-west
// corner.
struct Cell {
  int col = 0;
  int row = 0;

  auto operator<=>(const Cell&) const = default;
};

enum class Direction { kNorth, kSouth, kEast, kWest };

// Canonical order used for option lists: n, s, e, w.
inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kNorth, Direction::kSouth, Direction::kEast, Direction::kWest};

std::string_view DirectionCode(Direction direction);
std::optional<Direction> ParseDirection(std::string_view code);
Cell Neighbor(Cell cell, Direction direction);

struct GridworldLayout {
  int width = 1;
  int height = 1;
  Cell start;
  Cell goal;
  std::set<Cell> walls;

  bool operator==(const GridworldLayout&) const = default;
};

struct GridworldState {
  int width = 1;
  int height = 1;
  Cell agent;
  Cell goal;
  std::set<Cell> walls;

  bool InBounds(Cell cell) const;
  bool Free(Cell cell) const { return InBounds(cell) && !walls.count(cell); }

  bool operator==(const GridworldState&) const = default;
};

GridworldState InitialGridState(const GridworldLayout& layout);

// Directions whose target cell is inside the grid and not a wall.
std::vector<Direction> GridworldOptions(const GridworldState& state);

// Moves the agent one cell; a move off the grid or into a wall leaves the
// state unchanged. Reward is 1 when the move enters the goal cell.
StepResult StepGridworld(const GridworldState& state, Direction direction);

// Checks bounds, wall placement and goal reachability. Throws
// ConstructionError.
void ValidateLayout(const GridworldLayout& layout);

// The navigation environment over `layout`: accepts (nav, n|s|e|w).
EnvironmentSpec MakeGridworld(const GridworldLayout& layout);

// Shortest sequence of moves from start to goal, nullopt if unreachable.
// Ties are broken by the canonical direction order.
std::optional<std::vector<Direction>> ShortestPath(
    const GridworldLayout& layout, Cell from);

// Text map: one line per row, northernmost row first. '.' free, '#' wall,
// 'S' start, 'G' goal. Throws ConstructionError.
GridworldLayout ParseGridMap(std::string_view text);
std::string FormatGridMap(const GridworldLayout& layout);

nlohmann::json CellToJson(Cell cell);
Cell CellFromJson(const nlohmann::json& json);
nlohmann::json GridStateToJson(const GridworldState& state);
// Throws InputError.
GridworldState GridStateFromJson(const nlohmann::json& json);
nlohmann::json LayoutToJson(const GridworldLayout& layout);
// Accepts either explicit fields or {"map": "<text>"}. Throws
// ConstructionError.
GridworldLayout LayoutFromJson(const nlohmann::json& json);

// JSON list of direction codes in canonical order, e.g. ["n","e"].
nlohmann::json OptionsPayload(const std::vector<Direction>& options);

}  // namespace langgames

#endif  // LANGGAMES_WORLDS_GRIDWORLD_H_
