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

#include "langgames/worlds/gridworld.h"

#include <deque>
#include <map>
#include <sstream>

#include "langgames/core/errors.h"

namespace langgames {
namespace {

std::string CellText(Cell cell) {
  return "(" + std::to_string(cell.col) + "," + std::to_string(cell.row) + ")";
}

GridworldState StateOf(const GridworldLayout& layout, Cell agent) {
  return {layout.width, layout.height, agent, layout.goal, layout.walls};
}

}  // namespace

std::string_view DirectionCode(Direction direction) {
  switch (direction) {
    case Direction::kNorth:
      return "n";
    case Direction::kSouth:
      return "s";
    case Direction::kEast:
      return "e";
    case Direction::kWest:
      return "w";
  }
  return "?";
}

std::optional<Direction> ParseDirection(std::string_view code) {
  for (Direction d : kAllDirections) {
    if (DirectionCode(d) == code) return d;
  }
  return std::nullopt;
}

Cell Neighbor(Cell cell, Direction direction) {
  switch (direction) {
    case Direction::kNorth:
      return {cell.col, cell.row + 1};
    case Direction::kSouth:
      return {cell.col, cell.row - 1};
    case Direction::kEast:
      return {cell.col + 1, cell.row};
    case Direction::kWest:
      return {cell.col - 1, cell.row};
  }
  return cell;
}

bool GridworldState::InBounds(Cell cell) const {
  return cell.col >= 0 && cell.row >= 0 && cell.col < width &&
         cell.row < height;
}

GridworldState InitialGridState(const GridworldLayout& layout) {
  return StateOf(layout, layout.start);
}

std::vector<Direction> GridworldOptions(const GridworldState& state) {
  std::vector<Direction> options;
  for (Direction d : kAllDirections) {
    if (state.Free(Neighbor(state.agent, d))) options.push_back(d);
  }
  return options;
}

StepResult StepGridworld(const GridworldState& state, Direction direction) {
  const Cell target = Neighbor(state.agent, direction);
  if (!state.Free(target)) return {GridStateToJson(state), 0.0};
  GridworldState next = state;
  next.agent = target;
  return {GridStateToJson(next), target == state.goal ? 1.0 : 0.0};
}

std::optional<std::vector<Direction>> ShortestPath(
    const GridworldLayout& layout, Cell from) {
  const GridworldState grid = StateOf(layout, from);
  if (!grid.Free(from)) return std::nullopt;
  std::map<Cell, std::pair<Cell, Direction>> parent;
  std::set<Cell> seen = {from};
  std::deque<Cell> frontier = {from};
  while (!frontier.empty()) {
    const Cell cell = frontier.front();
    frontier.pop_front();
    if (cell == layout.goal) {
      std::vector<Direction> path;
      for (Cell at = cell; at != from;) {
        const auto& [prev, move] = parent.at(at);
        path.push_back(move);
        at = prev;
      }
      return std::vector<Direction>(path.rbegin(), path.rend());
    }
    for (Direction d : kAllDirections) {
      const Cell next = Neighbor(cell, d);
      if (grid.Free(next) && seen.insert(next).second) {
        parent[next] = {cell, d};
        frontier.push_back(next);
      }
    }
  }
  return std::nullopt;
}

void ValidateLayout(const GridworldLayout& layout) {
  if (layout.width < 1 || layout.height < 1) {
    throw ConstructionError("grid dimensions must be at least 1x1");
  }
  const GridworldState grid = InitialGridState(layout);
  for (Cell wall : layout.walls) {
    if (!grid.InBounds(wall)) {
      throw ConstructionError("wall " + CellText(wall) + " is out of bounds");
    }
  }
  if (!grid.InBounds(layout.start)) {
    throw ConstructionError("start " + CellText(layout.start) +
                            " is out of bounds");
  }
  if (!grid.InBounds(layout.goal)) {
    throw ConstructionError("goal " + CellText(layout.goal) +
                            " is out of bounds");
  }
  if (layout.walls.count(layout.start)) {
    throw ConstructionError("start " + CellText(layout.start) + " is a wall");
  }
  if (layout.walls.count(layout.goal)) {
    throw ConstructionError("goal " + CellText(layout.goal) + " is a wall");
  }
  const bool single_cell = layout.width == 1 && layout.height == 1;
  if (layout.start == layout.goal && !single_cell) {
    throw ConstructionError("start and goal coincide on a grid larger than 1x1");
  }
  if (!ShortestPath(layout, layout.start)) {
    throw ConstructionError("goal " + CellText(layout.goal) +
                            " is unreachable from start " +
                            CellText(layout.start));
  }
}

EnvironmentSpec MakeGridworld(const GridworldLayout& layout) {
  ValidateLayout(layout);
  std::vector<Payload> moves;
  for (Direction d : kAllDirections) moves.emplace_back(DirectionCode(d));

  EnvironmentSpec env;
  env.name = "gridworld";
  env.description = "Agent moves one cell per navigation action on a " +
                    std::to_string(layout.width) + "x" +
                    std::to_string(layout.height) +
                    " grid; entering the goal cell pays 1.";
  env.actions =
      ActionSpace("environment", {{"nav", PayloadSchema::Enumerated(moves)}});
  env.check_state = [](const State& state) -> std::optional<std::string> {
    try {
      GridStateFromJson(state);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  };
  env.step = [](const State& state, const Action& action) {
    return StepGridworld(GridStateFromJson(state),
                         *ParseDirection(action.payload.get<std::string>()));
  };
  env.initial_state = GridStateToJson(InitialGridState(layout));
  env.descriptor = LayoutToJson(layout);
  env.descriptor["type"] = "gridworld";
  return env;
}

GridworldLayout ParseGridMap(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw ConstructionError("grid map is empty");

  GridworldLayout layout;
  layout.height = static_cast<int>(rows.size());
  layout.width = static_cast<int>(rows.front().size());
  int starts = 0;
  int goals = 0;
  for (int line = 0; line < layout.height; ++line) {
    const std::string& row_text = rows[line];
    if (static_cast<int>(row_text.size()) != layout.width) {
      throw ConstructionError("grid map line " + std::to_string(line + 1) +
                              " has width " + std::to_string(row_text.size()) +
                              ", expected " + std::to_string(layout.width));
    }
    const int row = layout.height - 1 - line;
    for (int col = 0; col < layout.width; ++col) {
      switch (row_text[col]) {
        case '.':
          break;
        case '#':
          layout.walls.insert({col, row});
          break;
        case 'S':
          layout.start = {col, row};
          ++starts;
          break;
        case 'G':
          layout.goal = {col, row};
          ++goals;
          break;
        default:
          throw ConstructionError(
              "grid map line " + std::to_string(line + 1) +
              " has unexpected character '" + row_text[col] + "'");
      }
    }
  }
  if (starts != 1 || goals != 1) {
    throw ConstructionError("grid map needs exactly one 'S' and one 'G'");
  }
  return layout;
}

std::string FormatGridMap(const GridworldLayout& layout) {
  std::string out;
  for (int row = layout.height - 1; row >= 0; --row) {
    for (int col = 0; col < layout.width; ++col) {
      const Cell cell{col, row};
      char c = '.';
      if (layout.walls.count(cell)) c = '#';
      if (cell == layout.start) c = 'S';
      if (cell == layout.goal) c = 'G';
      out.push_back(c);
    }
    out.push_back('\n');
  }
  return out;
}

nlohmann::json CellToJson(Cell cell) {
  return nlohmann::json::array({cell.col, cell.row});
}

Cell CellFromJson(const nlohmann::json& json) {
  if (!json.is_array() || json.size() != 2 || !json[0].is_number_integer() ||
      !json[1].is_number_integer()) {
    throw InputError("a cell must be [col, row], got " + json.dump());
  }
  return {json[0].get<int>(), json[1].get<int>()};
}

nlohmann::json GridStateToJson(const GridworldState& state) {
  nlohmann::json walls = nlohmann::json::array();
  for (Cell wall : state.walls) walls.push_back(CellToJson(wall));
  return {{"width", state.width},        {"height", state.height},
          {"agent", CellToJson(state.agent)}, {"goal", CellToJson(state.goal)},
          {"walls", walls}};
}

GridworldState GridStateFromJson(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("width") ||
      !json.contains("height") || !json.contains("agent") ||
      !json.contains("goal") || !json["width"].is_number_integer() ||
      !json["height"].is_number_integer()) {
    throw InputError("gridworld state needs width, height, agent and goal");
  }
  GridworldState state;
  state.width = json["width"].get<int>();
  state.height = json["height"].get<int>();
  state.agent = CellFromJson(json["agent"]);
  state.goal = CellFromJson(json["goal"]);
  if (json.contains("walls")) {
    for (const auto& wall : json["walls"]) state.walls.insert(CellFromJson(wall));
  }
  if (state.width < 1 || state.height < 1) {
    throw InputError("gridworld dimensions must be positive");
  }
  if (!state.Free(state.agent)) {
    throw InputError("agent is out of bounds or inside a wall");
  }
  if (!state.Free(state.goal)) {
    throw InputError("goal is out of bounds or inside a wall");
  }
  return state;
}

nlohmann::json LayoutToJson(const GridworldLayout& layout) {
  nlohmann::json walls = nlohmann::json::array();
  for (Cell wall : layout.walls) walls.push_back(CellToJson(wall));
  return {{"width", layout.width},
          {"height", layout.height},
          {"start", CellToJson(layout.start)},
          {"goal", CellToJson(layout.goal)},
          {"walls", walls}};
}

GridworldLayout LayoutFromJson(const nlohmann::json& json) {
  if (!json.is_object()) throw ConstructionError("layout must be an object");
  GridworldLayout layout;
  try {
    if (json.contains("map")) {
      if (!json["map"].is_string()) {
        throw ConstructionError("\"map\" must be a string");
      }
      layout = ParseGridMap(json["map"].get<std::string>());
    } else {
      layout.width = json.at("width").get<int>();
      layout.height = json.at("height").get<int>();
      layout.start = CellFromJson(json.at("start"));
      layout.goal = CellFromJson(json.at("goal"));
      if (json.contains("walls")) {
        for (const auto& wall : json["walls"]) {
          layout.walls.insert(CellFromJson(wall));
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("bad gridworld layout: ") + e.what());
  } catch (const InputError& e) {
    throw ConstructionError(std::string("bad gridworld layout: ") + e.what());
  }
  ValidateLayout(layout);
  return layout;
}

nlohmann::json OptionsPayload(const std::vector<Direction>& options) {
  nlohmann::json out = nlohmann::json::array();
  for (Direction d : options) out.push_back(DirectionCode(d));
  return out;
}

}  // namespace langgames
