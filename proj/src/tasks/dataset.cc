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

#include "langgames/tasks/dataset.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include "langgames/core/random.h"

namespace langgames {
namespace {

double CheckedLoss(const LossFn& loss, const ModalRecord& produced,
                   const ModalRecord& ref) {
  const double value = loss(produced, ref);
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InternalError("loss returned " + std::to_string(value) +
                        ", outside [0, 1]");
  }
  return value;
}

void CheckFraction(double train_fraction, const Dataset& data) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie strictly between 0 and 1");
  }
  if (data.pairs.empty()) throw InputError("cannot split an empty dataset");
}

std::size_t RoundedShare(std::size_t n, double fraction) {
  return static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * fraction));
}

std::pair<Dataset, Dataset> Assemble(const Dataset& data,
                                     std::vector<std::size_t> train_idx) {
  std::sort(train_idx.begin(), train_idx.end());
  std::vector<bool> in_train(data.pairs.size(), false);
  for (std::size_t i : train_idx) in_train[i] = true;
  Dataset train{{}, data.loss};
  Dataset test{{}, data.loss};
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    (in_train[i] ? train : test).pairs.push_back(data.pairs[i]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace

double ExactMatchLoss(const ModalRecord& produced, const ModalRecord& ref) {
  return produced == ref ? 0.0 : 1.0;
}

VerificationReport VerifyDataset(const TaskSpec& task, const Dataset& data) {
  if (!task.oracle) {
    throw UnsupportedError("task '" + task.name +
                           "' has no oracle; cannot verify");
  }
  if (data.pairs.empty()) throw InputError("cannot verify an empty dataset");
  VerificationReport report;
  report.verdicts.reserve(data.pairs.size());
  std::size_t passed = 0;
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    const Example& pair = data.pairs[i];
    PairVerdict verdict{i + 1, false, 1.0, ""};
    if (auto why = task.input.Mismatch(pair.x)) {
      verdict.note = "x: " + *why;
    } else if (auto why_y = task.output.Mismatch(pair.y)) {
      verdict.note = "y: " + *why_y;
    } else {
      verdict.loss = CheckedLoss(data.loss, pair.y, task.oracle(pair.x));
      verdict.pass = verdict.loss == 0.0;
    }
    if (verdict.pass) {
      ++passed;
    } else {
      report.failures.push_back(verdict.index);
    }
    report.verdicts.push_back(std::move(verdict));
  }
  report.pass_rate =
      static_cast<double>(passed) / static_cast<double>(data.pairs.size());
  return report;
}

std::pair<Dataset, Dataset> SplitDataset(const Dataset& data,
                                         double train_fraction,
                                         std::uint64_t seed) {
  CheckFraction(train_fraction, data);
  std::vector<std::size_t> order(data.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.Shuffle(order);
  order.resize(RoundedShare(order.size(), train_fraction));
  return Assemble(data, std::move(order));
}

std::pair<Dataset, Dataset> StratifiedSplit(const Dataset& data,
                                            double train_fraction,
                                            std::uint64_t seed) {
  CheckFraction(train_fraction, data);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    groups[CanonicalText(data.pairs[i].y)].push_back(i);
  }
  Rng rng(seed);
  std::vector<std::size_t> train;
  for (auto& [label, members] : groups) {
    rng.Shuffle(members);
    const std::size_t take = RoundedShare(members.size(), train_fraction);
    train.insert(train.end(), members.begin(), members.begin() + take);
  }
  return Assemble(data, std::move(train));
}

double EvaluatePredictor(const Predictor& predictor, const Dataset& test) {
  if (test.pairs.empty()) throw InputError("cannot evaluate on empty data");
  double total = 0.0;
  for (std::size_t i = 0; i < test.pairs.size(); ++i) {
    ModalRecord produced;
    try {
      produced = predictor(test.pairs[i].x);
    } catch (const std::exception& e) {
      throw PredictorError(i + 1, e.what());
    }
    total += 1.0 - CheckedLoss(test.loss, produced, test.pairs[i].y);
  }
  return total / static_cast<double>(test.pairs.size());
}

Dataset ReadDataset(std::istream& in) {
  Dataset data;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const nlohmann::json row = nlohmann::json::parse(line);
      if (!row.is_object() || !row.contains("x") || !row.contains("y")) {
        throw InputError("expected an object with \"x\" and \"y\"");
      }
      data.pairs.push_back({RecordFromJson(row["x"]), RecordFromJson(row["y"])});
    } catch (const nlohmann::json::exception& e) {
      throw InputError("dataset line " + std::to_string(line_no) + ": " +
                       e.what());
    } catch (const InputError& e) {
      throw InputError("dataset line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return data;
}

void WriteDataset(std::ostream& out, const Dataset& data) {
  for (const Example& pair : data.pairs) {
    nlohmann::json row = {{"x", RecordToJson(pair.x)},
                          {"y", RecordToJson(pair.y)}};
    out << row.dump() << "\n";
  }
}

}  // namespace langgames
