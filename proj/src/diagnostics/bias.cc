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

#include "langgames/diagnostics/bias.h"

#include <iomanip>
#include <map>
#include <sstream>

namespace langgames {
namespace {

struct LabelCount {
  std::size_t count = 0;
  ModalRecord label;
};

// Canonical label text -> count; std::map order gives the tie-break.
using Tally = std::map<std::string, LabelCount>;

ModalRecord Majority(const Tally& tally) {
  const LabelCount* best = nullptr;
  for (const auto& [text, entry] : tally) {
    if (best == nullptr || entry.count > best->count) best = &entry;
  }
  return best->label;
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : ",") + s;
  return out.empty() ? "-" : out;
}

}  // namespace

Predictor ConditionalMajorityFit(const Dataset& train,
                                 const std::set<std::string>& keep_fields) {
  if (train.pairs.empty()) throw InputError("cannot fit on an empty dataset");
  Tally global;
  std::map<std::string, Tally> by_projection;
  for (std::size_t i = 0; i < train.pairs.size(); ++i) {
    const Example& pair = train.pairs[i];
    for (const std::string& field : keep_fields) {
      if (pair.x.Find(field) == nullptr) {
        throw InputError("training input " + std::to_string(i + 1) +
                         " has no field '" + field + "'");
      }
    }
    const std::string label = CanonicalText(pair.y);
    for (Tally* tally :
         {&global, &by_projection[CanonicalText(pair.x.Project(keep_fields))]}) {
      LabelCount& entry = (*tally)[label];
      ++entry.count;
      entry.label = pair.y;
    }
  }
  std::map<std::string, ModalRecord> table;
  for (const auto& [key, tally] : by_projection) table[key] = Majority(tally);
  ModalRecord fallback = Majority(global);
  return [table = std::move(table), fallback = std::move(fallback),
          keep_fields](const ModalRecord& x) {
    auto it = table.find(CanonicalText(x.Project(keep_fields)));
    return it == table.end() ? fallback : it->second;
  };
}

bool BiasFlag(const BiasReport& report) {
  return report.informative &&
         report.deprived_accuracy - report.majority_accuracy > report.margin;
}

BiasReport DeprivationTest(const TaskSpec& task, const Dataset& data,
                           const std::set<std::string>& deprive_fields,
                           std::uint64_t split_seed, double margin) {
  const std::set<std::string> inputs = task.input.FieldNames();
  for (const std::string& field : deprive_fields) {
    if (!inputs.count(field)) {
      throw InputError("'" + field + "' is not an input field of task '" +
                       task.name + "'");
    }
  }
  if (deprive_fields.size() == inputs.size()) {
    throw InputError(
        "depriving every input field leaves only the majority baseline");
  }
  if (!(margin >= 0.0 && margin <= 1.0)) {
    throw InputError("bias margin must lie in [0, 1]");
  }
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    if (auto why = task.input.Mismatch(data.pairs[i].x)) {
      throw InputError("pair " + std::to_string(i + 1) + " x: " + *why);
    }
  }

  auto [train, test] =
      StratifiedSplit(data, kDeprivationTrainFraction, split_seed);
  if (train.pairs.empty() || test.pairs.empty()) {
    throw InputError("dataset too small for an 80/20 split");
  }

  std::set<std::string> kept;
  for (const std::string& f : inputs) {
    if (!deprive_fields.count(f)) kept.insert(f);
  }

  BiasReport report;
  report.deprived_fields.assign(deprive_fields.begin(), deprive_fields.end());
  report.kept_fields.assign(kept.begin(), kept.end());
  report.margin = margin;
  report.seed = split_seed;
  report.train_size = train.pairs.size();
  report.test_size = test.pairs.size();
  report.informative = !deprive_fields.empty();
  report.deprived_accuracy =
      EvaluatePredictor(ConditionalMajorityFit(train, kept), test);
  report.majority_accuracy =
      EvaluatePredictor(ConditionalMajorityFit(train, {}), test);
  report.full_accuracy =
      EvaluatePredictor(ConditionalMajorityFit(train, inputs), test);
  report.flagged = BiasFlag(report);
  return report;
}

nlohmann::ordered_json BiasReportToJson(const BiasReport& report) {
  nlohmann::ordered_json out;
  out["deprived_fields"] = report.deprived_fields;
  out["kept_fields"] = report.kept_fields;
  out["deprived_accuracy"] = report.deprived_accuracy;
  out["majority_accuracy"] = report.majority_accuracy;
  out["full_accuracy"] = report.full_accuracy;
  out["margin"] = report.margin;
  out["informative"] = report.informative;
  out["flagged"] = report.flagged;
  out["train_size"] = report.train_size;
  out["test_size"] = report.test_size;
  out["seed"] = report.seed;
  return out;
}

std::string FormatBiasReport(const BiasReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "deprived fields     " << Join(report.deprived_fields) << "\n"
      << "kept fields         " << Join(report.kept_fields) << "\n"
      << "split (train/test)  " << report.train_size << "/" << report.test_size
      << "  seed " << report.seed << "\n"
      << "deprived accuracy   " << report.deprived_accuracy << "\n"
      << "majority accuracy   " << report.majority_accuracy << "\n"
      << "full-input accuracy " << report.full_accuracy << "\n"
      << "margin              " << report.margin << "\n"
      << "verdict             "
      << (!report.informative ? "non-informative (nothing deprived)"
          : report.flagged    ? "BIASED: solvable without the deprived input"
                              : "not flagged")
      << "\n";
  return out.str();
}

}  // namespace langgames
