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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "langgames/core/action.h"
#include "langgames/core/errors.h"
#include "langgames/core/random.h"
#include "langgames/core/record.h"

using namespace langgames;

namespace {

ActionSpace NavSpace() {
  return ActionSpace(
      "p1", {{"nav", PayloadSchema::Enumerated({"n", "s", "e", "w"})}});
}

}  // namespace

TEST_CASE("action_in_space examples") {
  CHECK(ActionInSpace(NavSpace(), {"nav", "n"}));
  ActionSpace chat("p1", {{"utt", UtteranceSchema()}});
  CHECK(ActionInSpace(chat, {"utt", "I don't know"}));
  CHECK_FALSE(ActionInSpace(NavSpace(), {"nav", "up"}));
  CHECK_FALSE(ActionInSpace(NavSpace(), {"utt", "n"}));
  CHECK_FALSE(ActionInSpace(chat, {"utt", 42}));
}

TEST_CASE("malformed candidates are input errors") {
  CHECK_THROWS_AS(ActionInSpace(NavSpace(), {"", "n"}), InputError);
  CHECK_THROWS_AS(ActionInSpace(NavSpace(), {"nav", nullptr}), InputError);
}

TEST_CASE("membership is deterministic") {
  const ActionSpace space = NavSpace();
  const bool first = ActionInSpace(space, {"nav", "e"});
  const bool miss = ActionInSpace(space, {"nav", "x"});
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(ActionInSpace(space, {"nav", "e"}) == first);
    REQUIRE(ActionInSpace(space, {"nav", "x"}) == miss);
  }
}

TEST_CASE("enumerated set and membership predicate agree") {
  std::vector<Payload> values;
  std::set<std::string> members;
  for (int i = 0; i < 10000; i += 7) {
    values.emplace_back("v" + std::to_string(i));
    members.insert("v" + std::to_string(i));
  }
  const PayloadSchema schema = PayloadSchema::Enumerated(values);
  REQUIRE(schema.enumerable());
  CHECK(schema.values() == values);
  for (int i = 0; i < 10000; ++i) {
    const std::string candidate = "v" + std::to_string(i);
    REQUIRE(schema.Accepts(candidate) == static_cast<bool>(members.count(candidate)));
  }
  CHECK_FALSE(schema.Accepts(7));
}

TEST_CASE("grammar schemas are not enumerable") {
  const PayloadSchema utt = UtteranceSchema();
  CHECK_FALSE(utt.enumerable());
  CHECK(utt.grammar_name() == "utterance");
  CHECK_THROWS_AS(utt.values(), UnsupportedError);
}

TEST_CASE("action spaces") {
  CHECK(ActionSpace("N", {}).empty());
  CHECK_THROWS_AS(ActionSpace("p1", {{"nav", UtteranceSchema()},
                                     {"nav", UtteranceSchema()}}),
                  ConstructionError);
  CHECK_THROWS_AS(ActionSpace("p1", {{"", UtteranceSchema()}}),
                  ConstructionError);
  CHECK(NavSpace().Find("nav") != nullptr);
  CHECK(NavSpace().Find("utt") == nullptr);
}

TEST_CASE("player roles") {
  CHECK(ParsePlayerRole("nature") == PlayerRole::kNature);
  CHECK(ParsePlayerRole("regular") == PlayerRole::kRegular);
  CHECK(PlayerRoleName(PlayerRole::kNature) == "nature");
  CHECK_THROWS_AS(ParsePlayerRole("referee"), InputError);
}

TEST_CASE("classify_modality examples") {
  ModalRecord question;
  question.Set("question", "how many?", Modality::kLanguage);
  CHECK(ClassifyModality(question) == ModalityProfile{true, false});

  ModalRecord grid;
  grid.Set("grid", nlohmann::json::array({{0, 1}, {1, 0}}), Modality::kOther);
  CHECK(ClassifyModality(grid) == ModalityProfile{false, true});

  ModalRecord captioned;
  captioned.Set("image", "\x89PNG", Modality::kOther);
  captioned.Set("caption", "a giraffe", Modality::kLanguage);
  CHECK(ClassifyModality(captioned) == ModalityProfile{true, true});

  CHECK_THROWS_AS(ClassifyModality(ModalRecord()), InputError);
}

TEST_CASE("modality comes from tags, never from content") {
  ModalRecord r;
  r.Set("text", "a perfectly ordinary sentence", Modality::kOther);
  CHECK(ClassifyModality(r) == ModalityProfile{false, true});
}

TEST_CASE("records") {
  ModalRecord r;
  r.Set("b", 2, Modality::kOther).Set("a", "x", Modality::kLanguage);
  CHECK(r.size() == 2);
  CHECK(r.at("a").modality == Modality::kLanguage);
  CHECK_THROWS_AS(r.at("c"), InputError);
  CHECK(r.Project({"a", "zz"}).size() == 1);
  CHECK(RecordFromJson(RecordToJson(r)) == r);
  CHECK(RecordToJson(r)["a"] ==
        nlohmann::json({{"modality", "language"}, {"value", "x"}}));
  CHECK_THROWS_AS(RecordFromJson(nlohmann::json::array()), InputError);
  CHECK_THROWS_AS(RecordFromJson({{"a", {{"value", 1}}}}), InputError);
  CHECK_THROWS_AS(
      RecordFromJson({{"a", {{"value", 1}, {"modality", "visual"}}}}),
      InputError);

  ModalRecord reordered;
  reordered.Set("a", "x", Modality::kLanguage).Set("b", 2, Modality::kOther);
  CHECK(CanonicalText(reordered) == CanonicalText(r));
}

TEST_CASE("seeded randomness") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.Next();
    REQUIRE(x == b.Next());
    differs = differs || x != c.Next();
  }
  CHECK(differs);

  Rng r(7);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    const auto u = r.Uniform(5);
    REQUIRE(u < 5);
    ++hits[u];
    const double unit = r.Unit();
    REQUIRE(unit >= 0.0);
    REQUIRE(unit < 1.0);
  }
  for (int h : hits) CHECK(h > 800);

  std::vector<int> items = {1, 2, 3, 4, 5, 6, 7, 8};
  r.Shuffle(items);
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("digests and derived seeds") {
  // FNV-1a 64 reference values.
  CHECK(Fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(Fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(HexDigest("a") == "af63dc4c8601ec8c");
  CHECK(HexDigest("abc").size() == 16);
  CHECK(DeriveSeed(1, "x") == DeriveSeed(1, "x"));
  CHECK(DeriveSeed(1, "x") != DeriveSeed(1, "y"));
  CHECK(DeriveSeed(1, "x") != DeriveSeed(2, "x"));
}
