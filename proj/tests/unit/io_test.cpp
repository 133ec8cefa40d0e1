#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "fixtures.hpp"
#include "possmc/error.hpp"
#include "possmc/io.hpp"

namespace possmc {
namespace {

using nlohmann::json;
using testing::example_model;
using testing::model_path;
using testing::p;

ErrorKind model_error(const json& doc) {
  try {
    model_from_json(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

TEST(Io, ReadsExampleModel) {
  const Gpks m = read_model(model_path("example.json"));
  const Gpks expected = example_model();
  EXPECT_EQ(m.states(), expected.states());
  EXPECT_EQ(m.transitions(), expected.transitions());
  EXPECT_EQ(m.initial(), expected.initial());
  EXPECT_EQ(m.labels(), expected.labels());
}

TEST(Io, RoundTrip) {
  const Gpks m = example_model();
  const Gpks again = model_from_json(json::parse(model_to_json(m).dump()));
  EXPECT_EQ(again.transitions(), m.transitions());
  EXPECT_EQ(again.labels(), m.labels());
  EXPECT_EQ(again.initial(), m.initial());
  EXPECT_EQ(model_to_json(again).dump(), model_to_json(m).dump());
}

TEST(Io, FormatErrors) {
  json doc = model_to_json(example_model());
  json missing = doc;
  missing.erase("transitions");
  EXPECT_EQ(model_error(missing), ErrorKind::Format);
  json bad_state = doc;
  bad_state["transitions"][0]["to"] = "nowhere";
  EXPECT_EQ(model_error(bad_state), ErrorKind::Format);
  json bad_value = doc;
  bad_value["transitions"][0]["p"] = "1.5";
  EXPECT_EQ(model_error(bad_value), ErrorKind::Format);
  json numeric = doc;
  numeric["transitions"][0]["p"] = 0.5;
  EXPECT_EQ(model_error(numeric), ErrorKind::Format);
  json no_labels = doc;
  no_labels.erase("labels");
  EXPECT_EQ(model_from_json(no_labels).labels(), FuzzyMatrix(4, 3));
}

TEST(Io, MissingFileIsIoError) {
  try {
    read_model("/nonexistent/model.json");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Io, ReadsAutomata) {
  const FuzzyAutomaton safe = read_automaton(model_path("psafe.json"));
  EXPECT_EQ(safe.name, "psafe");
  EXPECT_EQ(safe.mode, AcceptanceMode::FiniteWord);
  EXPECT_EQ(safe.transitions.size(), 5u);
  EXPECT_EQ(safe.final[2], Poss::zero());
  const FuzzyAutomaton run = read_automaton(model_path("prun.json"));
  EXPECT_EQ(run.mode, AcceptanceMode::Buchi);

  json doc = json::parse(R"({"states":["q"],"ap":["a"],"mode":"finite","initial":{"q":"1"},
    "final":{"q":"1"},"transitions":[{"from":"q","to":"q","guard":"b","value":"1"}]})");
  EXPECT_THROW(automaton_from_json(doc), Error);
  doc["transitions"][0]["guard"] = "a &&";
  EXPECT_THROW(automaton_from_json(doc), Error);
  doc["transitions"][0]["guard"] = "a";
  doc["mode"] = "rabin";
  EXPECT_THROW(automaton_from_json(doc), Error);
  doc["mode"] = "finite";
  doc["extra_letters"] = json::array({json{{"a", "0.5"}}});
  const FuzzyAutomaton ok = automaton_from_json(doc);
  ASSERT_EQ(ok.extra_letters.size(), 1u);
  EXPECT_EQ(ok.extra_letters[0].at("a"), p("0.5"));
}

TEST(Io, WriteModel) {
  const auto path = std::filesystem::temp_directory_path() / "possmc_io_test.json";
  write_model(path, example_model());
  EXPECT_EQ(read_model(path).transitions(), example_model().transitions());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace possmc
