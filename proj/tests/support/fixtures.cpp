#include "fixtures.hpp"

#include <vector>

#include "possmc/io.hpp"

#ifndef POSSMC_MODELS_DIR
#define POSSMC_MODELS_DIR "models"
#endif

namespace possmc::testing {

Poss p(const char* text) { return parse_poss(text); }

FuzzyVector vec(std::initializer_list<const char*> entries) {
  std::vector<Poss> v;
  for (const char* e : entries) v.push_back(parse_poss(e));
  return FuzzyVector(std::move(v));
}

Gpks example_model() {
  FuzzyMatrix trans{{p("0"), p("0.8"), p("0"), p("0.9")},
                    {p("0"), p("0"), p("0.2"), p("0.5")},
                    {p("0"), p("0"), p("0.9"), p("0")},
                    {p("0"), p("0.7"), p("0.6"), p("0")}};
  FuzzyMatrix labels{{p("1"), p("0.8"), p("0")},
                     {p("0.7"), p("1"), p("0")},
                     {p("1"), p("0"), p("0.7")},
                     {p("0"), p("0.5"), p("1")}};
  return Gpks({"s0", "s1", "s2", "s3"}, {"a", "b", "c"}, std::move(trans), vec({"1", "0", "0", "0"}),
              std::move(labels));
}

std::string model_path(const std::string& name) { return std::string(POSSMC_MODELS_DIR) + "/" + name; }

}  // namespace possmc::testing
