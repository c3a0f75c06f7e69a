#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "witt/families.hpp"
#include "witt/idealizer.hpp"

namespace witt {

struct SuiteOptions {
  Embedding embedding = Embedding::integer();
  std::optional<int> box;  // suite default when unset
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::optional<std::uint32_t> degree_cap;
};

struct SuiteCase {
  std::string label;
  std::string computed;
  std::string expected;
  bool pass = true;
};

struct SuiteReport {
  std::string name;
  int criterion = 0;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<SuiteCase> cases;
  std::vector<std::string> notes;
  bool pass = true;
  double seconds = 0;

  void add(std::string label, std::string computed, std::string expected, bool ok);
  std::size_t failures() const;
};

/// Suite names in `verify all` order; the i-th suite checks acceptance criterion i+1.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

/// Random element of U(W): up to 3 terms, words of length 1..max_len over
/// degrees with coordinates in [-radius, radius], coefficients in [-3,3].
UElt random_uelt(const Enveloping& env, std::mt19937_64& rng, int max_len, int radius);

}  // namespace witt
