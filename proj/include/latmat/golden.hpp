#pragma once

#include <string>
#include <vector>

namespace latmat {

struct GoldenCase {
  std::string id;
  std::string topic;
  std::string description;
};

struct GoldenResult {
  GoldenCase meta;
  bool pass = false;
  std::string detail;  // failure explanation, empty on pass
};

struct GoldenSummary {
  int total = 0;
  int passed = 0;
  std::vector<GoldenResult> results;
};

/// The worked examples this library reproduces, replayed against frozen
/// expected values. With `mutate_matmul` the cases that multiply matrices
/// run against a product with meet and join swapped; a correct build must
/// then fail at least the nonassociativity witnesses.
GoldenSummary run_golden_suite(bool mutate_matmul = false);

std::vector<GoldenCase> golden_cases();

}  // namespace latmat
