#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace almostcover {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  long max_n = 0;
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

struct VerifyOptions {
  // 0 selects the suite's own grid limit.
  long max_n = 0;
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;
};

// main, main2, main3, main4, sharpness, binomial, szw.
const std::vector<std::string>& verify_suite_names();

// Throws Error on an unknown suite name.
VerifyReport run_verify_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace almostcover
