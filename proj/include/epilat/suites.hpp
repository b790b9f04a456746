#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epilat/deduction.hpp"
#include "epilat/variety.hpp"

namespace epilat {

struct SuiteParams {
  int lattice_max = 6;     // lattice-lemmas, fo-crossval
  int n_max = 8;           // figure2, degree-calculus, theorem-necessary-conditions
  OracleBounds bounds;     // word-problems
  int q_length = 4;        // q-ideal: semigroup words up to this length
  int depth = 6;           // deduction-replay search bounds
  int size_cap = 12;
  std::uint64_t seed = 1;  // sampling seed; the CLI takes it from EPILAT_SEED
};

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> metrics;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  /// Plain-text report with one TSV block. Wall time is left out so that
  /// repeated runs produce identical text.
  std::string str() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

/// The fixed derivations replayed by the deduction-replay suite.
struct Replay {
  std::string name;
  std::vector<std::string> theories; // variety names, "epi", or "axiom: <identity>"
  std::vector<std::string> terms;
};
std::vector<Theory> replay_theories(const Replay& r);
std::vector<Replay> displayed_deductions();

} // namespace epilat
