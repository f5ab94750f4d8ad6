#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qv::verify {

/// A named exact check. Throws CheckFailure (with the failing identity in
/// exact form) to report a violation; returning normally means pass.
struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

struct Check {
  std::string suite;  // cartan | substitution | theta | fibers | fock
  std::string name;
  std::function<void(unsigned long seed)> run;
};

const std::vector<Check>& registry();

std::vector<std::string> suite_names();

struct SuiteResult {
  bool ok;
  std::string report;  // one line per check, deterministic for a fixed seed
};

/// Runs one suite ("all" runs everything) with the given seed.
SuiteResult run_suite(const std::string& suite, unsigned long seed);

}  // namespace qv::verify
