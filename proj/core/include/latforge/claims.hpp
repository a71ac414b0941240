#ifndef LATFORGE_CLAIMS_HPP
#define LATFORGE_CLAIMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace latforge::claims {

enum class Status { Pass, Fail, Skipped };

struct Options {
  std::size_t cap = 200000;   // closure element cap
  std::uint64_t seed = 1;     // randomized suites derive per-claim streams
};

struct Result {
  std::string id;
  Status status = Status::Fail;
  double millis = 0;
  std::string detail;   // counts, notes, or the reason for a skip
  std::string witness;  // serialized JSON witness, empty when none
};

/// The closed claim registry, in canonical order. Every id maps to one
/// executable check with a pinned expected outcome.
const std::vector<std::string>& registry();

/// Runs one claim. Throws UnknownNameError for ids outside the registry.
Result run(const std::string& id, const Options& opts = {});

/// Runs every claim, optionally on a thread per claim; results are always in
/// registry order.
std::vector<Result> run_all(const Options& opts = {}, bool parallel = false);

const char* status_name(Status s);

}  // namespace latforge::claims

#endif
