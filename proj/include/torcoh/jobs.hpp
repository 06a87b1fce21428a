#pragma once

#include <cstdint>
#include <string>

#include "torcoh/formats.hpp"

namespace torcoh {

// One fully-specified unit of work. All inputs live inline in params (the
// CLI reads files and embeds their content), so run() never touches the
// filesystem and is deterministic given (command, params, seed).
struct JobSpec {
  std::string command;  // cohomology | torsion | verify | dims | constants |
                        // sweep | fit | lens | random
  Json params = Json::object();
  std::uint64_t seed = 0;
  bool timings = false;  // adds a timing_ms field, breaking byte-identity
  int workers = 1;       // sweep concurrency
};

struct ResultRecord {
  int status = 0;  // 0 on success, otherwise the error code class
  Json document;   // result envelope; carries "result" or "error"
};

ResultRecord run(const JobSpec& job);

}  // namespace torcoh
