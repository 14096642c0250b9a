// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Subcommands:
//
//   gen --n N --p P --seed S --out FILE    write a random instance
//   ubp FILE [--threshold T]               print "<id> <bound>" per vertex
//   solve FILE --algo A [--time-limit S] [--json]
//   mip FILE --out FILE.lp [--tighten]
//   verify FILE --solution FILE            re-check a claimed solution
//   bench --spec FILE.csv [--json]         batch runs, one record per line
//
// Exit codes: 0 success / verified optimal, 1 usage error, 2 parse error,
// 3 time limit reached, 4 verification failed. Diagnostics go to the error
// stream, results to the output stream.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mbbp {

// One solver run, as reported on machine-readable output.
struct RunRecord {
  std::string instance;
  std::string algo;
  int half_size = 0;
  std::uint64_t nodes = 0;
  std::int64_t time_ms = 0;
  std::string status;  // "optimal" or "timeout"
  int ubp_iters = 0;
  std::int64_t ubp_time_ms = 0;
};

std::string to_json_line(const RunRecord& r);

// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mbbp
