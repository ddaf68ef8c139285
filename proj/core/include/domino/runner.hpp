#pragma once

#include <iosfwd>
#include <string>

namespace domino {

// Configuration for one CLI invocation.  String-typed fields are validated
// inside run(); invalid values are usage errors (exit code 2).
struct RunConfig {
    enum class Command { Compute, Verify, Export };

    Command command = Command::Compute;
    int n = 3;                      // compute / export
    int min_n = 3;                  // verify range (checks clamp to their own minima)
    int max_n = 5;
    std::string field = "Q";        // "Q" | "F2" | "F3" | "F<p>"
    std::string method = "koszul";  // compute: hochster | koszul | recursion | all
    std::string format = "table";   // compute: table | json | csv
    std::string checks = "all";     // verify: comma list of
                                    // fibonacci,splitting,relations,recursion,spheres,charindep,pdreg
    std::string output_path;        // export: empty writes to out
    int max_degree = -1;            // compute: truncate the table at j <= max_degree (-1: none)
    int cap_bits = 24;              // refuse subset enumerations beyond 2^cap_bits
};

// Runs the command, streaming results to `out` and diagnostics to `err`.
// Returns 0 on success, 1 when a requested verification fails, 2 on usage
// errors.  Output is byte-deterministic for a fixed config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace domino
