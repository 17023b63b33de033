#pragma once

// Command layer behind the CLI: every command returns a Report whose exit
// code follows 0 ok, 1 identity false or not composable, 2 malformed input,
// 3 unsupported domain.

#include "hcl/serialize.hpp"

namespace hcl {

struct Report
{
    std::string command;
    bool ok = true;
    int exit_code = 0;
    std::vector<std::string> reasons;
    std::vector<std::string> notes;
    json artifacts = json::object();
    double seconds = 0;

    json to_json() const;
    std::string to_text() const;
};

Report cmd_classgroup(BigInt const & D);
/// space bqf | cube | cubic | pair; objects hold the two summands.
Report cmd_compose(Envelope const & in);
/// law gauss | cube | cubic | pair | quat | senary.
Report cmd_verify(std::string const & law, Envelope const & in);
/// objects [A, B, C]; the witness is verified before it is returned.
Report cmd_dual(Envelope const & in);
/// Replays every bundled fixture in `dir` against its expected values.
Report cmd_examples(std::string const & dir);

/// Runs `body` and maps library exceptions to exit codes 1, 2 and 3.
Report run_guarded(std::string const & command, std::function<Report()> const & body);

}  // namespace hcl
