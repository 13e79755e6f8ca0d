#pragma once

namespace pba {

// Entry point behind the `pba` binary; parses flags, runs the experiment,
// writes the output files. Returns a process exit status.
int cli_main(int argc, const char* const* argv);

}  // namespace pba
