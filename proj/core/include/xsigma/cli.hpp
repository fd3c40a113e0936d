#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xsigma::cli {

/// Runs the full command line. Exit codes: 0 success, 1 verification failures,
/// 2 parse or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// The sweep table for one type spec, rendered as "csv" or "json".
/// Deterministic and byte-stable for identical inputs.
std::string sweep_table(const std::string& type, const std::string& format);

}  // namespace xsigma::cli
