#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace stab {

struct CliResult {
  nlohmann::json output;  // one record, or an array of records when `lines` is set
  int exit_code;          // 0 decided, 1 out of fragment / unsupported, 2 input error
  bool lines = false;     // print each array element on its own line
};

/// Runs one command; args exclude the program name.
CliResult run(const std::vector<std::string>& args);

/// Evaluates one expression as the `stable` command does; used by batch.
CliResult run_stable(const std::string& expr, const std::string& derivation, const std::string& field, int depth);

/// One `stable` record per line, in input order, each tagged with its 1-based "line".
std::vector<nlohmann::json> run_batch(const std::vector<std::string>& lines, const std::string& derivation,
                                      const std::string& field, int depth);
/// Serial reference.
std::vector<nlohmann::json> run_batch_serial(const std::vector<std::string>& lines, const std::string& derivation,
                                             const std::string& field, int depth);

}  // namespace stab
