#ifndef NOOHI_CLI_HPP
#define NOOHI_CLI_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "noohi/bounds.hpp"
#include "noohi/pi1.hpp"

namespace noohi {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailed = 1,
  kExitPrecondition = 2,
  kExitSchema = 3,
  kExitResource = 4,
};

/// Everything a command needs, checked before any computation starts.
struct RunManifest {
  std::string command;
  std::string input;
  std::string output;  ///< empty: standard output
  Bounds bounds;
  Route route = Route::automatic;
  VKForm form = VKForm::i;
  bool simplify = true;
  std::vector<int> degrees;
  int degree_max = 3;
  bool connected = false;
  bool witness = false;
  std::optional<std::vector<std::string>> order;

  /// Throws InputError on an inconsistent option set.
  void validate() const;
};

/// Runs the tool on `args` (args[0] is the program name). JSON results go
/// to `out` or the output file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noohi

#endif
