#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace problogic::cli {

struct CommandReport {
  enum class Status { Ok, Error };

  Status status = Status::Ok;
  /// 0 ok, 1 command failure or rejection, 2 usage error.
  int exit_code = 0;
  std::string payload;
  std::string message;

  bool ok() const { return status == Status::Ok; }
};

/// Runs one command line (without the program name). A file argument of
/// `-` reads `stdin_text`.
CommandReport run(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace problogic::cli
