#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folindex/projective.hpp"
#include "folindex/session.hpp"

namespace folindex {

enum class Verdict { Pass, Fail, Error };

std::string to_string(Verdict v);

struct CommandReport {
  std::string command;  // canonical text of the command
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<Rational> value;
  std::string method;
  std::vector<CrossCheck> crosschecks;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Pass;
  std::string error;
  std::optional<CheckReport> table;  // global checks
  std::optional<Rational> expected;  // right-hand side of a check
};

/// Runs every command.  Commands are independent once the session is parsed,
/// so they are evaluated in parallel; the reports come back in source order.
/// A Conflict between two routes is a FAIL; any other engine error is
/// reported as ERROR for that command only.
std::vector<CommandReport> run_session(const Session& s, const IndexOptions& opt = {});

/// 0 when every report passes, 1 on any FAIL, 2 on any ERROR.
int exit_code(const std::vector<CommandReport>& reports);

std::string format_text(const std::vector<CommandReport>& reports);
std::string format_json(const std::vector<CommandReport>& reports);

}  // namespace folindex
