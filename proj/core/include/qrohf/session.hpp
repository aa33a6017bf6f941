#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qrohf/pipeline.hpp"

namespace qrohf {

// Parse or validation failure; `where` names the offending document path,
// e.g. "experts[2].matrix[1][3].mu[0]".
class SessionError : public std::runtime_error {
 public:
  SessionError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// One self-describing decision session: data plus parameters.
struct Session {
  DecisionConfig config;
  ExpertPanel panel;
  std::vector<std::string> alternatives;  // display names, size n
  std::vector<std::string> expert_ids;    // display names, size m
};

// Parses a session document (JSON text). Throws SessionError on malformed
// input or any violated invariant (reciprocity, rung constraint, weight sum).
Session parse_session(const std::string& text);

// Canonical JSON for a session; parse_session(emit_session(s)) is stable.
std::string emit_session(const Session& session);

}  // namespace qrohf
