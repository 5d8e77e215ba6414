#pragma once

// Uniform result reporting for the command line front end.  A report
// renders to text or to a stable JSON schema; the exit code depends on
// the status only: pass/inapplicable 0, fail 1, error 2.

#include <string>
#include <vector>

namespace hoops {

struct Witness {
  std::string kind;
  std::vector<long long> indices;
  std::string note;
};

struct Report {
  enum class Status { pass, fail, inapplicable, error };
  Status status = Status::pass;
  std::string subject;               // what was checked (verb or claim)
  std::vector<Witness> witnesses;    // nonempty whenever status == fail
  std::vector<std::string> anchors;  // claim ids involved
  double timing_ms = 0.0;
  std::string detail;                // free-form extra lines for text mode
  std::string data_json;             // verb-specific payload, already JSON

  static char const* status_name(Status s);
  int exit_code() const;
};

enum class RenderMode { text, json };

std::string render(Report const& report, RenderMode mode);

}  // namespace hoops
