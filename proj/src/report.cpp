#include "hoops/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hoops {

char const* Report::status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inapplicable: return "inapplicable";
    case Status::error: return "error";
  }
  return "?";
}

int Report::exit_code() const {
  switch (status) {
    case Status::pass:
    case Status::inapplicable: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
  }
  return 2;
}

std::string render(Report const& report, RenderMode mode) {
  if (mode == RenderMode::json) {
    nlohmann::json j;
    j["status"] = Report::status_name(report.status);
    j["subject"] = report.subject;
    j["witnesses"] = nlohmann::json::array();
    for (auto const& w : report.witnesses) {
      nlohmann::json jw;
      jw["kind"] = w.kind;
      jw["indices"] = w.indices;
      if (!w.note.empty()) jw["note"] = w.note;
      j["witnesses"].push_back(std::move(jw));
    }
    j["anchors"] = report.anchors;
    j["timing_ms"] = report.timing_ms;
    if (!report.data_json.empty()) j["data"] = nlohmann::json::parse(report.data_json);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << report.subject << ": " << Report::status_name(report.status);
  if (!report.anchors.empty()) {
    os << " [";
    for (size_t i = 0; i < report.anchors.size(); ++i)
      os << (i ? "," : "") << report.anchors[i];
    os << "]";
  }
  os << '\n';
  for (auto const& w : report.witnesses) {
    os << "  witness " << w.kind << " (";
    for (size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
    os << ")";
    if (!w.note.empty()) os << " " << w.note;
    os << '\n';
  }
  if (!report.detail.empty()) os << report.detail;
  return os.str();
}

}  // namespace hoops
