#include "srll/report.hpp"

#include <sstream>

#include <json.hpp>

namespace srll {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "error";
}

std::string Report::id() const {
  std::ostringstream os;
  os << check;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["check"] = check;
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["status"] = status_name(status);
  j["residual"] = residual;
  j["elapsed_ms"] = elapsed_ms;
  j["notes"] = notes;
  return j.dump();
}

Report Report::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.check = j.at("check").get<std::string>();
  for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
    r.params.emplace_back(it.key(), it.value().get<std::string>());
  std::string st = j.at("status").get<std::string>();
  r.status = st == "pass"      ? Status::Pass
             : st == "fail"    ? Status::Fail
             : st == "skipped" ? Status::Skipped
                               : Status::Error;
  r.residual = j.at("residual").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

}  // namespace srll
