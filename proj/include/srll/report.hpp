#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace srll {

enum class Status { Pass, Fail, Skipped, Error };

const char* status_name(Status s);

/// Machine-readable outcome of one verification task.
struct Report {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  std::string residual;  // empty iff status == Pass
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> notes;

  Report& with(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
    return *this;
  }
  Report& with(const std::string& key, long value) {
    return with(key, std::to_string(value));
  }

  bool passed() const { return status == Status::Pass; }

  /// stable identifier: check name plus ordered parameters
  std::string id() const;

  std::string to_json() const;
  static Report from_json(const std::string& text);
};

/// Helper running `body` and recording elapsed time plus thrown errors.
template <typename F>
Report timed_report(Report base, F&& body);

}  // namespace srll

#include <chrono>
#include <exception>

namespace srll {

template <typename F>
Report timed_report(Report base, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(base);
  } catch (const std::exception& e) {
    base.status = Status::Error;
    base.residual = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  base.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return base;
}

}  // namespace srll
