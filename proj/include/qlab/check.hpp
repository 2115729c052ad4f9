#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlab {

enum class Status { pass, fail, conjecture_pass, conjecture_fail };

std::string_view status_name(Status s);

using Params = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string id;
  Params params;
  Status status = Status::pass;
  std::string witness;  // first failing index or coefficient; empty on pass
  double wall_ms = 0;
  std::string note;

  bool failed() const { return status == Status::fail; }
};

using Report = std::vector<CheckResult>;

// A check body returns nullopt on success and a witness otherwise.  Thrown
// exceptions count as failures with the message as witness.
using CheckBody = std::function<std::optional<std::string>()>;

CheckResult run_check(std::string id, Params params, const CheckBody& body,
                      bool conjecture = false, std::string note = {});

bool any_failed(const Report& r);

void append(Report& into, Report more);

}  // namespace qlab
