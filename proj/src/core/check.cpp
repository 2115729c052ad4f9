#include "qlab/check.hpp"

#include <chrono>
#include <exception>

namespace qlab {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::conjecture_pass: return "conjecture-pass";
    case Status::conjecture_fail: return "conjecture-fail";
  }
  return "fail";
}

CheckResult run_check(std::string id, Params params, const CheckBody& body, bool conjecture,
                      std::string note) {
  CheckResult r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.note = std::move(note);
  auto start = std::chrono::steady_clock::now();
  std::optional<std::string> witness;
  try {
    witness = body();
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  bool ok = !witness.has_value();
  if (!ok) r.witness = *witness;
  if (conjecture)
    r.status = ok ? Status::conjecture_pass : Status::conjecture_fail;
  else
    r.status = ok ? Status::pass : Status::fail;
  return r;
}

bool any_failed(const Report& r) {
  for (const auto& c : r)
    if (c.failed()) return true;
  return false;
}

void append(Report& into, Report more) {
  for (auto& c : more) into.push_back(std::move(c));
}

}  // namespace qlab
