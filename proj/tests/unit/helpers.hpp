#pragma once

#include <string>

#include "doctest.h"

#include "qlab/check.hpp"
#include "qlab/ring/ratfun.hpp"

namespace th {

using qlab::ring::MultiPoly;
using qlab::ring::Rational;
using qlab::ring::RatFun;
using qlab::ring::Var;

inline RatFun Q() { return RatFun::var(Var::q); }
inline RatFun T() { return RatFun::var(Var::t); }
inline MultiPoly P(Var v, unsigned k = 1) { return MultiPoly::var(v, k); }

// Every check in the report passed; a failing id and witness are shown otherwise.
inline void require_clean(const qlab::Report& r) {
  REQUIRE_FALSE(r.empty());
  for (const auto& c : r) {
    INFO(c.id << " witness: " << c.witness);
    CHECK((c.status == qlab::Status::pass || c.status == qlab::Status::conjecture_pass));
  }
}

inline const qlab::CheckResult& by_id(const qlab::Report& r, const std::string& id) {
  for (const auto& c : r)
    if (c.id == id) return c;
  FAIL("no check " << id);
  return r.front();
}

inline void require_pass(const qlab::Report& r, const std::string& id) {
  const auto& c = by_id(r, id);
  INFO(c.id << " witness: " << c.witness);
  CHECK(c.status == qlab::Status::pass);
}

}  // namespace th
