#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "qlab/cfrac/cfrac.hpp"
#include "qlab/harness/harness.hpp"
#include "qlab/kishore/kishore.hpp"
#include "qlab/shapes/shapes.hpp"

using namespace qlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Counts by status plus the first failing check.
struct Summary {
  std::size_t pass = 0, fail = 0, cpass = 0, cfail = 0;
  std::string first_fail;
  explicit Summary(const Report& r) {
    for (const auto& c : r) {
      switch (c.status) {
        case Status::pass:
          ++pass;
          break;
        case Status::fail:
          ++fail;
          if (first_fail.empty()) first_fail = c.id + " (" + c.witness + ")";
          break;
        case Status::conjecture_pass:
          ++cpass;
          break;
        case Status::conjecture_fail:
          ++cfail;
          break;
      }
    }
  }
  std::string text() const {
    std::string s = std::to_string(pass) + " checks pass";
    if (fail) s += ", " + std::to_string(fail) + " fail, first " + first_fail;
    return s;
  }
};

Outcome all_pass(const Report& r) {
  Summary s(r);
  return {s.fail == 0 && !r.empty(), s.text()};
}

bool passed(const Report& r, const std::string& id) {
  bool seen = false;
  for (const auto& c : r) {
    if (c.id != id) continue;
    seen = true;
    if (c.status != Status::pass) return false;
  }
  return seen;
}

std::string note_of(const Report& r, const std::string& id) {
  for (const auto& c : r)
    if (c.id == id) return c.note;
  return {};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::optional<std::string> capture(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "./qlab";
  const std::uint64_t seed = harness::kDefaultSeed;
  std::map<int, std::pair<std::string, Outcome>> rows;
  auto record = [&](int n, std::string title, Outcome o) {
    rows[n] = {std::move(title), std::move(o)};
    const auto& [t, out] = rows[n];
    std::printf("criterion %2d: %s  %s: %s\n", n, out.ok ? "PASS" : "FAIL", t.c_str(), out.detail.c_str());
    std::fflush(stdout);
  };

  {
    auto t0 = std::chrono::steady_clock::now();
    Report r = kishore::check_thm_df(13);
    double secs = seconds_since(t0);
    Outcome o = all_pass(r);
    o.ok = o.ok && passed(r, "thm-df.beta-anchors") && passed(r, "thm-df.beta-nonneg") &&
           passed(r, "thm-df.j-ratio") && secs <= 60.0;
    o.detail += "; beta_0..beta_12 nonnegative, anchors 1, 1, 1+q^2 t; " + std::to_string(secs).substr(0, 5) + " s";
    record(1, "q-Kishore certificates for the Hahn-Exton ratio", o);
  }
  {
    Report r = kishore::check_hahn_mirrors(13);
    append(r, kishore::check_hahn_qbase(13));
    record(2, "Hahn-Exton recurrences, mirrors, base-q forms, n <= 12", all_pass(r));
  }
  {
    Report r = kishore::check_jackson(13);
    Outcome o = all_pass(r);
    o.ok = o.ok && passed(r, "jackson.j1-vs-j2") && passed(r, "jackson.beta-nonneg") &&
           passed(r, "jackson.inverse-coefficients") && passed(r, "jackson.mirror");
    record(3, "Jackson family: recurrence, J1 = J2 through z^20, certificates, mirror", o);
  }
  {
    Report r = shapes::check_shapes_basic(12);
    append(r, shapes::check_thm_bm(12));
    auto all = shapes::enumerate_shapes(3);
    std::size_t c[4] = {0, 0, 0, 0};
    for (const auto& s : all) ++c[s.area()];
    Outcome o = all_pass(r);
    o.ok = o.ok && c[1] == 1 && c[2] == 2 && c[3] == 4;
    o.detail += "; area counts 1, 2, 4 = " + std::to_string(c[1]) + ", " + std::to_string(c[2]) + ", " +
                std::to_string(c[3]) + "; area <= 12";
    record(4, "all connected skew shapes = unbounded fraction = Hahn-Exton ratio", o);
  }
  {
    Report r = shapes::check_thm_main1(4, 12);
    Outcome o = all_pass(r);
    o.detail += "; m <= 4, area <= 12";
    record(5, "bounded shapes: path images = finite fraction = q-Lommel ratio", o);
  }
  {
    Report r = cfrac::check_prop_dp_p(13, seed);
    Outcome o = all_pass(r);
    o.ok = o.ok && passed(r, "ri-moments.hahn-exton") && passed(r, "ri-moments.random");
    record(6, "moments of type R_I fractions (shape spec m <= 5, 20 random specs)", o);
  }
  {
    Report r = cfrac::check_lemma_equivalence(seed);
    Outcome o = all_pass(r);
    o.ok = o.ok && passed(r, "equivalence.symbolic") && passed(r, "equivalence.random");
    record(7, "equivalence transforms preserve finite fractions", o);
  }
  {
    cfrac::RandomConfig rnd;
    rnd.seed = seed;
    rnd.points = 30;
    rnd.order = 13;
    Report r = cfrac::norlund_cf(13, rnd);
    append(r, cfrac::heine_cf(13, rnd));
    append(r, cfrac::two_cont(13, rnd));
    append(r, cfrac::jratio_moment_identities(13));
    Outcome o = all_pass(r);
    o.detail += "; symbolic through z^4, 30 seeded points through z^12";
    record(8, "q-Norlund, Heine, two-fraction and moment identities", o);
  }
  {
    Report r = kishore::classical_kishore(11);
    Outcome o = all_pass(r);
    o.ok = o.ok && passed(r, "classical.numerators") && passed(r, "classical.tan");
    record(9, "classical limit: numerators n <= 10 and the tan anchor", o);
  }
  {
    Report r = kishore::conjecture_finite_kishore(6, 8);
    append(r, kishore::conjecture_gauss(8, false));
    append(r, kishore::conjecture_gauss(8, true));
    Summary s(r);
    Outcome o{s.fail == 0 && s.cpass + s.cfail > 0,
              std::to_string(s.cpass) + " conjecture-pass, " + std::to_string(s.cfail) + " conjecture-fail, " +
                  std::to_string(s.pass) + " supporting checks pass"};
    if (s.fail) o.detail += "; supporting failure " + s.first_fail;
    record(10, "conjecture checkers run to completion with verdicts", o);
  }
  {
    Report basic = shapes::check_shapes_basic(3);
    Report bij = shapes::bijection_audit(1, 4);
    Outcome o;
    o.ok = passed(basic, "shapes.young-figure") && passed(bij, "bijection.figure-shape") &&
           passed(bij, "bijection.figure-path-weight");
    o.detail = "(4,4,2)/(2,1) has (4,3,7); shape checked against the drawn boundary paths: " +
               note_of(bij, "bijection.figure-shape") + "; " + note_of(bij, "bijection.figure-path-weight");
    record(11, "figure anchors", o);
  }
  {
    std::string cmd = cli + " verify all --format json";
    auto a = capture(cmd), b = capture(cmd);
    Outcome o;
    o.ok = a && b && !a->empty() && *a == *b;
    o.detail = a && b ? std::to_string(a->size()) + " bytes per run, " + (*a == *b ? "identical" : "different")
                      : "could not run " + cli;
    record(12, "two runs of verify all --format json are byte-identical", o);
  }

  int failed = 0;
  for (const auto& [n, row] : rows)
    if (!row.second.ok) ++failed;
  std::printf("acceptance: %zu criteria, %d failed\n", rows.size(), failed);
  return failed ? 1 : 0;
}
