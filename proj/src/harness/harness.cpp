#include "qlab/harness/harness.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qlab/cfrac/cfrac.hpp"
#include "qlab/kishore/kishore.hpp"
#include "qlab/lommel/lommel.hpp"
#include "qlab/ring/checks.hpp"
#include "qlab/shapes/shapes.hpp"

namespace qlab::harness {

using json = nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::text:
      return "text";
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
  }
  return "text";
}

namespace {

cfrac::RandomConfig random_config(const RunConfig& cfg, std::size_t order) {
  cfrac::RandomConfig r;
  r.seed = cfg.seed;
  r.order = order;
  return r;
}

int as_int(std::size_t n) { return static_cast<int>(n); }

std::vector<Suite> build_registry() {
  std::vector<Suite> s;
  auto add = [&](std::string name, std::string summary, std::string meaning, std::size_t order, bool conj,
                 std::function<Report(const RunConfig&, std::size_t)> run) {
    s.push_back({std::move(name), std::move(summary), std::move(meaning), order, conj, std::move(run)});
  };
  add("ring", "exact arithmetic examples and seeded ring properties", "", 0, false,
      [](const RunConfig& c, std::size_t) { return ring::check_ring(c.seed); });
  add("thm-df", "q-Kishore certificates beta_n for the Hahn-Exton ratio", "number of coefficients n", 13, false,
      [](const RunConfig&, std::size_t o) { return kishore::check_thm_df(o); });
  add("hahn-mirrors", "Hahn-Exton mu recurrences in base q and 1/q and the mirror relation",
      "number of coefficients n", 13, false,
      [](const RunConfig&, std::size_t o) { return kishore::check_hahn_mirrors(o); });
  add("hahn-qbase", "Hahn-Exton ratios with the base-q normalization and shifted argument",
      "number of coefficients n", 13, false,
      [](const RunConfig&, std::size_t o) { return kishore::check_hahn_qbase(o); });
  add("jackson", "Jackson q-Bessel ratios, certificates and mirrors", "number of coefficients n", 13, false,
      [](const RunConfig&, std::size_t o) { return kishore::check_jackson(o); });
  add("thm-bm", "all connected skew shapes against the unbounded fraction and the Hahn-Exton ratio",
      "area bound", 12, false, [](const RunConfig&, std::size_t o) {
        Report r = shapes::check_shapes_basic(as_int(o));
        append(r, shapes::check_thm_bm(as_int(o)));
        return r;
      });
  add("thm-main1", "bounded shapes: path images, finite fraction and q-Lommel ratio", "area bound", 12, false,
      [](const RunConfig& c, std::size_t o) { return shapes::check_thm_main1(as_int(c.m.value_or(4)), as_int(o)); });
  add("bijection", "the boundary-path bijection from 2-Motzkin paths to connected skew shapes", "area bound", 10,
      false,
      [](const RunConfig& c, std::size_t o) { return shapes::bijection_audit(as_int(c.m.value_or(4)), as_int(o)); });
  add("prop-4.8", "moments of type R_I fractions against star-ratio expansions", "truncation order", 13, false,
      [](const RunConfig& c, std::size_t o) { return cfrac::check_prop_dp_p(o, c.seed); });
  add("lemma-4.3", "equivalence transforms of finite continued fractions", "", 0, false,
      [](const RunConfig& c, std::size_t) { return cfrac::check_lemma_equivalence(c.seed); });
  add("norlund", "q-Norlund fraction for 2phi1 ratios", "truncation order in z", 13, false,
      [](const RunConfig& c, std::size_t o) { return cfrac::norlund_cf(o, random_config(c, o)); });
  add("heine", "Heine fraction and contiguous relation", "truncation order in z", 13, false,
      [](const RunConfig& c, std::size_t o) { return cfrac::heine_cf(o, random_config(c, o)); });
  add("two-cont", "two fractions for 1phi1(0;cq;q,z)/1phi1(0;c;q,z)", "truncation order in z", 21, false,
      [](const RunConfig& c, std::size_t o) { return cfrac::two_cont(o, random_config(c, o)); });
  add("jratio-moments", "Hahn-Exton and Jackson ratios as moment generating functions", "truncation order in z",
      21, false, [](const RunConfig&, std::size_t o) { return cfrac::jratio_moment_identities(o); });
  add("classical-kishore", "classical Bessel numerators and the q -> 1 limit of the certificates",
      "number of coefficients n", 11, false,
      [](const RunConfig&, std::size_t o) { return kishore::classical_kishore(o); });
  add("lommel", "q-Lommel polynomials, type R_I data and ratio stabilization", "truncation order in z", 13, false,
      [](const RunConfig& c, std::size_t o) { return lommel::check_lommel(c.m.value_or(6), o); });
  add("conjecture-finite-kishore", "positivity of the truncated Lommel ratio coefficients", "n_max", 8, true,
      [](const RunConfig& c, std::size_t o) {
        return kishore::conjecture_finite_kishore(c.m.value_or(6), static_cast<unsigned>(o));
      });
  add("conjecture-gauss", "positivity for the 2phi1 ratio", "n_max", 8, true,
      [](const RunConfig&, std::size_t o) { return kishore::conjecture_gauss(static_cast<unsigned>(o), false); });
  add("conjecture-gauss-prime", "positivity for the shifted 2phi1 ratio", "n_max", 8, true,
      [](const RunConfig&, std::size_t o) { return kishore::conjecture_gauss(static_cast<unsigned>(o), true); });
  return s;
}

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + v;
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

struct Tally {
  std::size_t pass = 0, fail = 0, cpass = 0, cfail = 0;
  void add(Status s) {
    switch (s) {
      case Status::pass:
        ++pass;
        break;
      case Status::fail:
        ++fail;
        break;
      case Status::conjecture_pass:
        ++cpass;
        break;
      case Status::conjecture_fail:
        ++cfail;
        break;
    }
  }
};

json config_json(const RunConfig& cfg, const std::vector<SuiteRun>& runs) {
  json h;
  h["tool"] = "qlab";
  h["command"] = "verify";
  h["suite"] = cfg.suite;
  h["order"] = cfg.order ? json(*cfg.order) : json("default");
  h["m"] = cfg.m ? json(*cfg.m) : json("default");
  h["seed"] = cfg.seed;
  h["format"] = format_name(cfg.format);
  h["timing"] = cfg.timing;
  json orders = json::object();
  for (const auto& r : runs) orders[r.suite] = r.order;
  h["suite_orders"] = orders;
  return h;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> registry = build_registry();
  return registry;
}

const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<SuiteRun> run_suites(const RunConfig& cfg) {
  std::vector<const Suite*> chosen;
  if (cfg.suite == "all") {
    for (const auto& s : suites()) chosen.push_back(&s);
  } else {
    const Suite* s = find_suite(cfg.suite);
    if (!s) throw UsageError("unknown suite '" + cfg.suite + "'");
    chosen.push_back(s);
  }
  std::vector<SuiteRun> runs(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    runs[i].suite = chosen[i]->name;
    runs[i].order = cfg.order.value_or(chosen[i]->default_order);
    if (chosen[i]->conjecture && cfg.nmax) runs[i].order = *cfg.nmax;
  }
  unsigned workers = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(chosen.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      try {
        runs[i].report = chosen[i]->run(cfg, runs[i].order);
      } catch (const std::exception& e) {
        runs[i].report = {run_check(chosen[i]->name + ".suite", {}, [msg = std::string(e.what())]() {
          return std::optional<std::string>("exception: " + msg);
        })};
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return runs;
}

int exit_status(const std::vector<SuiteRun>& runs) {
  for (const auto& r : runs)
    if (any_failed(r.report)) return 1;
  return 0;
}

std::string render(const std::vector<SuiteRun>& runs, const RunConfig& cfg) {
  json header = config_json(cfg, runs);
  Tally total;
  for (const auto& r : runs)
    for (const auto& c : r.report) total.add(c.status);

  if (cfg.format == Format::json) {
    json out;
    out["header"] = header;
    json results = json::array();
    for (const auto& r : runs) {
      for (const auto& c : r.report) {
        json j;
        j["suite"] = r.suite;
        j["id"] = c.id;
        json p = json::object();
        for (const auto& [k, v] : c.params) p[k] = v;
        j["params"] = p;
        j["status"] = std::string(status_name(c.status));
        j["witness"] = c.witness;
        if (!c.note.empty()) j["note"] = c.note;
        if (cfg.timing) j["wall_ms"] = c.wall_ms;
        results.push_back(j);
      }
    }
    out["results"] = results;
    out["summary"] = {{"pass", total.pass},
                      {"fail", total.fail},
                      {"conjecture-pass", total.cpass},
                      {"conjecture-fail", total.cfail}};
    return out.dump(2) + "\n";
  }

  std::string s = "# " + header.dump() + "\n";
  if (cfg.format == Format::csv) {
    s += "suite,id,params,status,witness,note";
    if (cfg.timing) s += ",wall_ms";
    s += "\n";
    for (const auto& r : runs)
      for (const auto& c : r.report) {
        s += csv_field(r.suite) + "," + csv_field(c.id) + "," + csv_field(params_text(c.params)) + "," +
             std::string(status_name(c.status)) + "," + csv_field(c.witness) + "," + csv_field(c.note);
        if (cfg.timing) s += "," + fixed_ms(c.wall_ms);
        s += "\n";
      }
    return s;
  }

  for (const auto& r : runs) {
    Tally t;
    for (const auto& c : r.report) t.add(c.status);
    s += "== " + r.suite + " (order " + std::to_string(r.order) + ")\n";
    for (const auto& c : r.report) {
      s += "  " + std::string(status_name(c.status)) + "  " + c.id;
      if (!c.params.empty()) s += " [" + params_text(c.params) + "]";
      if (!c.witness.empty()) s += "  witness: " + c.witness;
      if (cfg.timing) s += "  (" + fixed_ms(c.wall_ms) + " ms)";
      s += "\n";
      if (!c.note.empty()) s += "      " + c.note + "\n";
    }
  }
  s += "summary: " + std::to_string(total.pass) + " pass, " + std::to_string(total.fail) + " fail, " +
       std::to_string(total.cpass) + " conjecture-pass, " + std::to_string(total.cfail) + " conjecture-fail\n";
  return s;
}

}  // namespace qlab::harness
