#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlab/check.hpp"

namespace qlab::harness {

enum class Format { text, json, csv };

std::optional<Format> parse_format(const std::string& s);
std::string format_name(Format f);

constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
  std::string suite = "all";
  std::optional<std::size_t> order;  // suite default when unset
  std::optional<unsigned> m;         // bound parameter for shape, Lommel and conjecture suites
  std::optional<unsigned> nmax;      // conjecture suites
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::text;
  bool timing = false;  // wall times are left out by default so output is reproducible
  unsigned jobs = 0;    // 0: hardware concurrency
};

// Thrown for anything that should end the process with the usage status.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Suite {
  std::string name;
  std::string summary;
  std::string order_meaning;  // what --order controls, empty when unused
  std::size_t default_order = 0;
  bool conjecture = false;
  std::function<Report(const RunConfig&, std::size_t order)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

struct SuiteRun {
  std::string suite;
  std::size_t order = 0;
  Report report;
};

// "all" expands to every suite in registry order.  Suites run on a worker pool and
// are merged back in the order requested.
std::vector<SuiteRun> run_suites(const RunConfig& cfg);

// 0 when no non-conjecture check failed, 1 otherwise.
int exit_status(const std::vector<SuiteRun>& runs);

std::string render(const std::vector<SuiteRun>& runs, const RunConfig& cfg);

// Targets of `qlab expand`.
struct ExpandRequest {
  std::string target;  // hahn-ratio, jackson-ratio, lommel-ratio, moments, gen-poly
  std::optional<std::size_t> order;
  std::optional<unsigned> m;
  std::string family = "hahn-exton";  // moments: hahn-exton, catalan, motzkin, norlund
  std::string source = "shapes";      // gen-poly: shapes, paths
  int max_area = 6;
  Format format = Format::text;
};
std::string expand(const ExpandRequest& req);

struct EnumerateRequest {
  std::string what;  // shapes, paths
  int max_area = 4;
  std::size_t length = 3;
  int max_height = 1;
  Format format = Format::text;
};
std::string enumerate(const EnumerateRequest& req);

// Canonical serializations kept under tests/golden: (file name, contents).
std::vector<std::pair<std::string, std::string>> golden_documents();

}  // namespace qlab::harness
