#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qlab/harness/harness.hpp"

using namespace qlab::harness;

namespace {

Format to_format(const std::string& s) {
  auto f = parse_format(s);
  if (!f) throw UsageError("unknown format '" + s + "' (text, json, csv)");
  return *f;
}

std::string suite_list() {
  std::string s = "suites:\n";
  for (const auto& su : suites()) {
    s += "  " + su.name + (su.conjecture ? " (conjecture)" : "") + ": " + su.summary;
    if (!su.order_meaning.empty()) s += "; --order = " + su.order_meaning + ", default " + std::to_string(su.default_order);
    s += "\n";
  }
  return s + "  all: every suite above\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab: exact verification of q-Bessel ratio identities, their continued fractions and skew-shape enumerations"};
  app.require_subcommand(1);

  RunConfig vcfg;
  std::string vformat = "text";
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", vcfg.suite, "suite name or 'all'");
  verify->add_option("--order", vcfg.order, "suite order (see --list)");
  verify->add_option("--m", vcfg.m, "bound parameter for thm-main1, bijection, lommel and finite-kishore");
  verify->add_option("--nmax", vcfg.nmax, "n_max for conjecture suites");
  verify->add_option("--seed", vcfg.seed, "seed for randomized checks");
  verify->add_option("--format", vformat, "text, json or csv");
  verify->add_option("--jobs", vcfg.jobs, "worker threads, 0 for one per core");
  verify->add_flag("--timing", vcfg.timing, "include wall times (output stops being reproducible)");
  verify->add_flag("--list", list, "list suites and exit");

  std::string cname;
  RunConfig ccfg;
  std::string cformat = "text";
  auto* conj = app.add_subcommand("conjecture", "run a conjecture checker");
  conj->add_option("name", cname, "finite-kishore, gauss or gauss-prime")->required();
  conj->add_option("--m", ccfg.m, "m_max for finite-kishore");
  conj->add_option("--nmax", ccfg.nmax, "n_max");
  conj->add_option("--format", cformat, "text, json or csv");
  conj->add_flag("--timing", ccfg.timing, "include wall times");

  ExpandRequest ereq;
  std::string eformat = "text";
  unsigned em = 0;
  auto* expand_cmd = app.add_subcommand("expand", "print a series or generating polynomial");
  expand_cmd->add_option("target", ereq.target, "hahn-ratio, jackson-ratio, lommel-ratio, moments, gen-poly")->required();
  expand_cmd->add_option("--order", ereq.order, "truncation order");
  auto* em_opt = expand_cmd->add_option("--m", em, "Lommel index, moment bound or path height bound");
  expand_cmd->add_option("--family", ereq.family, "moments family: hahn-exton, catalan, motzkin, norlund");
  expand_cmd->add_option("--source", ereq.source, "gen-poly source: shapes or paths");
  expand_cmd->add_option("--max-area", ereq.max_area, "gen-poly area bound");
  expand_cmd->add_option("--format", eformat, "text, json or csv");

  EnumerateRequest nreq;
  std::string nformat = "text";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list shapes or 2-Motzkin paths");
  enumerate_cmd->add_option("what", nreq.what, "shapes or paths")->required();
  enumerate_cmd->add_option("--max-area", nreq.max_area, "shapes: area bound");
  enumerate_cmd->add_option("--length", nreq.length, "paths: number of steps");
  enumerate_cmd->add_option("--max-height", nreq.max_height, "paths: height bound");
  enumerate_cmd->add_option("--format", nformat, "text, json or csv");

  std::string golden_dir;
  auto* golden = app.add_subcommand("golden", "write the golden files");
  golden->add_option("dir", golden_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (list) {
        std::cout << suite_list();
        return 0;
      }
      vcfg.format = to_format(vformat);
      auto runs = run_suites(vcfg);
      std::cout << render(runs, vcfg);
      return exit_status(runs);
    }
    if (conj->parsed()) {
      if (cname != "finite-kishore" && cname != "gauss" && cname != "gauss-prime")
        throw UsageError("unknown conjecture '" + cname + "' (finite-kishore, gauss, gauss-prime)");
      ccfg.suite = "conjecture-" + cname;
      ccfg.format = to_format(cformat);
      auto runs = run_suites(ccfg);
      std::cout << render(runs, ccfg);
      return exit_status(runs);
    }
    if (expand_cmd->parsed()) {
      ereq.format = to_format(eformat);
      if (*em_opt) ereq.m = em;
      std::cout << expand(ereq);
      return 0;
    }
    if (golden->parsed()) {
      for (const auto& [name, text] : golden_documents()) {
        std::ofstream out(golden_dir + "/" + name, std::ios::binary);
        if (!out) throw UsageError("cannot write " + golden_dir + "/" + name);
        out << text;
      }
      return 0;
    }
    if (enumerate_cmd->parsed()) {
      nreq.format = to_format(nformat);
      std::cout << enumerate(nreq);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "qlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qlab: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
