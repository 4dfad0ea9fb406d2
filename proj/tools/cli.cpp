// codeglab: decide whether every irreducible character of a finite
// permutation group has p'-degree or p'-codegree, two independent ways --
// directly from an exactly computed character table and through a
// structural case analysis -- and cross-check the two.
//
// exit codes: 0 success, 1 usage or data error, 2 cross-check invariant
// violation.  errors are single machine-parsable lines on stderr:
// "error: <kind>: <message>".

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "codeglab/chartab.hpp"
#include "codeglab/classify.hpp"
#include "codeglab/corpus.hpp"
#include "codeglab/manifest.hpp"
#include "codeglab/pgr.hpp"
#include "codeglab/report.hpp"

using namespace codeglab;

namespace {

int fail(const std::string& kind, const std::string& msg, int code) {
  std::cerr << "error: " << kind << ": " << msg << "\n";
  return code;
}

PermGroup load_source(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty())
    throw std::invalid_argument("give either --builtin or --file, not both");
  if (builtin.empty() && file.empty())
    throw std::invalid_argument("a group source is required (--builtin or --file)");
  if (!builtin.empty()) return build_from_spec(builtin);
  return parse_group_file(file);
}

std::vector<std::uint64_t> checked_primes(const std::vector<std::uint64_t>& ps) {
  if (ps.empty()) throw std::invalid_argument("at least one --prime is required");
  for (auto p : ps)
    if (!is_prime_u64(p))
      throw std::invalid_argument("prime expected, got " + std::to_string(p));
  return ps;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

unsigned default_workers() {
  if (const char* env = std::getenv("CODEGLAB_WORKERS")) {
    unsigned v = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character degree/codegree classifier for finite permutation groups"};
  app.require_subcommand(1);

  std::string builtin, file, out_path;
  std::vector<std::uint64_t> primes;

  auto add_source = [&](CLI::App* cmd, bool with_primes) {
    cmd->add_option("--builtin", builtin,
                    "builtin group, e.g. symmetric:4 or gamma_family:3,1");
    cmd->add_option("--file", file, "permutation group file (.pgr)");
    if (with_primes)
      cmd->add_option("--prime", primes, "prime to test (repeatable)");
    cmd->add_option("--out", out_path, "also write the output to this path");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "full report for one group: direct verdicts, case labels, cross-check");
  add_source(analyze, true);

  auto* classify = app.add_subcommand(
      "classify", "structural case labels only (no character table)");
  add_source(classify, true);

  auto* chartab =
      app.add_subcommand("chartab", "exact character table in the dump format");
  add_source(chartab, false);

  auto* verify = app.add_subcommand(
      "verify-corpus", "cross-check the shipped corpus against its expected verdicts");
  std::string data_dir = "data", filter, flip_spec;
  unsigned workers = default_workers();
  bool fail_fast = false, timings = false;
  verify->add_option("--data-dir", data_dir, "directory with the .pgr data files");
  verify->add_option("--workers", workers, "worker count (default: CODEGLAB_WORKERS or hardware)");
  verify->add_flag("--fail-fast", fail_fast, "stop after the first failure");
  verify->add_flag("--timings", timings, "record per-pair timings in the reports");
  verify->add_option("--filter", filter, "only run entries whose id contains this substring");
  verify->add_option("--flip", flip_spec,
                     "negative control: flip the expected verdict of one id:p pair");
  verify->add_option("--out", out_path, "write the JSON-lines report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      auto ps = checked_primes(primes);
      PermGroup g = load_source(builtin, file);
      if (!g.order_fits(kEnumerationCap))
        return fail("cap",
                    "group order " + g.order().str() + " exceeds the enumeration cap " +
                        std::to_string(kEnumerationCap),
                    1);
      ClassData cd(std::move(g));
      CharacterTable t = dixon_schneider(cd);
      std::string id = !builtin.empty() ? builtin : file;
      std::string text;
      for (auto p : ps) {
        ClassificationReport r = cross_check(id, cd, t, p);
        text += report_to_json(r).dump();
        text += '\n';
      }
      std::cout << text;
      write_out(out_path, text);
      return 0;
    }

    if (classify->parsed()) {
      auto ps = checked_primes(primes);
      PermGroup g = load_source(builtin, file);
      if (!g.order_fits(kEnumerationCap))
        return fail("cap",
                    "group order " + g.order().str() + " exceeds the enumeration cap " +
                        std::to_string(kEnumerationCap),
                    1);
      ClassData cd(std::move(g));
      std::string id = !builtin.empty() ? builtin : file;
      std::string text;
      for (auto p : ps) {
        StructuralResult st = classify_structure(cd, p);
        ordered_json j;
        j["group"] = id;
        j["p"] = p;
        j["ti"] = has_abelian_ti_sylow(cd, p);
        j["cases_a"] = st.cases_a;
        j["cases_c"] = st.cases_c;
        ordered_json cases = ordered_json::object();
        for (const auto& [label, kv] : st.params) {
          ordered_json c = ordered_json::object();
          for (const auto& [k, v] : kv) c[k] = v;
          cases[label] = c;
        }
        j["witnesses"] = ordered_json{{"cases", cases},
                                      {"p_residual_order", st.n_order}};
        text += j.dump();
        text += '\n';
      }
      std::cout << text;
      write_out(out_path, text);
      return 0;
    }

    if (chartab->parsed()) {
      PermGroup g = load_source(builtin, file);
      if (!g.order_fits(kEnumerationCap))
        return fail("cap",
                    "group order " + g.order().str() + " exceeds the enumeration cap " +
                        std::to_string(kEnumerationCap),
                    1);
      ClassData cd(std::move(g));
      CharacterTable t = dixon_schneider(cd);
      std::string text = dump_table(t);
      std::cout << text;
      write_out(out_path, text);
      return 0;
    }

    if (verify->parsed()) {
      RunOptions opt;
      opt.data_dir = data_dir;
      opt.workers = workers;
      opt.fail_fast = fail_fast;
      opt.timings = timings;
      opt.filter = filter;
      if (!flip_spec.empty()) {
        auto colon = flip_spec.rfind(':');
        if (colon == std::string::npos)
          return fail("usage", "--flip expects id:p", 1);
        opt.flip = {flip_spec.substr(0, colon),
                    std::strtoull(flip_spec.c_str() + colon + 1, nullptr, 10)};
      }
      auto t0 = std::chrono::steady_clock::now();
      CorpusRunResult res = run_corpus(corpus_manifest(), opt);
      double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << res.matrix;
      for (const auto& s : res.skipped) std::cout << "skipped " << s << "\n";
      for (const auto& f2 : res.failures) std::cout << "FAIL " << f2 << "\n";
      std::printf("%zu pairs checked, %zu failures, %zu skipped, %.2fs\n",
                  res.reports.size(), res.failures.size(), res.skipped.size(), secs);
      write_out(out_path, reports_to_json_lines(res.reports));
      if (res.exit_code == 1 && !res.failures.empty())
        return fail("data", res.failures.front(), 1);
      return res.exit_code;
    }
  } catch (const CrossCheckError& ex) {
    std::string msg = ex.what();
    for (auto& ch : msg)
      if (ch == '\n') ch = ' ';
    return fail("invariant", msg, 2);
  } catch (const PgrError& ex) {
    return fail("pgr", ex.what(), 1);
  } catch (const std::invalid_argument& ex) {
    return fail("usage", ex.what(), 1);
  } catch (const std::exception& ex) {
    return fail("data", ex.what(), 1);
  }
  return 0;
}
