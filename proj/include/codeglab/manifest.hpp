#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "codeglab/classify.hpp"
#include "codeglab/corpus.hpp"
#include "codeglab/pgr.hpp"

namespace codeglab {

// One expected verdict per tested prime.  `basis` records how the
// expectation was obtained: "reference" for published character data,
// "derived" for values recomputed from first principles by this suite's
// oracles, "trivial" for immediate consequences of definitions.
struct ExpectedPrime {
  std::uint64_t p;
  bool hp;
  std::vector<std::string> cases_a;
  std::optional<bool> hp_star;
  std::string basis;
};

struct CorpusEntry {
  std::string id;
  std::string source;  // "builtin:<spec>" or "file:<name>"
  bool optional_data = false;
  std::vector<ExpectedPrime> primes;
};

inline std::vector<CorpusEntry> corpus_manifest() {
  auto P = [](std::uint64_t p, bool hp, std::vector<std::string> cases,
              std::string basis,
              std::optional<bool> hp_star = std::nullopt) -> ExpectedPrime {
    return ExpectedPrime{p, hp, std::move(cases), hp_star, std::move(basis)};
  };
  std::vector<CorpusEntry> m;
  m.push_back({"A5", "builtin:alternating:5", false,
               {P(5, true, {"5a"}, "derived"), P(2, true, {"5b"}, "derived")}});
  m.push_back({"A6", "builtin:alternating:6", false,
               {P(3, true, {"5b"}, "derived")}});
  m.push_back({"A7", "builtin:alternating:7", false,
               {P(3, false, {}, "derived")}});
  m.push_back({"ASL2_3", "builtin:asl2:3", false,
               {P(3, true, {"3"}, "reference")}});
  m.push_back({"ASL2_4", "builtin:asl2:4", false,
               {P(2, true, {"7a"}, "derived")}});
  m.push_back({"ASL2_5", "builtin:asl2:5", false,
               {P(5, true, {"7a"}, "derived")}});
  m.push_back({"C1", "builtin:cyclic:1", false,
               {P(2, true, {"1"}, "trivial")}});
  m.push_back({"C3wrC3", "builtin:wreath_cyclic:3,3", false,
               {P(3, false, {}, "derived")}});
  m.push_back({"C6", "builtin:cyclic:6", false,
               {P(3, true, {"1"}, "trivial")}});
  m.push_back({"D8", "builtin:dihedral:8", false,
               {P(2, false, {}, "derived")}});
  m.push_back({"GL2_3", "builtin:gl2_3", false,
               {P(3, true, {"2"}, "derived")}});
  m.push_back({"Gamma_2_2", "builtin:gamma_family:2,2", false,
               {P(2, true, {"4"}, "derived")}});
  m.push_back({"Gamma_3_1", "builtin:gamma_family:3,1", false,
               {P(3, true, {"4"}, "derived")}});
  m.push_back({"M11", "builtin:mathieu11", false,
               {P(3, true, {"5c"}, "reference", true),
                P(11, true, {"5a"}, "derived")}});
  m.push_back({"PSL2_7", "builtin:psl2:7", false,
               {P(7, true, {"5a"}, "derived")}});
  m.push_back({"PSL2_8", "builtin:psl2:8", false,
               {P(2, true, {"5b"}, "derived")}});
  m.push_back({"PSL3_4", "builtin:psl3_4", false,
               {P(3, true, {"5c"}, "reference")}});
  m.push_back({"PSigmaL2_32", "file:psigmal2_32.pgr", false,
               {P(5, true, {"2"}, "derived")}});
  m.push_back({"Q8", "builtin:quaternion8", false,
               {P(2, false, {}, "derived")}});
  m.push_back({"S3", "builtin:symmetric:3", false,
               {P(3, true, {"1"}, "trivial"), P(2, true, {"2"}, "derived")}});
  m.push_back({"S4", "builtin:symmetric:4", false,
               {P(3, true, {"2"}, "derived"),
                P(2, true, {"4"}, "derived", false)}});
  m.push_back({"S5", "builtin:symmetric:5", false,
               {P(2, false, {}, "derived")}});
  m.push_back({"S6", "builtin:symmetric:6", false,
               {P(3, true, {"5b"}, "derived")}});
  m.push_back({"SL2_3", "builtin:sl2:3", false,
               {P(3, true, {"2"}, "derived")}});
  m.push_back({"SL2_5", "builtin:sl2:5", false,
               {P(5, true, {"6a"}, "derived")}});
  m.push_back({"SL2_5_F81", "file:sl2_5_f3_4.pgr", true,
               {P(3, true, {"7c"}, "reference")}});
  m.push_back({"SL2_9", "builtin:sl2:9", false,
               {P(3, true, {"6b"}, "derived"), P(2, false, {}, "derived")}});
  return m;
}

inline PermGroup load_corpus_group(const CorpusEntry& e, const std::string& data_dir) {
  if (e.source.rfind("builtin:", 0) == 0)
    return build_from_spec(e.source.substr(8));
  if (e.source.rfind("file:", 0) == 0) {
    std::string path = data_dir + "/" + e.source.substr(5);
    ParsedGroup pg = parse_group_file_full(path);
    if (pg.has_simple_assert) {
      if (!pg.group.order_fits(kEnumerationCap))
        throw std::runtime_error("cannot verify simplicity beyond the cap");
      ClassData cd(pg.group);
      if (is_simple(cd) != pg.simple_value)
        throw PgrError(PgrError::Kind::failed_assertion, 0,
                       "simple assertion failed");
    }
    return pg.group;
  }
  throw std::invalid_argument("unknown corpus source: " + e.source);
}

// deeper constructor validation than the order formulas checked at build
// time: simplicity and element-order spectra where those are the advertised
// guarantees
inline void validate_corpus_group(const CorpusEntry& e, const ClassData& cd) {
  auto spectrum_has = [&](std::uint64_t o) {
    for (std::size_t c = 0; c < cd.num_classes(); ++c)
      if (cd.rep_order(c) == o) return true;
    return false;
  };
  if (e.id == "M11") {
    if (!looks_like_m11(cd)) throw std::logic_error("M11 validation failed");
  } else if (e.id == "PSL3_4") {
    if (!looks_like_psl3_4(cd) || spectrum_has(15))
      throw std::logic_error("PSL3_4 validation failed");
  } else if (e.source.rfind("builtin:psl2:", 0) == 0) {
    std::uint64_t q = std::stoull(e.source.substr(13));
    if (!looks_like_psl2(cd, q)) throw std::logic_error(e.id + " validation failed");
  }
}

// ---------------------------------------------------------------------------
// Corpus runner: one task per (entry, prime); per-entry context shared and
// built once under a lock; reports sorted by (group, p).
// ---------------------------------------------------------------------------

struct RunOptions {
  std::string data_dir = "data";
  unsigned workers = 1;
  bool fail_fast = false;
  bool run_hereditary = true;
  bool timings = false;
  // negative-control hook: flip the expected verdict of one (group, p)
  std::optional<std::pair<std::string, std::uint64_t>> flip;
  std::string filter;  // substring filter on entry ids
};

struct CorpusRunResult {
  std::vector<ClassificationReport> reports;
  std::vector<std::string> failures;  // expectation or invariant problems
  std::vector<std::string> skipped;   // data-gated entries without data
  int exit_code = 0;
  std::string matrix;  // human-readable pass/fail matrix
};

namespace manifestdetail {

struct EntryContext {
  std::mutex mu;
  bool attempted = false;
  std::string error;
  std::shared_ptr<ClassData> cd;
  std::shared_ptr<CharacterTable> table;
};

}  // namespace manifestdetail

inline CorpusRunResult run_corpus(const std::vector<CorpusEntry>& entries,
                                  const RunOptions& opt) {
  CorpusRunResult res;
  std::vector<const CorpusEntry*> selected;
  for (const auto& e : entries)
    if (opt.filter.empty() || e.id.find(opt.filter) != std::string::npos)
      selected.push_back(&e);
  if (selected.empty()) {
    res.exit_code = 1;
    res.failures.push_back("empty corpus");
    return res;
  }

  struct Task {
    const CorpusEntry* entry;
    const ExpectedPrime* prime;
    std::size_t ctx;
  };
  std::vector<Task> tasks;
  std::vector<std::unique_ptr<manifestdetail::EntryContext>> contexts;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    contexts.push_back(std::make_unique<manifestdetail::EntryContext>());
    for (const auto& pr : selected[i]->primes)
      tasks.push_back({selected[i], &pr, i});
  }

  std::mutex out_mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto ensure_context = [&](const Task& t) -> manifestdetail::EntryContext& {
    auto& ctx = *contexts[t.ctx];
    std::lock_guard<std::mutex> lk(ctx.mu);
    if (!ctx.attempted) {
      ctx.attempted = true;
      try {
        PermGroup g = load_corpus_group(*t.entry, opt.data_dir);
        ctx.cd = std::make_shared<ClassData>(std::move(g));
        validate_corpus_group(*t.entry, *ctx.cd);
        ctx.table = std::make_shared<CharacterTable>(dixon_schneider(*ctx.cd));
      } catch (const std::exception& ex) {
        ctx.cd.reset();
        ctx.table.reset();
        ctx.error = ex.what();
      }
    }
    return ctx;
  };

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || stop.load()) return;
      const Task& t = tasks[i];
      auto& ctx = ensure_context(t);
      std::lock_guard<std::mutex> lk(out_mu);
      if (!ctx.cd) {
        if (t.entry->optional_data) {
          res.skipped.push_back(t.entry->id + " p=" + std::to_string(t.prime->p) +
                                " (data not available: " + ctx.error + ")");
        } else {
          res.failures.push_back(t.entry->id + ": " + ctx.error);
          res.exit_code = std::max(res.exit_code, 1);
          if (opt.fail_fast) stop.store(true);
        }
        continue;
      }
      try {
        auto t0 = std::chrono::steady_clock::now();
        ClassificationReport r =
            cross_check(t.entry->id, *ctx.cd, *ctx.table, t.prime->p);
        if (opt.run_hereditary && r.direct_hp) {
          auto h = hereditary_checks(*ctx.cd, t.prime->p);
          if (!h.ok) {
            for (const auto& pb : h.problems)
              res.failures.push_back(t.entry->id + " p=" +
                                     std::to_string(t.prime->p) +
                                     " hereditary: " + pb);
            res.exit_code = 2;
          }
        }
        bool expected_hp = t.prime->hp;
        if (opt.flip && opt.flip->first == t.entry->id &&
            opt.flip->second == t.prime->p)
          expected_hp = !expected_hp;
        if (r.direct_hp != expected_hp) {
          res.failures.push_back(t.entry->id + " p=" + std::to_string(t.prime->p) +
                                 ": verdict " + (r.direct_hp ? "true" : "false") +
                                 ", expected " + (expected_hp ? "true" : "false"));
          res.exit_code = 2;
        }
        if (r.cases_a != t.prime->cases_a) {
          std::ostringstream os;
          os << t.entry->id << " p=" << t.prime->p << ": cases {";
          for (const auto& c : r.cases_a) os << c << ',';
          os << "} expected {";
          for (const auto& c : t.prime->cases_a) os << c << ',';
          os << "}";
          res.failures.push_back(os.str());
          res.exit_code = 2;
        }
        if (t.prime->hp_star && r.direct_hp_star != *t.prime->hp_star) {
          res.failures.push_back(t.entry->id + " p=" + std::to_string(t.prime->p) +
                                 ": star verdict unexpected");
          res.exit_code = 2;
        }
        if (opt.timings)
          r.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        res.reports.push_back(std::move(r));
        if (opt.fail_fast && res.exit_code != 0) stop.store(true);
      } catch (const CrossCheckError& ex) {
        res.failures.push_back(std::string("cross-check: ") + ex.what());
        res.exit_code = 2;
        if (opt.fail_fast) stop.store(true);
      } catch (const std::exception& ex) {
        res.failures.push_back(t.entry->id + ": " + ex.what());
        res.exit_code = std::max(res.exit_code, 1);
        if (opt.fail_fast) stop.store(true);
      }
    }
  };

  unsigned nw = std::max(1u, opt.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w + 1 < nw; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(res.reports.begin(), res.reports.end(),
            [](const ClassificationReport& a, const ClassificationReport& b) {
              return std::tie(a.group_id, a.p) < std::tie(b.group_id, b.p);
            });

  std::ostringstream matrix;
  for (const auto& r : res.reports) {
    matrix << (r.direct_hp ? "in-class " : "excluded ") << r.group_id << " p=" << r.p
           << " cases_a={";
    for (const auto& c : r.cases_a) matrix << c << ',';
    matrix << "} star=" << (r.direct_hp_star ? "yes" : "no") << "\n";
  }
  res.matrix = matrix.str();
  return res;
}

}  // namespace codeglab
