#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oeg/catalog/catalog.hpp"
#include "oeg/catalog/rejections.hpp"
#include "oeg/catalog/theorems.hpp"
#include "oeg/dunbar/solver.hpp"
#include "oeg/fpgroup/coset_enumeration.hpp"
#include "oeg/permgroup/lemma62.hpp"

namespace oeg::verify {

enum class Status { pass, fail, cited };

struct CheckLine {
  std::string group;  // orders, indices, rejections, dunbar, theorems, lemma62, rh, arithmetic, coverage
  std::string id;
  Status status = Status::pass;
  std::string detail;  // space-separated key=value pairs
  double time_ms = 0;

  bool failed() const { return status == Status::fail; }
};

struct Report {
  std::vector<CheckLine> lines;

  bool pass() const;
  std::size_t failures() const;
  void append(const Report& other);
  /// One line per check plus a final RESULT line. Without timings the
  /// text is byte-stable across runs.
  std::string render(bool timings = true) const;
};

struct Options {
  std::string data_dir;
  long long g_max = 2000;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
  fp::EnumerationLimits limits = fp::EnumerationLimits::from_environment();
  dunbar::Bounds bounds;
  std::vector<perm::SmallGroup> lemma_groups = {perm::SmallGroup::A4, perm::SmallGroup::S4,
                                                perm::SmallGroup::A5};
  bool lemma_dedupe = false;
};

/// Fixtures under a data directory.
struct Inputs {
  cat::Catalog catalog;
  std::vector<cat::RejectionFixture> rejections;
  cat::MainTable main_table;
};

Inputs load_inputs(const std::string& data_dir);

Report verify_orders(const cat::Catalog& c, const Options& opt);
Report verify_indices(const cat::Catalog& c, const Options& opt);
Report verify_edge_kill_rejections(const std::vector<cat::RejectionFixture>& fixtures, const cat::Catalog& c,
                                   const Options& opt);
Report verify_dunbar(const Options& opt);
Report verify_theorems(const cat::Catalog& c, const cat::MainTable& fixture, long long g_max);
Report verify_riemann_hurwitz(const cat::Catalog& c);
Report verify_lemma(const Options& opt);
Report verify_arithmetic(const cat::Catalog& c);
/// Every feature must be reached by the index check or the Riemann-Hurwitz
/// check, and every rejection must name a catalog entry.
Report verify_coverage(const cat::Catalog& c, const std::vector<cat::RejectionFixture>& fixtures);

/// Everything above, with independent jobs spread over a worker pool.
Report run_all(const Options& opt);

/// Runs jobs on `workers` threads; results keep the job order.
std::vector<Report> run_jobs(const std::vector<std::function<Report()>>& jobs, unsigned workers);

}  // namespace oeg::verify
