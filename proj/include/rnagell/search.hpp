#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rnagell/classifier.hpp"
#include "rnagell/solver.hpp"

namespace rnagell {

/// Sweep domain: D in [d_min, d_max], odd primes p1 < p2 <= prime_bound with
/// neither dividing D, solutions counted up to y_bound. When sample_count is
/// set, that many grid cells are drawn without replacement (mt19937_64 with
/// sample_seed), so identical spec + seed always selects the same instances.
struct SearchSpec {
  mpz_class d_min = 1;
  mpz_class d_max = 1;
  unsigned long prime_bound = 3;
  mpz_class y_bound;
  std::optional<unsigned long> sample_count;
  unsigned long sample_seed = 0;
  bool keep_solutions = false;
};

struct SearchRecord {
  mpz_class D, p1, p2;
  unsigned long total = 0;
  std::map<ClassKey, unsigned long> per_class;
  mpz_class max_y;  // 0 when the instance has no solutions
  std::optional<std::vector<Solution>> solutions;
};

/// Runs the sweep on `workers` threads. Records come back in ascending
/// (D, p1, p2) order and their content does not depend on the worker count.
/// With a checkpoint directory, records stream to <dir>/records.jsonl with a
/// cursor file beside it; an interrupted run resumes from the completed
/// prefix, and an unreadable checkpoint falls back to a fresh start with a
/// warning on stderr.
std::vector<SearchRecord> run(const SearchSpec& spec, unsigned workers,
                              const std::optional<std::string>& checkpoint_dir = std::nullopt);

struct SearchSummary {
  std::map<unsigned long, unsigned long> histogram;  // total -> #instances
  std::vector<SearchRecord> extremal;                // top instances by total
  unsigned long max_count = 0;
};

SearchSummary summarize(const std::vector<SearchRecord>& records, size_t top_n = 20);

struct ClaimCheck {
  bool ok = true;
  std::vector<SearchRecord> violations;
};

/// true iff every record's total is <= cap; violations are listed in full.
ClaimCheck verify_claim(const std::vector<SearchRecord>& records, unsigned long cap = 13);

/// One record as a single JSON line; integer fields switch to decimal strings
/// above 2^53.
std::string record_to_json(const SearchRecord& rec);
SearchRecord record_from_json(const std::string& line);

/// "count,instances" rows, ascending.
std::string summary_csv(const SearchSummary& s);
/// "D,p1,p2,total,maxY" rows, descending by total.
std::string extremal_csv(const SearchSummary& s);

}  // namespace rnagell
