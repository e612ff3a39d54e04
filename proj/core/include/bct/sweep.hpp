#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bct/curves.hpp"
#include "bct/orders.hpp"

namespace bct {

struct SweepConfig {
  int max_total = 5;
  std::vector<RelationKind> kinds{RelationKind::secondary, RelationKind::geometric};
  std::optional<std::vector<int>> sigma;  // 0-based permutation; identity if absent
  int report_limit = 32;
  int jobs = 0;  // 0 = hardware concurrency
};

struct PairDiscrepancy {
  RelationKind first = RelationKind::bruhat;
  RelationKind second = RelationKind::secondary;
  int64_t only_in_first = 0;
  int64_t only_in_second = 0;
  std::vector<std::pair<int, int>> samples_first;   // truncated (upper, lower) pairs
  std::vector<std::pair<int, int>> samples_second;
};

struct SweepPairResult {
  std::vector<int> r;
  std::vector<int> c;
  int family_size = 0;
  std::vector<int64_t> strict_pair_counts;  // aligned with config.kinds
  bool equal = true;
  std::vector<PairDiscrepancy> discrepancies;
  double seconds = 0.0;
};

struct VerificationReport {
  SweepConfig config;
  std::vector<SweepPairResult> pairs;  // feasible margin pairs, canonical order
  int64_t margin_pairs_scanned = 0;
  int64_t infeasible_skipped = 0;
  bool all_equal = true;
  double seconds = 0.0;
};

// Ordered compositions of `total` into positive parts, ascending cut-mask
// order: (t), then the two-part splits, ..., ending at 1^t.
void for_each_composition(int total, const std::function<void(const std::vector<int>&)>& fn);

// Builds the requested relation over the family.
FiniteRelation relation_of_kind(const BctFamily& family, RelationKind kind,
                                const CocharacterSpec& spec);

// Runs all margin pairs (r, c) with positive entries and equal totals up to
// config.max_total, builds the requested relations and compares each pair of
// kinds. Deterministic output regardless of the number of jobs.
VerificationReport run_sweep(const SweepConfig& config);

// Single-family check used by `verify --pair`.
SweepPairResult check_family(const BctFamily& family, const SweepConfig& config);

// Timing is omitted by default so identical invocations stay byte-identical;
// the CLI reports elapsed time on standard error instead.
std::string report_to_json(const VerificationReport& report, bool include_timing = false);

}  // namespace bct
