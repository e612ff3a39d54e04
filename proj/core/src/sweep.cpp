#include "bct/sweep.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace bct {

void for_each_composition(int total, const std::function<void(const std::vector<int>&)>& fn) {
  if (total <= 0) return;
  if (total > 62) throw std::invalid_argument("for_each_composition: total too large");
  // Bit i of the mask cuts after position i+1.
  const uint64_t masks = uint64_t{1} << (total - 1);
  std::vector<int> parts;
  for (uint64_t mask = 0; mask < masks; ++mask) {
    parts.clear();
    int run = 1;
    for (int i = 0; i < total - 1; ++i) {
      if (mask & (uint64_t{1} << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    fn(parts);
  }
}

FiniteRelation relation_of_kind(const BctFamily& family, RelationKind kind,
                                const CocharacterSpec& spec) {
  switch (kind) {
    case RelationKind::bruhat: return bruhat_relation(family);
    case RelationKind::secondary: return secondary_relation(family);
    case RelationKind::geometric: return geometric_relation(family, spec);
  }
  throw std::invalid_argument("unknown relation kind");
}

SweepPairResult check_family(const BctFamily& family, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepPairResult result;
  result.r = family.margins.row_sums;
  result.c = family.margins.col_sums;
  result.family_size = family.size();

  CocharacterSpec spec = config.sigma
                             ? CocharacterSpec{*config.sigma}
                             : CocharacterSpec::identity(family.margins.total_cols());

  std::vector<FiniteRelation> relations;
  relations.reserve(config.kinds.size());
  for (RelationKind kind : config.kinds) {
    relations.push_back(relation_of_kind(family, kind, spec));
    result.strict_pair_counts.push_back(relations.back().strict_pair_count());
  }

  for (size_t i = 0; i < relations.size(); ++i)
    for (size_t j = i + 1; j < relations.size(); ++j) {
      const RelationComparison cmp =
          compare_relations(relations[i], relations[j], config.report_limit);
      if (!cmp.equal) {
        result.equal = false;
        result.discrepancies.push_back({config.kinds[i], config.kinds[j],
                                        cmp.only_in_first_count, cmp.only_in_second_count,
                                        cmp.only_in_first, cmp.only_in_second});
      }
    }

  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

VerificationReport run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.config = config;

  // Canonical listing of the feasible margin pairs.
  std::vector<MarginPair> feasible;
  for (int total = 1; total <= config.max_total; ++total) {
    for_each_composition(total, [&](const std::vector<int>& r) {
      for_each_composition(total, [&](const std::vector<int>& c) {
        ++report.margin_pairs_scanned;
        const MarginPair margins{r, c};
        if (gale_ryser_feasible(margins))
          feasible.push_back(margins);
        else
          ++report.infeasible_skipped;
      });
    });
  }

  const int jobs = config.jobs > 0
                       ? config.jobs
                       : std::max(1u, std::thread::hardware_concurrency());
  report.pairs.resize(feasible.size());
  if (jobs <= 1 || feasible.size() <= 1) {
    for (size_t i = 0; i < feasible.size(); ++i)
      report.pairs[i] = check_family(enumerate_bcts(feasible[i]), config);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next.fetch_add(1); i < feasible.size(); i = next.fetch_add(1))
        report.pairs[i] = check_family(enumerate_bcts(feasible[i]), config);
    };
    std::vector<std::future<void>> futures;
    for (int w = 0; w < jobs; ++w) futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
  }

  for (const SweepPairResult& pr : report.pairs)
    if (!pr.equal) report.all_equal = false;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  j["max_total"] = report.config.max_total;
  ordered_json kinds = ordered_json::array();
  for (RelationKind k : report.config.kinds) kinds.push_back(to_string(k));
  j["kinds"] = std::move(kinds);
  if (report.config.sigma) {
    ordered_json sigma = ordered_json::array();
    for (int v : *report.config.sigma) sigma.push_back(v + 1);  // 1-based on the wire
    j["sigma"] = std::move(sigma);
  }
  j["margin_pairs_scanned"] = report.margin_pairs_scanned;
  j["infeasible_skipped"] = report.infeasible_skipped;
  j["all_equal"] = report.all_equal;
  ordered_json pairs = ordered_json::array();
  for (const SweepPairResult& pr : report.pairs) {
    ordered_json pj;
    pj["r"] = pr.r;
    pj["c"] = pr.c;
    pj["family_size"] = pr.family_size;
    pj["strict_pair_counts"] = pr.strict_pair_counts;
    pj["equal"] = pr.equal;
    if (!pr.discrepancies.empty()) {
      ordered_json ds = ordered_json::array();
      for (const PairDiscrepancy& d : pr.discrepancies) {
        ordered_json dj;
        dj["first"] = to_string(d.first);
        dj["second"] = to_string(d.second);
        dj["only_in_first"] = d.only_in_first;
        dj["only_in_second"] = d.only_in_second;
        ordered_json s1 = ordered_json::array();
        for (auto [a, b] : d.samples_first) s1.push_back(ordered_json::array({a, b}));
        dj["samples_first"] = std::move(s1);
        ordered_json s2 = ordered_json::array();
        for (auto [a, b] : d.samples_second) s2.push_back(ordered_json::array({a, b}));
        dj["samples_second"] = std::move(s2);
        ds.push_back(std::move(dj));
      }
      pj["discrepancies"] = std::move(ds);
    }
    if (include_timing) pj["seconds"] = pr.seconds;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  if (include_timing) j["seconds"] = report.seconds;
  return j.dump(2) + "\n";
}

}  // namespace bct
