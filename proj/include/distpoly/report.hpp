#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "distpoly/bigint.hpp"
#include "distpoly/graph.hpp"
#include "distpoly/seq_analysis.hpp"
#include "distpoly/tree_enum.hpp"

namespace distpoly {

/// Per-graph check outcomes. nullopt means the check does not apply
/// (tree-only statements on a non-tree input).
struct TreeChecks {
  std::optional<bool> sign_pattern;           // (-1)^(n-1) delta_k > 0, k <= n-2
  std::optional<bool> divisibility;           // 2^(n-k-2) | delta_k
  std::optional<bool> d0_formula;             // d_0 = n-1
  std::optional<bool> d1_formula;             // d_1 = 2n(n-1) - 2 N_P3 - 4
  std::optional<bool> trace_identities;       // d_{n-2} = tr D^2 / 2, d_{n-3} = tr D^3 / 6
  std::optional<bool> log_concave_d;
  std::optional<bool> log_concave_abs_delta;
  std::optional<bool> scaling_consistency;    // both log-concavity verdicts agree
  std::optional<bool> unimodal_d;
  std::optional<bool> unimodal_abs_delta;
  std::optional<bool> newton;                 // full coefficient vector of det(xI - D)
  std::optional<bool> ratio_bound;            // 3 d_{n-3} < n diam d_{n-2}
  std::optional<bool> thm_bounds;             // thm_lo <= first, last <= thm_hi <= ceil(2n/3)
  std::optional<bool> conjecture_range;       // conj_lo <= first, last <= conj_hi

  friend bool operator==(const TreeChecks&, const TreeChecks&) = default;
};

struct TreeReport {
  std::size_t n = 0;
  std::optional<std::uint64_t> id;  // enumeration index within its order
  bool is_tree = false;
  std::int64_t diameter = 0;
  std::uint64_t n_p3 = 0;
  std::vector<BigInt> charpoly;  // c_0..c_n of det(xI - D)
  std::vector<BigInt> delta;     // delta_0..delta_n
  std::vector<Dyadic> d;         // d_0..d_{n-2}
  PeakInterval peak;
  std::optional<BoundSet> bounds;  // trees only
  std::optional<std::size_t> unimodal_witness;
  std::optional<std::size_t> log_concave_witness;
  TreeChecks checks;

  /// A false check on a tree. Non-tree failures are findings, not violations.
  bool violation() const;
  std::vector<std::string> failed_checks() const;

  friend bool operator==(const TreeReport&, const TreeReport&) = default;
};

/// Full pipeline on a connected graph of order >= 3. Throws
/// DisconnectedError or DomainError otherwise.
TreeReport analyze_graph(const Graph& g, std::optional<std::uint64_t> id = std::nullopt);
TreeReport analyze_tree(const CanonicalTree& t, std::optional<std::uint64_t> id = std::nullopt);

struct SlackRange {
  std::int64_t min = 0;
  std::int64_t max = 0;
  friend bool operator==(const SlackRange&, const SlackRange&) = default;
};

/// Per-order summary of a sweep. Slack is measured inward from each bound:
/// first - thm_lo, thm_hi - last, first - conj_lo, conj_hi - last.
struct OrderSummary {
  std::size_t order = 0;
  std::uint64_t trees = 0;
  std::uint64_t expected_trees = 0;
  std::map<std::size_t, std::uint64_t> peak_histogram;  // first argmax index -> trees
  std::uint64_t plateaus = 0;
  std::uint64_t violations = 0;
  std::optional<SlackRange> slack_thm_lo;
  std::optional<SlackRange> slack_thm_hi;
  std::optional<SlackRange> slack_conj_lo;
  std::optional<SlackRange> slack_conj_hi;

  void add(const TreeReport& r);
  friend bool operator==(const OrderSummary&, const OrderSummary&) = default;
};

struct AggregateReport {
  std::size_t min_order = 0;
  std::size_t max_order = 0;
  std::vector<OrderSummary> orders;
  std::uint64_t total_trees = 0;
  std::uint64_t total_violations = 0;
  std::uint64_t plateau_anomalies = 0;
  std::uint64_t count_mismatches = 0;  // orders where trees != expected_trees
  std::vector<TreeReport> violating;   // offending trees, capped
  bool complete = true;
  std::optional<std::string> error;
  std::optional<double> duration_seconds;

  bool passed() const { return complete && total_violations == 0 && count_mismatches == 0; }
  friend bool operator==(const AggregateReport&, const AggregateReport&) = default;
};

void to_json(nlohmann::json& j, const TreeReport& r);
void from_json(const nlohmann::json& j, TreeReport& r);
void to_json(nlohmann::json& j, const OrderSummary& s);
void from_json(const nlohmann::json& j, OrderSummary& s);
void to_json(nlohmann::json& j, const AggregateReport& r);
void from_json(const nlohmann::json& j, AggregateReport& r);

}  // namespace distpoly
