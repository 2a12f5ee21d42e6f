#include "distpoly/report.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <utility>

#include "distpoly/charpoly.hpp"
#include "distpoly/distance.hpp"
#include "distpoly/errors.hpp"

namespace distpoly {
namespace {

using nlohmann::json;

struct NamedCheck {
  std::string_view name;
  std::optional<bool> TreeChecks::*member;
};

constexpr std::array<NamedCheck, 14> kChecks{{
    {"sign_pattern", &TreeChecks::sign_pattern},
    {"divisibility", &TreeChecks::divisibility},
    {"d0_formula", &TreeChecks::d0_formula},
    {"d1_formula", &TreeChecks::d1_formula},
    {"trace_identities", &TreeChecks::trace_identities},
    {"log_concave_d", &TreeChecks::log_concave_d},
    {"log_concave_abs_delta", &TreeChecks::log_concave_abs_delta},
    {"scaling_consistency", &TreeChecks::scaling_consistency},
    {"unimodal_d", &TreeChecks::unimodal_d},
    {"unimodal_abs_delta", &TreeChecks::unimodal_abs_delta},
    {"newton", &TreeChecks::newton},
    {"ratio_bound", &TreeChecks::ratio_bound},
    {"thm_bounds", &TreeChecks::thm_bounds},
    {"conjecture_range", &TreeChecks::conjecture_range},
}};

void widen(std::optional<SlackRange>& range, std::int64_t value) {
  if (!range) {
    range = SlackRange{value, value};
  } else {
    range->min = std::min(range->min, value);
    range->max = std::max(range->max, value);
  }
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json bigints_to_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<BigInt> bigints_from_json(const json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(parse_bigint(v.get<std::string>()));
  return out;
}

json slack_to_json(const std::optional<SlackRange>& s) {
  if (!s) return nullptr;
  return json{{"min", s->min}, {"max", s->max}};
}

std::optional<SlackRange> slack_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return SlackRange{j.at("min").get<std::int64_t>(), j.at("max").get<std::int64_t>()};
}

}  // namespace

bool TreeReport::violation() const { return is_tree && !failed_checks().empty(); }

std::vector<std::string> TreeReport::failed_checks() const {
  std::vector<std::string> failed;
  for (const auto& c : kChecks) {
    const auto& value = checks.*(c.member);
    if (value.has_value() && !*value) failed.emplace_back(c.name);
  }
  return failed;
}

TreeReport analyze_graph(const Graph& g, std::optional<std::uint64_t> id) {
  const std::size_t n = g.order();
  if (n < 3) throw DomainError("analysis needs order >= 3, got " + std::to_string(n));
  const DistanceMatrix dm = distance_matrix(g);

  TreeReport r;
  r.n = n;
  r.id = id;
  r.is_tree = g.edge_count() + 1 == n;
  r.diameter = diameter(dm);
  r.n_p3 = count_p3(g);

  CharPoly poly = charpoly(dm);
  DeltaSeq delta = delta_seq(poly);
  NormalizedSeq d = normalized_seq(delta);

  std::vector<BigInt> abs_delta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) abs_delta[k] = abs(delta.values[k]);

  TreeChecks& ch = r.checks;

  const BigInt tr2 = trace_power(dm, 2);
  const BigInt tr3 = trace_power(dm, 3);
  ch.trace_identities = Dyadic(2) * d.values[n - 2] == Dyadic(tr2) &&
                        Dyadic(6) * d.values[n - 3] == Dyadic(tr3);

  const SeqCheck lc_d = is_log_concave(d.values);
  const SeqCheck lc_abs = is_log_concave(abs_delta);
  const SeqCheck um_d = is_unimodal(d.values);
  ch.log_concave_d = lc_d.holds;
  ch.log_concave_abs_delta = lc_abs.holds;
  ch.scaling_consistency = lc_d.holds == lc_abs.holds;
  ch.unimodal_d = um_d.holds;
  ch.unimodal_abs_delta = is_unimodal(abs_delta).holds;
  ch.newton = newton_check(poly.coeffs).holds;
  r.unimodal_witness = um_d.witness;
  r.log_concave_witness = lc_d.witness;

  r.peak = peak_interval(d.values);

  if (r.is_tree) {
    const auto ni = static_cast<std::int64_t>(n);
    const bool flip = (n - 1) % 2 == 1;
    bool sign_ok = true;
    bool divisible = true;
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      const int s = sgn(delta.values[k]);
      sign_ok = sign_ok && (flip ? s < 0 : s > 0);
      divisible = divisible && mpz_divisible_2exp_p(delta.values[k].get_mpz_t(), n - k - 2) != 0;
    }
    ch.sign_pattern = sign_ok;
    ch.divisibility = divisible;
    ch.d0_formula = d.values[0] == Dyadic(ni - 1);
    const std::int64_t d1 = 2 * ni * (ni - 1) - 2 * static_cast<std::int64_t>(r.n_p3) - 4;
    ch.d1_formula = d.values[1] == Dyadic(d1);
    ch.ratio_bound = ratio_bound_check(d, ni, r.diameter).holds;

    const BoundSet b = bound_set(ni, r.n_p3, r.diameter);
    r.bounds = b;
    const auto first = static_cast<std::int64_t>(r.peak.first);
    const auto last = static_cast<std::int64_t>(r.peak.last);
    const std::int64_t two_thirds = (2 * ni + 2) / 3;
    ch.thm_bounds = b.thm_lo <= first && last <= b.thm_hi && b.thm_hi <= two_thirds;
    ch.conjecture_range = b.conj_lo <= first && last <= b.conj_hi;
  }

  r.charpoly = std::move(poly.coeffs);
  r.delta = std::move(delta.values);
  r.d = std::move(d.values);
  return r;
}

TreeReport analyze_tree(const CanonicalTree& t, std::optional<std::uint64_t> id) {
  return analyze_graph(to_graph(t), id);
}

void OrderSummary::add(const TreeReport& r) {
  ++trees;
  ++peak_histogram[r.peak.first];
  if (r.peak.plateau()) ++plateaus;
  if (r.violation()) ++violations;
  if (r.bounds) {
    const auto first = static_cast<std::int64_t>(r.peak.first);
    const auto last = static_cast<std::int64_t>(r.peak.last);
    widen(slack_thm_lo, first - r.bounds->thm_lo);
    widen(slack_thm_hi, r.bounds->thm_hi - last);
    widen(slack_conj_lo, first - r.bounds->conj_lo);
    widen(slack_conj_hi, r.bounds->conj_hi - last);
  }
}

void to_json(json& j, const TreeReport& r) {
  json checks = json::object();
  for (const auto& c : kChecks) checks[std::string(c.name)] = optional_to_json(r.checks.*(c.member));
  json d = json::array();
  for (const Dyadic& x : r.d) d.push_back(x.str());
  json bounds = nullptr;
  if (r.bounds) {
    bounds = json{{"conj_lo", r.bounds->conj_lo},
                  {"conj_hi", r.bounds->conj_hi},
                  {"thm_lo", r.bounds->thm_lo},
                  {"thm_hi", r.bounds->thm_hi}};
  }
  j = json{
      {"n", r.n},
      {"id", optional_to_json(r.id)},
      {"is_tree", r.is_tree},
      {"diameter", r.diameter},
      {"n_p3", r.n_p3},
      {"charpoly", bigints_to_json(r.charpoly)},
      {"delta", bigints_to_json(r.delta)},
      {"d", d},
      {"peak", {{"first", r.peak.first}, {"last", r.peak.last}, {"plateau", r.peak.plateau()}}},
      {"bounds", bounds},
      {"witnesses",
       {{"unimodal", optional_to_json(r.unimodal_witness)},
        {"log_concave", optional_to_json(r.log_concave_witness)}}},
      {"checks", checks},
      {"violation", r.violation()},
      {"failed_checks", r.failed_checks()},
  };
}

void from_json(const json& j, TreeReport& r) {
  r = TreeReport{};
  r.n = j.at("n").get<std::size_t>();
  r.id = optional_from_json<std::uint64_t>(j.at("id"));
  r.is_tree = j.at("is_tree").get<bool>();
  r.diameter = j.at("diameter").get<std::int64_t>();
  r.n_p3 = j.at("n_p3").get<std::uint64_t>();
  r.charpoly = bigints_from_json(j.at("charpoly"));
  r.delta = bigints_from_json(j.at("delta"));
  for (const auto& x : j.at("d")) r.d.push_back(Dyadic::parse(x.get<std::string>()));
  r.peak = {j.at("peak").at("first").get<std::size_t>(), j.at("peak").at("last").get<std::size_t>()};
  if (const auto& b = j.at("bounds"); !b.is_null()) {
    r.bounds = BoundSet{b.at("conj_lo").get<std::int64_t>(), b.at("conj_hi").get<std::int64_t>(),
                        b.at("thm_lo").get<std::int64_t>(), b.at("thm_hi").get<std::int64_t>()};
  }
  r.unimodal_witness = optional_from_json<std::size_t>(j.at("witnesses").at("unimodal"));
  r.log_concave_witness = optional_from_json<std::size_t>(j.at("witnesses").at("log_concave"));
  const auto& checks = j.at("checks");
  for (const auto& c : kChecks) r.checks.*(c.member) = optional_from_json<bool>(checks.at(std::string(c.name)));
}

void to_json(json& j, const OrderSummary& s) {
  json histogram = json::array();
  for (const auto& [peak, count] : s.peak_histogram) histogram.push_back({{"peak", peak}, {"trees", count}});
  j = json{
      {"order", s.order},
      {"trees", s.trees},
      {"expected_trees", s.expected_trees},
      {"plateaus", s.plateaus},
      {"violations", s.violations},
      {"peak_histogram", histogram},
      {"slack",
       {{"thm_lo", slack_to_json(s.slack_thm_lo)},
        {"thm_hi", slack_to_json(s.slack_thm_hi)},
        {"conj_lo", slack_to_json(s.slack_conj_lo)},
        {"conj_hi", slack_to_json(s.slack_conj_hi)}}},
  };
}

void from_json(const json& j, OrderSummary& s) {
  s = OrderSummary{};
  s.order = j.at("order").get<std::size_t>();
  s.trees = j.at("trees").get<std::uint64_t>();
  s.expected_trees = j.at("expected_trees").get<std::uint64_t>();
  s.plateaus = j.at("plateaus").get<std::uint64_t>();
  s.violations = j.at("violations").get<std::uint64_t>();
  for (const auto& bin : j.at("peak_histogram")) {
    s.peak_histogram[bin.at("peak").get<std::size_t>()] = bin.at("trees").get<std::uint64_t>();
  }
  const auto& slack = j.at("slack");
  s.slack_thm_lo = slack_from_json(slack.at("thm_lo"));
  s.slack_thm_hi = slack_from_json(slack.at("thm_hi"));
  s.slack_conj_lo = slack_from_json(slack.at("conj_lo"));
  s.slack_conj_hi = slack_from_json(slack.at("conj_hi"));
}

void to_json(json& j, const AggregateReport& r) {
  j = json{
      {"min_order", r.min_order},
      {"max_order", r.max_order},
      {"passed", r.passed()},
      {"complete", r.complete},
      {"error", optional_to_json(r.error)},
      {"total_trees", r.total_trees},
      {"total_violations", r.total_violations},
      {"plateau_anomalies", r.plateau_anomalies},
      {"count_mismatches", r.count_mismatches},
      {"orders", r.orders},
      {"violating", r.violating},
  };
  if (r.duration_seconds) j["duration_seconds"] = *r.duration_seconds;
}

void from_json(const json& j, AggregateReport& r) {
  r = AggregateReport{};
  r.min_order = j.at("min_order").get<std::size_t>();
  r.max_order = j.at("max_order").get<std::size_t>();
  r.complete = j.at("complete").get<bool>();
  r.error = optional_from_json<std::string>(j.at("error"));
  r.total_trees = j.at("total_trees").get<std::uint64_t>();
  r.total_violations = j.at("total_violations").get<std::uint64_t>();
  r.plateau_anomalies = j.at("plateau_anomalies").get<std::uint64_t>();
  r.count_mismatches = j.at("count_mismatches").get<std::uint64_t>();
  r.orders = j.at("orders").get<std::vector<OrderSummary>>();
  r.violating = j.at("violating").get<std::vector<TreeReport>>();
  if (j.contains("duration_seconds")) r.duration_seconds = j.at("duration_seconds").get<double>();
}

}  // namespace distpoly
