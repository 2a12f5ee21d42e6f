#pragma once

#include <cstddef>
#include <functional>

#include "distpoly/report.hpp"

namespace distpoly {

struct SweepOptions {
  std::size_t min_order = 3;
  std::size_t max_order = 14;
  std::size_t jobs = 1;
  std::size_t batch_size = 256;
  std::size_t max_recorded_violations = 100;
  bool record_duration = false;
  /// Called for every tree in enumeration order, on the calling thread.
  std::function<void(const TreeReport&)> on_report;
};

/// Analyzes every free tree of every order in [min_order, max_order].
/// Batches are analyzed by a pool of `jobs` workers and merged in
/// enumeration order, so the aggregate does not depend on `jobs`.
/// Throws DomainError for an invalid range or jobs == 0.
AggregateReport verify_range(const SweepOptions& options);

}  // namespace distpoly
