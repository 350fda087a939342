// Copyright 2026 the femtoho authors. Licensed under the Apache License,
// Version 2.0. See the COPYING file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace femtoho {

// Femtocell channel pool with guard channels. The cell owns N identical
// channels; the top N-K are reserved for macrocell-to-femtocell handover
// calls. New calls originating inside the femtocell are admitted only while
// occupancy < K, handover calls while occupancy < N. Both classes arrive
// Poisson and hold a channel for an exponential time with rate mu, so the
// occupancy process is a birth-death chain on {0..N}.
struct GuardChannelParams {
  int num_channels = 0;        // N >= 1
  int guard_threshold = 0;     // K in [0, N]; K == N means no reservation
  double new_call_rate = 0.0;  // calls/s originating at the femtocell
  double handover_rate = 0.0;  // macro-to-femto handover calls/s
  double service_rate = 0.0;   // 1 / mean holding time, 1/s

  GuardChannelParams with_guard_threshold(int k) const {
    GuardChannelParams p = *this;
    p.guard_threshold = k;
    return p;
  }

  // Throws std::invalid_argument when any field is out of range.
  void validate() const;

  bool operator==(const GuardChannelParams&) const = default;
};

// Occupancy probabilities p_0..p_N, normalized to 1.
using StationaryDistribution = std::vector<double>;

struct BlockingReport {
  double new_call_blocking = 0.0;  // P(occupancy >= K)
  double handover_blocking = 0.0;  // P(occupancy == N)
  double utilization = 0.0;        // mean busy channels / N
  double carried_load = 0.0;       // mean busy channels, erlang
};

// Aggregate admitted arrival rate with `occupancy` channels busy. Throws
// std::domain_error outside [0, N].
double arrival_rate(const GuardChannelParams& params, int occupancy);

// Product-form solution of the occupancy chain. Weights are accumulated in
// the log domain so the result stays finite for N up to at least 10^4.
StationaryDistribution stationary_distribution(const GuardChannelParams& params);

double new_call_blocking(const GuardChannelParams& params);
double handover_blocking(const GuardChannelParams& params);
BlockingReport blocking_report(const GuardChannelParams& params);
BlockingReport blocking_report(const GuardChannelParams& params,
                               const StationaryDistribution& dist);

// Erlang-B loss probability for `offered_load` erlang on `channels` trunks,
// computed with the stable recursion B(0)=1, B(j)=aB(j-1)/(j+aB(j-1)).
double erlang_b(double offered_load, int channels);

struct KSweepRow {
  int guard_threshold = 0;
  BlockingReport report;
};

// One blocking report per K = 0..N. base.guard_threshold is ignored.
std::vector<KSweepRow> sweep_guard_threshold(const GuardChannelParams& base);

// Pick the largest K whose handover blocking still meets `target`.
struct HandoverBlockingTarget {
  double target = 0.0;
};

// Walk down from K = N and stop at the first K where lowering the threshold
// one more step buys less than `ratio_threshold` relative handover-blocking
// reduction per percentage point of utilization given up.
struct MarginalTradeoff {
  double ratio_threshold = 0.0;
};

using OptimizationCriterion = std::variant<HandoverBlockingTarget, MarginalTradeoff>;

struct KSelection {
  std::optional<int> guard_threshold;  // empty when no K is feasible
  std::vector<std::string> trace;      // one line per examined K
};

// Deterministic; ties break toward the larger K (less reservation). Throws
// std::invalid_argument on an empty table.
KSelection optimize_k(const std::vector<KSweepRow>& table,
                      const OptimizationCriterion& criterion);

}  // namespace femtoho
