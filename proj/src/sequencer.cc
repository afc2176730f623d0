// Copyright 2026 The qtp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtp/sequencer.h"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "qtp/error.h"
#include "qtp/random.h"

namespace qtp {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Signed edge weights. The searches minimize over these; the worst-order
// search runs them on the negated cost matrix.
class Weights {
 public:
  Weights(const CostMatrix& costs, int sign)
      : size_(costs.size()), entries_(costs.entries()) {
    if (sign < 0) {
      for (int& w : entries_) w = -w;
    }
    for (int w : entries_) max_abs_ = std::max(max_abs_, std::abs(w));
  }

  std::size_t size() const { return size_; }
  int operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }
  int max_abs() const { return max_abs_; }

  long long PathCost(const std::vector<std::size_t>& order) const {
    long long total = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      total += (*this)(order[i], order[i + 1]);
    }
    return total;
  }

 private:
  std::size_t size_;
  std::vector<int> entries_;
  int max_abs_ = 0;
};

std::vector<std::size_t> HeldKarpOrder(const Weights& w) {
  const std::size_t m = w.size();
  if (m > kHeldKarpCap) {
    throw Error(ErrorCode::kTooLarge,
                "exact DP limited to " + std::to_string(kHeldKarpCap) +
                    " settings, got " + std::to_string(m));
  }
  if (m <= 1) return std::vector<std::size_t>(m, 0);
  constexpr int kUnset = INT_MAX;
  const std::size_t masks = std::size_t{1} << m;
  // dp[mask * m + j]: cheapest path visiting exactly `mask`, ending at j.
  std::vector<int> dp(masks * m, kUnset);
  std::vector<std::int8_t> parent(masks * m, -1);
  for (std::size_t j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = 0;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      const int here = dp[mask * m + j];
      if (here == kUnset) continue;
      for (std::size_t next = 0; next < m; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t grown = mask | (std::size_t{1} << next);
        const int candidate = here + w(j, next);
        int& slot = dp[grown * m + next];
        if (candidate < slot) {
          slot = candidate;
          parent[grown * m + next] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
  const std::size_t full = masks - 1;
  std::size_t end = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (dp[full * m + j] < dp[full * m + end]) end = j;
  }
  std::vector<std::size_t> order;
  std::size_t mask = full;
  std::size_t node = end;
  while (true) {
    order.push_back(node);
    const std::int8_t prev = parent[mask * m + node];
    mask &= ~(std::size_t{1} << node);
    if (prev < 0) break;
    node = static_cast<std::size_t>(prev);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<std::size_t> KMeans(const std::vector<std::vector<double>>& points,
                                std::size_t clusters, std::uint64_t seed) {
  const std::size_t m = points.size();
  const std::size_t dim = points.front().size();
  constexpr int kRestarts = 10;
  constexpr int kMaxIterations = 100;
  std::vector<std::size_t> best_assign(m, 0);
  double best_inertia = INFINITY;
  for (int restart = 0; restart < kRestarts; ++restart) {
    Rng rng(DeriveSeed(seed, 0x6b6d000ULL + static_cast<std::uint64_t>(restart)));
    // Initial centroids: distinct random points (partial Fisher-Yates).
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    for (std::size_t i = 0; i < clusters; ++i) {
      std::swap(pick[i], pick[i + UniformBelow(rng, m - i)]);
    }
    std::vector<std::vector<double>> centroids;
    for (std::size_t i = 0; i < clusters; ++i) centroids.push_back(points[pick[i]]);

    std::vector<std::size_t> assign(m, clusters);
    double inertia = 0.0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      bool changed = false;
      inertia = 0.0;
      for (std::size_t p = 0; p < m; ++p) {
        std::size_t nearest = 0;
        double nearest_dist = INFINITY;
        for (std::size_t c = 0; c < clusters; ++c) {
          double dist = 0.0;
          for (std::size_t x = 0; x < dim; ++x) {
            const double diff = points[p][x] - centroids[c][x];
            dist += diff * diff;
          }
          if (dist < nearest_dist) {
            nearest_dist = dist;
            nearest = c;
          }
        }
        inertia += nearest_dist;
        if (assign[p] != nearest) {
          assign[p] = nearest;
          changed = true;
        }
      }
      if (!changed) break;
      std::vector<std::vector<double>> sums(clusters, std::vector<double>(dim, 0.0));
      std::vector<std::size_t> counts(clusters, 0);
      for (std::size_t p = 0; p < m; ++p) {
        ++counts[assign[p]];
        for (std::size_t x = 0; x < dim; ++x) sums[assign[p]][x] += points[p][x];
      }
      for (std::size_t c = 0; c < clusters; ++c) {
        if (counts[c] == 0) continue;  // empty cluster keeps its centroid
        for (std::size_t x = 0; x < dim; ++x) {
          centroids[c][x] = sums[c][x] / static_cast<double>(counts[c]);
        }
      }
    }
    if (inertia < best_inertia) {
      best_inertia = inertia;
      best_assign = assign;
    }
  }
  return best_assign;
}

std::vector<std::size_t> ClusterOrder(const Weights& w,
                                      const std::vector<Row>& settings,
                                      std::uint64_t seed) {
  const std::size_t m = w.size();
  if (settings.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "settings and cost matrix sizes differ");
  }
  if (m <= 1) return std::vector<std::size_t>(m, 0);
  Symbol alphabet = 0;
  for (const auto& s : settings) {
    for (Symbol x : s) alphabet = std::max(alphabet, x + 1);
  }
  std::vector<std::vector<double>> features(
      m, std::vector<double>(std::max<Symbol>(alphabet, 1), 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (Symbol x : settings[i]) features[i][x] += 1.0;
  }
  const std::size_t k = std::min(
      m, std::max<std::size_t>(
             2, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))))));
  const auto assign = KMeans(features, k, seed);

  std::vector<std::vector<std::size_t>> clusters(k);
  for (std::size_t i = 0; i < m; ++i) clusters[assign[i]].push_back(i);
  std::erase_if(clusters, [](const auto& c) { return c.empty(); });

  // Chain clusters: largest first, then the one closest to anything placed.
  const std::size_t count = clusters.size();
  std::vector<std::size_t> chain;
  std::size_t first = 0;
  for (std::size_t c = 1; c < count; ++c) {
    if (clusters[c].size() > clusters[first].size()) first = c;
  }
  std::vector<bool> placed(count, false);
  std::vector<long long> link(count, LLONG_MAX);
  auto place = [&](std::size_t c) {
    chain.push_back(c);
    placed[c] = true;
    for (std::size_t other = 0; other < count; ++other) {
      if (placed[other]) continue;
      for (std::size_t u : clusters[c]) {
        for (std::size_t v : clusters[other]) {
          link[other] = std::min<long long>(link[other], w(u, v));
        }
      }
    }
  };
  place(first);
  while (chain.size() < count) {
    std::size_t next = count;
    for (std::size_t c = 0; c < count; ++c) {
      if (!placed[c] && (next == count || link[c] < link[next])) next = c;
    }
    place(next);
  }

  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t c : chain) {
    std::vector<std::size_t> members = clusters[c];
    std::vector<bool> used(members.size(), false);
    std::size_t start = 0;
    if (!order.empty()) {
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (w(order.back(), members[i]) < w(order.back(), members[start])) {
          start = i;
        }
      }
    }
    used[start] = true;
    order.push_back(members[start]);
    for (std::size_t step = 1; step < members.size(); ++step) {
      std::size_t best = members.size();
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (used[i]) continue;
        if (best == members.size() ||
            w(order.back(), members[i]) < w(order.back(), members[best])) {
          best = i;
        }
      }
      used[best] = true;
      order.push_back(members[best]);
    }
  }
  return order;
}

void TwoOptInPlace(std::vector<std::size_t>& order, const Weights& w,
                   double budget_s) {
  const std::size_t m = order.size();
  if (m < 3) return;
  const auto start = Clock::now();
  bool improved = true;
  while (improved && SecondsSince(start) < budget_s) {
    improved = false;
    for (std::size_t i = 0; i + 2 < m && !improved; ++i) {
      for (std::size_t j = i + 2; j < m; ++j) {
        long long delta;
        if (j + 1 < m) {
          delta = static_cast<long long>(w(order[i], order[j])) +
                  w(order[i + 1], order[j + 1]) - w(order[i], order[i + 1]) -
                  w(order[j], order[j + 1]);
        } else {
          delta = static_cast<long long>(w(order[i], order[j])) -
                  w(order[i], order[i + 1]);
        }
        if (delta < 0) {
          std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       order.begin() + static_cast<std::ptrdiff_t>(j + 1));
          improved = true;
          break;
        }
      }
    }
  }
}

std::vector<std::size_t> AnnealOrder(const Weights& w,
                                     const std::vector<std::size_t>& start,
                                     const SaParams& params,
                                     std::uint64_t seed) {
  params.Validate();
  const std::size_t m = start.size();
  if (m < 2) return start;
  Rng rng(seed);
  std::vector<std::size_t> current = start;
  std::vector<std::size_t> best = start;
  long long current_cost = w.PathCost(current);
  long long best_cost = current_cost;

  auto edge = [&](std::size_t e) -> long long {
    return w(current[e], current[e + 1]);
  };
  // Sum of the path edges listed by left endpoint (each in [0, m-2]).
  auto local = [&](std::size_t* edges, std::size_t count) {
    long long sum = 0;
    for (std::size_t i = 0; i < count; ++i) sum += edge(edges[i]);
    return sum;
  };

  double temperature = params.initial_temperature;
  for (std::uint64_t iter = 0; iter < params.max_iterations; ++iter) {
    const bool reversal = Uniform01(rng) < 0.5 && m >= 3;
    long long delta;
    std::size_t a, b;
    if (reversal) {
      // Reverse positions [a, b] with a >= 1: the first setting stays put.
      a = 1 + UniformBelow(rng, m - 2);
      b = a + 1 + UniformBelow(rng, m - a - 1);
      delta = static_cast<long long>(w(current[a - 1], current[b])) -
              w(current[a - 1], current[a]);
      if (b + 1 < m) {
        delta += static_cast<long long>(w(current[a], current[b + 1])) -
                 w(current[b], current[b + 1]);
      }
    } else {
      a = UniformBelow(rng, m);
      b = UniformBelow(rng, m - 1);
      if (b >= a) ++b;
      if (a > b) std::swap(a, b);
      std::size_t edges[4];
      std::size_t count = 0;
      auto add = [&](std::size_t e) {
        if (e + 1 >= m) return;
        for (std::size_t i = 0; i < count; ++i) {
          if (edges[i] == e) return;
        }
        edges[count++] = e;
      };
      if (a > 0) add(a - 1);
      add(a);
      if (b > 0) add(b - 1);
      add(b);
      const long long before = local(edges, count);
      std::swap(current[a], current[b]);
      delta = local(edges, count) - before;
      std::swap(current[a], current[b]);
    }

    if (delta < 0 ||
        Uniform01(rng) < std::exp(-static_cast<double>(delta) / temperature)) {
      if (reversal) {
        std::reverse(current.begin() + static_cast<std::ptrdiff_t>(a),
                     current.begin() + static_cast<std::ptrdiff_t>(b + 1));
      } else {
        std::swap(current[a], current[b]);
      }
      current_cost += delta;
      if (current_cost < best_cost) {
        best_cost = current_cost;
        best = current;
      }
    }

    temperature *= params.cooling;
    if (temperature < params.min_temperature) break;
  }
  return best;
}

void RequireSettings(const std::vector<Row>& settings) {
  if (settings.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequencing needs at least 2 settings");
  }
}

Method ResolveAuto(std::size_t m) {
  if (m <= 12) return Method::kExact;
  if (m <= 50) return Method::kHeuristic;
  return Method::kSa;
}

// Runs `restarts` annealing passes from `base`, returning the best order
// (base itself unless a pass is strictly better). Pass r uses
// DeriveSeed(seed, r + 1) regardless of thread count.
std::vector<std::size_t> RestartPasses(const Weights& w,
                                       const std::vector<std::size_t>& base,
                                       const SaParams& params,
                                       std::uint64_t seed,
                                       std::size_t restarts, unsigned threads) {
  if (restarts == 0) return base;
  std::vector<std::vector<std::size_t>> results(restarts);
  const unsigned workers = std::max(
      1u, std::min<unsigned>(threads, static_cast<unsigned>(restarts)));
  auto run = [&](unsigned worker) {
    for (std::size_t r = worker; r < restarts; r += workers) {
      results[r] = AnnealOrder(w, base, params, DeriveSeed(seed, r + 1));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& t : pool) t.join();
  }
  std::vector<std::size_t> best = base;
  long long best_cost = w.PathCost(base);
  for (const auto& order : results) {
    const long long cost = w.PathCost(order);
    if (cost < best_cost) {
      best_cost = cost;
      best = order;
    }
  }
  return best;
}

SaParams DefaultsFor(const Weights& w) {
  SaParams p;
  p.initial_temperature =
      std::max(1.0, static_cast<double>(w.max_abs()) * static_cast<double>(w.size()));
  p.cooling = 0.995;
  p.min_temperature = 1e-3;
  p.max_iterations = 20000 * static_cast<std::uint64_t>(w.size());
  return p;
}

// Stream indices for DeriveSeed, one per sub-task.
constexpr std::uint64_t kClusterStream = 1;
constexpr std::uint64_t kAnnealStream = 2;
constexpr std::uint64_t kRestartStream = 3;

}  // namespace

std::size_t Hamming(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "settings of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) distance += a[i] != b[i];
  return distance;
}

std::size_t Hamming(const MeasurementSetting& a, const MeasurementSetting& b) {
  if (a.labels.size() != b.labels.size()) {
    throw Error(ErrorCode::kLengthMismatch, "settings differ in length");
  }
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    distance += !(a.labels[i] == b.labels[i]);
  }
  return distance;
}

CostMatrix::CostMatrix(std::size_t size, std::vector<int> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw Error(ErrorCode::kInvalidArgument, "cost matrix must be square");
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)(i, i) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "nonzero diagonal entry");
    }
    for (std::size_t j = 0; j < size_; ++j) {
      const int w = (*this)(i, j);
      if (w < 0 || w != (*this)(j, i)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cost matrix must be symmetric and nonnegative");
      }
      max_entry_ = std::max(max_entry_, w);
    }
  }
}

CostMatrix BuildCostMatrix(const std::vector<Row>& settings) {
  RequireSettings(settings);
  const std::size_t m = settings.size();
  std::vector<int> entries(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int d = static_cast<int>(Hamming(settings[i], settings[j]));
      entries[i * m + j] = d;
      entries[j * m + i] = d;
    }
  }
  return CostMatrix(m, std::move(entries));
}

CostMatrix BuildCostMatrix(const CoveringArray& array) {
  return BuildCostMatrix(array.RowVectors());
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kExact: return "exact";
    case Method::kHeuristic: return "heuristic";
    case Method::kSa: return "sa";
    case Method::kAuto: return "auto";
    case Method::kWorst: return "worst";
    case Method::kIdentity: return "identity";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  for (Method m : {Method::kExact, Method::kHeuristic, Method::kSa,
                   Method::kAuto, Method::kWorst, Method::kIdentity}) {
    if (MethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown method '" + std::string(name) + "'");
}

Schedule MakeSchedule(const CostMatrix& costs, std::vector<std::size_t> order,
                      Method method) {
  std::vector<bool> seen(costs.size(), false);
  for (std::size_t i : order) {
    if (i >= costs.size() || seen[i]) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
    }
    seen[i] = true;
  }
  if (order.size() != costs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
  }
  Schedule s;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    s.step_costs.push_back(costs(order[i], order[i + 1]));
    s.total += s.step_costs.back();
  }
  s.order = std::move(order);
  s.method = method;
  return s;
}

bool IsValidSchedule(const Schedule& schedule, const CostMatrix& costs) {
  const std::size_t m = costs.size();
  if (schedule.order.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (std::size_t i : schedule.order) {
    if (i >= m || seen[i]) return false;
    seen[i] = true;
  }
  if (schedule.step_costs.size() != (m == 0 ? 0 : m - 1)) return false;
  long long total = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (schedule.step_costs[i] != costs(schedule.order[i], schedule.order[i + 1])) {
      return false;
    }
    total += schedule.step_costs[i];
  }
  return total == schedule.total;
}

SaParams SaParams::Defaults(const CostMatrix& costs) {
  return DefaultsFor(Weights(costs, 1));
}

void SaParams::Validate() const {
  if (!(cooling > 0.0 && cooling < 1.0) || !(min_temperature > 0.0) ||
      !(initial_temperature > min_temperature) || max_iterations < 1) {
    throw Error(ErrorCode::kInvalidParams,
                "annealing needs 0 < alpha < 1, T0 > Tmin > 0, iterations >= 1");
  }
}

Schedule HeldKarp(const CostMatrix& costs) {
  const auto start = Clock::now();
  Schedule s = MakeSchedule(costs, HeldKarpOrder(Weights(costs, 1)),
                            Method::kExact);
  s.wall_time_s = SecondsSince(start);
  return s;
}

Schedule ClusterNearestNeighbor(const CostMatrix& costs,
                                const std::vector<Row>& settings,
                                std::uint64_t seed) {
  const auto start = Clock::now();
  Schedule s = MakeSchedule(costs, ClusterOrder(Weights(costs, 1), settings, seed),
                            Method::kHeuristic);
  s.wall_time_s = SecondsSince(start);
  return s;
}

Schedule TwoOpt(const Schedule& start, const CostMatrix& costs,
                double time_budget_s) {
  const auto t0 = Clock::now();
  std::vector<std::size_t> order = start.order;
  TwoOptInPlace(order, Weights(costs, 1), time_budget_s);
  Schedule s = MakeSchedule(costs, std::move(order), start.method);
  s.seed = start.seed;
  s.wall_time_s = start.wall_time_s + SecondsSince(t0);
  return s;
}

Schedule SimulatedAnnealing(const CostMatrix& costs, const Schedule& start,
                            const SaParams& params, std::uint64_t seed) {
  const auto t0 = Clock::now();
  Schedule s = MakeSchedule(
      costs, AnnealOrder(Weights(costs, 1), start.order, params, seed),
      Method::kSa);
  s.seed = seed;
  s.wall_time_s = SecondsSince(t0);
  return s;
}

namespace {

std::vector<std::size_t> SearchOrder(const Weights& w,
                                     const std::vector<Row>& settings,
                                     Method method,
                                     const SequenceOptions& options) {
  const SaParams params = options.sa_params.value_or(DefaultsFor(w));
  params.Validate();
  std::vector<std::size_t> order;
  switch (method) {
    case Method::kExact:
      order = HeldKarpOrder(w);
      break;
    case Method::kHeuristic:
      order = ClusterOrder(w, settings, DeriveSeed(options.seed, kClusterStream));
      TwoOptInPlace(order, w, options.two_opt_budget_s);
      break;
    case Method::kSa:
      order = ClusterOrder(w, settings, DeriveSeed(options.seed, kClusterStream));
      order = AnnealOrder(w, order, params, DeriveSeed(options.seed, kAnnealStream));
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument, "method must be resolved");
  }
  return RestartPasses(w, order, params,
                       DeriveSeed(options.seed, kRestartStream),
                       options.restarts, options.threads);
}

}  // namespace

Schedule Optimize(const std::vector<Row>& settings,
                  const SequenceOptions& options) {
  const auto start = Clock::now();
  const CostMatrix costs = BuildCostMatrix(settings);
  Method method = options.method;
  if (method == Method::kAuto) method = ResolveAuto(costs.size());
  if (method != Method::kExact && method != Method::kHeuristic &&
      method != Method::kSa) {
    throw Error(ErrorCode::kInvalidArgument,
                "optimize supports exact, heuristic, sa and auto");
  }
  Schedule s = MakeSchedule(
      costs, SearchOrder(Weights(costs, 1), settings, method, options), method);
  s.seed = options.seed;
  s.wall_time_s = SecondsSince(start);
  return s;
}

Schedule WorstOrder(const std::vector<Row>& settings,
                    const SequenceOptions& options) {
  const auto start = Clock::now();
  const CostMatrix costs = BuildCostMatrix(settings);
  const Weights negated(costs, -1);
  std::vector<std::size_t> order;
  if (costs.size() <= 12) {
    order = SearchOrder(negated, settings, Method::kExact, options);
  } else {
    // Farthest-neighbour clusters, reversed 2-opt, then reversed annealing.
    order = ClusterOrder(negated, settings,
                         DeriveSeed(options.seed, kClusterStream));
    TwoOptInPlace(order, negated, options.two_opt_budget_s);
    const SaParams params = options.sa_params.value_or(DefaultsFor(negated));
    params.Validate();
    order = AnnealOrder(negated, order, params,
                        DeriveSeed(options.seed, kAnnealStream));
    order = RestartPasses(negated, order, params,
                          DeriveSeed(options.seed, kRestartStream),
                          options.restarts, options.threads);
  }
  Schedule s = MakeSchedule(costs, std::move(order), Method::kWorst);
  s.seed = options.seed;
  s.wall_time_s = SecondsSince(start);
  return s;
}

double OptimizationRate(long long min_total, long long max_total) {
  if (max_total <= 0) return 0.0;
  return static_cast<double>(max_total - min_total) /
         static_cast<double>(max_total) * 100.0;
}

Schedule RandomSchedule(const CostMatrix& costs, Rng& rng) {
  std::vector<std::size_t> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[UniformBelow(rng, i)]);
  }
  return MakeSchedule(costs, std::move(order), Method::kIdentity);
}

ImprovementReport MakeImprovementReport(const CostMatrix& costs,
                                        const Schedule& best,
                                        const Schedule& worst,
                                        std::size_t random_trials,
                                        std::uint64_t seed) {
  ImprovementReport report;
  report.min_total = best.total;
  report.max_total = worst.total;
  report.rate_percent = OptimizationRate(best.total, worst.total);
  report.random_trials = random_trials;
  if (random_trials > 0) {
    Rng rng(DeriveSeed(seed, 0x72616e64ULL));
    long long sum = 0;
    for (std::size_t t = 0; t < random_trials; ++t) {
      sum += RandomSchedule(costs, rng).total;
    }
    report.random_mean = static_cast<double>(sum) / static_cast<double>(random_trials);
    if (report.random_mean > 0) {
      report.improvement_vs_random_percent =
          (report.random_mean - static_cast<double>(best.total)) /
          report.random_mean * 100.0;
    }
  }
  return report;
}

}  // namespace qtp
