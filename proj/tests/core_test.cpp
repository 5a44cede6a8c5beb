#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "n2s/core/exact.hpp"
#include "n2s/core/feasibility.hpp"
#include "n2s/core/instance.hpp"
#include "n2s/core/instance_io.hpp"
#include "n2s/core/route.hpp"
#include "n2s/core/search_state.hpp"
#include "oracles.hpp"

namespace n2s {
namespace {

// Request labels for n = 2 and n = 3 tours, written as in the literature.
constexpr int P1 = 1, P2 = 2;

Instance tiny_instance() {
  return Instance({{0, 0}, {1, 0}, {1, 1}}, Variant::kPdtsp);
}

TEST(GenerateInstance, RangeAndDeterminism) {
  const Instance a = generate_instance(10, 7);
  const Instance b = generate_instance(10, 7);
  ASSERT_EQ(a.num_nodes(), 21);
  for (int v = 0; v < a.num_nodes(); ++v) {
    EXPECT_GE(a.coord(v).x, 0.0);
    EXPECT_LT(a.coord(v).x, 1.0);
    EXPECT_GE(a.coord(v).y, 0.0);
    EXPECT_LT(a.coord(v).y, 1.0);
    EXPECT_EQ(a.coord(v).x, b.coord(v).x);
    EXPECT_EQ(a.coord(v).y, b.coord(v).y);
  }
}

TEST(GenerateInstance, MeanCoordinateNearCentre) {
  const Instance inst = generate_instance(50, 0);
  ASSERT_EQ(inst.num_nodes(), 101);
  double sum = 0.0;
  for (const Point& p : inst.coords()) sum += p.x + p.y;
  EXPECT_NEAR(sum / (2.0 * inst.num_nodes()), 0.5, 0.1);
}

TEST(GenerateInstance, RejectsEmpty) {
  EXPECT_THROW(generate_instance(0, 1), std::invalid_argument);
}

TEST(Instance, RejectsBadShapes) {
  EXPECT_THROW(Instance({{0, 0}, {1, 1}}, Variant::kPdtsp), std::invalid_argument);
  EXPECT_THROW(Instance({{0, 0}, {1, NAN}, {0, 1}}, Variant::kPdtsp),
               std::invalid_argument);
}

TEST(Route, RejectsNonPermutations) {
  EXPECT_THROW(Route({1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Route({0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(Route({0, 1, 2, 3}), std::invalid_argument);
  const Route r({0, 2, 1});
  EXPECT_EQ(r.position(2), 1);
  EXPECT_EQ(r.succ(1), 0);
  EXPECT_EQ(r.pred(0), 1);
}

TEST(Objective, HandGeometry) {
  const Instance inst = tiny_instance();
  EXPECT_DOUBLE_EQ(objective(inst, Route({0, 1, 2})), 2.0 + std::sqrt(2.0));
}

TEST(Objective, DegenerateIsZero) {
  const Instance inst({{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}},
                      Variant::kPdtsp);
  EXPECT_EQ(objective(inst, Route({0, 1, 3, 2, 4})), 0.0);
}

TEST(Objective, MatchesResummation) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = generate_instance(3, 100 + trial);
    const auto order = oracle::random_precedence_order(3, rng);
    EXPECT_NEAR(objective(inst, Route(order)), oracle::tour_length(inst.coords(), order),
                1e-12);
  }
}

TEST(Objective, InvariantUnderRequestRelabeling) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4;
    const Instance inst = generate_instance(n, trial);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    // Request r becomes perm[r-1]; coordinates move with their nodes.
    std::vector<int> relabel(2 * n + 1, 0);
    for (int r = 1; r <= n; ++r) {
      relabel[r] = perm[r - 1];
      relabel[r + n] = perm[r - 1] + n;
    }
    std::vector<Point> coords(inst.num_nodes());
    for (int v = 0; v < inst.num_nodes(); ++v) coords[relabel[v]] = inst.coord(v);
    const Instance renamed(coords, Variant::kPdtsp);
    const auto order = oracle::random_precedence_order(n, rng);
    std::vector<int> renamed_order(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) renamed_order[t] = relabel[order[t]];
    EXPECT_DOUBLE_EQ(objective(inst, Route(order)),
                     objective(renamed, Route(renamed_order)));
  }
}

TEST(Feasibility, CaptionPatternBlockedUnderLifo) {
  // (0, 1+, 2+, 1-, 2-, 3+, 3-) with n = 3: deliveries are 4, 5, 6.
  const Route route({0, 1, 2, 4, 5, 3, 6});
  EXPECT_TRUE(is_feasible(route, Variant::kPdtsp));
  EXPECT_FALSE(is_feasible(route, Variant::kPdtspLifo));
}

TEST(Feasibility, DisjointRequestsFeasibleForBoth) {
  const Route route({0, P1, 3, P2, 4});
  EXPECT_TRUE(is_feasible(route, Variant::kPdtsp));
  EXPECT_TRUE(is_feasible(route, Variant::kPdtspLifo));
}

TEST(Feasibility, MatchesStackTraceOnRandomPermutations) {
  Rng rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 6));
    std::vector<int> order(2 * n + 1);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    const Route route(order);
    const StackTrace trace = lifo_stack_trace(route);
    EXPECT_EQ(is_feasible(route, Variant::kPdtspLifo), trace.ok());
    EXPECT_EQ(is_feasible(route, Variant::kPdtsp),
              trace.ok() || trace.kind == ViolationKind::kLifo
                  ? oracle::precedence_ok(order, n)
                  : false);
  }
}

TEST(StackTrace, HandSimulation) {
  const StackTrace trace = lifo_stack_trace(Route({0, P1, P2, 4, 3}));
  ASSERT_TRUE(trace.ok());
  const std::vector<std::vector<int>> expected{{}, {1}, {1, 2}, {1}, {}};
  EXPECT_EQ(trace.stacks, expected);
}

TEST(StackTrace, BlockedDeliveryReported) {
  // (0, 1+, 2+, 1-, 2-): 1- sits at position 3 with 2 on top.
  const StackTrace trace = lifo_stack_trace(Route({0, P1, P2, 3, 4}));
  ASSERT_FALSE(trace.ok());
  EXPECT_EQ(*trace.violation_position, 3);
  EXPECT_EQ(trace.kind, ViolationKind::kLifo);
}

TEST(StackTrace, PrecedenceViolationReported) {
  const StackTrace trace = lifo_stack_trace(Route({0, 3, P1, P2, 4}));
  ASSERT_FALSE(trace.ok());
  EXPECT_EQ(*trace.violation_position, 1);
  EXPECT_EQ(trace.kind, ViolationKind::kPrecedence);
}

TEST(StackTrace, EquivalentToNestingExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    std::int64_t routes = 0;
    oracle::for_each_precedence_order(n, /*lifo=*/false, [&](const std::vector<int>& order) {
      const Route route(order);
      ASSERT_EQ(lifo_stack_trace(route).ok(), intervals_nested(route));
      ++routes;
    });
    std::int64_t expected = 1;
    for (int k = 2; k <= 2 * n; ++k) expected *= k;
    EXPECT_EQ(routes, expected >> n);
  }
}

TEST(ApplyAction, DirectSplice) {
  // (0, 1+, 2+, 1-, 2-) remove 1, reinsert after 2+ and 2-.
  const Route next = apply_action(Route({0, 1, 2, 3, 4}), PairAction{1, 2, 4},
                                  Variant::kPdtsp);
  EXPECT_EQ(next.order(), (std::vector<int>{0, 2, 1, 4, 3}));
}

TEST(ApplyAction, EqualAnchorsInsertConsecutively) {
  const ReducedRoute reduced({0, 2, 4}, 5);
  EXPECT_EQ(reinsert(reduced, 1, 0, 0).order(), (std::vector<int>{0, 1, 3, 2, 4}));
  const Route next = apply_action(Route({0, 2, 4, 1, 3}), PairAction{1, 0, 0},
                                  Variant::kPdtspLifo);
  EXPECT_EQ(next.order(), (std::vector<int>{0, 1, 3, 2, 4}));
}

TEST(ApplyAction, RejectsInfeasibleResult) {
  // Delivery anchor before pickup anchor.
  EXPECT_THROW(apply_action(Route({0, 1, 3, 2, 4}), PairAction{1, 4, 2}, Variant::kPdtsp),
               ConstraintViolation);
  // Crossing under LIFO.
  EXPECT_THROW(apply_action(Route({0, 1, 3, 2, 4}), PairAction{1, 0, 2},
                            Variant::kPdtspLifo),
               ConstraintViolation);
  // Anchor on the removed pair itself.
  EXPECT_THROW(apply_action(Route({0, 1, 3, 2, 4}), PairAction{1, 1, 2}, Variant::kPdtsp),
               std::invalid_argument);
}

TEST(ApplyAction, RoundTripAtOriginalAnchors) {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 8));
    const Variant variant = trial % 2 ? Variant::kPdtsp : Variant::kPdtspLifo;
    const Instance inst = generate_instance(n, trial);
    const Route route = random_initial_solution(inst, variant, rng);
    const int r = 1 + static_cast<int>(uniform_index(rng, n));
    // Original predecessors, skipping the partner if it sits directly before.
    int j = route.pred(r);
    int k = route.pred(r + n);
    if (k == r) k = j;
    const Route back = apply_action(route, PairAction{r, j, k}, variant);
    EXPECT_EQ(back, route);
  }
}

TEST(ApplyAction, PreservesNodesAndDepot) {
  Rng rng(23);
  const Instance inst = generate_instance(6, 1);
  Route route = random_initial_solution(inst, Variant::kPdtsp, rng);
  for (int step = 0; step < 200; ++step) {
    const int r = 1 + static_cast<int>(uniform_index(rng, 6));
    const ReducedRoute reduced = remove_request(route, r);
    const AnchorMask mask = reinsertion_mask(reduced, r, Variant::kPdtsp);
    std::vector<std::pair<int, int>> options;
    for (int j = 0; j < 13; ++j)
      for (int k = 0; k < 13; ++k)
        if (mask(j, k)) options.emplace_back(j, k);
    const auto [j, k] = options[uniform_index(rng, options.size())];
    route = apply_action(route, PairAction{r, j, k}, Variant::kPdtsp);
    ASSERT_EQ(route.at(0), 0);
    std::vector<int> sorted = route.order();
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < 13; ++v) ASSERT_EQ(sorted[v], v);
  }
}

TEST(Reward, Formula) {
  EXPECT_DOUBLE_EQ(reward(10.0, 9.0), 1.0);
  EXPECT_DOUBLE_EQ(reward(10.0, 12.0), 0.0);
}

TEST(SearchState, RewardsTelescopeAndIncumbentNeverRises) {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Variant variant = trial % 2 ? Variant::kPdtsp : Variant::kPdtspLifo;
    auto inst = std::make_shared<const Instance>(generate_instance(5, trial, variant));
    SearchState state(inst, random_initial_solution(*inst, variant, rng), 11);
    const double initial_best = state.best_cost();
    double total = 0.0;
    double prev_best = state.best_cost();
    for (int step = 0; step < 100; ++step) {
      const int r = 1 + static_cast<int>(uniform_index(rng, 5));
      const ReducedRoute reduced = remove_request(state.route(), r);
      const AnchorMask mask = reinsertion_mask(reduced, r, variant);
      std::vector<std::pair<int, int>> options;
      for (int j = 0; j < 11; ++j)
        for (int k = 0; k < 11; ++k)
          if (mask(j, k)) options.emplace_back(j, k);
      const auto [j, k] = options[uniform_index(rng, options.size())];
      const double r_t = state.step(PairAction{r, j, k});
      EXPECT_GE(r_t, 0.0);
      EXPECT_LE(state.best_cost(), prev_best);
      EXPECT_LE(state.best_cost(), state.cost() + 1e-9);
      prev_best = state.best_cost();
      total += r_t;
    }
    EXPECT_NEAR(total, initial_best - state.best_cost(), 1e-9);
    EXPECT_DOUBLE_EQ(objective(*inst, state.best_route()), state.best_cost());
  }
}

TEST(ActionHistory, CountsMatchRecount) {
  Rng rng(31);
  const int n = 7;
  const int window = 5;
  ActionHistory history(n, window);
  std::vector<int> all;
  for (int step = 0; step < 60; ++step) {
    const int r = 1 + static_cast<int>(uniform_index(rng, n));
    history.record(r);
    all.push_back(r);
    const std::size_t begin = all.size() > window ? all.size() - window : 0;
    int total = 0;
    for (int q = 1; q <= n; ++q) {
      const int recount = static_cast<int>(std::count(all.begin() + begin, all.end(), q));
      EXPECT_EQ(history.count(q), recount);
      total += history.count(q);
    }
    EXPECT_EQ(total, std::min<int>(step + 1, window));
    for (int back = 1; back <= 3; ++back) {
      if (static_cast<int>(all.size()) >= back) {
        EXPECT_EQ(history.last(back), all[all.size() - back]);
      } else {
        EXPECT_FALSE(history.last(back).has_value());
      }
    }
  }
}

std::set<std::pair<int, int>> mask_entries(const AnchorMask& mask) {
  std::set<std::pair<int, int>> out;
  for (int j = 0; j < mask.node_count(); ++j)
    for (int k = 0; k < mask.node_count(); ++k)
      if (mask(j, k)) out.emplace(j, k);
  return out;
}

std::set<std::pair<int, int>> feasible_splices(const ReducedRoute& reduced, int request,
                                               Variant variant) {
  std::set<std::pair<int, int>> out;
  for (int j : reduced.order())
    for (int k : reduced.order()) {
      const Route candidate = reinsert(reduced, request, j, k);
      const int n = candidate.num_requests();
      const bool ok = variant == Variant::kPdtsp
                          ? oracle::precedence_ok(candidate.order(), n)
                          : oracle::precedence_ok(candidate.order(), n) &&
                                oracle::stack_replay_ok(candidate.order(), n);
      if (ok) out.emplace(j, k);
    }
  return out;
}

TEST(ReinsertionMask, TwoRequestExample) {
  // Reduced route (0, 2+, 2-) with n = 2: 2+ = 2, 2- = 4; request 1 is out.
  const ReducedRoute reduced({0, 2, 4}, 5);
  const std::set<std::pair<int, int>> pdtsp{{0, 0}, {0, 2}, {0, 4},
                                            {2, 2}, {2, 4}, {4, 4}};
  const std::set<std::pair<int, int>> lifo{{0, 0}, {0, 4}, {2, 2}, {4, 4}};
  EXPECT_EQ(feasible_splices(reduced, 1, Variant::kPdtsp), pdtsp);
  EXPECT_EQ(feasible_splices(reduced, 1, Variant::kPdtspLifo), lifo);
  EXPECT_EQ(mask_entries(reinsertion_mask(reduced, 1, Variant::kPdtsp)), pdtsp);
  EXPECT_EQ(mask_entries(reinsertion_mask(reduced, 1, Variant::kPdtspLifo)), lifo);
}

TEST(ReinsertionMask, RejectsPresentRequest) {
  const ReducedRoute reduced({0, 1, 3}, 5);
  EXPECT_THROW(reinsertion_mask(reduced, 1, Variant::kPdtsp), std::invalid_argument);
}

void check_mask_exhaustive(int n, Variant variant) {
  oracle::for_each_precedence_order(
      n, variant == Variant::kPdtspLifo, [&](const std::vector<int>& order) {
        const Route route(order);
        for (int r = 1; r <= n; ++r) {
          const ReducedRoute reduced = remove_request(route, r);
          // Removal closure: the reduced tour stays feasible.
          std::vector<int> seen;
          bool ok = true;
          for (int node : reduced.order()) {
            if (node > n) {
              ok = ok && std::find(seen.begin(), seen.end(), node - n) != seen.end();
            } else if (node != 0) {
              seen.push_back(node);
            }
          }
          if (variant == Variant::kPdtspLifo) {
            ok = ok && oracle::stack_replay_ok(reduced.order(), n);
          }
          ASSERT_TRUE(ok);
          const AnchorMask mask = reinsertion_mask(reduced, r, variant);
          ASSERT_EQ(mask_entries(mask), feasible_splices(reduced, r, variant));
          // Original anchors always survive the mask.
          int j = route.pred(r);
          int k = route.pred(r + n);
          if (k == r) k = j;
          ASSERT_TRUE(mask(j, k));
        }
      });
}

TEST(ReinsertionMask, ExhaustivePdtspUpToFive) {
  for (int n = 1; n <= 5; ++n) check_mask_exhaustive(n, Variant::kPdtsp);
}

TEST(ReinsertionMask, ExhaustiveLifoUpToSix) {
  for (int n = 1; n <= 6; ++n) check_mask_exhaustive(n, Variant::kPdtspLifo);
}

TEST(ReinsertionMask, SampledPdtspSix) {
  Rng rng(37);
  const Instance inst = generate_instance(6, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const Route route = random_initial_solution(inst, Variant::kPdtsp, rng);
    const int r = 1 + static_cast<int>(uniform_index(rng, 6));
    const ReducedRoute reduced = remove_request(route, r);
    ASSERT_EQ(mask_entries(reinsertion_mask(reduced, r, Variant::kPdtsp)),
              feasible_splices(reduced, r, Variant::kPdtsp));
  }
}

TEST(RandomInitialSolution, SingleRequest) {
  const Instance inst = tiny_instance();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(random_initial_solution(inst, Variant::kPdtspLifo, seed).order(),
              (std::vector<int>{0, 1, 2}));
  }
}

TEST(RandomInitialSolution, AlwaysFeasibleAndDeterministic) {
  const Instance inst = generate_instance(6, 2, Variant::kPdtspLifo);
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Route route = random_initial_solution(inst, Variant::kPdtspLifo, rng);
    ASSERT_TRUE(oracle::stack_replay_ok(route.order(), 6));
    ASSERT_TRUE(is_feasible(route, Variant::kPdtspLifo));
  }
  EXPECT_EQ(random_initial_solution(inst, Variant::kPdtsp, 99),
            random_initial_solution(inst, Variant::kPdtsp, 99));
}

TEST(BruteForce, SingleRequest) {
  const Instance inst = tiny_instance();
  for (Variant v : {Variant::kPdtsp, Variant::kPdtspLifo}) {
    const ExactSolution sol = brute_force_solve(inst, v);
    EXPECT_EQ(sol.route.order(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(sol.feasible_count, 1);
  }
}

TEST(BruteForce, EnumerationCounts) {
  const Instance inst = generate_instance(3, 4);
  EXPECT_EQ(brute_force_solve(inst, Variant::kPdtsp).feasible_count, 90);
  // LIFO tours of 3 labelled requests: 3! orderings times Catalan(3) shapes.
  EXPECT_EQ(brute_force_solve(inst, Variant::kPdtspLifo).feasible_count, 30);
}

TEST(BruteForce, MatchesFilteredPermutationMinimum) {
  for (int seed = 0; seed < 20; ++seed) {
    const int n = 1 + seed % 4;
    const Instance inst = generate_instance(n, 500 + seed);
    for (Variant v : {Variant::kPdtsp, Variant::kPdtspLifo}) {
      double best = INFINITY;
      std::vector<int> best_order;
      oracle::for_each_permutation(n, [&](const std::vector<int>& order) {
        if (!oracle::precedence_ok(order, n)) return;
        if (v == Variant::kPdtspLifo && !oracle::stack_replay_ok(order, n)) return;
        const double len = oracle::tour_length(inst.coords(), order);
        if (len < best - 1e-12) {
          best = len;
          best_order = order;
        }
      });
      const ExactSolution sol = brute_force_solve(inst, v);
      EXPECT_NEAR(sol.cost, best, 1e-12);
      EXPECT_EQ(sol.route.order(), best_order);
    }
  }
}

TEST(BruteForce, PdtspNeverWorseThanLifo) {
  for (int seed = 0; seed < 30; ++seed) {
    const Instance inst = generate_instance(1 + seed % 5, seed);
    EXPECT_LE(brute_force_solve(inst, Variant::kPdtsp).cost,
              brute_force_solve(inst, Variant::kPdtspLifo).cost + 1e-12);
  }
}

TEST(BruteForce, RefusesLargeInstances) {
  EXPECT_THROW(brute_force_solve(generate_instance(6, 0), Variant::kPdtsp), SizeLimitError);
}

TEST(InstanceIo, SaveReadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "n2s_core_io";
  std::filesystem::create_directories(dir);
  for (int seed = 0; seed < 10; ++seed) {
    const Instance inst = generate_instance(7, seed, Variant::kPdtspLifo);
    const auto path = dir / ("inst" + std::to_string(seed) + ".pdp");
    save_instance(path, inst);
    const Instance back = read_instance(path);
    ASSERT_EQ(back.num_requests(), 7);
    EXPECT_EQ(back.variant(), Variant::kPdtspLifo);
    for (int v = 0; v < inst.num_nodes(); ++v) {
      EXPECT_NEAR(back.coord(v).x, inst.coord(v).x, 1e-9);
      EXPECT_NEAR(back.coord(v).y, inst.coord(v).y, 1e-9);
    }
    // Benchmark path: normalized then mapped back to the file's units.
    const BenchmarkInstance bench = load_benchmark_instance(path);
    for (int v = 0; v < inst.num_nodes(); ++v) {
      EXPECT_NEAR(bench.instance.coord(v).x / bench.scale + bench.offset.x,
                  inst.coord(v).x, 1e-9);
      EXPECT_NEAR(bench.instance.coord(v).y / bench.scale + bench.offset.y,
                  inst.coord(v).y, 1e-9);
    }
  }
}

TEST(InstanceIo, UnitSquareIsIdentity) {
  std::istringstream in("PDP 1 pdtsp\n0 0 0\n1 1 0\n2 0.5 1\n");
  const BenchmarkInstance bench = parse_benchmark_instance(in);
  EXPECT_EQ(bench.scale, 1.0);
  EXPECT_EQ(bench.instance.coord(2).x, 0.5);
  EXPECT_EQ(bench.instance.coord(2).y, 1.0);
}

TEST(InstanceIo, HundredSquareScalesCosts) {
  std::istringstream in(
      "PDP 2 pdtsp\n# raw units\n10 0 0\n20 100 0\n30 100 100\n40 0 100\n50 40 60\n"
      "PAIR 20 30\nPAIR 50 40\n");
  const BenchmarkInstance bench = parse_benchmark_instance(in);
  EXPECT_DOUBLE_EQ(bench.scale, 0.01);
  EXPECT_EQ(bench.original_ids, (std::vector<long long>{10, 20, 50, 30, 40}));
  // Internal: 1+ = id20, 2+ = id50, 1- = id30, 2- = id40.
  const Route route({0, 1, 3, 2, 4});
  const std::vector<Point> raw{{0, 0}, {100, 0}, {40, 60}, {100, 100}, {0, 100}};
  EXPECT_NEAR(bench.denormalize_cost(objective(bench.instance, route)),
              oracle::tour_length(raw, route.order()), 1e-9);
  EXPECT_NEAR(bench.denormalize_cost(objective(bench.instance, route)),
              100.0 * objective(bench.instance, route), 1e-9);
}

TEST(InstanceIo, ReportsLineNumbers) {
  std::istringstream bad("PDP 1 pdtsp\n0 0 0\n1 x 0\n2 0 1\n");
  try {
    parse_instance(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  std::istringstream dup("PDP 1 pdtsp\n0 0 0\n1 1 0\n1 0 1\n");
  try {
    parse_instance(dup);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  std::istringstream header("PDX 1 pdtsp\n");
  EXPECT_THROW(parse_instance(header), ParseError);
  std::istringstream short_file("PDP 2 pdtsp\n0 0 0\n1 1 0\n");
  EXPECT_THROW(parse_instance(short_file), ParseError);
}

}  // namespace
}  // namespace n2s
