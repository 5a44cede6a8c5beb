#include "n2s/bench/eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "n2s/core/random.hpp"
#include "n2s/search/rollout.hpp"
#include "n2s/train/trainer.hpp"

namespace n2s::bench {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

nn::DecoderChoice parse_decoder(const std::string& text) {
  if (text == "random") return nn::DecoderChoice::random();
  if (text == "greedy") return nn::DecoderChoice::eps_greedy(0.0);
  const std::string prefix = "eps-greedy";
  if (text.rfind(prefix, 0) == 0) {
    if (text.size() == prefix.size()) return nn::DecoderChoice::eps_greedy(0.1);
    if (text[prefix.size()] == ':') {
      const std::string value = text.substr(prefix.size() + 1);
      std::size_t used = 0;
      double eps = -1.0;
      try {
        eps = std::stod(value, &used);
      } catch (const std::exception&) {
      }
      if (used == value.size() && eps >= 0.0 && eps <= 1.0) return nn::DecoderChoice::eps_greedy(eps);
    }
  }
  throw std::invalid_argument("unknown decoder '" + text +
                              "' (expected random, greedy or eps-greedy:<0..1>)");
}

std::string describe(const nn::DecoderChoice& choice) {
  switch (choice.kind) {
    case nn::DecoderKind::kLearned:
      return "learned";
    case nn::DecoderKind::kRandom:
      return "random";
    case nn::DecoderKind::kEpsGreedy: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "eps-greedy:%g", choice.epsilon);
      return buf;
    }
  }
  return "?";
}

PolicySource PolicySource::handcrafted(const std::string& spec) {
  PolicySource source;
  const auto slash = spec.find('/');
  source.removal = parse_decoder(spec.substr(0, slash));
  source.reinsertion =
      slash == std::string::npos ? source.removal : parse_decoder(spec.substr(slash + 1));
  return source;
}

PolicySource PolicySource::from_checkpoint(std::filesystem::path path) {
  PolicySource source;
  source.checkpoint = std::move(path);
  return source;
}

nlohmann::json PolicySource::to_json() const {
  nlohmann::json j{{"removal", describe(removal)}, {"reinsertion", describe(reinsertion)}};
  if (!checkpoint.empty()) j["checkpoint"] = checkpoint.string();
  return j;
}

nlohmann::json EvalReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json item{{"id", r.id},
                        {"steps", r.steps},
                        {"augments", r.augments},
                        {"cost", r.cost},
                        {"normalized_cost", r.normalized_cost},
                        {"seconds", r.seconds},
                        {"route", r.route.order()}};
    if (r.initial_cost) item["initial_cost"] = *r.initial_cost;
    if (r.gap) item["gap_percent"] = *r.gap;
    items.push_back(std::move(item));
  }
  nlohmann::json j{{"config", config},
                   {"instances", std::move(items)},
                   {"mean_cost", mean_cost},
                   {"total_steps", total_steps},
                   {"wall_seconds", wall_seconds}};
  if (mean_gap) j["mean_gap_percent"] = *mean_gap;
  return j;
}

void EvalReport::write_csv(std::ostream& out) const {
  out << "id,cost,gap_percent,steps,augments,seconds\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%s,%.10g,%s,%d,%d,%.6f\n", r.id.c_str(), r.cost,
                  r.gap ? std::to_string(*r.gap).c_str() : "", r.steps, r.augments, r.seconds);
    out << buf;
  }
}

EvalReport evaluate(const Dataset& dataset, const PolicySource& source, const EvalOptions& options,
                    const std::optional<std::vector<double>>& reference) {
  if (options.steps < 0) throw std::invalid_argument("eval: steps must be >= 0");
  if (options.workers < 1) throw std::invalid_argument("eval: workers must be >= 1");
  const std::size_t count = dataset.entries.size();
  if (reference && reference->size() != count) {
    throw std::invalid_argument("reference costs: " + std::to_string(reference->size()) +
                                " values for " + std::to_string(count) + " instances");
  }

  nn::N2SActor actor{nullptr};
  if (!source.checkpoint.empty()) {
    if (!std::filesystem::exists(source.checkpoint)) {
      throw std::runtime_error("checkpoint not found: " + source.checkpoint.string());
    }
    actor = train::load_actor(source.checkpoint);
    actor->eval();
  }

  EvalReport report;
  report.config = {{"dataset", dataset.dir.string()},
                   {"policy", source.to_json()},
                   {"steps", options.steps},
                   {"augment", options.augment},
                   {"seed", options.seed},
                   {"decode", options.mode == nn::DecodeMode::kGreedy ? "greedy" : "sample"},
                   {"history_window", options.history_window},
                   {"workers", options.workers},
                   {"reference", reference.has_value()}};
  if (options.variant) report.config["variant"] = std::string(to_string(*options.variant));
  if (actor) report.config["model"] = actor->config();

  std::vector<std::optional<EvalRecord>> records(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto start = Clock::now();

  auto work = [&] {
    torch::NoGradGuard guard;
    nn::PairPolicy policy = actor ? nn::PairPolicy(actor)
                                  : nn::PairPolicy(nullptr, source.removal, source.reinsertion);
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        const auto t0 = Clock::now();
        auto inst = std::make_shared<const Instance>(dataset.load(i, options.variant));
        search::RolloutOptions ro;
        ro.steps = options.steps;
        ro.history_window = options.history_window;
        ro.mode = options.mode;
        ro.seed = derive_seed(options.seed, i);
        auto rec = [&] {
          if (options.augment) {
            auto res = search::n2s_a_infer(inst, policy, ro);
            const int copies = static_cast<int>(res.copy_costs.size());
            return EvalRecord{dataset.entries[i].id, options.steps, copies, 0.0, res.best_cost,
                              std::nullopt, std::nullopt, 0.0, std::move(res.best_route)};
          }
          auto res = search::rollout(inst, policy, ro);
          return EvalRecord{dataset.entries[i].id, options.steps, 1, 0.0, res.best_cost,
                            res.initial_cost, std::nullopt, 0.0, std::move(res.best_route)};
        }();
        rec.cost = rec.normalized_cost / dataset.entries[i].scale;
        if (reference) rec.gap = (rec.cost - (*reference)[i]) / (*reference)[i] * 100.0;
        rec.seconds = elapsed(t0);
        records[i] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::size_t>(options.workers, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  double gap_sum = 0.0;
  for (auto& r : records) {
    report.mean_cost += r->cost / count;
    if (r->gap) gap_sum += *r->gap;
    report.total_steps += static_cast<long long>(r->steps) * r->augments;
    report.records.push_back(std::move(*r));
  }
  if (reference && count > 0) report.mean_gap = gap_sum / count;
  report.wall_seconds = elapsed(start);
  return report;
}

}  // namespace n2s::bench
