#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "evaluate.hpp"

namespace koszul::cli {

std::size_t resolve_jobs(std::optional<std::size_t> flag) {
  std::size_t jobs = 1;
  if (flag) {
    jobs = *flag;
  } else if (const char* env = std::getenv("KOSZUL_INDEX_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') jobs = v;
  }
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  return jobs;
}

bool run_scenarios(const std::vector<Scenario>& scenarios, const RunOptions& opts, std::ostream& out) {
  const std::size_t count = scenarios.size();
  std::vector<std::optional<std::string>> lines(count);
  std::vector<char> passed(count, 0);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const Json report = evaluate(scenarios[i], opts.timing);
      std::string line = report.dump();
      const std::lock_guard lock(mu);
      passed[i] = report.at("pass").get<bool>() ? 1 : 0;
      lines[i] = std::move(line);
      ready.notify_one();
    }
  };

  const std::size_t workers = std::min(opts.jobs, count);
  bool all = true;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      const Json report = evaluate(scenarios[i], opts.timing);
      all = all && report.at("pass").get<bool>();
      out << report.dump() << '\n' << std::flush;
    }
    return all;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  // The calling thread only writes, in order.
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return lines[i].has_value(); });
    const std::string line = std::move(*lines[i]);
    lines[i].reset();
    all = all && passed[i];
    lock.unlock();
    out << line << '\n' << std::flush;
  }
  return all;
}

}  // namespace koszul::cli
