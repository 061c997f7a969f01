#include "adfbn/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "adfbn/io.hpp"
#include "adfbn/solver.hpp"

namespace adfbn {

std::string_view outcome_name(BenchOutcome outcome) {
  switch (outcome) {
    case BenchOutcome::completed: return "completed";
    case BenchOutcome::timeout: return "timeout";
    case BenchOutcome::budget: return "budget";
    case BenchOutcome::error: return "error";
  }
  return "";
}

bool is_bench_method(std::string_view name) { return name == "brute" || name == "sat"; }

namespace {

struct Task {
  std::size_t instance;
  std::size_t method;
};

struct Result {
  BenchRecord record;
  std::vector<Interpretation> answer;
};

Result run_one(const std::filesystem::path& file, const std::string& method, const BenchOptions& options) {
  Result r;
  r.record.instance = file.filename().string();
  r.record.method = method;
  const auto start = std::chrono::steady_clock::now();
  try {
    const LoadedInput input = load_input(file);
    const Budget budget = Budget::seconds(options.timeout_seconds);
    if (method == "brute") {
      r.answer = preferred_interpretations_bruteforce(input.framework, Exec::serial, options.limits, budget);
    } else {
      EnumerationOptions eo;
      eo.budget = budget;
      r.answer = enumerate_preferred(input.framework, eo);
    }
    r.record.count = r.answer.size();
  } catch (const BudgetExceeded&) {
    r.record.outcome = BenchOutcome::timeout;
  } catch (const CapExceeded& e) {
    r.record.outcome = BenchOutcome::budget;
    r.record.message = e.what();
  } catch (const std::exception& e) {
    r.record.outcome = BenchOutcome::error;
    r.record.message = e.what();
  }
  r.record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

BenchReport run_bench(const std::filesystem::path& dir, const BenchOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && format_from_path(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < files.size(); ++i)
    for (std::size_t m = 0; m < options.methods.size(); ++m) tasks.push_back({i, m});

  std::vector<Result> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const unsigned jobs = std::max(1U, options.jobs ? options.jobs : std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, tasks.size()); ++w) {
      workers.emplace_back([&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
          results[t] = run_one(files[tasks[t].instance], options.methods[tasks[t].method], options);
      });
    }
  }

  BenchReport report;
  report.instances = files.size();
  const std::size_t k = options.methods.size();
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::vector<Result*> done;
    for (std::size_t m = 0; m < k; ++m) {
      auto& r = results[i * k + m];
      if (r.record.outcome == BenchOutcome::completed) done.push_back(&r);
      if (r.record.outcome == BenchOutcome::error) ++report.errors;
    }
    if (done.size() >= 2) {
      bool agree = true;
      for (auto* r : done) agree = agree && r->answer == done.front()->answer;
      for (auto* r : done) r->record.agree = agree;
      if (!agree) ++report.disagreements;
    }
    for (std::size_t m = 0; m < k; ++m) report.records.push_back(std::move(results[i * k + m].record));
  }
  return report;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance,method,seconds,outcome,count,agree\n";
  char secs[32];
  for (const auto& r : records) {
    std::snprintf(secs, sizeof secs, "%.6f", r.seconds);
    out << r.instance << ',' << r.method << ',' << secs << ',' << outcome_name(r.outcome) << ',' << r.count << ','
        << (r.agree ? (*r.agree ? "yes" : "no") : "na") << '\n';
  }
  return out.str();
}

}  // namespace adfbn
