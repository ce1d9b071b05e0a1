#include "pisl/congruence/sweep.hpp"

#include "pisl/exact/primes.hpp"
#include "pisl/exact/quadform.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace pisl::cong {

int default_threads() {
  if (const char* env = std::getenv("PI_SERIES_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Runs f(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
  };
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

CheckResult error_record(const Claim& c, std::uint64_t p, long n, const std::string& what) {
  CheckResult r;
  r.claim = c.id;
  r.kind = c.kind();
  r.primary = c.primary;
  r.p = p;
  r.n = n;
  r.outcome = Outcome::Error;
  r.reason = what;
  return r;
}

bool has_pow2_rule(const DivisibilityBody& b) {
  return b.parity == Parity::OddIffPow2 || b.parity == Parity::OddIffPow2Plus1;
}

}  // namespace

std::vector<CheckResult> run_sweep(const std::vector<const Claim*>& claims, const SweepOptions& opt) {
  if (opt.lo > opt.hi) throw std::invalid_argument("prime range is empty");
  const auto primes = primes_in(std::max<std::int64_t>(opt.lo, 2), opt.hi);
  const int threads = opt.threads > 0 ? opt.threads : default_threads();

  std::vector<const Claim*> by_prime, lifts, divs;
  for (const Claim* c : claims) {
    switch (c->body.index()) {
      case 2:
        divs.push_back(c);
        break;
      case 3:
        lifts.push_back(c);
        break;
      default:
        by_prime.push_back(c);
    }
  }
  // Lift primes per claim: the applicable primes in range, optionally truncated.
  std::map<const Claim*, std::set<std::uint64_t>> lift_set;
  for (const Claim* c : lifts) {
    auto& s = lift_set[c];
    for (auto p : primes) {
      if (opt.lift_primes > 0 && static_cast<int>(s.size()) >= opt.lift_primes) break;
      if (lift_applies(*c, p)) s.insert(p);
    }
  }

  std::vector<CheckResult> out;
  std::mutex mu;
  auto emit = [&](std::vector<CheckResult>&& batch) {
    std::lock_guard<std::mutex> lock(mu);
    for (auto& r : batch) out.push_back(std::move(r));
  };

  // Per-prime tasks share one Pascal table per prime; lifts are scheduled as separate tasks.
  struct LiftTask {
    const Claim* c;
    std::uint64_t p;
    long n;
  };
  std::vector<LiftTask> lift_tasks;
  for (const Claim* c : lifts) {
    for (auto p : lift_set[c]) {
      for (long n : opt.lift_n) lift_tasks.push_back({c, p, n});
    }
  }
  const std::size_t n_prime = by_prime.empty() ? 0 : primes.size();
  const std::size_t total = n_prime + lift_tasks.size() + divs.size();
  parallel_for(total, threads, [&](std::size_t i) {
    std::vector<CheckResult> batch;
    if (i < n_prime) {
      const std::uint64_t p = primes[i];
      PrimeWorkspace ws(p, 2);
      for (const Claim* c : by_prime) {
        try {
          batch.push_back(check_at_prime(*c, p, &ws));
        } catch (const std::exception& ex) {
          batch.push_back(error_record(*c, p, 0, ex.what()));
        }
      }
    } else if (i < n_prime + lift_tasks.size()) {
      const LiftTask& t = lift_tasks[i - n_prime];
      try {
        batch.push_back(check_lift(*t.c, t.p, t.n, opt.cost_cap));
      } catch (const CostCap& ex) {
        CheckResult r = error_record(*t.c, t.p, t.n, ex.what());
        r.outcome = Outcome::Skip;
        batch.push_back(std::move(r));
      } catch (const std::exception& ex) {
        batch.push_back(error_record(*t.c, t.p, t.n, ex.what()));
      }
    } else {
      const Claim* c = divs[i - n_prime - lift_tasks.size()];
      const auto& b = std::get<DivisibilityBody>(c->body);
      const long n_max = has_pow2_rule(b) ? std::max(opt.div_n_max, opt.parity_n_max) : opt.div_n_max;
      for (long n = b.n_min; n <= n_max; ++n) {
        try {
          batch.push_back(check_divisibility(*c, n));
        } catch (const std::exception& ex) {
          batch.push_back(error_record(*c, 0, n, ex.what()));
        }
      }
    }
    emit(std::move(batch));
  });

  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.claim, a.p, a.n) < std::tie(b.claim, b.p, b.n);
  });
  return out;
}

SweepSummary summarize(const std::vector<CheckResult>& results) {
  SweepSummary s;
  for (const auto& r : results) {
    switch (r.outcome) {
      case Outcome::Pass:
        ++s.pass;
        break;
      case Outcome::Skip:
        ++s.skip;
        break;
      case Outcome::Fail:
        ++s.fail;
        break;
      case Outcome::Error:
        ++s.error;
        break;
    }
    if (r.outcome == Outcome::Fail || r.outcome == Outcome::Error) ++(r.primary ? s.gating_failures : s.alternate_failures);
  }
  return s;
}

void write_jsonl(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) out << to_json(r).dump() << '\n';
}

AuditReport audit_tables(const std::vector<const Claim*>& claims, std::int64_t lo, std::int64_t hi) {
  AuditReport rep;
  const auto primes = primes_in(std::max<std::int64_t>(lo, 2), hi);
  for (const Claim* c : claims) {
    std::vector<const Condition*> conds;
    std::vector<std::optional<QuadForm>> forms;
    if (const auto* q = std::get_if<QuadFormBody>(&c->body)) {
      for (const auto& qc : q->cases) {
        conds.push_back(&qc.when);
        forms.push_back(qc.form);
      }
    } else if (const auto* g = std::get_if<CongruenceBody>(&c->body)) {
      for (const auto& pc : g->cases) {
        conds.push_back(&pc.when);
        forms.emplace_back();
      }
    }
    if (conds.size() < 2) continue;
    for (auto p : primes) {
      if (!c->admissible(p)) continue;
      ++rep.checked;
      std::string why;
      auto idx = select_case(conds, p, &why);
      if (!idx) {
        if (why == "ramified") {
          ++rep.ramified;
        } else {
          rep.problems.push_back(c->id + " p=" + std::to_string(p) + ": " + why);
        }
        continue;
      }
      if (const auto& f = forms[*idx]) {
        auto r = represent(f->A, f->d, f->doubled ? 2 * p : p);
        if (!r) rep.problems.push_back(c->id + " p=" + std::to_string(p) + ": no representation for case " + std::to_string(*idx));
      }
    }
  }
  return rep;
}

}  // namespace pisl::cong
