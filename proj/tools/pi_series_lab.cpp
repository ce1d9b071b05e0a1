// pi-series-lab: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 nothing found (identify, search, sweep).

#include "pisl/closedform/pi.hpp"
#include "pisl/congruence/sweep.hpp"
#include "pisl/discovery/identify.hpp"
#include "pisl/powerseries/gf_checks.hpp"
#include "pisl/sequences/checks.hpp"
#include "pisl/sequences/sequences.hpp"
#include "pisl/series/registry.hpp"
#include "pisl/series/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace pisl;
using Json = nlohmann::json;

constexpr int kOk = 0, kFail = 1, kUsage = 2, kNone = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 0) threads = cong::default_threads();
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next++) < count;) body(i);
  };
  if (workers <= 1) return run();
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like lo..hi: " + text);
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(a, &used);
    if (used != a.size()) throw UsageError("bad range: " + text);
    const std::int64_t hi = std::stoll(b, &used);
    if (used != b.size()) throw UsageError("bad range: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range: " + text);
  }
}

std::string linear_form(const BigInt& a, const BigInt& b) {
  std::string s = a.get_str() + "k";
  if (b > 0) s += "+" + b.get_str();
  if (b < 0) s += b.get_str();
  return s;
}

// ---------------------------------------------------------------- verify-series

struct VerifySeriesArgs {
  std::vector<std::string> ids;
  bool all = false;
  long digits = 50;
  std::string profile = "full";
  std::string registry;
  std::string out;
  int threads = 0;
};

int cmd_verify_series(const VerifySeriesArgs& a, bool digits_given) {
  const auto reg = series::load_registry(a.registry.empty() ? series::default_registry_path() : a.registry);
  const long digits = (a.profile == "quick" && !digits_given) ? 40 : a.digits;
  std::vector<const series::SeriesEntry*> chosen;
  if (a.all) {
    for (const auto& e : reg) chosen.push_back(&e);
  }
  for (const auto& id : a.ids) {
    const auto* e = series::find_entry(reg, id);
    if (!e) {
      std::cerr << "unknown id: " << id << "\n";
      return kUsage;
    }
    chosen.push_back(e);
  }
  if (chosen.empty()) throw UsageError("verify-series: give --id or --all");

  struct Row {
    std::optional<series::VerifyReport> report;
    std::string error;
    double seconds = 0;
  };
  std::vector<Row> rows(chosen.size());
  parallel_for(chosen.size(), a.threads, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rows[i].report = series::verify_entry(*chosen[i], digits);
    } catch (const std::exception& ex) {
      rows[i].error = ex.what();
    }
    rows[i].seconds = seconds_since(t0);
  });

  bool ok = true;
  Json out = Json::array();
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const auto& r = rows[i];
    if (!r.report) {
      ok = false;
      std::cout << "ERROR " << chosen[i]->id << ": " << r.error << "\n";
      out.push_back({{"id", chosen[i]->id}, {"pass", false}, {"error", r.error}});
      continue;
    }
    ok = ok && r.report->pass;
    std::cout << (r.report->pass ? "PASS " : "FAIL ") << chosen[i]->id << "  terms=" << r.report->terms
              << "  |diff|=" << abs(r.report->diff).to_string(3) << "  tail=" << r.report->tail.to_string(3) << "  ("
              << r.seconds << " s)\n";
    Json j = series::to_json(*r.report);
    j["seconds"] = r.seconds;
    out.push_back(j);
  }
  if (!a.out.empty()) write_json_file(a.out, out);
  std::cout << (ok ? "all " : "not all ") << chosen.size() << " series verified at " << digits << " digits\n";
  return ok ? kOk : kFail;
}

// ------------------------------------------------------------ verify-identities

struct VerifyIdentitiesArgs {
  long order = 60;
  long recurrence_n = 500;
  long s_n = 300;
  bool inject_fault = false;
  bool convergence = true;
  std::string registry;
  std::string out;
};

// W entries and the f4 entries they reduce to under transform_W_to_f4.
Json transform_checks(const std::vector<series::SeriesEntry>& reg, bool& ok) {
  Json rows = Json::array();
  for (const auto* id : {"W2", "W3", "W6", "W8", "W12", "W15"}) {
    const auto* w = series::find_entry(reg, id);
    Json row = {{"id", id}};
    if (!w || !std::holds_alternative<series::KindW>(w->term)) {
      row["pass"] = false;
      row["error"] = "missing W entry";
      ok = false;
      rows.push_back(row);
      continue;
    }
    const BigRational x = series::transform_point(std::get<series::KindW>(w->term).x);
    const auto t = series::transform_W_to_f4(w->a, w->b, x);
    const series::SeriesEntry* target = nullptr;
    for (const auto& e : reg) {
      if (std::holds_alternative<series::KindF4>(e.term) && e.base == t.new_base && e.a == t.A_reduced &&
          e.b == t.B_reduced && e.id != "F4-36b") {
        target = &e;
      }
    }
    bool pass = target != nullptr && w->base == 4 * x && t.in_convergence_region;
    if (target) {
      // (pi * factor * C_f4)^2 == (pi * C_W)^2 and the signs agree.
      const auto lhs = pi_times_squared(w->rhs), rhs = pi_times_squared(target->rhs);
      pass = pass && lhs && rhs && *lhs == t.factor_reduced * t.factor_reduced * *rhs;
      const long d = 30;
      pass = pass && (eval_expr(w->rhs, d).sign() == (BigFloat(t.factor_reduced, d) * eval_expr(target->rhs, d)).sign());
      row["target"] = target->id;
    }
    row["x"] = x.get_str();
    row["A"] = t.A_reduced.get_str();
    row["B"] = t.B_reduced.get_str();
    row["new_base"] = t.new_base.get_str();
    row["factor"] = t.factor_reduced.get_str();
    row["pass"] = pass;
    ok = ok && pass;
    rows.push_back(row);
  }
  return rows;
}

Json report_json(const seq::CheckReport& r) {
  Json j = {{"name", r.name}, {"pass", r.pass}, {"n_max", r.n_max}, {"detail", r.detail}};
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  return j;
}

int cmd_verify_identities(const VerifyIdentitiesArgs& a) {
  if (a.order < 2) throw UsageError("--order must be at least 2");
  const auto reg = series::load_registry(a.registry.empty() ? series::default_registry_path() : a.registry);
  const long table_n = std::max({a.recurrence_n + 2, a.s_n + 2, a.order + 1});
  auto f4 = seq::f4_table(table_n);
  const auto s = seq::s_table(a.s_n + 2);
  if (a.inject_fault) f4[7] += 1;

  bool ok = true;
  Json report = Json::object();
  auto line = [&](const std::string& name, bool pass, const std::string& detail, double secs) {
    ok = ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << name << "  " << detail << "  (" << secs << " s)\n";
  };

  auto t0 = std::chrono::steady_clock::now();
  const auto rec = seq::check_f4_recurrence(f4, a.recurrence_n);
  line("f4 recurrence n<=" + std::to_string(a.recurrence_n), rec.pass, rec.detail, seconds_since(t0));
  report["f4_recurrence"] = report_json(rec);

  t0 = std::chrono::steady_clock::now();
  const auto l22 = seq::check_s_identity(f4, s, a.s_n);
  std::ostringstream anchors;
  for (std::size_t i = 0; i < l22.anchors.size(); ++i) anchors << (i ? ", " : "") << "u_" << i << " = " << l22.anchors[i];
  line("s_n / f4 identity n<=" + std::to_string(a.s_n), l22.check.pass && l22.anchors_match,
       anchors.str() + (l22.anchors_match ? " (match)" : " (mismatch)") + ", coefficient " + l22.coefficient_resolution,
       seconds_since(t0));
  Json lj = report_json(l22.check);
  lj["coefficient_resolution"] = l22.coefficient_resolution;
  lj["anchors"] = Json::array();
  for (const auto& u : l22.anchors) lj["anchors"].push_back(u.get_str());
  lj["anchors_match"] = l22.anchors_match;
  report["s_identity"] = lj;

  t0 = std::chrono::steady_clock::now();
  const auto l21 = check_w_generating_functions(a.order);
  line("W generating functions to order " + std::to_string(a.order), l21.pass, l21.detail, seconds_since(t0));
  report["generating_functions"] = report_json(l21);

  t0 = std::chrono::steady_clock::now();
  const auto zi = verify_ziden(f4, a.order);
  line("z-identity to order " + std::to_string(a.order), zi.pass, zi.detail, seconds_since(t0));
  report["z_identity"] = report_json(zi);

  t0 = std::chrono::steady_clock::now();
  bool tr_ok = true;
  report["transforms"] = transform_checks(reg, tr_ok);
  std::ostringstream factors;
  for (const auto& r : report["transforms"]) {
    factors << r.value("id", std::string()) << "->" << r.value("target", std::string("?")) << " "
            << r.value("factor", std::string("?")) << "; ";
  }
  line("six W -> f4 reductions", tr_ok, factors.str(), seconds_since(t0));

  if (a.convergence) {
    t0 = std::chrono::steady_clock::now();
    const BigFloat ratio = seq::laplace_heine_ratio(500, 40);
    const double rv = ratio.to_double();
    const bool rpass = rv >= 0.999 && rv <= 1.001;
    const auto th = seq::convergence_threshold(1000, 300);
    line("Legendre asymptotic and threshold", rpass && th.found,
         "ratio(500) = " + ratio.to_string(12) + ", N = " + std::to_string(th.N), seconds_since(t0));
    report["convergence"] = {{"ratio_500", ratio.to_string(20)}, {"ratio_pass", rpass}, {"threshold_found", th.found},
                             {"N", th.N},   {"span", th.span},   {"last_failure", th.last_failure}};
  }
  report["pass"] = ok;
  report["fault_injected"] = a.inject_fault;
  if (!a.out.empty()) write_json_file(a.out, report);
  std::cout << (ok ? "all identities verified\n" : "identity verification FAILED\n");
  return ok ? kOk : kFail;
}

// ------------------------------------------------------------ check-congruences

struct CongruenceArgs {
  std::string selector = "all";
  std::string claims_file;
  std::string registry;
  std::string primes = "3..300";
  std::vector<long> n{1, 2};
  int lift_primes = 3;
  long cost_cap = 400;
  long div_n_max = 40;
  long parity_n_max = 64;
  int threads = 0;
  std::string out;
};

int cmd_check_congruences(const CongruenceArgs& a) {
  const auto [lo, hi] = parse_range(a.primes);
  if (lo > hi) throw UsageError("empty prime range " + a.primes);
  if (hi > 1000000) throw UsageError("prime range upper bound exceeds 10^6");
  if (lo < 2) throw UsageError("prime range must start at 2 or more");
  for (long n : a.n) {
    if (n < 1) throw UsageError("--n values must be positive");
  }
  const auto reg = series::load_registry(a.registry.empty() ? series::default_registry_path() : a.registry);
  const auto claims = cong::load_claims(a.claims_file.empty() ? cong::default_claims_path() : a.claims_file, reg);
  std::vector<const cong::Claim*> chosen;
  try {
    chosen = cong::select_claims(claims, a.selector);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  cong::SweepOptions opt;
  opt.lo = lo;
  opt.hi = hi;
  opt.lift_n = a.n;
  opt.lift_primes = a.lift_primes;
  opt.cost_cap = a.cost_cap;
  opt.div_n_max = a.div_n_max;
  opt.parity_n_max = a.parity_n_max;
  opt.threads = a.threads;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = cong::run_sweep(chosen, opt);
  const double secs = seconds_since(t0);
  const auto sum = cong::summarize(results);

  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    cong::write_jsonl(out, results);
  }

  std::cout << "claims " << chosen.size() << ", primes " << lo << ".." << hi << ", records " << results.size() << " ("
            << secs << " s)\n";
  std::cout << "pass " << sum.pass << "  fail " << sum.fail << "  skip " << sum.skip << "  error " << sum.error << "\n";

  // Per-claim tallies for the flagged and alternate section.
  std::map<std::string, std::array<std::size_t, 4>> tally;
  for (const auto& r : results) tally[r.claim][static_cast<int>(r.outcome)]++;
  bool header = false;
  for (const auto* c : chosen) {
    if (c->primary && c->flag.empty()) continue;
    if (!header) {
      std::cout << "\nflagged or alternate readings (reported, not gating unless primary):\n";
      header = true;
    }
    const auto& t = tally[c->id];
    std::cout << "  " << c->id << (c->primary ? " [primary]" : " [alternate]") << "  pass " << t[0] << " fail " << t[1]
              << " skip " << t[2] << " error " << t[3];
    if (!c->flag.empty()) std::cout << "  note: " << c->flag;
    std::cout << "\n";
  }

  header = false;
  for (const auto& r : results) {
    if (r.outcome != cong::Outcome::Fail && r.outcome != cong::Outcome::Error) continue;
    if (!header) {
      std::cout << "\nfailures:\n";
      header = true;
    }
    std::cout << "  " << (r.primary ? "GATING " : "alternate ") << cong::to_json(r).dump() << "\n";
  }
  std::cout << "\ngating failures: " << sum.gating_failures << ", alternate failures: " << sum.alternate_failures
            << "\n";
  return sum.gating_failures == 0 ? kOk : kFail;
}

// --------------------------------------------------------------------- identify

struct IdentifyArgs {
  std::string id;
  std::string value;
  long digits = 80;
  bool quartic = false;
  std::string registry;
  std::string max_norm = "10000000000000000";
};

int cmd_identify(const IdentifyArgs& a) {
  if (a.id.empty() == a.value.empty()) throw UsageError("identify: give exactly one of --id or --value");
  if (a.digits < 60) throw UsageError("identify: --digits must be at least 60");
  disc::IdentifyOptions opt;
  opt.quartic = a.quartic;
  opt.max_norm = BigInt(a.max_norm);
  BigFloat S(a.digits);
  const series::SeriesEntry* entry = nullptr;
  std::vector<series::SeriesEntry> reg;
  if (!a.id.empty()) {
    reg = series::load_registry(a.registry.empty() ? series::default_registry_path() : a.registry);
    entry = series::find_entry(reg, a.id);
    if (!entry) {
      std::cerr << "unknown id: " << a.id << "\n";
      return kUsage;
    }
    S = series::sum_series(*entry, a.digits + 10).value.with_digits(a.digits);
  } else {
    try {
      S = BigFloat::parse(a.value, a.digits);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto found = disc::identify_series(S, opt);
  if (!found) {
    std::cout << "no closed form found\n";
    return kNone;
  }
  std::cout << format_expr(*found) << "\n";
  if (entry) {
    const auto x = pi_times_squared(*found), y = pi_times_squared(entry->rhs);
    if (x && y) {
      std::cout << (*x == *y ? "matches registry: " : "differs from registry: ") << format_expr(entry->rhs) << "\n";
    } else {
      const bool same = abs(eval_expr(*found, a.digits) - eval_expr(entry->rhs, a.digits)) <
                        pow10(-a.digits + 15, a.digits);
      std::cout << (same ? "matches registry numerically: " : "differs from registry: ") << format_expr(entry->rhs)
                << "\n";
    }
  }
  return kOk;
}

// ----------------------------------------------------------------------- search

struct KindArgs {
  std::string kind = "W";
  std::string x;
  std::string b1, c1, b2, c2, b, c;
};

series::TermKind make_kind(const KindArgs& k) {
  Json j = {{"name", k.kind}};
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) j[key] = v;
  };
  if (k.kind == "B2n_conv12" || k.kind == "S_poly") {
    put("y", k.x);
  } else {
    put("x", k.x);
  }
  put("b1", k.b1);
  put("c1", k.c1);
  put("b2", k.b2);
  put("c2", k.c2);
  put("b", k.b);
  put("c", k.c);
  try {
    return series::term_kind_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad term kind: ") + e.what());
  }
}

BigRational parse_rational(const std::string& s, const char* what) {
  try {
    return series::json_rational(Json(s));
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + ": " + s);
  }
}

struct SearchArgs {
  KindArgs kind;
  std::string m;
  std::vector<long> d;
  long digits = 60;
  std::string max_norm = "1000000000";
};

int cmd_search(const SearchArgs& a) {
  if (a.m.empty()) throw UsageError("search: --m is required");
  if (a.digits < 30) throw UsageError("search: --digits must be at least 30");
  const auto kind = make_kind(a.kind);
  const BigRational m = parse_rational(a.m, "m");
  if (m == 0) throw UsageError("search: m must be nonzero");
  for (long d : a.d) {
    if (d < 1) throw UsageError("search: --d values must be positive");
  }
  const std::vector<long> ds = a.d.empty() ? disc::kDefaultDiscriminants : a.d;
  disc::MomentSums sums;
  try {
    sums = disc::moment_sums(kind, m, a.digits);
  } catch (const series::NonConvergent& e) {
    std::cout << "series does not converge: " << e.what() << "\n";
    return kNone;
  }
  for (long d : ds) {
    if (auto r = disc::search_ab(sums, d, a.digits, BigInt(a.max_norm))) {
      std::cout << linear_form(r->a, r->b) << "  sum (" << linear_form(r->a, r->b) << ") " << series::describe(kind)
                << " / (" << m.get_str() << ")^k = " << format_expr(r->C) << "\n";
      return kOk;
    }
  }
  std::cout << "no relation found\n";
  return kNone;
}

// ------------------------------------------------------------------------ sweep

struct SweepArgs {
  std::string kind = "W";
  std::string m_range;
  std::vector<long> m_list;
  long s_max = 40;
  double max_ratio = 0.9;
  std::vector<long> d;
  long digits = 60;
  std::string max_norm = "1000000000";
  int threads = 0;
  std::string out;
};

// Grid search over (m, x) with x = +-s^2/m, so that m x is an integer square up to sign.
int cmd_sweep(const SweepArgs& a) {
  if (a.kind != "W" && a.kind != "B2k_F" && a.kind != "F_only" && a.kind != "B2n_conv_recip") {
    throw UsageError("sweep: --kind must be a one-parameter family (W, B2k_F, F_only, B2n_conv_recip)");
  }
  if (a.s_max < 1) throw UsageError("sweep: --s-max must be positive");
  if (a.digits < 30) throw UsageError("sweep: --digits must be at least 30");
  std::vector<long> ms = a.m_list;
  if (!a.m_range.empty()) {
    const auto [lo, hi] = parse_range(a.m_range);
    if (lo > hi) throw UsageError("sweep: empty m range");
    if (hi - lo > 100000) throw UsageError("sweep: m range too large");
    for (auto m = lo; m <= hi; ++m) ms.push_back(static_cast<long>(m));
  }
  std::erase(ms, 0L);
  if (ms.empty()) throw UsageError("sweep: give --m or --m-range");

  struct Point {
    long m;
    BigRational x;
  };
  std::vector<Point> grid;
  for (long m : ms) {
    for (long s = 1; s <= a.s_max; ++s) {
      for (int sg : {1, -1}) {
        BigRational x(BigInt(sg) * s * s, BigInt(m));
        x.canonicalize();
        grid.push_back({m, x});
      }
    }
  }
  const std::vector<long> ds = a.d.empty() ? disc::kDefaultDiscriminants : a.d;
  const BigInt norm(a.max_norm);

  struct Hit {
    std::optional<disc::SearchResult> r;
    long d = 0;
    std::string note;
  };
  std::vector<Hit> hits(grid.size());
  std::atomic<std::size_t> screened{0};
  parallel_for(grid.size(), a.threads, [&](std::size_t i) {
    const auto& g = grid[i];
    const auto kind = make_kind(KindArgs{a.kind, g.x.get_str(), "", "", "", "", "", ""});
    const double ratio = disc::ratio_estimate(kind, BigRational(g.m));
    if (!(ratio < a.max_ratio)) return;
    ++screened;
    try {
      const auto sums = disc::moment_sums(kind, BigRational(g.m), a.digits);
      for (long d : ds) {
        if (auto r = disc::search_ab(sums, d, a.digits, norm)) {
          hits[i] = Hit{r, d, ""};
          return;
        }
      }
    } catch (const series::NonConvergent&) {
      hits[i].note = "nonconvergent";
    }
  });

  Json out = Json::array();
  std::size_t found = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!hits[i].r) continue;
    ++found;
    const auto& r = *hits[i].r;
    std::cout << "m=" << grid[i].m << "  x=" << grid[i].x.get_str() << "  " << linear_form(r.a, r.b) << "  "
              << format_expr(r.C) << "\n";
    out.push_back({{"m", grid[i].m},
                   {"x", grid[i].x.get_str()},
                   {"a", r.a.get_str()},
                   {"b", r.b.get_str()},
                   {"d", hits[i].d},
                   {"C", format_expr(r.C)}});
  }
  std::cout << "grid points " << grid.size() << ", convergent " << screened.load() << ", found " << found << "\n";
  if (!a.out.empty()) write_json_file(a.out, out);
  return found ? kOk : kNone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan-type 1/pi series: verification, congruence sweeps and discovery"};
  app.require_subcommand(1);

  VerifySeriesArgs vs;
  auto* c_vs = app.add_subcommand("verify-series", "Sum registry series and compare with their closed forms");
  c_vs->add_option("--id", vs.ids, "Series id (repeatable)");
  c_vs->add_flag("--all", vs.all, "Every registry entry");
  auto* vs_digits = c_vs->add_option("--digits", vs.digits, "Decimal digits (default 50)")->check(CLI::Range(20L, 100000L));
  c_vs->add_option("--profile", vs.profile, "quick (40 digits) or full")->check(CLI::IsMember({"quick", "full"}));
  c_vs->add_option("--registry", vs.registry, "Registry JSON file");
  c_vs->add_option("--out", vs.out, "Write the reports as JSON");
  c_vs->add_option("--threads", vs.threads, "Worker threads (default: $PI_SERIES_LAB_THREADS or all cores)");

  VerifyIdentitiesArgs vi;
  auto* c_vi = app.add_subcommand("verify-identities", "Exact checks of the recurrences, generating functions and transforms");
  c_vi->add_option("--order", vi.order, "Power series order (default 60)");
  c_vi->add_option("--recurrence-n", vi.recurrence_n, "Recurrence range (default 500)");
  c_vi->add_option("--s-n", vi.s_n, "Range of the s_n identity (default 300)");
  c_vi->add_flag("--inject-fault", vi.inject_fault, "Perturb one f4 value (test hook)");
  c_vi->add_flag("!--no-convergence", vi.convergence, "Skip the Legendre asymptotic checks");
  c_vi->add_option("--registry", vi.registry, "Registry JSON file");
  c_vi->add_option("--out", vi.out, "Write the report as JSON");

  CongruenceArgs cc;
  auto* c_cc = app.add_subcommand("check-congruences", "Sweep congruence claims over primes");
  c_cc->add_option("--claims", cc.selector, "all, an id, a family, a kind, or a comma list");
  c_cc->add_option("--claims-file", cc.claims_file, "Claims JSON file");
  c_cc->add_option("--registry", cc.registry, "Registry JSON file");
  c_cc->add_option("--primes", cc.primes, "Prime range lo..hi (default 3..300)");
  c_cc->add_option("--n", cc.n, "Lift levels, comma separated (default 1,2)")->delimiter(',');
  c_cc->add_option("--lift-primes", cc.lift_primes, "Lift at the k smallest applicable primes; 0 for all (default 3)");
  c_cc->add_option("--cost-cap", cc.cost_cap, "Skip lifts with p*n above this (default 400)");
  c_cc->add_option("--div-n", cc.div_n_max, "Divisibility range (default 40)");
  c_cc->add_option("--parity-n", cc.parity_n_max, "Range for power-of-two parity rules (default 64)");
  c_cc->add_option("--threads", cc.threads, "Worker threads (default: $PI_SERIES_LAB_THREADS or all cores)");
  c_cc->add_option("--out", cc.out, "Write results as JSON lines");

  IdentifyArgs id;
  auto* c_id = app.add_subcommand("identify", "Recognize a series value as an algebraic multiple of 1/pi");
  c_id->add_option("--id", id.id, "Registry series to sum");
  c_id->add_option("--value", id.value, "Decimal value");
  c_id->add_option("--digits", id.digits, "Working digits (default 80, at least 60)");
  c_id->add_flag("--quartic", id.quartic, "Also try (pi S)^2 in Q(sqrt d)");
  c_id->add_option("--max-norm", id.max_norm, "Relation norm bound");
  c_id->add_option("--registry", id.registry, "Registry JSON file");

  SearchArgs se;
  auto* c_se = app.add_subcommand("search", "Find (a, b) with sum (a k + b) t_k / m^k = C / pi");
  c_se->add_option("--kind", se.kind.kind, "Term family (W, F4, B2k_TT, B2k2_T, B2k_F, F_only, B2n_conv_recip, B2n_conv12, S_poly)");
  c_se->add_option("--m", se.m, "Base m");
  c_se->add_option("--x", se.kind.x, "Family parameter x (y for B2n_conv12, S_poly)");
  c_se->add_option("--b1", se.kind.b1, "b of the first T_k(b, c) factor (B2k_TT)");
  c_se->add_option("--c1", se.kind.c1, "c of the first T_k(b, c) factor (B2k_TT)");
  c_se->add_option("--b2", se.kind.b2, "b of the second T_k(b, c) factor (B2k_TT)");
  c_se->add_option("--c2", se.kind.c2, "c of the second T_k(b, c) factor (B2k_TT)");
  c_se->add_option("--b", se.kind.b, "b of T_k(b, c) (B2k2_T)");
  c_se->add_option("--c", se.kind.c, "c of T_k(b, c) (B2k2_T)");
  c_se->add_option("--d", se.d, "Square-free d, comma separated (default: standard list)")->delimiter(',');
  c_se->add_option("--digits", se.digits, "Working digits (default 60)");
  c_se->add_option("--max-norm", se.max_norm, "Relation norm bound (default 10^9)");

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("sweep", "Grid search over (m, x) with m x = +-s^2");
  c_sw->add_option("--kind", sw.kind, "One-parameter family (default W)");
  c_sw->add_option("--m", sw.m_list, "Bases, comma separated")->delimiter(',');
  c_sw->add_option("--m-range", sw.m_range, "Base range lo..hi");
  c_sw->add_option("--s-max", sw.s_max, "Largest s (default 40)");
  c_sw->add_option("--max-ratio", sw.max_ratio, "Skip points whose estimated term ratio exceeds this (default 0.9)");
  c_sw->add_option("--d", sw.d, "Square-free d, comma separated")->delimiter(',');
  c_sw->add_option("--digits", sw.digits, "Working digits (default 60)");
  c_sw->add_option("--max-norm", sw.max_norm, "Relation norm bound (default 10^9)");
  c_sw->add_option("--threads", sw.threads, "Worker threads");
  c_sw->add_option("--out", sw.out, "Write hits as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c_vs) return cmd_verify_series(vs, vs_digits->count() > 0);
    if (*c_vi) return cmd_verify_identities(vi);
    if (*c_cc) return cmd_check_congruences(cc);
    if (*c_id) return cmd_identify(id);
    if (*c_se) return cmd_search(se);
    if (*c_sw) return cmd_sweep(sw);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Malformed registry, claims or expressions.
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
