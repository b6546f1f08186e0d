// dedekind: evaluate Dedekind sums and check reciprocity identities exactly.
//
// Exit codes: 0 success or all residuals zero, 1 an identity was falsified,
// 2 usage or precondition error.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dedekind/admissible.hpp"
#include "dedekind/scan.hpp"

namespace {

using namespace dedekind;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text) {
  Int value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return value;
}

int cmd_eval(const std::string& a_text, const std::string& b_text, bool naive) {
  const SumArgs args = SumArgs::make(parse_int(a_text), parse_int(b_text));
  const Rat s = naive ? Rat(12) * dedekind_sum_naive(args) : normalized_sum(args);
  std::cout << s.to_string() << '\n';
  return kExitOk;
}

void expect_arity(const std::string& identity, const std::vector<std::string>& params,
                  std::size_t n) {
  if (params.size() != n) {
    throw UsageError("verify " + identity + " takes " + std::to_string(n) + " integer" +
                     (n == 1 ? "" : "s") + ", got " + std::to_string(params.size()));
  }
}

ClassicalFact parse_fact(std::string kind) {
  std::transform(kind.begin(), kind.end(), kind.begin(), ::tolower);
  if (kind == "inverse") return ClassicalFact::kInverse;
  if (kind == "negation") return ClassicalFact::kNegation;
  if (kind == "vanish") return ClassicalFact::kVanish;
  if (kind == "one" || kind == "one_formula") return ClassicalFact::kOneFormula;
  throw UsageError("unknown fact '" + kind + "' (inverse, negation, vanish, one)");
}

int cmd_verify(const std::string& identity, std::vector<std::string> params) {
  std::vector<Int> v;
  std::string extra;
  Evaluation e;
  if (identity == "fact") {
    if (params.empty()) throw UsageError("verify fact takes KIND a b");
    const ClassicalFact kind = parse_fact(params.front());
    params.erase(params.begin());
    expect_arity(identity, params, 2);
    for (const auto& p : params) v.push_back(parse_int(p));
    e = classical_fact_check(kind, v[0], v[1]);
    extra = " fact=" + std::string(fact_label(kind));
  } else {
    for (const auto& p : params) v.push_back(parse_int(p));
    if (identity == "reciprocity") {
      expect_arity(identity, params, 2);
      e = reciprocity_check(v[0], v[1]);
    } else if (identity == "duzhang") {
      expect_arity(identity, params, 2);
      e = du_zhang_check(v[0], v[1]);
    } else if (identity == "theorem1") {
      expect_arity(identity, params, 3);
      e = theorem1_check(Theorem1Instance::make(v[0], v[1], v[2]));
    } else if (identity == "corollary2") {
      expect_arity(identity, params, 3);
      auto c2 = corollary2_check(Theorem1Instance::make(v[0], v[1], v[2]));
      e = std::move(c2.eval);
      extra = " branch=" + std::string(branch_label(c2.branch));
    } else if (identity == "threeterm") {
      expect_arity(identity, params, 4);
      const auto w = ThreeTermWitness::make(v[0], v[1], v[2], v[3]);
      e = three_term_check(w);
      extra = " q=" + w.q().get_str() + " j=" + w.j().get_str() + " k=" + w.k().get_str() +
              " r=" + w.r().get_str();
    } else if (identity == "eq22") {
      expect_arity(identity, params, 3);
      const auto inst = Eq22Instance::make(v[0], v[1], v[2]);
      e = girstmair_th4_check(inst);
      extra = " c=" + inst.c().get_str();
    } else {
      throw UsageError("unknown identity '" + identity + "'");
    }
  }
  std::cout << identity << extra << " lhs=" << e.lhs << " rhs=" << e.rhs
            << " residual=" << e.residual() << '\n';
  return e.holds() ? kExitOk : kExitFalsified;
}

int cmd_scan(const std::string& identity, const ScanOptions& options, const std::string& format) {
  const auto id = parse_scan_identity(identity);
  if (!id) throw UsageError("unknown scan identity '" + identity + "'");
  const ScanReport report = run_scan(*id, options);
  if (format == "json") {
    write_json(std::cout, report.rows);
  } else {
    write_csv(std::cout, report.rows);
  }
  std::cerr << report.identity << ": " << report.instances_checked << " instances, "
            << report.failures.size() << " failures, "
            << std::chrono::duration<double>(report.wall_time).count() << " s\n";
  if (*id == ScanIdentity::kCorollary2) {
    for (std::string_view label : {"B_PM1", "B_PLUS_A", "B_MINUS_A"}) {
      const auto n = std::count_if(report.rows.begin(), report.rows.end(),
                                   [&](const ScanRow& r) { return r.branch == label; });
      std::cerr << "  " << label << ": " << n << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitFalsified;
}

int cmd_admissible(u64 max) {
  for (u64 t = 1; t <= max; ++t) {
    const Admissibility adm = is_admissible(t);
    if (!adm.admissible) continue;
    std::cout << t << ':';
    for (u64 r : adm.witness->roots) std::cout << ' ' << r;
    std::cout << '\n';
  }
  return kExitOk;
}

struct Timing {
  double median_ns = 0;
  double mean_ns = 0;
};

Timing summarize(std::vector<double> ns) {
  Timing out;
  if (ns.empty()) return out;
  std::sort(ns.begin(), ns.end());
  const std::size_t n = ns.size();
  out.median_ns = n % 2 ? ns[n / 2] : (ns[n / 2 - 1] + ns[n / 2]) / 2;
  out.mean_ns = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(n);
  return out;
}

int cmd_bench(unsigned bits, unsigned samples, unsigned long seed) {
  constexpr long kNaiveCutoff = 1'000'000;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  std::vector<double> fast_ns, naive_ns, fast_on_naive_ns;
  const Int top = Int(1) << (bits - 1);
  for (unsigned i = 0; i < samples; ++i) {
    const Int b = top + rng.get_z_bits(bits - 1);
    Int a;
    do {
      a = rng.get_z_range(b);
    } while (gcd(a, b) != 1);
    const SumArgs args = SumArgs::make(a, b);

    auto t0 = std::chrono::steady_clock::now();
    const Rat fast = dedekind_sum_fast(args);
    auto t1 = std::chrono::steady_clock::now();
    const double fast_time = std::chrono::duration<double, std::nano>(t1 - t0).count();
    fast_ns.push_back(fast_time);

    if (b <= kNaiveCutoff) {
      t0 = std::chrono::steady_clock::now();
      const Rat naive = dedekind_sum_naive(args);
      t1 = std::chrono::steady_clock::now();
      naive_ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
      fast_on_naive_ns.push_back(fast_time);
      if (naive != fast) {
        std::cerr << "mismatch at a=" << a << " b=" << b << '\n';
        return kExitFalsified;
      }
    }
  }
  const Timing fast = summarize(fast_ns);
  std::cout << "bits=" << bits << " samples=" << samples << '\n';
  std::cout << "fast  median_ns=" << fast.median_ns << " mean_ns=" << fast.mean_ns << '\n';
  if (naive_ns.empty()) {
    std::cout << "naive skipped (b > " << kNaiveCutoff << ")\n";
  } else {
    const Timing naive = summarize(naive_ns);
    const Timing paired = summarize(fast_on_naive_ns);
    std::cout << "naive median_ns=" << naive.median_ns << " mean_ns=" << naive.mean_ns
              << " n=" << naive_ns.size() << '\n';
    std::cout << "speedup=" << naive.mean_ns / std::max(paired.mean_ns, 1.0) << "x\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dedekind sums and reciprocity identity checks"};
  app.require_subcommand(1);

  std::string a_text, b_text;
  bool naive = false;
  auto* eval = app.add_subcommand("eval", "Print S(a, b) = 12 s(a, b) as num/den");
  eval->add_option("a", a_text, "integer a")->required();
  eval->add_option("b", b_text, "natural b, coprime to a")->required();
  eval->add_flag("--naive", naive, "use the O(b) definition");

  std::string identity;
  std::vector<std::string> params;
  auto* verify = app.add_subcommand(
      "verify",
      "Check one instance: reciprocity a b | duzhang a b | theorem1 t a b | corollary2 t a b |\n"
      "threeterm a b c d | eq22 a b t | fact {inverse,negation,vanish,one} a b");
  verify->add_option("identity", identity)->required();
  verify->add_option("params", params);
  verify->prefix_command();

  ScanOptions scan_options;
  std::string scan_identity, format = "csv";
  unsigned long t_max = 1, b_max = 1, multiplier = 1;
  auto* scan = app.add_subcommand("scan", "Sweep an identity over a range of instances");
  scan->add_option("identity", scan_identity, "reciprocity | duzhang | theorem1 | corollary2 | eq22")
      ->required();
  scan->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
  scan->add_option("--b-max", b_max)->check(CLI::PositiveNumber);
  scan->add_option("--multiplier", multiplier, "a ranges over [1, multiplier * t]")
      ->check(CLI::PositiveNumber);
  scan->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--jobs", scan_options.jobs)->check(CLI::PositiveNumber);

  unsigned long admissible_max = 1;
  auto* admissible = app.add_subcommand("admissible", "List t <= max with a^2 == -1 (mod t) solvable");
  admissible->add_option("--max", admissible_max)->required()->check(CLI::PositiveNumber);

  unsigned bits = 20, samples = 100;
  unsigned long seed = 1;
  auto* bench = app.add_subcommand("bench", "Time the fast evaluator against the definition");
  bench->add_option("--bits", bits)->check(CLI::Range(2u, 1u << 20));
  bench->add_option("--samples", samples)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(a_text, b_text, naive);
    if (*verify) return cmd_verify(identity, params);
    if (*scan) {
      scan_options.t_max = t_max;
      scan_options.b_max = b_max;
      scan_options.multiplier = multiplier;
      return cmd_scan(scan_identity, scan_options, format);
    }
    if (*admissible) return cmd_admissible(admissible_max);
    if (*bench) return cmd_bench(bits, samples, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
