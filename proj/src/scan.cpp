#include "dedekind/scan.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <thread>

namespace dedekind {

namespace {

struct Task {
  u64 t;
  u64 a;
  u64 b;
};

std::vector<Task> collect_tasks(ScanIdentity id, const ScanOptions& opt) {
  std::vector<Task> tasks;
  switch (id) {
    case ScanIdentity::kReciprocity:
    case ScanIdentity::kDuZhang: {
      const bool odd_only = id == ScanIdentity::kDuZhang;
      for (u64 a = 1; a <= opt.b_max; ++a) {
        if (odd_only && a % 2 == 0) continue;
        for (u64 b = 1; b <= opt.b_max; ++b) {
          if (odd_only && b % 2 == 0) continue;
          if (std::gcd(a, b) == 1) tasks.push_back({0, a, b});
        }
      }
      break;
    }
    case ScanIdentity::kTheorem1:
    case ScanIdentity::kCorollary2:
    case ScanIdentity::kEq22: {
      Theorem1Stream stream(opt.t_max, opt.b_max, opt.multiplier);
      while (auto inst = stream.next()) {
        tasks.push_back({inst->t().get_ui(), inst->a().get_ui(), inst->b().get_ui()});
      }
      break;
    }
  }
  return tasks;
}

// nullopt when the instance is outside the identity's domain (corollary2
// with no matching congruence class).
std::optional<ScanRow> evaluate(ScanIdentity id, const Task& task) {
  ScanRow row;
  row.identity = std::string(scan_label(id));
  row.a = task.a;
  row.b = task.b;
  const Int a(task.a), b(task.b), t(task.t);
  Evaluation e;
  switch (id) {
    case ScanIdentity::kReciprocity:
      e = reciprocity_check(a, b);
      break;
    case ScanIdentity::kDuZhang:
      e = du_zhang_check(a, b);
      break;
    case ScanIdentity::kTheorem1:
      row.t = task.t;
      e = theorem1_check(Theorem1Instance::make(t, a, b));
      break;
    case ScanIdentity::kCorollary2: {
      row.t = task.t;
      const auto inst = Theorem1Instance::make(t, a, b);
      try {
        auto c2 = corollary2_check(inst);
        row.branch = std::string(branch_label(c2.branch));
        e = std::move(c2.eval);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::kNoBranchApplies) return std::nullopt;
        throw;
      }
      break;
    }
    case ScanIdentity::kEq22:
      row.t = task.t;
      e = girstmair_th4_check(Eq22Instance::make(a, b, t));
      break;
  }
  row.lhs = std::move(e.lhs);
  row.rhs = std::move(e.rhs);
  return row;
}

std::vector<std::optional<ScanRow>> evaluate_block(ScanIdentity id, std::span<const Task> block) {
  std::vector<std::optional<ScanRow>> out;
  out.reserve(block.size());
  for (const Task& task : block) out.push_back(evaluate(id, task));
  return out;
}

}  // namespace

std::string_view scan_label(ScanIdentity id) {
  switch (id) {
    case ScanIdentity::kReciprocity: return "reciprocity";
    case ScanIdentity::kDuZhang: return "duzhang";
    case ScanIdentity::kTheorem1: return "theorem1";
    case ScanIdentity::kCorollary2: return "corollary2";
    case ScanIdentity::kEq22: return "eq22";
  }
  return "?";
}

std::optional<ScanIdentity> parse_scan_identity(std::string_view label) {
  for (ScanIdentity id : {ScanIdentity::kReciprocity, ScanIdentity::kDuZhang,
                          ScanIdentity::kTheorem1, ScanIdentity::kCorollary2,
                          ScanIdentity::kEq22}) {
    if (scan_label(id) == label) return id;
  }
  return std::nullopt;
}

ScanReport run_scan(ScanIdentity id, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = collect_tasks(id, options);

  // Contiguous blocks, one per worker, concatenated in block order.
  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::vector<std::optional<ScanRow>>> parts(jobs);
  const std::span<const Task> all(tasks);
  const std::size_t chunk = (tasks.size() + jobs - 1) / jobs;
  if (jobs == 1) {
    parts[0] = evaluate_block(id, all);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      const std::size_t lo = std::min(tasks.size(), w * chunk);
      const std::size_t hi = std::min(tasks.size(), lo + chunk);
      workers.emplace_back([&parts, id, w, block = all.subspan(lo, hi - lo)] {
        parts[w] = evaluate_block(id, block);
      });
    }
  }

  ScanReport report;
  report.identity = std::string(scan_label(id));
  for (auto& part : parts) {
    for (auto& row : part) {
      if (!row) continue;
      ++report.instances_checked;
      if (!row->residual_zero()) report.failures.push_back(*row);
      report.rows.push_back(std::move(*row));
    }
  }
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "identity,t,a,b,lhs_num,lhs_den,rhs_num,rhs_den,residual_zero\n";
  for (const ScanRow& r : rows) {
    os << r.identity << ',';
    if (r.t) os << *r.t;
    os << ',' << r.a << ',' << r.b << ',' << r.lhs.num().get_str() << ','
       << r.lhs.den().get_str() << ',' << r.rhs.num().get_str() << ',' << r.rhs.den().get_str()
       << ',' << (r.residual_zero() ? "true" : "false") << '\n';
  }
}

namespace {

nlohmann::ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

void write_json(std::ostream& os, const std::vector<ScanRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const ScanRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["identity"] = r.identity;
    if (r.t) obj["t"] = *r.t;
    obj["a"] = r.a;
    obj["b"] = r.b;
    obj["lhs_num"] = int_json(r.lhs.num());
    obj["lhs_den"] = int_json(r.lhs.den());
    obj["rhs_num"] = int_json(r.rhs.num());
    obj["rhs_den"] = int_json(r.rhs.den());
    obj["residual_zero"] = r.residual_zero();
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

}  // namespace dedekind
