#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/admissible.hpp"

namespace dedekind {

enum class ScanIdentity { kReciprocity, kDuZhang, kTheorem1, kCorollary2, kEq22 };

std::string_view scan_label(ScanIdentity id);
std::optional<ScanIdentity> parse_scan_identity(std::string_view label);

struct ScanOptions {
  u64 t_max = 1;
  u64 b_max = 1;
  u64 multiplier = 1;  // a-range multiplier for the Theorem 1 instance stream
  unsigned jobs = 1;
};

struct ScanRow {
  std::string identity;
  std::optional<u64> t;
  u64 a = 0;
  u64 b = 0;
  Rat lhs;
  Rat rhs;
  std::optional<std::string> branch;  // corollary2 only; not part of the table

  bool residual_zero() const { return lhs == rhs; }
};

struct ScanReport {
  std::string identity;
  std::size_t instances_checked = 0;
  std::vector<ScanRow> rows;
  std::vector<ScanRow> failures;
  std::chrono::nanoseconds wall_time{0};

  bool ok() const { return failures.empty(); }
};

// reciprocity: coprime 1 <= a, b <= b_max. duzhang: the odd ones among them.
// theorem1, eq22: the Theorem1Stream(t_max, b_max, multiplier) instances.
// corollary2: those stream instances for which a branch applies.
// Rows come back in instance order whatever the value of jobs.
ScanReport run_scan(ScanIdentity id, const ScanOptions& options);

// identity,t,a,b,lhs_num,lhs_den,rhs_num,rhs_den,residual_zero
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);
// Array of objects with the CSV keys; t is omitted where it does not apply.
void write_json(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace dedekind
