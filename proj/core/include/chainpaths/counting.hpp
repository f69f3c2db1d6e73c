#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainpaths/big_count.hpp"

namespace chainpaths {

// Exact closed forms and recurrences for the class orders and their refinements.
//
// Naming of the refined families: f_* counts maps by |Dom|, g_* by k = max(Im) + 1 (k = 0
// is the empty map) and j_* by |Im|. Suffixes name the class: pc, c, po, o.
//
// Every division is checked; a nonzero remainder throws ErrorCode::inexact_division and a
// non-integral rational recurrence throws ErrorCode::non_integral_recurrence. Arguments
// outside a family's range throw ErrorCode::invalid_argument.

/// Large Schroeder numbers r_n by the three-term recurrence.
BigCount schroeder_large(int n);
/// r_n by the binomial sum; independent of schroeder_large.
BigCount schroeder_large_closed(int n);
/// s_0 = 1, s_n = r_n / 2.
BigCount schroeder_small(int n);
BigCount catalan(int n);
/// D(n, k): H/V/D paths from (0,0) to (n,k).
BigCount delannoy(int n, int k);
/// c_n = |PO_n|.
BigCount po_order(int n);

BigCount f_pc(int n, int r);
BigCount g_pc(int n, int k);
BigCount g_c(int n, int k);
BigCount j_c(int n, int r);
BigCount f_po(int n, int r);
BigCount g_po(int n, int k);
BigCount j_po(int n, int r);
BigCount g_o(int n, int k);
BigCount j_o(int n, int r);

/// Idempotents of PC_n with |Im| = r.
BigCount e_nr(int n, int r);
/// |E(PC_n)| = (3^n + 1) / 2.
BigCount e_total(int n);
/// e_0 = 1, e_n = 3 e_{n-1} - 1.
BigCount e_total_recurrence(int n);
/// Idempotents of the full transformation monoid T_n.
BigCount idem_tn(int n);
/// Idempotents of the partial transformation monoid P_n.
BigCount idem_pn(int n);

// Whole triangles, filled once in dependency order. Row m holds k = 0..m (index = k).
// The point functions above read a single entry out of these.
std::vector<std::vector<BigCount>> g_pc_triangle(int n_max);
std::vector<std::vector<BigCount>> g_po_triangle(int n_max);
std::vector<std::vector<BigCount>> j_po_triangle(int n_max);
std::vector<std::vector<BigCount>> e_nr_triangle(int n_max);

enum class FamilyId {
  r, s, cat, del2, delgen, c_po,
  f_pc, g_pc, g_c, j_c,
  f_po, g_po, j_po, g_o, j_o,
  e_pc, e_nr, e_tn, e_pn,
};

struct FamilyInfo {
  FamilyId id;
  std::string_view name;  // CLI spelling, e.g. "g-pc"
  bool two_param;
  int min_n;
  int min_k;  // first valid second parameter (two-parameter families)
};

std::span<const FamilyInfo> families() noexcept;
const FamilyInfo& family_info(FamilyId id) noexcept;
std::optional<FamilyId> parse_family(std::string_view name) noexcept;

/// Dispatches to the function for `id`. `k` is required exactly when the family is two-parameter.
BigCount evaluate(FamilyId id, int n, std::optional<int> k = std::nullopt);

struct TableEntry {
  int n = 0;
  std::optional<int> k;
  BigCount value;

  bool operator==(const TableEntry&) const = default;
};

/// Every valid (n, k) with n <= n_max, row-major. Rows start at the family's min_n; k runs
/// min_k..n, except delgen where k runs 0..n_max.
std::vector<TableEntry> table(FamilyId id, int n_max);

/// `n,value` or `n,k,value` header, one row per entry, '\n' line ends, no trailing newline.
std::string table_csv(FamilyId id, std::span<const TableEntry> entries);
/// One-parameter families: a flat array `[1,1,2]`. Two-parameter families: an array of rows,
/// row i listing k = min_k.. for n = min_n + i. Values are bare decimal integers.
std::string table_json(FamilyId id, std::span<const TableEntry> entries);

}  // namespace chainpaths
