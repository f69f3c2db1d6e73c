#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chainpaths/enumeration.hpp"

namespace chainpaths {

// Exhaustive verification suites: each formula or structural claim is confronted with
// brute-force enumeration at small n. Failures never throw; they become report entries
// carrying the first counterexample found.

enum class CheckStatus {
  pass,
  fail,
  // Exploratory check whose underlying statement is ambiguous; a mismatch is reported with a
  // minimal counterexample but does not fail the run.
  paper_ambiguity,
};

std::string_view status_name(CheckStatus s) noexcept;

struct CheckResult {
  std::string check_id;
  int n_lo = 0;
  int n_hi = 0;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> counterexample;
  std::optional<std::string> note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept;
  std::size_t failure_count() const noexcept;
  const CheckResult* find(std::string_view check_id) const noexcept;
  void append(const VerificationReport& other);

  /// Deterministic JSON document: {"passed": bool, "checks": [...]}.
  std::string to_json() const;
};

/// Deliberate faults used to show that the suites can fail.
enum class Fixture {
  none,
  perturb_r,      // formula side reports r_1 = 3
  drop_empty_qp,  // the empty map is removed from QP before the product-set check
};

std::optional<Fixture> parse_fixture(std::string_view name) noexcept;

struct HarnessOptions {
  Fixture fixture = Fixture::none;
  int guard = kDefaultSizeGuard;
};

/// Class orders and path-family sizes against r_n, s_n, Catalan, D(n,n) and c_n.
VerificationReport verify_orders(int n_max, const HarnessOptions& opts = {});
/// Round trips through the path bijection, plus class and statistic transport.
VerificationReport verify_bijection(int n_max, const HarnessOptions& opts = {});
/// Statistic census against the nine F/G/J families.
VerificationReport verify_fgj(int n_max, const HarnessOptions& opts = {});
/// Closure of the six classes, the Q/QP product-set identity, associativity (n <= 4) and the
/// Q -> QP bijection (checked up to phi_n_max).
VerificationReport verify_semigroup(int n_max, int phi_n_max, const HarnessOptions& opts = {});
/// Idempotent counts in PC_n, the per-image-size recurrence, the idempotent path shape over
/// PO_n (n <= shape_n_max) and the T_n / P_n idempotent formulas (n <= brute_n_max).
VerificationReport verify_idempotents(int n_max, int shape_n_max, int brute_n_max,
                                      const HarnessOptions& opts = {});
/// Formula-only agreement checks; nothing is enumerated.
VerificationReport verify_consistency(int n_max, const HarnessOptions& opts = {});

struct SuiteCaps {
  int orders = 7;
  int bijection = 7;
  int fgj = 7;
  int semigroup = 5;
  int phi = 6;
  int idempotents = 8;
  int shape = 6;
  int brute_tp = 5;
  int consistency = 30;
};

/// All suites, run concurrently; the report lists them in a fixed order.
VerificationReport verify_all(const SuiteCaps& caps = {}, const HarnessOptions& opts = {});

}  // namespace chainpaths
