#include "chainpaths/counting.hpp"

#include <array>
#include <sstream>

#include "chainpaths/errors.hpp"

namespace chainpaths {

namespace {

void require(bool ok, std::string_view what, int n, std::optional<int> k = std::nullopt) {
  if (ok) return;
  std::string msg = std::string(what) + ": argument out of range (n=" + std::to_string(n);
  if (k) msg += ", k=" + std::to_string(*k);
  msg += ")";
  throw Error(ErrorCode::invalid_argument, msg);
}

std::vector<BigCount> schroeder_row(int n_max) {
  std::vector<BigCount> r{1, 2};
  r.resize(static_cast<std::size_t>(std::max(n_max, 1)) + 1);
  // (m+2) r_{m+1} = 3(2m+1) r_m - (m-1) r_{m-1}
  for (int m = 1; m < n_max; ++m) {
    const BigCount rhs = BigCount(3 * (2 * m + 1)) * r[m] - BigCount(m - 1) * r[m - 1];
    r[m + 1] = exact_div(rhs, m + 2, "large Schroeder recurrence");
  }
  r.resize(static_cast<std::size_t>(n_max) + 1);
  return r;
}

// G(m,0) = 1, G(m,1) = 2^m - 1, G(m,m) = top(m), and for 2 <= k < m
// G(m,k) = 2 G(m-1,k) - G(m-1,k-1) + G(m,k-1).
template <class Top>
std::vector<std::vector<BigCount>> g_triangle(int n_max, Top top) {
  std::vector<std::vector<BigCount>> g(static_cast<std::size_t>(n_max) + 1);
  g[0] = {1};
  for (int m = 1; m <= n_max; ++m) {
    auto& row = g[m];
    row.resize(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    row[1] = power(2, static_cast<unsigned>(m)) - 1;
    for (int k = 2; k < m; ++k) {
      row[k] = 2 * g[m - 1][k] - g[m - 1][k - 1] + row[k - 1];
    }
    if (m >= 2) row[m] = top(m);
  }
  return g;
}

}  // namespace

BigCount schroeder_large(int n) {
  require(n >= 0, "schroeder_large", n);
  return schroeder_row(n)[n];
}

BigCount schroeder_large_closed(int n) {
  require(n >= 0, "schroeder_large_closed", n);
  BigCount sum = 0;
  for (int r = 0; r <= n; ++r) sum += binomial(n + 1, n - r) * binomial(n + r, r);
  return exact_div(sum, n + 1, "large Schroeder binomial sum");
}

BigCount schroeder_small(int n) {
  require(n >= 0, "schroeder_small", n);
  if (n == 0) return 1;
  return exact_div(schroeder_large(n), 2, "small Schroeder halving");
}

BigCount catalan(int n) {
  require(n >= 0, "catalan", n);
  return exact_div(binomial(2 * n, n), n + 1, "Catalan number");
}

BigCount delannoy(int n, int k) {
  require(n >= 0 && k >= 0, "delannoy", n, k);
  // sum_r C(k,r) C(n+k-r, k); terms with r > min(n, k) vanish.
  BigCount sum = 0;
  for (int r = 0; r <= n; ++r) sum += binomial(k, r) * binomial(n + k - r, k);
  return sum;
}

BigCount po_order(int n) {
  require(n >= 0, "po_order", n);
  std::vector<BigCount> c{1, 2};
  // (2m-1)(m+1) c_{m+1} = 4(3m^2-1) c_m - (2m+1)(m-1) c_{m-1}
  for (int m = 1; m < n; ++m) {
    const BigCount rhs =
        BigCount(4 * (3 * m * m - 1)) * c[m] - BigCount((2 * m + 1) * (m - 1)) * c[m - 1];
    c.push_back(exact_div(rhs, (2 * m - 1) * (m + 1), "PO order recurrence"));
  }
  return c[n];
}

BigCount f_pc(int n, int r) {
  require(n >= 1 && r >= 0 && r <= n, "f_pc", n, r);
  return exact_div(binomial(n, r) * binomial(n + r, n - 1), n, "f_pc");
}

std::vector<std::vector<BigCount>> g_pc_triangle(int n_max) {
  const auto r = schroeder_row(std::max(n_max - 1, 0));
  return g_triangle(n_max, [&](int m) { return r[m - 1]; });
}

std::vector<std::vector<BigCount>> g_po_triangle(int n_max) {
  const auto r = schroeder_row(std::max(n_max - 1, 0));
  return g_triangle(n_max, [&](int m) { return BigCount(m) * r[m - 1]; });
}

BigCount g_pc(int n, int k) {
  require(n >= 1 && k >= 0 && k <= n, "g_pc", n, k);
  return g_pc_triangle(n)[n][k];
}

BigCount g_c(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n, "g_c", n, k);
  return exact_div(BigCount(n - k + 1) * binomial(n + k - 2, n - 1), n, "g_c");
}

BigCount j_c(int n, int r) {
  require(n >= 1 && r >= 1 && r <= n, "j_c", n, r);
  return exact_div(binomial(n, r) * binomial(n - 1, r - 1), n - r + 1, "j_c");
}

BigCount f_po(int n, int r) {
  require(n >= 1 && r >= 0 && r <= n, "f_po", n, r);
  return binomial(n, r) * binomial(n + r - 1, n - 1);
}

BigCount g_po(int n, int k) {
  require(n >= 1 && k >= 0 && k <= n, "g_po", n, k);
  return g_po_triangle(n)[n][k];
}

std::vector<std::vector<BigCount>> j_po_triangle(int n_max) {
  std::vector<std::vector<BigCount>> j(static_cast<std::size_t>(n_max) + 1);
  j[0] = {1};
  for (int m = 1; m <= n_max; ++m) {
    auto& row = j[m];
    row.resize(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    row[m] = 1;
    // C(m-1,r-1) J(m,r) = (2(m-r+1)/(m-r)) C(m,r-1) J(m-1,r) + C(m,r) J(m-1,r-1), 1 <= r < m
    for (int r = 1; r < m; ++r) {
      const BigRational coeff(BigCount(2 * (m - r + 1)), BigCount(m - r));
      const BigRational rhs = coeff * BigRational(binomial(m, r - 1) * j[m - 1][r]) +
                              BigRational(binomial(m, r) * j[m - 1][r - 1]);
      const BigRational value = rhs / BigRational(binomial(m - 1, r - 1));
      if (boost::multiprecision::denominator(value) != 1) {
        std::ostringstream msg;
        msg << "j_po(" << m << "," << r << ") = " << value << " is not an integer";
        throw Error(ErrorCode::non_integral_recurrence, msg.str());
      }
      row[r] = boost::multiprecision::numerator(value);
    }
  }
  return j;
}

BigCount j_po(int n, int r) {
  require(n >= 1 && r >= 0 && r <= n, "j_po", n, r);
  return j_po_triangle(n)[n][r];
}

BigCount g_o(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n, "g_o", n, k);
  return binomial(n + k - 2, k - 1);
}

BigCount j_o(int n, int r) {
  require(n >= 1 && r >= 1 && r <= n, "j_o", n, r);
  return binomial(n, r) * binomial(n - 1, r - 1);
}

std::vector<std::vector<BigCount>> e_nr_triangle(int n_max) {
  std::vector<std::vector<BigCount>> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = {1};
  for (int m = 1; m <= n_max; ++m) {
    auto& row = e[m];
    row.resize(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    row[m] = 1;
    for (int r = 1; r < m; ++r) row[r] = 2 * e[m - 1][r] + e[m - 1][r - 1];
  }
  return e;
}

BigCount e_nr(int n, int r) {
  require(n >= 0 && r >= 0 && r <= n, "e_nr", n, r);
  return e_nr_triangle(n)[n][r];
}

BigCount e_total(int n) {
  require(n >= 0, "e_total", n);
  return exact_div(power(3, static_cast<unsigned>(n)) + 1, 2, "idempotents of PC_n");
}

BigCount e_total_recurrence(int n) {
  require(n >= 0, "e_total_recurrence", n);
  BigCount e = 1;
  for (int m = 1; m <= n; ++m) e = 3 * e - 1;
  return e;
}

BigCount idem_tn(int n) {
  require(n >= 1, "idem_tn", n);
  BigCount sum = 0;
  for (int r = 1; r <= n; ++r) sum += binomial(n, r) * power(r, static_cast<unsigned>(n - r));
  return sum;
}

BigCount idem_pn(int n) {
  require(n >= 1, "idem_pn", n);
  BigCount sum = 0;
  for (int r = 1; r <= n + 1; ++r) {
    sum += binomial(n, r - 1) * power(r, static_cast<unsigned>(n + 1 - r));
  }
  return sum;
}

namespace {

constexpr std::array<FamilyInfo, 19> kFamilies{{
    {FamilyId::r, "r", false, 0, 0},
    {FamilyId::s, "s", false, 0, 0},
    {FamilyId::cat, "catalan", false, 0, 0},
    {FamilyId::del2, "delannoy", false, 0, 0},
    {FamilyId::delgen, "delannoy-nk", true, 0, 0},
    {FamilyId::c_po, "c-po", false, 0, 0},
    {FamilyId::f_pc, "f-pc", true, 1, 0},
    {FamilyId::g_pc, "g-pc", true, 1, 0},
    {FamilyId::g_c, "g-c", true, 1, 1},
    {FamilyId::j_c, "j-c", true, 1, 1},
    {FamilyId::f_po, "f-po", true, 1, 0},
    {FamilyId::g_po, "g-po", true, 1, 0},
    {FamilyId::j_po, "j-po", true, 1, 0},
    {FamilyId::g_o, "g-o", true, 1, 1},
    {FamilyId::j_o, "j-o", true, 1, 1},
    {FamilyId::e_pc, "e-pc", false, 0, 0},
    {FamilyId::e_nr, "e-nr", true, 0, 0},
    {FamilyId::e_tn, "e-tn", false, 1, 0},
    {FamilyId::e_pn, "e-pn", false, 1, 0},
}};

}  // namespace

std::span<const FamilyInfo> families() noexcept { return kFamilies; }

const FamilyInfo& family_info(FamilyId id) noexcept {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f;
  }
  return kFamilies.front();
}

std::optional<FamilyId> parse_family(std::string_view name) noexcept {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

BigCount evaluate(FamilyId id, int n, std::optional<int> k) {
  const auto& info = family_info(id);
  if (info.two_param != k.has_value()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(info.name) + (info.two_param ? " needs a second parameter k"
                                                         : " takes no second parameter"));
  }
  switch (id) {
    case FamilyId::r: return schroeder_large(n);
    case FamilyId::s: return schroeder_small(n);
    case FamilyId::cat: return catalan(n);
    case FamilyId::del2: return delannoy(n, n);
    case FamilyId::delgen: return delannoy(n, *k);
    case FamilyId::c_po: return po_order(n);
    case FamilyId::f_pc: return f_pc(n, *k);
    case FamilyId::g_pc: return g_pc(n, *k);
    case FamilyId::g_c: return g_c(n, *k);
    case FamilyId::j_c: return j_c(n, *k);
    case FamilyId::f_po: return f_po(n, *k);
    case FamilyId::g_po: return g_po(n, *k);
    case FamilyId::j_po: return j_po(n, *k);
    case FamilyId::g_o: return g_o(n, *k);
    case FamilyId::j_o: return j_o(n, *k);
    case FamilyId::e_pc: return e_total(n);
    case FamilyId::e_nr: return e_nr(n, *k);
    case FamilyId::e_tn: return idem_tn(n);
    case FamilyId::e_pn: return idem_pn(n);
  }
  throw Error(ErrorCode::invalid_argument, "unknown family");
}

std::vector<TableEntry> table(FamilyId id, int n_max) {
  require(n_max >= 0, "table", n_max);
  const auto& info = family_info(id);
  std::vector<TableEntry> out;

  if (!info.two_param) {
    if (id == FamilyId::r) {
      const auto row = schroeder_row(n_max);
      for (int n = 0; n <= n_max; ++n) out.push_back({n, std::nullopt, row[n]});
      return out;
    }
    for (int n = info.min_n; n <= n_max; ++n) out.push_back({n, std::nullopt, evaluate(id, n)});
    return out;
  }

  if (id == FamilyId::delgen) {
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n_max; ++k) out.push_back({n, k, delannoy(n, k)});
    }
    return out;
  }

  // Recurrence families read every entry from one triangle.
  std::vector<std::vector<BigCount>> tri;
  switch (id) {
    case FamilyId::g_pc: tri = g_pc_triangle(n_max); break;
    case FamilyId::g_po: tri = g_po_triangle(n_max); break;
    case FamilyId::j_po: tri = j_po_triangle(n_max); break;
    case FamilyId::e_nr: tri = e_nr_triangle(n_max); break;
    default: break;
  }
  for (int n = info.min_n; n <= n_max; ++n) {
    for (int k = info.min_k; k <= n; ++k) {
      out.push_back({n, k, tri.empty() ? evaluate(id, n, k) : tri[n][k]});
    }
  }
  return out;
}

std::string table_csv(FamilyId id, std::span<const TableEntry> entries) {
  const bool two = family_info(id).two_param;
  std::string out = two ? "n,k,value" : "n,value";
  for (const auto& e : entries) {
    out += '\n';
    out += std::to_string(e.n);
    if (two) out += "," + std::to_string(e.k.value_or(0));
    out += "," + to_decimal(e.value);
  }
  return out;
}

std::string table_json(FamilyId id, std::span<const TableEntry> entries) {
  // Values go out as bare decimal text of any length.
  std::string out = "[";
  if (!family_info(id).two_param) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      out += to_decimal(entries[i].value);
    }
    return out + "]";
  }
  bool first_row = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool row_start = i == 0 || entries[i].n != entries[i - 1].n;
    if (row_start) {
      if (!first_row) out += "],";
      out += '[';
      first_row = false;
    } else {
      out += ',';
    }
    out += to_decimal(entries[i].value);
  }
  if (!first_row) out += ']';
  return out + "]";
}

}  // namespace chainpaths
