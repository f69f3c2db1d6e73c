#include "chainpaths/harness.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include <json.hpp>

#include "chainpaths/bijection.hpp"
#include "chainpaths/counting.hpp"
#include "chainpaths/errors.hpp"

namespace chainpaths {

namespace {

std::string text(const BigCount& v) { return to_decimal(v); }
std::string text(int v) { return std::to_string(v); }
std::string text(std::size_t v) { return std::to_string(v); }
std::string text(bool v) { return v ? "true" : "false"; }
std::string text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }
std::string text(const ChainMap& m) { return to_display(m); }
std::string text(const std::string& s) { return s; }

// Accumulates one check; keeps only the first counterexample.
class Check {
 public:
  Check(std::string id, int n_lo, int n_hi) : id_(std::move(id)), n_lo_(n_lo), n_hi_(n_hi) {}

  bool failed() const noexcept { return witness_.has_value(); }

  void fail(std::string witness) {
    if (!witness_) witness_ = std::move(witness);
  }

  template <class A, class B>
  bool expect_eq(const std::string& where, const A& expected, const B& actual) {
    if (expected == actual) return true;
    fail(where + " expected " + text(expected) + " got " + text(actual));
    return false;
  }

  // Runs `body`, turning library errors (inexact division, etc.) into a failure entry.
  void run(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  }

  void set_note(std::string note) { note_ = std::move(note); }

  CheckResult finish(CheckStatus on_failure = CheckStatus::fail) && {
    CheckResult r;
    r.check_id = std::move(id_);
    r.n_lo = n_lo_;
    r.n_hi = n_hi_;
    r.status = witness_ ? on_failure : CheckStatus::pass;
    r.counterexample = std::move(witness_);
    r.note = std::move(note_);
    return r;
  }

 private:
  std::string id_;
  int n_lo_;
  int n_hi_;
  std::optional<std::string> witness_;
  std::optional<std::string> note_;
};

std::string at(int n) { return "n=" + std::to_string(n); }
std::string at(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

BigCount class_size(ClassId cls, int n, int guard) {
  BigCount count = 0;
  ClassEnumerator gen(cls, n, guard);
  for ([[maybe_unused]] const auto& m : gen) ++count;
  return count;
}

BigCount path_count(int n, PathFilter filter, int guard) {
  BigCount count = 0;
  PathEnumerator gen(n, filter, guard);
  for ([[maybe_unused]] const auto& p : gen) ++count;
  return count;
}

BigCount histogram_at(const std::map<int, BigCount>& hist, int key) {
  auto it = hist.find(key);
  return it == hist.end() ? BigCount(0) : it->second;
}

// Cayley table of a class under composition; -1 marks a product outside the class.
struct CayleyTable {
  std::vector<ChainMap> elements;
  std::vector<int> product;  // product[i * size + j] = index of elements[i] * elements[j]

  std::size_t size() const { return elements.size(); }
  int at(std::size_t i, std::size_t j) const { return product[i * elements.size() + j]; }
};

CayleyTable cayley(ClassId cls, int n, int guard) {
  CayleyTable t;
  t.elements = enumerate_class(cls, n, guard);
  std::map<ChainMap, int> index;
  for (std::size_t i = 0; i < t.elements.size(); ++i) index.emplace(t.elements[i], static_cast<int>(i));
  t.product.resize(t.size() * t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      auto it = index.find(compose(t.elements[i], t.elements[j]));
      t.product[i * t.size() + j] = it == index.end() ? -1 : it->second;
    }
  }
  return t;
}

}  // namespace

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::paper_ambiguity: return "paper-ambiguity";
  }
  return "fail";
}

bool VerificationReport::all_passed() const noexcept { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  }));
}

const CheckResult* VerificationReport::find(std::string_view check_id) const noexcept {
  for (const auto& c : checks) {
    if (c.check_id == check_id) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = all_passed();
  doc["failures"] = failure_count();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry;
    entry["check_id"] = c.check_id;
    entry["n_range"] = {c.n_lo, c.n_hi};
    entry["status"] = status_name(c.status);
    entry["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nullptr;
    if (c.note) entry["note"] = *c.note;
    arr.push_back(std::move(entry));
  }
  doc["checks"] = std::move(arr);
  return doc.dump(2);
}

std::optional<Fixture> parse_fixture(std::string_view name) noexcept {
  if (name == "none") return Fixture::none;
  if (name == "perturb-r") return Fixture::perturb_r;
  if (name == "drop-empty-qp") return Fixture::drop_empty_qp;
  return std::nullopt;
}

VerificationReport verify_orders(int n_max, const HarnessOptions& opts) {
  VerificationReport report;
  const int guard = opts.guard;

  auto r_formula = [&](int n) {
    BigCount v = schroeder_large(n);
    if (opts.fixture == Fixture::perturb_r && n == 1) v += 1;
    return v;
  };
  auto o_formula = [](int n) {
    BigCount sum = 0;
    for (int r = 1; r <= n; ++r) sum += j_o(n, r);
    return sum;
  };

  struct ClassOrder {
    const char* id;
    ClassId cls;
    int n_lo;
    std::function<BigCount(int)> formula;
  };
  const std::vector<ClassOrder> classes{
      {"orders.pc", ClassId::pc, 0, r_formula},
      {"orders.q", ClassId::q, 1, [](int n) { return schroeder_small(n); }},
      {"orders.qp", ClassId::qp, 1, [](int n) { return schroeder_small(n); }},
      {"orders.c", ClassId::c, 0, [](int n) { return catalan(n); }},
      {"orders.del", ClassId::del, 0, [](int n) { return delannoy(n, n); }},
      {"orders.po", ClassId::po, 0, [](int n) { return po_order(n); }},
      {"orders.o", ClassId::o, 1, o_formula},
  };
  for (const auto& co : classes) {
    Check check(co.id, co.n_lo, n_max);
    check.run([&] {
      for (int n = co.n_lo; n <= n_max && !check.failed(); ++n) {
        check.expect_eq(at(n), class_size(co.cls, n, guard), co.formula(n));
      }
    });
    report.checks.push_back(std::move(check).finish());
  }

  struct PathOrder {
    const char* id;
    PathFilter filter;
    std::function<BigCount(int)> formula;
    const char* note;
  };
  const std::vector<PathOrder> paths{
      {"paths.subdiagonal", {true, false, false}, r_formula, nullptr},
      {"paths.unrestricted", {false, false, false}, [](int n) { return delannoy(n, n); }, nullptr},
      {"paths.subdiagonal_no_diag", {true, true, false}, [](int n) { return catalan(n); }, nullptr},
      {"paths.last_not_h", {false, false, true}, [](int n) { return po_order(n); },
       "observed: paths in the n x n square whose last step is not H number c_n = |PO_n| "
       "(not |PO_{n-1}|)"},
  };
  for (const auto& po : paths) {
    Check check(po.id, 0, n_max);
    check.run([&] {
      for (int n = 0; n <= n_max && !check.failed(); ++n) {
        check.expect_eq(at(n), path_count(n, po.filter, guard), po.formula(n));
      }
    });
    if (po.note) check.set_note(po.note);
    report.checks.push_back(std::move(check).finish());
  }
  return report;
}

VerificationReport verify_bijection(int n_max, const HarnessOptions& opts) {
  VerificationReport report;
  const int guard = opts.guard;

  Check map_rt("bijection.map_roundtrip", 0, n_max);
  Check path_rt("bijection.path_roundtrip", 0, n_max);
  Check dec("bijection.transport.decreasing_subdiagonal", 0, n_max);
  Check full("bijection.transport.full_no_diag", 0, n_max);
  Check bounded("bijection.transport.bounded_last_not_h", 0, n_max);
  Check v_count("bijection.stat.v_count_dom", 0, n_max);
  Check h_seg("bijection.stat.h_segments_im", 0, n_max);
  Check last_h("bijection.stat.last_h_level_max_im", 0, n_max);
  Check subclasses("bijection.subclass_images", 0, n_max);

  auto run_all = [&](const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      map_rt.fail(std::string("exception: ") + e.what());
    }
  };

  run_all([&] {
    for (int n = 0; n <= n_max; ++n) {
      ClassEnumerator maps(ClassId::del, n, guard);
      for (const auto& m : maps) {
        const auto path = map_to_path(m);
        const auto back = path_to_map(path);
        const std::string where = at(n) + " map " + to_display(m) + " path " + path.to_string();
        if (back != m) map_rt.fail(where + " returned " + to_display(back));

        const auto ps = path_stats(path);
        const auto ms = stats(m);
        dec.expect_eq(where + " subdiagonal", is_decreasing(m), is_subdiagonal(path));
        full.expect_eq(where + " no-D", is_full(m), !ps.has_diag);
        const bool image_bounded = !ms.max_im || *ms.max_im <= n - 1;
        bounded.expect_eq(where + " last-not-H", image_bounded, !ps.last_step_is_h);
        v_count.expect_eq(where + " v_count", ms.dom_card, ps.v_count);
        h_seg.expect_eq(where + " h_segments", ms.im_card, ps.h_segments);
        last_h.expect_eq(where + " last_h_level", ms.max_im, ps.last_h_level);
      }

      PathEnumerator paths(n, {}, guard);
      for (const auto& p : paths) {
        const auto again = map_to_path(path_to_map(p));
        if (again != p) path_rt.fail(at(n) + " path " + p.to_string() + " returned " + again.to_string());
      }

      // Each ordinary class maps onto exactly its path family.
      struct Sub {
        ClassId cls;
        PathFilter filter;
      };
      for (const Sub& sub : {Sub{ClassId::pc, {true, false, false}}, Sub{ClassId::c, {true, true, false}},
                             Sub{ClassId::po, {false, false, true}}, Sub{ClassId::o, {false, true, true}}}) {
        std::vector<LatticePath> images;
        for (const auto& m : enumerate_class(sub.cls, n, guard)) images.push_back(map_to_path(m));
        std::sort(images.begin(), images.end());
        auto expected = enumerate_paths(n, sub.filter, guard);
        std::sort(expected.begin(), expected.end());
        if (images != expected) {
          subclasses.fail(at(n) + " class " + std::string(class_name(sub.cls)) + " maps onto " +
                          text(images.size()) + " paths, family has " + text(expected.size()));
        }
      }
    }
  });

  for (Check* c : {&map_rt, &path_rt, &dec, &full, &bounded, &v_count, &h_seg, &last_h, &subclasses}) {
    report.checks.push_back(std::move(*c).finish());
  }

  // The worked examples: maps written in two-row form and their paths.
  Check examples("bijection.worked_examples", 3, 7);
  examples.run([&] {
    struct Example {
      int n;
      int cod;
      std::vector<MapPair> pairs;
      const char* path;
    };
    const std::vector<Example> cases{
        {4, 4, {{1, 1}, {3, 1}}, "DHHVDV"},
        {4, 4, {{0, 0}, {2, 2}, {3, 2}}, "HVDHHVV"},
        {7, 7, {{0, 0}, {2, 0}, {3, 0}, {5, 4}, {6, 4}}, "HHHVDVVHHDVV"},
        {4, 5, {{0, 0}, {1, 4}, {3, 4}}, "HVVDVHH"},
        {7, 8, {{0, 0}, {2, 3}, {3, 3}, {5, 4}, {6, 7}}, "HVDVHHVHDVVH"},
        {3, 4, {}, "DDD"},
    };
    for (const auto& ex : cases) {
      const auto m = ChainMap::make(ex.n, ex.cod, ex.pairs);
      const auto path = map_to_path(m);
      examples.expect_eq(std::string("map ") + to_display(m), std::string(ex.path), path.to_string());
      const auto back = path_to_map(LatticePath::parse(ex.path, ex.n));
      examples.expect_eq(std::string("path ") + ex.path, m.widened(), back);
    }
  });
  report.checks.push_back(std::move(examples).finish());
  return report;
}

VerificationReport verify_fgj(int n_max, const HarnessOptions& opts) {
  VerificationReport report;
  const int guard = opts.guard;

  struct Family {
    const char* id;
    ClassId cls;
    Statistic stat;
    int k_lo;
    BigCount (*formula)(int, int);
  };
  const std::vector<Family> fams{
      {"fgj.f_pc", ClassId::pc, Statistic::dom_card, 0, &f_pc},
      {"fgj.g_pc", ClassId::pc, Statistic::g_bucket, 0, &g_pc},
      {"fgj.g_c", ClassId::c, Statistic::g_bucket, 1, &g_c},
      {"fgj.j_c", ClassId::c, Statistic::im_card, 1, &j_c},
      {"fgj.f_po", ClassId::po, Statistic::dom_card, 0, &f_po},
      {"fgj.g_po", ClassId::po, Statistic::g_bucket, 0, &g_po},
      {"fgj.j_po", ClassId::po, Statistic::im_card, 0, &j_po},
      {"fgj.g_o", ClassId::o, Statistic::g_bucket, 1, &g_o},
      {"fgj.j_o", ClassId::o, Statistic::im_card, 1, &j_o},
  };
  for (const auto& fam : fams) {
    Check check(fam.id, 1, n_max);
    check.run([&] {
      for (int n = 1; n <= n_max && !check.failed(); ++n) {
        const auto hist = census(fam.cls, n, fam.stat, guard);
        for (const auto& [key, count] : hist) {
          if (key < fam.k_lo || key > n) check.fail(at(n, key) + " census has " + text(count) + " outside the formula range");
        }
        for (int k = fam.k_lo; k <= n; ++k) check.expect_eq(at(n, k), histogram_at(hist, k), fam.formula(n, k));
      }
    });
    report.checks.push_back(std::move(check).finish());
  }

  // The stated initial conditions of the recurrence-defined families, read off the census.
  Check base("fgj.recurrence_base_cases", 1, n_max);
  base.run([&] {
    const auto r = [](int n) { return schroeder_large(n); };
    for (int n = 1; n <= n_max && !base.failed(); ++n) {
      const auto g_pc_hist = census(ClassId::pc, n, Statistic::g_bucket, guard);
      base.expect_eq(at(n, 0) + " G_pc(n,0)", BigCount(1), histogram_at(g_pc_hist, 0));
      base.expect_eq(at(n, 1) + " G_pc(n,1)", power(2, static_cast<unsigned>(n)) - 1, histogram_at(g_pc_hist, 1));
      base.expect_eq(at(n, n) + " G_pc(n,n)", r(n - 1), histogram_at(g_pc_hist, n));

      const auto g_po_hist = census(ClassId::po, n, Statistic::g_bucket, guard);
      base.expect_eq(at(n, 0) + " G_po(n,0)", BigCount(1), histogram_at(g_po_hist, 0));
      base.expect_eq(at(n, 1) + " G_po(n,1)", power(2, static_cast<unsigned>(n)) - 1, histogram_at(g_po_hist, 1));
      base.expect_eq(at(n, n) + " G_po(n,n)", BigCount(n) * r(n - 1), histogram_at(g_po_hist, n));

      const auto j_po_hist = census(ClassId::po, n, Statistic::im_card, guard);
      base.expect_eq(at(n, 0) + " J_po(n,0)", BigCount(1), histogram_at(j_po_hist, 0));
      base.expect_eq(at(n, n) + " J_po(n,n)", BigCount(1), histogram_at(j_po_hist, n));
    }
  });
  report.checks.push_back(std::move(base).finish());
  return report;
}

VerificationReport verify_semigroup(int n_max, int phi_n_max, const HarnessOptions& opts) {
  VerificationReport report;
  const int guard = opts.guard;

  const std::vector<ClassId> closed{ClassId::pc, ClassId::c, ClassId::po, ClassId::o, ClassId::q, ClassId::qp};
  for (ClassId cls : closed) {
    Check check("semigroup.closure." + std::string(class_name(cls)), 1, n_max);
    check.run([&] {
      for (int n = 1; n <= n_max && !check.failed(); ++n) {
        const auto t = cayley(cls, n, guard);
        for (std::size_t i = 0; i < t.size() && !check.failed(); ++i) {
          for (std::size_t j = 0; j < t.size(); ++j) {
            if (t.at(i, j) < 0) {
              check.fail(at(n) + " " + to_display(t.elements[i]) + " * " + to_display(t.elements[j]) + " = " +
                         to_display(compose(t.elements[i], t.elements[j])) + " leaves the class");
              break;
            }
          }
        }
      }
    });
    report.checks.push_back(std::move(check).finish());
  }

  Check products("semigroup.q_qp_product_sets", 1, n_max);
  products.run([&] {
    for (int n = 1; n <= n_max && !products.failed(); ++n) {
      const auto q = enumerate_class(ClassId::q, n, guard);
      auto qp_list = enumerate_class(ClassId::qp, n, guard);
      if (opts.fixture == Fixture::drop_empty_qp) {
        std::erase_if(qp_list, [](const ChainMap& m) { return m.empty(); });
      }
      const std::set<ChainMap> qp(qp_list.begin(), qp_list.end());
      std::set<ChainMap> left;   // Q * Q'
      std::set<ChainMap> right;  // Q' * Q
      for (const auto& f : q) {
        for (const auto& g : qp) {
          left.insert(compose(f, g));
          right.insert(compose(g, f));
        }
      }
      for (const auto* side : {&left, &right}) {
        const char* label = side == &left ? "Q*Q'" : "Q'*Q";
        std::vector<ChainMap> extra;
        std::vector<ChainMap> missing;
        std::set_difference(side->begin(), side->end(), qp.begin(), qp.end(), std::back_inserter(extra));
        std::set_difference(qp.begin(), qp.end(), side->begin(), side->end(), std::back_inserter(missing));
        if (!extra.empty()) {
          products.fail(at(n) + " " + label + " contains " + to_display(extra.front()) + " which is not in Q'");
        } else if (!missing.empty()) {
          products.fail(at(n) + " " + label + " misses " + to_display(missing.front()) + " from Q'");
        }
      }
    }
  });
  report.checks.push_back(std::move(products).finish());

  const int assoc_max = std::min(n_max, 4);
  Check assoc("semigroup.associativity_po", 1, assoc_max);
  assoc.set_note("checked in PO_n, which contains the other five classes");
  assoc.run([&] {
    for (int n = 1; n <= assoc_max && !assoc.failed(); ++n) {
      const auto t = cayley(ClassId::po, n, guard);
      const std::size_t size = t.size();
      for (std::size_t a = 0; a < size && !assoc.failed(); ++a) {
        for (std::size_t b = 0; b < size && !assoc.failed(); ++b) {
          const auto ab = static_cast<std::size_t>(t.at(a, b));
          for (std::size_t c = 0; c < size; ++c) {
            if (t.at(ab, c) != t.at(a, static_cast<std::size_t>(t.at(b, c)))) {
              assoc.fail(at(n) + " (fg)h != f(gh) for f=" + to_display(t.elements[a]) + " g=" +
                         to_display(t.elements[b]) + " h=" + to_display(t.elements[c]));
              break;
            }
          }
        }
      }
    }
  });
  report.checks.push_back(std::move(assoc).finish());

  Check phi("semigroup.phi_q_bijection", 1, phi_n_max);
  phi.run([&] {
    for (int n = 1; n <= phi_n_max && !phi.failed(); ++n) {
      const auto q = enumerate_class(ClassId::q, n, guard);
      const auto qp = enumerate_class(ClassId::qp, n, guard);
      std::set<ChainMap> image;
      for (const auto& m : q) {
        const auto moved = phi_q(m);
        if (!belongs_to(moved, ClassId::qp)) phi.fail(at(n) + " phi_q" + to_display(m) + " not in Q'");
        if (phi_q_inv(moved) != m) phi.fail(at(n) + " round trip of " + to_display(m) + " fails");
        if (!image.insert(moved).second) phi.fail(at(n) + " phi_q not injective at " + to_display(moved));
      }
      for (const auto& m : qp) {
        if (phi_q(phi_q_inv(m)) != m) phi.fail(at(n) + " inverse round trip of " + to_display(m) + " fails");
      }
      const std::set<ChainMap> target(qp.begin(), qp.end());
      if (image != target) phi.fail(at(n) + " image of phi_q has " + text(image.size()) + " maps, Q' has " + text(target.size()));
    }
  });
  report.checks.push_back(std::move(phi).finish());
  return report;
}

VerificationReport verify_idempotents(int n_max, int shape_n_max, int brute_n_max, const HarnessOptions& opts) {
  VerificationReport report;
  const int guard = opts.guard;

  Check total("idempotents.pc_total", 0, n_max);
  Check by_image("idempotents.e_nr_census", 0, n_max);
  total.run([&] {
    for (int n = 0; n <= n_max; ++n) {
      BigCount count = 0;
      std::map<int, BigCount> hist;
      ClassEnumerator pc(ClassId::pc, n, guard);
      for (const auto& m : pc) {
        if (!is_idempotent(m)) continue;
        ++count;
        ++hist[stats(m).im_card];
      }
      total.expect_eq(at(n), count, e_total(n));
      for (int r = 0; r <= n; ++r) by_image.expect_eq(at(n, r), histogram_at(hist, r), e_nr(n, r));
    }
  });
  report.checks.push_back(std::move(total).finish());
  report.checks.push_back(std::move(by_image).finish());

  constexpr int kSymbolicMax = 20;
  Check symbolic("idempotents.recurrences", 0, kSymbolicMax);
  symbolic.run([&] {
    const auto tri = e_nr_triangle(kSymbolicMax);
    for (int n = 0; n <= kSymbolicMax; ++n) {
      const BigCount closed = e_total(n);
      symbolic.expect_eq(at(n) + " 3e_{n-1}-1", e_total_recurrence(n), closed);
      BigCount row = 0;
      for (const auto& v : tri[n]) row += v;
      symbolic.expect_eq(at(n) + " sum_r e(n,r)", row, closed);
      if (n >= 1) symbolic.expect_eq(at(n) + " e_n vs e_{n-1}", 3 * e_total(n - 1) - 1, closed);
    }
  });
  report.checks.push_back(std::move(symbolic).finish());

  Check shape("idempotents.path_shape_po", 0, shape_n_max);
  shape.run([&] {
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    for (int n = 0; n <= shape_n_max; ++n) {
      ClassEnumerator po(ClassId::po, n, guard);
      for (const auto& m : po) {
        ++checked;
        const auto path = map_to_path(m);
        const bool by_shape = is_idempotent_path(path);
        const bool by_algebra = is_idempotent(m);
        if (by_shape != by_algebra) {
          ++mismatches;
          shape.fail(at(n) + " map " + to_display(m) + " path " + path.to_string() + " shape predicate " +
                      text(by_shape) + " but idempotent " + text(by_algebra));
        }
      }
    }
    shape.set_note("shape predicate disagrees with idempotency on " + text(mismatches) + " of " + text(checked) +
                    " PO maps");
  });
  report.checks.push_back(std::move(shape).finish(CheckStatus::paper_ambiguity));

  // Plain self-maps of an n-set, no order structure: T_n (total) and P_n (partial).
  Check tn("idempotents.t_n", 1, brute_n_max);
  Check pn("idempotents.p_n", 1, brute_n_max);
  tn.run([&] {
    for (int n = 1; n <= brute_n_max; ++n) {
      for (int partial = 0; partial <= 1; ++partial) {
        const int base = n + partial;  // value n stands for "undefined"
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        BigCount count = 0;
        for (;;) {
          bool idem = true;
          for (int x = 0; x < n && idem; ++x) {
            const int fx = f[x];
            if (fx < n && f[fx] != fx) idem = false;
          }
          count += idem ? 1 : 0;
          int pos = 0;
          while (pos < n && ++f[pos] == base) f[pos++] = 0;
          if (pos == n) break;
        }
        if (partial) {
          pn.expect_eq(at(n), count, idem_pn(n));
        } else {
          tn.expect_eq(at(n), count, idem_tn(n));
        }
      }
    }
  });
  report.checks.push_back(std::move(tn).finish());
  report.checks.push_back(std::move(pn).finish());
  return report;
}

VerificationReport verify_consistency(int n_max, const HarnessOptions&) {
  VerificationReport report;

  auto row_sum = [](FamilyId id, int n_max_rows) {
    std::map<int, BigCount> sums;
    for (const auto& e : table(id, n_max_rows)) sums[e.n] += e.value;
    return sums;
  };

  Check closed("consistency.schroeder_closed_vs_recurrence", 0, n_max);
  closed.run([&] {
    const auto rec = table(FamilyId::r, n_max);
    for (int n = 0; n <= n_max; ++n) closed.expect_eq(at(n), rec[n].value, schroeder_large_closed(n));
  });
  report.checks.push_back(std::move(closed).finish());

  Check small("consistency.schroeder_small_half", 1, n_max);
  small.run([&] {
    for (int n = 1; n <= n_max; ++n) small.expect_eq(at(n), schroeder_large(n), 2 * schroeder_small(n));
  });
  report.checks.push_back(std::move(small).finish());

  Check central("consistency.delannoy_central_recurrence", 1, n_max);
  Check symmetric("consistency.delannoy_symmetry", 0, n_max);
  central.run([&] {
    for (int n = 1; n <= n_max; ++n) {
      central.expect_eq(at(n), delannoy(n - 1, n) + delannoy(n, n - 1) + delannoy(n - 1, n - 1), delannoy(n, n));
    }
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k < n; ++k) symmetric.expect_eq(at(n, k), delannoy(k, n), delannoy(n, k));
    }
  });
  report.checks.push_back(std::move(central).finish());
  report.checks.push_back(std::move(symmetric).finish());

  struct RowSum {
    const char* id;
    std::vector<FamilyId> parts;
    std::function<BigCount(int)> total;
  };
  const std::vector<RowSum> sums{
      {"consistency.row_sums.pc", {FamilyId::f_pc, FamilyId::g_pc}, [](int n) { return schroeder_large(n); }},
      {"consistency.row_sums.c", {FamilyId::j_c, FamilyId::g_c}, [](int n) { return catalan(n); }},
      {"consistency.row_sums.po", {FamilyId::f_po, FamilyId::g_po, FamilyId::j_po}, [](int n) { return po_order(n); }},
      {"consistency.row_sums.o", {FamilyId::g_o, FamilyId::j_o},
       [](int n) { return binomial(2 * n - 1, n); }},
      {"consistency.row_sums.e", {FamilyId::e_nr}, [](int n) { return e_total(n); }},
  };
  for (const auto& rs : sums) {
    const int lo = rs.parts.front() == FamilyId::e_nr ? 0 : 1;
    Check check(rs.id, lo, n_max);
    check.run([&] {
      for (FamilyId part : rs.parts) {
        const auto got = row_sum(part, n_max);
        for (int n = lo; n <= n_max; ++n) {
          check.expect_eq(at(n) + " " + std::string(family_info(part).name), rs.total(n), histogram_at(got, n));
        }
      }
    });
    if (rs.parts.front() == FamilyId::g_o) check.set_note("|O_n| compared with C(2n-1, n)");
    report.checks.push_back(std::move(check).finish());
  }
  return report;
}

VerificationReport verify_all(const SuiteCaps& caps, const HarnessOptions& opts) {
  std::vector<std::future<VerificationReport>> parts;
  parts.push_back(std::async(std::launch::async, [&] { return verify_orders(caps.orders, opts); }));
  parts.push_back(std::async(std::launch::async, [&] { return verify_bijection(caps.bijection, opts); }));
  parts.push_back(std::async(std::launch::async, [&] { return verify_fgj(caps.fgj, opts); }));
  parts.push_back(std::async(std::launch::async, [&] { return verify_semigroup(caps.semigroup, caps.phi, opts); }));
  parts.push_back(std::async(std::launch::async, [&] {
    return verify_idempotents(caps.idempotents, caps.shape, caps.brute_tp, opts);
  }));
  parts.push_back(std::async(std::launch::async, [&] { return verify_consistency(caps.consistency, opts); }));
  VerificationReport report;
  for (auto& part : parts) report.append(part.get());
  return report;
}

}  // namespace chainpaths
