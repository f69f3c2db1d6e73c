// chainpaths command-line tool.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chainpaths/bijection.hpp"
#include "chainpaths/counting.hpp"
#include "chainpaths/enumeration.hpp"
#include "chainpaths/errors.hpp"
#include "chainpaths/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

chainpaths::FamilyId family_or_throw(const std::string& name) {
  auto id = chainpaths::parse_family(name);
  if (!id) {
    std::string known;
    for (const auto& f : chainpaths::families()) known += (known.empty() ? "" : ", ") + std::string(f.name);
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
  return *id;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

struct CountArgs {
  std::string family;
  int n = 0;
  std::optional<int> k;
};

int run_count(const CountArgs& args) {
  auto id = family_or_throw(args.family);
  // `delannoy` doubles as D(n,k) when k is given.
  if (id == chainpaths::FamilyId::del2 && args.k) id = chainpaths::FamilyId::delgen;
  const auto& info = chainpaths::family_info(id);
  if (info.two_param && !args.k) throw UsageError(std::string(info.name) + " needs --k");
  if (!info.two_param && args.k) throw UsageError(std::string(info.name) + " takes no --k");
  std::cout << chainpaths::to_decimal(chainpaths::evaluate(id, args.n, args.k)) << '\n';
  return kExitOk;
}

struct TableArgs {
  std::string family;
  int max_n = 0;
  std::string format = "csv";
};

int run_table(const TableArgs& args) {
  const auto id = family_or_throw(args.family);
  const auto entries = chainpaths::table(id, args.max_n);
  std::cout << (args.format == "json" ? chainpaths::table_json(id, entries) : chainpaths::table_csv(id, entries))
            << '\n';
  return kExitOk;
}

struct ConvertArgs {
  std::string input;
  std::optional<int> n;
  std::string svg;
};

int run_to_path(const ConvertArgs& args) {
  const auto path = chainpaths::map_to_path(chainpaths::parse_map(args.input));
  std::cout << path.to_string() << '\n';
  if (!args.svg.empty()) write_file(args.svg, chainpaths::render_svg(path));
  return kExitOk;
}

int run_to_map(const ConvertArgs& args) {
  const auto path = args.n ? chainpaths::LatticePath::parse(args.input, *args.n)
                           : chainpaths::LatticePath::parse(args.input);
  std::cout << chainpaths::to_json_text(chainpaths::path_to_map(path)) << '\n';
  if (!args.svg.empty()) write_file(args.svg, chainpaths::render_svg(path));
  return kExitOk;
}

struct EnumerateArgs {
  std::string target;
  int n = 0;
  int guard = chainpaths::kDefaultSizeGuard;
  chainpaths::PathFilter filter;
};

int run_enumerate(const EnumerateArgs& args) {
  std::size_t count = 0;
  if (args.target == "paths") {
    chainpaths::PathEnumerator gen(args.n, args.filter, args.guard);
    for (const auto& p : gen) {
      std::cout << p.to_string() << '\n';
      ++count;
    }
  } else {
    const auto cls = chainpaths::parse_class(args.target);
    if (!cls) throw UsageError("unknown class '" + args.target + "' (pc, c, po, o, del, q, qp or paths)");
    chainpaths::ClassEnumerator gen(*cls, args.n, args.guard);
    for (const auto& m : gen) {
      std::cout << chainpaths::to_json_text(m) << '\n';
      ++count;
    }
  }
  std::cout << "count: " << count << '\n';
  return kExitOk;
}

struct VerifyArgs {
  chainpaths::SuiteCaps caps;
  std::string fixture = "none";
  std::string output;
  int guard = chainpaths::kDefaultSizeGuard;
};

int run_verify(const VerifyArgs& args) {
  const auto fixture = chainpaths::parse_fixture(args.fixture);
  if (!fixture) throw UsageError("unknown fixture '" + args.fixture + "'");
  const auto& c = args.caps;
  for (int cap : {c.orders, c.bijection, c.fgj, c.semigroup, c.phi, c.idempotents, c.shape}) {
    if (cap > args.guard) throw UsageError("suite cap " + std::to_string(cap) + " exceeds --guard " + std::to_string(args.guard));
  }
  const auto report = chainpaths::verify_all(args.caps, {*fixture, args.guard});
  const auto json = report.to_json();
  std::cout << json << '\n';
  if (!args.output.empty()) write_file(args.output, json + "\n");
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice paths and order-preserving partial maps of a finite chain"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print one exact value of a counting family");
  count->add_option("family", count_args.family, "r, s, catalan, delannoy, c-po, f-pc, ...")->required();
  count->add_option("--n", count_args.n, "First parameter")->required();
  count->add_option("--k", count_args.k, "Second parameter (two-parameter families)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a family for every n up to --max-n");
  table->add_option("family", table_args.family, "Counting family")->required();
  table->add_option("--max-n", table_args.max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", table_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert between maps and lattice paths");
  convert->require_subcommand(1);
  auto* to_path = convert->add_subcommand("to-path", "Map text -> path string");
  to_path->add_option("map", convert_args.input, R"(e.g. '{"n":3,"m":4,"map":[[0,0]]}')")->required();
  to_path->add_option("--svg", convert_args.svg, "Also write an SVG drawing of the path");
  auto* to_map = convert->add_subcommand("to-map", "Path string -> map text");
  to_map->add_option("path", convert_args.input, "Steps over H, V, D")->required();
  to_map->add_option("--n", convert_args.n, "Square side (default: #H + #D)");
  to_map->add_option("--svg", convert_args.svg, "Also write an SVG drawing of the path");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List a class or a path family in canonical order");
  enumerate->add_option("target", enum_args.target, "pc, c, po, o, del, q, qp or paths")->required();
  enumerate->add_option("--n", enum_args.n, "Chain size / square side")->required();
  enumerate->add_option("--guard", enum_args.guard, "Largest n allowed");
  enumerate->add_flag("--subdiagonal", enum_args.filter.subdiagonal, "paths: never above y = x");
  enumerate->add_flag("--no-diag", enum_args.filter.no_diag, "paths: no D steps");
  enumerate->add_flag("--last-not-h", enum_args.filter.last_not_h, "paths: last step is not H");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run every verification suite and print the report");
  auto& caps = verify_args.caps;
  verify->add_option("--orders-max", caps.orders, "Class and path orders up to n");
  verify->add_option("--bijection-max", caps.bijection, "Bijection checks up to n");
  verify->add_option("--fgj-max", caps.fgj, "F/G/J census up to n");
  verify->add_option("--semigroup-max", caps.semigroup, "Composition checks up to n");
  verify->add_option("--phi-max", caps.phi, "Q -> Q' bijection up to n");
  verify->add_option("--idempotents-max", caps.idempotents, "Idempotent counts up to n");
  verify->add_option("--shape-max", caps.shape, "Idempotent path shape up to n");
  verify->add_option("--brute-max", caps.brute_tp, "T_n / P_n brute force up to n");
  verify->add_option("--consistency-max", caps.consistency, "Formula-only checks up to n");
  verify->add_option("--guard", verify_args.guard, "Largest n any enumeration may use");
  verify->add_option("--fixture", verify_args.fixture, "Fault injection: perturb-r or drop-empty-qp");
  verify->add_option("--output", verify_args.output, "Also write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*table) return run_table(table_args);
    if (*to_path) return run_to_path(convert_args);
    if (*to_map) return run_to_map(convert_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*verify) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const chainpaths::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
