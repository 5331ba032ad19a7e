#include "pcat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcat/analyzer.hpp"
#include "pcat/closure.hpp"
#include "pcat/ops.hpp"
#include "pcat/paramsets.hpp"
#include "pcat/render.hpp"
#include "pcat/text.hpp"

namespace pcat {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RowFlags {
  std::string row;
  long long u = 0, m = 0, g = 0;
  std::string D, E, N;
  CLI::Option *o_row = nullptr, *o_u = nullptr, *o_m = nullptr, *o_g = nullptr, *o_D = nullptr,
              *o_E = nullptr, *o_N = nullptr;

  void attach(CLI::App* app, bool required) {
    o_row = app->add_option("--row", row, "catalog row: 1..14 or Vg");
    if (required) o_row->required();
    o_u = app->add_option("--u", u);
    o_m = app->add_option("--m", m);
    o_g = app->add_option("--g", g);
    o_D = app->add_option("--D", D, "comma separated");
    o_E = app->add_option("--E", E, "comma separated");
    o_N = app->add_option("--N", N, "comma separated semigroup generators");
  }

  bool given() const { return o_row->count() > 0; }
};

std::vector<long long> parse_csv(const std::string& text, const char* flag) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item.substr(b), &used));
      if (item.find_first_not_of(" \t", b + used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad integer list for ") + flag + ": '" + text + "'");
    }
  }
  return out;
}

ParameterTuple tuple_from(const RowFlags& f) {
  CatalogParams p;
  if (f.o_u->count()) p.u = f.u;
  if (f.o_m->count()) p.m = f.m;
  if (f.o_g->count()) p.g = f.g;
  if (f.o_D->count()) p.D = parse_csv(f.D, "--D");
  if (f.o_E->count()) p.E = parse_csv(f.E, "--E");
  if (f.o_N->count()) p.N = parse_csv(f.N, "--N");
  return realize_row(f.row, p).realized;
}

std::string read_partition_text(const std::string& flag_value, bool given, std::istream& in) {
  if (given) return flag_value;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto e = text.find_last_not_of(" \t\r\n");
  text.erase(e == std::string::npos ? 0 : e + 1);
  if (text.empty()) throw UsageError("no partition given (use --p or stdin)");
  return text;
}

TwoColoredPartition named_or_parsed(const std::string& s) {
  if (s == "id_w") return identity(Color::white);
  if (s == "id_b") return identity(Color::black);
  if (s == "crossing-ww") return crossing_ww();
  if (s == "pair-wb") return lower_pair(Color::white, Color::black);
  if (s == "pair-bw") return lower_pair(Color::black, Color::white);
  if (s == "four-block") return four_block_wbwb();
  if (s == "singletons-wb") return singletons_wb();
  return parse_partition(s);
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
  if (opt->count()) return value;
  if (const char* env = std::getenv("PCAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("PCAT_SEED is not an integer: '") + env + "'");
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-colored partitions: operations, analyzer, parameter families", "pcat"};
  app.require_subcommand(1);

  std::string p_text;
  std::uint64_t seed = 0;
  int count = 10, points = 4, max_points = 4, workers = 1;
  std::size_t max_elements = 200000, retry_cap = 10000;
  std::string ops = "category", format = "ascii";
  std::vector<std::string> gens;
  bool list = false;

  auto* parse_cmd = app.add_subcommand("parse", "print canonical text and encoding");
  auto* p_parse = parse_cmd->add_option("--p", p_text, "partition text (default: stdin)");

  auto* analyze_cmd = app.add_subcommand("analyze", "print the analyzer profile");
  auto* p_analyze = analyze_cmd->add_option("--p", p_text, "partition text (default: stdin)");

  auto* check_cmd = app.add_subcommand("check", "membership in a catalog family");
  auto* p_check = check_cmd->add_option("--p", p_text, "partition text (default: stdin)");
  RowFlags check_row;
  check_row.attach(check_cmd, true);

  auto* sample_cmd = app.add_subcommand("sample", "random partitions, optionally inside a family");
  sample_cmd->add_option("-n,--count", count)->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--points", points)->check(CLI::Range(0, 25));
  sample_cmd->add_option("--retry-cap", retry_cap)->check(CLI::PositiveNumber);
  auto* seed_sample = sample_cmd->add_option("--seed", seed);
  RowFlags sample_row;
  sample_row.attach(sample_cmd, false);

  auto* closure_cmd = app.add_subcommand("closure", "bounded closure census");
  closure_cmd->add_option("--gen", gens, "generator: partition text, alias or 'none'");
  closure_cmd->add_option("--ops", ops)->check(CLI::IsMember({"category", "alternative"}));
  closure_cmd->add_option("--max-points", max_points)->check(CLI::Range(2, 16));
  closure_cmd->add_option("--max-elements", max_elements)->check(CLI::PositiveNumber);
  closure_cmd->add_option("--workers", workers)->check(CLI::Range(1, 256));
  auto* seed_closure = closure_cmd->add_option("--seed", seed);
  closure_cmd->add_flag("--list", list, "print the elements too");

  auto* render_cmd = app.add_subcommand("render", "draw a partition");
  auto* p_render = render_cmd->add_option("--p", p_text, "partition text (default: stdin)");
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* catalog_cmd = app.add_subcommand("catalog", "list the parameter families");

  auto* respects_cmd = app.add_subcommand("respects", "apply category operations to family members");
  RowFlags respects_row;
  respects_row.attach(respects_cmd, true);
  int samples = 200;
  respects_cmd->add_option("-n,--count", samples)->check(CLI::PositiveNumber);
  respects_cmd->add_option("--points", points)->check(CLI::Range(0, 6));
  auto* seed_respects = respects_cmd->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (parse_cmd->parsed()) {
      const auto p = parse_partition(read_partition_text(p_text, p_parse->count() > 0, in));
      out << to_text(p) << '\n' << canonicalize(p).to_string() << '\n';
      return 0;
    }
    if (analyze_cmd->parsed()) {
      const auto p = parse_partition(read_partition_text(p_text, p_analyze->count() > 0, in));
      out << to_string(z_profile(p)) << '\n';
      return 0;
    }
    if (check_cmd->parsed()) {
      const auto q = tuple_from(check_row);
      const auto p = parse_partition(read_partition_text(p_text, p_check->count() > 0, in));
      const auto failing = first_failing_component(z_profile(p), q);
      if (!failing) {
        out << "IN\n";
        return 0;
      }
      out << "OUT " << component_names[*failing] << '\n';
      return 1;
    }
    if (sample_cmd->parsed()) {
      const auto s = resolve_seed(seed_sample, seed);
      if (!sample_row.given()) {
        for (const auto& p : sample_partitions(points, count, s)) out << to_text(p) << '\n';
        return 0;
      }
      const auto q = tuple_from(sample_row);
      const auto r = sample_in_R(q, points, points, count, s, retry_cap);
      for (const auto& p : r.members) out << to_text(p) << '\n';
      err << "attempts " << r.attempts << " accepted " << r.members.size() << '\n';
      if (r.exhausted) {
        err << "error: retry-exhausted after " << retry_cap << " rejections\n";
        return 3;
      }
      return 0;
    }
    if (closure_cmd->parsed()) {
      ClosureConfig cfg;
      cfg.max_points = max_points;
      cfg.max_elements = max_elements;
      cfg.ops = ops == "category" ? OpSet::category : OpSet::alternative;
      cfg.workers = workers;
      cfg.seed = resolve_seed(seed_closure, seed);
      std::vector<TwoColoredPartition> g;
      for (const auto& s : gens) {
        if (s != "none") g.push_back(named_or_parsed(s));
      }
      const auto r = bounded_closure(g, cfg);
      for (const auto& [size, n] : census(r.elements)) out << "size " << size << ' ' << n << '\n';
      out << "total " << r.elements.size() << '\n';
      if (list) {
        for (const auto& p : r.elements) out << to_text(p) << '\n';
      }
      if (r.cap_exceeded) {
        err << "error: element cap " << max_elements << " exceeded; census is partial\n";
        return 3;
      }
      return 0;
    }
    if (render_cmd->parsed()) {
      const auto p = parse_partition(read_partition_text(p_text, p_render->count() > 0, in));
      out << (format == "svg" ? render_svg(p) : render_ascii(p));
      return 0;
    }
    if (catalog_cmd->parsed()) {
      for (const auto& row : catalog_rows()) {
        out << "row " << row.row_id << " params=[" << row.signature << "] (";
        for (int i = 0; i < 6; ++i) out << (i ? ", " : "") << row.formulas[i];
        out << ") meet=[" << row.meet << "]\n";
      }
      return 0;
    }
    if (respects_cmd->parsed()) {
      const auto q = tuple_from(respects_row);
      const auto s = resolve_seed(seed_respects, seed);
      const MemberPool pool(points);
      const auto members = pool.sample(q, samples, s);
      const auto report = closure_respects(q, members, s);
      out << report.text();
      return report.ok() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pcat
