#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "upsilon/analytics.hpp"
#include "upsilon/config.hpp"
#include "upsilon/errors.hpp"
#include "upsilon/master.hpp"
#include "upsilon/parallel.hpp"
#include "upsilon/primecount.hpp"
#include "upsilon/sieve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Field {
  std::string key;
  std::string val;
  bool quoted = false;  // string-valued in JSON
};

struct Record {
  std::vector<Field> fields;
};

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Field num_field(std::string key, double v) {
  return {std::move(key), fmt_num(v), false};
}

Field int_field(std::string key, std::uint64_t v) {
  return {std::move(key), std::to_string(v), false};
}

Field str_field(std::string key, std::string v) {
  return {std::move(key), std::move(v), true};
}

void emit(std::ostream& os, const std::vector<Record>& records, bool json) {
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json obj;
      for (const auto& f : r.fields) {
        if (f.quoted)
          obj[f.key] = f.val;
        else
          obj[f.key] = nlohmann::ordered_json::parse(f.val);
      }
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  if (records.empty()) return;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i)
    os << (i ? "," : "") << records[0].fields[i].key;
  os << "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.fields.size(); ++i)
      os << (i ? "," : "") << r.fields[i].val;
    os << "\n";
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::uint64_t omega_of(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      n /= d;
      ++c;
    }
  }
  if (n > 1) ++c;
  return c;
}

struct Options {
  std::string format = "csv";
  std::string out_path;
  int threads = 0;
};

std::ofstream g_out_file;

std::ostream& output_stream(const Options& opt) {
  if (opt.out_path.empty()) return std::cout;
  if (!g_out_file.is_open()) {
    g_out_file.open(opt.out_path);
    if (!g_out_file) throw usage_error("cannot open " + opt.out_path);
  }
  return g_out_file;
}

int cmd_eval(const Options& opt, std::uint64_t n) {
  if (n < 1) throw usage_error("eval: need n >= 1");
  upsilon::UpsilonValue v = upsilon::upsilon(n);
  Record r;
  r.fields.push_back(str_field("command", "eval"));
  r.fields.push_back(int_field("n", n));
  r.fields.push_back(num_field("value", v.value));
  r.fields.push_back(str_field("kind", upsilon::to_string(v.kind)));
  r.fields.push_back(int_field("omega", omega_of(n)));
  emit(output_stream(opt), {r}, opt.format == "json");
  return kExitOk;
}

int cmd_sum(const Options& opt, std::uint64_t x, const std::string& method) {
  auto t0 = std::chrono::steady_clock::now();
  std::optional<double> direct, identity;
  if (method == "direct" || method == "both")
    direct = upsilon::sum_upsilon_direct(x);
  if (method == "identity" || method == "both")
    identity = upsilon::sum_upsilon_identity(x);
  Record r;
  r.fields.push_back(str_field("command", "sum"));
  r.fields.push_back(int_field("x", x));
  r.fields.push_back(str_field("method", method));
  if (direct) r.fields.push_back(num_field("direct", *direct));
  if (identity) r.fields.push_back(num_field("identity", *identity));
  if (direct && identity) {
    double ad = std::abs(*direct - *identity);
    r.fields.push_back(num_field("abs_diff", ad));
    r.fields.push_back(num_field("rel_diff", ad / std::max(*direct, 1.0)));
  }
  double ref = upsilon::reference_xloglog(x);
  if (!std::isnan(ref)) {
    double value = direct ? *direct : *identity;
    r.fields.push_back(num_field("reference", ref));
    r.fields.push_back(num_field("ratio", value / ref));
  }
  r.fields.push_back(num_field("wall_ms", elapsed_ms(t0)));
  emit(output_stream(opt), {r}, opt.format == "json");
  return kExitOk;
}

std::vector<std::uint64_t> gather_xs(const std::vector<std::uint64_t>& xs,
                                     std::uint64_t from, std::uint64_t to,
                                     int points) {
  if (!xs.empty()) return xs;
  if (from == 0 || to == 0)
    throw usage_error("need --x, or --from/--to/--points");
  return upsilon::EvalGrid::geometric(from, to, points).values;
}

int cmd_verify(const Options& opt, const std::vector<std::uint64_t>& xs) {
  std::vector<Record> rows;
  bool all_pass = true;
  auto add = [&](const char* check, std::uint64_t x, double lhs, double rhs,
                 double rel, bool pass) {
    Record r;
    r.fields.push_back(str_field("check", check));
    r.fields.push_back(int_field("x", x));
    r.fields.push_back(num_field("lhs", lhs));
    r.fields.push_back(num_field("rhs", rhs));
    r.fields.push_back(num_field("rel_diff", rel));
    r.fields.push_back(str_field("pass", pass ? "true" : "false"));
    rows.push_back(std::move(r));
    all_pass = all_pass && pass;
  };
  for (std::uint64_t x : xs) {
    if (x < 4) throw usage_error("verify: need x >= 4");
    upsilon::SummationReport rep = upsilon::verify_identity(x);
    add("identity", x, rep.direct, rep.identity, rep.rel_diff,
        rep.passed(1e-8));

    upsilon::IdentityCheck rc = upsilon::rosser_identity_check(x);
    add("rosser", x, rc.lhs, rc.rhs, rc.rel_diff, rc.passed(1e-9));

    double s = rep.direct;
    double maj = upsilon::cor1_majorant(x);
    double rel1 = (s - maj) / std::max(maj, 1.0);
    add("cor1-majorant", x, s, maj, rel1, s <= maj * (1.0 + 1e-12));

    double decomposed =
        upsilon::cor2_sum(x) + upsilon::cor2_integral_remainder(x);
    double rel2 = std::abs(s - decomposed) / std::max(s, 1.0);
    add("cor2-decomposition", x, s, decomposed, rel2, rel2 <= 1e-8);
  }
  emit(output_stream(opt), rows, opt.format == "json");
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_trend(const Options& opt, const std::string& claim_name,
              std::uint64_t from, std::uint64_t to, int points, int m) {
  auto claim = upsilon::parse_claim(claim_name);
  if (!claim) throw usage_error("unknown claim: " + claim_name);
  upsilon::EvalGrid grid = upsilon::EvalGrid::geometric(from, to, points);
  upsilon::TrendSeries series = upsilon::trend_series(*claim, grid, m);
  std::vector<Record> rows;
  for (const auto& row : series.rows) {
    Record r;
    r.fields.push_back(str_field("claim", series.claim));
    r.fields.push_back(int_field("x", row.x));
    r.fields.push_back(num_field("value", row.value));
    r.fields.push_back(num_field("reference", row.reference));
    r.fields.push_back(num_field("ratio", row.ratio));
    rows.push_back(std::move(r));
  }
  emit(output_stream(opt), rows, opt.format == "json");
  return kExitOk;
}

int cmd_bench(const Options& opt, std::uint64_t x) {
  if (x < 1000) throw usage_error("bench: need x >= 1000");
  Record r;
  r.fields.push_back(str_field("command", "bench"));
  r.fields.push_back(int_field("x", x));

  auto t0 = std::chrono::steady_clock::now();
  upsilon::PrimeCountTable table = upsilon::build_prime_count_table(x);
  r.fields.push_back(num_field("table_ms", elapsed_ms(t0)));

  t0 = std::chrono::steady_clock::now();
  double identity = upsilon::sum_upsilon_identity(x);
  r.fields.push_back(num_field("identity_ms", elapsed_ms(t0)));
  r.fields.push_back(num_field("identity", identity));

  if (x <= upsilon::caps().direct) {
    t0 = std::chrono::steady_clock::now();
    double direct = upsilon::sum_upsilon_direct(x);
    r.fields.push_back(num_field("direct_ms", elapsed_ms(t0)));
    r.fields.push_back(num_field("direct", direct));
  } else {
    r.fields.push_back(str_field("direct_ms", "skipped"));
    r.fields.push_back(str_field("direct", "skipped"));
  }

  // table + per-worker omega-scan buffers (9 bytes/element) + prime flags
  std::uint64_t mem =
      16 * (upsilon::isqrt(x) + 1) +
      static_cast<std::uint64_t>(upsilon::max_threads()) * 9 *
          upsilon::kDefaultSegmentSize;
  r.fields.push_back(int_field("peak_mem_estimate_bytes", mem));
  emit(output_stream(opt), {r}, opt.format == "json");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Master-function partial sums and their verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out_path, "Write output to FILE");
  app.add_option("--threads", opt.threads, "Worker thread cap (0 = cores)");

  std::uint64_t eval_n = 0;
  auto* eval = app.add_subcommand("eval", "Point value of the master function");
  eval->add_option("n", eval_n, "Argument n")->required();

  std::uint64_t sum_x = 0;
  std::string sum_method = "both";
  auto* sum = app.add_subcommand("sum", "Partial sum at x");
  sum->add_option("--x", sum_x, "Upper limit")->required();
  sum->add_option("--method", sum_method, "Summation path")
      ->check(CLI::IsMember({"direct", "identity", "both"}));

  std::vector<std::uint64_t> verify_xs;
  std::uint64_t grid_from = 0, grid_to = 0;
  int grid_points = 10;
  auto* verify = app.add_subcommand("verify", "Identity and proof checks");
  verify->add_option("--x", verify_xs, "Explicit x values");
  verify->add_option("--from", grid_from, "Grid start");
  verify->add_option("--to", grid_to, "Grid end");
  verify->add_option("--points", grid_points, "Grid points");

  std::string trend_claim;
  std::uint64_t trend_from = 0, trend_to = 0;
  int trend_points = 10, trend_m = 1;
  auto* trend = app.add_subcommand("trend", "Asymptotic-ratio series");
  trend->add_option("--claim", trend_claim, "Claim identifier")->required();
  trend->add_option("--from", trend_from, "Grid start")->required();
  trend->add_option("--to", trend_to, "Grid end")->required();
  trend->add_option("--points", trend_points, "Grid points");
  trend->add_option("--m", trend_m, "Moment order (claim = moment)");

  std::uint64_t bench_x = 0;
  auto* bench = app.add_subcommand("bench", "Time the summation paths");
  bench->add_option("--x", bench_x, "Upper limit")->required();

  try {
    app.parse(argc, argv);
    if (opt.threads > 0) upsilon::set_max_threads(opt.threads);
    if (*eval) return cmd_eval(opt, eval_n);
    if (*sum) return cmd_sum(opt, sum_x, sum_method);
    if (*verify)
      return cmd_verify(
          opt, gather_xs(verify_xs, grid_from, grid_to, grid_points));
    if (*trend)
      return cmd_trend(opt, trend_claim, trend_from, trend_to, trend_points,
                       trend_m);
    if (*bench) return cmd_bench(opt, bench_x);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) std::cerr << e.what() << "\n";
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  } catch (const upsilon::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
