#include "quartic/cli.hpp"

#include "quartic/oracle.hpp"
#include "quartic/tunes.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <thread>

namespace quartic::cli {

Rational parse_flag(const std::string& flag, const std::string& text) {
  const auto r = parse_rational(text);
  if (!r) throw UsageError("invalid rational for " + flag + ": '" + text + "'");
  return *r;
}

std::vector<Rational> Range::values() const {
  std::vector<Rational> out;
  for (Rational x = start; x <= stop; x += step) out.push_back(x);
  return out;
}

Range parse_range(const std::string& flag, const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) {
    const Rational v = parse_flag(flag, text);
    return {v, v, 1};
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
    throw UsageError("invalid range for " + flag + ": expected START:STOP:STEP");
  Range r{parse_flag(flag, text.substr(0, first)), parse_flag(flag, text.substr(first + 1, second - first - 1)),
          parse_flag(flag, text.substr(second + 1))};
  if (r.step <= 0) throw UsageError("invalid range for " + flag + ": step must be positive");
  if (r.stop > r.start && (r.stop - r.start) / r.step > 1000000)
    throw UsageError("invalid range for " + flag + ": more than 10^6 values");
  return r;
}

namespace {

constexpr std::size_t kMaxGrid = 10000000;

struct CoeffFlags {
  std::string a = "0", b = "0", c = "0", d = "0";

  void add_to(CLI::App* app) {
    app->add_option("--a", a, "coefficient of x^3 (p/q or decimal)");
    app->add_option("--b", b, "coefficient of x^2");
    app->add_option("--c", c, "coefficient of x");
    app->add_option("--d", d, "free term");
  }

  QuarticCoeffs parse() const {
    return {parse_flag("--a", a), parse_flag("--b", b), parse_flag("--c", c), parse_flag("--d", d)};
  }
};

struct Unwritable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard output unless a path is given; throws on an unwritable path.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Unwritable("cannot write " + path);
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }
  bool to_file() const { return file_ != nullptr; }
  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw Unwritable("cannot finish writing the output file");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

// Shifts the largest reported root by +1, or inflates the count when there is none.
RootReport corrupted(RootReport rep) {
  if (rep.roots.empty()) {
    rep.count += 2;
    rep.possible_counts = {rep.count};
    return rep;
  }
  RootEntry& last = rep.roots.back();
  for (ExtReal* e : {&last.interval.lo, &last.interval.hi})
    if (e->is_finite()) e->value = e->value + QuadSurd(1);
  return rep;
}

void plot_data(const QuarticCoeffs& k, const Rational& x_min, const Rational& x_max, int samples, Precision p,
               std::ostream& os) {
  const Classification cl = classify(k);
  const UPoly S = subquartic(k);
  auto num = [&](double x) { return fmt12(p(x)); };
  os << "# samples of the sub-quartic x^2(x^2+ax+b) and the line -cx-d\n";
  os << "x,subquartic,line\n";
  for (int i = 0; i < samples; ++i) {
    const Rational x = x_min + (x_max - x_min) * i / (samples - 1);
    os << num(x.get_d()) << "," << num(S(x).get_d()) << "," << num(Rational(-k.c * x - k.d).get_d()) << "\n";
  }
  os << "\n# landmarks on the sub-quartic\nlandmark,x,y\n";
  const double a = k.a.get_d(), b = k.b.get_d();
  auto landmark = [&](const std::string& name, double x) {
    os << name << "," << num(x) << "," << num(x * x * (x * x + a * x + b)) << "\n";
  };
  auto exact_landmark = [&](const std::string& name, const QuadSurd& x) {
    os << name << "," << num(x.to_double()) << "," << num(evaluate(S, x).to_double()) << "\n";
  };
  for (const auto& m : cl.markers.points) exact_landmark(m.name, m.value);
  for (const auto& m : cl.stationary.mu) landmark(m.name, m.x.approx());
  for (const auto& l : cl.lambdas.lambdas) landmark(l.name, l.x.approx());
  for (const auto& t : cl.tangents.tangents)
    for (const auto& x : t.xi) landmark(x.name, x.approx);
  if (cl.double_tangent.alpha) exact_landmark("alpha", *cl.double_tangent.alpha);
  if (cl.double_tangent.beta) exact_landmark("beta", *cl.double_tangent.beta);
  exact_landmark("0", QuadSurd(0));
  if (k.c != 0) exact_landmark("-d/c", QuadSurd(-k.d / k.c));

  os << "\n# separator lines of slope -c by ordinate intercept\nseparator,intercept\n";
  os << "-d," << num(Rational(-k.d).get_d()) << "\n";
  os << "0," << num(0) << "\n";
  for (const auto& t : cl.tangents.tangents) os << "-delta(" << t.mu_name << ")," << num(t.minus_delta) << "\n";
  for (const auto& o : cl.markers.ordinates) os << o.name << "," << num(o.value.to_double()) << "\n";
  if (cl.double_tangent.alpha) os << "-d0," << num(Rational(-cl.chain.d0).get_d()) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real-root classification of x^4 + ax^3 + bx^2 + cx + d with exact rationals"};
  app.require_subcommand(1);

  CoeffFlags classify_k, verify_k, plot_k, tune_k;
  bool json = true, csv = false, two_decimals = false, negative_control = false;
  std::string out_path;
  std::string range_a = "0", range_b = "0", range_c = "0", range_d = "0";
  std::size_t random_n = 0;
  std::uint64_t seed = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string x_min_text = "-3", x_max_text = "3", tier = "cubic";
  int samples = 501;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify one quartic and print a JSON report");
  classify_k.add_to(classify_cmd);
  classify_cmd->add_flag("--json", json, "JSON output (default)");
  classify_cmd->add_flag("--csv", csv, "one CSV row instead of JSON");
  classify_cmd->add_flag("--paper-precision", two_decimals, "round floats to 2 decimals");
  classify_cmd->add_option("--out", out_path, "output path");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "classify a grid or a random sample and write CSV");
  sweep_cmd->add_option("--a", range_a, "START:STOP:STEP or a value");
  sweep_cmd->add_option("--b", range_b, "START:STOP:STEP or a value");
  sweep_cmd->add_option("--c", range_c, "START:STOP:STEP or a value");
  sweep_cmd->add_option("--d", range_d, "START:STOP:STEP or a value");
  CLI::Option* random_opt = sweep_cmd->add_option("--random", random_n, "number of random quartics");
  CLI::Option* seed_opt = sweep_cmd->add_option("--seed", seed, "seed for --random");
  sweep_cmd->add_flag("--csv", csv, "CSV output (the only format)");
  sweep_cmd->add_option("--out", out_path, "CSV path (default: standard output)");
  sweep_cmd->add_option("--threads", threads, "worker threads");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check both tiers against the Sturm oracle");
  verify_k.add_to(verify_cmd);
  verify_cmd->add_flag("--negative-control", negative_control, "verify a deliberately corrupted report");

  CLI::App* plot_cmd = app.add_subcommand("plot-data", "sub-quartic samples, landmarks and separators");
  plot_k.add_to(plot_cmd);
  plot_cmd->add_option("--x-min", x_min_text, "left end of the sample range");
  plot_cmd->add_option("--x-max", x_max_text, "right end of the sample range");
  plot_cmd->add_option("--samples", samples, "number of samples, at least 2");
  plot_cmd->add_flag("--paper-precision", two_decimals, "round floats to 2 decimals");
  plot_cmd->add_option("--out", out_path, "output path");

  CLI::App* tune_cmd = app.add_subcommand("tune", "print the case's tune, one note per line");
  tune_k.add_to(tune_cmd);
  tune_cmd->add_option("--tier", tier, "cubic or quadratic")->check(CLI::IsMember({"cubic", "quadratic"}));
  tune_cmd->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const Precision prec{two_decimals};
  try {
    if (*classify_cmd) {
      const QuarticCoeffs k = classify_k.parse();
      Sink sink(out_path, out);
      if (csv) {
        *sink << csv_header() << csv_line(sweep_row(k));
      } else {
        *sink << classification_json(classify(k), prec).dump(2) << "\n";
      }
      sink.close();
      return kOk;
    }

    if (*sweep_cmd) {
      std::vector<QuarticCoeffs> inputs;
      if (*random_opt) {
        if (!*seed_opt) throw UsageError("--random requires --seed");
        inputs = random_inputs(random_n, seed);
      } else {
        const auto as = parse_range("--a", range_a).values(), bs = parse_range("--b", range_b).values(),
                   cs = parse_range("--c", range_c).values(), ds = parse_range("--d", range_d).values();
        if (as.size() * bs.size() * cs.size() * ds.size() > kMaxGrid) throw UsageError("grid has more than 10^7 rows");
        for (const auto& a : as)
          for (const auto& b : bs)
            for (const auto& c : cs)
              for (const auto& d : ds) inputs.push_back({a, b, c, d});
      }
      Sink sink(out_path, out);
      const std::vector<SweepRow> rows = run_sweep(inputs, threads);
      std::size_t passed = 0;
      *sink << csv_header();
      for (const auto& r : rows) {
        *sink << csv_line(r);
        passed += r.pass;
      }
      sink.close();
      std::ostream& summary = sink.to_file() ? out : err;
      char buf[128];
      std::snprintf(buf, sizeof buf, "%zu rows, %zu pass (%.2f%%)", rows.size(), passed,
                    rows.empty() ? 100.0 : 100.0 * static_cast<double>(passed) / static_cast<double>(rows.size()));
      summary << "summary: " << buf << "\n";
      return passed == rows.size() ? kOk : kViolation;
    }

    if (*verify_cmd) {
      const QuarticCoeffs k = verify_k.parse();
      RootReport cubic = classify_cubic_tier(k);
      if (negative_control) cubic = corrupted(std::move(cubic));
      Verdict v = verify_report(k, cubic);
      const Verdict vq = verify_report(k, classify_quadratic_tier(k));
      for (const auto& s : vq.violations) v.violations.push_back("quadratic tier: " + s);
      if (v.violations.empty()) {
        out << "pass: " << v.oracle_count << " real roots with multiplicity\n";
        return kOk;
      }
      for (const auto& s : v.violations) out << "violation: " << s << "\n";
      return kViolation;
    }

    if (*plot_cmd) {
      const QuarticCoeffs k = plot_k.parse();
      const Rational lo = parse_flag("--x-min", x_min_text), hi = parse_flag("--x-max", x_max_text);
      if (samples < 2) throw UsageError("--samples must be at least 2");
      if (lo >= hi) throw UsageError("invalid range: --x-min must be below --x-max");
      Sink sink(out_path, out);
      plot_data(k, lo, hi, samples, prec, *sink);
      sink.close();
      return kOk;
    }

    if (*tune_cmd) {
      const QuarticCoeffs k = tune_k.parse();
      Sink sink(out_path, out);
      *sink << tune_of(k, tier == "quadratic" ? Tier::Quadratic : Tier::Cubic).text();
      sink.close();
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unwritable& e) {
    err << "error: " << e.what() << "\n";
    return kUnwritable;
  }
  return kUsage;
}

}  // namespace quartic::cli
