#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "report.hpp"
#include "selftest.hpp"

namespace cantorprod::cli {

namespace {

struct RunConfig {
  unsigned n = 0;
  unsigned gap_depth = 8;
  std::string target = "theorem";
  unsigned digits = 12;
  std::string format = "json";
  std::string out_path;
  unsigned threads = 0;
  std::string x;
  unsigned depth = 1;
  unsigned k_max = 3;
  std::vector<std::string> tamper;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_format) {
  cmd->add_option("--digits", cfg.digits, "decimal digits in reports")->check(CLI::Range(0u, 50u));
  cmd->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  cmd->add_option("--threads", cfg.threads, "worker threads (default: CANTORPROD_THREADS or 1)")
      ->check(CLI::Range(1u, 256u));
  if (with_format) cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

ProductOptions product_options(const RunConfig& cfg) {
  ProductOptions opts;
  opts.threads = cfg.threads;
  return opts;
}

void emit(const RunConfig& cfg, std::ostream& out, const json& report) {
  std::ostringstream body;
  if (cfg.format == "text")
    write_text(body, report);
  else
    body << report.dump(2) << '\n';
  if (cfg.out_path.empty()) {
    out << body.str();
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!(file << body.str())) throw Error("cannot write " + cfg.out_path);
}

certificate::LiteralTable literal_table(const RunConfig& cfg) {
  certificate::LiteralTable table = certificate::reference_literals();
  for (const auto& item : cfg.tamper) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tamper expects name=p/q");
    const std::string name = item.substr(0, eq);
    if (!table.count(name)) throw UsageError("--tamper: unknown literal " + name);
    try {
      table[name] = Rational::parse(item.substr(eq + 1));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return table;
}

int cmd_art(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n > subdivision::kStandardLimit) throw UsageError("--n must be <= 16");
  emit(cfg, out, estimate_report(product::art_estimate(cfg.n, product_options(cfg)), cfg.digits));
  return kExitOk;
}

int cmd_fast(const RunConfig& cfg, std::ostream& out) {
  const product::FastLimits limits;
  if (cfg.n > limits.max_n) throw UsageError("--n must be <= " + std::to_string(limits.max_n));
  if (cfg.gap_depth < 1 || cfg.gap_depth > limits.max_gap_depth)
    throw UsageError("--K must be in [1, " + std::to_string(limits.max_gap_depth) + "]");
  emit(cfg, out, bracket_report(product::fast_estimate(cfg.n, cfg.gap_depth, product_options(cfg), limits), cfg.digits));
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto target = certificate::parse_target(cfg.target);
  const auto cert = certificate::build_certificate(target, literal_table(cfg), cfg.digits);
  emit(cfg, out, certificate_report(cert));
  for (const auto& e : cert.chain)
    if (!e.match) {
      err << "verification failed: " << e.name << " (derived " << e.value.to_string() << ", expected "
          << e.literal.to_string() << ")\n";
      return kExitVerificationFailed;
    }
  return cert.valid() ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "svg") throw UsageError("render only writes svg");
  if (cfg.depth > 2) throw UsageError("--depth must be <= 2");
  if (cfg.k_max > 6) throw UsageError("--k-max must be <= 6");
  std::ostringstream body;
  render_svg(body, RenderOptions{cfg.depth, cfg.k_max});
  if (cfg.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!(file << body.str())) throw Error("cannot write " + cfg.out_path);
  }
  return kExitOk;
}

int cmd_member(const RunConfig& cfg, std::ostream& out) {
  Rational x;
  try {
    x = Rational::parse(cfg.x);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (x < Rational(0) || Rational(1) < x) throw UsageError("--x must lie in [0, 1]");
  emit(cfg, out, membership_report(x, subdivision::cantor_membership(x)));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact bounds for the measure of the product set of the middle-third Cantor set"};
  app.require_subcommand(1);

  auto* art = app.add_subcommand("art", "standard-subdivision estimate");
  art->add_option("--n", cfg.n, "subdivision level")->required();
  add_common(art, cfg, true);

  auto* fast = app.add_subcommand("fast", "fast-subdivision brute-force bracket");
  fast->add_option("--n", cfg.n, "subdivision depth")->required();
  fast->add_option("--K", cfg.gap_depth, "gap depth");
  add_common(fast, cfg, true);

  auto* certify = app.add_subcommand("certify", "exact certificate");
  certify->add_option("--target", cfg.target, "prop3 or theorem")->check(CLI::IsMember({"prop3", "theorem"}));
  certify->add_option("--tamper", cfg.tamper, "override a literal, name=p/q")->group("");
  add_common(certify, cfg, true);

  auto* render = app.add_subcommand("render", "SVG figure of the root square");
  render->add_option("--depth", cfg.depth, "cell grid depth (<= 2)");
  render->add_option("--k-max", cfg.k_max, "highest family index (<= 6)");
  render->add_option("--out", cfg.out_path, "output file");
  render->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"svg"}));

  auto* member = app.add_subcommand("member", "Cantor set membership of a rational");
  member->add_option("--x", cfg.x, "rational p/q in [0,1]")->required();
  add_common(member, cfg, true);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (art->parsed()) return cmd_art(cfg, out);
    if (fast->parsed()) return cmd_fast(cfg, out);
    if (certify->parsed()) return cmd_certify(cfg, out, err);
    if (render->parsed()) {
      if (cfg.format == "json") cfg.format = "svg";
      return cmd_render(cfg, out);
    }
    if (member->parsed()) return cmd_member(cfg, out);
    if (selftest->parsed()) return run_selftest(out) ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace cantorprod::cli
