#include <fstream>
#include <memory>

#include <CLI11.hpp>

#include "shadowham/cli.hpp"
#include "shadowham/error.hpp"

namespace shadowham::cli {

XRange XRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
    throw UsageError("x range must look like start:stop:step");
  XRange r{Rational::parse(text.substr(0, first)), Rational::parse(text.substr(first + 1, second - first - 1)),
           Rational::parse(text.substr(second + 1))};
  if (r.step.sign() <= 0) throw UsageError("x range step must be positive");
  if (r.stop < r.start) throw UsageError("x range is empty");
  return r;
}

std::vector<Rational> XRange::samples() const {
  std::vector<Rational> out;
  for (Rational x = start; x <= stop; x += step) out.push_back(x);
  return out;
}

std::vector<Rational> RunConfig::sweep_samples() const {
  if (x) return {*x};
  return x_range.samples();
}

Rational RunConfig::single_x() const {
  if (x) return *x;
  if (x_range_given) {
    const auto s = x_range.samples();
    if (s.size() != 1) throw UsageError("this subcommand takes a single step size; use --x");
    return s.front();
  }
  return Rational(1);
}

void RunConfig::validate() const {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  if (letters != 2 && letters != 3) throw UsageError("--letters must be 2 or 3");
  if (max_degree) {
    const int lo = letters == 2 ? 2 : 3;
    const int hi = letters == 2 ? 16 : 10;
    if (*max_degree < lo || *max_degree > hi)
      throw UsageError("--max-degree must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] for " +
                       std::to_string(letters) + " letters");
  }
  if ((subcommand == "simulate" || subcommand == "shadow") && n_steps < 1)
    throw UsageError("--steps must be at least 1");
  if (x && x_range_given) throw UsageError("--x and --x-range are mutually exclusive");
}

namespace {

void add_shared_flags(CLI::App* sub, RunConfig& cfg, std::string& scheme, std::string& x, std::string& x_range,
                      std::string& p0, std::string& q0) {
  sub->add_option("--scheme", scheme, "Integrator: first or second")->check(CLI::IsMember({"first", "second"}));
  sub->add_option("--x", x, "Single step size (decimal or p/q)");
  sub->add_option("--x-range", x_range, "Step sizes start:stop:step (default 0:3:0.1)");
  sub->add_option("--steps", cfg.n_steps, "Number of steps");
  sub->add_option("--p0", p0, "Initial momentum (default 1)");
  sub->add_option("--q0", q0, "Initial coordinate (default 0)");
  sub->add_option("--max-degree", cfg.max_degree, "Truncation order of the free-algebra oracle");
  sub->add_option("--letters", cfg.letters, "Alphabet size for coeffs: 2 or 3");
  sub->add_flag("--exact", cfg.exact, "Exact rational arithmetic");
  sub->add_option("--tol", cfg.tol, "Residual threshold for floating-point checks");
  sub->add_option("--max-bits", cfg.max_bits, "Rational width limit for exact trajectories");
  sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shadow energies and effective generators of splitting integrators for the harmonic oscillator",
               "shadowham"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string scheme = "first", x, x_range, p0, q0;
  const std::pair<const char*, const char*> commands[] = {
      {"coeffs", "Goldberg closed forms vs the free-algebra oracle"},
      {"verify", "Structural identities and generator checks per step size"},
      {"simulate", "Trajectory with shadow energy"},
      {"sweep", "Stability, spectral radius and F(x) across step sizes"},
      {"shadow", "Shadow-energy residuals of both schemes side by side"},
  };
  for (const auto& [name, help] : commands) add_shared_flags(app.add_subcommand(name, help), cfg, scheme, x, x_range, p0, q0);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("shadowham");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.scheme = scheme == "second" ? SchemeId::SecondOrder : SchemeId::FirstOrder;
    if (!x.empty()) cfg.x = Rational::parse(x);
    if (!x_range.empty()) {
      cfg.x_range = XRange::parse(x_range);
      cfg.x_range_given = true;
    }
    if (!p0.empty()) cfg.p0 = Rational::parse(p0);
    if (!q0.empty()) cfg.q0 = Rational::parse(q0);
    cfg.validate();
    if (!cfg.out_path.empty()) {
      file = std::make_unique<std::ofstream>(cfg.out_path, std::ios::binary);
      if (!*file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostream& sink = file ? static_cast<std::ostream&>(*file) : out;
  try {
    if (cfg.subcommand == "coeffs") return cmd_coeffs(cfg, sink);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, sink);
    if (cfg.subcommand == "simulate") return cmd_simulate(cfg, sink);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg, sink);
    return cmd_shadow(cfg, sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace shadowham::cli
