#include "lpt/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lpt/engine.hpp"
#include "lpt/errors.hpp"
#include "lpt/harmonic.hpp"
#include "lpt/oracle.hpp"
#include "lpt/render.hpp"

namespace lpt::cli {

namespace {

int resolve_order(const RunConfig& cfg, const CommandOptions& opts) {
  const auto order = opts.order ? opts.order : cfg.order;
  if (!order) throw ValidationError("no expansion order: set [expansion] order or pass --order");
  if (*order < 1) throw ValidationError("expansion order must be >= 1");
  return *order;
}

ExpandOptions expand_options(const RunConfig& cfg, const CommandOptions& opts) {
  return ExpandOptions{cfg.parity_shortcut || opts.parity_shortcut};
}

OutputFormat resolve_format(const RunConfig& cfg, const CommandOptions& opts) {
  return opts.format.value_or(cfg.format);
}

// Maps exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CheckResult> run_checks(const PotentialSpec& spec, int order, const ExpandOptions& options,
                                    const std::optional<std::string>& golden) {
  std::vector<CheckResult> results;
  const Expansion ex = expand(spec, order, options);
  const auto& table = ex.table;
  const auto& series = ex.series;

  if (const auto v = find_power_identity_violation(table, series, spec)) {
    results.push_back({"power-identity", false,
                       "identity fails at (k=" + std::to_string(v->k) + ", i=" + std::to_string(v->i) + ")"});
  } else {
    results.push_back({"power-identity", true, "all (k, i) through k=" + std::to_string(order)});
  }

  {
    CheckResult r{"residue-slots", true, ""};
    for (int k = 1; k <= order && r.passed; ++k) {
      const BiPoly expected = k == 1 ? BiPoly::n() : BiPoly{};
      if (table.at(k, 2 * k - 2) != expected) {
        r.passed = false;
        r.detail = "C[" + std::to_string(k) + "][" + std::to_string(2 * k - 2) + "] = " + table.at(k, 2 * k - 2).to_string();
      }
    }
    results.push_back(r);
  }

  {
    const BiPoly e1 = (BiPoly::n() + BiPoly(BigRational(1, 2))) * spec.omega;
    results.push_back({"oscillator-approximation", series[1] == e1, "E_1 = " + render::pretty(series[1])});
  }

  if (spec.couplings.empty()) {
    CheckResult r{"harmonic-reduction", true, ""};
    for (int k = 2; k <= order && r.passed; ++k) {
      if (!series[k].is_zero()) {
        r.passed = false;
        r.detail = "E_" + std::to_string(k) + " = " + render::pretty(series[k]);
      }
    }
    results.push_back(r);

    if (spec.mass == BigRational(1) && spec.omega == BigRational(1)) {
      constexpr unsigned kMaxLevel = 8;
      const auto ds = harmonic::d_sequence(std::max(order, 20));
      results.push_back({"harmonic-limit-crosscheck", harmonic::crosscheck_with_engine(table, ds),
                         "C[k][0] = d_k for k <= " + std::to_string(order)});

      CheckResult hermite{"hermite-recurrence", true, "n <= " + std::to_string(kMaxLevel)};
      CheckResult closure{"laurent-closure", true, "n <= " + std::to_string(kMaxLevel) + ", k <= " + std::to_string(ds.order())};
      for (unsigned n = 0; n <= kMaxLevel; ++n) {
        const auto p = harmonic::reconstruct_polynomial(n, ds);
        if (hermite.passed) {
          if (const auto m = harmonic::find_hermite_ratio_violation(n, p)) {
            hermite.passed = false;
            hermite.detail = "ratio fails at (n=" + std::to_string(n) + ", m=" + std::to_string(*m) + ")";
          }
        }
        if (closure.passed && !harmonic::laurent_closure_check(n, ds, p)) {
          closure.passed = false;
          closure.detail = "P'/P expansion fails at n=" + std::to_string(n);
        }
      }
      results.push_back(hermite);
      results.push_back(closure);
    }
  }

  if (spec.is_even()) {
    const bool even_orders = spec.kills_even_orders();
    CheckResult r{"parity", true, even_orders ? "odd C slots and even E_k vanish" : "odd C slots vanish"};
    for (int k = 0; k <= order && r.passed; ++k) {
      for (int i = 1; i <= table.i_max(); i += 2) {
        if (!table.at(k, i).is_zero()) {
          r.passed = false;
          r.detail = "C[" + std::to_string(k) + "][" + std::to_string(i) + "] != 0";
          break;
        }
      }
    }
    for (int k = 2; k <= order && r.passed && even_orders; k += 2) {
      if (!series[k].is_zero()) {
        r.passed = false;
        r.detail = "E_" + std::to_string(k) + " != 0";
      }
    }
    results.push_back(r);

    const Expansion generic = expand(spec, order, ExpandOptions{false});
    const Expansion shortcut = expand(spec, order, ExpandOptions{true});
    results.push_back({"parity-shortcut-equivalence", generic.table == shortcut.table &&
                                                         generic.series.coefficients == shortcut.series.coefficients,
                       "generic and shortcut tables agree"});
  }

  if (golden) {
    const auto records = render::parse_machine_series(read_file(*golden));
    const auto mismatch = render::first_mismatch(series, records);
    results.push_back({"golden", !mismatch, mismatch ? *mismatch : "matches " + *golden});
  }
  return results;
}

}  // namespace

int cmd_expand(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int order = resolve_order(cfg, opts);
    const auto format = resolve_format(cfg, opts);
    const Expansion ex = expand(cfg.potential(), order, expand_options(cfg, opts));
    std::string text = render::series(ex.series, format);
    if (opts.print_table) text += (format == OutputFormat::pretty ? "\n" : "") + render::table(ex.table, format);
    out << text;
    return kSuccess;
  });
}

int cmd_check(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int order = resolve_order(cfg, opts);
    const auto results = run_checks(validate_potential(cfg.potential()), order, expand_options(cfg, opts), opts.golden);
    const CheckResult* first_failure = nullptr;
    for (const auto& r : results) {
      out << "check " << r.name << ": " << (r.passed ? "PASS" : "FAIL");
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
      if (!r.passed && !first_failure) first_failure = &r;
    }
    if (first_failure) {
      err << "check failed: " << first_failure->name << ": " << first_failure->detail << "\n";
      return kCheckFailed;
    }
    return kSuccess;
  });
}

int cmd_verify(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.oracle) throw ValidationError("verify needs an [oracle] block in the config");
    const int order = resolve_order(cfg, opts);
    const auto& oc = *cfg.oracle;
    const Expansion ex = expand(cfg.potential(), order, expand_options(cfg, opts));
    const auto problem = oracle::make_problem(ex.series.potential, oc.lambda, oc.basis, oc.levels);
    const auto report = oracle::compare_series(ex.series, problem, oc.policy);
    out << render::report(report, resolve_format(cfg, opts));
    switch (report.status) {
      case oracle::ReportStatus::pass:
        return kSuccess;
      case oracle::ReportStatus::basis_not_converged:
        err << "verify: basis not converged: " << report.note << "\n";
        return kInvalidInput;
      default:
        err << "verify: " << oracle::to_string(report.status) << ": " << report.note << "\n";
        return kCheckFailed;
    }
  });
}

}  // namespace lpt::cli
