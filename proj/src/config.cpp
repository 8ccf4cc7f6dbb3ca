#include "lpt/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace lpt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    const auto end = s.find_first_of(" \t");
    words.push_back(s.substr(0, end));
    if (end == std::string_view::npos) break;
    s.remove_prefix(end);
  }
  return words;
}

class LineContext {
 public:
  LineContext(int line, std::string section, std::string key)
      : line_(line), section_(std::move(section)), key_(std::move(key)) {}

  [[nodiscard]] ConfigError error(const std::string& what) const {
    std::string where = "line " + std::to_string(line_);
    if (!key_.empty()) where += " (" + section_ + "." + key_ + ")";
    return ConfigError(where + ": " + what);
  }

  [[nodiscard]] long integer(std::string_view text, long min_value) const {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw error("expected an integer, got '" + std::string(text) + "'");
    }
    if (v < min_value) throw error("value " + std::to_string(v) + " must be >= " + std::to_string(min_value));
    return v;
  }

  [[nodiscard]] double real(std::string_view text) const {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw error("expected a number, got '" + std::string(text) + "'");
    }
    return v;
  }

  [[nodiscard]] BigRational rational(std::string_view text) const {
    try {
      return BigRational::parse(text);
    } catch (const ValidationError& e) {
      throw error(std::string(e.what()) + " (potential coefficients must be exact, floats are not allowed)");
    }
  }

  [[nodiscard]] bool boolean(std::string_view text) const {
    if (text == "true") return true;
    if (text == "false") return false;
    throw error("expected true or false, got '" + std::string(text) + "'");
  }

 private:
  int line_;
  std::string section_;
  std::string key_;
};

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "pretty") return OutputFormat::pretty;
  if (text == "csv") return OutputFormat::csv;
  if (text == "machine") return OutputFormat::machine;
  throw ConfigError("unknown output format '" + std::string(text) + "' (expected pretty, csv or machine)");
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::pretty: return "pretty";
    case OutputFormat::csv: return "csv";
    case OutputFormat::machine: return "machine";
  }
  return "pretty";
}

PotentialSpec RunConfig::potential() const {
  PotentialSpec spec;
  spec.mass = mass;
  spec.omega = omega;
  for (const auto& t : terms) spec.couplings[t.index] += BiPoly::term(t.coefficient, 0, t.lambda_exponent);
  return spec;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::string section;
  std::set<std::string> seen;
  std::set<std::string> sections;
  bool have_m = false;
  bool have_omega = false;
  bool have_lambda = false;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      const LineContext ctx(line_no, section, "");
      if (line.back() != ']') throw ctx.error("unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "potential" && section != "expansion" && section != "output" && section != "oracle") {
        throw ctx.error("unknown section [" + section + "]");
      }
      if (!sections.insert(section).second) throw ctx.error("duplicate section [" + section + "]");
      if (section == "oracle") cfg.oracle.emplace();
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw LineContext(line_no, section, "").error("expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const LineContext ctx(line_no, section, key);
    if (section.empty()) throw ctx.error("key outside of any section");
    if (value.empty()) throw ctx.error("missing value");
    if (key != "term" && !seen.insert(section + "." + key).second) throw ctx.error("duplicate key");

    if (section == "potential") {
      if (key == "m") {
        cfg.mass = ctx.rational(value);
        have_m = true;
      } else if (key == "omega") {
        cfg.omega = ctx.rational(value);
        have_omega = true;
      } else if (key == "term") {
        const auto words = split_words(value);
        if (words.size() != 3) throw ctx.error("expected 'term = <i> <coefficient> <lambda exponent>'");
        cfg.terms.push_back(TermSpec{static_cast<int>(ctx.integer(words[0], 1)), ctx.rational(words[1]),
                                     static_cast<unsigned>(ctx.integer(words[2], 0))});
      } else {
        throw ctx.error("unknown key");
      }
    } else if (section == "expansion") {
      if (key == "order") {
        cfg.order = static_cast<int>(ctx.integer(value, 1));
      } else if (key == "parity_shortcut") {
        cfg.parity_shortcut = ctx.boolean(value);
      } else {
        throw ctx.error("unknown key");
      }
    } else if (section == "output") {
      if (key != "format") throw ctx.error("unknown key");
      try {
        cfg.format = parse_output_format(value);
      } catch (const ConfigError& e) {
        throw ctx.error(e.what());
      }
    } else {
      auto& o = *cfg.oracle;
      if (key == "lambda") {
        try {
          o.lambda = BigRational::parse_decimal(value);
        } catch (const ValidationError& e) {
          throw ctx.error(e.what());
        }
        have_lambda = true;
      } else if (key == "basis") {
        o.basis = static_cast<int>(ctx.integer(value, 2));
      } else if (key == "check_basis") {
        o.policy.check_basis_size = static_cast<int>(ctx.integer(value, 2));
      } else if (key == "levels") {
        o.levels.clear();
        for (auto w : split_words(value)) o.levels.push_back(static_cast<int>(ctx.integer(w, 0)));
      } else if (key == "convergence_tolerance") {
        o.policy.convergence_tolerance = ctx.real(value);
      } else if (key == "bound_factor") {
        o.policy.bound_factor = ctx.real(value);
      } else if (key == "bound_floor") {
        o.policy.bound_floor = ctx.real(value);
      } else {
        throw ctx.error("unknown key");
      }
    }
  }

  if (!sections.contains("potential")) throw ConfigError("missing required section [potential]");
  if (!have_m) throw ConfigError("missing required field potential.m");
  if (!have_omega) throw ConfigError("missing required field potential.omega");
  if (cfg.oracle && !have_lambda) throw ConfigError("missing required field oracle.lambda");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const RunConfig& config) {
  std::ostringstream out;
  out << "[potential]\n";
  out << "m = " << config.mass << "\n";
  out << "omega = " << config.omega << "\n";
  for (const auto& t : config.terms) {
    out << "term = " << t.index << " " << t.coefficient << " " << t.lambda_exponent << "\n";
  }
  out << "\n[expansion]\n";
  if (config.order) out << "order = " << *config.order << "\n";
  out << "parity_shortcut = " << (config.parity_shortcut ? "true" : "false") << "\n";
  out << "\n[output]\nformat = " << to_string(config.format) << "\n";
  if (config.oracle) {
    const auto& o = *config.oracle;
    out << "\n[oracle]\n";
    out << "lambda = " << o.lambda << "\n";
    out << "basis = " << o.basis << "\n";
    if (o.policy.check_basis_size > 0) out << "check_basis = " << o.policy.check_basis_size << "\n";
    out << "levels =";
    for (int l : o.levels) out << " " << l;
    out << "\n";
    out << "convergence_tolerance = " << format_double(o.policy.convergence_tolerance) << "\n";
    out << "bound_factor = " << format_double(o.policy.bound_factor) << "\n";
    out << "bound_floor = " << format_double(o.policy.bound_floor) << "\n";
  }
  return out.str();
}

}  // namespace lpt
