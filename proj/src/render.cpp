#include "lpt/render.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <vector>

#include "lpt/errors.hpp"

namespace lpt::render {

namespace {

std::string superscript(unsigned e) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(e)) s += digits[c - '0'];
  return s;
}

std::string power_of(const char* symbol, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? std::string(symbol) : std::string(symbol) + superscript(e);
}

// Rational content of a polynomial in n: gcd(numerators)/lcm(denominators),
// signed like the leading coefficient.
BigRational content(const BiPoly& p) {
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  BigRational g = BigRational::parse(num.get_str() + "/" + den.get_str());
  return p.terms().rbegin()->second.sign() < 0 ? -g : g;
}

// Integer-coefficient polynomial in n, highest degree first: "4n³+6n²+8n+3".
std::string integer_poly(const BiPoly& p) {
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool unit = c.abs() == BigRational(1) && m.deg_n > 0;
    if (c.sign() < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    if (!unit) s += c.abs().to_string();
    s += power_of("n", m.deg_n);
  }
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string short_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

}  // namespace

std::string pretty(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (unsigned j = 0; j <= p.degree_lambda(); ++j) {
    const BiPoly slice = p.lambda_slice(j);
    if (slice.is_zero()) continue;
    const BigRational g = content(slice);
    const BiPoly reduced = slice.scale_div(g);
    const std::string lam = power_of("λ", j);

    std::vector<std::string> factors;
    const bool single = reduced.terms().size() == 1;
    if (!single) {
      if (g.abs() != BigRational(1)) factors.push_back(g.abs().to_string());
      if (!lam.empty()) factors.push_back(lam);
      factors.push_back("(" + integer_poly(reduced) + ")");
    } else {
      const unsigned dn = reduced.terms().begin()->first.deg_n;
      if (g.abs() != BigRational(1) || (lam.empty() && dn == 0)) factors.push_back(g.abs().to_string());
      if (!lam.empty()) factors.push_back(lam);
      if (dn > 0) factors.push_back(power_of("n", dn));
    }
    std::string term;
    for (const auto& f : factors) term += (term.empty() ? "" : "·") + f;

    if (g.sign() < 0) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    out += term;
  }
  return out;
}

std::string series(const EnergySeries& s, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::pretty: {
      const int width = static_cast<int>(std::to_string(s.order).size());
      for (int k = 1; k <= s.order; ++k) {
        out << "E_" << std::left << std::setw(width) << k << " = " << pretty(s[k]) << "\n";
      }
      break;
    }
    case OutputFormat::csv:
      out << "k,deg_n,deg_lambda,coefficient\n";
      for (int k = 1; k <= s.order; ++k) {
        if (s[k].is_zero()) out << k << ",0,0,0\n";
        for (const auto& [m, c] : s[k].terms()) out << k << "," << m.deg_n << "," << m.deg_lambda << "," << c << "\n";
      }
      break;
    case OutputFormat::machine:
      out << "lpt-series 1\norder " << s.order << "\n";
      for (int k = 1; k <= s.order; ++k) {
        if (s[k].is_zero()) out << "E " << k << " 0 0 0\n";
        for (const auto& [m, c] : s[k].terms()) out << "E " << k << " " << m.deg_n << " " << m.deg_lambda << " " << c << "\n";
      }
      break;
  }
  return out.str();
}

std::string table(const CTable& t, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::csv) out << "k,i,deg_n,deg_lambda,coefficient\n";
  if (format == OutputFormat::machine) out << "lpt-table 1\norder " << t.order() << "\ni_max " << t.i_max() << "\n";
  for (int k = 0; k <= t.order(); ++k) {
    for (int i = 0; i < t.filled(k); ++i) {
      const BiPoly& c = t.at(k, i);
      if (format == OutputFormat::pretty) {
        if (!c.is_zero()) out << "C[" << k << "][" << i << "] = " << pretty(c) << "\n";
        continue;
      }
      for (const auto& [m, v] : c.terms()) {
        if (format == OutputFormat::csv) {
          out << k << "," << i << "," << m.deg_n << "," << m.deg_lambda << "," << v << "\n";
        } else {
          out << "C " << k << " " << i << " " << m.deg_n << " " << m.deg_lambda << " " << v << "\n";
        }
      }
    }
  }
  return out.str();
}

std::string report(const oracle::OracleReport& r, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::pretty:
      out << "oracle status: " << oracle::to_string(r.status) << "\n";
      out << std::left << std::setw(6) << "level" << std::setw(26) << "eigenvalue" << std::setw(26) << "partial_sum"
          << std::setw(5) << "k*" << std::setw(15) << "first_omitted" << std::setw(15) << "discrepancy"
          << std::setw(15) << "bound" << "verdict\n";
      for (const auto& l : r.levels) {
        out << std::left << std::setw(6) << l.level << std::setw(26) << format_double(l.eigenvalue) << std::setw(26)
            << format_double(l.series_partial_sum) << std::setw(5) << l.truncation_order << std::setw(15)
            << short_double(l.first_omitted_term) << std::setw(15) << short_double(l.discrepancy) << std::setw(15)
            << short_double(l.bound) << (l.within_bound ? "ok" : "FAIL") << "\n";
      }
      if (!r.note.empty()) out << "note: " << r.note << "\n";
      break;
    case OutputFormat::csv:
      out << "level,eigenvalue,eigenvalue_check,series_partial_sum,truncation_order,first_omitted_term,discrepancy,"
             "bound,within_bound\n";
      for (const auto& l : r.levels) {
        out << l.level << "," << format_double(l.eigenvalue) << "," << format_double(l.eigenvalue_check) << ","
            << format_double(l.series_partial_sum) << "," << l.truncation_order << ","
            << format_double(l.first_omitted_term) << "," << format_double(l.discrepancy) << ","
            << format_double(l.bound) << "," << (l.within_bound ? "true" : "false") << "\n";
      }
      break;
    case OutputFormat::machine:
      out << "lpt-oracle 1\nstatus " << oracle::to_string(r.status) << "\n";
      for (const auto& l : r.levels) {
        out << "level " << l.level << " eigenvalue=" << format_double(l.eigenvalue)
            << " eigenvalue_check=" << format_double(l.eigenvalue_check)
            << " partial_sum=" << format_double(l.series_partial_sum) << " k_star=" << l.truncation_order
            << " first_omitted=" << format_double(l.first_omitted_term)
            << " discrepancy=" << format_double(l.discrepancy) << " bound=" << format_double(l.bound)
            << " within_bound=" << (l.within_bound ? "true" : "false") << "\n";
      }
      if (!r.note.empty()) out << "note " << r.note << "\n";
      break;
  }
  return out.str();
}

SeriesRecords parse_machine_series(std::string_view text) {
  SeriesRecords out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  const auto fail = [&](const std::string& what) {
    return ValidationError("series file line " + std::to_string(line_no) + ": " + what);
  };
  const auto to_int = [&](const std::string& word, int min_value) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || ptr != word.data() + word.size() || v < min_value) {
      throw fail("bad integer '" + word + "'");
    }
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream words(line);
    std::string tag;
    words >> tag;
    if (!header) {
      std::string version;
      words >> version;
      if (tag != "lpt-series" || version != "1") throw fail("expected header 'lpt-series 1'");
      header = true;
      continue;
    }
    if (tag == "order") {
      std::string k;
      words >> k;
      out.order = to_int(k, 1);
      continue;
    }
    if (tag != "E") throw fail("unexpected record '" + tag + "'");
    std::string k, dn, dl, coeff, extra;
    if (!(words >> k >> dn >> dl >> coeff) || (words >> extra)) throw fail("expected 'E k deg_n deg_lambda p/q'");
    BigRational c;
    try {
      c = BigRational::parse(coeff);
    } catch (const ValidationError& e) {
      throw fail(e.what());
    }
    out.coefficients[to_int(k, 1)] +=
        BiPoly::term(c, static_cast<unsigned>(to_int(dn, 0)), static_cast<unsigned>(to_int(dl, 0)));
  }
  if (!header) throw ValidationError("series file is empty");
  return out;
}

std::optional<std::string> first_mismatch(const EnergySeries& computed, const SeriesRecords& golden) {
  if (golden.order > computed.order) {
    return "golden file has order " + std::to_string(golden.order) + " but only " + std::to_string(computed.order) +
           " orders were computed";
  }
  for (int k = 1; k <= golden.order; ++k) {
    const auto it = golden.coefficients.find(k);
    const BiPoly expected = it == golden.coefficients.end() ? BiPoly{} : it->second;
    if (expected == computed[k]) continue;
    std::string msg = "E_" + std::to_string(k) + " mismatch";
    const BiPoly diff = computed[k] - expected;
    const Monomial m = diff.terms().begin()->first;
    msg += " at n^" + std::to_string(m.deg_n) + " lambda^" + std::to_string(m.deg_lambda) + ": expected " +
           expected.coefficient(m).to_string() + ", computed " + computed[k].coefficient(m).to_string();
    return msg;
  }
  return std::nullopt;
}

}  // namespace lpt::render
