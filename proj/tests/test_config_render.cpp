#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "lpt/config.hpp"
#include "lpt/render.hpp"
#include "support/random_poly.hpp"

using namespace lpt;

namespace {

BigRational q(long a, long b = 1) { return BigRational(a, b); }

const char* kSextic = R"(# V = x^2/2 + lambda x^6/2
[potential]
m = 1
omega = 1
term = 4 1/2 1

[expansion]
order = 11
)";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parse_config: valid inputs") {
  const RunConfig sextic = parse_config(kSextic);
  CHECK(sextic.mass == q(1));
  CHECK(sextic.order == 11);
  REQUIRE(sextic.terms.size() == 1);
  CHECK(sextic.terms[0] == TermSpec{4, q(1, 2), 1});
  CHECK(sextic.potential().coupling(4) == BiPoly::lambda() * q(1, 2));
  CHECK_FALSE(sextic.oracle.has_value());
  CHECK(sextic.format == OutputFormat::pretty);

  const RunConfig harmonic = parse_config("[potential]\nm = 1\nomega = 1\n");
  CHECK(harmonic.terms.empty());
  CHECK_FALSE(harmonic.order.has_value());
  CHECK(harmonic.potential().couplings.empty());

  const RunConfig repeated = parse_config("[potential]\nm=2/3\nomega=5\nterm = 2 1 0\nterm = 2 3 1\n");
  CHECK(repeated.potential().coupling(2) == BiPoly(1) + BiPoly::lambda() * q(3));

  const RunConfig with_oracle = parse_config(std::string(kSextic) +
                                             "[oracle]\nlambda = 1e-4\nlevels = 0 1 2 3\nbound_floor = 1e-11\n");
  REQUIRE(with_oracle.oracle.has_value());
  CHECK(with_oracle.oracle->lambda == q(1, 10000));
  CHECK(with_oracle.oracle->levels == std::vector<int>{0, 1, 2, 3});
  CHECK(with_oracle.oracle->basis == 60);
  CHECK(with_oracle.oracle->policy.bound_floor == 1e-11);
}

TEST_CASE("parse_config: diagnostics name the line and field") {
  const auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      INFO(what);
      CHECK(what.find(needle) != std::string::npos);
      return;
    }
    FAIL("expected ConfigError for: " << text);
  };
  fails_with("[potential]\nm = 1\nomega = 1\nterm = 4 0.5 1\n", "line 4 (potential.term)");
  fails_with("[potential]\nm = 1\nomega = 1\nterm = 4 0.5 1\n", "floats are not allowed");
  fails_with("[potential]\nm = 1\nomega = 1\ncolour = red\n", "unknown key");
  fails_with("[potential]\nm = 1\n", "missing required field potential.omega");
  fails_with("[expansion]\norder = 3\n", "missing required section [potential]");
  fails_with("[potential]\nm = 1\nomega = 1\n[physics]\n", "unknown section");
  fails_with("[potential]\nm = 1\nm = 2\nomega = 1\n", "duplicate key");
  fails_with("m = 1\n", "outside of any section");
  fails_with("[potential]\nm = 1\nomega = 1\nterm = 0 1 0\n", "must be >= 1");
  fails_with("[potential]\nm = 1\nomega = 1\nterm = 2 1\n", "expected 'term");
  fails_with("[potential]\nm = 1\nomega = 1\n[expansion]\norder = two\n", "expected an integer");
  fails_with("[potential]\nm = 1\nomega = 1\n[oracle]\nbasis = 60\n", "oracle.lambda");
  fails_with("[potential]\nm = 1\nomega = 1\n[output]\nformat = xml\n", "unknown output format");
  fails_with("[potential]\nm = 1\nomega = 1\n[expansion]\nparity_shortcut = yes\n", "true or false");
}

TEST_CASE("render_config round-trips random valid configs") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> small(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    RunConfig c;
    c.mass = test::random_positive_rational(rng);
    c.omega = test::random_positive_rational(rng);
    for (int t = small(rng); t > 0; --t) {
      c.terms.push_back(TermSpec{1 + small(rng), test::random_nonzero_rational(rng), static_cast<unsigned>(small(rng))});
    }
    if (small(rng) > 1) c.order = 1 + small(rng);
    c.parity_shortcut = small(rng) % 2 == 0;
    c.format = static_cast<OutputFormat>(small(rng) % 3);
    if (small(rng) > 2) {
      OracleConfig o;
      o.lambda = test::random_rational(rng);
      o.basis = 30 + small(rng);
      o.levels = {small(rng), small(rng)};
      o.policy.check_basis_size = small(rng) > 2 ? 0 : 80;
      o.policy.bound_floor = 1e-10 / (1 + small(rng));
      o.policy.bound_factor = 10.0 / 3.0;
      c.oracle = o;
    }
    const std::string text = render_config(c);
    INFO(text);
    CHECK(parse_config(text) == c);
    CHECK(render_config(parse_config(text)) == text);
  }
}

TEST_CASE("pretty polynomials") {
  const BiPoly n = BiPoly::n();
  const BiPoly lam = BiPoly::lambda();
  CHECK(render::pretty(BiPoly{}) == "0");
  CHECK(render::pretty(BiPoly(q(-3, 2))) == "-3/2");
  CHECK(render::pretty(n) == "n");
  CHECK(render::pretty(lam * lam * n * q(-1)) == "-λ²·n");
  const BiPoly e3 = lam * q(5, 16) * (BiPoly::term(4, 3, 0) + BiPoly::term(6, 2, 0) + BiPoly::term(8, 1, 0) + BiPoly(3));
  CHECK(render::pretty(e3) == "5/16·λ·(4n³+6n²+8n+3)");
  CHECK(render::pretty(BiPoly(1) - lam * n * q(3)) == "1 - 3·λ·n");
}

TEST_CASE("machine series format parses back and is deterministic") {
  PotentialSpec spec;
  spec.couplings[1] = BiPoly::lambda() * q(2, 3);
  spec.couplings[2] = BiPoly(q(-1, 4));
  const auto a = expand(spec, 5);
  const auto b = expand(spec, 5);
  const std::string text = render::series(a.series, OutputFormat::machine);
  CHECK(text == render::series(b.series, OutputFormat::machine));
  const auto records = render::parse_machine_series(text);
  CHECK(records.order == 5);
  for (int k = 1; k <= 5; ++k) {
    const auto it = records.coefficients.find(k);
    CHECK((it == records.coefficients.end() ? BiPoly{} : it->second) == a.series[k]);
  }
  CHECK_FALSE(render::first_mismatch(a.series, records).has_value());
}

TEST_CASE("golden file comparison") {
  PotentialSpec sextic;
  sextic.couplings[4] = BiPoly::lambda() * q(1, 2);
  const auto ex = expand(sextic, 11);
  const auto golden = render::parse_machine_series(slurp(LPT_TEST_DATA_DIR "/sextic_K11.series"));
  CHECK(golden.order == 11);
  CHECK_FALSE(render::first_mismatch(ex.series, golden).has_value());

  const auto corrupted = render::parse_machine_series(slurp(LPT_TEST_DATA_DIR "/sextic_K11_corrupted.series"));
  const auto mismatch = render::first_mismatch(ex.series, corrupted);
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->find("E_7 mismatch at n^4 lambda^3") != std::string::npos);

  const auto short_run = expand(sextic, 5);
  CHECK(render::first_mismatch(short_run.series, golden).has_value());

  CHECK_THROWS_AS(render::parse_machine_series("order 3\n"), ValidationError);
  CHECK_THROWS_AS(render::parse_machine_series("lpt-series 1\nE 1 0 0 0.5\n"), ValidationError);
  CHECK_THROWS_AS(render::parse_machine_series("lpt-series 1\nE 1 -1 0 1\n"), ValidationError);
  CHECK_THROWS_AS(render::parse_machine_series(""), ValidationError);
}

TEST_CASE("csv series lists zero orders explicitly") {
  const auto ex = expand(PotentialSpec{}, 3);
  CHECK(render::series(ex.series, OutputFormat::csv) == "k,deg_n,deg_lambda,coefficient\n1,0,0,1/2\n1,1,0,1\n2,0,0,0\n3,0,0,0\n");
}

TEST_CASE("table rendering") {
  const auto ex = expand(PotentialSpec{}, 2);
  const std::string machine = render::table(ex.table, OutputFormat::machine);
  CHECK(machine.find("lpt-table 1\norder 2\ni_max 2\n") == 0);
  CHECK(machine.find("C 0 0 0 0 -1\n") != std::string::npos);
  CHECK(machine.find("C 2 0 2 0 1/2\n") != std::string::npos);
  CHECK(machine.find("C 2 0 1 0 -1/2\n") != std::string::npos);
  CHECK(render::table(ex.table, OutputFormat::pretty).find("C[1][0] = n") != std::string::npos);
}
