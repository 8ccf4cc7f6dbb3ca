#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lpt/bipoly.hpp"
#include "lpt/config.hpp"
#include "lpt/engine.hpp"
#include "lpt/oracle.hpp"

namespace lpt::render {

/// Human-readable polynomial with the rational content of each lambda power
/// factored out, e.g. "5/16·λ·(4n³+6n²+8n+3)".
std::string pretty(const BiPoly& p);

/// E_1..E_K in the given format. Machine format is one record per line,
///   E <k> <deg_n> <deg_lambda> <p/q>
/// exponent-sorted, after a "lpt-series 1" header and an "order K" line.
/// Zero coefficients are written as a single "E <k> 0 0 0" record.
std::string series(const EnergySeries& s, OutputFormat format);

/// Laurent table records "C <k> <i> <deg_n> <deg_lambda> <p/q>" (machine),
/// or the CSV equivalent; pretty lists the nonzero slots.
std::string table(const CTable& t, OutputFormat format);

std::string report(const oracle::OracleReport& r, OutputFormat format);

/// Energy coefficients read back from machine format, keyed by k.
struct SeriesRecords {
  int order = 0;
  std::map<int, BiPoly> coefficients;
};

/// Throws ValidationError with the offending line number.
SeriesRecords parse_machine_series(std::string_view text);

/// Description of the first coefficient where `computed` and `golden`
/// differ, or nullopt if they agree on every order present in either.
std::optional<std::string> first_mismatch(const EnergySeries& computed, const SeriesRecords& golden);

}  // namespace lpt::render
