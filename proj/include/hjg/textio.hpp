#pragma once

#include "hjg/exact_quad.hpp"
#include "hjg/shapley.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hjg {

// Shortest round-trip decimal form of v (std::to_chars), independent of
// locale, so emitted tables are byte-identical across runs and machines.
std::string format_double(double v);

// Exact rational from a decimal literal ("0.25", "-3e-2", "1.5e+1") or a
// fraction "p/q".  No rounding happens: 0.1 parses as 1/10, not as the
// nearest double.  Throws std::invalid_argument on anything else.
Rational parse_decimal_rational(std::string_view text);

// Minimal CSV: UTF-8, comma separated, '\n' line ends, one header row.
// Cells are written verbatim (no cell we emit ever needs quoting).
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Static SVG chart of w_plus against log2(1/lambda), one polyline per
// sequence label, with a dashed reference line at 1/sqrt(2).  Deterministic
// output: fixed layout, fixed-precision coordinates.
void write_sequence_plot(std::ostream& os,
                         const std::vector<SequenceRecord>& records);

}  // namespace hjg
