#pragma once
// Exact text and JSON forms for field values, sequences, and reports.
//
// The binding contract is the round trip: every string produced by a
// format_* function parses back to the identical exact value.  Parsers
// additionally accept convenience spellings (explicit "1*sqrt(d)"
// coefficients, a leading "+", surrounding whitespace, and the symbolic
// constants "r0", "r1", and "phi(p/q)") that normalize on construction.
//
// Text grammar, after whitespace removal:
//   rational   ::=  [+-] digits [ "/" digits ]
//   radical    ::=  [ digits ["/" digits] "*" ] "sqrt(" digits ")"
//   value      ::=  rational | [rational] [+-] radical
//                 | "r0" | "r1" | "phi(" rational ")"
//   sequence   ::=  value { "," value }
//
// Canonical output prints integers without "/1", drops a zero rational part
// and a unit radical coefficient, and folds the radical sign into the
// connecting operator: "3/2+1/2*sqrt(5)", "1+sqrt(2)", "-sqrt(2)", "7".

#include <string>

#include <json.hpp>

#include "logcave/criteria.hpp"
#include "logcave/pascal.hpp"
#include "logcave/qfield.hpp"
#include "logcave/seq.hpp"

namespace logcave {

using Json = nlohmann::json;

std::string format_rat(const Rat& v);
std::string format_qf(const QField& v);
// Comma-separated canonical entries, no braces: "1,6,6,1".
std::string format_seq(const Seq& s);

// All parsers throw parse_error on malformed text.
Rat parse_rat(const std::string& text);
QField parse_qf(const std::string& text);
Seq parse_seq(const std::string& text);

std::string parity_name(Parity p);
Parity parse_parity(const std::string& text);

// {"core": ["...", ...], "parity": "even"|"odd"}
Json symseq_to_json(const SymSeq& s);
SymSeq symseq_from_json(const Json& j);

// {"verdict", "criterion", "r", "iterations", "failing": {"iteration","index"}|null}
Json certificate_to_json(const Certificate& c);

// {"outcome", "iterations", "failing": {...}|null}
Json orbit_scan_to_json(const OrbitScan& s);

// {"n", "classic": ...|null, "comparative": ...|null, "generalized": ...|null}
// with "wall_ms" added only when timings are requested, so that default
// reports are byte-reproducible.
Json row_report_to_json(const RowReport& rep, bool include_timings);

}  // namespace logcave
