#pragma once

#include <string_view>

#include "solenoid/groups.hpp"
#include "solenoid/posetlab.hpp"
#include "solenoid/profile.hpp"
#include "solenoid/sequence.hpp"

// Text forms of every value the command line accepts. All parsers consume the
// whole input (surrounding whitespace allowed) and throw ParseError naming the
// offset of the offending token; values that parse but break a type invariant
// (a profile with finite total, a sequence entry of 1) are reported the same
// way.
//
//   group    := term (('x' | '*') term)*
//   term     := atom ('^' nat)?
//   atom     := 'R' | 'T' | '1' | 'Sol' profile | 'S' sequence | '(' group ')'
//   profile  := '{' [prime ':' mult (',' prime ':' mult)*] [';' 'default' '=' ('0'|'w')] '}'
//             | '{' 'default' '=' ('0'|'w') '}'
//   mult     := nat | 'w'
//   sequence := '[' [int (',' int)*] '|' int (',' int)* ']'
//   upset    := 'fin{' nats '}' | 'cofin{' nats '}'
//             | 'ups{' field (';' field)* '}'   with fields except=nats, from=nat, period=nat, word=bits

namespace solenoid {

[[nodiscard]] SupernaturalProfile parse_profile(std::string_view text);
[[nodiscard]] IntSeqSpec parse_sequence(std::string_view text);
[[nodiscard]] RawGroup parse_raw_group(std::string_view text);
/// parse_raw_group followed by normalize_group.
[[nodiscard]] GroupExpr parse_group(std::string_view text);
[[nodiscard]] poset::UPSet parse_upset(std::string_view text);

}  // namespace solenoid
