#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/automata.hpp"
#include "core/numeration.hpp"

namespace ans {

struct LanguageSource {
  Dfa dfa;
  /// Source expression when the block was given as `regex:`; empty for tables.
  std::string regex;
};

/// Optional `expect:` block: golden values checked by `verify`.
struct Expectations {
  std::vector<std::string> enumeration;  // first values of t_X
  std::string sig;                       // signature line of L
  std::string set_sig;                   // signature line of rep_S(X)
  std::string cls;                       // class line
  bool empty() const { return enumeration.empty() && sig.empty() && set_sig.empty() && cls.empty(); }
};

struct SystemSpec {
  std::string name;
  OrderedAlphabet alphabet;
  LanguageSource language;
  std::optional<LanguageSource> set;
  Expectations expect;
};

/// Parses the text format; ParseError positions are 1-based line numbers.
/// Also rejects a `set:` language that is not contained in L (NotSubset).
SystemSpec parse_system(std::string_view text);
SystemSpec load_system_file(const std::string& path);

/// Canonical text. Regex sources are kept verbatim; tables are written from
/// the minimal automaton.
std::string emit_system(const SystemSpec& spec);

std::string emit_dfa_table(const Dfa& d, std::string_view indent);

NumerationSystem build_system(const SystemSpec& spec);
/// Throws InvalidArgument when the spec has no `set:` block.
RecognizableSet build_set(const SystemSpec& spec);

}  // namespace ans
