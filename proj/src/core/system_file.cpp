#include "core/system_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "core/error.hpp"
#include "core/regex.hpp"

namespace ans {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Splits "key: rest"; returns false when the line has no such key.
bool key_value(std::string_view line, std::string_view key, std::string_view& rest) {
  if (line.substr(0, key.size()) != key) return false;
  std::string_view after = line.substr(key.size());
  if (after.empty() || after.front() != ':') return false;
  rest = strip(after.substr(1));
  return true;
}

struct Table {
  std::size_t line = 0;
  std::optional<long> states;
  std::optional<long> initial;
  std::size_t initial_line = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> finals;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> transitions;
};

long parse_index(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 0) throw ParseError(line, "expected a state number, got '" + token + "'");
  return v;
}

Dfa build_table(const Table& t, const OrderedAlphabet& alphabet) {
  if (!t.states) throw ParseError(t.line, "dfa table lacks a 'states' line");
  const long n = *t.states;
  if (n > 0 && !t.initial) throw ParseError(t.line, "dfa table lacks an 'initial' line");
  auto check = [&](long s, std::size_t line) {
    if (s >= n) throw ParseError(line, "state " + std::to_string(s) + " out of range");
    return static_cast<State>(s);
  };
  Dfa d(alphabet, static_cast<std::size_t>(n), n > 0 ? check(*t.initial, t.initial_line) : kNoState);
  for (const auto& [line, list] : t.finals) {
    for (const auto& tok : list) d.set_final(check(parse_index(tok, line), line));
  }
  for (const auto& [line, tr] : t.transitions) {
    if (tr.size() != 3 || tr[1].size() != 1) {
      throw ParseError(line, "expected 'trans <src> <letter> <dst>'");
    }
    State src = check(parse_index(tr[0], line), line);
    State dst = check(parse_index(tr[2], line), line);
    auto a = alphabet.index_of(tr[1][0]);
    if (!a) throw ParseError(line, "letter '" + tr[1] + "' is not in the alphabet");
    State old = d.next(src, *a);
    if (old != kNoState && old != dst) throw ParseError(line, "nondeterministic transition");
    d.set_transition(src, *a, dst);
  }
  return d;
}

}  // namespace

SystemSpec parse_system(std::string_view text) {
  SystemSpec spec;
  bool have_alphabet = false;
  enum class Section { Top, Language, Set, Expect } section = Section::Top;
  std::optional<LanguageSource> language, set;
  std::optional<Table> table;
  Section table_owner = Section::Top;

  auto flush_table = [&]() {
    if (!table) return;
    LanguageSource src;
    src.dfa = build_table(*table, spec.alphabet);
    (table_owner == Section::Language ? language : set) = std::move(src);
    table.reset();
  };
  auto block_target = [&](std::size_t line) -> std::optional<LanguageSource>& {
    if (section == Section::Language) return language;
    if (section == Section::Set) return set;
    throw ParseError(line, "'regex:' and 'dfa:' belong inside a language: or set: block");
  };

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip(text.substr(begin, end - begin));
    begin = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::string_view rest;
    if (key_value(line, "name", rest)) {
      flush_table();
      section = Section::Top;
      spec.name = std::string(rest);
    } else if (key_value(line, "alphabet", rest)) {
      flush_table();
      section = Section::Top;
      std::string letters;
      for (const auto& tok : tokens(rest)) {
        if (tok.size() != 1) throw ParseError(line_no, "alphabet letters must be single characters");
        letters += tok;
      }
      try {
        spec.alphabet = OrderedAlphabet(letters);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      if (letters.empty()) throw ParseError(line_no, "empty alphabet");
      have_alphabet = true;
    } else if (key_value(line, "language", rest) || key_value(line, "set", rest)) {
      flush_table();
      if (!rest.empty()) throw ParseError(line_no, "unexpected text after block header");
      if (!have_alphabet) throw ParseError(line_no, "alphabet must be declared before languages");
      section = line.front() == 'l' ? Section::Language : Section::Set;
      if (block_target(line_no)) throw ParseError(line_no, "duplicate block");
    } else if (key_value(line, "expect", rest)) {
      flush_table();
      section = Section::Expect;
    } else if (key_value(line, "regex", rest)) {
      flush_table();
      auto& target = block_target(line_no);
      if (target) throw ParseError(line_no, "block already has a language");
      LanguageSource src;
      try {
        src.dfa = parse_regex(rest, spec.alphabet);
      } catch (const ParseError& e) {
        throw ParseError(line_no, std::string("in regex: ") + e.what());
      }
      src.regex = std::string(rest);
      target = std::move(src);
    } else if (key_value(line, "dfa", rest)) {
      flush_table();
      if (block_target(line_no)) throw ParseError(line_no, "block already has a language");
      table = Table{};
      table->line = line_no;
      table_owner = section;
    } else if (section == Section::Expect) {
      auto toks = tokens(line);
      const std::string& head = toks.front();
      if (head == "enum") {
        spec.expect.enumeration.assign(toks.begin() + 1, toks.end());
      } else if (head == "sig") {
        spec.expect.sig = std::string(line);
      } else if (head == "setsig") {
        spec.expect.set_sig = "sig" + std::string(line.substr(6));
      } else if (head == "class") {
        spec.expect.cls = std::string(line);
      } else {
        throw ParseError(line_no, "unknown expectation '" + head + "'");
      }
    } else if (table) {
      auto toks = tokens(line);
      const std::string head = toks.front();
      toks.erase(toks.begin());
      if (head == "states" && toks.size() == 1) {
        table->states = parse_index(toks[0], line_no);
      } else if (head == "initial" && toks.size() == 1) {
        table->initial = parse_index(toks[0], line_no);
        table->initial_line = line_no;
      } else if (head == "final") {
        table->finals.emplace_back(line_no, toks);
      } else if (head == "trans") {
        table->transitions.emplace_back(line_no, toks);
      } else {
        throw ParseError(line_no, "unrecognized table line '" + std::string(line) + "'");
      }
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
  }
  flush_table();
  if (!have_alphabet) throw ParseError(line_no, "missing alphabet");
  if (!language) throw ParseError(line_no, "missing language block");
  spec.language = std::move(*language);
  spec.set = std::move(set);
  if (spec.set && !is_subset(minimize(spec.set->dfa), minimize(spec.language.dfa))) {
    throw Error(ErrorKind::NotSubset, "set language is not contained in the numeration language");
  }
  return spec;
}

SystemSpec load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string emit_dfa_table(const Dfa& input, std::string_view indent) {
  Dfa d = minimize(input);
  std::ostringstream out;
  out << indent << "states " << d.num_states() << '\n';
  if (d.empty()) return out.str();
  out << indent << "initial " << d.initial() << '\n';
  std::string finals;
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    if (d.is_final(static_cast<State>(q))) finals += ' ' + std::to_string(q);
  }
  if (!finals.empty()) out << indent << "final" << finals << '\n';
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(static_cast<State>(q), a);
      if (t != kNoState) {
        out << indent << "trans " << q << ' ' << d.alphabet().letter(a) << ' ' << t << '\n';
      }
    }
  }
  return out.str();
}

std::string emit_system(const SystemSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name: " << spec.name << '\n';
  out << "alphabet:";
  for (char c : spec.alphabet.letters()) out << ' ' << c;
  out << '\n';
  auto block = [&](const char* header, const LanguageSource& src) {
    out << header << ":\n";
    if (!src.regex.empty()) {
      out << "  regex: " << src.regex << '\n';
    } else {
      out << "  dfa:\n" << emit_dfa_table(src.dfa, "    ");
    }
  };
  block("language", spec.language);
  if (spec.set) block("set", *spec.set);
  if (!spec.expect.empty()) {
    out << "expect:\n";
    if (!spec.expect.enumeration.empty()) {
      out << "  enum";
      for (const auto& v : spec.expect.enumeration) out << ' ' << v;
      out << '\n';
    }
    if (!spec.expect.sig.empty()) out << "  " << spec.expect.sig << '\n';
    if (!spec.expect.set_sig.empty()) out << "  set" << spec.expect.set_sig << '\n';
    if (!spec.expect.cls.empty()) out << "  " << spec.expect.cls << '\n';
  }
  return out.str();
}

NumerationSystem build_system(const SystemSpec& spec) {
  try {
    return NumerationSystem(spec.language.dfa);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyLanguage || e.kind() == ErrorKind::FiniteLanguage) {
      throw Error(ErrorKind::InvalidSpec, e.what());
    }
    throw;
  }
}

RecognizableSet build_set(const SystemSpec& spec) {
  if (!spec.set) throw Error(ErrorKind::InvalidArgument, "the spec has no set: block");
  return RecognizableSet(build_system(spec), spec.set->dfa);
}

}  // namespace ans
