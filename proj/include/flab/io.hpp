#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flab/classical.hpp"
#include "flab/extensions.hpp"

namespace flab {

struct SourcePos {
  int line = 1;
  int column = 1;
};

// Decimal literal with at most six fractional digits, parsed exactly; longer
// literals are rejected rather than rounded.
inline Degree parse_degree(const std::string& text) {
  constexpr int kMaxFractionDigits = 6;
  std::size_t i = 0;
  std::int64_t whole = 0;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw DomainError("malformed degree literal '" + text + "'");
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    if (whole > 10) throw DomainError("degree out of [0,1]: '" + text + "'");
    ++i;
  }
  std::int64_t frac = 0;
  std::int64_t scale = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    int digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (++digits > kMaxFractionDigits)
        throw DomainError("degree '" + text + "' has more than " +
                          std::to_string(kMaxFractionDigits) +
                          " fractional digits");
      frac = frac * 10 + (text[i] - '0');
      scale *= 10;
      ++i;
    }
    if (digits == 0)
      throw DomainError("malformed degree literal '" + text + "'");
  }
  if (i != text.size())
    throw DomainError("malformed degree literal '" + text + "'");
  const Rat value(whole * scale + frac, scale);
  if (value > Rat::integer(1))
    throw DomainError("degree out of [0,1]: '" + text + "'");
  return Degree(value);
}

namespace detail {

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_name(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token)
    if (!is_name_char(c)) return false;
  return true;
}

struct Statement {
  std::string keyword;
  std::vector<std::string> fields;
  SourcePos pos;
};

// Splits a document into `keyword(field, ...).` statements. `#` starts a
// comment running to the end of the line; whitespace and newlines are free
// between tokens, so several statements may share one line.
inline std::vector<Statement> lex_statements(const std::string& text) {
  std::vector<Statement> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  const auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  const auto skip_blank = [&] {
    while (i < text.size()) {
      if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
        advance();
      } else {
        return;
      }
    }
  };

  while (true) {
    skip_blank();
    if (i >= text.size()) return out;
    Statement st;
    st.pos = {line, column};
    if (!is_name_char(text[i]))
      throw ParseError(std::string("unexpected character '") + text[i] + "'",
                       line, column);
    while (i < text.size() && is_name_char(text[i])) {
      st.keyword += text[i];
      advance();
    }
    skip_blank();
    if (i >= text.size() || text[i] != '(')
      throw ParseError("expected '(' after '" + st.keyword + "'", line, column);
    advance();
    bool closed = false;
    std::string field;
    bool field_seen = false;
    bool field_ended = false;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '#' || std::isspace(static_cast<unsigned char>(c))) {
        if (field_seen) field_ended = true;
        skip_blank();
        continue;
      }
      if (c == ',' || c == ')') {
        if (!field_seen && !(c == ')' && st.fields.empty() && field.empty()))
          throw ParseError("empty field", line, column);
        if (field_seen) st.fields.push_back(field);
        field.clear();
        field_seen = false;
        field_ended = false;
        advance();
        if (c == ')') {
          closed = true;
          break;
        }
        continue;
      }
      if (is_name_char(c) || c == '.') {
        if (field_ended)
          throw ParseError("expected ',' or ')' before further field text",
                           line, column);
        field += c;
        field_seen = true;
        advance();
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       column);
    }
    if (!closed) throw ParseError("unterminated statement", st.pos.line, st.pos.column);
    skip_blank();
    if (i >= text.size() || text[i] != '.')
      throw ParseError("expected '.' after ')'", line, column);
    advance();
    out.push_back(std::move(st));
  }
}

inline void require_arity(const Statement& st, std::size_t arity) {
  if (st.fields.size() != arity)
    throw ParseError("'" + st.keyword + "' expects " + std::to_string(arity) +
                         " fields, got " + std::to_string(st.fields.size()),
                     st.pos.line, st.pos.column);
}

inline std::string checked_name(const Statement& st, std::size_t field) {
  if (!is_name(st.fields[field]))
    throw ParseError("invalid argument name '" + st.fields[field] + "'",
                     st.pos.line, st.pos.column);
  return st.fields[field];
}

inline Degree checked_degree(const Statement& st, std::size_t field) {
  try {
    return parse_degree(st.fields[field]);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), st.pos.line, st.pos.column);
  }
}

}  // namespace detail

// A parsed FAS document: `arg(<name>, <degree>).` and
// `att(<from>, <to>, <degree>).` statements.
struct FasDocument {
  std::string source;
  Fas fas;
  std::map<ArgumentId, SourcePos> argument_positions;
};

inline FasDocument parse_fas(const std::string& text) {
  FasDocument doc;
  doc.source = text;
  std::map<std::pair<ArgumentId, ArgumentId>, bool> seen_attacks;
  for (const auto& st : detail::lex_statements(text)) {
    if (st.keyword == "arg") {
      detail::require_arity(st, 2);
      const ArgumentId name = detail::checked_name(st, 0);
      const Degree degree = detail::checked_degree(st, 1);
      if (doc.fas.has_argument(name))
        throw ParseError("duplicate argument '" + name + "'", st.pos.line,
                         st.pos.column);
      doc.fas.add_argument(name, degree);
      doc.argument_positions[name] = st.pos;
    } else if (st.keyword == "att") {
      detail::require_arity(st, 3);
      const ArgumentId from = detail::checked_name(st, 0);
      const ArgumentId to = detail::checked_name(st, 1);
      const Degree weight = detail::checked_degree(st, 2);
      if (!doc.fas.has_argument(from) || !doc.fas.has_argument(to))
        throw ParseError("attack references undeclared argument", st.pos.line,
                         st.pos.column);
      if (seen_attacks.contains({from, to}))
        throw ParseError("duplicate attack (" + from + "," + to + ")",
                         st.pos.line, st.pos.column);
      seen_attacks[{from, to}] = true;
      doc.fas.add_attack(from, to, weight);
    } else {
      throw ParseError("unknown statement '" + st.keyword + "'", st.pos.line,
                       st.pos.column);
    }
  }
  return doc;
}

// A parsed labeling document: `lab(<name>, <a>, <r>, <u>).` statements. The
// parser does not enforce postulates; totality against a companion FAS is a
// check-time concern.
struct LabelingDocument {
  std::string source;
  FuzzyLabeling labeling;
};

inline LabelingDocument parse_labeling(const std::string& text) {
  LabelingDocument doc;
  doc.source = text;
  for (const auto& st : detail::lex_statements(text)) {
    if (st.keyword != "lab")
      throw ParseError("unknown statement '" + st.keyword + "'", st.pos.line,
                       st.pos.column);
    detail::require_arity(st, 4);
    const ArgumentId name = detail::checked_name(st, 0);
    if (doc.labeling.contains(name))
      throw ParseError("duplicate labeling for '" + name + "'", st.pos.line,
                       st.pos.column);
    doc.labeling.set(name, LabelTriple{detail::checked_degree(st, 1),
                                       detail::checked_degree(st, 2),
                                       detail::checked_degree(st, 3)});
  }
  return doc;
}

// `arg(<name>).` and `att(<from>, <to>).` — the weight-free restriction of
// the FAS format.
inline Af parse_af(const std::string& text) {
  Af af;
  std::map<std::pair<ArgumentId, ArgumentId>, bool> seen;
  for (const auto& st : detail::lex_statements(text)) {
    if (st.keyword == "arg") {
      detail::require_arity(st, 1);
      const ArgumentId name = detail::checked_name(st, 0);
      if (af.args.contains(name))
        throw ParseError("duplicate argument '" + name + "'", st.pos.line,
                         st.pos.column);
      af.add_argument(name);
    } else if (st.keyword == "att") {
      detail::require_arity(st, 2);
      const ArgumentId from = detail::checked_name(st, 0);
      const ArgumentId to = detail::checked_name(st, 1);
      if (!af.args.contains(from) || !af.args.contains(to))
        throw ParseError("attack references undeclared argument", st.pos.line,
                         st.pos.column);
      if (seen.contains({from, to}))
        throw ParseError("duplicate attack (" + from + "," + to + ")",
                         st.pos.line, st.pos.column);
      seen[{from, to}] = true;
      af.add_attack(from, to);
    } else {
      throw ParseError("unknown statement '" + st.keyword + "'", st.pos.line,
                       st.pos.column);
    }
  }
  return af;
}

// `clab(<name>, in|out|undec).` statements.
inline ClassicalLabeling parse_clab(const std::string& text) {
  ClassicalLabeling lab;
  for (const auto& st : detail::lex_statements(text)) {
    if (st.keyword != "clab")
      throw ParseError("unknown statement '" + st.keyword + "'", st.pos.line,
                       st.pos.column);
    detail::require_arity(st, 2);
    const ArgumentId name = detail::checked_name(st, 0);
    if (lab.labels.contains(name))
      throw ParseError("duplicate label for '" + name + "'", st.pos.line,
                       st.pos.column);
    const std::string& label = st.fields[1];
    if (label == "in")
      lab.labels[name] = ClassicalLabel::In;
    else if (label == "out")
      lab.labels[name] = ClassicalLabel::Out;
    else if (label == "undec")
      lab.labels[name] = ClassicalLabel::Undec;
    else
      throw ParseError("label must be in, out or undec, got '" + label + "'",
                       st.pos.line, st.pos.column);
  }
  return lab;
}

// `ext(<name>, <degree>).` statements describing a fuzzy set.
inline FExtension parse_extension(const std::string& text) {
  FExtension ext;
  std::map<ArgumentId, bool> seen;
  for (const auto& st : detail::lex_statements(text)) {
    if (st.keyword != "ext")
      throw ParseError("unknown statement '" + st.keyword + "'", st.pos.line,
                       st.pos.column);
    detail::require_arity(st, 2);
    const ArgumentId name = detail::checked_name(st, 0);
    if (seen.contains(name))
      throw ParseError("duplicate extension entry for '" + name + "'",
                       st.pos.line, st.pos.column);
    seen[name] = true;
    ext.degrees.set(name, detail::checked_degree(st, 1));
  }
  return ext;
}

inline std::string render_fas(const Fas& fas) {
  std::string out;
  for (const auto& [name, degree] : fas.arguments())
    out += "arg(" + name + ", " + render_degree(degree) + ").\n";
  for (const auto& [edge, weight] : fas.attacks())
    out += "att(" + edge.first + ", " + edge.second + ", " +
           render_degree(weight) + ").\n";
  return out;
}

inline std::string render_labeling(const FuzzyLabeling& lab) {
  std::string out;
  for (const auto& [name, triple] : lab.triples())
    out += "lab(" + name + ", " + render_degree(triple.a) + ", " +
           render_degree(triple.r) + ", " + render_degree(triple.u) + ").\n";
  return out;
}

inline std::string render_af(const Af& af) {
  std::string out;
  for (const auto& name : af.args) out += "arg(" + name + ").\n";
  for (const auto& [from, to] : af.atts)
    out += "att(" + from + ", " + to + ").\n";
  return out;
}

inline std::string render_clab(const ClassicalLabeling& lab) {
  std::string out;
  for (const auto& [name, label] : lab.labels)
    out += "clab(" + name + ", " + std::string(to_string(label)) + ").\n";
  return out;
}

inline std::string render_extension(const FExtension& ext) {
  std::string out;
  for (const auto& [name, degree] : ext.degrees.entries())
    out += "ext(" + name + ", " + render_degree(degree) + ").\n";
  return out;
}

}  // namespace flab
