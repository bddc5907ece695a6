#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "folindex/forms.hpp"
#include "folindex/indices.hpp"
#include "folindex/series.hpp"

namespace folindex {

/// Source position of a statement or argument.  Ignored by AST equality.
struct Loc {
  int line = 0;
  int col = 0;
};

struct PointValue {
  std::optional<std::size_t> chart;  // written as "point chart k (...)"
  Point coords;

  friend bool operator==(const PointValue&, const PointValue&) = default;
};

/// foliation(<vf or form>) [degree d]; the source is affine, on chart 0.
struct FoliationValue {
  std::string source_name;  // empty when written inline
  std::variant<VectorField, DiffForm> source;
  std::optional<long> degree;

  friend bool operator==(const FoliationValue&, const FoliationValue&) = default;
};

using Value = std::variant<Poly, VectorField, DiffForm, Branch, PointValue, FoliationValue>;

/// A command argument: a declared name (with its value resolved at parse
/// time) or an inline literal, in which case name is empty.
struct Arg {
  std::string name;
  Value value;
  Loc loc;

  friend bool operator==(const Arg& a, const Arg& b) { return a.name == b.name && a.value == b.value; }
};

struct Decl {
  std::string name;
  Value value;
  Loc loc;

  friend bool operator==(const Decl& a, const Decl& b) { return a.name == b.name && a.value == b.value; }
};

/// One index, residue or check command.  Which slots are filled depends on
/// the verb:
///   milnor|tjurina f at p          tjurina|homological|gsv|radial v along f at p
///   ph v at p                      gsv v along (f1, ..., fk) at p
///   cs|var v along f at p [with b, ...]
///   logindex v along (x_i, ...) at p
///   bb v phi <poly in c1..cn> at p
///   residue h over v at p
///   check <identity> F [along C | along (C1, ...)] at p [with b, ...], q ...
///   check affine v equals N
struct Command {
  std::string verb;
  std::string kind;  // identity name for check
  std::vector<Arg> subjects;
  std::vector<Arg> along;
  bool along_list = false;  // along written with parentheses
  std::optional<Poly> phi;
  std::vector<Arg> points;
  std::vector<std::vector<Arg>> branches;  // parallel to points
  std::optional<long> equals;
  Loc loc;

  friend bool operator==(const Command& a, const Command& b) {
    return a.verb == b.verb && a.kind == b.kind && a.subjects == b.subjects && a.along == b.along &&
           a.along_list == b.along_list && a.phi == b.phi && a.points == b.points && a.branches == b.branches &&
           a.equals == b.equals;
  }
};

struct Session {
  std::vector<std::string> ring;
  std::vector<Decl> decls;
  std::vector<Command> commands;

  friend bool operator==(const Session& a, const Session& b) {
    return a.ring == b.ring && a.decls == b.decls && a.commands == b.commands;
  }
};

/// Errors: SyntaxError (with line and column), UndeclaredName, RingMismatch.
Session parse_session(std::string_view text);

/// Canonical text; parse_session(print_session(s)) == s.
std::string print_session(const Session& s);
std::string print_command(const Session& s, const Command& c);
std::string print_value(const Session& s, const Value& v);

}  // namespace folindex
