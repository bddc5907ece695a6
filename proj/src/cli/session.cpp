#include "folindex/session.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "folindex/chern.hpp"
#include "folindex/errors.hpp"
#include "folindex/expr.hpp"
#include "folindex/lexer.hpp"

namespace folindex {

namespace {

const std::set<std::string> verbs = {"milnor",   "tjurina", "ph", "homological", "gsv",     "cs",
                                     "var",      "radial",  "logindex",          "bb",      "residue", "check"};
const std::set<std::string> keywords = {"ring",  "vf",   "form", "branch", "order", "point",  "chart",
                                        "foliation", "degree", "at", "along", "with", "over", "phi",
                                        "equals", "affine"};
// Tokens that may follow a poly argument written as a bare name.
const std::set<std::string> arg_end = {"at", "along", "with", "over", "phi", "equals", ",", ")", ";"};

std::string where(const Token& t) { return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col); }

Loc loc_of(const Token& t) { return {t.line, t.col}; }

std::vector<std::string> chern_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

class SessionParser {
public:
  explicit SessionParser(std::string_view text) : ts_(tokenize(text)) {}

  Session run() {
    while (!ts_.at_end()) statement();
    if (!have_ring_) throw Error(ErrorKind::SyntaxError, "line 1, column 1: missing ring declaration");
    return std::move(s_);
  }

private:
  std::size_t n() const { return s_.ring.size(); }

  const Value* lookup(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &s_.decls[it->second].value;
  }

  template <class T>
  bool declared_as(const Token& t) const {
    if (t.kind != TokenKind::Ident) return false;
    const Value* v = lookup(t.text);
    return v && std::holds_alternative<T>(*v);
  }

  void statement() {
    const Token& head = ts_.peek();
    if (ts_.is("ring")) {
      ring();
    } else {
      if (!have_ring_) ts_.fail(head, "the session must start with a ring declaration");
      if (head.kind == TokenKind::Ident && ts_.is(":=", 1))
        declaration();
      else if (head.kind == TokenKind::Ident && verbs.count(head.text))
        s_.commands.push_back(command());
      else
        ts_.fail(head, "expected a declaration or a command");
    }
    ts_.expect(";");
  }

  void ring() {
    const Token& t = ts_.next();
    if (have_ring_) throw Error(ErrorKind::RingMismatch, where(t) + ": the ring is already declared");
    do {
      const Token& v = ts_.expect_ident();
      if (keywords.count(v.text) || verbs.count(v.text)) ts_.fail(v, "reserved word used as a variable");
      if (std::find(s_.ring.begin(), s_.ring.end(), v.text) != s_.ring.end()) ts_.fail(v, "repeated variable");
      s_.ring.push_back(v.text);
    } while (ts_.accept(","));
    have_ring_ = true;
  }

  void declaration() {
    const Token& name = ts_.next();
    ts_.next();  // :=
    if (keywords.count(name.text) || verbs.count(name.text)) ts_.fail(name, "reserved word used as a name");
    if (std::find(s_.ring.begin(), s_.ring.end(), name.text) != s_.ring.end())
      ts_.fail(name, "a ring variable cannot be redeclared");
    if (index_.count(name.text)) ts_.fail(name, "name already declared");
    Value v = value();
    index_[name.text] = s_.decls.size();
    s_.decls.push_back({name.text, std::move(v), loc_of(name)});
  }

  Value value() {
    if (ts_.is("vf") && ts_.is("(", 1)) return field_literal();
    if (ts_.is("form") && ts_.is("(", 1)) return form_literal();
    if (ts_.is("branch") && ts_.is("(", 1)) return branch_literal();
    if (ts_.is("point")) {
      ts_.next();
      return point_literal();
    }
    if (ts_.is("foliation") && ts_.is("(", 1)) return foliation_literal();
    return poly();
  }

  Poly poly() {
    PolyLookup look = [this](const std::string& name) -> const Poly* {
      const Value* v = lookup(name);
      if (!v) return nullptr;
      if (const Poly* p = std::get_if<Poly>(v)) return p;
      throw Error(ErrorKind::SyntaxError, where(ts_.peek()) + ": '" + name + "' is not a polynomial");
    };
    return parse_poly_expr(ts_, s_.ring, look);
  }

  VectorField field_literal() {
    const Token& head = ts_.next();
    ts_.expect("(");
    std::vector<Poly> comps;
    do comps.push_back(poly());
    while (ts_.accept(","));
    ts_.expect(")");
    if (comps.size() != n())
      throw Error(ErrorKind::RingMismatch, where(head) + ": vf needs " + std::to_string(n()) + " components");
    return VectorField(std::move(comps));
  }

  std::size_t differential() {
    const Token& t = ts_.peek();
    if (t.kind == TokenKind::Ident && t.text.size() > 1 && t.text[0] == 'd') {
      auto it = std::find(s_.ring.begin(), s_.ring.end(), t.text.substr(1));
      if (it != s_.ring.end()) {
        ts_.next();
        return static_cast<std::size_t>(it - s_.ring.begin());
      }
    }
    ts_.fail(t, "expected a differential d<variable>");
  }

  DiffForm form_literal() {
    ts_.next();
    ts_.expect("(");
    std::optional<DiffForm> w;
    do {
      const Token& at = ts_.peek();
      Poly c = poly();
      std::vector<std::size_t> idx{differential()};
      while (ts_.accept("^")) idx.push_back(differential());
      if (!w) w = DiffForm(n(), idx.size());
      if (w->degree() != idx.size()) ts_.fail(at, "terms of different degrees");
      w->add(idx, c);
    } while (ts_.accept(","));
    ts_.expect(")");
    return *w;
  }

  Branch branch_literal() {
    const Token& head = ts_.next();
    ts_.expect("(");
    const std::vector<std::string> tvar{"t"};
    std::vector<Poly> comps;
    do comps.push_back(parse_poly_expr(ts_, tvar));
    while (ts_.accept(","));
    ts_.expect(")");
    ts_.expect("order");
    const Token& T = ts_.expect_number();
    if (T.text.size() > 4 || std::stoi(T.text) < 1) ts_.fail(T, "order must be between 1 and 9999");
    if (comps.size() != n())
      throw Error(ErrorKind::RingMismatch, where(head) + ": branch needs " + std::to_string(n()) + " components");
    Branch b;
    b.order = std::stoi(T.text);
    for (const Poly& p : comps) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(b.order));
      for (const auto& [e, c] : p.terms())
        if (e[0] < coeffs.size()) coeffs[e[0]] = c;
      b.comps.emplace_back(std::move(coeffs), b.order);
    }
    return b;
  }

  PointValue point_literal() {
    PointValue p;
    const Token& head = ts_.peek();
    if (ts_.accept("chart")) {
      const Token& k = ts_.expect_number();
      if (k.text.size() > 3 || std::stoul(k.text) > n()) ts_.fail(k, "chart index out of range");
      p.chart = std::stoul(k.text);
    }
    ts_.expect("(");
    do p.coords.push_back(parse_rational(ts_));
    while (ts_.accept(","));
    ts_.expect(")");
    if (p.coords.size() != n())
      throw Error(ErrorKind::RingMismatch, where(head) + ": point needs " + std::to_string(n()) + " coordinates");
    return p;
  }

  FoliationValue foliation_literal() {
    ts_.next();
    ts_.expect("(");
    FoliationValue f;
    const Token& t = ts_.peek();
    if (declared_as<VectorField>(t) || declared_as<DiffForm>(t)) {
      ts_.next();
      f.source_name = t.text;
      const Value& v = *lookup(t.text);
      if (auto* vf = std::get_if<VectorField>(&v))
        f.source = *vf;
      else
        f.source = std::get<DiffForm>(v);
    } else if (ts_.is("vf")) {
      f.source = field_literal();
    } else if (ts_.is("form")) {
      f.source = form_literal();
    } else {
      ts_.fail(t, "expected a vector field or a form");
    }
    ts_.expect(")");
    if (ts_.accept("degree")) f.degree = std::stol(ts_.expect_number().text);
    return f;
  }

  // Arguments of commands.

  Arg poly_arg() {
    const Token& t = ts_.peek();
    const Token& after = ts_.peek(1);
    if (declared_as<Poly>(t) && after.kind != TokenKind::Number && arg_end.count(after.text)) {
      ts_.next();
      return {t.text, *lookup(t.text), loc_of(t)};
    }
    return {"", poly(), loc_of(t)};
  }

  bool field_ahead() const {
    const Token& t = ts_.peek();
    return declared_as<VectorField>(t) || declared_as<DiffForm>(t) || ((t.text == "vf" || t.text == "form") && ts_.is("(", 1));
  }

  Arg field_arg() {
    const Token& t = ts_.peek();
    if (declared_as<VectorField>(t) || declared_as<DiffForm>(t)) {
      ts_.next();
      return {t.text, *lookup(t.text), loc_of(t)};
    }
    if (ts_.is("vf") && ts_.is("(", 1)) return {"", field_literal(), loc_of(t)};
    if (ts_.is("form") && ts_.is("(", 1)) return {"", form_literal(), loc_of(t)};
    if (t.kind == TokenKind::Ident && !lookup(t.text) && !keywords.count(t.text))
      throw Error(ErrorKind::UndeclaredName, where(t) + ": '" + t.text + "' is not declared");
    ts_.fail(t, "expected a vector field");
  }

  Arg point_arg() {
    const Token& t = ts_.peek();
    if (declared_as<PointValue>(t)) {
      ts_.next();
      return {t.text, *lookup(t.text), loc_of(t)};
    }
    ts_.accept("point");
    if (ts_.is("(") || ts_.is("chart")) return {"", point_literal(), loc_of(t)};
    if (t.kind == TokenKind::Ident && !lookup(t.text) && !keywords.count(t.text))
      throw Error(ErrorKind::UndeclaredName, where(t) + ": '" + t.text + "' is not declared");
    ts_.fail(t, "expected a point");
  }

  bool branch_ahead() const { return declared_as<Branch>(ts_.peek()) || (ts_.is("branch") && ts_.is("(", 1)); }

  Arg branch_arg() {
    const Token& t = ts_.peek();
    if (declared_as<Branch>(t)) {
      ts_.next();
      return {t.text, *lookup(t.text), loc_of(t)};
    }
    if (ts_.is("branch") && ts_.is("(", 1)) return {"", branch_literal(), loc_of(t)};
    if (t.kind == TokenKind::Ident && !lookup(t.text) && !keywords.count(t.text))
      throw Error(ErrorKind::UndeclaredName, where(t) + ": '" + t.text + "' is not declared");
    ts_.fail(t, "expected a branch");
  }

  Arg foliation_arg() {
    const Token& t = ts_.peek();
    if (declared_as<FoliationValue>(t)) {
      ts_.next();
      return {t.text, *lookup(t.text), loc_of(t)};
    }
    if (ts_.is("foliation") && ts_.is("(", 1)) return {"", foliation_literal(), loc_of(t)};
    if (t.kind == TokenKind::Ident && !lookup(t.text) && !keywords.count(t.text))
      throw Error(ErrorKind::UndeclaredName, where(t) + ": '" + t.text + "' is not declared");
    ts_.fail(t, "expected a foliation");
  }

  void along(Command& c, bool required) {
    if (!ts_.accept("along")) {
      if (required) ts_.fail(ts_.peek(), "expected 'along'");
      return;
    }
    if (ts_.accept("(")) {
      c.along_list = true;
      do c.along.push_back(poly_arg());
      while (ts_.accept(","));
      ts_.expect(")");
    } else {
      c.along.push_back(poly_arg());
    }
  }

  void at(Command& c, bool many, bool branches) {
    ts_.expect("at");
    while (true) {
      c.points.push_back(point_arg());
      c.branches.emplace_back();
      if (branches && ts_.accept("with")) {
        do c.branches.back().push_back(branch_arg());
        while (ts_.is(",") && (declared_as<Branch>(ts_.peek(1)) || (ts_.is("branch", 1) && ts_.is("(", 2))) &&
               ts_.accept(","));
      }
      if (!many || !ts_.accept(",")) break;
    }
  }

  Command command() {
    const Token& head = ts_.next();
    Command c;
    c.verb = head.text;
    c.loc = loc_of(head);
    const std::string& v = c.verb;
    if (v == "milnor") {
      c.subjects.push_back(poly_arg());
      at(c, false, false);
    } else if (v == "tjurina") {
      if (field_ahead()) {
        c.subjects.push_back(field_arg());
        along(c, true);
      } else {
        c.subjects.push_back(poly_arg());
      }
      at(c, false, false);
    } else if (v == "ph") {
      c.subjects.push_back(field_arg());
      at(c, false, false);
    } else if (v == "homological" || v == "gsv" || v == "radial" || v == "logindex") {
      c.subjects.push_back(field_arg());
      along(c, true);
      at(c, false, false);
    } else if (v == "cs" || v == "var") {
      c.subjects.push_back(field_arg());
      along(c, true);
      at(c, false, true);
    } else if (v == "bb") {
      c.subjects.push_back(field_arg());
      ts_.expect("phi");
      c.phi = parse_poly_expr(ts_, chern_names(n()));
      at(c, false, false);
    } else if (v == "residue") {
      c.subjects.push_back(poly_arg());
      ts_.expect("over");
      c.subjects.push_back(field_arg());
      at(c, false, false);
    } else {  // check
      const Token& k = ts_.expect_ident();
      c.kind = k.text;
      if (c.kind == "affine") {
        c.subjects.push_back(field_arg());
        ts_.expect("equals");
        const Token& num = ts_.expect_number();
        if (num.text.size() > 12) ts_.fail(num, "number too large");
        c.equals = std::stol(num.text);
      } else {
        parse_identity_kind(c.kind);
        c.subjects.push_back(foliation_arg());
        along(c, false);
        at(c, true, true);
      }
    }
    return c;
  }

  TokenStream ts_;
  Session s_;
  bool have_ring_ = false;
  std::map<std::string, std::size_t> index_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string coords(const Point& p) {
  std::vector<std::string> parts;
  for (const auto& q : p) parts.push_back(q.get_str());
  return "(" + join(parts, ", ") + ")";
}

std::string point_body(const PointValue& p) {
  return (p.chart ? "chart " + std::to_string(*p.chart) + " " : "") + coords(p.coords);
}

std::string print_arg(const Session& s, const Arg& a) {
  if (!a.name.empty()) return a.name;
  if (auto* p = std::get_if<PointValue>(&a.value)) return point_body(*p);
  return print_value(s, a.value);
}

}  // namespace

Session parse_session(std::string_view text) { return SessionParser(text).run(); }

std::string print_value(const Session& s, const Value& v) {
  const auto& ring = s.ring;
  if (auto* p = std::get_if<Poly>(&v)) return p->to_string(ring);
  if (auto* f = std::get_if<VectorField>(&v)) {
    std::vector<std::string> parts;
    for (const auto& c : f->components) parts.push_back(c.to_string(ring));
    return "vf(" + join(parts, ", ") + ")";
  }
  if (auto* w = std::get_if<DiffForm>(&v)) {
    std::vector<std::string> parts;
    for (const auto& [idx, c] : w->coeffs()) {
      std::string t = "(" + c.to_string(ring) + ")";
      for (std::size_t k = 0; k < idx.size(); ++k) t += (k ? "^d" : " d") + ring[idx[k]];
      parts.push_back(t);
    }
    if (parts.empty()) {
      std::string t = "0";
      for (std::size_t k = 0; k < w->degree(); ++k) t += (k ? "^d" : " d") + ring[k];
      parts.push_back(t);
    }
    return "form(" + join(parts, ", ") + ")";
  }
  if (auto* b = std::get_if<Branch>(&v)) {
    std::vector<std::string> parts;
    for (const auto& c : b->comps) parts.push_back(c.to_string("t"));
    return "branch(" + join(parts, ", ") + ") order " + std::to_string(b->order);
  }
  if (auto* p = std::get_if<PointValue>(&v)) return "point " + point_body(*p);
  const auto& f = std::get<FoliationValue>(v);
  std::string src = f.source_name;
  if (src.empty()) src = std::visit([&](const auto& x) { return print_value(s, Value(x)); }, f.source);
  return "foliation(" + src + ")" + (f.degree ? " degree " + std::to_string(*f.degree) : "");
}

std::string print_command(const Session& s, const Command& c) {
  std::string out = c.verb;
  if (!c.kind.empty()) out += " " + c.kind;
  if (c.verb == "residue") {
    out += " " + print_arg(s, c.subjects.at(0)) + " over " + print_arg(s, c.subjects.at(1));
  } else {
    for (const auto& a : c.subjects) out += " " + print_arg(s, a);
  }
  if (!c.along.empty()) {
    std::vector<std::string> parts;
    for (const auto& a : c.along) parts.push_back(print_arg(s, a));
    out += " along " + (c.along_list ? "(" + join(parts, ", ") + ")" : parts[0]);
  }
  if (c.phi) out += " phi " + c.phi->to_string(chern_names(s.ring.size()));
  if (!c.points.empty()) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      std::string p = print_arg(s, c.points[i]);
      if (i < c.branches.size() && !c.branches[i].empty()) {
        std::vector<std::string> bs;
        for (const auto& b : c.branches[i]) bs.push_back(print_arg(s, b));
        p += " with " + join(bs, ", ");
      }
      parts.push_back(p);
    }
    out += " at " + join(parts, ", ");
  }
  if (c.equals) out += " equals " + std::to_string(*c.equals);
  return out;
}

std::string print_session(const Session& s) {
  std::ostringstream os;
  os << "ring " << join(s.ring, ", ") << ";\n";
  for (const auto& d : s.decls) os << d.name << " := " << print_value(s, d.value) << ";\n";
  for (const auto& c : s.commands) os << print_command(s, c) << ";\n";
  return os.str();
}

}  // namespace folindex
