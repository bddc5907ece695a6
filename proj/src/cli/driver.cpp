#include "folindex/driver.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/residues.hpp"

namespace folindex {

namespace {

std::string coords_text(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + p[i].get_str();
  return out + ")";
}

class Runner {
public:
  Runner(const Session& s, const IndexOptions& opt) : s_(s), opt_(opt), n_(s.ring.size()) {}

  CommandReport run(const Command& c) {
    CommandReport r;
    r.command = print_command(s_, c);
    try {
      describe(c, r);
      evaluate(c, r);
    } catch (const Error& e) {
      r.verdict = e.kind() == ErrorKind::Conflict ? Verdict::Fail : Verdict::Error;
      r.error = e.what();
    } catch (const std::exception& e) {
      r.verdict = Verdict::Error;
      r.error = e.what();
    }
    return r;
  }

private:
  std::string text(const Arg& a) const {
    if (auto* p = std::get_if<PointValue>(&a.value))
      return (p->chart ? "chart " + std::to_string(*p->chart) + " " : "") + coords_text(p->coords);
    return print_value(s_, a.value);
  }

  void describe(const Command& c, CommandReport& r) const {
    static const char* const names[] = {"subject", "second"};
    for (std::size_t i = 0; i < c.subjects.size(); ++i) {
      const Value& v = c.subjects[i].value;
      std::string role = std::holds_alternative<Poly>(v)          ? (c.verb == "residue" ? "h" : "f")
                         : std::holds_alternative<FoliationValue>(v) ? "foliation"
                         : std::holds_alternative<DiffForm>(v)       ? "form"
                         : std::holds_alternative<VectorField>(v)    ? "v"
                                                                     : names[i];
      r.inputs.emplace_back(role, text(c.subjects[i]));
    }
    for (const auto& a : c.along) r.inputs.emplace_back("along", text(a));
    if (c.phi) {
      std::vector<std::string> cn;
      for (std::size_t i = 1; i <= n_; ++i) cn.push_back("c" + std::to_string(i));
      r.inputs.emplace_back("phi", c.phi->to_string(cn));
    }
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      r.inputs.emplace_back("at", text(c.points[i]));
      for (const auto& b : c.branches[i]) r.inputs.emplace_back("with", text(b));
    }
    if (c.equals) r.inputs.emplace_back("equals", std::to_string(*c.equals));
  }

  VectorField field(const Arg& a) const {
    if (auto* v = std::get_if<VectorField>(&a.value)) return *v;
    const auto& w = std::get<DiffForm>(a.value);
    if (w.degree() + 1 != n_)
      throw Error(ErrorKind::InvalidArgument, "a form stands for a field only in degree n-1");
    return field_from_dual(w);
  }

  static const Poly& poly(const Arg& a) { return std::get<Poly>(a.value); }

  Point point(const Command& c) const {
    const auto& p = std::get<PointValue>(c.points.at(0).value);
    if (p.chart && *p.chart != 0) throw Error(ErrorKind::InvalidArgument, "local commands work in chart 0");
    return p.coords;
  }

  std::vector<Branch> branches(const std::vector<Arg>& args) const {
    std::vector<Branch> out;
    for (const auto& a : args) out.push_back(std::get<Branch>(a.value));
    return out;
  }

  const Poly& single_curve(const Command& c) const {
    if (c.along.size() != 1) throw Error(ErrorKind::InvalidArgument, c.verb + " needs one curve equation");
    return poly(c.along[0]);
  }

  std::vector<std::size_t> divisor(const Command& c) const {
    std::vector<std::size_t> out;
    for (const auto& a : c.along) {
      std::size_t i = 0;
      while (i < n_ && !(poly(a) == Poly::variable(n_, i))) ++i;
      if (i == n_) throw Error(ErrorKind::InvalidArgument, "logindex divisors are coordinate variables");
      out.push_back(i);
    }
    return out;
  }

  static void take(const IndexReport& ir, CommandReport& r) {
    r.value = ir.value;
    r.method = ir.method;
    r.crosschecks = ir.crosschecks;
    r.notes = ir.notes;
  }

  void evaluate(const Command& c, CommandReport& r) const {
    const std::string& v = c.verb;
    if (v == "check") return check(c, r);
    Point p = point(c);
    if (v == "milnor") {
      take(milnor_number(poly(c.subjects[0]), p, opt_), r);
    } else if (v == "tjurina") {
      if (std::holds_alternative<Poly>(c.subjects[0].value))
        take(tjurina_number(poly(c.subjects[0]), p, opt_), r);
      else
        take(tjurina_vf(field(c.subjects[0]), single_curve(c), p), r);
    } else if (v == "ph") {
      take(ph_index(field(c.subjects[0]), p, opt_), r);
    } else if (v == "homological") {
      take(homological_index(field(c.subjects[0]), single_curve(c), p, opt_), r);
    } else if (v == "gsv") {
      if (c.along.size() == 1) {
        take(gsv_curve(field(c.subjects[0]), poly(c.along[0]), p, opt_), r);
      } else {
        std::vector<Poly> curve;
        for (const auto& a : c.along) curve.push_back(poly(a));
        take(gsv_pfaff_curve(field(c.subjects[0]), curve, p), r);
      }
    } else if (v == "cs") {
      take(cs_index(field(c.subjects[0]), single_curve(c), branches(c.branches[0]), p, opt_), r);
    } else if (v == "var") {
      take(var_index(field(c.subjects[0]), single_curve(c), branches(c.branches[0]), p, opt_), r);
    } else if (v == "radial") {
      VectorField x = field(c.subjects[0]);
      const Poly& f = single_curve(c);
      IndexReport g = homological_index(x, f, p, opt_);
      IndexReport mu = milnor_number(f, p, opt_);
      take(g, r);
      r.value = Rational(radial_index(g.value.get_num(), mu.value.get_num(), n_ - 1));
      r.method = "GSV - (-1)^" + std::to_string(n_ - 1) + " mu with GSV by " + g.method;
      r.notes.push_back("GSV = " + g.value.get_str() + ", mu = " + mu.value.get_str());
    } else if (v == "logindex") {
      take(log_index(field(c.subjects[0]), divisor(c), p, opt_), r);
    } else if (v == "bb") {
      PhiSpec phi;
      for (const auto& [e, coef] : c.phi->terms()) phi.terms.emplace_back(coef, std::vector<unsigned>(e.begin(), e.end()));
      ResidueResult res = baum_bott_residue(field(c.subjects[0]), phi, p);
      r.value = res.value;
      r.method = "Grothendieck residue of phi(Jv) = " + phi.to_string() + " by the transformation law, bound " +
                 std::to_string(res.bound);
    } else if (v == "residue") {
      VectorField x = field(c.subjects[1]);
      const Poly& h = poly(c.subjects[0]);
      ResidueResult res = grothendieck_residue(h, x, p);
      r.value = res.value;
      r.method = "transformation law to x_i^N, N = " + std::to_string(res.bound);
      Rational again = grothendieck_residue(h, x, p, res.bound + 1).value;
      r.crosschecks.push_back({"bound N+1", again, again == res.value});
      if (again != res.value) throw Error(ErrorKind::Conflict, "residue depends on the bound");
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown command " + v);
    }
  }

  void check(const Command& c, CommandReport& r) const {
    if (c.kind == "affine") {
      std::vector<Poly> gens;
      if (auto* w = std::get_if<DiffForm>(&c.subjects[0].value)) {
        for (const auto& [idx, coef] : w->coeffs()) gens.push_back(coef);
      } else {
        gens = std::get<VectorField>(c.subjects[0].value).components;
      }
      auto dim = global_dim(gens);
      if (!dim) throw Error(ErrorKind::NotZeroDimensional, "the coefficient ideal has positive dimension");
      r.value = Rational(static_cast<long>(*dim));
      r.expected = Rational(*c.equals);
      r.method = "global quotient dimension of the coefficient ideal";
      if (gens.size() == n_) {
        std::vector<Poly> with_det = gens;
        with_det.push_back(determinant(jacobian(gens)));
        if (global_dim(with_det) == std::optional<std::size_t>(0)) r.notes.push_back("every zero is simple");
      }
      r.verdict = *r.value == *r.expected ? Verdict::Pass : Verdict::Fail;
      return;
    }
    const auto& fv = std::get<FoliationValue>(c.subjects[0].value);
    VectorField src = std::holds_alternative<VectorField>(fv.source)
                          ? std::get<VectorField>(fv.source)
                          : field(Arg{"", Value(std::get<DiffForm>(fv.source)), {}});
    ProjectiveFoliation F = ProjectiveFoliation::from_affine(src, fv.degree);
    std::vector<Poly> curve;
    for (const auto& a : c.along) curve.push_back(homogenize(poly(a)));
    std::vector<ChartPoint> pts;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const auto& pv = std::get<PointValue>(c.points[i].value);
      std::string label = c.points[i].name.empty() ? "#" + std::to_string(i + 1) : c.points[i].name;
      pts.push_back({label, pv.chart.value_or(0), pv.coords, branches(c.branches[i])});
    }
    CheckReport rep = run_global_check(F, parse_identity_kind(c.kind), curve, pts, opt_);
    r.value = rep.sum;
    r.expected = rep.rhs;
    r.method = "sum of local indices against the Chern number on P^" + std::to_string(n_) + ", degree " +
               std::to_string(F.degree);
    r.notes = rep.diagnostics;
    r.verdict = rep.pass ? Verdict::Pass : Verdict::Fail;
    r.table = std::move(rep);
  }

  const Session& s_;
  IndexOptions opt_;
  std::size_t n_;
};

using json = nlohmann::ordered_json;

json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(q.get_str());
}

json crosschecks_json(const std::vector<CrossCheck>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"value", rational_json(c.value)}, {"agrees", c.agrees}});
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Error:
      return "ERROR";
  }
  return "ERROR";
}

std::vector<CommandReport> run_session(const Session& s, const IndexOptions& opt) {
  std::vector<CommandReport> out(s.commands.size());
  Runner runner(s, opt);
  const long count = static_cast<long>(s.commands.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = runner.run(s.commands[i]);
  return out;
}

int exit_code(const std::vector<CommandReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Error) return 2;
    if (r.verdict == Verdict::Fail) code = 1;
  }
  return code;
}

std::string format_text(const std::vector<CommandReport>& reports) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    ++counts[static_cast<int>(r.verdict)];
    os << "[" << i + 1 << "] " << r.command << "\n";
    auto line = [&](const std::string& key, const std::string& val) {
      os << "    " << std::left << std::setw(11) << key << val << "\n";
    };
    if (r.table) {
      std::size_t wl = 6, wc = 7, wv = 6;
      for (const auto& row : r.table->rows) {
        wl = std::max(wl, row.label.size() + 2);
        wc = std::max(wc, coords_text(row.coords).size() + 2);
        wv = std::max(wv, row.value.get_str().size() + 2);
      }
      os << "    " << std::left << std::setw(wl) << "point" << std::setw(7) << "chart" << std::setw(wc) << "coords"
         << std::setw(wv) << "value"
         << "method\n";
      for (const auto& row : r.table->rows)
        os << "    " << std::setw(wl) << row.label << std::setw(7) << row.chart << std::setw(wc)
           << coords_text(row.coords) << std::setw(wv) << row.value.get_str() << row.method << "\n";
    }
    if (r.value) line(r.table || r.expected ? "sum" : "value", r.value->get_str());
    if (r.expected) line("expected", r.expected->get_str());
    if (!r.method.empty()) line("method", r.method);
    for (const auto& c : r.crosschecks)
      line("crosscheck", c.name + " = " + c.value.get_str() + (c.agrees ? " (agrees)" : " (DISAGREES)"));
    for (const auto& n : r.notes) line("note", n);
    if (r.table)
      for (const auto& row : r.table->rows)
        for (const auto& n : row.notes) line("note", row.label + ": " + n);
    if (!r.error.empty()) line("error", r.error);
    line("verdict", to_string(r.verdict));
  }
  os << reports.size() << " commands: " << counts[0] << " PASS, " << counts[1] << " FAIL, " << counts[2]
     << " ERROR\n";
  return os.str();
}

std::string format_json(const std::vector<CommandReport>& reports) {
  json doc = json::array();
  for (const auto& r : reports) {
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) {
      if (k == "equals")
        inputs[k] = std::stol(v);
      else if (!inputs.contains(k))
        inputs[k] = v;
      else if (inputs[k].is_array())
        inputs[k].push_back(v);
      else
        inputs[k] = json::array({inputs[k], v});
    }
    json j;
    j["command"] = r.command;
    j["inputs"] = inputs;
    j["value"] = r.value ? rational_json(*r.value) : json(nullptr);
    j["method"] = r.method;
    j["crosschecks"] = crosschecks_json(r.crosschecks);
    j["verdict"] = to_string(r.verdict);
    if (r.expected) j["expected"] = rational_json(*r.expected);
    if (r.table) {
      json rows = json::array();
      for (const auto& row : r.table->rows) {
        json pt = json::array();
        for (const auto& q : row.coords) pt.push_back(rational_json(q));
        rows.push_back({{"label", row.label},
                        {"chart", row.chart},
                        {"point", pt},
                        {"value", rational_json(row.value)},
                        {"method", row.method},
                        {"crosschecks", crosschecks_json(row.crosschecks)},
                        {"notes", row.notes}});
      }
      j["table"] = rows;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (!r.error.empty()) j["error"] = r.error;
    doc.push_back(j);
  }
  return doc.dump(2) + "\n";
}

}  // namespace folindex
