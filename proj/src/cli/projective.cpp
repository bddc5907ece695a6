#include "folindex/projective.hpp"

#include <map>
#include <set>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/residues.hpp"

namespace folindex {

namespace {

// Common degree of all terms, nullopt for a non-homogeneous polynomial and -1
// for zero.
std::optional<int> homogeneous_degree(const Poly& p) {
  int d = -1;
  for (const auto& [e, c] : p.terms()) {
    int k = static_cast<int>(total_degree(e));
    if (d >= 0 && k != d) return std::nullopt;
    d = k;
  }
  return d;
}

Poly degree_part(const Poly& p, int d) {
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (static_cast<int>(total_degree(e)) == d) out.add_term(e, c);
  return out;
}

// Images of x_0..x_n in the chart ring: x_chart -> 1, the others in order.
std::vector<Poly> chart_images(std::size_t n, std::size_t chart) {
  std::vector<Poly> img;
  for (std::size_t j = 0, pos = 0; j <= n; ++j)
    img.push_back(j == chart ? Poly::constant(n, Rational(1)) : Poly::variable(n, pos++));
  return img;
}

// g with top_i = g x_i for all i, when it exists.
std::optional<Poly> radial_factor(const std::vector<Poly>& top) {
  std::size_t n = top.size();
  std::optional<Poly> g;
  for (std::size_t i = 0; i < n; ++i) {
    auto q = exact_divide(top[i], Poly::variable(n, i));
    if (!q || (g && !(*g == *q))) return std::nullopt;
    g = *q;
  }
  if (!g || g->is_zero()) return std::nullopt;
  return g;
}

bool same_projective_point(const Point& a, std::size_t ca, const Point& b, std::size_t cb) {
  auto t = transport_point(a, ca, cb);
  return t && *t == b;
}

}  // namespace

ProjectiveFoliation ProjectiveFoliation::from_affine(const VectorField& v, std::optional<long> degree) {
  std::size_t n = v.dim();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty field");
  int e = -1;
  for (const auto& c : v.components) e = std::max(e, c.total_degree());
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "the zero field defines no foliation");
  std::vector<Poly> top;
  for (const auto& c : v.components) top.push_back(degree_part(c, e));
  std::optional<Poly> g = e >= 1 ? radial_factor(top) : std::nullopt;
  long d = g ? e - 1 : e;
  if (degree && *degree != d)
    throw Error(ErrorKind::DegreeMismatch,
                "field has degree " + std::to_string(d) + ", declared " + std::to_string(*degree));
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  ProjectiveFoliation F;
  F.n = n;
  F.degree = d;
  Poly x0 = Poly::variable(n + 1, 0);
  F.field.assign(n + 1, Poly(n + 1));
  if (g) F.field[0] = -(x0 * g->remap(n + 1, shift));
  for (std::size_t i = 0; i < n; ++i) {
    Poly low = v[i];
    if (g) low -= top[i];
    // x_0^d low(x / x_0), term by term.
    Poly h(n + 1);
    for (const auto& [ex, c] : low.terms()) {
      Exponent he(n + 1);
      he[0] = static_cast<std::uint32_t>(d - static_cast<long>(total_degree(ex)));
      for (std::size_t j = 0; j < n; ++j) he[j + 1] = ex[j];
      h.add_term(he, c);
    }
    F.field[i + 1] = h;
  }
  return F;
}

ProjectiveFoliation ProjectiveFoliation::from_homogeneous_field(std::vector<Poly> X) {
  if (X.size() < 2) throw Error(ErrorKind::InvalidArgument, "homogeneous field needs at least two components");
  std::size_t n = X.size() - 1;
  int d = -1;
  for (const auto& c : X) {
    if (c.nvars() != n + 1) throw Error(ErrorKind::RingMismatch, "homogeneous field needs n+1 variables");
    auto k = homogeneous_degree(c);
    if (!k) throw Error(ErrorKind::DegreeMismatch, "field component is not homogeneous");
    if (*k < 0) continue;
    if (d >= 0 && *k != d) throw Error(ErrorKind::DegreeMismatch, "field components have different degrees");
    d = *k;
  }
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "the zero field defines no foliation");
  ProjectiveFoliation F;
  F.n = n;
  F.degree = d;
  F.field = std::move(X);
  return F;
}

ProjectiveFoliation ProjectiveFoliation::from_homogeneous_form(const DiffForm& w) {
  std::size_t m = w.nvars();
  if (m < 3 || w.degree() + 2 != m)
    throw Error(ErrorKind::InvalidArgument, "a foliation by curves on P^n needs an (n-1)-form in n+1 variables");
  int e = -1;
  for (const auto& [idx, c] : w.coeffs()) {
    auto k = homogeneous_degree(c);
    if (!k || (e >= 0 && *k != e)) throw Error(ErrorKind::DegreeMismatch, "form coefficients are not homogeneous of one degree");
    e = *k;
  }
  if (e < 1) throw Error(ErrorKind::DegreeMismatch, "form coefficients must have degree d+1 >= 1");
  std::vector<Poly> radial;
  for (std::size_t i = 0; i < m; ++i) radial.push_back(Poly::variable(m, i));
  if (!contract(w, VectorField(radial)).is_zero())
    throw Error(ErrorKind::EulerConditionViolated, "contraction with the radial field does not vanish");
  ProjectiveFoliation F;
  F.n = m - 1;
  F.degree = e - 1;
  F.form = w;
  return F;
}

Poly homogenize(const Poly& f) {
  std::size_t n = f.nvars();
  int m = f.total_degree();
  Poly h(n + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponent he(n + 1);
    he[0] = static_cast<std::uint32_t>(m - static_cast<int>(total_degree(e)));
    for (std::size_t j = 0; j < n; ++j) he[j + 1] = e[j];
    h.add_term(he, c);
  }
  return h;
}

Poly chart_restrict(const Poly& F, std::size_t chart) {
  if (F.nvars() < 2 || chart >= F.nvars()) throw Error(ErrorKind::InvalidArgument, "chart index out of range");
  if (!homogeneous_degree(F)) throw Error(ErrorKind::DegreeMismatch, "polynomial is not homogeneous");
  return F.substitute(chart_images(F.nvars() - 1, chart));
}

VectorField chart_restrict(const ProjectiveFoliation& F, std::size_t chart) {
  std::size_t n = F.n;
  if (chart > n) throw Error(ErrorKind::InvalidArgument, "chart index out of range");
  auto img = chart_images(n, chart);
  if (F.form) {
    DiffForm out(n, F.form->degree());
    for (const auto& [idx, c] : F.form->coeffs()) {
      DiffForm::Index ni;
      bool keep = true;
      for (std::size_t j : idx) {
        if (j == chart) keep = false;
        ni.push_back(j < chart ? j : j - 1);
      }
      if (keep) out.add(ni, c.substitute(img));
    }
    return field_from_dual(out);
  }
  std::vector<Poly> comps;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j == chart) continue;
    Poly xj = Poly::variable(n + 1, j);
    comps.push_back((F.field[j] - xj * F.field[chart]).substitute(img));
  }
  return VectorField(comps);
}

std::optional<Point> transport_point(const Point& p, std::size_t from, std::size_t to) {
  std::size_t n = p.size();
  if (from > n || to > n) throw Error(ErrorKind::InvalidArgument, "chart index out of range");
  std::vector<Rational> h(n + 1);
  for (std::size_t j = 0, pos = 0; j <= n; ++j) h[j] = j == from ? Rational(1) : p[pos++];
  if (sgn(h[to]) == 0) return std::nullopt;
  Point out;
  for (std::size_t j = 0; j <= n; ++j)
    if (j != to) out.push_back(h[j] / h[to]);
  return out;
}

CheckReport run_global_check(const ProjectiveFoliation& F, IdentityKind kind, const std::vector<Poly>& curve,
                             const std::vector<ChartPoint>& points, const IndexOptions& opt) {
  std::size_t n = F.n;
  bool plane_curve = kind == IdentityKind::Brunella || kind == IdentityKind::CsTotal ||
                     kind == IdentityKind::VarTotal || kind == IdentityKind::Soares;
  bool complete_intersection = kind == IdentityKind::PfaffDegree || kind == IdentityKind::Adjunction;
  if (plane_curve && (n != 2 || curve.size() != 1))
    throw Error(ErrorKind::InvalidArgument, to_string(kind) + " needs one invariant curve on P^2");
  if (complete_intersection && (curve.empty() || curve.size() >= n))
    throw Error(ErrorKind::InvalidArgument, to_string(kind) + " needs between 1 and n-1 equations");
  if (!plane_curve && !complete_intersection && !curve.empty())
    throw Error(ErrorKind::InvalidArgument, to_string(kind) + " takes no curve");
  if (kind == IdentityKind::BbTotal && n != 2) throw Error(ErrorKind::InvalidArgument, "bb_total is stated on P^2");

  IdentitySpec spec;
  spec.kind = kind;
  spec.n = static_cast<long>(n);
  spec.d = F.degree;
  for (const auto& c : curve) {
    if (c.nvars() != n + 1) throw Error(ErrorKind::RingMismatch, "curve equations need homogeneous coordinates");
    auto k = homogeneous_degree(c);
    if (!k || *k < 1) throw Error(ErrorKind::DegreeMismatch, "curve equation is not homogeneous of positive degree");
    spec.degrees.push_back(*k);
  }
  if (plane_curve) spec.m = spec.degrees.front();
  if (kind == IdentityKind::LogBb) spec.degrees = {1};

  CheckReport rep;
  rep.kind = kind;
  rep.rhs = identity_rhs(spec);

  std::map<std::size_t, VectorField> fields;
  std::map<std::size_t, std::vector<Poly>> curves;
  auto field_at = [&](std::size_t k) -> const VectorField& {
    auto it = fields.find(k);
    if (it == fields.end()) it = fields.emplace(k, chart_restrict(F, k)).first;
    return it->second;
  };
  auto curve_at = [&](std::size_t k) -> const std::vector<Poly>& {
    auto it = curves.find(k);
    if (it == curves.end()) {
      std::vector<Poly> cs;
      for (const auto& c : curve) cs.push_back(chart_restrict(c, k));
      it = curves.emplace(k, cs).first;
    }
    return it->second;
  };

  if (kind == IdentityKind::Soares) {
    if (!points.empty()) throw Error(ErrorKind::InvalidArgument, "soares takes no points");
    // Invariance in every chart, then compare the degree with d + 1.
    for (std::size_t k = 0; k <= n; ++k) tangency_cofactor(field_at(k), curve_at(k).front());
    CheckRow row;
    row.label = "deg C";
    row.value = spec.m;
    row.method = "degree of the invariant curve";
    rep.rows.push_back(row);
    rep.sum = spec.m;
    rep.pass = rep.sum == rep.rhs;
    return rep;
  }

  for (std::size_t a = 0; a < points.size(); ++a) {
    const auto& p = points[a];
    if (p.chart > n || p.coords.size() != n)
      throw Error(ErrorKind::InvalidArgument, "point " + p.label + " does not fit P^" + std::to_string(n));
    for (std::size_t b = 0; b < a; ++b)
      if (same_projective_point(points[b].coords, points[b].chart, p.coords, p.chart))
        throw Error(ErrorKind::InvalidArgument, "points " + points[b].label + " and " + p.label + " coincide");
  }

  for (const auto& p : points) {
    const VectorField& v = field_at(p.chart);
    CheckRow row;
    row.label = p.label;
    row.chart = p.chart;
    row.coords = p.coords;
    IndexReport r;
    switch (kind) {
      case IdentityKind::Brunella: r = gsv_curve(v, curve_at(p.chart).front(), p.coords, opt); break;
      case IdentityKind::CsTotal: r = cs_index(v, curve_at(p.chart).front(), p.branches, p.coords, opt); break;
      case IdentityKind::VarTotal: r = var_index(v, curve_at(p.chart).front(), p.branches, p.coords, opt); break;
      case IdentityKind::BbTotal:
        r.value = baum_bott_residue(v, PhiSpec::monomial({2, 0}), p.coords).value;
        r.method = "residue of c1^2";
        break;
      case IdentityKind::MilnorTotal: r = ph_index(v, p.coords, opt); break;
      case IdentityKind::PfaffDegree:
      case IdentityKind::Adjunction: r = gsv_pfaff_curve(v, curve_at(p.chart), p.coords); break;
      case IdentityKind::LogBb:
        if (p.chart != 0 && sgn(p.coords[0]) == 0)
          r = log_index(v, {0}, p.coords, opt);
        else
          r = ph_index(v, p.coords, opt);
        break;
      case IdentityKind::Soares: break;
    }
    row.value = r.value;
    row.method = r.method;
    row.crosschecks = r.crosschecks;
    row.notes = r.notes;
    rep.sum += r.value;
    rep.rows.push_back(std::move(row));
  }

  // Completeness: in every chart the declared points carry the whole
  // length of the relevant zero-dimensional scheme.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Poly> gens = field_at(k).components;
    if (plane_curve || complete_intersection)
      for (const auto& c : curve_at(k)) gens.push_back(c);
    auto global = global_dim(gens);
    if (!global)
      throw Error(ErrorKind::NotZeroDimensional, "chart " + std::to_string(k) + ": singular set is not isolated");
    std::size_t declared = 0;
    for (const auto& p : points) {
      auto q = transport_point(p.coords, p.chart, k);
      if (!q) continue;
      std::vector<Poly> local;
      for (const auto& g : gens) local.push_back(translate_to_origin(g, *q));
      auto d = local_dim(local);
      if (!d) throw Error(ErrorKind::NotZeroDimensional, "point " + p.label + " is not isolated");
      declared += *d;
    }
    std::string line = "chart " + std::to_string(k) + ": global length " + std::to_string(*global) +
                       ", declared " + std::to_string(declared);
    if (declared != *global) throw Error(ErrorKind::IncompleteSingularities, line);
    rep.diagnostics.push_back(line);
  }
  rep.pass = rep.sum == rep.rhs;
  return rep;
}

}  // namespace folindex
