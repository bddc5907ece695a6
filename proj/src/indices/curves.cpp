#include <optional>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/indices.hpp"
#include "internal.hpp"

namespace folindex {

using detail::check_point;

namespace {

void require_plane(const VectorField& v, const Poly& f) {
  if (v.dim() != 2) throw Error(ErrorKind::InvalidArgument, "curve routines need a plane field");
  if (f.nvars() != 2) throw Error(ErrorKind::RingMismatch, "field and curve rings differ");
}

std::optional<std::size_t> ord(const Poly& g, const Poly& f) { return order_along_curve(g, {f}); }

std::string gsv_note() { return "negative GSV: a nondicritical separatrix would have GSV >= 0"; }

// -Res_t of the pullback of eta / xi; nullopt when xi vanishes on the branch
// to the known precision.
std::optional<Rational> branch_residue(const DecompositionTriple& d, const Branch& b, int* valuation = nullptr) {
  Series xi = compose(d.xi, b);
  int k = xi.valuation();
  if (k < 0) return std::nullopt;
  if (valuation != nullptr) *valuation = k;
  Series num(std::vector<Rational>{}, b.order);
  for (const auto& [idx, c] : d.eta.coeffs()) num += compose(c, b) * b.comps[idx[0]].derivative();
  if (k == 0) return Rational(0);
  Series r = num * xi.shift_down(k).inverse();
  if (r.precision() < k)
    throw Error(ErrorKind::TruncationNotStabilized, "branch truncation too short for the residue");
  return Rational(-r.coefficient(k - 1));
}

Branch centre(const Branch& b, std::span<const Rational> p, const Poly& f) {
  if (b.dim() != p.size()) throw Error(ErrorKind::InvalidBranch, "branch has the wrong number of components");
  Branch out;
  out.order = b.order;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Series c = b.comps[i].truncate(b.order);
    if (c.coefficient(0) != p[i]) throw Error(ErrorKind::InvalidBranch, "branch does not pass through the point");
    out.comps.push_back(c - Series::constant(p[i], b.order));
  }
  if (!compose(f, out).is_zero())
    throw Error(ErrorKind::InvalidBranch, "branch does not satisfy the curve equation to order " + std::to_string(b.order));
  return out;
}

// Residue along one branch with the decomposition chosen for the germ, or the
// other variant when xi vanishes on this branch.
std::optional<Rational> residue_any(const std::vector<DecompositionTriple>& variants, const Branch& b, int* k) {
  for (const auto& d : variants)
    if (auto r = branch_residue(d, b, k)) return r;
  return std::nullopt;
}

// Shear x = X + c Y, y = Y, which leaves GSV and CS unchanged.
Poly shear(const Poly& f, const Rational& c) {
  std::vector<Poly> img{Poly::variable(2, 0) + c * Poly::variable(2, 1), Poly::variable(2, 1)};
  return f.substitute(img);
}

VectorField shear(const VectorField& v, const Rational& c) {
  Poly a = shear(v[0], c), b = shear(v[1], c);
  return VectorField({a - c * b, b});
}

Branch shear(const Branch& b, const Rational& c) {
  Branch out = b;
  out.comps[0] = b.comps[0] - c * b.comps[1];
  return out;
}

// Both variants can fail only because a branch is tangent to a coordinate
// direction; then the first shear that repairs it is used.  Returns c.
Rational adapted_variants(VectorField& w, Poly& g, std::vector<DecompositionTriple>& variants) {
  variants = saito_variants(w, g);
  if (!variants.empty()) return 0;
  for (long c = 1; c <= 16; ++c) {
    VectorField w2 = shear(w, c);
    Poly g2 = shear(g, c);
    auto vs = saito_variants(w2, g2);
    if (!vs.empty()) {
      w = std::move(w2);
      g = std::move(g2);
      variants = std::move(vs);
      return c;
    }
  }
  throw Error(ErrorKind::DegenerateDecomposition, "both f_x and f_y vanish on a branch of f in every tried chart");
}

std::string shear_suffix(const Rational& c) {
  return sgn(c) == 0 ? "" : ", coordinates x -> x + " + c.get_str() + "*y";
}

}  // namespace

std::vector<DecompositionTriple> saito_variants(const VectorField& v, const Poly& f) {
  require_plane(v, f);
  Poly c = -tangency_cofactor(v, f);
  Poly P = -v[1], Q = v[0];
  Poly fx = partial_derivative(f, 0), fy = partial_derivative(f, 1);
  DecompositionTriple primary{fy, Q, c * DiffForm::differential(2, 0), false};
  DecompositionTriple fallback{fx, P, -c * DiffForm::differential(2, 1), true};
  std::vector<DecompositionTriple> out;
  DiffForm w = dual_form(v), df = d(f);
  for (auto& t : {primary, fallback}) {
    if (t.g * w != t.xi * df + f * t.eta) throw Error(ErrorKind::Conflict, "decomposition identity fails");
    if (ord(t.g, f)) out.push_back(t);
  }
  return out;
}

DecompositionTriple saito_decomposition(const VectorField& v, const Poly& f) {
  auto vs = saito_variants(v, f);
  if (vs.empty()) throw Error(ErrorKind::DegenerateDecomposition, "both f_x and f_y vanish on a branch of f");
  return vs.front();
}

IndexReport gsv_curve(const VectorField& v, const Poly& f, std::span<const Rational> p, const IndexOptions& opt) {
  require_plane(v, f);
  check_point(2, p);
  VectorField w = v.translate_to_origin(p);
  Poly g = translate_to_origin(f, p);
  std::vector<DecompositionTriple> variants;
  Rational sheared = adapted_variants(w, g, variants);
  auto value_of = [&](const DecompositionTriple& t) {
    auto oxi = ord(t.xi, g);
    if (!oxi) throw Error(ErrorKind::NotZeroDimensional, "the field vanishes along a branch of the curve");
    return Rational(static_cast<long>(*oxi) - static_cast<long>(*ord(t.g, g)));
  };
  IndexReport r;
  r.method = std::string(variants.front().fallback ? "ord(P) - ord(f_x)" : "ord(Q) - ord(f_y)") + shear_suffix(sheared);
  r.value = value_of(variants.front());
  if (variants.size() > 1) r.cross_check("ord(P) - ord(f_x)", value_of(variants[1]));
  r.cross_check("homological index", homological_index(v, f, p, opt).value);
  if (sgn(r.value) < 0) r.notes.push_back(gsv_note());
  return r;
}

IndexReport gsv_pfaff_curve(const VectorField& v, const std::vector<Poly>& curve, std::span<const Rational> p) {
  std::size_t n = v.dim();
  if (n < 2 || curve.size() + 1 != n)
    throw Error(ErrorKind::InvalidArgument, "a curve in n variables needs n - 1 equations");
  for (const auto& c : curve)
    if (c.nvars() != n) throw Error(ErrorKind::RingMismatch, "field and curve rings differ");
  check_point(n, p);
  VectorField w = v.translate_to_origin(p);
  std::vector<Poly> C;
  for (const auto& c : curve) C.push_back(translate_to_origin(c, p));
  IdealGens IC(C);
  for (const auto& c : C)
    if (!IC.basis().contains(w.apply(c))) throw Error(ErrorKind::NotInvariant, "the curve is not invariant");
  PolyMatrix jac = jacobian(std::span<const Poly>(C));
  IndexReport r;
  // I = complement of j; lexicographic order on I is decreasing j.
  for (std::size_t j = n; j-- > 0;) {
    PolyMatrix minor(n - 1, n - 1, n);
    for (std::size_t row = 0; row < n - 1; ++row)
      for (std::size_t col = 0, c = 0; col < n; ++col)
        if (col != j) minor.at(row, c++) = jac.at(row, col);
    auto od = order_along_curve(determinant(minor), C);
    if (!od) continue;
    auto oa = order_along_curve(w[j], C);
    if (!oa) throw Error(ErrorKind::NotZeroDimensional, "the form vanishes along a branch of the curve");
    Rational val = static_cast<long>(*oa) - static_cast<long>(*od);
    std::string name = "minor without column " + std::to_string(j + 1);
    if (r.method.empty()) {
      r.method = "ord(a_I) - ord(Delta_I), " + name;
      r.value = val;
    } else {
      r.cross_check(name, val);
    }
  }
  if (r.method.empty()) throw Error(ErrorKind::DegenerateMinors, "every maximal minor vanishes on a branch");
  if (sgn(r.value) < 0) r.notes.push_back(gsv_note());
  return r;
}

IndexReport cs_index(const VectorField& v, const Poly& f, const std::vector<Branch>& branches,
                     std::span<const Rational> p, const IndexOptions& opt) {
  require_plane(v, f);
  check_point(2, p);
  VectorField w = v.translate_to_origin(p);
  Poly g0 = translate_to_origin(f, p), g = g0;
  std::vector<DecompositionTriple> variants;
  Rational sheared = adapted_variants(w, g, variants);
  IndexReport r;
  auto vanish = [] { return Error(ErrorKind::NotZeroDimensional, "the field vanishes along a branch of the curve"); };
  if (branches.empty()) {
    std::vector<Rational> zero(2);
    std::size_t solve;
    if (sgn(partial_derivative(g, 1).evaluate(zero)) != 0)
      solve = 1;
    else if (sgn(partial_derivative(g, 0).evaluate(zero)) != 0)
      solve = 0;
    else
      throw Error(ErrorKind::InvalidBranch, "the curve is singular at the point; supply its branches");
    std::optional<Rational> prev;
    for (int T = opt.truncation; T <= opt.truncation_cap; T *= 2) {
      std::optional<Rational> cur;
      try {
        cur = residue_any(variants, newton_lift(g, solve, T), nullptr);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TruncationNotStabilized) throw;
      }
      if (cur && prev && *cur == *prev) {
        r.method = "residue along lifted smooth branch, truncation " + std::to_string(T) + shear_suffix(sheared);
        r.value = *cur;
        r.cross_check("residue at truncation " + std::to_string(T / 2), *prev);
        return r;
      }
      prev = cur;
    }
    throw Error(ErrorKind::TruncationNotStabilized,
                "branch residue did not stabilize up to truncation " + std::to_string(opt.truncation_cap));
  }
  Rational total = 0, total_min = 0;
  for (const auto& b : branches) {
    Branch c = shear(centre(b, p, g0), sheared);
    int k = 0;
    auto full = residue_any(variants, c, &k);
    if (!full) throw vanish();
    int need = 2 * k + 2;
    if (c.order < need)
      throw Error(ErrorKind::TruncationNotStabilized,
                  "branch truncation " + std::to_string(c.order) + " is below the required " + std::to_string(need));
    auto small = residue_any(variants, c.truncate(need), nullptr);
    if (!small) throw vanish();
    if (*small != *full) throw Error(ErrorKind::TruncationNotStabilized, "branch residue changes with truncation");
    total += *full;
    total_min += *small;
  }
  r.method = "residue along " + std::to_string(branches.size()) + (branches.size() == 1 ? " branch" : " branches") +
             shear_suffix(sheared);
  r.value = total;
  r.cross_check("residue at minimal truncation", total_min);
  return r;
}

IndexReport var_index(const VectorField& v, const Poly& f, const std::vector<Branch>& branches,
                      std::span<const Rational> p, const IndexOptions& opt) {
  IndexReport gsv = gsv_curve(v, f, p, opt);
  IndexReport cs = cs_index(v, f, branches, p, opt);
  IndexReport r;
  r.method = "GSV + CS";
  r.value = gsv.value + cs.value;
  for (auto* part : {&gsv, &cs})
    for (auto& c : part->crosschecks) r.crosschecks.push_back(c);
  r.notes.push_back("GSV = " + gsv.value.get_str() + ", CS = " + cs.value.get_str());
  for (auto& n : gsv.notes) r.notes.push_back(n);
  return r;
}

}  // namespace folindex
