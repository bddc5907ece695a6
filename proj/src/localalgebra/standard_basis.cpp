#include <atomic>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"

namespace folindex {

namespace {

std::atomic<std::size_t> g_step_budget{2'000'000};

// An element p together with the bookkeeping w * p = cf * input + sum_j C_j * gen_j.
// Without tracking only p, lm and ecart are maintained.
struct Tracked {
  Poly p;
  Exponent lm;
  int ecart = 0;
  Poly w;
  Poly cf;
  std::vector<Poly> C;
};

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

class Engine {
public:
  Engine(const MonomialOrder& order, std::size_t nvars, std::size_t ngens, bool track)
      : order_(order), nvars_(nvars), ngens_(ngens), track_(track) {}

  void refresh(Tracked& t) const {
    if (t.p.is_zero()) return;
    t.lm = order_.leading(t.p);
    t.ecart = order_.ecart(t.p);
  }

  // Scale so that the leading coefficient is 1 and w(0) = 1.
  void normalize(Tracked& t) const {
    if (t.p.is_zero()) return;
    Rational lc = t.p.coefficient(t.lm);
    if (lc != 1) {
      Rational inv = 1 / lc;
      t.p *= inv;
      if (track_) {
        t.cf *= inv;
        for (auto& c : t.C) c *= inv;
      }
    }
    if (track_) {
      Rational w0 = t.w.constant_term();
      if (w0 != 1) {
        Rational inv = 1 / w0;
        t.w *= inv;
        t.cf *= inv;
        for (auto& c : t.C) c *= inv;
      }
    }
  }

  void tick() {
    if (++steps_ > g_step_budget.load()) throw Error(ErrorKind::ResourceCap, "standard basis step budget exceeded");
  }

  // h <- h - (LT(h)/LT(t)) * t.
  void reduce_by(Tracked& h, const Tracked& t) {
    tick();
    Exponent m = exp_sub(h.lm, t.lm);
    Rational coef = h.p.coefficient(h.lm) / t.p.coefficient(t.lm);
    h.p -= t.p.mul_monomial(m, coef);
    if (track_) {
      bool unit_t = t.w.is_constant() && t.w.constant_term() == 1;
      Poly mw = h.w.mul_monomial(m, coef);
      Poly cf = unit_t ? h.cf : t.w * h.cf;
      if (!t.cf.is_zero()) cf -= mw * t.cf;
      h.cf = std::move(cf);
      for (std::size_t j = 0; j < ngens_; ++j) {
        Poly c = unit_t ? h.C[j] : t.w * h.C[j];
        if (!t.C[j].is_zero()) c -= mw * t.C[j];
        h.C[j] = std::move(c);
      }
      if (!unit_t) h.w = h.w * t.w;
    }
    refresh(h);
  }

  // Mora's normal form against the reducer set G.
  void normal_form(Tracked& h, const std::vector<Tracked>& G) {
    std::deque<Tracked> extra;
    while (!h.p.is_zero()) {
      const Tracked* best = nullptr;
      auto consider = [&](const Tracked& g) {
        if (divides(g.lm, h.lm) && (best == nullptr || g.ecart < best->ecart)) best = &g;
      };
      for (const auto& g : G) consider(g);
      for (const auto& g : extra) consider(g);
      if (best == nullptr) break;
      if (best->ecart > h.ecart) {
        extra.push_back(h);
        // Pointers into the deque stay valid under push_back.
      }
      reduce_by(h, *best);
    }
    normalize(h);
  }

  Tracked spoly(const Tracked& a, const Tracked& b) {
    Exponent L = lcm(a.lm, b.lm);
    Exponent ma = exp_sub(L, a.lm), mb = exp_sub(L, b.lm);
    Rational ca = 1 / a.p.coefficient(a.lm), cb = 1 / b.p.coefficient(b.lm);
    Tracked s;
    s.p = a.p.mul_monomial(ma, ca) - b.p.mul_monomial(mb, cb);
    if (track_) {
      Poly wa = a.w.mul_monomial(mb, cb);  // m_b * w_a
      Poly wb = b.w.mul_monomial(ma, ca);  // m_a * w_b
      s.w = a.w * b.w;
      s.cf = Poly(nvars_);
      s.C.resize(ngens_, Poly(nvars_));
      for (std::size_t j = 0; j < ngens_; ++j) s.C[j] = wb * a.C[j] - wa * b.C[j];
    }
    refresh(s);
    return s;
  }

  Tracked input(const Poly& p, bool as_input) const {
    Tracked t;
    t.p = p;
    if (track_) {
      t.w = Poly::constant(nvars_, Rational(1));
      t.cf = as_input ? Poly::constant(nvars_, Rational(1)) : Poly(nvars_);
      t.C.assign(ngens_, Poly(nvars_));
    }
    refresh(t);
    return t;
  }

  bool track() const { return track_; }

private:
  const MonomialOrder& order_;
  std::size_t nvars_;
  std::size_t ngens_;
  bool track_;
  std::size_t steps_ = 0;
};

std::vector<Tracked> as_tracked(const StandardBasis& sb, bool track) {
  std::vector<Tracked> out;
  for (std::size_t i = 0; i < sb.elements().size(); ++i) {
    Tracked t;
    t.p = sb.elements()[i];
    t.lm = sb.leading()[i];
    t.ecart = sb.order().ecart(t.p);
    if (track) {
      t.w = sb.representations()[i].unit;
      t.cf = Poly(sb.nvars());
      t.C = sb.representations()[i].cofactors;
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

void set_step_budget(std::size_t steps) { g_step_budget.store(steps); }
std::size_t step_budget() { return g_step_budget.load(); }

StandardBasis standard_basis(const std::vector<Poly>& gens, const MonomialOrder& order, bool track_cofactors) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "ideal needs at least one generator");
  std::size_t n = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw Error(ErrorKind::RingMismatch, "ideal generators live in different rings");

  StandardBasis sb;
  sb.order_ = order;
  sb.nvars_ = n;
  sb.gens_ = gens;
  sb.tracked_ = track_cofactors;

  Engine eng(sb.order_, n, gens.size(), track_cofactors);
  std::vector<Tracked> S;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    Tracked t = eng.input(gens[i], false);
    if (track_cofactors) t.C[i] = Poly::constant(n, Rational(1));
    eng.normalize(t);
    S.push_back(std::move(t));
  }

  auto is_unit = [](const Tracked& t) { return total_degree(t.lm) == 0; };
  // Pairs keyed by (degree of lcm, i, j) for a deterministic selection order.
  std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(total_degree(lcm(S[i].lm, S[j].lm)), i, j);
  };
  const Tracked* unit = nullptr;
  for (std::size_t j = 0; j < S.size() && unit == nullptr; ++j) {
    if (is_unit(S[j])) unit = &S[j];
    add_pairs(j);
  }

  while (unit == nullptr && !pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (!order.is_local()) {
      // Product criterion: coprime leading monomials reduce to zero.
      bool coprime = true;
      for (std::size_t k = 0; k < n && coprime; ++k) coprime = S[i].lm[k] == 0 || S[j].lm[k] == 0;
      if (coprime) continue;
    }
    Tracked h = eng.spoly(S[i], S[j]);
    if (h.p.is_zero()) continue;
    eng.normal_form(h, S);
    if (h.p.is_zero()) continue;
    S.push_back(std::move(h));
    add_pairs(S.size() - 1);
    if (is_unit(S.back())) unit = &S.back();
  }

  std::vector<const Tracked*> keep;
  if (unit != nullptr) {
    keep.push_back(unit);
  } else {
    for (std::size_t i = 0; i < S.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < S.size() && !redundant; ++j) {
        if (j == i || !divides(S[j].lm, S[i].lm)) continue;
        redundant = S[j].lm != S[i].lm || j < i;
      }
      if (!redundant) keep.push_back(&S[i]);
    }
  }
  for (const Tracked* t : keep) {
    sb.elements_.push_back(t->p);
    sb.leading_.push_back(t->lm);
    if (track_cofactors) sb.reps_.push_back({t->w, t->C});
  }
  return sb;
}

Poly StandardBasis::normal_form(const Poly& p) const {
  if (p.nvars() != nvars_) throw Error(ErrorKind::RingMismatch, "normal form of a polynomial from another ring");
  Engine eng(order_, nvars_, gens_.size(), false);
  auto G = as_tracked(*this, false);
  Tracked h = eng.input(p, true);
  eng.normal_form(h, G);
  return h.p;
}

bool StandardBasis::in_leading_ideal(const Exponent& e) const {
  for (const auto& lm : leading_)
    if (divides(lm, e)) return true;
  return false;
}

namespace {

// Visits every standard monomial; relies on the staircase being an order ideal.
void walk_staircase(const StandardBasis& sb, Exponent& e, std::size_t var,
                    const std::function<void(const Exponent&)>& visit) {
  if (var == e.size()) {
    visit(e);
    return;
  }
  for (e[var] = 0; !sb.in_leading_ideal(e); ++e[var]) walk_staircase(sb, e, var + 1, visit);
  e[var] = 0;
}

bool staircase_finite(const StandardBasis& sb) {
  for (std::size_t i = 0; i < sb.nvars(); ++i) {
    bool found = false;
    for (const auto& lm : sb.leading()) {
      bool pure = lm[i] > 0;
      for (std::size_t k = 0; k < lm.size() && pure; ++k)
        if (k != i && lm[k] != 0) pure = false;
      if (pure || total_degree(lm) == 0) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> StandardBasis::quotient_dim() const {
  if (!staircase_finite(*this)) return std::nullopt;
  std::size_t count = 0;
  Exponent e(nvars_, 0);
  walk_staircase(*this, e, 0, [&](const Exponent&) { ++count; });
  return count;
}

std::optional<std::vector<Exponent>> StandardBasis::staircase() const {
  if (!staircase_finite(*this)) return std::nullopt;
  std::vector<Exponent> out;
  Exponent e(nvars_, 0);
  walk_staircase(*this, e, 0, [&](const Exponent& m) { out.push_back(m); });
  return out;
}

IdealGens::IdealGens(std::vector<Poly> gens, MonomialOrder order) : gens_(std::move(gens)), order_(std::move(order)) {
  if (gens_.empty()) throw Error(ErrorKind::InvalidArgument, "ideal needs at least one generator");
  nvars_ = gens_.front().nvars();
  for (const auto& g : gens_)
    if (g.nvars() != nvars_) throw Error(ErrorKind::RingMismatch, "ideal generators live in different rings");
}

const StandardBasis& IdealGens::basis() const {
  if (tracked_) return *tracked_;
  if (!basis_) basis_ = std::make_shared<const StandardBasis>(standard_basis(gens_, order_, false));
  return *basis_;
}

const StandardBasis& IdealGens::tracked_basis() const {
  if (!tracked_) tracked_ = std::make_shared<const StandardBasis>(standard_basis(gens_, order_, true));
  return *tracked_;
}

std::optional<std::size_t> quotient_dim(const IdealGens& ideal) { return ideal.basis().quotient_dim(); }

std::size_t monomial_power_bound(const IdealGens& ideal) {
  const auto& sb = ideal.basis();
  auto dim = sb.quotient_dim();
  if (!dim) throw Error(ErrorKind::NotZeroDimensional, "ideal is not zero-dimensional");
  std::size_t bound = 1;
  std::size_t n = ideal.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    // In the local ring m^dim lies in the ideal, so the search ends by dim.
    std::size_t N = 1;
    for (;; ++N) {
      Exponent e(n, 0);
      e[i] = static_cast<std::uint32_t>(N);
      if (sb.contains(Poly::monomial(e, Rational(1)))) break;
      if (N > *dim + 1)
        throw Error(ErrorKind::NotZeroDimensional, "no pure power of a variable lies in the ideal");
    }
    bound = std::max(bound, N);
  }
  return bound;
}

Membership membership_with_cofactors(const Poly& p, const IdealGens& ideal) {
  const auto& sb = ideal.tracked_basis();
  std::size_t n = ideal.nvars();
  Engine eng(sb.order(), n, ideal.gens().size(), true);
  auto G = as_tracked(sb, true);
  Tracked h = eng.input(p, true);
  eng.normal_form(h, G);
  if (!h.p.is_zero()) throw Error(ErrorKind::NotMember, "polynomial is not in the ideal");
  // cf * p + sum C_j g_j = 0.
  Membership m;
  Rational c0 = h.cf.constant_term();
  if (sgn(c0) == 0) throw Error(ErrorKind::Conflict, "membership denominator is not a unit");
  Rational inv = 1 / c0;
  m.unit = h.cf * inv;
  for (auto& c : h.C) m.cofactors.push_back(-(c * inv));
  return m;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  if (p.nvars() != f.nvars()) throw Error(ErrorKind::RingMismatch, "division across rings");
  // Lexicographic division: the std::map key order is lex.
  const auto& [lf, cf] = *f.terms().rbegin();
  Poly q(p.nvars()), r = p;
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    if (!divides(lf, lr)) return std::nullopt;
    Exponent m = exp_sub(lr, lf);
    Rational c = cr / cf;
    q.add_term(m, c);
    r -= f.mul_monomial(m, c);
  }
  return q;
}

std::optional<std::size_t> order_along_curve(const Poly& g, const std::vector<Poly>& curve) {
  std::vector<Poly> gens = curve;
  gens.push_back(g);
  return local_dim(gens);
}

std::optional<std::size_t> local_dim(const std::vector<Poly>& gens) {
  return standard_basis(gens, MonomialOrder::local()).quotient_dim();
}

std::optional<std::size_t> global_dim(const std::vector<Poly>& gens) {
  return standard_basis(gens, MonomialOrder::global()).quotient_dim();
}

}  // namespace folindex
