#include "folindex/forms.hpp"

#include <algorithm>
#include <sstream>

#include "folindex/errors.hpp"

namespace folindex {

VectorField::VectorField(std::vector<Poly> comps) : components(std::move(comps)) {
  for (const auto& c : components)
    if (c.nvars() != components.size())
      throw Error(ErrorKind::RingMismatch, "vector field components must live in a ring of n variables");
}

Poly VectorField::apply(const Poly& f) const {
  if (f.nvars() != dim()) throw Error(ErrorKind::RingMismatch, "field and polynomial rings differ");
  Poly out(f.nvars());
  for (std::size_t i = 0; i < dim(); ++i) out += components[i] * partial_derivative(f, i);
  return out;
}

VectorField VectorField::translate_to_origin(std::span<const Rational> q) const {
  std::vector<Poly> comps;
  for (const auto& c : components) comps.push_back(folindex::translate_to_origin(c, q));
  return VectorField(std::move(comps));
}

DiffForm::DiffForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {
  if (degree > nvars) throw Error(ErrorKind::InvalidArgument, "form degree exceeds number of variables");
}

DiffForm DiffForm::function(const Poly& p) {
  DiffForm w(p.nvars(), 0);
  w.add({}, p);
  return w;
}

DiffForm DiffForm::differential(std::size_t nvars, std::size_t i) {
  DiffForm w(nvars, 1);
  w.add({i}, Poly::constant(nvars, Rational(1)));
  return w;
}

DiffForm DiffForm::volume(std::size_t nvars) {
  DiffForm w(nvars, nvars);
  Index idx(nvars);
  for (std::size_t i = 0; i < nvars; ++i) idx[i] = i;
  w.add(idx, Poly::constant(nvars, Rational(1)));
  return w;
}

Poly DiffForm::coefficient(const Index& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Poly(nvars_) : it->second;
}

void DiffForm::add(Index idx, const Poly& c) {
  if (idx.size() != degree_) throw Error(ErrorKind::InvalidArgument, "index tuple length differs from degree");
  if (c.nvars() != nvars_) throw Error(ErrorKind::RingMismatch, "form coefficient ring mismatch");
  for (auto i : idx)
    if (i >= nvars_) throw Error(ErrorKind::InvalidArgument, "differential index out of range");
  // Bubble sort tracks the permutation sign.
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
      if (idx[b] == idx[b + 1]) return;
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t b = 0; b + 1 < idx.size(); ++b)
    if (idx[b] == idx[b + 1]) return;
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(idx, Poly(nvars_));
  if (sign > 0)
    it->second += c;
  else
    it->second -= c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

DiffForm& DiffForm::operator+=(const DiffForm& other) {
  if (other.nvars_ != nvars_ || other.degree_ != degree_)
    throw Error(ErrorKind::RingMismatch, "adding forms of different shape");
  for (const auto& [idx, c] : other.coeffs_) add(idx, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& other) {
  if (other.nvars_ != nvars_ || other.degree_ != degree_)
    throw Error(ErrorKind::RingMismatch, "subtracting forms of different shape");
  for (const auto& [idx, c] : other.coeffs_) add(idx, -c);
  return *this;
}

DiffForm operator*(const Poly& p, const DiffForm& w) {
  DiffForm out(w.nvars(), w.degree());
  for (const auto& [idx, c] : w.coeffs()) out.add(idx, p * c);
  return out;
}

DiffForm DiffForm::translate_to_origin(std::span<const Rational> q) const {
  DiffForm out(nvars_, degree_);
  for (const auto& [idx, c] : coeffs_) out.add(idx, folindex::translate_to_origin(c, q));
  return out;
}

std::string DiffForm::to_string(std::span<const std::string> names) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(names) << ")";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k == 0 ? " d" : "^d") << names[idx[k]];
  }
  return os.str();
}

DiffForm contract(const DiffForm& w, const VectorField& v) {
  if (w.degree() == 0) throw Error(ErrorKind::InvalidArgument, "cannot contract a function");
  if (v.dim() != w.nvars()) throw Error(ErrorKind::RingMismatch, "field and form dimensions differ");
  DiffForm out(w.nvars(), w.degree() - 1);
  for (const auto& [idx, c] : w.coeffs()) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      DiffForm::Index rest;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      Poly term = c * v[idx[j]];
      out.add(rest, (j % 2 == 0) ? term : -term);
    }
  }
  return out;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::RingMismatch, "wedge of forms on different rings");
  if (a.degree() + b.degree() > a.nvars()) return DiffForm(a.nvars(), a.nvars());
  DiffForm out(a.nvars(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.coeffs()) {
    for (const auto& [ib, cb] : b.coeffs()) {
      DiffForm::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(idx, ca * cb);
    }
  }
  return out;
}

DiffForm exterior_derivative(const DiffForm& w) {
  if (w.degree() == w.nvars()) return DiffForm(w.nvars(), w.degree());
  DiffForm out(w.nvars(), w.degree() + 1);
  for (const auto& [idx, c] : w.coeffs()) {
    for (std::size_t j = 0; j < w.nvars(); ++j) {
      DiffForm::Index full{j};
      full.insert(full.end(), idx.begin(), idx.end());
      out.add(full, partial_derivative(c, j));
    }
  }
  return out;
}

DiffForm dual_form(const VectorField& v) { return contract(DiffForm::volume(v.dim()), v); }

VectorField field_from_dual(const DiffForm& w) {
  std::size_t n = w.nvars();
  if (n == 0 || w.degree() + 1 != n) throw Error(ErrorKind::InvalidArgument, "dual field needs a form of degree n-1");
  std::vector<Poly> comps;
  for (std::size_t j = 0; j < n; ++j) {
    DiffForm::Index rest;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) rest.push_back(k);
    Poly a = w.coefficient(rest);
    comps.push_back(j % 2 == 0 ? a : -a);
  }
  return VectorField(std::move(comps));
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

PolyMatrix jacobian(const VectorField& v) { return jacobian(std::span<const Poly>(v.components)); }

PolyMatrix jacobian(std::span<const Poly> fs) {
  std::size_t nvars = fs.empty() ? 0 : fs.front().nvars();
  PolyMatrix m(fs.size(), nvars, nvars);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < nvars; ++j) m.at(i, j) = partial_derivative(fs[i], j);
  return m;
}

namespace {

// Coefficients of det(tI - M), highest degree first.
std::vector<Poly> berkowitz(const PolyMatrix& m) {
  std::size_t n = m.rows();
  std::size_t nv = m.nvars();
  Poly one = Poly::constant(nv, Rational(1));
  if (n == 0) return {one};
  std::vector<Poly> vect{one, -m.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Column C of the Toeplitz factor: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
    std::vector<Poly> col{one, -m.at(r, r)};
    std::vector<Poly> q(r);
    for (std::size_t i = 0; i < r; ++i) q[i] = m.at(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Poly dot(nv);
      for (std::size_t i = 0; i < r; ++i) dot += m.at(r, i) * q[i];
      col.push_back(-dot);
      std::vector<Poly> next(r, Poly(nv));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m.at(i, j) * q[j];
      q = std::move(next);
    }
    std::vector<Poly> out(r + 2, Poly(nv));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += col[i - j] * vect[j];
    vect = std::move(out);
  }
  return vect;
}

}  // namespace

std::vector<Poly> char_poly_coeffs(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial of a non-square matrix");
  auto vect = berkowitz(m);
  std::vector<Poly> c;
  for (std::size_t k = 1; k < vect.size(); ++k) c.push_back(k % 2 == 0 ? vect[k] : -vect[k]);
  return c;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() == 0) return Poly::constant(m.nvars(), Rational(1));
  return char_poly_coeffs(m).back();
}

}  // namespace folindex
