#pragma once

#include <map>
#include <vector>

#include "folindex/poly.hpp"

namespace folindex {

/// Tuple (v_1, ..., v_n) of polynomials; v_i is the coefficient of d/dx_i.
struct VectorField {
  std::vector<Poly> components;

  VectorField() = default;
  explicit VectorField(std::vector<Poly> comps);

  std::size_t dim() const { return components.size(); }
  const Poly& operator[](std::size_t i) const { return components[i]; }

  /// v(f) = sum_i v_i df/dx_i.
  Poly apply(const Poly& f) const;
  VectorField translate_to_origin(std::span<const Rational> q) const;

  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// Polynomial differential form of fixed degree.
///
/// Coefficients are keyed by strictly increasing index tuples (i_1 < ... < i_q)
/// standing for dx_{i_1} ^ ... ^ dx_{i_q}.  A degree-0 form has the single
/// key {}.
class DiffForm {
public:
  using Index = std::vector<std::size_t>;

  DiffForm() = default;
  DiffForm(std::size_t nvars, std::size_t degree);

  static DiffForm function(const Poly& p);
  /// dx_i as a 1-form.
  static DiffForm differential(std::size_t nvars, std::size_t i);
  /// dx_1 ^ ... ^ dx_n.
  static DiffForm volume(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::size_t degree() const { return degree_; }
  const std::map<Index, Poly>& coeffs() const { return coeffs_; }
  Poly coefficient(const Index& idx) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * dx_{idx[0]} ^ ... in any index order; the sign of the sorting
  /// permutation is applied and repeated indices vanish.
  void add(Index idx, const Poly& c);

  DiffForm& operator+=(const DiffForm& other);
  DiffForm& operator-=(const DiffForm& other);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const Poly& p, const DiffForm& w);

  friend bool operator==(const DiffForm&, const DiffForm&) = default;

  DiffForm translate_to_origin(std::span<const Rational> q) const;
  std::string to_string(std::span<const std::string> names) const;

private:
  std::size_t nvars_ = 0;
  std::size_t degree_ = 0;
  std::map<Index, Poly> coeffs_;
};

/// Contraction i_v: degree q -> degree q-1 with
/// i_v(dx_{i1}^...^dx_{iq}) = sum_j (-1)^(j-1) v_{ij} dx_{...^ij...}.
DiffForm contract(const DiffForm& w, const VectorField& v);

DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Exterior derivative.
DiffForm exterior_derivative(const DiffForm& w);
inline DiffForm d(const Poly& p) { return exterior_derivative(DiffForm::function(p)); }

/// omega_v = i_v(dx_1 ^ ... ^ dx_n).  For n = 2 this is v1 dy - v2 dx, i.e.
/// P dx + Q dy with P = -v2, Q = v1.
DiffForm dual_form(const VectorField& v);

/// Inverse of dual_form on forms of degree n-1.
VectorField field_from_dual(const DiffForm& w);

class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Poly> data_;
};

/// Jacobian matrix (d v_i / d x_j).
PolyMatrix jacobian(const VectorField& v);
PolyMatrix jacobian(std::span<const Poly> fs);

/// (c_1, ..., c_n) with det(I + tM) = 1 + c_1 t + ... + c_n t^n, via the
/// division-free Berkowitz recursion.
std::vector<Poly> char_poly_coeffs(const PolyMatrix& m);

/// Division-free determinant (last Berkowitz coefficient).
Poly determinant(const PolyMatrix& m);

}  // namespace folindex
