#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folindex/chern.hpp"
#include "folindex/forms.hpp"
#include "folindex/indices.hpp"

namespace folindex {

/// One-dimensional foliation of degree d on P^n in homogeneous coordinates
/// x_0..x_n.  Chart k is {x_k = 1} with affine coordinates the remaining x_j
/// in increasing order of j; chart 0 is the affine space the user writes in.
struct ProjectiveFoliation {
  std::size_t n = 0;
  long degree = 0;
  /// Homogeneous field X_0..X_n of degree d, defined modulo the radial field.
  std::vector<Poly> field;
  /// Homogeneous (n-1)-form with i_R w = 0, when the foliation was given so.
  std::optional<DiffForm> form;

  /// Extends an affine field on chart 0.  The degree is the smallest d that
  /// works: the field has degree d, or degree d+1 with radial top part
  /// g (x_1 d/dx_1 + ... + x_n d/dx_n).  A declared degree must agree.
  static ProjectiveFoliation from_affine(const VectorField& v, std::optional<long> degree = std::nullopt);
  static ProjectiveFoliation from_homogeneous_field(std::vector<Poly> X);
  /// Coefficients homogeneous of degree d+1; EulerConditionViolated unless
  /// contraction with the radial field vanishes.
  static ProjectiveFoliation from_homogeneous_form(const DiffForm& w);
};

/// x_0^deg f(x/x_0), with x_0 inserted as variable 0.
Poly homogenize(const Poly& f);
/// F(x) with x_chart = 1, in the affine coordinates of the chart.
Poly chart_restrict(const Poly& F, std::size_t chart);
/// Affine representative of the foliation on chart k.
VectorField chart_restrict(const ProjectiveFoliation& F, std::size_t chart);

/// Coordinates of the same point of P^n in another chart; nullopt when the
/// point lies on {x_to = 0}.
std::optional<Point> transport_point(const Point& p, std::size_t from, std::size_t to);

struct ChartPoint {
  std::string label;
  std::size_t chart = 0;
  Point coords;
  std::vector<Branch> branches;  // in the chart's coordinates
};

struct CheckRow {
  std::string label;
  std::size_t chart = 0;
  Point coords;
  Rational value;
  std::string method;
  std::vector<CrossCheck> crosschecks;
  std::vector<std::string> notes;
};

struct CheckReport {
  IdentityKind kind = IdentityKind::Brunella;
  std::vector<CheckRow> rows;
  Rational sum;
  Rational rhs;
  bool pass = false;
  /// Completeness certificate lines and other remarks.
  std::vector<std::string> diagnostics;
};

/// Evaluates the local side of the identity at the declared points, the
/// right-hand side through the Chern computations, and certifies that the
/// declared points exhaust the relevant singular set chart by chart
/// (IncompleteSingularities otherwise).  `curve` holds homogeneous
/// equations: one plane curve for brunella, cs_total, var_total, soares; the
/// complete intersection for pfaff_degree and adjunction; nothing otherwise.
/// log_bb uses the hyperplane at infinity as its divisor.
CheckReport run_global_check(const ProjectiveFoliation& F, IdentityKind kind, const std::vector<Poly>& curve,
                             const std::vector<ChartPoint>& points, const IndexOptions& opt = {});

}  // namespace folindex
