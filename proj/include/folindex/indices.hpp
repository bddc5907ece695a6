#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folindex/forms.hpp"
#include "folindex/series.hpp"

namespace folindex {

using Point = std::vector<Rational>;

struct IndexOptions {
  bool oracle = false;      // also run the jet oracle and require agreement
  int truncation = 20;      // starting branch truncation for lifted branches
  int truncation_cap = 160;
};

struct CrossCheck {
  std::string name;
  Rational value;
  bool agrees = true;
};

struct IndexReport {
  Rational value;
  std::string method;
  std::vector<CrossCheck> crosschecks;
  std::vector<std::string> notes;

  /// Records a second route; throws Conflict when it disagrees.
  void cross_check(const std::string& name, const Rational& other);
};

IndexReport milnor_number(const Poly& f, std::span<const Rational> p, const IndexOptions& opt = {});
IndexReport tjurina_number(const Poly& f, std::span<const Rational> p, const IndexOptions& opt = {});
/// dim O/(v_1..v_n), cross-checked by the residue of det Jv.
IndexReport ph_index(const VectorField& v, std::span<const Rational> p, const IndexOptions& opt = {});

/// h with v(f) = h f; NotInvariant otherwise.
Poly tangency_cofactor(const VectorField& v, const Poly& f);

IndexReport tjurina_vf(const VectorField& v, const Poly& f, std::span<const Rational> p);

struct HomologyDims {
  std::size_t h0 = 0;
  std::size_t hn = 0;
  std::optional<long> lambda;  // middle dimension, n >= 2 only
};

HomologyDims homology_dims(const VectorField& v, const Poly& f, std::span<const Rational> p);

/// Euler characteristic of the Kahler contraction complex by the closed
/// dimension formulas; this is also the GSV index of the hypersurface germ.
IndexReport homological_index(const VectorField& v, const Poly& f, std::span<const Rational> p,
                              const IndexOptions& opt = {});

/// g * omega_v = xi * df + f * eta for n = 2.
struct DecompositionTriple {
  Poly g;
  Poly xi;
  DiffForm eta;
  bool fallback = false;  // (f_x, P, -c dy) instead of (f_y, Q, c dx)
};

/// Both variants; a variant is valid when its g has finite order along f.
std::vector<DecompositionTriple> saito_variants(const VectorField& v, const Poly& f);
/// Primary variant when valid, else the fallback; DegenerateDecomposition
/// when neither is valid.
DecompositionTriple saito_decomposition(const VectorField& v, const Poly& f);

IndexReport gsv_curve(const VectorField& v, const Poly& f, std::span<const Rational> p, const IndexOptions& opt = {});

/// Curve cut out by n-1 equations in n variables, foliation given by v (the
/// (n-1)-form is its dual).
IndexReport gsv_pfaff_curve(const VectorField& v, const std::vector<Poly>& curve, std::span<const Rational> p);

/// Camacho-Sad index along the given branches (each centred at p, written in
/// the original coordinates).  With no branches the curve must be smooth at
/// p and is lifted automatically.
IndexReport cs_index(const VectorField& v, const Poly& f, const std::vector<Branch>& branches,
                     std::span<const Rational> p, const IndexOptions& opt = {});

IndexReport var_index(const VectorField& v, const Poly& f, const std::vector<Branch>& branches,
                      std::span<const Rational> p, const IndexOptions& opt = {});

/// GSV - (-1)^n mu, n the dimension of the hypersurface.
Integer radial_index(const Integer& gsv, const Integer& mu, std::size_t n);

/// dim O/(v_i / x_i for i in D, v_j for j not in D) at p; D lists variables
/// whose hyperplanes x_i = p_i form the divisor.
IndexReport log_index(const VectorField& v, const std::vector<std::size_t>& divisor, std::span<const Rational> p,
                      const IndexOptions& opt = {});

/// (n-1)! divides gsv.
bool normal_bundle_extension_check(const Integer& gsv, std::size_t n);

}  // namespace folindex
