#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "folindex/forms.hpp"
#include "folindex/poly.hpp"

namespace folindex {

/// Monomials of total degree < order in n variables: graded, then
/// lexicographic inside each degree.
class JetSpace {
public:
  JetSpace(std::size_t nvars, int order);

  std::size_t nvars() const { return nvars_; }
  int order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// Position of the monomial, nullopt at or above the truncation order.
  std::optional<std::size_t> index(const Exponent& e) const;

private:
  std::size_t nvars_;
  int order_;
  std::vector<Exponent> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

struct TruncatedDim {
  std::size_t value = 0;
  bool stabilized = false;
};

/// dim O/(I + m^N) at the origin by rank of the truncated multiples; flagged
/// stabilized when the value at N + 1 agrees (then m^N lies in I).
TruncatedDim truncated_quotient_dim(const std::vector<Poly>& gens, int order);

struct ComplexHomology {
  std::vector<long> dims;  // h_0, h_1, ...
  long euler = 0;          // sum (-1)^j h_j
  bool stabilized = false;
  int order = 0;           // truncation order M at which the value was read
};

/// Homology of the contraction complex of the sequence a on the exterior
/// algebra of the free module of rank m (m = nvars), read through the jet
/// windows m^M (projection) and m^N (kernel), N = M + slack.  With a
/// hypersurface f the modules are Kahler forms on {f = 0}: Lambda^j / (f
/// Lambda^j + df ^ Lambda^(j-1)).  Degrees 0..top are used.
ComplexHomology contraction_homology_window(const std::vector<Poly>& a, const Poly* f, std::size_t top, int M,
                                            int slack);

/// Kahler complex of a field tangent to the hypersurface {f = 0}: degrees
/// 0..m-1.  Orders M = start, start + 2, ... until two consecutive windows
/// agree; TruncationNotStabilized past the cap.
ComplexHomology contraction_complex_euler(const VectorField& v, const Poly& f, int start = 4, int cap = 10);

/// Logarithmic complex along the coordinate hyperplanes x_i (i in divisor):
/// the Koszul complex of (v_i / x_i for i in D, v_j otherwise).
ComplexHomology log_complex_euler(const VectorField& v, const std::vector<std::size_t>& divisor, int start = 4,
                                  int cap = 10);

}  // namespace folindex
