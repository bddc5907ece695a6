#pragma once

#include <span>
#include <string>
#include <vector>

#include "folindex/poly.hpp"

namespace folindex::detail {

void check_point(std::size_t nvars, std::span<const Rational> p);
/// Local dimension at the origin; NotZeroDimensional names `what`.
std::size_t finite_dim(const std::vector<Poly>& gens, const std::string& what);
/// Same dimension from truncated jets, read at the first order that passes
/// the stabilization test.
std::size_t oracle_dim(const std::vector<Poly>& gens);

}  // namespace folindex::detail
