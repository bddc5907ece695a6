#include "folindex/jet_oracle.hpp"

#include <algorithm>
#include <map>

#include "folindex/errors.hpp"
#include "folindex/ideal.hpp"
#include "folindex/linalg.hpp"

namespace folindex {

namespace {

std::uint64_t encode(const Exponent& e, int order) {
  std::uint64_t key = 0;
  for (std::size_t i = e.size(); i-- > 0;) key = key * static_cast<std::uint64_t>(order) + e[i];
  return key;
}

void enumerate(std::size_t nvars, std::size_t var, int remaining, Exponent& e, std::vector<Exponent>& out) {
  if (var + 1 == nvars) {
    e[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(e);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[var] = static_cast<std::uint32_t>(k);
    enumerate(nvars, var + 1, remaining - k, e, out);
  }
  e[var] = 0;
}

using RowMap = std::map<std::size_t, Rational>;

// Adds sign * p * x^shift, truncated, into the block of subset `block`.
void add_scaled(RowMap& row, const JetSpace& js, std::size_t block, const Poly& p, const Exponent& shift,
                int sign) {
  Exponent e(js.nvars());
  for (const auto& [pe, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = pe[i] + shift[i];
    auto k = js.index(e);
    if (!k) continue;
    std::size_t col = block * js.size() + *k;
    Rational& slot = row[col];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
    if (sgn(slot) == 0) row.erase(col);
  }
}

// Subsets of {0..m-1} of size j in lexicographic order, as bitmasks.
struct Subsets {
  std::vector<std::vector<unsigned>> by_size;
  std::map<unsigned, std::size_t> index;

  explicit Subsets(std::size_t m) : by_size(m + 1) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) by_size[__builtin_popcount(mask)].push_back(mask);
    for (auto& v : by_size) {
      std::sort(v.begin(), v.end(), [m](unsigned a, unsigned b) {
        for (std::size_t i = 0; i < m; ++i) {
          bool ai = a >> i & 1u, bi = b >> i & 1u;
          if (ai != bi) return ai;
        }
        return false;
      });
      for (std::size_t k = 0; k < v.size(); ++k) index[v[k]] = k;
    }
  }
};

class Window {
public:
  Window(const std::vector<Poly>& a, const Poly* f, std::size_t top, int order)
      : a_(a), f_(f), top_(top), m_(a.front().nvars()), js_(m_, order), subsets_(m_) {
    if (f_ != nullptr)
      for (std::size_t i = 0; i < m_; ++i) df_.push_back(partial_derivative(*f_, i));
  }

  std::size_t module_dim(std::size_t j) const { return subsets_.by_size[j].size() * js_.size(); }
  const JetSpace& jets() const { return js_; }

  // i_a of x^alpha e_S, written in A_{j-1}.
  RowMap contract_basis(std::size_t j, std::size_t s, std::size_t k) const {
    RowMap row;
    unsigned mask = subsets_.by_size[j][s];
    int pos = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!(mask >> i & 1u)) continue;
      unsigned rest = mask & ~(1u << i);
      add_scaled(row, js_, subsets_.index.at(rest), a_[i], js_.monomials()[k], pos % 2 == 0 ? 1 : -1);
      ++pos;
    }
    return row;
  }

  // Spanning rows of R_j = f A_j + df ^ A_{j-1} inside A_j.
  void relation_rows(std::size_t j, SparseMatrix& out) const {
    if (f_ == nullptr) return;
    const auto& mons = js_.monomials();
    for (std::size_t s = 0; s < subsets_.by_size[j].size(); ++s)
      for (std::size_t k = 0; k < mons.size(); ++k) {
        RowMap row;
        add_scaled(row, js_, s, *f_, mons[k], 1);
        out.add_row(make_row(row));
      }
    if (j == 0) return;
    for (unsigned mask : subsets_.by_size[j - 1])
      for (std::size_t k = 0; k < mons.size(); ++k) {
        RowMap row;
        for (std::size_t i = 0; i < m_; ++i) {
          if (mask >> i & 1u) continue;
          int below = __builtin_popcount(mask & ((1u << i) - 1u));
          add_scaled(row, js_, subsets_.index.at(mask | (1u << i)), df_[i], mons[k], below % 2 == 0 ? 1 : -1);
        }
        out.add_row(make_row(row));
      }
  }

  // Images i_a(x^alpha e_S) for all basis elements of A_j, or only those of
  // degree >= min_degree.
  void contraction_rows(std::size_t j, int min_degree, SparseMatrix& out) const {
    const auto& mons = js_.monomials();
    for (std::size_t s = 0; s < subsets_.by_size[j].size(); ++s)
      for (std::size_t k = 0; k < mons.size(); ++k) {
        if (static_cast<int>(total_degree(mons[k])) < min_degree) continue;
        out.add_row(make_row(contract_basis(j, s, k)));
      }
  }

  // The composite i_a i_a vanishes on every basis element of A_j.
  void assert_complex(std::size_t j) const {
    if (j < 2) return;
    for (std::size_t s = 0; s < subsets_.by_size[j].size(); ++s)
      for (std::size_t k = 0; k < js_.size(); ++k) {
        RowMap once = contract_basis(j, s, k);
        RowMap twice;
        for (const auto& [col, c] : once) {
          RowMap part = contract_basis(j - 1, col / js_.size(), col % js_.size());
          for (const auto& [c2, v] : part) {
            Rational& slot = twice[c2];
            slot += c * v;
            if (sgn(slot) == 0) twice.erase(c2);
          }
        }
        if (!twice.empty()) throw Error(ErrorKind::Conflict, "contraction maps do not compose to zero");
      }
  }

  std::size_t top() const { return top_; }

private:
  const std::vector<Poly>& a_;
  const Poly* f_;
  std::size_t top_;
  std::size_t m_;
  JetSpace js_;
  Subsets subsets_;
  std::vector<Poly> df_;
};

std::size_t count_degree_at_least(const JetSpace& js, int d) {
  std::size_t c = 0;
  for (const auto& e : js.monomials())
    if (static_cast<int>(total_degree(e)) >= d) ++c;
  return c;
}

}  // namespace

JetSpace::JetSpace(std::size_t nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars == 0 || order < 0) throw Error(ErrorKind::InvalidArgument, "jet space needs variables and a nonnegative order");
  Exponent e(nvars, 0);
  for (int d = 0; d < order; ++d) enumerate(nvars, 0, d, e, monomials_);
  for (std::size_t k = 0; k < monomials_.size(); ++k) lookup_.emplace(encode(monomials_[k], order_), k);
}

std::optional<std::size_t> JetSpace::index(const Exponent& e) const {
  if (static_cast<int>(total_degree(e)) >= order_) return std::nullopt;
  auto it = lookup_.find(encode(e, order_));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::size_t truncated_dim_at(const std::vector<Poly>& gens, int order) {
  std::size_t n = gens.front().nvars();
  JetSpace js(n, order);
  SparseMatrix m(js.size());
  for (const auto& g : gens)
    for (const auto& mon : js.monomials()) {
      RowMap row;
      add_scaled(row, js, 0, g, mon, 1);
      m.add_row(make_row(row));
    }
  return js.size() - rank(m);
}

}  // namespace

TruncatedDim truncated_quotient_dim(const std::vector<Poly>& gens, int order) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "ideal needs at least one generator");
  TruncatedDim out;
  out.value = truncated_dim_at(gens, order);
  out.stabilized = truncated_dim_at(gens, order + 1) == out.value;
  return out;
}

ComplexHomology contraction_homology_window(const std::vector<Poly>& a, const Poly* f, std::size_t top, int M,
                                            int slack) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "contraction needs a nonempty sequence");
  Window small(a, f, top, M), big(a, f, top, M + slack);
  ComplexHomology out;
  out.order = M;
  for (std::size_t j = 2; j <= top; ++j) small.assert_complex(j);
  for (std::size_t j = 0; j <= top; ++j) {
    // dim of the projection to A_j(M) of {x in A_j(N) : i_a x in R_{j-1} mod m^N}.
    long zproj;
    if (j == 0) {
      zproj = static_cast<long>(small.module_dim(0));
    } else {
      std::size_t cols = big.module_dim(j - 1);
      SparseMatrix rel(cols);
      big.relation_rows(j - 1, rel);
      std::size_t rR = rank(rel);
      SparseMatrix all = rel, deep = rel;
      big.contraction_rows(j, 0, all);
      big.contraction_rows(j, M, deep);
      long dimZ = static_cast<long>(big.module_dim(j)) - static_cast<long>(rank(all) - rR);
      long dimW = static_cast<long>(count_degree_at_least(big.jets(), M) * (big.module_dim(j) / big.jets().size()));
      long dimZW = dimW - static_cast<long>(rank(deep) - rR);
      zproj = dimZ - dimZW;
    }
    SparseMatrix bnd(small.module_dim(j));
    small.relation_rows(j, bnd);
    if (j < top) small.contraction_rows(j + 1, 0, bnd);
    long h = zproj - static_cast<long>(rank(bnd));
    if (h < 0) throw Error(ErrorKind::Conflict, "negative homology dimension in jet window");
    out.dims.push_back(h);
    out.euler += (j % 2 == 0 ? h : -h);
  }
  return out;
}

namespace {

ComplexHomology stabilize(const std::vector<Poly>& a, const Poly* f, std::size_t top, int start, int cap) {
  auto window = [&](int M) { return contraction_homology_window(a, f, top, M, M / 2 + 2); };
  ComplexHomology prev = window(start);
  for (int M = start + 2; M <= cap; M += 2) {
    ComplexHomology cur = window(M);
    if (cur.dims == prev.dims) {
      cur.stabilized = true;
      return cur;
    }
    prev = std::move(cur);
  }
  throw Error(ErrorKind::TruncationNotStabilized, "jet windows did not stabilize up to order " + std::to_string(cap));
}

}  // namespace

ComplexHomology contraction_complex_euler(const VectorField& v, const Poly& f, int start, int cap) {
  if (v.dim() != f.nvars()) throw Error(ErrorKind::RingMismatch, "field and hypersurface rings differ");
  if (!exact_divide(v.apply(f), f)) throw Error(ErrorKind::NotInvariant, "field is not tangent to the hypersurface");
  return stabilize(v.components, &f, v.dim() - 1, start, cap);
}

ComplexHomology log_complex_euler(const VectorField& v, const std::vector<std::size_t>& divisor, int start, int cap) {
  std::vector<Poly> a = v.components;
  for (std::size_t i : divisor) {
    if (i >= v.dim()) throw Error(ErrorKind::InvalidArgument, "divisor variable out of range");
    auto h = exact_divide(v[i], Poly::variable(v.dim(), i));
    if (!h) throw Error(ErrorKind::NotLogarithmic, "field is not logarithmic along the divisor");
    a[i] = *h;
  }
  return stabilize(a, nullptr, v.dim(), start, cap);
}

}  // namespace folindex
