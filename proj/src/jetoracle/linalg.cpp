#include "folindex/linalg.hpp"

#include <algorithm>

#include "folindex/errors.hpp"

namespace folindex {

namespace {

void divide_content(SparseRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(r.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r <- a*r - b*p where a, b are the leading entries of p and r; the shared
// leading column cancels.  Result is content-normalized.
SparseRow eliminate(const SparseRow& r, const SparseRow& p) {
  Integer a = p.front().second, b = r.front().second;
  Integer g = gcd(a, b);
  a /= g;
  b /= g;
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      t = a * r[i].second - b * p[j].second;
      if (sgn(t) != 0) out.emplace_back(r[i].first, t);
      ++i;
      ++j;
    }
  }
  divide_content(out);
  return out;
}

}  // namespace

SparseRow make_row(const std::map<std::size_t, Rational>& entries) {
  Integer l = 1;
  for (const auto& [c, q] : entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  SparseRow r;
  for (const auto& [c, q] : entries) {
    if (sgn(q) == 0) continue;
    Integer v = q.get_num() * (l / q.get_den());
    r.emplace_back(c, v);
  }
  divide_content(r);
  return r;
}

void SparseMatrix::add_row(SparseRow r) {
  if (!r.empty() && r.back().first >= cols_) throw Error(ErrorKind::InvalidArgument, "row entry beyond column count");
  if (!r.empty()) rows_.push_back(std::move(r));
}

void SparseMatrix::append(const SparseMatrix& other) {
  if (other.cols_ != cols_) throw Error(ErrorKind::InvalidArgument, "appending rows of a different width");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::size_t rank_serial(const SparseMatrix& m) {
  std::map<std::size_t, SparseRow> echelon;
  for (const auto& row : m.row_list()) {
    SparseRow r = row;
    while (!r.empty()) {
      auto it = echelon.find(r.front().first);
      if (it == echelon.end()) {
        std::size_t lead = r.front().first;
        echelon.emplace(lead, std::move(r));
        break;
      }
      r = eliminate(r, it->second);
    }
  }
  return echelon.size();
}

std::size_t rank_parallel(const SparseMatrix& m) {
  std::vector<SparseRow> rows = m.row_list();
  std::vector<std::vector<std::size_t>> bucket(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) bucket[rows[i].front().first].push_back(i);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& members = bucket[c];
    if (members.empty()) continue;
    ++rank;
    // Shortest row as pivot keeps fill-in low; ties go to the lowest index.
    auto piv_it = std::min_element(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return rows[a].size() != rows[b].size() ? rows[a].size() < rows[b].size() : a < b;
    });
    std::size_t piv = *piv_it;
    std::vector<std::size_t> others;
    for (std::size_t i : members)
      if (i != piv) others.push_back(i);
    const SparseRow& prow = rows[piv];
    const long count = static_cast<long>(others.size());
#pragma omp parallel for schedule(dynamic, 4) if (count > 8)
    for (long k = 0; k < count; ++k) {
      std::size_t i = others[k];
      rows[i] = eliminate(rows[i], prow);
    }
    for (std::size_t i : others)
      if (!rows[i].empty()) bucket[rows[i].front().first].push_back(i);
    members.clear();
    members.shrink_to_fit();
  }
  return rank;
}

std::size_t rank(const SparseMatrix& m) { return m.rows() < 64 ? rank_serial(m) : rank_parallel(m); }

}  // namespace folindex
