// Copyright 2026 The tame-certify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tame/fp_linalg.hpp"

#include <algorithm>
#include <string>

#include "tame/error.hpp"
#include "tame/residue.hpp"

namespace tame {

namespace {

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

void check_modulus(std::uint64_t p) {
  if (p == 2 || p >= (1ULL << 31) || !is_prime(p)) {
    throw PreconditionError("F_p modulus must be an odd prime below 2^31, got " +
                            std::to_string(p));
  }
}

}  // namespace

FpMatrix::FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  check_modulus(p);
}

FpMatrix::FpMatrix(std::uint64_t p, const std::vector<FpVector>& rows,
                   std::size_t cols)
    : FpMatrix(p, rows.size(), cols) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw PreconditionError("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) data_[r * cols + c] = rows[r][c] % p;
  }
}

FpMatrix::FpMatrix(std::uint64_t p, const std::vector<FpVector>& rows)
    : FpMatrix(p, rows, rows.empty() ? 0 : rows.front().size()) {}

void FpMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  data_[r * cols_ + c] = value % p_;
}

std::vector<FpVector> FpMatrix::row_vectors() const {
  std::vector<FpVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto span = row(r);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

Echelon row_reduce(const FpMatrix& m) {
  const auto p = m.modulus();
  FpMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pick = lead;
    while (pick < a.rows() && a.at(pick, c) == 0) ++pick;
    if (pick == a.rows()) continue;
    if (pick != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto tmp = a.at(lead, j);
        a.set(lead, j, a.at(pick, j));
        a.set(pick, j, tmp);
      }
    }
    const auto inv = inverse(a.at(lead, c), p);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      a.set(lead, j, a.at(lead, j) * inv);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const auto f = a.at(r, c);
      if (r == lead || f == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a.set(r, j, a.at(r, j) + (p - f) * a.at(lead, j));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  const auto p = m.modulus();
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      v[ech.pivots[i]] = (p - ech.reduced.at(i, free)) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t dot(std::span<const std::uint64_t> a,
                  std::span<const std::uint64_t> b, std::uint64_t p) {
  if (a.size() != b.size()) throw PreconditionError("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + a[i] * b[i]) % p;
  return acc;
}

FpVector reduce_modulo(std::span<const std::uint64_t> v, const Echelon& rows) {
  const auto p = rows.reduced.modulus();
  if (v.size() != rows.reduced.cols()) {
    throw PreconditionError("reduce_modulo: length mismatch");
  }
  FpVector out(v.begin(), v.end());
  for (auto& x : out) x %= p;
  for (std::size_t i = 0; i < rows.pivots.size(); ++i) {
    const auto f = out[rows.pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = (out[j] + (p - f) * rows.reduced.at(i, j)) % p;
    }
  }
  return out;
}

bool in_span(std::span<const std::uint64_t> v,
             const std::vector<FpVector>& gens, std::uint64_t p) {
  for (const auto& g : gens) {
    if (g.size() != v.size()) throw PreconditionError("in_span: length mismatch");
  }
  const auto ech = row_reduce(FpMatrix(p, gens, v.size()));
  const auto rest = reduce_modulo(v, ech);
  return std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; });
}

std::optional<FpVector> solve_functional(
    const std::vector<FpVector>& constraints_zero,
    const std::vector<FpVector>& constraints_nonzero, std::size_t dim,
    std::uint64_t p) {
  for (const auto& w : constraints_nonzero) {
    if (w.size() != dim) throw PreconditionError("solve_functional: length");
  }
  const auto basis = kernel_basis(FpMatrix(p, constraints_zero, dim));
  const std::size_t k = basis.size();

  // Constraint w becomes u_w with phi(w) = c . u_w for phi = sum c_i basis_i.
  // Each u_w is checked as soon as its last nonzero coordinate is assigned.
  std::vector<std::vector<FpVector>> due(k);
  for (const auto& w : constraints_nonzero) {
    FpVector u(k);
    for (std::size_t i = 0; i < k; ++i) u[i] = dot(basis[i], w, p);
    auto last = std::find_if(u.rbegin(), u.rend(), [](auto x) { return x != 0; });
    if (last == u.rend()) return std::nullopt;
    due[static_cast<std::size_t>(u.rend() - last) - 1].push_back(std::move(u));
  }

  FpVector c(k, 0);
  // Depth-first in lexicographic order; the first complete assignment is the
  // lexicographically smallest solution.
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::uint64_t value = 0; value < p; ++value) {
      c[i] = value;
      bool ok = true;
      for (const auto& u : due[i]) {
        if (dot(c, u, p) == 0) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
    }
    c[i] = 0;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  FpVector phi(dim, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      phi[j] = (phi[j] + c[i] * basis[i][j]) % p;
    }
  }
  return phi;
}

}  // namespace tame
