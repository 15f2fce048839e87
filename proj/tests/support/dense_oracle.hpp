#pragma once

// Straightforward dense assembler for nested linear systems over Q, used as
// an independent check of the sparse solver. It enumerates unknowns and
// equations by brute force and ranks with textbook Gaussian elimination.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "nart/nested.hpp"

namespace testing_support {

struct DenseVerdict {
  bool solvable = false;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t nullity() const { return unknowns - rank; }
};

inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[rank][col];
      for (std::size_t k = col; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline bool in_prefix(const std::vector<unsigned>& e, std::size_t bound) {
  for (std::size_t i = bound; i < e.size(); ++i) {
    if (e[i] != 0) return false;
  }
  return true;
}

// All exponent vectors in n variables with total degree < c, any order.
inline std::vector<std::vector<unsigned>> all_exponents(std::size_t n, unsigned c) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k < left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, c);
  return out;
}

inline mpq_class coeff_at(const nart::TruncatedSeries& s, const std::vector<unsigned>& e) {
  nart::Exponent x(e.begin(), e.end());
  return s.coefficient(x).rational();
}

inline DenseVerdict dense_verdict(const nart::NestedLinearSystem& sys) {
  const std::size_t n = sys.ring()->size();
  const unsigned c = sys.c;
  auto monos = all_exponents(n, c);
  std::vector<std::pair<std::size_t, std::vector<unsigned>>> unknowns;
  for (std::size_t i = 0; i < sys.unknowns(); ++i) {
    for (const auto& a : monos) {
      if (in_prefix(a, sys.profile[i])) unknowns.emplace_back(i, a);
    }
  }
  // Equation (r, beta): sum over unknowns (i, alpha) of T[r][i]_{beta - alpha}.
  std::vector<std::vector<mpq_class>> A, Ab;
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    for (const auto& beta : monos) {
      std::vector<mpq_class> row(unknowns.size() + 1, 0);
      for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const auto& [i, alpha] = unknowns[k];
        std::vector<unsigned> gamma(n);
        bool ok = true;
        for (std::size_t v = 0; v < n; ++v) {
          if (alpha[v] > beta[v]) {
            ok = false;
            break;
          }
          gamma[v] = beta[v] - alpha[v];
        }
        if (ok) row[k] = coeff_at(sys.T[r][i], gamma);
      }
      row.back() = coeff_at(sys.b[r], beta);
      Ab.push_back(row);
      row.pop_back();
      A.push_back(row);
    }
  }
  DenseVerdict v;
  v.unknowns = unknowns.size();
  v.rank = dense_rank(A);
  v.solvable = dense_rank(Ab) == v.rank;
  return v;
}

// Checks sum_i T[r][i] y_i = b_r below degree sys.c by direct convolution,
// and that every y_i only uses its first sigma(i) variables.
inline bool dense_is_solution(const nart::NestedLinearSystem& sys, const std::vector<nart::TruncatedSeries>& y) {
  const std::size_t n = sys.ring()->size();
  auto monos = all_exponents(n, sys.c);
  if (y.size() != sys.unknowns()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (const auto& a : monos) {
      if (!in_prefix(a, sys.profile[i]) && coeff_at(y[i], a) != 0) return false;
    }
  }
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    for (const auto& beta : monos) {
      mpq_class acc = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        for (const auto& alpha : monos) {
          std::vector<unsigned> gamma(n);
          bool ok = true;
          for (std::size_t v = 0; v < n && ok; ++v) {
            ok = alpha[v] <= beta[v];
            if (ok) gamma[v] = beta[v] - alpha[v];
          }
          if (ok) acc += coeff_at(sys.T[r][i], gamma) * coeff_at(y[i], alpha);
        }
      }
      if (acc != coeff_at(sys.b[r], beta)) return false;
    }
  }
  return true;
}

}  // namespace testing_support
