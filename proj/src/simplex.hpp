#pragma once

// Dense-tableau bounded-variable primal simplex, instantiated for double
// (branch and bound) and Rational (exact LP optima).

#include <cstddef>
#include <type_traits>
#include <vector>

#include "halfdom/kernels.hpp"
#include "halfdom/rational.hpp"

namespace halfdom::detail {

/// max c.x  s.t.  A x <= b,  0 <= x <= upper,  b >= 0.
template <class T>
struct SimplexProblem {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;  // rows x cols, row-major
  std::vector<T> b;
  std::vector<T> c;
  std::vector<T> upper;
};

template <class T>
struct SimplexResult {
  std::vector<T> x;
  std::vector<T> y;  // row multipliers (negated slack reduced costs)
  long pivots = 0;
  bool optimal = false;
};

template <class T>
SimplexResult<T> solve_bounded(const SimplexProblem<T>& p, const T& eps, long max_iterations = 1'000'000) {
  const int m = p.rows;
  const int n = p.cols;
  const int width = n + m;
  const auto W = static_cast<std::size_t>(width);
  auto at = [W](int r, int col) { return static_cast<std::size_t>(r) * W + static_cast<std::size_t>(col); };

  std::vector<T> tab(static_cast<std::size_t>(m) * W, T(0));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) tab[at(r, j)] = p.a[static_cast<std::size_t>(r * n + j)];
    tab[at(r, n + r)] = T(1);
  }
  std::vector<T> d(W, T(0));
  for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = p.c[static_cast<std::size_t>(j)];
  std::vector<T> beta = p.b;
  std::vector<int> basis(static_cast<std::size_t>(m));
  std::vector<char> is_basic(W, 0);
  std::vector<char> at_upper(W, 0);
  for (int r = 0; r < m; ++r) {
    basis[static_cast<std::size_t>(r)] = n + r;
    is_basic[static_cast<std::size_t>(n + r)] = 1;
  }
  auto has_upper = [n](int col) { return col < n; };
  auto upper_of = [&](int col) -> const T& { return p.upper[static_cast<std::size_t>(col)]; };
  auto magnitude = [](const T& v) { return v < T(0) ? T(-v) : v; };

  SimplexResult<T> out;
  bool bland = false;
  int degenerate_run = 0;
  constexpr int kBlandAfter = 50;

  for (long iter = 0; iter < max_iterations; ++iter) {
    int enter = -1;
    T best(0);
    for (int col = 0; col < width; ++col) {
      const auto c = static_cast<std::size_t>(col);
      if (is_basic[c]) continue;
      const T& dj = d[c];
      const bool up = !at_upper[c] && dj > eps;
      const bool down = at_upper[c] && dj < T(-eps);
      if (!up && !down) continue;
      if (bland) {
        enter = col;
        break;
      }
      const T mag = magnitude(dj);
      if (enter < 0 || mag > best) {
        enter = col;
        best = mag;
      }
    }
    if (enter < 0) {
      out.optimal = true;
      break;
    }
    const auto e = static_cast<std::size_t>(enter);
    const int dir = at_upper[e] ? -1 : 1;

    // Ratio test; leave == -1 means a bound flip of the entering column.
    int leave = -1;
    bool leave_to_upper = false;
    bool limited = has_upper(enter);
    T step = limited ? upper_of(enter) : T(0);
    for (int r = 0; r < m; ++r) {
      const T& alpha = tab[at(r, enter)];
      if (!(alpha > eps) && !(alpha < T(-eps))) continue;
      const T rate = dir > 0 ? T(-alpha) : alpha;  // change of beta_r per unit step
      const int bv = basis[static_cast<std::size_t>(r)];
      T lim;
      bool to_upper = false;
      if (rate < T(0)) {
        lim = beta[static_cast<std::size_t>(r)] / T(-rate);
      } else if (has_upper(bv)) {
        lim = (upper_of(bv) - beta[static_cast<std::size_t>(r)]) / rate;
        to_upper = true;
      } else {
        continue;
      }
      if (lim < T(0)) lim = T(0);
      bool take = false;
      if (!limited || lim < step - eps) {
        take = true;
      } else if (!(lim > step + eps)) {
        if (leave < 0) {
          take = false;  // prefer the flip on ties
        } else if (bland) {
          take = bv < basis[static_cast<std::size_t>(leave)];
        } else {
          take = magnitude(alpha) > magnitude(tab[at(leave, enter)]);
        }
      }
      if (take) {
        leave = r;
        leave_to_upper = to_upper;
        step = lim;
        limited = true;
      }
    }
    if (!limited) break;  // unbounded; cannot happen for boxed structurals

    for (int r = 0; r < m; ++r) {
      const T& alpha = tab[at(r, enter)];
      if (alpha == T(0)) continue;
      if (dir > 0) {
        beta[static_cast<std::size_t>(r)] -= alpha * step;
      } else {
        beta[static_cast<std::size_t>(r)] += alpha * step;
      }
    }
    if (step > eps) {
      degenerate_run = 0;
    } else if (++degenerate_run > kBlandAfter) {
      bland = true;
    }

    if (leave < 0) {
      at_upper[e] = at_upper[e] ? 0 : 1;
      continue;
    }

    const auto lr = static_cast<std::size_t>(leave);
    const int leaving = basis[lr];
    const T entering_value = (at_upper[e] ? upper_of(enter) : T(0)) + (dir > 0 ? step : T(-step));
    at_upper[static_cast<std::size_t>(leaving)] = leave_to_upper ? 1 : 0;
    is_basic[static_cast<std::size_t>(leaving)] = 0;
    at_upper[e] = 0;
    is_basic[e] = 1;
    basis[lr] = enter;
    beta[lr] = entering_value;

    const T pivot = tab[at(leave, enter)];
    T* prow = &tab[at(leave, 0)];
    if constexpr (std::is_same_v<T, double>) {
      const double inv = 1.0 / pivot;
      for (std::size_t k = 0; k < W; ++k) prow[k] *= inv;
      prow[e] = 1.0;
      for (int r = 0; r < m; ++r) {
        if (r == leave) continue;
        double* row = &tab[at(r, 0)];
        const double f = row[e];
        if (f == 0.0) continue;
        kernels::eliminate(row, prow, f, W);
        row[e] = 0.0;
      }
      const double f = d[e];
      if (f != 0.0) {
        kernels::eliminate(d.data(), prow, f, W);
        d[e] = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < W; ++k) {
        if (prow[k] != T(0)) prow[k] /= pivot;
      }
      for (int r = 0; r < m; ++r) {
        if (r == leave) continue;
        T* row = &tab[at(r, 0)];
        const T f = row[e];
        if (f == T(0)) continue;
        for (std::size_t k = 0; k < W; ++k) {
          if (prow[k] != T(0)) row[k] -= f * prow[k];
        }
      }
      const T f = d[e];
      if (f != T(0)) {
        for (std::size_t k = 0; k < W; ++k) {
          if (prow[k] != T(0)) d[k] -= f * prow[k];
        }
      }
    }
    ++out.pivots;
  }

  out.x.assign(static_cast<std::size_t>(n), T(0));
  for (int j = 0; j < n; ++j) {
    if (at_upper[static_cast<std::size_t>(j)]) out.x[static_cast<std::size_t>(j)] = upper_of(j);
  }
  for (int r = 0; r < m; ++r) {
    const int bv = basis[static_cast<std::size_t>(r)];
    if (bv < n) out.x[static_cast<std::size_t>(bv)] = beta[static_cast<std::size_t>(r)];
  }
  out.y.assign(static_cast<std::size_t>(m), T(0));
  for (int r = 0; r < m; ++r) out.y[static_cast<std::size_t>(r)] = T(-d[static_cast<std::size_t>(n + r)]);
  return out;
}

}  // namespace halfdom::detail
