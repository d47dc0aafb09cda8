#include "exact_linalg.hpp"

#include <optional>
#include <utility>

#include "error.hpp"

namespace toric {

GcdResult extended_gcd(const Integer& a, const Integer& b) {
  // Iterative Euclid on (a, b), carrying the coefficients of a.
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer next_r = old_r - q * r;
    old_r = std::exchange(r, next_r);
    Integer next_s = old_s - q * s;
    old_s = std::exchange(s, next_s);
  }
  Integer g = old_r;
  Integer x = old_s;
  if (g < 0) {
    g = -g;
    x = -x;
  }
  if (g == 0) return {0, 0, 0};
  if (b == 0) return {g, sgn(a), 0};

  // Shift x by multiples of |b/g| into (-step/2, step/2].
  Integer step = abs(b) / g;
  Integer reduced;
  mpz_fdiv_r(reduced.get_mpz_t(), x.get_mpz_t(), step.get_mpz_t());
  if (2 * reduced > step) reduced -= step;
  x = reduced;
  Integer y = (g - a * x) / b;
  return {g, x, y};
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  Integer g = content(v);
  if (g == 0) fail(ErrorCode::kInvalidArgument, "primitive: zero vector");
  IntVector out(v.begin(), v.end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::kInvalidArgument, "determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : invariant_factors)
    if (d != 0) ++r;
  return r;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

bool abs_less(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<Position> smallest_in_block(const IntMatrix& m, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (!best || abs_less(m(i, j), m(best->row, best->col))) best = Position{i, j};
    }
  return best;
}

// Smallest nonzero |entry| in row t or column t, restricted to the block.
std::optional<Position> smallest_in_cross(const IntMatrix& m, std::size_t t) {
  std::optional<Position> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (m(i, j) == 0) return;
    if (!best || abs_less(m(i, j), m(best->row, best->col))) best = Position{i, j};
  };
  for (std::size_t i = t; i < m.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < m.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto move_to_pivot = [&](std::size_t t, Position p) {
    d.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    d.swap_columns(t, p.col);
    v.swap_columns(t, p.col);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    auto pivot = smallest_in_block(d, t);
    if (!pivot) break;
    move_to_pivot(t, *pivot);

    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clear = false;
      }
      if (!clear) {
        move_to_pivot(t, *smallest_in_cross(d, t));
        continue;
      }

      // Row and column are clear; the pivot must divide the rest of the block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      d.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(d), std::move(v), {}};
  out.invariant_factors.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.invariant_factors.push_back(out.d(i, i));
  return out;
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const std::size_t n = a.cols();
  IntMatrix basis(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j - r) = snf.v(i, j);
  return basis;
}

bool is_unimodular(const IntMatrix& a) {
  return a.is_square() && abs(determinant(a)) == 1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!is_unimodular(a)) fail(ErrorCode::kNotUnimodular, "inverse: matrix is not unimodular");
  const std::size_t n = a.rows();
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<mpq_class> m(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = a(r, c);
    at(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (at(p, col) == 0) ++p;
    if (p != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(p, c), at(col, c));
    mpq_class inv = 1 / at(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      mpq_class f = at(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = at(r, n + c);
      ensure(q.get_den() == 1, "inverse of unimodular matrix is not integral");
      out(r, c) = q.get_num();
    }
  return out;
}

IntMatrix complete_to_unimodular(std::span<const Integer> v) {
  if (v.empty()) fail(ErrorCode::kInvalidArgument, "complete_to_unimodular: empty vector");
  Integer g = content(v);
  if (g == 0) fail(ErrorCode::kInvalidArgument, "complete_to_unimodular: zero vector");
  if (g != 1) fail(ErrorCode::kNotPrimitive, "complete_to_unimodular: vector is not primitive");

  const std::size_t n = v.size();
  IntMatrix column(n, 1);
  column.set_column(0, v);
  // U v s = e_1 with s = +-1, so v = s * U^{-1} e_1.
  SmithDecomposition snf = smith_normal_form(column);
  IntMatrix m = inverse_unimodular(snf.u);
  if (snf.v(0, 0) < 0) m.negate_column(0);
  ensure(m.column(0) == IntVector(v.begin(), v.end()), "unimodular completion lost first column");
  return m;
}

}  // namespace toric
