#include "cone.hpp"

#include <string>

#include "error.hpp"
#include "exact_linalg.hpp"

namespace toric {

SimplicialCone SimplicialCone::make(std::vector<IntVector> raw_generators) {
  const std::size_t n = raw_generators.size();
  if (n == 0) fail(ErrorCode::kWrongCount, "cone needs at least one generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw_generators[i].size() != n)
      fail(ErrorCode::kWrongCount,
           "expected " + std::to_string(n) + " generators of length " + std::to_string(n) +
               ", generator " + std::to_string(i + 1) + " has length " +
               std::to_string(raw_generators[i].size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (content(raw_generators[i]) == 0)
      fail(ErrorCode::kZeroGenerator, "generator " + std::to_string(i + 1) + " is zero");
    raw_generators[i] = primitive(raw_generators[i]);
  }
  SimplicialCone cone(std::move(raw_generators));
  if (determinant(cone.generator_matrix()) == 0)
    fail(ErrorCode::kDependentGenerators, "generators are linearly dependent (determinant 0)");
  return cone;
}

IntMatrix SimplicialCone::generator_matrix() const {
  return IntMatrix::from_columns(generators_, dim());
}

UnimodularTransform::UnimodularTransform(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!is_unimodular(matrix_)) fail(ErrorCode::kNotUnimodular, "matrix is not unimodular");
}

UnimodularTransform UnimodularTransform::identity(std::size_t n) {
  return UnimodularTransform(IntMatrix::identity(n));
}

UnimodularTransform UnimodularTransform::inverse() const {
  return UnimodularTransform(inverse_unimodular(matrix_));
}

UnimodularTransform operator*(const UnimodularTransform& a, const UnimodularTransform& b) {
  return UnimodularTransform(a.matrix_ * b.matrix_);
}

bool Face::contains(std::size_t i) const {
  for (auto j : indices)
    if (j == i) return true;
  return false;
}

Integer delta(const SimplicialCone& cone) { return determinant(cone.generator_matrix()); }

std::vector<Face> faces(const SimplicialCone& cone, std::size_t d) {
  const std::size_t n = cone.dim();
  if (d > n)
    fail(ErrorCode::kOutOfRange,
         "face dimension " + std::to_string(d) + " out of range 0.." + std::to_string(n));
  std::vector<Face> out;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    out.push_back(Face{idx});
    // Advance to the next combination in lexicographic order.
    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == n - d + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

// adj(G) with G * adj(G) = det(G) * I; row i of adj(G) pairs with column j of G
// to det * delta_ij.
IntMatrix adjugate(const IntMatrix& g) {
  const std::size_t n = g.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = g(r, c);
        }
        ++mr;
      }
      Integer cof = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

}  // namespace

std::vector<IntVector> dual_cone(const SimplicialCone& cone) {
  const IntMatrix g = cone.generator_matrix();
  const IntMatrix adj = adjugate(g);
  const Integer det = determinant(g);
  std::vector<IntVector> out;
  out.reserve(cone.dim());
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    IntVector row = primitive(adj.row(i));
    // <adj row i, u_i> = det, so flip when det < 0.
    if (det < 0)
      for (auto& x : row) x = -x;
    ensure(dot(row, cone.generator(i)) > 0, "dual generator does not pair positively");
    out.push_back(std::move(row));
  }
  return out;
}

bool contains(const SimplicialCone& cone, std::span<const Integer> point) {
  if (point.size() != cone.dim()) fail(ErrorCode::kWrongDimension, "point has wrong length");
  const IntMatrix g = cone.generator_matrix();
  const int det_sign = sgn(determinant(g));
  // lambda = adj(G) p / det(G); only signs matter.
  const IntVector scaled = adjugate(g) * point;
  for (const auto& x : scaled)
    if (sgn(x) * det_sign < 0) return false;
  return true;
}

SimplicialCone transform(const SimplicialCone& cone, const UnimodularTransform& t) {
  if (t.dim() != cone.dim()) fail(ErrorCode::kWrongDimension, "transform dimension mismatch");
  std::vector<IntVector> gens;
  for (const auto& u : cone.generators()) gens.push_back(t.apply(u));
  return SimplicialCone::make(std::move(gens));
}

NormalForm normalize_2d(const SimplicialCone& cone) {
  if (cone.dim() != 2) fail(ErrorCode::kWrongDimension, "normalize_2d needs a 2-dimensional cone");
  const Integer& x1 = cone.generator(0)[0];
  const Integer& y1 = cone.generator(0)[1];
  const Integer& x2 = cone.generator(1)[0];
  const Integer& y2 = cone.generator(1)[1];

  const GcdResult bez = extended_gcd(x1, y1);
  ensure(bez.g == 1, "first generator is not primitive");
  // Sends (x1, y1) to e1.
  IntMatrix m(2, 2);
  m(0, 0) = bez.x;
  m(0, 1) = bez.y;
  m(1, 0) = -y1;
  m(1, 1) = x1;

  const Integer t = x1 * y2 - x2 * y1;
  if (t < 0) m.negate_row(1);

  const IntVector image = m * IntVector{x2, y2};
  const Integer& p = image[0];
  const Integer& q = image[1];
  ensure(q > 0, "second coordinate after the flip is not positive");

  // Least m with p + q*m > 0, i.e. floor(-p/q) + 1.
  Integer neg_p = -p;
  Integer shear;
  mpz_fdiv_q(shear.get_mpz_t(), neg_p.get_mpz_t(), q.get_mpz_t());
  shear += 1;
  m.add_row_multiple(0, 1, shear);

  UnimodularTransform witness(std::move(m));
  SimplicialCone normalized = transform(cone, witness);
  ensure(normalized.generator(0) == make_vector({1, 0}), "first generator not mapped to e1");
  return {std::move(witness), std::move(normalized)};
}

NormalForm normalize_3d(const SimplicialCone& cone) {
  if (cone.dim() != 3) fail(ErrorCode::kWrongDimension, "normalize_3d needs a 3-dimensional cone");

  // Move u1 to e1 via the inverse of a unimodular completion of u1.
  const IntMatrix completion = complete_to_unimodular(cone.generator(0));
  const IntMatrix to_e1 = inverse_unimodular(completion);
  const IntVector w2 = to_e1 * cone.generator(1);
  const Integer& a2 = w2[1];
  const Integer& a3 = w2[2];

  // Kill the e3-coefficient of the second generator while keeping e1 fixed.
  Integer d;
  mpz_gcd(d.get_mpz_t(), a2.get_mpz_t(), a3.get_mpz_t());
  ensure(d != 0, "first two generators are dependent");
  const Integer col2_e3 = -a3 / d;  // coefficient of e3 in the image of e2
  const Integer col3_e3 = a2 / d;   // coefficient of e3 in the image of e3
  // col2_e2 * col3_e3 - col2_e3 * col3_e2 = 1
  const GcdResult bez = extended_gcd(col3_e3, -col2_e3);
  ensure(bez.g == 1, "e3 coefficients are not coprime");

  IntMatrix shear = IntMatrix::identity(3);
  shear(1, 1) = bez.x;
  shear(2, 1) = col2_e3;
  shear(1, 2) = bez.y;
  shear(2, 2) = col3_e3;

  UnimodularTransform witness(shear * to_e1);
  SimplicialCone normalized = transform(cone, witness);

  const IntVector& v2 = normalized.generator(1);
  const IntVector& v3 = normalized.generator(2);
  ensure(normalized.generator(0) == make_vector({1, 0, 0}), "first generator not mapped to e1");
  ensure(v2[2] == 0 && v2[1] > 0, "second generator not in triangular form");
  ensure(v3[2] != 0, "third generator has zero e3 coefficient");
  return {std::move(witness), std::move(normalized)};
}

UnimodularTransform dual_transform(const UnimodularTransform& a) {
  return UnimodularTransform(inverse_unimodular(a.matrix()).transposed());
}

}  // namespace toric
