#include "chow.hpp"

#include <string>
#include <vector>

#include "error.hpp"
#include "exact_linalg.hpp"

namespace toric {

IntMatrix divisor_map(const SimplicialCone& cone) {
  return IntMatrix::from_rows(cone.generators(), cone.dim());
}

AbelianGroup class_group(const SimplicialCone& cone) { return cokernel(divisor_map(cone)); }

namespace {

// Coordinates of Z^n adapted to the saturated span N_tau of a face: the last
// n - dim(tau) coordinates of change_of_basis * x give the image of x in
// Z^n / N_tau.
struct QuotientLattice {
  IntMatrix change_of_basis;
  std::size_t face_dim = 0;

  IntVector project(std::span<const Integer> x) const {
    const IntVector y = change_of_basis * x;
    return IntVector(y.begin() + static_cast<std::ptrdiff_t>(face_dim), y.end());
  }
};

QuotientLattice quotient_by_face(const SimplicialCone& cone, const Face& tau) {
  const std::size_t n = cone.dim();
  std::vector<IntVector> gens;
  for (auto i : tau.indices) gens.push_back(cone.generator(i));
  // U * (generators as columns) * V = D puts the span onto the first dim(tau)
  // coordinate axes, so its saturation is spanned by e_1 .. e_dim(tau).
  SmithDecomposition snf = smith_normal_form(IntMatrix::from_columns(gens, n));
  ensure(snf.rank() == tau.dim(), "face generators are dependent");
  return {std::move(snf.u), tau.dim()};
}

// Lattice basis of tau-perp in M = Z^n, as columns.
IntMatrix perp_basis(const SimplicialCone& cone, const Face& tau) {
  std::vector<IntVector> rows;
  for (auto i : tau.indices) rows.push_back(cone.generator(i));
  return kernel_basis(IntMatrix::from_rows(rows, cone.dim()));
}

}  // namespace

IntMatrix chow_relation_matrix(const SimplicialCone& cone, std::size_t k) {
  const std::size_t n = cone.dim();
  if (k > n)
    fail(ErrorCode::kOutOfRange,
         "codimension " + std::to_string(k) + " out of range 0.." + std::to_string(n));

  const std::vector<Face> cycle_faces = faces(cone, k);
  if (k == 0) return IntMatrix(cycle_faces.size(), 0);

  const std::vector<Face> relation_faces = faces(cone, k - 1);
  std::vector<IntVector> columns;
  for (const Face& tau : relation_faces) {
    const QuotientLattice quotient = quotient_by_face(cone, tau);
    const IntMatrix characters = perp_basis(cone, tau);

    for (std::size_t c = 0; c < characters.cols(); ++c) {
      const IntVector m = characters.column(c);
      IntVector column(cycle_faces.size());
      for (std::size_t row = 0; row < cycle_faces.size(); ++row) {
        const Face& sigma = cycle_faces[row];
        bool tau_in_sigma = true;
        for (auto i : tau.indices) tau_in_sigma = tau_in_sigma && sigma.contains(i);
        if (!tau_in_sigma) continue;

        std::size_t extra = n;
        for (auto i : sigma.indices)
          if (!tau.contains(i)) extra = i;
        const IntVector& u = cone.generator(extra);
        // <m, n_{sigma,tau}> where n_{sigma,tau} is the primitive generator of
        // the image ray of sigma in N / N_tau.
        const Integer c_u = content(quotient.project(u));
        ensure(c_u != 0, "extra generator lies in the face span");
        const Integer pairing = dot(m, u);
        ensure(mpz_divisible_p(pairing.get_mpz_t(), c_u.get_mpz_t()) != 0,
               "character pairing is not divisible by the lattice index");
        mpz_divexact(column[row].get_mpz_t(), pairing.get_mpz_t(), c_u.get_mpz_t());
      }
      columns.push_back(std::move(column));
    }
  }
  return IntMatrix::from_columns(columns, cycle_faces.size());
}

ChowReport chow_group(const SimplicialCone& cone, std::size_t k) {
  const IntMatrix relations = chow_relation_matrix(cone, k);
  ChowReport report;
  report.codim = k;
  report.group = cokernel(relations);
  report.generators_count = relations.rows();
  report.relations_rank = rank(relations);
  if (k == 0)
    ensure(report.group == AbelianGroup::free(1), "A^0 is not Z");
  else
    ensure(report.group.is_finite(), "positive-codimension Chow group is infinite");
  return report;
}

}  // namespace toric
