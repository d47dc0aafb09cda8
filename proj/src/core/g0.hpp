#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "cone.hpp"

namespace toric {

/// Which structural result produced a G0Report.
enum class G0Source {
  kSurfaceCyclic,       // dim 2: F^1 G_0 is cyclic of order |delta|
  kThreefoldExtension,  // dim 3: F^1 G_0 is an extension of A^1 by A^2
};

const char* to_string(G0Source source);

struct G0Report {
  std::size_t dim = 0;
  std::size_t free_rank = 1;
  Integer delta;
  AbelianGroup a1;
  std::optional<AbelianGroup> a2;       // dims >= 3
  Integer f1_order;
  std::optional<AbelianGroup> f1_exact;  // nullopt: extension not determined
  // nullopt when the enumeration was skipped because the order is too large.
  std::optional<std::vector<AbelianGroup>> extension_candidates;
  G0Source source = G0Source::kSurfaceCyclic;
};

G0Report g0_dim2(const SimplicialCone& cone);
G0Report g0_dim3(const SimplicialCone& cone);

/// Upper bound on the order of an extension that extension_candidates() will
/// enumerate.
inline constexpr long kMaxExtensionOrder = 1'000'000'000'000;

/// All finite abelian E (up to isomorphism) having a subgroup isomorphic to
/// `sub` with quotient isomorphic to `quot`, sorted by invariant factors.
/// Errors: kInfiniteGroup, kTooLarge.
std::vector<AbelianGroup> extension_candidates(const AbelianGroup& sub, const AbelianGroup& quot);

/// Deterministic in (n, bound, seed): entries uniform in [-bound, bound],
/// resampled until the generators are nonzero and independent.
SimplicialCone random_simplicial_cone(std::size_t n, long bound, std::uint64_t seed);

/// Seed of trial `index` under master seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct ConjectureTrial {
  std::size_t index = 0;
  SimplicialCone cone;
  Integer delta;
  AbelianGroup a1;
  AbelianGroup a2;
  bool a1_matches_delta = false;
  bool a2_divides_delta = false;
};

struct ConjectureReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  long bound = 0;
  std::size_t a1_matches_delta = 0;
  std::size_t a2_divides_delta = 0;
  // Trials failing either check, in trial order.
  std::vector<ConjectureTrial> counterexamples;

  /// |A^1| != |delta| is proved impossible in dims 2 and 3.
  bool implementation_bug() const;
};

/// Random-cone harness. Trials run on up to `threads` workers (0 = hardware
/// concurrency); the report does not depend on the thread count.
ConjectureReport conjecture_check(std::size_t n, std::size_t trials, long bound,
                                  std::uint64_t seed, unsigned threads = 0);

/// Same checks on a fixed list of cones of equal dimension.
ConjectureReport conjecture_check(std::span<const SimplicialCone> cones);

struct ReferenceRow {
  std::vector<IntVector> generators;
  long delta;
  std::string a1;
  std::string a2;
};

/// Eight reference threefolds with their known delta, A^1 and A^2.
const std::vector<ReferenceRow>& reference_table();

struct TableRow {
  ReferenceRow expected;
  Integer delta;
  AbelianGroup a1;
  AbelianGroup a2;

  bool delta_matches() const { return delta == expected.delta; }
  bool a1_matches() const { return a1.render() == expected.a1; }
  bool a2_matches() const { return a2.render() == expected.a2; }
  bool matches() const { return delta_matches() && a1_matches() && a2_matches(); }
};

std::vector<TableRow> recompute_reference_table();

}  // namespace toric
