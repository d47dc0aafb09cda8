#pragma once

#include <json.hpp>
#include <optional>

#include "abelian_group.hpp"
#include "chow.hpp"
#include "cone.hpp"
#include "cone_spec.hpp"
#include "exact_linalg.hpp"
#include "g0.hpp"

// Structured renderings of every result type. Arbitrary-size integers are
// emitted as decimal strings; counts and indices as JSON numbers.
namespace toric::report {

using json = nlohmann::json;

json integer(const Integer& x);
json vector(std::span<const Integer> v);
json vectors(std::span<const IntVector> vs);
json matrix(const IntMatrix& m);
json group(const AbelianGroup& g);

json cone_inputs(const ConeSpec& spec);
json analyze(const SimplicialCone& cone);
json normal_form(const SimplicialCone& cone);
json chow(const SimplicialCone& cone, std::optional<std::size_t> codim);
json g0(const SimplicialCone& cone);
json g0(const G0Report& r);
json table(const std::vector<TableRow>& rows);
json conjecture(const ConjectureReport& r);
json smith(const IntMatrix& input, const SmithDecomposition& snf);

}  // namespace toric::report
