#include "toricg0/toricg0.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "abelian_group.hpp"
#include "chow.hpp"
#include "cone.hpp"
#include "cone_spec.hpp"
#include "error.hpp"
#include "g0.hpp"
#include "report_json.hpp"

struct toric_cone {
  toric::ConeSpec spec;
  toric::SimplicialCone cone;
};

struct toric_group {
  toric::AbelianGroup group;
};

struct toric_matrix {
  toric::IntMatrix matrix;
};

namespace {

thread_local std::string last_error;

toric_status status_of(toric::ErrorCode code) {
  using toric::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return TORIC_E_INVALID_ARGUMENT;
    case ErrorCode::kParse: return TORIC_E_PARSE;
    case ErrorCode::kWrongCount: return TORIC_E_WRONG_COUNT;
    case ErrorCode::kZeroGenerator: return TORIC_E_ZERO_GENERATOR;
    case ErrorCode::kDependentGenerators: return TORIC_E_DEPENDENT_GENERATORS;
    case ErrorCode::kWrongDimension: return TORIC_E_WRONG_DIMENSION;
    case ErrorCode::kOutOfRange: return TORIC_E_OUT_OF_RANGE;
    case ErrorCode::kNotUnimodular: return TORIC_E_NOT_UNIMODULAR;
    case ErrorCode::kNotPrimitive: return TORIC_E_NOT_PRIMITIVE;
    case ErrorCode::kInfiniteGroup: return TORIC_E_INFINITE_GROUP;
    case ErrorCode::kTooLarge: return TORIC_E_TOO_LARGE;
    case ErrorCode::kInvariantViolation: return TORIC_E_INVARIANT_VIOLATION;
  }
  return TORIC_E_INTERNAL;
}

toric_status set_error(toric_status status, const std::string& what) {
  last_error = what;
  return status;
}

// Runs body() and converts any exception into a status code.
template <typename Body>
toric_status guarded(Body&& body) {
  try {
    body();
    return TORIC_OK;
  } catch (const toric::ToricError& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(TORIC_E_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(TORIC_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(TORIC_E_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool null_arg(const void* p, const char* name, toric_status& status) {
  if (p) return false;
  status = set_error(TORIC_E_INVALID_ARGUMENT, std::string(name) + " is null");
  return true;
}

// Rejects a null out-parameter and otherwise clears it, so callers never see a
// stale value after a failed call.
template <typename T>
bool null_out(T* out, toric_status& status) {
  if (null_arg(out, "out", status)) return true;
  *out = T{};
  return false;
}

template <typename Make>
toric_status emit_json(char** out, Make&& make) {
  return guarded([&] { *out = duplicate(make().dump()); });
}

}  // namespace

extern "C" {

const char* toric_version(void) { return "toricg0 0.1.0"; }

const char* toric_status_name(toric_status status) {
  switch (status) {
    case TORIC_OK: return "ok";
    case TORIC_E_INVALID_ARGUMENT: return "invalid argument";
    case TORIC_E_PARSE: return "parse error";
    case TORIC_E_WRONG_COUNT: return "wrong generator count";
    case TORIC_E_ZERO_GENERATOR: return "zero generator";
    case TORIC_E_DEPENDENT_GENERATORS: return "dependent generators";
    case TORIC_E_WRONG_DIMENSION: return "wrong dimension";
    case TORIC_E_OUT_OF_RANGE: return "out of range";
    case TORIC_E_NOT_UNIMODULAR: return "not unimodular";
    case TORIC_E_NOT_PRIMITIVE: return "not primitive";
    case TORIC_E_INFINITE_GROUP: return "infinite group";
    case TORIC_E_TOO_LARGE: return "too large";
    case TORIC_E_INVARIANT_VIOLATION: return "internal invariant violation";
    case TORIC_E_NO_MEMORY: return "out of memory";
    case TORIC_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* toric_last_error(void) { return last_error.c_str(); }

void toric_string_free(char* s) { std::free(s); }

toric_status toric_cone_parse(const char* text, toric_cone** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(text, "text", s)) return s;
  return guarded([&] {
    toric::ConeSpec spec = toric::parse_cone(text);
    toric::SimplicialCone cone = toric::to_cone(spec);
    *out = new toric_cone{std::move(spec), std::move(cone)};
  });
}

toric_status toric_cone_create(size_t n, const int64_t* entries, toric_cone** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(entries, "entries", s)) return s;
  return guarded([&] {
    toric::ConeSpec spec;
    for (size_t i = 0; i < n; ++i) {
      toric::IntVector g;
      for (size_t j = 0; j < n; ++j) g.emplace_back(std::to_string(entries[i * n + j]), 10);
      spec.generators.push_back(std::move(g));
    }
    toric::SimplicialCone cone = toric::to_cone(spec);
    *out = new toric_cone{std::move(spec), std::move(cone)};
  });
}

void toric_cone_free(toric_cone* cone) { delete cone; }

toric_status toric_cone_dim(const toric_cone* cone, size_t* out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  *out = cone->cone.dim();
  return TORIC_OK;
}

toric_status toric_cone_delta(const toric_cone* cone, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return guarded([&] { *out = duplicate(toric::delta(cone->cone).get_str()); });
}

toric_status toric_cone_inputs_json(const toric_cone* cone, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return emit_json(out, [&] { return toric::report::cone_inputs(cone->spec); });
}

toric_status toric_cone_class_group(const toric_cone* cone, toric_group** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return guarded([&] { *out = new toric_group{toric::class_group(cone->cone)}; });
}

toric_status toric_cone_chow_group(const toric_cone* cone, size_t codim, toric_group** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return guarded([&] { *out = new toric_group{toric::chow_group(cone->cone, codim).group}; });
}

void toric_group_free(toric_group* group) { delete group; }

toric_status toric_group_free_rank(const toric_group* group, size_t* out) {
  toric_status s;
  if (null_out(out, s) || null_arg(group, "group", s)) return s;
  *out = group->group.free_rank();
  return TORIC_OK;
}

toric_status toric_group_torsion_count(const toric_group* group, size_t* out) {
  toric_status s;
  if (null_out(out, s) || null_arg(group, "group", s)) return s;
  *out = group->group.torsion().size();
  return TORIC_OK;
}

toric_status toric_group_torsion_at(const toric_group* group, size_t index, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(group, "group", s)) return s;
  if (index >= group->group.torsion().size())
    return set_error(TORIC_E_OUT_OF_RANGE, "torsion index out of range");
  return guarded([&] { *out = duplicate(group->group.torsion()[index].get_str()); });
}

toric_status toric_group_order(const toric_group* group, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(group, "group", s)) return s;
  const auto order = group->group.order();
  if (!order) return set_error(TORIC_E_INFINITE_GROUP, "group is infinite");
  return guarded([&] { *out = duplicate(order->get_str()); });
}

toric_status toric_group_render(const toric_group* group, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(group, "group", s)) return s;
  return guarded([&] { *out = duplicate(group->group.render()); });
}

toric_status toric_matrix_parse(const char* text, toric_matrix** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(text, "text", s)) return s;
  return guarded([&] { *out = new toric_matrix{toric::parse_matrix(text)}; });
}

void toric_matrix_free(toric_matrix* matrix) { delete matrix; }

toric_status toric_analyze_json(const toric_cone* cone, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return emit_json(out, [&] { return toric::report::analyze(cone->cone); });
}

toric_status toric_normalize_json(const toric_cone* cone, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return emit_json(out, [&] { return toric::report::normal_form(cone->cone); });
}

toric_status toric_chow_json(const toric_cone* cone, int codim, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return emit_json(out, [&] {
    std::optional<std::size_t> k;
    if (codim >= 0) k = static_cast<std::size_t>(codim);
    return toric::report::chow(cone->cone, k);
  });
}

toric_status toric_g0_json(const toric_cone* cone, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(cone, "cone", s)) return s;
  return emit_json(out, [&] { return toric::report::g0(cone->cone); });
}

toric_status toric_snf_json(const toric_matrix* matrix, char** out) {
  toric_status s;
  if (null_out(out, s) || null_arg(matrix, "matrix", s)) return s;
  return emit_json(out, [&] {
    return toric::report::smith(matrix->matrix, toric::smith_normal_form(matrix->matrix));
  });
}

toric_status toric_table_json(char** out, int* all_match) {
  toric_status s;
  if (null_out(out, s) || null_arg(all_match, "all_match", s)) return s;
  return emit_json(out, [&] {
    const auto rows = toric::recompute_reference_table();
    *all_match = 1;
    for (const auto& r : rows)
      if (!r.matches()) *all_match = 0;
    return toric::report::table(rows);
  });
}

toric_status toric_conjecture_json(size_t dim, size_t trials, int64_t bound, uint64_t seed,
                                   unsigned threads, char** out, int* implementation_bug) {
  toric_status s;
  if (null_out(out, s) || null_arg(implementation_bug, "implementation_bug", s)) return s;
  return emit_json(out, [&] {
    const auto report =
        toric::conjecture_check(dim, trials, static_cast<long>(bound), seed, threads);
    *implementation_bug = report.implementation_bug() ? 1 : 0;
    return toric::report::conjecture(report);
  });
}

}  // extern "C"
