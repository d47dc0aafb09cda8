// toricg0 command-line front end. Talks to the library exclusively through the
// C API in toricg0/toricg0.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "toricg0/toricg0.h"

namespace {

using json = nlohmann::json;

// Exit codes are part of the CLI contract.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitInvalidCone = 3,
  kExitInternal = 4,
  kExitCounterexample = 5,
};

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(toric_status s) {
  switch (s) {
    case TORIC_E_PARSE:
    case TORIC_E_WRONG_COUNT:
    case TORIC_E_ZERO_GENERATOR:
    case TORIC_E_DEPENDENT_GENERATORS:
    case TORIC_E_WRONG_DIMENSION:
    case TORIC_E_NOT_PRIMITIVE:
      return kExitInvalidCone;
    case TORIC_E_INVALID_ARGUMENT:
    case TORIC_E_OUT_OF_RANGE:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

void check(toric_status s) {
  if (s != TORIC_OK)
    throw Failure{exit_code_for(s), std::string(toric_status_name(s)) + ": " + toric_last_error()};
}

struct ConeDeleter {
  void operator()(toric_cone* c) const { toric_cone_free(c); }
};
struct MatrixDeleter {
  void operator()(toric_matrix* m) const { toric_matrix_free(m); }
};
using ConeHandle = std::unique_ptr<toric_cone, ConeDeleter>;
using MatrixHandle = std::unique_ptr<toric_matrix, MatrixDeleter>;

// Takes ownership of a C string returned by the library.
std::string take(char* s) {
  std::string out(s);
  toric_string_free(s);
  return out;
}

template <typename Call>
json call_json(Call&& call) {
  char* out = nullptr;
  check(call(&out));
  return json::parse(take(out));
}

// A CONE / MATRIX argument naming an existing file is read from disk.
std::string load_argument(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ConeHandle open_cone(const std::string& arg) {
  toric_cone* raw = nullptr;
  check(toric_cone_parse(load_argument(arg).c_str(), &raw));
  return ConeHandle(raw);
}

// ---- text rendering -------------------------------------------------------

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], display_width(row[i]));
      }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::string line;
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        line += rows_[r][i];
        if (i + 1 < rows_[r].size())
          line += std::string(width[i] - display_width(rows_[r][i]) + 2, ' ');
      }
      os << line << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        os << std::string(total - 2, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_fields(std::ostream& os,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
  std::size_t w = 0;
  for (const auto& f : fields) w = std::max(w, display_width(f.first));
  for (const auto& [k, v] : fields)
    os << k << std::string(w - display_width(k) + 2, ' ') << v << '\n';
}

std::string vec_text(const json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get<std::string>();
  return out + ")";
}

std::string vecs_text(const json& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + vec_text(v);
  return out;
}

std::string matrix_text(const json& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? " " : "") + vec_text(m[i]);
  return out + "]";
}

std::string group_text(const json& g) {
  if (g.is_null()) return "-";
  return g.at("rendered").get<std::string>();
}

std::string order_text(const json& g) {
  const json& order = g.at("order");
  return order.is_null() ? "infinite" : order.get<std::string>();
}

void render_analyze(const json& r) {
  print_fields(std::cout, {{"dimension", std::to_string(r.at("dim").get<std::size_t>())},
                           {"valid", "yes"},
                           {"delta", r.at("delta").get<std::string>()},
                           {"generators", vecs_text(r.at("generators"))},
                           {"dual generators", vecs_text(r.at("dual_generators"))}});
}

void render_normalize(const json& r) {
  std::string form;
  for (const auto& [k, v] : r.at("form").items())
    form += (form.empty() ? "" : " ") + k + "=" + v.get<std::string>();
  print_fields(std::cout, {{"transform", matrix_text(r.at("transform"))},
                           {"dual transform", matrix_text(r.at("dual_transform"))},
                           {"normalized generators", vecs_text(r.at("normalized_generators"))},
                           {"form", form}});
}

void render_chow(const json& r) {
  std::cout << "delta = " << r.at("delta").get<std::string>() << "\n";
  TextTable t({"codim", "group", "order", "generators", "relations rank"});
  for (const auto& c : r.at("chow"))
    t.add({"A^" + std::to_string(c.at("codim").get<std::size_t>()), group_text(c.at("group")),
           order_text(c.at("group")), std::to_string(c.at("generators_count").get<std::size_t>()),
           std::to_string(c.at("relations_rank").get<std::size_t>())});
  t.print(std::cout);
}

void render_g0(const json& r) {
  if (r.contains("note")) {
    render_chow(r);
    std::cout << "note: " << r.at("note").get<std::string>() << "\n";
    return;
  }
  const json& exact = r.at("f1_exact");
  std::string candidates = "not enumerated (order too large)";
  if (!r.at("extension_candidates").is_null()) {
    candidates.clear();
    for (const auto& g : r.at("extension_candidates"))
      candidates += (candidates.empty() ? "" : ", ") + group_text(g);
  }
  print_fields(std::cout,
               {{"dimension", std::to_string(r.at("dim").get<std::size_t>())},
                {"delta", r.at("delta").get<std::string>()},
                {"G0", exact.is_string() ? "Z ⊕ F1G0" : "Z ⊕ " + group_text(exact)},
                {"A1", group_text(r.at("a1"))},
                {"A2", group_text(r.at("a2"))},
                {"|F1G0|", r.at("f1_order").get<std::string>()},
                {"F1G0", exact.is_string() ? exact.get<std::string>() : group_text(exact)},
                {"extension candidates", candidates},
                {"source", r.at("source").get<std::string>()}});
}

void render_table(const json& r) {
  TextTable t({"generators", "delta", "expected", "A1", "expected", "A2", "expected", "match"});
  for (const auto& row : r.at("rows"))
    t.add({vecs_text(row.at("generators")), row.at("delta").get<std::string>(),
           row.at("expected_delta").get<std::string>(), row.at("a1").get<std::string>(),
           row.at("expected_a1").get<std::string>(), row.at("a2").get<std::string>(),
           row.at("expected_a2").get<std::string>(), row.at("match").get<bool>() ? "yes" : "NO"});
  t.print(std::cout);
  std::cout << r.at("matched").get<std::size_t>() << "/" << r.at("total").get<std::size_t>()
            << " rows match\n";
}

void render_conjecture(const json& r) {
  const auto trials = r.at("trials").get<std::size_t>();
  auto ratio = [&](const char* key) {
    return std::to_string(r.at(key).get<std::size_t>()) + "/" + std::to_string(trials);
  };
  print_fields(std::cout, {{"dimension", std::to_string(r.at("dim").get<std::size_t>())},
                           {"trials", std::to_string(trials)},
                           {"bound", r.at("bound").get<std::string>()},
                           {"seed", r.at("seed").get<std::string>()},
                           {"|A1| = |delta|", ratio("a1_matches_delta")},
                           {"|A2| divides delta", ratio("a2_divides_delta")},
                           {"counterexamples", std::to_string(r.at("counterexamples").size())}});
  if (r.at("counterexamples").empty()) return;
  TextTable t({"trial", "generators", "delta", "A1", "A2"});
  for (const auto& c : r.at("counterexamples"))
    t.add({std::to_string(c.at("index").get<std::size_t>()), vecs_text(c.at("generators")),
           c.at("delta").get<std::string>(), group_text(c.at("a1")), group_text(c.at("a2"))});
  t.print(std::cout);
  if (r.at("implementation_bug").get<bool>())
    std::cout << "|A1| != |delta| in dimension 2 or 3 is impossible: implementation bug\n";
}

void render_snf(const json& r) {
  std::string factors;
  for (const auto& f : r.at("invariant_factors"))
    factors += (factors.empty() ? "" : " ") + f.get<std::string>();
  print_fields(std::cout, {{"A", matrix_text(r.at("input"))},
                           {"U", matrix_text(r.at("u"))},
                           {"D", matrix_text(r.at("d"))},
                           {"V", matrix_text(r.at("v"))},
                           {"invariant factors", factors},
                           {"rank", std::to_string(r.at("rank").get<std::size_t>())}});
}

// ---- dispatch -------------------------------------------------------------

struct Output {
  std::string command;
  json inputs;
  json results;
  void (*render)(const json&);
};

void emit(const Output& o, bool as_json) {
  if (as_json) {
    json doc = {{"command", o.command},
                {"inputs", o.inputs},
                {"results", o.results},
                {"version", toric_version()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    o.render(o.results);
  }
}

json cone_inputs(const ConeHandle& cone) {
  return call_json([&](char** out) { return toric_cone_inputs_json(cone.get(), out); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck and Chow groups of affine simplicial toric varieties"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a machine-readable JSON document");

  std::string cone_arg;
  std::string matrix_arg;
  int codim = -1;
  std::size_t dim = 3, trials = 100;
  std::int64_t bound = 10;
  std::uint64_t seed = 1;
  unsigned threads = 0;

  const char* cone_help = "Cone as \"x1,y1;x2,y2\" or a JSON file with a \"generators\" array";
  auto* analyze = app.add_subcommand("analyze", "Validate a cone and print delta and its dual");
  analyze->add_option("CONE", cone_arg, cone_help)->required();
  auto* normalize = app.add_subcommand("normalize", "Unimodular normal form (dimensions 2 and 3)");
  normalize->add_option("CONE", cone_arg, cone_help)->required();
  auto* chow = app.add_subcommand("chow", "Chow groups A^k");
  chow->add_option("CONE", cone_arg, cone_help)->required();
  chow->add_option("--codim", codim, "Only this codimension")->check(CLI::NonNegativeNumber);
  auto* g0 = app.add_subcommand("g0", "Structure of G_0: delta, A^1, A^2, F^1 G_0");
  g0->add_option("CONE", cone_arg, cone_help)->required();
  auto* table = app.add_subcommand("table", "Recompute the eight reference threefolds");
  auto* conjecture =
      app.add_subcommand("conjecture", "Randomized |A^1| = |delta|, |A^2| | delta search");
  conjecture->add_option("--dim", dim, "Dimension")->check(CLI::Range(2, 16));
  conjecture->add_option("--trials", trials, "Number of random cones");
  conjecture->add_option("--bound", bound, "Entry bound")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  conjecture->add_option("--seed", seed, "Master seed");
  conjecture->add_option("--threads", threads, "Worker threads (0 = all cores)");
  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  snf->add_option("MATRIX", matrix_arg,
                  "Matrix as \"a,b;c,d\" or a JSON file with a \"matrix\" array")
      ->required();
  for (auto* sub : app.get_subcommands({}))
    sub->add_flag("--json", as_json, "Emit a machine-readable JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output out;
    int code = kExitOk;
    if (analyze->parsed()) {
      ConeHandle cone = open_cone(cone_arg);
      out = {"analyze", cone_inputs(cone),
             call_json([&](char** o) { return toric_analyze_json(cone.get(), o); }),
             render_analyze};
    } else if (normalize->parsed()) {
      ConeHandle cone = open_cone(cone_arg);
      out = {"normalize", cone_inputs(cone),
             call_json([&](char** o) { return toric_normalize_json(cone.get(), o); }),
             render_normalize};
    } else if (chow->parsed()) {
      ConeHandle cone = open_cone(cone_arg);
      json inputs = cone_inputs(cone);
      if (codim >= 0) inputs["codim"] = codim;
      out = {"chow", inputs,
             call_json([&](char** o) { return toric_chow_json(cone.get(), codim, o); }),
             render_chow};
    } else if (g0->parsed()) {
      ConeHandle cone = open_cone(cone_arg);
      out = {"g0", cone_inputs(cone),
             call_json([&](char** o) { return toric_g0_json(cone.get(), o); }), render_g0};
    } else if (table->parsed()) {
      int all_match = 0;
      out = {"table", json::object(),
             call_json([&](char** o) { return toric_table_json(o, &all_match); }), render_table};
      if (!all_match) code = kExitMismatch;
    } else if (conjecture->parsed()) {
      int bug = 0;
      json inputs = {{"dim", dim},
                     {"trials", trials},
                     {"bound", std::to_string(bound)},
                     {"seed", std::to_string(seed)}};
      out = {"conjecture", inputs, call_json([&](char** o) {
               return toric_conjecture_json(dim, trials, bound, seed, threads, o, &bug);
             }),
             render_conjecture};
      if (bug) code = kExitCounterexample;
    } else if (snf->parsed()) {
      toric_matrix* raw = nullptr;
      check(toric_matrix_parse(load_argument(matrix_arg).c_str(), &raw));
      MatrixHandle m(raw);
      json results = call_json([&](char** o) { return toric_snf_json(m.get(), o); });
      out = {"snf", {{"matrix", results.at("input")}}, results, render_snf};
    }
    emit(out, as_json);
    return code;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
