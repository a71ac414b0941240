#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "latforge/catalog.hpp"
#include "latforge/claims.hpp"
#include "latforge/io.hpp"
#include "latforge/term.hpp"
#include "latforge/transfer.hpp"

namespace {

using namespace latforge;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::variant<FiniteLattice, PartialLattice> load_input(const std::string& input) {
  std::ifstream file(input);
  if (file.good()) {
    std::stringstream buf;
    buf << file.rdbuf();
    return from_json(buf.str());
  }
  return catalog_by_name(input);
}

std::string witness_names(const FiniteLattice& l, const std::vector<ElementId>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += l.name(w[i]);
  }
  return s + ")";
}

int run_check(const std::string& input, bool modular, bool distributive, bool semidistributive,
              bool whitman, bool relcomp, const std::vector<std::string>& identities,
              const std::vector<std::string>& quasis) {
  auto entry = load_input(input);
  bool all_ok = true;

  if (std::holds_alternative<PartialLattice>(entry)) {
    const PartialLattice& p = std::get<PartialLattice>(entry);
    ValidationReport valid = validate_partial(p);
    std::cout << "valid: " << (valid.ok ? "yes" : "no") << "\n";
    all_ok = all_ok && valid.ok;
    if (whitman) {
      WhitmanPartialReport rep = whitman_partial(p);
      std::cout << "whitman: " << (rep.ok ? "yes" : "no");
      if (!rep.ok) std::cout << "  (meet #" << rep.meet_index << " vs join #" << rep.join_index << ")";
      std::cout << "\n";
      all_ok = all_ok && rep.ok;
    }
    if (modular || distributive || semidistributive || relcomp || !identities.empty() || !quasis.empty())
      throw BadParamError("BadParam: only --whitman applies to a partial lattice");
    return all_ok ? kExitOk : kExitFailed;
  }

  const FiniteLattice& l = std::get<FiniteLattice>(entry);
  auto report = [&](const char* label, const CheckResult& r) {
    std::cout << label << ": " << (r.ok ? "yes" : "no");
    if (!r.ok) std::cout << "  counterexample " << witness_names(l, r.witness);
    std::cout << "\n";
    all_ok = all_ok && r.ok;
  };
  if (modular) report("modular", is_modular(l));
  if (distributive) report("distributive", is_distributive(l));
  if (semidistributive) report("semidistributive", is_semidistributive(l));
  if (whitman) report("whitman", satisfies_whitman(l));
  if (relcomp) report("relatively-complemented", is_relatively_complemented(l));
  for (const std::string& text : identities) {
    IdentityReport rep = satisfies_identity(l, parse_atom(text));
    std::cout << "identity " << text << ": " << (rep.holds ? "yes" : "no");
    if (!rep.holds) {
      std::cout << "  counterexample {";
      for (std::size_t i = 0; i < rep.counterexample.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << rep.counterexample[i].first << "=" << l.name(rep.counterexample[i].second);
      }
      std::cout << "}";
    }
    std::cout << "\n";
    all_ok = all_ok && rep.holds;
  }
  for (const std::string& text : quasis) {
    IdentityReport rep = satisfies_quasi_identity(l, parse_quasi_identity(text));
    std::cout << "quasi-identity: " << (rep.holds ? "yes" : "no") << "\n";
    all_ok = all_ok && rep.holds;
  }
  return all_ok ? kExitOk : kExitFailed;
}

int run_verify(const std::optional<std::string>& claim, claims::Options opts, bool parallel,
               const std::optional<std::string>& json_path) {
  std::vector<claims::Result> results;
  if (claim) {
    results.push_back(claims::run(*claim, opts));
  } else {
    results = claims::run_all(opts, parallel);
  }
  bool all_ok = true;
  for (const claims::Result& r : results) {
    std::cout << r.id << ": " << claims::status_name(r.status);
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "  (" << static_cast<long>(r.millis) << " ms)\n";
    if (!r.witness.empty()) std::cout << "  witness: " << r.witness << "\n";
    all_ok = all_ok && r.status != claims::Status::Fail;
  }
  if (json_path) {
    nlohmann::json j;
    j["seed"] = opts.seed;
    j["cap"] = opts.cap;
    j["claims"] = nlohmann::json::array();
    for (const claims::Result& r : results) {
      nlohmann::json entry = {{"id", r.id},
                              {"status", claims::status_name(r.status)},
                              {"runtime_ms", r.millis},
                              {"detail", r.detail}};
      entry["witness"] =
          r.witness.empty() ? nlohmann::json() : nlohmann::json::parse(r.witness, nullptr, false);
      j["claims"].push_back(std::move(entry));
    }
    std::ofstream out(*json_path);
    out << j.dump(2) << "\n";
  }
  return all_ok ? kExitOk : kExitFailed;
}

int run_export(const std::string& input, bool dot, bool json, const std::optional<std::string>& out_path) {
  auto entry = load_input(input);
  std::string payload;
  if (dot) {
    if (!std::holds_alternative<FiniteLattice>(entry))
      throw BadParamError("BadParam: DOT export needs a total lattice");
    payload = to_dot(std::get<FiniteLattice>(entry));
  } else if (json) {
    payload = std::holds_alternative<FiniteLattice>(entry) ? to_json(std::get<FiniteLattice>(entry))
                                                           : to_json(std::get<PartialLattice>(entry));
  } else {
    throw BadParamError("BadParam: choose --dot or --json");
  }
  if (out_path) {
    std::ofstream out(*out_path);
    out << payload << "\n";
  } else {
    std::cout << payload << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice computation toolkit"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run property checkers on a catalog name or JSON file");
  std::string check_input;
  bool f_modular = false, f_distributive = false, f_semidistributive = false, f_whitman = false,
       f_relcomp = false;
  std::vector<std::string> f_identities, f_quasis;
  check->add_option("input", check_input, "catalog name (e.g. M33, B3, P_4) or JSON file")->required();
  check->add_flag("--modular", f_modular);
  check->add_flag("--distributive", f_distributive);
  check->add_flag("--semidistributive", f_semidistributive);
  check->add_flag("--whitman", f_whitman);
  check->add_flag("--relatively-complemented", f_relcomp);
  check->add_option("--identity", f_identities, "s-expression (leq t1 t2) or (eq t1 t2)");
  check->add_option("--quasi", f_quasis, "s-expression (quasi (vars ...) (premises ...) (conclusion ...))");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the pinned claim registry");
  std::optional<std::string> v_claim;
  claims::Options v_opts;
  bool v_parallel = false;
  std::optional<std::string> v_json;
  verify->add_option("--claim", v_claim, "run a single claim id");
  verify->add_option("--cap", v_opts.cap, "closure element cap");
  verify->add_option("--seed", v_opts.seed, "seed for the randomized suites");
  verify->add_flag("--parallel", v_parallel, "run independent claims concurrently");
  verify->add_option("--json-report", v_json, "write a machine-readable report");

  // export
  auto* exp = app.add_subcommand("export", "export a lattice as DOT or normalized JSON");
  std::string e_input;
  bool e_dot = false, e_json = false;
  std::optional<std::string> e_out;
  exp->add_option("input", e_input, "catalog name or JSON file")->required();
  exp->add_flag("--dot", e_dot);
  exp->add_flag("--json", e_json);
  exp->add_option("-o,--output", e_out, "output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env_cap = std::getenv("LATFORGE_CAP")) {
    if (!verify->count("--cap")) v_opts.cap = std::strtoull(env_cap, nullptr, 10);
  }

  try {
    if (*check)
      return run_check(check_input, f_modular, f_distributive, f_semidistributive, f_whitman, f_relcomp,
                       f_identities, f_quasis);
    if (*verify) return run_verify(v_claim, v_opts, v_parallel, v_json);
    if (*exp) return run_export(e_input, e_dot, e_json, e_out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
