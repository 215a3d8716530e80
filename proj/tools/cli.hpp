#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kschur/cache.hpp"
#include "kschur/io.hpp"
#include "kschur/render.hpp"
#include "kschur/verify.hpp"

namespace kschur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline Partition core_arg(const std::string& s, int k, const char* what) {
  Partition p = parse_partition(s);
  if (!is_p_core(p, k + 1)) throw UsageError(std::string(what) + " is not a (k+1)-core");
  return p;
}

inline KTableau read_tableau(const std::string& inline_json, const std::string& path) {
  std::string text = inline_json;
  if (!path.empty()) {
    std::ifstream in;
    std::istream* src = &std::cin;
    if (path != "-") {
      in.open(path);
      if (!in) throw UsageError("cannot read " + path);
      src = &in;
    }
    text.assign(std::istreambuf_iterator<char>(*src), {});
  }
  try {
    return tableau_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid tableau JSON: ") + e.what());
  }
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-Schur function and k-tableau computations", "kschur"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(30);

  int k = 0;
  const auto add_k = [&k](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--k", k, "Bound k (cores are (k+1)-cores)")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };

  // core
  auto* core = app.add_subcommand("core", "Maps between k-bounded partitions and (k+1)-cores");
  bool to_core = false, from_core = false, kconj = false;
  std::string partition;
  add_k(core);
  core->add_flag("--to-core", to_core, "k-bounded partition -> (k+1)-core");
  core->add_flag("--from-core", from_core, "(k+1)-core -> k-bounded partition");
  core->add_flag("--kconjugate", kconj, "k-conjugate of a k-bounded partition");
  core->add_option("--partition", partition, "Comma-separated parts, e.g. 4,3,2")->required();

  // tab
  auto* tab = app.add_subcommand("tab", "Enumerates k-tableaux");
  std::string weight, shape, shape_core, inner;
  bool transposed = false, count_only = false, render_out = false;
  add_k(tab);
  tab->add_option("--weight", weight, "k-weight, comma-separated")->required();
  auto* shape_opt = tab->add_option("--shape", shape, "Outer k-bounded partition");
  auto* core_opt = tab->add_option("--shape-core", shape_core, "Outer (k+1)-core");
  shape_opt->excludes(core_opt);
  tab->add_option("--inner", inner, "Inner shape, in the same form as the outer shape");
  tab->add_flag("--transposed", transposed, "Rows strictly, columns weakly increasing");
  tab->add_flag("--count", count_only, "Print only the number of tableaux");
  tab->add_flag("--render", render_out, "Print ASCII diagrams instead of JSON");

  // kostka
  auto* kostka_cmd = app.add_subcommand("kostka", "Prints the k-Kostka matrix of one degree");
  int degree = 0;
  bool inverse = false;
  add_k(kostka_cmd);
  kostka_cmd->add_option("--degree", degree, "Degree")->required()->check(CLI::NonNegativeNumber);
  kostka_cmd->add_flag("--inverse", inverse, "Print the inverse matrix instead");

  // expand
  auto* expand = app.add_subcommand("expand", "Expands a basis element in another basis");
  std::string lambda, basis = "schur", from = "kschur";
  add_k(expand, false);
  expand->add_option("--lambda", lambda, "Index partition")->required();
  expand->add_option("--basis", basis, "Target basis")->check(CLI::IsMember({"h", "e", "schur", "kschur"}));
  expand->add_option("--from", from, "Source basis")->check(CLI::IsMember({"h", "e", "schur", "kschur"}));

  // pieri
  auto* pieri = app.add_subcommand("pieri", "h_l or e_l times a k-Schur function");
  std::string mode = "h";
  int ell = 0;
  add_k(pieri);
  pieri->add_option("--mode", mode, "h or e")->check(CLI::IsMember({"h", "e"}));
  pieri->add_option("--ell", ell, "Degree l")->required()->check(CLI::NonNegativeNumber);
  pieri->add_option("--lambda", lambda, "Index partition")->required();

  // omega
  auto* omega_cmd = app.add_subcommand("omega", "Applies the omega involution to a basis element");
  std::string omega_basis = "kschur";
  add_k(omega_cmd, false);
  omega_cmd->add_option("--lambda", lambda, "Index partition")->required();
  omega_cmd->add_option("--basis", omega_basis, "Basis of the element")
      ->check(CLI::IsMember({"h", "e", "schur", "kschur"}));

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "Applies the weight-swapping involution to a k-tableau");
  int a = 0;
  bool trace = false;
  std::string tableau_json, input;
  tau_cmd->add_option("--a", a, "Swap the weights of letters a and a+1")->required();
  auto* tj = tau_cmd->add_option("--tableau", tableau_json, "Tableau JSON");
  auto* ti = tau_cmd->add_option("--input", input, "File holding the tableau JSON ('-' for stdin)");
  tj->excludes(ti);
  tau_cmd->add_flag("--trace", trace, "Print the tableau after every stage");

  // verify
  auto* verify = app.add_subcommand("verify", "Runs property sweeps");
  std::string suite = "all";
  int max_degree = 5;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--k", k, "Sweep k = 1..K")->required()->check(CLI::PositiveNumber);
  verify->add_option("--max-degree", max_degree, "Largest degree swept")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  install_cache_from_env();
  try {
    if (app.got_subcommand(core)) {
      if (int(to_core) + int(from_core) + int(kconj) != 1)
        throw UsageError("exactly one of --to-core, --from-core, --kconjugate is required");
      Partition p = parse_partition(partition);
      Partition result = to_core ? core_of(p, k) : from_core ? kbounded_of(p, k) : k_conjugate(p, k);
      detail::emit(out, {{"result", to_json(result)}});
    } else if (app.got_subcommand(tab)) {
      if (tab->count("--shape") + tab->count("--shape-core") != 1)
        throw UsageError("exactly one of --shape, --shape-core is required");
      const Composition w = parse_composition(weight);
      const Mode m = transposed ? Mode::transposed : Mode::column_strict;
      Partition oc, ic;
      if (tab->count("--shape-core")) {
        oc = detail::core_arg(shape_core, k, "--shape-core");
        ic = detail::core_arg(inner, k, "--inner");
      } else {
        std::tie(oc, ic) = kschur::detail::cores_for(k, parse_partition(shape), parse_partition(inner), w);
      }
      if (count_only) {
        detail::emit(out, {{"count", count_on_cores(k, oc, ic, w, m)}});
      } else {
        const auto ts = enumerate_on_cores(k, oc, ic, w, m);
        for (std::size_t i = 0; i < ts.size(); ++i) {
          if (render_out) out << (i ? "\n" : "") << render(ts[i]);
          else detail::emit(out, to_json(ts[i]));
        }
      }
    } else if (app.got_subcommand(kostka_cmd)) {
      const KostkaMatrix& km = kostka(k, degree);
      if (inverse) {
        json j = to_json(km);
        j.erase("K");
        j["inverse"] = kostka_inverse(k, degree);
        detail::emit(out, j);
      } else {
        detail::emit(out, to_json(km));
      }
    } else if (app.got_subcommand(expand)) {
      const Basis src = parse_basis(from), dst = parse_basis(basis);
      if ((src == Basis::kschur || dst == Basis::kschur) && k < 1) throw UsageError("--k is required for kschur");
      const SymFunc f = SymFunc::element(src, parse_partition(lambda), k);
      SymFunc g = f;
      switch (dst) {
        case Basis::schur: g = to_schur(f); break;
        case Basis::h: g = to_h(f); break;
        case Basis::e: g = omega(to_h(omega(f))); break;
        case Basis::kschur: g = to_kschur(f, k); break;
      }
      detail::emit(out, to_json(g));
    } else if (app.got_subcommand(pieri)) {
      const SymFunc f = SymFunc::element(Basis::kschur, parse_partition(lambda), k);
      detail::emit(out, to_json(mode == "h" ? multiply_h(ell, f) : multiply_e(ell, f)));
    } else if (app.got_subcommand(omega_cmd)) {
      const Basis b = parse_basis(omega_basis);
      if (b == Basis::kschur && k < 1) throw UsageError("--k is required for kschur");
      detail::emit(out, to_json(omega(SymFunc::element(b, parse_partition(lambda), k))));
    } else if (app.got_subcommand(tau_cmd)) {
      if (tableau_json.empty() && input.empty()) throw UsageError("one of --tableau, --input is required");
      const KTableau t = detail::read_tableau(tableau_json, input);
      const Validation v = validate(t, k_weight(t));
      if (!v.ok()) throw UsageError("invalid k-tableau: " + v.issues.front());
      TauTrace tr;
      const KTableau u = tau(t, a, &tr);
      if (trace) {
        detail::emit(out, {{"stage", "1a"}, {"tableau", to_json(tr.stage_1a)}});
        detail::emit(out, {{"stage", "1b"}, {"tableau", to_json(tr.stage_1b)}});
        detail::emit(out, {{"stage", "2"}, {"tableau", to_json(tr.stage_2)}});
      } else {
        detail::emit(out, to_json(u));
      }
    } else if (app.got_subcommand(verify)) {
      bool ok = true;
      for (const SuiteReport& r : run_verify(suite, VerifyOptions{k, max_degree})) {
        ok = ok && r.passed();
        detail::emit(out, to_json(r));
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace kschur::cli
