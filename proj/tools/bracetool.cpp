#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewbrace/ideal_algebra.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/semidirect.hpp"
#include "skewbrace/ybe.hpp"

namespace {

using namespace skewbrace;

// Raised while reading or validating input files; maps to exit code 2.
struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Digroup load_dgt(const std::string& path) {
  try {
    return parse_dgt(slurp(path));
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

struct Options {
  int max_order = kDefaultMaxOrder;
  bool quiet = false;
  std::string emit_path;
};

void write_emitted(const Options& opt, const std::string& text) {
  if (!opt.emit_path.empty()) {
    std::ofstream out(opt.emit_path);
    if (!out) throw InputError{"cannot write '" + opt.emit_path + "'"};
    out << text;
  } else if (!opt.quiet) {
    std::cout << text;
  }
}

std::string join(const std::vector<Element>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

int cmd_check(const Options& opt, const std::string& path) {
  Digroup d = load_dgt(path);
  bool brace = is_skew_brace(d);
  bool via = is_skew_brace_via_lambda(d);
  if (!opt.quiet) std::cout << "order: " << d.order() << "\n";
  std::cout << "digroup: true\n"
            << "brace: " << (brace ? "true" : "false") << "\n"
            << "brace_via_lambda: " << (via ? "true" : "false") << "\n";
  if (brace != via) {
    std::cout << "oracles_agree: false\n";
    return 1;
  }
  return brace ? 0 : 1;
}

int cmd_lambda(const Options&, const std::string& path) {
  Digroup d = load_dgt(path);
  for (Element a = 0; a < d.order(); ++a)
    std::cout << "lambda[" << a << "]: " << join(lambda_map(d, a).images)
              << "\n";
  return 0;
}

int cmd_ideals(const Options& opt, const std::string& path) {
  Digroup d = load_dgt(path);
  std::vector<IdealSet> list = ideals(d, opt.max_order);
  std::cout << "ideals: " << list.size() << "\n";
  for (const IdealSet& i : list) std::cout << "ideal: " << join(i.elements) << "\n";
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& path) {
  Digroup d = load_dgt(path);
  auto decs = idempotent_endomorphisms(d, opt.max_order);
  int nontrivial = 0;
  int failures = 0;
  for (const auto& dec : decs)
    if (!dec.trivial(d.order())) ++nontrivial;
  std::cout << "decompositions: " << decs.size()
            << " nontrivial: " << nontrivial << "\n";
  for (const auto& dec : decs) {
    std::cout << "B: " << join(dec.subgroup) << "\n"
              << "I: " << join(dec.ideal.elements) << "\n"
              << "e: " << join(dec.retraction.images) << "\n";
    DigroupAction act = extract_action(d, dec);
    if (!opt.quiet) std::cout << emit_action(act);
    bool ok = true;
    try {
      alpha_isomorphism(d, dec);
    } catch (const Error&) {
      ok = false;
      ++failures;
    }
    std::cout << "roundtrip: " << (ok ? "ok" : "failed") << "\n";
  }
  return failures ? 1 : 0;
}

int cmd_outer(const Options& opt, const std::string& y_path,
              const std::string& k_path, const std::string& action_path) {
  Digroup y = load_dgt(y_path);
  Digroup k = load_dgt(k_path);
  DigroupAction act = [&] {
    try {
      return parse_action(slurp(action_path), y, k);
    } catch (const Error& e) {
      throw InputError{action_path + ": " + e.what()};
    }
  }();

  if (std::string why = action_violation(act); !why.empty()) {
    std::cout << "action: invalid (" << why << ")\n";
    return 1;
  }
  Digroup p = outer_product(act);
  write_emitted(opt, emit_dgt(p));
  bool brace = is_skew_brace(p);
  BraceConditionResult cond = brace_condition(act);
  auto [c1, c2] = corollary_split(act);
  std::cout << "digroup: true\n"
            << "brace: " << (brace ? "true" : "false") << "\n"
            << "brace_condition: " << (cond.holds ? "true" : "false");
  if (!cond.reason.empty()) std::cout << " (" << cond.reason << ")";
  std::cout << "\ncorollary: " << (c1 ? "true" : "false") << " "
            << (c2 ? "true" : "false") << "\n";
  bool consistent = cond.holds == brace && (c1 && c2) == cond.holds;
  std::cout << "oracles_agree: " << (consistent ? "true" : "false") << "\n";
  if (!consistent) return 1;
  return brace ? 0 : 1;
}

int cmd_commutator(const Options& opt, const std::string& path,
                   const std::string& i_list, const std::string& j_list) {
  Digroup d = load_dgt(path);
  auto parse_set = [&](const std::string& text) {
    try {
      return parse_index_list(text);
    } catch (const Error& e) {
      throw InputError{e.what()};
    }
  };
  IdealSet lhs = as_ideal(d, parse_set(i_list));
  IdealSet rhs = as_ideal(d, parse_set(j_list));
  IdealSet c = commutator_ideal(d, lhs, rhs, opt.max_order);
  std::cout << "commutator: " << join(c.elements) << "\n";
  return 0;
}

int cmd_center(const Options& opt, const std::string& path) {
  Digroup d = load_dgt(path);
  IdealSet z = center(d, opt.max_order);
  std::vector<Element> zw = center_elementwise(d);
  std::cout << "center: " << join(z.elements) << "\n"
            << "center_elementwise: " << join(zw) << "\n";
  return z.elements == zw ? 0 : 1;
}

int cmd_ybe(const Options& opt, const std::string& path) {
  Digroup d = load_dgt(path);
  SetSolution r = solution_from_brace(d);
  bool braid = braid_check(r);
  bool nondeg = nondegeneracy_check(r);
  write_emitted(opt, emit_solution(r));
  std::cout << "braid: " << (braid ? "true" : "false") << "\n"
            << "nondegenerate: " << (nondeg ? "true" : "false") << "\n";
  return braid && nondeg ? 0 : 1;
}

int cmd_enumerate(const Options& opt, const std::string& star_spec,
                  bool braces_only, bool max_order_set) {
  FiniteGroup star = [&] {
    try {
      return catalog(star_spec);
    } catch (const Error&) {
      return load_dgt(star_spec).star;
    }
  }();
  int bound = max_order_set ? opt.max_order : 8;
  std::vector<Digroup> corpus = enumerate_digroups(star, braces_only, bound);
  std::cout << "count: " << corpus.size() << "\n";
  std::string blocks;
  for (const Digroup& d : corpus) blocks += emit_dgt(d) + "\n";
  if (!opt.emit_path.empty() || !opt.quiet) write_emitted(opt, blocks);
  return 0;
}

int cmd_catalog(const Options& opt, const std::string& name) {
  Digroup d = [&] {
    try {
      return catalog_digroup(name);
    } catch (const Error& e) {
      throw InputError{e.what()};
    }
  }();
  Options show = opt;
  show.quiet = false;  // emitting the table is the whole point
  write_emitted(show, emit_dgt(d));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite digroup and skew brace toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  auto* max_order_opt =
      app.add_option("--max-order", opt.max_order,
                     "bound for the enumeration-heavy operations");
  app.add_flag("--quiet", opt.quiet, "suppress table output");
  app.add_option("--emit", opt.emit_path, "write emitted files here");

  std::string path, y_path, k_path, action_path, i_list, j_list, star_spec,
      name;
  bool braces_only = false;
  int rc = 0;

  auto* check = app.add_subcommand("check", "digroup and skew-brace verdicts");
  check->add_option("dgt", path)->required();
  check->callback([&] { rc = cmd_check(opt, path); });

  auto* lambda = app.add_subcommand("lambda", "print all lambda maps");
  lambda->add_option("dgt", path)->required();
  lambda->callback([&] { rc = cmd_lambda(opt, path); });

  auto* ideals_cmd = app.add_subcommand("ideals", "enumerate ideals");
  ideals_cmd->add_option("dgt", path)->required();
  ideals_cmd->callback([&] { rc = cmd_ideals(opt, path); });

  auto* decompose =
      app.add_subcommand("decompose", "inner semidirect decompositions");
  decompose->add_option("dgt", path)->required();
  decompose->callback([&] { rc = cmd_decompose(opt, path); });

  auto* outer = app.add_subcommand("outer", "build an outer semidirect product");
  outer->add_option("Y", y_path)->required();
  outer->add_option("K", k_path)->required();
  outer->add_option("action", action_path)->required();
  outer->callback([&] { rc = cmd_outer(opt, y_path, k_path, action_path); });

  auto* commutator = app.add_subcommand("commutator", "commutator of ideals");
  commutator->add_option("dgt", path)->required();
  commutator->add_option("--i", i_list)->required();
  commutator->add_option("--j", j_list)->required();
  commutator->callback([&] { rc = cmd_commutator(opt, path, i_list, j_list); });

  auto* center_cmd = app.add_subcommand("center", "center of a skew brace");
  center_cmd->add_option("dgt", path)->required();
  center_cmd->callback([&] { rc = cmd_center(opt, path); });

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter solution from a brace");
  ybe->add_option("dgt", path)->required();
  ybe->callback([&] { rc = cmd_ybe(opt, path); });

  auto* enumerate = app.add_subcommand("enumerate", "enumerate digroups");
  enumerate->add_option("--star", star_spec, "catalog name or DGT file")
      ->required();
  enumerate->add_flag("--braces-only", braces_only);
  enumerate->callback([&] {
    rc = cmd_enumerate(opt, star_spec, braces_only, max_order_opt->count() > 0);
  });

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a built-in example");
  catalog_cmd->add_option("name", name)->required();
  catalog_cmd->callback([&] { rc = cmd_catalog(opt, name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const skewbrace::Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == skewbrace::errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
