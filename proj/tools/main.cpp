#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "iolab/constructions.hpp"
#include "iolab/interval.hpp"
#include "iolab/io.hpp"
#include "iolab/modular.hpp"
#include "iolab/oracle.hpp"
#include "iolab/ordinal.hpp"
#include "iolab/poset.hpp"

using namespace iolab;

namespace {

Poset load_poset(const std::string& path) {
  Structure s = read_structure_file(path);
  if (auto* p = std::get_if<Poset>(&s)) return *p;
  throw SpecError("expected a poset file, got a graph");
}

std::string set_names(const Poset& p, const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + p.name_of(s[i]);
  return out + "}";
}

int cmd_check(const std::string& path) {
  Poset p = load_poset(path);
  if (auto w = find_two_plus_two(p)) {
    std::cout << "interval order: false\n";
    std::cout << "witness 2+2: " << p.name_of(w->a) << " < " << p.name_of(w->b) << ", "
              << p.name_of(w->c) << " < " << p.name_of(w->d) << "\n";
  } else {
    std::cout << "interval order: true\n";
  }
  return 0;
}

int cmd_amchain(const std::string& path, bool as_json) {
  Poset p = load_poset(path);
  AMChain c = am_chain(p);
  if (as_json) {
    std::cout << amchain_to_json(p, c) << "\n";
    return 0;
  }
  for (int i = 0; i < c.length(); ++i)
    std::cout << "A" << i << " = " << set_names(p, c.antichains[i]) << "\n";
  for (int v = 0; v < p.size(); ++v)
    std::cout << p.name_of(v) << ": [" << c.membership[v].first << ", "
              << c.membership[v].second << "]\n";
  return 0;
}

int cmd_represent(const std::string& path, const std::string& mode) {
  Poset p = load_poset(path);
  IntervalRepresentation r;
  if (mode == "standard") {
    StandardRepresentation s = standard_representation(p);
    r = s.rep;
    if (!s.injective) {
      std::cerr << "note: representation not injective;";
      for (auto [a, b] : s.doubly_critical)
        std::cerr << " doubly critical (" << p.name_of(a) << "," << p.name_of(b) << ")";
      std::cerr << "\n";
    }
  } else if (mode == "downset") {
    r = downset_interval_representation(p);
  } else {
    throw SpecError("mode must be standard or downset");
  }
  std::cout << representation_to_json(p, r) << "\n";
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& format) {
  Structure s = read_structure_file(path);
  if (auto* g = std::get_if<SimpleGraph>(&s)) {
    ModuleTree t = module_tree(*g);
    std::cout << (format == "dot" ? module_tree_to_dot(t) : module_tree_to_json(t)) << "\n";
    return 0;
  }
  const Poset& p = std::get<Poset>(s);
  ModuleTree t = module_tree(p);
  if (format == "dot")
    std::cout << module_tree_to_dot(t) << "\n";
  else
    std::cout << module_tree_to_json(t, &p) << "\n";
  if (is_interval_order(p)) {
    Theorem1Decomposition d = decompose_interval_order(p);
    const char* kind = d.index_kind == IndexKind::Chain            ? "chain"
                       : d.index_kind == IndexKind::FiniteAntichain ? "finite antichain"
                                                                    : "prime";
    std::cerr << "index kind: " << kind << ", components: " << d.components.size() << "\n";
    for (size_t i = 0; i < d.component_vertices.size(); ++i)
      std::cerr << "  component " << i << ": " << set_names(p, d.component_vertices[i]) << "\n";
  }
  return 0;
}

int cmd_singulars(const std::string& path) {
  Poset p = load_poset(path);
  std::cout << set_names(p, singular_vertices(p)) << "\n";
  return 0;
}

int cmd_gen(const std::string& which, int n, const std::string& ordinal_text, int size,
            const std::string& out_path) {
  Poset p = [&] {
    if (which == "in") return semiorder(n);
    if (which == "bq") return incidence_bipartite(n);
    Ordinal alpha = ord_parse(ordinal_text);
    return p_alpha_prefix(canonical_term(alpha), size);
  }();
  std::string name = which == "palpha" ? "palpha" : which + std::to_string(n);
  if (out_path.empty()) {
    write_poset(std::cout, p, name);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open " + out_path);
    write_poset(out, p, name);
  }
  return 0;
}

int cmd_oracle(const std::string& which, const std::string& path) {
  Structure s = read_structure_file(path);
  if (which == "modules") {
    auto mods = std::holds_alternative<Poset>(s) ? oracle::all_modules(std::get<Poset>(s))
                                                 : oracle::all_modules(std::get<SimpleGraph>(s));
    for (const auto& m : mods) {
      std::cout << "{";
      for (size_t i = 0; i < m.size(); ++i)
        std::cout << (i ? " " : "")
                  << (std::holds_alternative<Poset>(s) ? std::get<Poset>(s).name_of(m[i])
                                                       : std::get<SimpleGraph>(s).name_of(m[i]));
      std::cout << "}\n";
    }
    return 0;
  }
  if (which == "antichains") {
    const Poset& p = std::get<Poset>(s);
    for (const auto& a : oracle::all_maximal_antichains(p))
      std::cout << set_names(p, a) << "\n";
    return 0;
  }
  throw SpecError("oracle subcommand must be modules or antichains");
}

int cmd_verify(const std::string& path) {
  Structure s = read_structure_file(path);
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };
  auto check = [&](const std::string& name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const SizeGuardError&) {
      std::cout << "skip  " << name << " (above size guard)\n";
      return;
    } catch (const Error& e) {
      std::cout << "FAIL  " << name << " (" << e.what() << ")\n";
      ++failures;
      return;
    }
    report(name, ok);
  };

  if (auto* g = std::get_if<SimpleGraph>(&s)) {
    check("strong modules match oracle", [&] {
      auto fast = strong_modules(*g);
      auto slow = oracle::all_strong_modules(*g);
      std::sort(fast.begin(), fast.end());
      return fast == slow;
    });
    check("independence heights drop on non-neighbourhoods", [&] { return rank_inc_check(*g); });
    return failures ? 1 : 0;
  }

  const Poset& p = std::get<Poset>(s);
  check("primality agrees with comparability graph", [&] { return kelly_check(p); });
  check("strong modules match oracle", [&] {
    auto fast = strong_modules(p);
    auto slow = oracle::all_strong_modules(p);
    std::sort(fast.begin(), fast.end());
    return fast == slow;
  });
  bool interval = is_interval_order(p);
  check("interval-order test agrees with quadruple scan", [&] {
    return interval == !oracle::find_2plus2(p).has_value();
  });
  if (interval) {
    check("maximal antichains match oracle", [&] {
      auto fast = am_chain(p).antichains;
      auto slow = oracle::all_maximal_antichains(p);
      for (auto& a : fast) std::sort(a.begin(), a.end());
      std::sort(fast.begin(), fast.end());
      return fast == slow;
    });
    check("standard representation respects the order", [&] {
      return representation_contract_holds(p, standard_representation(p).rep);
    });
    check("down-set representation respects the order", [&] {
      return representation_contract_holds(p, downset_interval_representation(p));
    });
    check("singular vertices form a chain", [&] {
      auto sing = singular_vertices(p);
      for (size_t i = 0; i < sing.size(); ++i)
        for (size_t j = i + 1; j < sing.size(); ++j)
          if (p.incomparable(sing[i], sing[j])) return false;
      return true;
    });
    check("decomposition round-trip is the identity", [&] {
      return recompose(decompose_interval_order(p)).same_relation(p);
    });
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval order laboratory"};
  app.require_subcommand(1);

  std::string path, mode = "standard", format = "json", ordinal_text, out_path, oracle_what;
  int gen_n = 0, size = 0;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "interval-order test with witness");
  check->add_option("file", path)->required();

  auto* amchain = app.add_subcommand("amchain", "ordered maximal antichains");
  amchain->add_option("file", path)->required();
  amchain->add_flag("--json", as_json);

  auto* represent = app.add_subcommand("represent", "interval representation");
  represent->add_option("file", path)->required();
  represent->add_option("--mode", mode)->check(CLI::IsMember({"standard", "downset"}));

  auto* decompose = app.add_subcommand("decompose", "modular decomposition tree");
  decompose->add_option("file", path)->required();
  decompose->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* singulars = app.add_subcommand("singulars", "vertices singular in the order");
  singulars->add_option("file", path)->required();

  auto* gen = app.add_subcommand("gen", "emit generated poset files");
  gen->require_subcommand(1);
  auto* gen_in = gen->add_subcommand("in", "semiorder on n vertices");
  gen_in->add_option("n", gen_n)->required();
  auto* gen_bq = gen->add_subcommand("bq", "incidence bipartite poset");
  gen_bq->add_option("m", gen_n)->required();
  auto* gen_pa = gen->add_subcommand("palpha", "finite prefix of the rank-alpha family");
  gen_pa->add_option("--ordinal", ordinal_text)->required();
  gen_pa->add_option("--size", size)->required();
  for (auto* g : {gen_in, gen_bq, gen_pa}) g->add_option("--out", out_path);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference output");
  oracle_cmd->add_option("what", oracle_what)->required()
      ->check(CLI::IsMember({"modules", "antichains"}));
  oracle_cmd->add_option("file", path)->required();

  auto* verify = app.add_subcommand("verify", "run every applicable invariant");
  verify->add_option("file", path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path);
    if (amchain->parsed()) return cmd_amchain(path, as_json);
    if (represent->parsed()) return cmd_represent(path, mode);
    if (decompose->parsed()) return cmd_decompose(path, format);
    if (singulars->parsed()) return cmd_singulars(path);
    if (gen->parsed()) {
      std::string which = gen_in->parsed() ? "in" : gen_bq->parsed() ? "bq" : "palpha";
      return cmd_gen(which, gen_n, ordinal_text, size, out_path);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_what, path);
    if (verify->parsed()) return cmd_verify(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CycleError& e) {
    std::cerr << "cycle:";
    for (int v : e.cycle) std::cerr << " " << v;
    std::cerr << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
