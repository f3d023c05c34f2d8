#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqx/combinatorics.hpp"
#include "pqx/constructions.hpp"
#include "pqx/extremal.hpp"
#include "pqx/kneser.hpp"
#include "pqx/pq.hpp"
#include "pqx/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // property violated / claim failed
constexpr int kExitError = 2;     // usage or I/O error

json with_schema(json j) {
  j["schema_version"] = 1;
  return j;
}

pqx::Hypergraph load_hypergraph(const std::string& path) {
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    json j;
    f >> j;
    return pqx::Hypergraph::from_json(j);
  }
  return pqx::Hypergraph::parse_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

struct CheckArgs {
  std::string file;
  int p = 0, q = 0;
  bool as_json = false;
};

int cmd_check(const CheckArgs& a) {
  pqx::Hypergraph h = load_hypergraph(a.file);
  pqx::PQParams params = pqx::PQParams::of(a.p, a.q);
  auto violation = pqx::find_violation(h, params);
  bool holds = !violation.has_value();
  if (a.as_json) {
    json out{{"file", a.file}, {"p", a.p}, {"q", a.q}, {"holds", holds}};
    if (violation) {
      json edges = json::array();
      for (int i : violation->family.indices) edges.push_back(h.edge_vertices(i));
      out["violation"] = {{"edge_indices", violation->family.indices}, {"edges", edges}};
    }
    std::cout << with_schema(out).dump(2) << "\n";
  } else if (holds) {
    std::cout << "(p,q)-property holds: among any " << a.p << " edges, some " << a.q << " share a vertex\n";
  } else {
    std::cout << "(p,q)-property violated by " << a.p << " edges with all vertex multiplicities <= " << a.q - 1
              << ":\n";
    for (int i : violation->family.indices) {
      std::cout << " ";
      for (int v : h.edge_vertices(i)) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return holds ? kExitOk : kExitNegative;
}

struct ConstructArgs {
  std::string family = "split";
  int n = 0, k = 2, t = 1, p = 0;
  uint64_t r = 0;
  std::string out;
  bool as_json = false;
};

int cmd_construct(const ConstructArgs& a) {
  pqx::Hypergraph h;
  if (a.family == "split") {
    h = pqx::split_family_member(a.n, a.k, a.t, a.r);
  } else if (a.family == "kpe") {
    h = pqx::complete_plus_edge(a.p);
  } else {
    throw std::invalid_argument("unknown family: " + a.family + " (expected split or kpe)");
  }
  if (a.as_json)
    write_text(a.out, with_schema(json{{"hypergraph", h.to_json()}}).dump(2) + "\n");
  else
    write_text(a.out, h.serialize());
  return kExitOk;
}

struct ParamArgs {
  int n = 0, k = 2, p = 0, q = 0;
  bool as_json = false;
};

int cmd_phi(const ParamArgs& a) {
  auto [t, r] = pqx::tq_decompose(a.p, a.q);
  uint64_t value = pqx::phi(a.n, a.k, a.p, a.q);
  if (a.as_json) {
    json out{{"n", a.n}, {"k", a.k}, {"p", a.p}, {"q", a.q}, {"t", t}, {"r", r}, {"phi", value}};
    if (a.q >= 3) {
      pqx::TheoremThreshold th = pqx::theorem_threshold(a.p, a.q);
      out["threshold"] = {{"simple", th.simple}, {"refined", th.refined}, {"exact_division", th.exact_division}};
    }
    std::cout << with_schema(out).dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kExitOk;
}

int cmd_sarkaria(const ParamArgs& a) {
  pqx::SarkariaChi chi = pqx::sarkaria_chi(a.n, a.k, a.p, a.q);
  if (a.as_json) {
    json out{{"n", a.n}, {"k", a.k}, {"p", a.p}, {"q", a.q}, {"raw", chi.raw}, {"chi", chi.value}};
    std::cout << with_schema(out).dump(2) << "\n";
  } else {
    std::cout << chi.value << " (raw " << chi.raw << ")\n";
  }
  return kExitOk;
}

struct ExtremalArgs {
  int n = 0, k = 2, p = 0, q = 0;
  bool oracle = false;
  uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  int workers = 1;
  bool as_json = false;
};

int cmd_extremal(const ExtremalArgs& a) {
  pqx::ExtremalResult res;
  if (a.oracle) {
    res = pqx::extremal_oracle(a.n, a.k, a.p, a.q, a.workers);
  } else {
    pqx::SearchBudget budget;
    if (a.budget_nodes > 0) budget.max_nodes = a.budget_nodes;
    budget.max_seconds = a.budget_seconds;
    budget.workers = a.workers;
    res = pqx::extremal_number(a.n, a.k, a.p, a.q, budget);
  }
  auto [t, r] = pqx::tq_decompose(a.p, a.q);
  auto cover = pqx::find_cover_structure(res.witness, t, r);
  if (a.as_json) {
    json out{{"n", a.n},
             {"k", a.k},
             {"p", a.p},
             {"q", a.q},
             {"value", res.value},
             {"complete", res.complete},
             {"method", res.method == pqx::SearchMethod::oracle ? "oracle" : "branch_and_bound"},
             {"witness", res.witness.to_json()},
             {"trivial_upper", res.trivial_upper},
             {"stats", {{"nodes", res.stats.nodes}, {"prunes", res.stats.prunes}, {"seconds", res.stats.seconds}}}};
    if (res.phi_seed) out["phi_seed"] = *res.phi_seed;
    json cj{{"t", t}, {"r", r}, {"found", cover.has_value()}};
    if (cover) {
      std::vector<int> xs;
      cover->for_each_bit([&](int b) { xs.push_back(b + 1); });
      cj["X"] = xs;
    }
    out["cover_structure"] = cj;
    std::cout << with_schema(out).dump(2) << "\n";
  } else {
    std::cout << "ex_" << a.k << "(" << a.n << ", D_" << a.k << "(" << a.p << "," << a.q << ")) "
              << (res.complete ? "=" : ">=") << " " << res.value << "\n";
    if (!res.complete) std::cout << "search incomplete: budget exhausted; trivial upper bound " << res.trivial_upper << "\n";
    std::cout << "witness:\n" << res.witness.serialize();
    if (cover) {
      std::cout << "cover structure: all but " << r << " edges meet {";
      bool first = true;
      cover->for_each_bit([&](int b) {
        std::cout << (first ? "" : ",") << b + 1;
        first = false;
      });
      std::cout << "}\n";
    } else {
      std::cout << "cover structure: no t-set with exactly r avoiding edges (t=" << t << ", r=" << r << ")\n";
    }
  }
  return kExitOk;
}

struct KneserArgs {
  int n = 0, k = 0, p = 0, q = 0;
  std::string emit;
  bool alpha = false, chi = false, chi_f = false;
  std::string chi_f_method = "both";
  int workers = 1;
  uint64_t max_vertices = 64;
  uint64_t max_enum = 10000000;
  bool as_json = false;
};

int cmd_kneser(const KneserArgs& a) {
  pqx::KneserSpec spec = pqx::KneserSpec::of(a.n, a.k, a.p, a.q);
  pqx::KneserGuards guards{a.max_vertices, a.max_enum};
  pqx::KneserBuild kb = pqx::build_kneser(spec, guards, a.workers);
  pqx::SearchBudget budget;
  budget.workers = a.workers;

  json out{{"n", a.n}, {"k", a.k}, {"p", a.p}, {"q", a.q},
           {"vertices", kb.hg.n()}, {"edges", kb.hg.num_edges()}};
  std::ostringstream text;
  text << "Kneser hypergraph: " << kb.hg.n() << " vertices (k-subsets of [" << a.n << "]), "
       << kb.hg.num_edges() << " edges (q-wise disjoint p-families)\n";

  if (!a.emit.empty()) {
    write_text(a.emit + ".hg", kb.hg.serialize());
    json labels = json::array();
    for (const auto& l : kb.labels) labels.push_back(l);
    write_text(a.emit + ".labels.json", with_schema(json{{"labels", labels}}).dump(2) + "\n");
    out["emitted"] = {a.emit + ".hg", a.emit + ".labels.json"};
    text << "wrote " << a.emit << ".hg and " << a.emit << ".labels.json\n";
  }

  if (a.alpha) {
    pqx::CountResult direct = pqx::independence_number(kb.hg, budget);
    out["alpha"] = {{"value", direct.value}, {"complete", direct.complete}};
    text << "alpha = " << direct.value << (direct.complete ? "" : " (lower bound, budget exhausted)") << "\n";
  }
  if (a.chi) {
    pqx::ChromaticResult chi = pqx::chromatic_number_exact(kb.hg, budget);
    if (chi.complete) {
      out["chi"] = {{"value", chi.value()}, {"complete", true}};
      text << "chi = " << chi.value() << "\n";
    } else {
      out["chi"] = {{"lower", chi.lower}, {"upper", chi.upper}, {"complete", false}};
      text << "chi in [" << chi.lower << ", " << chi.upper << "] (budget exhausted)\n";
    }
    pqx::SarkariaChi f = pqx::sarkaria_chi(a.n, a.k, a.p, a.q);
    out["chi_formula"] = {{"raw", f.raw}, {"value", f.value}};
    text << "ceiling formula: " << f.value << " (raw " << f.raw << ")\n";
  }
  if (a.chi_f) {
    json cf;
    if (a.chi_f_method == "lp" || a.chi_f_method == "both") {
      pqx::FractionalChromatic lp = pqx::fractional_chromatic_lp(kb.hg);
      cf["lp"] = lp.value.to_json();
      json coloring = json::array();
      for (const auto& [s, w] : lp.coloring) {
        std::vector<int> vs;
        s.for_each_bit([&](int b) { vs.push_back(b + 1); });
        coloring.push_back({{"set", vs}, {"weight", w.to_json()}});
      }
      cf["coloring"] = coloring;
      text << "chi_f (lp) = " << lp.value.to_string() << " over " << lp.coloring.size() << " independent sets\n";
    }
    if (a.chi_f_method == "transitive" || a.chi_f_method == "both") {
      pqx::TransitiveChiF tr = pqx::fractional_chromatic_transitive(spec, budget);
      cf["transitive"] = tr.value.to_json();
      cf["transitive_complete"] = tr.complete;
      text << "chi_f (transitive) = " << tr.value.to_string() << (tr.complete ? "" : " (incomplete alpha)") << "\n";
    }
    cf["method"] = a.chi_f_method;
    out["chi_f"] = cf;
  }

  if (a.as_json)
    std::cout << with_schema(out).dump(2) << "\n";
  else
    std::cout << text.str();
  return kExitOk;
}

struct VerifyArgs {
  pqx::VerifyOptions opt;
  bool as_json = false;
};

int cmd_verify(const VerifyArgs& a) {
  pqx::VerifyReport rep = pqx::run_verify(a.opt);
  if (a.as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_table();
  return rep.all_passed() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(p,q)-property toolkit: extremal numbers and Kneser hypergraph invariants"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "decide the (p,q)-property of a hypergraph file");
  check->add_option("file", check_args.file, "input .hg (or .json) file")->required();
  check->add_option("--p", check_args.p, "p")->required();
  check->add_option("--q", check_args.q, "q")->required();
  check->add_flag("--json", check_args.as_json, "JSON output");

  ConstructArgs con_args;
  auto* con = app.add_subcommand("construct", "generate named hypergraphs");
  con->add_option("--family", con_args.family, "split | kpe")->required();
  con->add_option("--n", con_args.n, "vertex count (split)");
  con->add_option("--k", con_args.k, "uniformity (split)");
  con->add_option("--t", con_args.t, "cover size t (split)");
  con->add_option("--r", con_args.r, "extra edges avoiding [t] (split)");
  con->add_option("--p", con_args.p, "p (kpe: complete graph on p-1 plus pendant)");
  con->add_option("-o,--out", con_args.out, "output path (default stdout)");
  con->add_flag("--json", con_args.as_json, "JSON output");

  ParamArgs phi_args;
  auto* phi = app.add_subcommand("phi", "edge count of split family members");
  phi->add_option("--n", phi_args.n)->required();
  phi->add_option("--k", phi_args.k)->required();
  phi->add_option("--p", phi_args.p)->required();
  phi->add_option("--q", phi_args.q)->required();
  phi->add_flag("--json", phi_args.as_json, "JSON output");

  ExtremalArgs ex_args;
  auto* ex = app.add_subcommand("extremal", "exact extremal number by search");
  ex->add_option("--n", ex_args.n)->required();
  ex->add_option("--k", ex_args.k)->required();
  ex->add_option("--p", ex_args.p)->required();
  ex->add_option("--q", ex_args.q)->required();
  ex->add_flag("--oracle", ex_args.oracle, "power-set oracle instead of branch and bound");
  ex->add_option("--budget-nodes", ex_args.budget_nodes, "node budget (0 = unlimited)");
  ex->add_option("--budget-seconds", ex_args.budget_seconds, "wall time budget (0 = unlimited)");
  ex->add_option("--workers", ex_args.workers, "parallel workers");
  ex->add_flag("--json", ex_args.as_json, "JSON output");

  KneserArgs kn_args;
  auto* kn = app.add_subcommand("kneser", "build q-wise Kneser p-uniform hypergraphs and their invariants");
  kn->add_option("--n", kn_args.n)->required();
  kn->add_option("--k", kn_args.k)->required();
  kn->add_option("--p", kn_args.p)->required();
  kn->add_option("--q", kn_args.q)->required();
  kn->add_option("--emit", kn_args.emit, "write BASE.hg and BASE.labels.json");
  kn->add_flag("--alpha", kn_args.alpha, "independence number");
  kn->add_flag("--chi", kn_args.chi, "exact chromatic number");
  kn->add_flag("--chi-f", kn_args.chi_f, "exact fractional chromatic number");
  kn->add_option("--chi-f-method", kn_args.chi_f_method, "lp | transitive | both");
  kn->add_option("--workers", kn_args.workers, "parallel workers");
  kn->add_option("--max-vertices", kn_args.max_vertices, "vertex guard");
  kn->add_option("--max-enum", kn_args.max_enum, "edge enumeration guard");
  kn->add_flag("--json", kn_args.as_json, "JSON output");

  ParamArgs sa_args;
  auto* sa = app.add_subcommand("sarkaria", "ceiling formula for the Kneser chromatic number");
  sa->add_option("--n", sa_args.n)->required();
  sa->add_option("--k", sa_args.k)->required();
  sa->add_option("--p", sa_args.p)->required();
  sa->add_option("--q", sa_args.q)->required();
  sa->add_flag("--json", sa_args.as_json, "JSON output");

  VerifyArgs ve_args;
  auto* ve = app.add_subcommand("verify", "run registered claim suites");
  ve->add_option("--suite", ve_args.opt.suite, "paper|all|lemma2|lemma3|lemma5|theorem6|oracle|kneser|corollary");
  ve->add_option("--max-n", ve_args.opt.max_n, "override the suite's n cap");
  ve->add_option("--max-p", ve_args.opt.max_p, "override the suite's p cap");
  ve->add_option("--seed", ve_args.opt.seed, "seed for randomized suites");
  ve->add_option("--workers", ve_args.opt.workers, "parallel workers");
  ve->add_option("--random-instances", ve_args.opt.random_instances, "random instance count (lemma3)");
  ve->add_flag("--strip-timing", ve_args.opt.strip_timing, "zero elapsed fields for byte-comparable reports");
  ve->add_flag("--json", ve_args.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*check) return cmd_check(check_args);
    if (*con) return cmd_construct(con_args);
    if (*phi) return cmd_phi(phi_args);
    if (*ex) return cmd_extremal(ex_args);
    if (*kn) return cmd_kneser(kn_args);
    if (*sa) return cmd_sarkaria(sa_args);
    if (*ve) return cmd_verify(ve_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
