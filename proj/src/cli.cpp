#include "coarse/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "coarse/acceptance.hpp"
#include "coarse/classify.hpp"
#include "coarse/constructions.hpp"
#include "coarse/expr.hpp"
#include "coarse/filtration.hpp"
#include "coarse/graph.hpp"

namespace coarse {

namespace {

struct Options {
  std::string group;
  std::string set;
  std::string prop;
  std::string method;
  std::size_t radius = 0;  // 0: a default that depends on the group
  std::size_t margin = 0;
  std::string F;
  std::size_t cells = 2;
  std::size_t depth = 0;  // 0: a default that depends on the command
  std::size_t k = 3;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultBudget;
  std::string out;
  std::string map;
  std::string g;
  std::string A1;
  std::string in;
  std::string threshold;
  std::vector<int> only;
};

int exit_for(Status s) {
  return s == Status::holds ? kExitHolds : s == Status::fails ? kExitFails : kExitInconclusive;
}

// Meet over the verdict lattice: any failure wins, then any inconclusive.
Status combine(const std::vector<Status>& ss) {
  Status r = Status::holds;
  for (auto s : ss) {
    if (s == Status::fails) return Status::fails;
    if (s == Status::inconclusive) r = Status::inconclusive;
  }
  return r;
}

GroupView load(const Options& o) { return o.group.empty() ? integers() : load_group(o.group); }

bool is_integers(const Group& G) { return G.kind() == GroupKind::free_abelian && G.descriptor().rank == 1; }

Window make_window(const GroupView& G, const Options& o) {
  if (G->order()) return whole_group(G, o.budget);
  if (G->generators().empty()) {
    std::size_t n = o.radius ? o.radius : 1024;
    return first_elements(G, n, o.budget);
  }
  std::size_t r = o.radius ? o.radius : (is_integers(*G) ? 300 : G->kind() == GroupKind::free ? 6 : 4);
  if (o.margin >= r) throw Error(Errc::configuration, "margin must be smaller than the radius");
  if (is_integers(*G)) {
    auto ri = static_cast<std::int64_t>(r);
    return interval_window(G, -ri, ri, static_cast<std::int64_t>(o.margin), o.budget);
  }
  return enumerate_ball(G, r, o.margin, o.budget);
}

Radius ball_radius(const GroupView& G, std::size_t k) {
  if (G->generators().empty()) return first_elements(G, std::size_t{1} << (k + 1)).elements();
  return enumerate_ball(G, k).elements();
}

std::vector<Radius> radii_for(const GroupView& G, const Options& o) {
  if (!o.F.empty()) return {parse_element_list(*G, o.F)};
  std::vector<Radius> out;
  for (std::size_t k = 1; k <= (o.depth ? o.depth : 2); ++k) out.push_back(ball_radius(G, k));
  return out;
}

Radius single_radius(const GroupView& G, const Options& o) {
  return o.F.empty() ? ball_radius(G, 1) : parse_element_list(*G, o.F);
}

void emit(const nlohmann::json& j, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(Errc::configuration, "cannot write '" + o.out + "'");
  f << j.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::configuration, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto G = load(o);
  auto A = parse_set_expression(G, o.set);
  auto W = make_window(G, o);
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "classify";
  j["group"] = G->descriptor().to_json();
  j["window"] = W.to_json();
  j["set"] = o.set;
  j["property"] = o.prop;
  j["seed"] = o.seed;
  Verdict v;
  const auto& p = o.prop;
  if (p == "large") {
    v = o.F.empty() ? find_large_witness(A, o.k, W) : check_left_large(A, parse_element_list(*G, o.F), W);
  } else if (p == "k-large") {
    v = find_large_witness(A, o.k, W);
  } else if (p == "thick") {
    v = check_left_thick(A, radii_for(G, o), W);
  } else if (p == "prethick") {
    v = check_left_prethick(A, radii_for(G, o), o.k, W);
  } else if (p == "small") {
    v = check_left_small(A, radii_for(G, o), o.k, W);
  } else if (p == "thin" || p == "n-thin") {
    auto rep = check_n_thin(A, single_radius(G, o), W, p == "thin" ? 1 : o.n);
    v = rep.verdict;
    j["max_count"] = rep.max_count;
  } else if (p == "sparse") {
    Radius S;
    if (o.F.empty()) {
      for (const auto& x : ball_radius(G, 1))
        if (!G->is_identity(x)) S.push_back(x);
    } else {
      S = parse_element_list(*G, o.F);
    }
    v = check_sparse(A, S, o.depth ? o.depth : 2, W);
  } else if (p == "scattered") {
    v = check_scattered(A, o.depth ? o.depth : 3, W);
  } else if (p == "derivation") {
    IdealSpec J = o.threshold.empty() ? IdealSpec{} : IdealSpec::window(std::stoull(o.threshold));
    auto d = combinatorial_derivation(A, J, W);
    j["elements"] = format_all(*G, d);
    v = Verdict::holds({}, std::to_string(d.size()) + " elements");
  } else {
    throw Error(Errc::configuration, "unknown property '" + p + "'");
  }
  j["verdict"] = v.to_json(*G);
  emit(j, o, out);
  return exit_for(v.status);
}

std::vector<std::size_t> letter_indices(const GroupView& G, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& g : parse_element_list(*G, text)) {
    auto ls = as_free(*G).letters(g);
    if (ls.size() != 1) throw Error(Errc::configuration, "expected single letters in --A1");
    out.push_back(ls.front().index);
  }
  return out;
}

int three_sets_from_map(const Options& o, std::ostream& out) {
  std::vector<long long> labels;
  auto f = parse_functional_graph(read_file(o.map), &labels);
  auto t = three_sets_partition(f);
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["method"] = "three-sets";
  j["seed"] = o.seed;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : t.classes) {
    nlohmann::json jc = nlohmann::json::array();
    for (auto x : c) jc.push_back(labels[x]);
    j["classes"].push_back(jc);
  }
  bool ok = displaces(f, t);
  j["status"] = ok ? "holds" : "fails";
  emit(j, o, out);
  return ok ? kExitHolds : kExitFails;
}

// m-thin colours A ∩ W only; every other method splits the whole window.
int finish_partition(Partition P, const Options& o, std::ostream& out, bool whole_window = true) {
  P.seed = o.seed;
  std::vector<Status> all;
  for (const auto& c : P.cells)
    for (const auto& cert : c.certificates) all.push_back(cert.status);
  if (whole_window && !P.covers_window_disjointly()) all.push_back(Status::fails);
  emit(P.to_json(), o, out);
  return exit_for(combine(all));
}

int cmd_partition(const Options& o, std::ostream& out) {
  const auto& m = o.method;
  if (m == "three-sets" && !o.map.empty()) return three_sets_from_map(o, out);
  auto G = load(o);
  auto W = make_window(G, o);
  if (m == "grasshopper-large") return finish_partition(large_partition(G, o.cells, W), o, out);
  if (m == "filtration-small") return finish_partition(filtration_small_partition(Filtration::build(G), W), o, out);
  if (m == "chi-cov") return finish_partition(chi_cov_partition(Filtration::build(G), W), o, out);
  if (m == "scattered") {
    auto F = Filtration::build(G);
    return finish_partition(scattered_filtration_partition(F, W, singleton_colouring(F), o.depth ? o.depth : 3), o,
                            out);
  }
  if (m == "thick") return finish_partition(thick_partition(G, o.cells, W, {o.depth}), o, out);
  if (m == "three-sets") {
    if (o.g.empty()) throw Error(Errc::configuration, "three-sets needs --map or --g");
    return finish_partition(non_thick_partition(G, G->parse(o.g), W), o, out);
  }
  if (m == "free-3large") return finish_partition(free_3large_partition(G, W), o, out);
  if (m == "free-4large") return finish_partition(free_4large_partition(G, W), o, out);
  if (m == "free-bipartition") {
    auto A1 = o.A1.empty() ? std::vector<std::size_t>{0} : letter_indices(G, o.A1);
    return finish_partition(free_bipartition(G, A1, W), o, out);
  }
  if (m == "m-thin") {
    auto A = parse_set_expression(G, o.set);
    return finish_partition(m_thin_partition(A, o.cells, {single_radius(G, o)}, W), o, out, false);
  }
  throw Error(Errc::configuration, "unknown method '" + m + "'");
}

int cmd_recheck(const Options& o, std::ostream& out) {
  auto G = load(o);
  auto P = Partition::from_json(G, nlohmann::json::parse(read_file(o.in)));
  auto fresh = reverify(P);
  std::vector<Status> all;
  bool same = true;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < P.cells.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < fresh[i].size(); ++c) {
      all.push_back(fresh[i][c]);
      same = same && fresh[i][c] == P.cells[i].certificates[c].status;
      row.push_back(to_string(fresh[i][c]));
    }
    rows.push_back(row);
  }
  emit({{"schema_version", kSchemaVersion}, {"command", "recheck"}, {"statuses", rows}, {"matches_recorded", same}}, o,
       out);
  if (!same) return kExitFails;
  return exit_for(combine(all));
}

int cmd_verify(const Options& o, std::ostream& out) {
  AcceptanceConfig cfg;
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.only = o.only;
  auto results = run_acceptance(cfg);
  std::vector<Status> all;
  for (const auto& r : results) all.push_back(r.status);
  emit(to_json(results, cfg), o, out);
  return exit_for(combine(all));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coarse structure of subsets of groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* c) {
    c->add_option("--group", o.group, "group descriptor JSON file (default: the integers)");
    c->add_option("--radius", o.radius, "window radius (element count for groups without generators)");
    c->add_option("--margin", o.margin, "window margin");
    c->add_option("--F", o.F, "comma-separated radius, e.g. 0,1 or e,a");
    c->add_option("--depth", o.depth, "radii count, search depth or certified radius");
    c->add_option("--seed", o.seed, "seed recorded in the output");
    c->add_option("--budget", o.budget, "element cap for windows");
    c->add_option("--out", o.out, "write JSON here instead of stdout");
  };

  auto* classify = app.add_subcommand("classify", "classify a set");
  common(classify);
  classify->add_option("--set", o.set, "set expression")->required();
  classify->add_option("--prop", o.prop, "large, k-large, thick, prethick, small, thin, n-thin, sparse, scattered, derivation")
      ->required();
  classify->add_option("--k", o.k, "translate bound for k-large, small and prethick");
  classify->add_option("--n", o.n, "bound for n-thin");
  classify->add_option("--threshold", o.threshold, "ideal threshold for derivation");

  auto* partition = app.add_subcommand("partition", "build a certified partition");
  common(partition);
  partition->add_option("--method", o.method, "partition method")->required();
  partition->add_option("--cells", o.cells, "number of cells");
  partition->add_option("--set", o.set, "set expression (m-thin)");
  partition->add_option("--map", o.map, "functional graph file, one 'x f(x)' pair per line (three-sets)");
  partition->add_option("--g", o.g, "displacing element (three-sets on a group)");
  partition->add_option("--A1", o.A1, "letters of the first part (free-bipartition)");

  auto* recheck = app.add_subcommand("recheck", "re-verify a saved partition");
  common(recheck);
  recheck->add_option("--in", o.in, "partition JSON")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--budget", o.budget, "element cap for windows");
  verify->add_option("--seed", o.seed, "seed for random instances");
  verify->add_option("--only", o.only, "criterion ids to run");
  verify->add_option("--out", o.out, "write JSON here instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*partition) return cmd_partition(o, out);
    if (*recheck) return cmd_recheck(o, out);
    return cmd_verify(o, out);
  } catch (const BudgetError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    err << "json: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "bad number: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace coarse
