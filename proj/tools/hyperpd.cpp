// hyperpd: projective dimension and Betti numbers of square-free monomial
// ideals through their dual hypergraphs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperpd/classify.hpp"
#include "hyperpd/errors.hpp"
#include "hyperpd/formulas.hpp"
#include "hyperpd/hypergraph.hpp"
#include "hyperpd/oracle.hpp"
#include "hyperpd/verify.hpp"

namespace {

using namespace hyperpd;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct Common {
  int field = 0;
  int budget = 16;
  bool json = false;
};

/// Either a hypergraph or an ideal, depending on the first character.
struct Input {
  std::optional<MonomialIdeal> ideal;
  Hypergraph graph;
};

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Input load(const std::string& path) {
  const auto text = read_source(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  Input in;
  if (first != std::string::npos && text[first] == '{') {
    in.graph = hypergraph_from_json(text);
  } else {
    in.ideal = prune_redundant(parse_ideal(text));
    in.graph = from_ideal(*in.ideal);
  }
  return in;
}

MonomialIdeal oracle_ideal(const Input& in) { return in.ideal ? *in.ideal : to_ideal(in.graph, true); }

int cmd_pd(const std::string& path, const Common& c, bool force_oracle, bool explain) {
  const auto in = load(path);
  PdAutoResult res;
  if (force_oracle) {
    OracleOptions opt;
    opt.max_variables = c.budget;
    auto [pd, reg] = pd_reg(oracle_ideal(in), c.field, opt);
    res.pd = pd;
    res.reg = reg;
    res.method = "oracle";
    res.trace.push_back("oracle on the full ideal");
  } else {
    res = pd_auto(in.graph, {c.budget, c.field});
  }
  if (c.json) {
    Json doc;
    doc["pd"] = res.pd;
    doc["reg"] = res.reg ? Json(*res.reg) : Json(nullptr);
    doc["method"] = res.method;
    if (explain) doc["trace"] = res.trace;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "pd: " << res.pd << "\n";
  if (res.reg) std::cout << "reg: " << *res.reg << "\n";
  std::cout << "method: " << res.method << "\n";
  if (explain) {
    for (const auto& line : res.trace) std::cout << "trace: " << line << "\n";
  }
  return 0;
}

int cmd_betti(const std::string& path, const Common& c, bool cross, bool no_prune) {
  const auto in = load(path);
  OracleOptions opt;
  opt.max_variables = c.budget;
  opt.prune = !no_prune;
  const auto ideal = oracle_ideal(in);
  const auto table = cross ? lcm_lattice_betti(ideal, c.field, opt) : betti_table(ideal, c.field, opt);
  if (c.json) {
    std::cout << table.to_json(2) << "\n";
  } else {
    std::cout << table.to_tsv();
  }
  return 0;
}

int cmd_classify(const std::string& path, bool json) {
  const auto in = load(path);
  std::vector<std::string> removed;
  const auto reduced = remove_union_edges(in.graph, &removed);
  const auto cfg = classify_shape(reduced);
  Json doc = Json::parse(shape_to_json(cfg));
  doc["removed_edges"] = removed;
  std::cout << doc.dump(json ? 2 : -1) << "\n";
  return 0;
}

int cmd_verify(const std::string& family_text, VerifyBounds bounds, const std::string& lemma_text, const Common& c) {
  const auto family = parse_family(family_text);
  if (!family) throw PreconditionError("unknown family '" + family_text + "'");
  if (!lemma_text.empty()) {
    bounds.lemma = parse_lemma(lemma_text);
    if (!bounds.lemma) throw PreconditionError("unknown lemma '" + lemma_text + "'");
  }
  bounds.field_char = c.field;
  bounds.budget = c.budget;
  const auto out = verify_family(*family, bounds);
  if (c.json) {
    Json doc;
    doc["family"] = out.family;
    doc["instances"] = out.instances;
    doc["stats"] = out.stats;
    Json list = Json::array();
    for (const auto& m : out.mismatches) {
      list.push_back({{"instance", m.instance}, {"formula", m.formula}, {"oracle", m.oracle}, {"note", m.note}});
    }
    doc["mismatches"] = list;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "family: " << out.family << "\n";
    std::cout << "instances: " << out.instances << "\n";
    std::cout << "mismatches: " << out.mismatches.size() << "\n";
    for (const auto& [key, value] : out.stats) std::cout << "stat " << key << ": " << value << "\n";
    for (const auto& m : out.mismatches) {
      std::cout << "MISMATCH " << m.instance << " formula=" << m.formula << " oracle=" << m.oracle;
      if (!m.note.empty()) std::cout << " (" << m.note << ")";
      std::cout << "\n";
    }
  }
  std::cerr << "# elapsed " << out.elapsed_seconds << "s\n";
  return out.mismatches.empty() ? 0 : kExitMismatch;
}

int cmd_conjecture(int max_mu, int max_edges, int min_size, const std::string& dump_dir, const Common& c) {
  const auto out = conjecture_search(max_mu, max_edges, c.field, c.budget, min_size);
  std::cout << "instances: " << out.instances << "\n";
  std::cout << "differing: " << out.mismatches.size() << "\n";
  for (const auto& m : out.mismatches) {
    std::cout << "DIFFERS " << m.instance << " open-cycle=" << m.formula << " oracle=" << m.oracle << "\n";
  }
  if (!dump_dir.empty() && !out.mismatch_json.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (std::size_t i = 0; i < out.mismatch_json.size(); ++i) {
      std::ofstream(std::filesystem::path(dump_dir) / ("counterexample_" + std::to_string(i + 1) + ".json"))
          << out.mismatch_json[i] << "\n";
    }
  }
  std::cerr << "# elapsed " << out.elapsed_seconds << "s\n";
  return 0;
}

void add_common(CLI::App* cmd, Common& c, bool with_json = true) {
  cmd->add_option("--field", c.field, "Field characteristic: 0 or a prime")->capture_default_str();
  cmd->add_option("--budget", c.budget, "Largest variable count handed to the oracle")->capture_default_str();
  if (with_json) cmd->add_flag("--json", c.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective dimension of square-free monomial ideals via dual hypergraphs"};
  app.require_subcommand(1);

  Common common;
  std::string path;
  bool force_oracle = false, explain = false, cross = false, no_prune = false;

  auto* pd = app.add_subcommand("pd", "Projective dimension (and reg when known)");
  pd->add_option("input", path, "Ideal text or hypergraph JSON ('-' for stdin)")->required();
  pd->add_flag("--oracle", force_oracle, "Skip the formulas and run the oracle");
  pd->add_flag("--explain", explain, "Print the reduction and classification trace");
  add_common(pd, common);

  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers (TSV or JSON)");
  betti->add_option("input", path, "Ideal text or hypergraph JSON")->required();
  betti->add_flag("--cross", cross, "Use the lcm-lattice cross-oracle");
  betti->add_flag("--no-prune", no_prune, "Scan every multidegree");
  add_common(betti, common);

  auto* classify = app.add_subcommand("classify", "Shape and gap data after union-edge removal");
  classify->add_option("input", path, "Ideal text or hypergraph JSON")->required();
  classify->add_flag("--json", common.json, "Indented JSON");

  std::string family, lemma;
  VerifyBounds bounds;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with the oracle over a family");
  verify->add_option("FAMILY", family, "strings|cycles|string-edge|cycle-edge|lemmas|splitting|reductions")
      ->required();
  verify->add_option("--max-mu", bounds.max_mu, "Largest vertex count")->capture_default_str();
  verify->add_option("--samples", bounds.samples, "Random extra instances")->capture_default_str();
  verify->add_option("--sample-mu", bounds.sample_mus, "Vertex counts for sampled instances");
  verify->add_option("--seed", bounds.seed, "Random seed")->capture_default_str();
  verify->add_option("--family,--lemma", lemma, "Lemma case for 'lemmas'");
  add_common(verify, common);

  int max_mu = 6, max_edges = 2, min_size = 2;
  std::string dump_dir;
  auto* conj = app.add_subcommand("conjecture-search", "Open cycles with several extra edges");
  conj->add_option("--max-mu", max_mu, "Largest cycle length")->capture_default_str();
  conj->add_option("--max-edges", max_edges, "Largest number of extra edges")->capture_default_str();
  conj->add_option("--min-edge-size", min_size, "Fewest vertices on an extra edge (2 allows chords)")
      ->capture_default_str();
  conj->add_option("--dump", dump_dir, "Directory for JSON of differing instances");
  add_common(conj, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pd) return cmd_pd(path, common, force_oracle, explain);
    if (*betti) return cmd_betti(path, common, cross, no_prune);
    if (*classify) return cmd_classify(path, common.json);
    if (*verify) return cmd_verify(family, bounds, lemma, common);
    if (*conj) return cmd_conjecture(max_mu, max_edges, min_size, dump_dir, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
