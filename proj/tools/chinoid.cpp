#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chinoid/catalog.hpp"
#include "chinoid/congruence.hpp"
#include "chinoid/diagram.hpp"
#include "chinoid/quotient.hpp"
#include "chinoid/rep.hpp"
#include "chinoid/verify.hpp"
#include "json.hpp"

namespace {

using namespace chinoid;

std::size_t class_budget_from_env() {
  if (const char* raw = std::getenv("CHINOID_CLASS_BUDGET")) {
    const long long parsed = std::atoll(raw);
    if (parsed > 0) {
      return static_cast<std::size_t>(parsed);
    }
  }
  return kDefaultClassBudget;
}

Branch branch_from_steps(int n, const std::string& steps) {
  std::vector<std::string> tokens;
  std::string item;
  std::istringstream in(steps);
  while (std::getline(in, item, ',')) {
    tokens.push_back(item);
  }
  if (tokens.empty()) {
    throw std::invalid_argument("empty step list");
  }
  auto head = tokens.front();
  if (head.size() < 2 || (head[0] != 'd' && head[0] != 'a')) {
    throw std::invalid_argument("first step must be d<s> or a<s>");
  }
  const int s = std::stoi(head.substr(1));
  Branch branch(head[0] == 'd' ? Diagram::level1_dot(n, s)
                               : Diagram::level1_arc(n, s));
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const Diagram& tip = branch.tip();
    if (tokens[i] == "a") {
      branch = branch.extended(tip.with_arc(tip.lo() - 1, tip.hi() + 1));
    } else if (tokens[i] == "dl") {
      branch = branch.extended(tip.with_dot(tip.lo() - 1));
    } else if (tokens[i] == "dr") {
      branch = branch.extended(tip.with_dot(tip.hi() + 1));
    } else {
      throw std::invalid_argument("unknown step '" + tokens[i] +
                                  "' (want a, dl or dr)");
    }
  }
  return branch;
}

std::string product_text(const ProductElement& pe) {
  std::string out = "quotient: " + word_to_string(pe.quotient.word);
  for (const Factor& f : pe.factors) {
    out += (f.kind == StepKind::Arc)
               ? " | arc p^" + std::to_string(f.b.p) + " q^" +
                     std::to_string(f.b.q) + " g^" + std::to_string(f.g.e)
               : " | dot g^" + std::to_string(f.g.e);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Chinese monoid workbench: canonical forms, the diagram tree "
               "and its minimal primes, and monomial representations"};
  app.require_subcommand(1);
  const std::size_t budget = class_budget_from_env();

  int n = 0;
  std::string format = "text";
  std::string word_arg, word_arg2;
  std::string steps, params, vector_json, basis_arg, family_id;
  bool standard = false;
  long box = 4;
  int sweep_len = 0;
  int samples = 50;
  std::uint64_t seed = kDefaultSeed;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-n,--rank", n, "rank of the monoid")->required();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of a word");
  add_common(cmd_normalize);
  cmd_normalize->add_option("word", word_arg, "word, e.g. \"a1 a2 a1\"")->required();

  auto* cmd_multiply = app.add_subcommand("multiply", "product of two words");
  add_common(cmd_multiply);
  cmd_multiply->add_option("left", word_arg)->required();
  cmd_multiply->add_option("right", word_arg2)->required();

  auto* cmd_class = app.add_subcommand("class", "full congruence class of a word");
  add_common(cmd_class);
  cmd_class->add_option("word", word_arg)->required();

  auto* cmd_tree = app.add_subcommand("tree", "all diagrams of the tree");
  add_common(cmd_tree);

  auto* cmd_leaves = app.add_subcommand("leaves", "leaf diagrams (minimal primes)");
  add_common(cmd_leaves);

  auto* cmd_kappa = app.add_subcommand("kappa", "image of a word under a branch");
  add_common(cmd_kappa);
  cmd_kappa->add_option("--steps", steps,
                        "branch steps, e.g. \"d2,a\" or \"a2,a,dl\"")->required();
  cmd_kappa->add_option("word", word_arg)->required();

  auto* cmd_act = app.add_subcommand("act", "act by a word on a vector");
  add_common(cmd_act);
  cmd_act->add_option("--family", family_id, "family id from `catalog`");
  cmd_act->add_flag("--standard", standard, "use the standard module");
  cmd_act->add_option("--params", params, "rational parameters, e.g. \"3/2,1\"")
      ->required();
  cmd_act->add_option("--vector", vector_json,
                      "sparse vector as JSON, e.g. '{\"(2,1)\":\"1\"}'");
  cmd_act->add_option("--basis", basis_arg, "basis index, e.g. \"2,1\"");
  cmd_act->add_option("word", word_arg)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(cmd_verify);
  cmd_verify->add_option("--box", box, "basis box bound");
  cmd_verify->add_option("--len", sweep_len, "exhaustive word length");
  cmd_verify->add_option("--samples", samples, "random vectors per module");
  cmd_verify->add_option("--seed", seed, "seed for randomized sweeps");

  auto* cmd_catalog = app.add_subcommand("catalog", "representation families");
  add_common(cmd_catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the help text or the error
    return code == 0 ? 0 : 2;
  }
  const bool json_out = format == "json";

  if (cmd_normalize->parsed() || cmd_multiply->parsed()) {
    CanonicalForm cf = normalize(word_from_string(word_arg), n, budget);
    if (cmd_multiply->parsed()) {
      cf = multiply(cf, normalize(word_from_string(word_arg2), n, budget),
                    budget);
    }
    if (json_out) {
      std::cout << cf.to_json().dump() << "\n";
    } else {
      std::cout << word_to_string(cf.expand()) << "\n";
    }
    return 0;
  }

  if (cmd_class->parsed()) {
    auto cls = congruence_class(word_from_string(word_arg), n, budget);
    std::sort(cls.begin(), cls.end());
    if (json_out) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const Word& w : cls) {
        out.push_back(word_to_string(w));
      }
      std::cout << out.dump() << "\n";
    } else {
      for (const Word& w : cls) {
        std::cout << word_to_string(w) << "\n";
      }
    }
    return 0;
  }

  if (cmd_tree->parsed()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Branch& b : enumerate_tree(n)) {
      if (json_out) {
        nlohmann::ordered_json item = b.tip().to_json();
        item["level"] = b.length();
        item["leaf"] = is_leaf(b.tip());
        out.push_back(std::move(item));
      } else {
        std::cout << std::string(2 * (b.length() - 1), ' ') << b.tip().ascii()
                  << (is_leaf(b.tip()) ? "  [leaf]" : "") << "\n";
      }
    }
    if (json_out) {
      std::cout << out.dump() << "\n";
    }
    return 0;
  }

  if (cmd_leaves->parsed()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Branch& b : enumerate_leaves(n)) {
      if (json_out) {
        out.push_back(b.tip().to_json());
      } else {
        std::cout << b.tip().ascii() << "\n";
      }
    }
    if (json_out) {
      std::cout << out.dump() << "\n";
    }
    return 0;
  }

  if (cmd_kappa->parsed()) {
    const Branch branch = branch_from_steps(n, steps);
    const ProductElement pe =
        apply_branch(branch, word_from_string(word_arg));
    if (json_out) {
      std::cout << pe.to_json().dump() << "\n";
    } else {
      std::cout << product_text(pe) << "\n";
    }
    return 0;
  }

  if (cmd_act->parsed()) {
    const std::vector<Scalar> p = scalar_list_from_string(params);
    MonomialRep rep = [&]() {
      if (standard) {
        return standard_module(n, p);
      }
      if (family_id.empty()) {
        throw std::invalid_argument("pick --family <id> or --standard");
      }
      for (const Family& f : family_catalog(n)) {
        if (f.id == family_id) {
          return f.make(p);
        }
      }
      throw std::invalid_argument("unknown family '" + family_id + "'");
    }();
    SparseVector v = [&]() {
      if (!vector_json.empty()) {
        return SparseVector::from_json(nlohmann::json::parse(vector_json),
                                       rep.arity());
      }
      MultiIndex index(rep.arity(), 0);
      if (!basis_arg.empty()) {
        index.clear();
        std::istringstream in(basis_arg);
        std::string item;
        while (std::getline(in, item, ',')) {
          index.push_back(std::stol(item));
        }
      }
      return SparseVector::basis(index);
    }();
    const SparseVector result = act(rep, word_from_string(word_arg), v);
    if (json_out) {
      std::cout << result.to_json().dump() << "\n";
    } else {
      std::cout << result.to_string() << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    verify::Options options;
    options.box = box;
    options.sweep_len = sweep_len;
    options.samples = samples;
    options.seed = seed;
    options.budget = budget;
    const auto results = verify::run_all(n, options);
    bool ok = true;
    if (json_out) {
      std::cout << verify::report_json(results, options).dump(2) << "\n";
      for (const auto& r : results) {
        ok = ok && r.pass;
      }
    } else {
      for (const auto& r : results) {
        ok = ok && r.pass;
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.name
                  << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
      }
    }
    return ok ? 0 : 1;
  }

  if (cmd_catalog->parsed()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Family& f : family_catalog(n)) {
      if (json_out) {
        out.push_back({{"id", f.id},
                       {"rank", f.rank},
                       {"arity", f.arity},
                       {"params", f.param_count},
                       {"constraints", f.signature}});
      } else {
        std::cout << f.id << ": rank " << f.rank << ", arity " << f.arity
                  << ", " << f.param_count << " parameters (" << f.signature
                  << ")\n";
      }
    }
    if (json_out) {
      std::cout << out.dump() << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chinoid::ClassBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
