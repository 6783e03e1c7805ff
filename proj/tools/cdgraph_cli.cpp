// cdgraph: classify small graphs as character degree graphs of solvable groups.
//
// All machine output is JSON on stdout; diagnostics go to stderr.
// Exit codes: 0 success (whatever the verdict), 2 usage, 3 input parse,
// 4 knowledge base, 5 resource cap.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdgraph/admissibility.hpp"
#include "cdgraph/classifier.hpp"
#include "cdgraph/enumeration.hpp"
#include "cdgraph/errors.hpp"
#include "cdgraph/family.hpp"
#include "cdgraph/number_theory.hpp"

namespace {

using cdgraph::BigInt;
using cdgraph::Graph;
using cdgraph::KnowledgeBase;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 2, kInput = 3, kKb = 4, kCap = 5 };

struct GraphInput {
  std::string edges;
  std::string graph6;

  void attach(CLI::App* cmd) {
    auto* e = cmd->add_option("--edges", edges, "edge list, e.g. \"3; 0-1, 1-2\"");
    auto* g = cmd->add_option("--graph6", graph6, "graph6 string");
    e->excludes(g);
    g->excludes(e);
  }

  Graph read() const {
    if (!graph6.empty()) return cdgraph::parse_graph6(graph6);
    if (!edges.empty()) return cdgraph::parse_edge_list(edges);
    throw CLI::ValidationError("graph", "one of --edges or --graph6 is required");
  }
};

KnowledgeBase read_kb(const std::string& path) {
  return path.empty() ? KnowledgeBase{} : KnowledgeBase::load(path);
}

json graph_json(const Graph& g) {
  return json{{"graph6", cdgraph::format_graph6(g)}, {"edges", cdgraph::format_edge_list(g)}};
}

json classification_json(const cdgraph::Classification& c) {
  json prov = json::array();
  for (const auto& e : c.provenance) prov.push_back({{"rule", e.rule}, {"citation", e.citation}, {"detail", e.detail}});
  return json{{"status", cdgraph::to_string(c.status)}, {"provenance", prov}, {"explanation", cdgraph::explain(c)}};
}

json big_list(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const BigInt& x : xs) out.push_back(x.get_str());
  return out;
}

BigInt parse_big(const std::string& s, const char* name) {
  BigInt v;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || v.set_str(s, 10) != 0) {
    throw CLI::ValidationError(name, "expected a nonnegative decimal integer, got \"" + s + "\"");
  }
  return v;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify small graphs as character degree graphs of solvable groups"};
  app.require_subcommand(1);

  // classify
  GraphInput classify_in;
  std::string classify_kb;
  auto* classify = app.add_subcommand("classify", "three-valued verdict with provenance");
  classify_in.attach(classify);
  classify->add_option("--kb", classify_kb, "knowledge base (JSON lines)");

  // family
  int family_k = 0;
  bool family_bridge = false;
  auto* family = app.add_subcommand("family", "emit a forbidden-family graph");
  family->add_option("--k", family_k, "vertex count (>= 5)")->required();
  family->add_flag("--bridge", family_bridge, "include the q1-q2 edge");

  // admissible
  GraphInput adm_in;
  std::string adm_kb;
  int adm_vertex = -1;
  bool adm_strong = false;
  auto* admissible = app.add_subcommand("admissible", "admissible / strongly admissible verdict");
  adm_in.attach(admissible);
  admissible->add_option("--vertex", adm_vertex, "vertex index")->required();
  admissible->add_flag("--strong", adm_strong, "test strong admissibility");
  admissible->add_option("--kb", adm_kb, "knowledge base (JSON lines)");

  // zsigmondy
  std::string zs_a;
  std::uint64_t zs_n = 0;
  auto* zsig = app.add_subcommand("zsigmondy", "primitive prime divisors of a^n - 1");
  zsig->add_option("-a", zs_a, "base (>= 2)")->required();
  zsig->add_option("-n", zs_n, "exponent (>= 2)")->required();

  // quotient
  std::string qt_q;
  std::uint64_t qt_m = 0, qt_s = 0;
  auto* quotient = app.add_subcommand("quotient", "prime divisors of (q^m - 1)/(q^(m/s) - 1)");
  quotient->alias("lemma25");
  quotient->add_option("-q", qt_q, "base (>= 2)")->required();
  quotient->add_option("-m", qt_m, "exponent (>= 2)")->required();
  quotient->add_option("-s", qt_s, "prime dividing m")->required();

  // enumerate
  int en_n = 0;
  int en_max_n = cdgraph::kDefaultEnumerationCap;
  bool en_palfy_only = false;
  std::string en_kb, en_out;
  auto* enumerate = app.add_subcommand("enumerate", "classify every isomorphism class on n vertices");
  enumerate->add_option("-n", en_n, "vertex count")->required();
  enumerate->add_flag("--palfy-only", en_palfy_only, "classify only graphs satisfying Palfy's condition");
  enumerate->add_option("--kb", en_kb, "knowledge base (JSON lines)");
  enumerate->add_option("--out", en_out, "write the report here instead of stdout");
  enumerate->add_option("--max-n", en_max_n, "enumeration cap override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      const Graph g = classify_in.read();
      json out = graph_json(g);
      out.update(classification_json(cdgraph::classify(g, read_kb(classify_kb))));
      emit(out);
    } else if (*family) {
      json out{{"k", family_k}, {"bridge", family_bridge}};
      out.update(graph_json(cdgraph::family_graph(family_k, family_bridge)));
      emit(out);
    } else if (*admissible) {
      const Graph g = adm_in.read();
      const KnowledgeBase kb = read_kb(adm_kb);
      const cdgraph::Verdict v = adm_strong ? cdgraph::is_strongly_admissible(g, adm_vertex, kb)
                                            : cdgraph::is_admissible(g, adm_vertex, kb);
      json out = graph_json(g);
      out["vertex"] = adm_vertex;
      out["strong"] = adm_strong;
      out["verdict"] = cdgraph::to_string(v.value);
      if (v.blocking) {
        json b = graph_json(v.blocking->subgraph);
        b.update(classification_json(v.blocking->classification));
        out["blocking"] = b;
      } else {
        out["blocking"] = nullptr;
      }
      emit(out);
    } else if (*zsig) {
      const cdgraph::ZsigmondyResult r = cdgraph::zsigmondy(parse_big(zs_a, "-a"), zs_n);
      emit(json{{"a", r.base.get_str()},
                {"n", r.exponent},
                {"primitive_primes", big_list(r.primitive_primes)},
                {"exception", cdgraph::to_string(r.exception)}});
    } else if (*quotient) {
      const cdgraph::QuotientQuery qq{parse_big(qt_q, "-q"), qt_m, qt_s};
      const cdgraph::QuotientCheckResult r = cdgraph::check_quotient_primes(qq);
      json out{{"q", qq.q.get_str()}, {"m", qq.m}, {"s", qq.s}, {"value", cdgraph::quotient_value(qq).get_str()}};
      out["outcome"] = cdgraph::to_string(r.outcome);
      if (r.outcome == cdgraph::QuotientCheckOutcome::PreconditionViolated) out["violation"] = r.violation;
      // The outcome never needs the factorization; null marks a quotient
      // too hard to factor within budget.
      try {
        out["prime_divisors"] = big_list(cdgraph::quotient_prime_divisors(qq));
      } catch (const cdgraph::CapExceeded&) {
        out["prime_divisors"] = nullptr;
      }
      emit(out);
    } else if (*enumerate) {
      cdgraph::EnumerationOptions opts;
      opts.max_n = en_max_n;
      const std::string report =
          cdgraph::to_json(cdgraph::enumerate_classify(en_n, read_kb(en_kb), en_palfy_only, opts));
      if (en_out.empty()) {
        std::cout << report << '\n';
      } else {
        std::ofstream f(en_out);
        if (!(f << report << '\n')) {
          std::cerr << "error: cannot write " << en_out << '\n';
          return kUsage;
        }
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cdgraph::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const cdgraph::KnowledgeBaseError& e) {
    std::cerr << "knowledge base error: " << e.what() << '\n';
    return kKb;
  } catch (const cdgraph::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const cdgraph::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
