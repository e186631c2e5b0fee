// Batch command-line interface: every library query as a subcommand, JSON or
// table output, plus the oracle self-test suites.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dualcat/json_io.hpp"
#include "dualcat/selftest.hpp"

using namespace dualcat;

namespace {

constexpr int kExitUsage = 2;   // malformed input / parse failure
constexpr int kExitInvalid = 3; // structural violation (d^2 != 0)

struct Session {
  std::string field_spec = "gf:7";
  std::uint64_t seed = 0;
  std::string output = "json";

  Field field() const {
    if (field_spec == "q" || field_spec == "Q") return Field::rationals();
    if (field_spec.rfind("gf:", 0) == 0) return Field::gf(std::stoull(field_spec.substr(3)));
    throw std::invalid_argument("--field must be q or gf:<prime>");
  }
  bool json() const { return output == "json"; }
};

XIndex parse_index(const std::string& s) {
  if (s == "inf") return XIndex::infinity();
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return XIndex::finite(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("index must be a positive integer or \"inf\", got: " + s);
  }
}

StabilityCondition parse_sigma(const std::string& s) {
  StabilityCondition out;
  if (std::sscanf(s.c_str(), "%d,%lf,%lf", &out.h, &out.mass, &out.phi) != 3)
    throw std::invalid_argument("expected h,mass,phi, got: " + s);
  if (out.mass <= 0 || out.phi <= 0 || out.phi > 1)
    throw std::invalid_argument("need mass > 0 and phi in (0, 1]");
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void emit(const Session& s, const Json& j, const std::string& table_text) {
  if (s.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table_text << "\n";
}

std::string describe_formal(const FormalObject& o) { return o.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in the homotopy category of perfect complexes over the dual numbers"};
  app.require_subcommand(1);
  Session session;
  app.add_option("--field", session.field_spec, "base field: q or gf:<prime>")->capture_default_str();
  app.add_option("--seed", session.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--output", session.output, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  // hom
  std::string hom_i, hom_j;
  int hom_alpha = 0;
  bool hom_brute = false;
  auto* cmd_hom = app.add_subcommand("hom", "dimension and generators of hom(X_i, X_j[alpha])");
  cmd_hom->add_option("i", hom_i)->required();
  cmd_hom->add_option("j", hom_j)->required();
  cmd_hom->add_option("alpha", hom_alpha)->required();
  cmd_hom->add_flag("--brute", hom_brute, "cross-check against the brute-force solver");

  // decompose
  std::string decompose_file;
  auto* cmd_decompose = app.add_subcommand("decompose", "Krull-Schmidt decomposition of a complex");
  cmd_decompose->add_option("file", decompose_file, "complex JSON file")->required();

  // compose
  std::string compose_g, compose_f;
  auto* cmd_compose = app.add_subcommand("compose", "compose two symbolic morphisms (g after f)");
  cmd_compose->add_option("g", compose_g, "outer morphism JSON file")->required();
  cmd_compose->add_option("f", compose_f, "inner morphism JSON file")->required();

  // cone
  std::string cone_kind = "one", cone_i, cone_j;
  int cone_alpha = 0;
  std::string cone_coeff = "1";
  auto* cmd_cone = app.add_subcommand("cone", "decomposition of the cone of a generator");
  cmd_cone->add_option("--kind", cone_kind)->check(CLI::IsMember({"one", "eps"}));
  cmd_cone->add_option("--i", cone_i)->required();
  cmd_cone->add_option("--j", cone_j)->required();
  cmd_cone->add_option("--alpha", cone_alpha)->required();
  cmd_cone->add_option("--coeff", cone_coeff, "nonzero scalar in the session field");

  // hn
  std::string hn_sigma = "0,1,1", hn_file;
  auto* cmd_hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a formal object");
  cmd_hn->add_option("--sigma", hn_sigma, "stability condition h,mass,phi");
  cmd_hn->add_option("file", hn_file, "formal object JSON file")->required();

  // stab
  auto* cmd_stab = app.add_subcommand("stab", "stability manifold: chart, action, witness");
  cmd_stab->require_subcommand(1);
  std::string stab_sigma = "0,1,1", stab_from = "0,1,1", stab_to = "0,1,1";
  double stab_kappa = 1.0, stab_theta = 0.0;
  auto* stab_chart = cmd_stab->add_subcommand("chart", "chart to the universal cover of C^*");
  stab_chart->add_option("--sigma", stab_sigma);
  auto* stab_act = cmd_stab->add_subcommand("act", "apply a rotation-scaling element");
  stab_act->add_option("--sigma", stab_sigma);
  stab_act->add_option("--kappa", stab_kappa)->required();
  stab_act->add_option("--theta", stab_theta)->required();
  auto* stab_witness = cmd_stab->add_subcommand("witness", "unique element mapping one condition to another");
  stab_witness->add_option("--from", stab_from)->required();
  stab_witness->add_option("--to", stab_to)->required();

  // functor
  auto* cmd_functor = app.add_subcommand("functor", "coefficient functors: check, normalize, exactness");
  cmd_functor->require_subcommand(1);
  std::string functor_file, functor_lambda = "1";
  auto* functor_check = cmd_functor->add_subcommand("check", "functoriality and relations R1-R5");
  functor_check->add_option("file", functor_file, "coefficient assignment JSON file")->required();
  auto* functor_normalize = cmd_functor->add_subcommand("normalize", "canonical (h, mu, phi, lambda) form");
  functor_normalize->add_option("file", functor_file)->required();
  auto* functor_exact = cmd_functor->add_subcommand("exact", "exactness of the canonical lambda functor");
  functor_exact->add_option("--lambda", functor_lambda)->required();

  // silting
  int silting_imax = 5, silting_hmax = 4;
  auto* cmd_silting = app.add_subcommand("silting", "silting search and the co-stability certificate");
  cmd_silting->add_option("--imax", silting_imax)->capture_default_str();
  cmd_silting->add_option("--hmax", silting_hmax)->capture_default_str();

  // selftest
  std::string selftest_suite = "all";
  auto* cmd_selftest = app.add_subcommand("selftest", "run the oracle suites");
  cmd_selftest->add_option("suite", selftest_suite, "suite name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    Field field = session.field();

    if (cmd_hom->parsed()) {
      XIndex i = parse_index(hom_i), j = parse_index(hom_j);
      HomDescriptor d = hom_table(i, j, hom_alpha);
      Json out = to_json(d);
      out["i"] = to_json(i);
      out["j"] = to_json(j);
      out["alpha"] = hom_alpha;
      std::string table = "hom(X_" + i.str() + ", X_" + j.str() + "[" + std::to_string(hom_alpha) +
                          "]): dim " + std::to_string(d.dim());
      if (d.has_one) table += ", 1-type generator";
      if (d.has_eps) table += ", eps-type generator";
      if (hom_brute) {
        std::size_t brute;
        if (i.is_infinite() || j.is_infinite())
          brute = hom_infty(field, i, j, hom_alpha, hom_infty_bound(j, hom_alpha));
        else
          brute = hom_bruteforce(FreeComplex::x_i(field, i.value()),
                                 FreeComplex::x_i(field, j.value(), hom_alpha))
                      .dim;
        out["brute"] = brute;
        out["match"] = brute == static_cast<std::size_t>(d.dim());
        table += "; brute " + std::to_string(brute) +
                 (brute == static_cast<std::size_t>(d.dim()) ? " (match)" : " (MISMATCH)");
      }
      emit(session, out, table);
      return 0;
    }

    if (cmd_decompose->parsed()) {
      FreeComplex c = free_complex_from_json(field, load_json(decompose_file));
      if (auto v = c.validate()) {
        std::cerr << "invalid complex: " << v->message << "\n";
        return kExitInvalid;
      }
      FormalObject obj = barcode(c);
      emit(session, to_json(obj), describe_formal(obj));
      return 0;
    }

    if (cmd_compose->parsed()) {
      SymMorphism g = sym_from_json(field, load_json(compose_g));
      SymMorphism f = sym_from_json(field, load_json(compose_f));
      SymMorphism gf = compose_sym(g, f);
      emit(session, to_json(gf),
           "composite: " + gf.source().str() + " -> " + gf.target().str());
      return 0;
    }

    if (cmd_cone->parsed()) {
      GeneratorRef g{parse_index(cone_i), 0, parse_index(cone_j), cone_alpha,
                     cone_kind == "one" ? GenKind::One : GenKind::Eps};
      FormalObject obj = cone_symbolic(g, field.parse(cone_coeff));
      emit(session, to_json(obj), "cone(" + g.str() + ") = " + describe_formal(obj));
      return 0;
    }

    if (cmd_hn->parsed()) {
      StabilityCondition s = parse_sigma(hn_sigma);
      FormalObject obj = formal_object_from_json(load_json(hn_file));
      auto factors = hn_filtration(s, obj);
      std::string table;
      for (auto& fct : factors)
        table += "phase " + std::to_string(fct.phase) + ": " + fct.object.str() + "\n";
      emit(session, to_json(factors), table.empty() ? "zero object" : table);
      return 0;
    }

    if (stab_chart->parsed()) {
      StabilityCondition s = parse_sigma(stab_sigma);
      std::complex<double> z = chart(s);
      emit(session, Json{{"re", z.real()}, {"im", z.imag()}},
           "z = " + std::to_string(z.real()) + " + " + std::to_string(z.imag()) + " i");
      return 0;
    }
    if (stab_act->parsed()) {
      StabilityCondition s = act(GroupElem{stab_kappa, stab_theta}, parse_sigma(stab_sigma));
      emit(session, to_json(s),
           "h = " + std::to_string(s.h) + ", mass = " + std::to_string(s.mass) +
               ", phi = " + std::to_string(s.phi));
      return 0;
    }
    if (stab_witness->parsed()) {
      GroupElem g = transitivity_witness(parse_sigma(stab_from), parse_sigma(stab_to));
      emit(session, to_json(g),
           "kappa = " + std::to_string(g.kappa) + ", theta = " + std::to_string(g.theta));
      return 0;
    }

    if (functor_check->parsed()) {
      CoeffAssignment c = coeffs_from_json(field, load_json(functor_file));
      auto violations = check_functorial(c);
      RelationReport rel = check_relations(c);
      Json vj = Json::array();
      for (auto& v : violations) vj.push_back(v.str());
      Json rj = Json::array();
      for (auto& inst : rel.instances)
        if (!inst.pass) rj.push_back("R" + std::to_string(inst.relation) + ": " + inst.description);
      Json out{{"functorial", violations.empty()},
               {"violations", std::move(vj)},
               {"relations_checked", rel.instances.size()},
               {"relation_failures", std::move(rj)}};
      emit(session, out,
           violations.empty() && rel.all_pass()
               ? "ok: functorial, all relation instances hold"
               : "violations: " + std::to_string(violations.size()) +
                     ", relation failures: " + std::to_string(rel.failures));
      return 0;
    }
    if (functor_normalize->parsed()) {
      CoeffAssignment c = coeffs_from_json(field, load_json(functor_file));
      Normalization n = normalize(c);
      Json phis = Json::array();
      for (auto& p : n.phi) phis.push_back(p.str());
      Json out{{"shift", n.shift},
               {"mu", n.mu.str()},
               {"phi", std::move(phis)},
               {"lambda", n.lambda.str()},
               {"normalized", to_json(n.normalized)}};
      emit(session, out,
           "shift " + std::to_string(n.shift) + ", mu " + n.mu.str() + ", lambda " + n.lambda.str());
      return 0;
    }
    if (functor_exact->parsed()) {
      FieldElem lambda = field.parse(functor_lambda);
      bool exact = is_exact(LambdaFunctor(field, lambda));
      emit(session, Json{{"lambda", lambda.str()}, {"exact", exact}},
           std::string("lambda = ") + lambda.str() + ": " + (exact ? "exact" : "not exact"));
      return 0;
    }

    if (cmd_silting->parsed()) {
      SiltingReport rep = silting_search(silting_imax, silting_hmax);
      emit(session, to_json(rep),
           "maximal silting subsets: " + std::to_string(rep.maximal_silting.size()) +
               "; generating silting subsets: " + (rep.generating_silting_exists ? "FOUND" : "none") +
               "\n" + rep.certificate);
      return 0;
    }

    if (cmd_selftest->parsed()) {
      std::vector<SuiteResult> results;
      if (selftest_suite == "all")
        results = run_all_suites(session.seed);
      else
        results.push_back(run_suite(selftest_suite, session.seed));
      bool all = true;
      Json arr = Json::array();
      for (auto& r : results) {
        all = all && r.pass;
        arr.push_back(Json{{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!session.json())
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
      }
      if (session.json()) std::cout << Json{{"seed", session.seed}, {"suites", arr}}.dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
