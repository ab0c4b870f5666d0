#include "mhopf/suites.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "json.hpp"
#include "mhopf/dcp.hpp"
#include "mhopf/gyd.hpp"
#include "mhopf/instances.hpp"
#include "mhopf/mha_laws.hpp"
#include "mhopf/yd.hpp"
#include "mhopf/yd_algebras.hpp"

namespace mhopf {

namespace {

using Body = std::function<void(LawRunner&)>;

// Runs a negative control: laws in `must` are expected to fail with a
// witness, laws in `may` are collateral, every other law has to pass.
void control(LawRunner& run, const std::string& name, const std::set<std::string>& must,
             const std::set<std::string>& may, const Body& body) {
  auto& laws = run.report().laws;
  const std::size_t start = laws.size();
  body(run);
  std::set<std::string> missing = must;
  for (std::size_t i = start; i < laws.size(); ++i) {
    laws[i].expect_fail = must.count(laws[i].id) > 0;
    laws[i].may_fail = may.count(laws[i].id) > 0;
    missing.erase(laws[i].id);
    laws[i].id = "control:" + name + "/" + laws[i].id;
  }
  if (!missing.empty())
    run.fact("control:" + name + "/designated-laws-ran", "every designated law of the control is evaluated",
             [&] { return std::optional<Witness>(Witness{}.add("missing", *missing.begin())); });
}

// The broken coaction v (x) aa (or v (x) S(a)) is not even linear in a.
const std::set<std::string> broken_coaction_collateral{
    "coaction-right-linear", "coaction-left-linear", "coaction-two-sided", "coaction-counit",
    "yd-compatible",         "yd-compatible-alt",    "gyd-compatible"};

bool broken_coaction(const std::string& name) { return name == "squared-coaction" || name == "antipode-coaction"; }

void no_controls(LawRunner& run) {
  run.report().notes.push_back("no negative control registered for this suite and instance");
}

void guarded(LawRunner& run, const std::string& what, const Body& body) {
  try {
    body(run);
  } catch (const HypothesisError& e) {
    run.report().notes.push_back("outside the hypothesis classes: " + what + ": " + e.what());
  }
}

bool antipode_is_identity(const MultiplierHopfAlgebra& A) {
  auto b = A.basis();
  if (!b) return false;
  for (Atom a : *b)
    if (!(A.antipode(a) == leg(a))) return false;
  return true;
}

void mha_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (!controls) return mha_axiom_laws(run, *A);
  if (antipode_is_identity(*A)) {
    run.report().notes.push_back("antipode is the identity on " + A->name() + "; no wrong-antipode control");
    return;
  }
  // T_k^-1 and the antipode consequences are built on S.
  control(run, "identity-antipode", {"antipode-left", "antipode-right"},
          {"T1-roundtrip", "T2-roundtrip", "T3-roundtrip", "T4-roundtrip", "script-t-T2", "antipode-antimultiplicative"},
          [&](LawRunner& r) { mha_axiom_laws(r, *with_identity_antipode(A)); });
}

void braid_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (!controls) return braid_laws(run, *A);
  no_controls(run);
}

std::vector<Module> extended_carriers(const HopfPtr& A) {
  std::vector<Module> out{regular_module(A), trivial_module(A)};
  for (const auto& V : yd_fixtures(A)) {
    Module M = V.module;
    M.name = V.name;
    out.push_back(M);
  }
  return out;
}

void extended_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    no_controls(run);
    return;
  }
  const auto carriers = extended_carriers(A);
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    const Module& X = carriers[i];
    const std::string p = (i == 0 ? std::string("regular") : i == 1 ? std::string("trivial") : X.name) + "/";
    module_laws(run, p, X);
    extended_module_laws(run, p, X);
  }
  for (const auto& V : yd_fixtures(A)) extended_coaction_laws(run, V.name + "/", V.module, V.coaction);
}

void comodule_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (!controls) {
    for (const auto& V : yd_fixtures(A)) comodule_laws(run, V.name + "/", V.module, V.coaction);
    return;
  }
  for (const auto& V : yd_controls(A)) {
    if (V.name == "regular-grouplike") continue;  // a valid comodule; its YD compatibility is what fails
    control(run, V.name, {"coaction-coassociative"}, broken_coaction_collateral,
            [&](LawRunner& r) { comodule_laws(r, "", V.module, V.coaction); });
  }
}

void yd_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    for (const auto& V : yd_controls(A)) {
      if (broken_coaction(V.name))
        control(run, V.name, {"coaction-coassociative"}, broken_coaction_collateral,
                [&](LawRunner& r) { yd_laws(r, "", V); });
      else
        control(run, V.name, {"yd-compatible", "yd-compatible-alt"}, {}, [&](LawRunner& r) { yd_laws(r, "", V); });
    }
    return;
  }
  const auto fx = yd_fixtures(A);
  const Module reg = regular_module(A);
  for (const auto& V : fx) yd_laws(run, V.name + "/", V);
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const YDModule& V = fx[i];
    const YDModule& W = fx[(i + 1) % fx.size()];
    yd_laws(run, V.name + "(x)" + W.name + "/", yd_tensor(V, W));
    braiding_laws(run, "C[A;" + V.name + "," + W.name + "]/", reg, V, &W);
    for (const auto& X : fx)
      if (&X != &V) braiding_laws(run, "C[" + X.name + ";" + V.name + "]/", X.module, V, nullptr);
  }
}

void equivalence_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    no_controls(run);
    return;
  }
  for (const auto& V : yd_fixtures(A)) {
    guarded(run, V.name, [&](LawRunner& r) {
      half_braiding_laws(r, "G(" + V.name + ")/", functor_g(V));
      equivalence_laws(r, V.name + "/", V);
    });
  }
  for (const auto& H : half_braiding_fixtures(A)) {
    guarded(run, H.name, [&](LawRunner& r) {
      half_braiding_laws(r, "centre:" + H.name + "/", H);
      equivalence_laws(r, "centre:" + H.name + "/", H);
      yd_laws(r, "F(" + H.name + ")/", functor_f(H));
    });
  }
}

void gyd_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    for (const auto& V : gyd_controls(A)) {
      if (broken_coaction(V.name))
        control(run, V.name, {"coaction-coassociative"}, broken_coaction_collateral,
                [&](LawRunner& r) { gyd_laws(r, "", V); });
      else
        control(run, V.name, {"gyd-compatible"}, {}, [&](LawRunner& r) { gyd_laws(r, "", V); });
    }
    return;
  }
  for (const auto& V : gyd_fixtures(A)) gyd_laws(run, V.name + " " + V.pair.name() + "/", V);
}

void t_category_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    no_controls(run);
    return;
  }
  pair_group_laws(run, A);
  t_category_laws(run, gyd_fixtures(A));
}

bool finite_unital(const MultiplierHopfAlgebra& A) { return A.basis().has_value() && A.unit().has_value(); }

void dcp_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls || !finite_unital(*A)) {
    run.report().notes.push_back(controls ? "no negative control registered for this suite and instance"
                                          : "crossed products need a finite-dimensional unital instance");
    return;
  }
  dcp_laws(run, A);
}

void correspondence_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls || !finite_unital(*A)) {
    run.report().notes.push_back(controls ? "no negative control registered for this suite and instance"
                                          : "the correspondence needs a finite-dimensional unital instance");
    return;
  }
  correspondence_laws(run, A);
}

void module_algebra_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    for (const auto& M : module_algebra_controls(A))
      control(run, M.name, {"module-algebra-multiplicative"},
              {"module-algebra-left-extension", "module-algebra-right-extension", "module-algebra-unit"}, [&](LawRunner& r) { module_algebra_laws(r, "", M); });
    for (const auto& C : comodule_algebra_controls(A))
      control(run, C.name, {"comodule-algebra-multiplicative"}, {},
              [&](LawRunner& r) { comodule_algebra_laws(r, "", C); });
    return;
  }
  for (const auto& M : module_algebra_fixtures(A)) module_algebra_laws(run, "module:" + M.name + "/", M);
  for (const auto& C : comodule_algebra_fixtures(A)) comodule_algebra_laws(run, "comodule:" + C.name + "/", C);
  for (const auto& H : yd_algebra_fixtures(A)) {
    yd_module_algebra_laws(run, "yd:" + H.name + "/", H);
    // A-commutativity is a property of some fixtures only; it is reported, not required.
    auto b = H.R->basis();
    if (!b) continue;
    bool commutative = true;
    for (Atom x : *b)
      for (Atom y : *b)
        if (commutative && a_commutative_at(H, leg(x), leg(y))) commutative = false;
    run.report().notes.push_back("yd:" + H.name + (commutative ? " is" : " is not") + " A-commutative");
  }
}

void qt_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    no_controls(run);
    return;
  }
  const auto qts = qt_structures(A);
  if (qts.empty()) run.report().notes.push_back("no quasitriangular structure registered for " + A->name());
  for (const auto& qt : qts) {
    for (const auto& c : qt_axioms(*A, qt)) run.fact(qt.name + "/" + c.id, c.formula, c.run);
    for (const auto& M : module_algebra_fixtures(A)) {
      const std::string p = qt.name + "/" + M.name + "/";
      yd_module_algebra_laws(run, p, qt_yd_algebra(M, qt));
      qt_braiding_law(run, p + "qt-braiding", regular_module(A), M.action, qt);
    }
  }
}

void hq_suite(LawRunner& run, const HopfPtr& A, bool controls) {
  if (controls) {
    for (const auto& M : hq_controls(A))
      control(run, M.name, {"hq-H-module", "hq-unit"}, {}, [&](LawRunner& r) { hq_laws(r, "", M); });
    return;
  }
  const auto H = hq_algebra(A);
  a_commutative_law(run, "H-a-commutative", *H);
  const auto objects = hq_fixtures(A);
  for (const auto& M : objects) {
    hq_laws(run, M.name + "/", M);
    bimodule_law(run, M.name + "/bimodule", M);
  }
  for (const auto& M : objects)
    for (const auto& N : objects) relator_stability_law(run, "relators[" + M.name + "," + N.name + "]", M, N);
  hq_monoidal_laws(run, objects);
  smash_laws(run, A);
}

struct Suite {
  SuiteInfo info;
  std::function<void(LawRunner&, const HopfPtr&, bool)> body;
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> r{
      {{"mha-axioms", "multiplier Hopf algebra axioms through the slices T1..T4", true}, mha_suite},
      {{"braid", "braid equations for T and T', inverses and flip specializations", false}, braid_suite},
      {{"extended-modules", "unital modules, extension to M(A), extended elements", false}, extended_suite},
      {{"comodule", "coactions: linearity, sliced coassociativity, counit", true}, comodule_suite},
      {{"yd", "Yetter-Drinfeld compatibility, tensor products, braiding", true}, yd_suite},
      {{"centre-equivalence", "functors between YD modules and the centre", false}, equivalence_suite},
      {{"gyd", "generalized YD modules at automorphism pairs", true}, gyd_suite},
      {{"t-category", "pair group, tensor, crossing and braiding", false}, t_category_suite},
      {{"dcp", "diagonal crossed products and the Drinfeld double", false}, dcp_suite},
      {{"double-correspondence", "YD modules against crossed-product modules", false}, correspondence_suite},
      {{"module-algebra", "module, comodule and YD module algebras", true}, module_algebra_suite},
      {{"qt-coaction", "coactions induced by quasitriangular structures", false}, qt_suite},
      {{"hq-monoidal", "H-modules in the YD category and their tensor product", true}, hq_suite},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& s : registry()) v.push_back(s.info);
    return v;
  }();
  return out;
}

std::string canonical_suite(const std::string& name) {
  if (name == "equivalence") return "centre-equivalence";
  for (const auto& s : registry())
    if (s.info.name == name) return name;
  throw UsageError("unknown suite: " + name);
}

Report run_suite(const SuiteConfig& cfg) {
  const std::string name = canonical_suite(cfg.suite);
  if (cfg.samples == 0) throw UsageError("--samples must be positive");
  Field field = Field::rationals();
  HopfPtr A;
  try {
    field = Field::parse(cfg.field);
    A = make_instance(cfg.instance, field);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report report;
  report.suite = name + (cfg.controls ? " (controls)" : "");
  report.instance = cfg.instance;
  report.field = field.name();
  report.seed = cfg.seed;
  report.samples = cfg.samples;
  LawRunner run(report, cfg.exec);
  for (const auto& s : registry())
    if (s.info.name == name) s.body(run, A, cfg.controls);
  if (cfg.controls && report.laws.empty() && report.notes.empty()) no_controls(run);
  return report;
}

std::string dcp_table_json(const std::string& instance, const std::string& field, const std::string& pair) {
  HopfPtr A;
  AutoPair p;
  try {
    A = make_instance(instance, Field::parse(field));
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw UsageError("--pair expects alpha,beta");
    p = make_pair(A, pair.substr(0, comma), pair.substr(comma + 1));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!finite_unital(*A)) throw UsageError(instance + ": crossed products need a finite-dimensional unital instance");
  const CrossedProduct D(A, p);
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["algebra"] = D.name();
  j["instance"] = instance;
  j["field"] = A->field().name();
  j["pair"] = p.name();
  const auto atoms = D.basis().value();
  auto names = nlohmann::ordered_json::array();
  for (Atom x : atoms) names.push_back(D.atom_name(x));
  j["basis"] = std::move(names);
  j["unit"] = D.unit()->str();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : D.table()) {
    auto r = nlohmann::ordered_json::array();
    for (const Vec& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace mhopf
