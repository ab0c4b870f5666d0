// Acceptance run: one line per criterion, exit 0 iff every criterion holds.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mhopf/suites.hpp"

using namespace mhopf;

namespace {

const std::vector<std::string> kInstances = {"fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "sweedler-H4"};

struct Outcome {
  bool pass = true;
  std::size_t laws = 0;
  std::size_t checked = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Report run(const std::string& suite, const std::string& instance, std::size_t samples, const std::string& field = "rational",
           bool controls = false) {
  SuiteConfig c;
  c.suite = suite;
  c.instance = instance;
  c.field = field;
  c.seed = 1;
  c.samples = samples;
  c.controls = controls;
  return run_suite(c);
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::string leaf(const std::string& id) {
  const auto k = id.rfind('/');
  return k == std::string::npos ? id : id.substr(k + 1);
}

// Every selected law passes; at least `min_laws` were selected.
void require(Outcome& o, const Report& r, const std::string& where, const std::function<bool(const LawResult&)>& select,
             std::size_t min_laws = 1) {
  std::size_t n = 0;
  for (const auto& l : r.laws) {
    if (!select(l)) continue;
    ++n;
    o.checked += l.checked;
    if (!l.pass) o.fail(where + ": " + l.id);
  }
  o.laws += n;
  if (n < min_laws) o.fail(where + ": expected laws missing");
}

bool any(const LawResult&) { return true; }

Outcome c1() {
  Outcome o;
  for (const auto& i : kInstances) require(o, run("mha-axioms", i, 200), i, any, 10);
  return o;
}

Outcome c2() {
  Outcome o;
  for (const auto& i : kInstances) {
    const Report r = run("braid", i, 200);
    require(o, r, i, [](const LawResult& l) { return l.id.rfind("braid-", 0) == 0; }, 2);
    require(o, r, i, any);
  }
  require(o, run("braid", "grp-S3", 200), "grp-S3", [](const LawResult& l) { return l.id == "script-t-flip"; });
  for (const char* i : {"fun-Z", "fun-Dinf"})
    require(o, run("braid", i, 200), i, [](const LawResult& l) { return l.id == "script-t-prime-flip"; });
  return o;
}

Outcome c3() {
  Outcome o;
  for (const auto& i : kInstances) {
    const Report r = run("mha-axioms", i, 200);
    require(o, r, i, [](const LawResult& l) { return l.id == "script-t-T2"; });
    require(o, r, i, [](const LawResult& l) { return ends_with(l.id, "-roundtrip"); }, 4);
    require(o, run("braid", i, 200), i, [](const LawResult& l) { return ends_with(l.id, "-roundtrip"); }, 2);
  }
  return o;
}

Outcome c4() {
  Outcome o;
  for (const auto& i : kInstances) {
    const Report r = run("centre-equivalence", i, 100);
    std::set<std::string> fixtures;
    for (const auto& l : r.laws)
      if (ends_with(l.id, "/FG-action")) fixtures.insert(l.id.substr(0, l.id.size() - 10));
    if (fixtures.size() < 3) o.fail(i + ": fewer than 3 fixtures");
    require(o, r, i, [](const LawResult& l) {
      const std::string f = leaf(l.id);
      return f == "FG-action" || f == "FG-coaction" || f == "GFG-component" || f == "GF-component";
    }, 9);
    require(o, r, i, any);
  }
  return o;
}

Outcome c5() {
  Outcome o;
  for (const auto& i : kInstances)
    require(o, run("yd", i, 100), i, [](const LawResult& l) {
      const std::string f = leaf(l.id);
      return f.rfind("hexagon-", 0) == 0 || f.rfind("braid-", 0) == 0;
    }, 5);
  return o;
}

Outcome c6() {
  Outcome o;
  for (const char* i : {"grp-S3", "sweedler-H4"}) {
    const Report r = run("t-category", i, 100);
    for (const char* id : {"t-tensor", "t-crossed", "t-crossed-functorial", "t-braiding-linear"})
      require(o, r, i, [id](const LawResult& l) { return leaf(l.id) == id; });
    require(o, r, i, any);
  }
  return o;
}

Outcome c7() {
  Outcome o;
  for (const char* i : {"grp-Z2", "grp-S3", "sweedler-H4"}) {
    const Report d = run("dcp", i, 100);
    require(o, d, i, [](const LawResult& l) { return l.id == "integrals"; });
    require(o, d, i, [](const LawResult& l) { return l.id.rfind("dcp-associative@", 0) == 0; });
    require(o, d, i, [](const LawResult& l) { return l.id == "dcp-associative@(id, id)"; });
    require(o, d, i, any);
    const Report c = run("double-correspondence", i, 100);
    require(o, c, i, [](const LawResult& l) { return leaf(l.id) == "yd-dcp-yd"; });
    require(o, c, i, [](const LawResult& l) { return leaf(l.id) == "dcp-yd-dcp"; });
    require(o, c, i, any);
  }
  return o;
}

Outcome c8() {
  Outcome o;
  const Report q = run("qt-coaction", "grp-Z2", 100, "fp:5");
  require(o, q, "qt", [](const LawResult& l) { return l.id.find("qt") != std::string::npos; });
  require(o, q, "qt", any, 5);
  const Report h = run("hq-monoidal", "grp-Z2", 100, "fp:5");
  for (const char* id : {"hq-H-module", "relators[", "hq-unit", "hq-associator"})
    require(o, h, "hq", [id](const LawResult& l) { return l.id.find(id) != std::string::npos; });
  require(o, h, "hq", any);
  return o;
}

Outcome c9() {
  Outcome o;
  // Designated law -> (suite, instance) of the control that must trip it.
  const std::vector<std::tuple<std::string, std::string, std::string>> required = {
      {"mha-axioms", "sweedler-H4", "antipode-left"},
      {"comodule", "grp-S3", "coaction-coassociative"},
      {"module-algebra", "grp-S3", "comodule-algebra-multiplicative"},
      {"yd", "grp-S3", "yd-compatible"},
  };
  std::set<std::string> seen;
  for (const auto& i : kInstances)
    for (const auto& s : suites()) {
      if (!s.has_controls) continue;
      const Report r = run(s.name, i, 50, "rational", true);
      for (const auto& l : r.laws) {
        ++o.laws;
        o.checked += l.checked;
        if (!l.as_expected()) o.fail(s.name + " on " + i + ": " + l.id);
        if (l.expect_fail && !l.pass && l.witness && !l.witness->items.empty()) seen.insert(s.name + "|" + i + "|" + leaf(l.id));
      }
    }
  for (const auto& [suite, instance, law] : required)
    if (!seen.count(suite + "|" + instance + "|" + law)) o.fail("no witness: " + suite + " " + law + " on " + instance);
  return o;
}

Outcome c10() {
  Outcome o;
  for (const auto& s : suites())
    for (const char* i : {"grp-Z2", "sweedler-H4"}) {
      if (s.name == "hq-monoidal" && std::string(i) == "sweedler-H4") continue;
      SuiteConfig c;
      c.suite = s.name;
      c.instance = i;
      c.seed = 99;
      c.samples = 20;
      const std::string a = run_suite(c).to_json();
      ++o.laws;
      o.checked += 3;
      if (a != run_suite(c).to_json()) o.fail(s.name + " on " + i + ": rerun differs");
      c.exec = Exec::serial;
      if (a != run_suite(c).to_json()) o.fail(s.name + " on " + i + ": serial differs");
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;  // 0: none
    Outcome (*body)();
  };
  const Criterion all[] = {
      {"1 multiplier Hopf axioms, 5 instances, 200 samples", 10, c1},
      {"2 braid equations and flip specializations", 15, c2},
      {"3 script-T o T2 = T4 and all round trips", 0, c3},
      {"4 centre equivalence FG = 1, GF = 1", 30, c4},
      {"5 braided-category laws on YD modules", 0, c5},
      {"6 T-category: tensor, crossing, braiding", 0, c6},
      {"7 integrals, crossed products, correspondence", 60, c7},
      {"8 QT pipeline over F5 and tensor over H", 30, c8},
      {"9 negative controls", 0, c9},
      {"10 byte-identical reruns", 0, c10},
  };
  bool ok = true;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) o.fail("over time limit");
    ok = ok && o.pass;
    std::printf("%s  %-50s checks=%zu samples=%zu tol=exact time=%.2fs", o.pass ? "PASS" : "FAIL", c.name, o.laws, o.checked, s);
    if (c.limit_s > 0) std::printf(" limit=%.0fs", c.limit_s);
    if (!o.detail.empty()) std::printf("  [%s]", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
