#include <set>

#include "doctest.h"
#include "mhopf/suites.hpp"

using namespace mhopf;

namespace {

SuiteConfig config(const std::string& suite, const std::string& instance, std::size_t samples = 30) {
  SuiteConfig c;
  c.suite = suite;
  c.instance = instance;
  c.seed = 5;
  c.samples = samples;
  return c;
}

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("registry") {
    std::set<std::string> names;
    for (const auto& s : suites()) names.insert(s.name);
    CHECK(names.size() == 13);
    for (const char* n : {"mha-axioms", "braid", "extended-modules", "comodule", "yd", "centre-equivalence", "gyd",
                          "t-category", "dcp", "double-correspondence", "module-algebra", "qt-coaction", "hq-monoidal"})
      CHECK(names.count(n) == 1);
    CHECK(canonical_suite("equivalence") == "centre-equivalence");
    CHECK_THROWS_AS(canonical_suite("nope"), UsageError);
    CHECK_THROWS_AS(run_suite(config("nope", "grp-S3")), UsageError);
    CHECK_THROWS_AS(run_suite(config("braid", "grp-S7")), UsageError);
    SuiteConfig f = config("braid", "grp-S3");
    f.field = "fp:6";
    CHECK_THROWS_AS(run_suite(f), UsageError);
  }

  TEST_CASE("reports are deterministic and independent of the kernel") {
    for (const char* suite : {"mha-axioms", "yd", "gyd"}) {
      SuiteConfig c = config(suite, "sweedler-H4");
      const std::string a = run_suite(c).to_json(false);
      CHECK(a == run_suite(c).to_json(false));
      c.exec = Exec::serial;
      CHECK(a == run_suite(c).to_json(false));
    }
  }

  TEST_CASE("controls fail where designated and carry witnesses") {
    for (const char* instance : {"grp-S3", "sweedler-H4"})
      for (const auto& s : suites()) {
        if (!s.has_controls) continue;
        SuiteConfig c = config(s.name, instance);
        c.controls = true;
        const Report r = run_suite(c);
        CHECK_MESSAGE(r.as_expected(), s.name, " on ", instance);
        for (const auto& l : r.laws)
          if (l.expect_fail) CHECK_MESSAGE(l.witness.has_value(), l.id);
      }
  }

  TEST_CASE("every suite passes on its fixtures") {
    for (const auto& s : suites()) {
      if (s.name == "hq-monoidal" || s.name == "t-category") continue;
      const Report r = run_suite(config(s.name, "grp-Z2", 20));
      CHECK_MESSAGE(r.as_expected(), s.name);
    }
  }
}
