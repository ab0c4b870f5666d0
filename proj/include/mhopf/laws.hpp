#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhopf/algebra.hpp"

namespace mhopf {

/// Named elements that exhibit a law failure, rendered canonically.
struct Witness {
  std::vector<std::pair<std::string, std::string>> items;

  Witness& add(std::string name, const Vec& v) {
    items.emplace_back(std::move(name), v.str());
    return *this;
  }
  Witness& add(std::string name, std::string text) {
    items.emplace_back(std::move(name), std::move(text));
    return *this;
  }
};

/// Evaluates sample i; returns a witness when the law fails on it.
using Probe = std::function<std::optional<Witness>(std::size_t)>;

enum class Exec { serial, parallel };

struct KernelResult {
  std::size_t checked = 0;  // samples evaluated up to and including the first failure
  std::optional<std::size_t> failed_at;
  std::optional<Witness> witness;
};

/// Reference loop: stops at the first failing sample.
KernelResult first_failure_serial(std::size_t n, const Probe& probe);
/// OpenMP loop over all samples; reports the lowest failing index, so the
/// result is identical to the serial loop.
KernelResult first_failure_parallel(std::size_t n, const Probe& probe);
KernelResult first_failure(Exec exec, std::size_t n, const Probe& probe);

/// Outcome of one law over its sample set.
struct LawResult {
  std::string id;
  std::string formula;
  bool pass = false;
  std::size_t checked = 0;
  std::optional<Witness> witness;
  double elapsed_ms = 0;
  bool expect_fail = false;  // designated law of a negative control
  bool may_fail = false;     // collateral law of a negative control

  bool as_expected() const {
    if (expect_fail) return !pass && witness.has_value();
    return pass || may_fail;
  }
};

struct Report {
  std::string suite;
  std::string instance;
  std::string field;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<LawResult> laws;
  std::vector<std::string> notes;

  bool all_pass() const;
  /// Every law passes, except designated control laws, which fail with a
  /// witness, and collateral control laws, which may go either way.
  bool as_expected() const;
  const LawResult* find(const std::string& id) const;
  /// JSON text, schema 1. Elapsed times only with `timings`, so that two
  /// runs of one configuration produce identical bytes by default.
  std::string to_json(bool timings = false) const;
};

/// Appends laws to a report. Each sample i of law `id` draws from its own
/// stream Rng::stream(seed, id + "#" + i), so results do not depend on the
/// execution order.
class LawRunner {
public:
  LawRunner(Report& report, Exec exec) : report_(report), exec_(exec) {}

  using SampleProbe = std::function<std::optional<Witness>(Rng&, std::size_t)>;

  const LawResult& law(const std::string& id, const std::string& formula, std::size_t n, const SampleProbe& probe);
  /// Single-shot law for checks that are not sampled.
  const LawResult& fact(const std::string& id, const std::string& formula, const std::function<std::optional<Witness>()>& check);

  std::uint64_t seed() const { return report_.seed; }
  std::size_t samples() const { return report_.samples; }
  Exec exec() const { return exec_; }
  Report& report() { return report_; }

private:
  Report& report_;
  Exec exec_;
};

/// Witness for `lhs == rhs`, or nothing when they agree.
std::optional<Witness> expect_equal(const Vec& lhs, const Vec& rhs, Witness context = {});

/// Tuple index decoding for exhaustive loops: digit j of i in base n.
inline std::size_t digit(std::size_t i, std::size_t n, std::size_t j) {
  for (std::size_t k = 0; k < j; ++k) i /= n;
  return i % n;
}

/// Draws tuples of elements for a law: every basis tuple first when the
/// algebra is finite and the tuple count is at most `exhaustive_limit`, then
/// `random` random elements.
class ElementSampler {
public:
  ElementSampler(const Algebra& A, std::size_t arity, std::size_t random, std::size_t exhaustive_limit = 1296);

  std::size_t count() const { return exhaustive_ + random_; }
  std::size_t exhaustive() const { return exhaustive_; }
  std::vector<Vec> draw(Rng& rng, std::size_t i) const;

private:
  const Algebra& A_;
  std::vector<Atom> basis_;
  std::size_t arity_;
  std::size_t random_;
  std::size_t exhaustive_ = 0;
};

}  // namespace mhopf
