#include "mhopf/laws.hpp"

#include <chrono>
#include <exception>
#include <limits>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mhopf {

namespace {

std::optional<Witness> guarded(const Probe& probe, std::size_t i) {
  try {
    return probe(i);
  } catch (const std::exception& e) {
    return Witness{}.add("sample", std::to_string(i)).add("exception", e.what());
  }
}

}  // namespace

KernelResult first_failure_serial(std::size_t n, const Probe& probe) {
  KernelResult r;
  for (std::size_t i = 0; i < n; ++i) {
    r.checked = i + 1;
    if (auto w = guarded(probe, i)) {
      r.failed_at = i;
      r.witness = std::move(w);
      return r;
    }
  }
  return r;
}

KernelResult first_failure_parallel(std::size_t n, const Probe& probe) {
  std::vector<std::optional<Witness>> found(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) found[static_cast<std::size_t>(i)] = guarded(probe, static_cast<std::size_t>(i));

  KernelResult r;
  r.checked = n;
  for (std::size_t i = 0; i < n; ++i)
    if (found[i]) {
      r.checked = i + 1;
      r.failed_at = i;
      r.witness = std::move(found[i]);
      break;
    }
  return r;
}

KernelResult first_failure(Exec exec, std::size_t n, const Probe& probe) {
  return exec == Exec::parallel ? first_failure_parallel(n, probe) : first_failure_serial(n, probe);
}

bool Report::all_pass() const {
  for (const auto& l : laws)
    if (!l.pass) return false;
  return true;
}

bool Report::as_expected() const {
  for (const auto& l : laws)
    if (!l.as_expected()) return false;
  return true;
}

const LawResult* Report::find(const std::string& id) const {
  for (const auto& l : laws)
    if (l.id == id) return &l;
  return nullptr;
}

std::string Report::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["instance"] = instance;
  j["field"] = field;
  j["seed"] = seed;
  j["samples"] = samples;
  j["pass"] = all_pass();
  j["as_expected"] = as_expected();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& l : laws) {
    nlohmann::ordered_json e;
    e["id"] = l.id;
    e["formula"] = l.formula;
    e["pass"] = l.pass;
    if (l.expect_fail) e["expected"] = "fail";
    if (l.may_fail) e["expected"] = "either";
    e["checked"] = l.checked;
    if (l.witness) {
      auto w = nlohmann::ordered_json::array();
      for (const auto& [name, text] : l.witness->items) w.push_back({{"name", name}, {"value", text}});
      e["witness"] = std::move(w);
    }
    if (timings) e["elapsed_ms"] = l.elapsed_ms;
    arr.push_back(std::move(e));
  }
  j["laws"] = std::move(arr);
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2) + "\n";
}

const LawResult& LawRunner::law(const std::string& id, const std::string& formula, std::size_t n,
                                const SampleProbe& probe) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t seed = report_.seed;
  KernelResult k = first_failure(exec_, n, [&](std::size_t i) {
    Rng rng = Rng::stream(seed, id + "#" + std::to_string(i));
    return probe(rng, i);
  });
  LawResult r;
  r.id = id;
  r.formula = formula;
  r.checked = k.checked;
  r.pass = !k.failed_at.has_value();
  r.witness = std::move(k.witness);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report_.laws.push_back(std::move(r));
  return report_.laws.back();
}

const LawResult& LawRunner::fact(const std::string& id, const std::string& formula,
                                 const std::function<std::optional<Witness>()>& check) {
  return law(id, formula, 1, [&](Rng&, std::size_t) { return check(); });
}

std::optional<Witness> expect_equal(const Vec& lhs, const Vec& rhs, Witness context) {
  if (lhs == rhs) return std::nullopt;
  context.add("lhs", lhs).add("rhs", rhs);
  return context;
}

ElementSampler::ElementSampler(const Algebra& A, std::size_t arity, std::size_t random, std::size_t exhaustive_limit)
    : A_(A), arity_(arity), random_(random) {
  if (auto b = A.basis()) {
    basis_ = *b;
    std::size_t total = 1;
    for (std::size_t k = 0; k < arity && total <= exhaustive_limit; ++k) total *= basis_.size();
    if (total <= exhaustive_limit) exhaustive_ = total;
  }
}

std::vector<Vec> ElementSampler::draw(Rng& rng, std::size_t i) const {
  std::vector<Vec> out;
  out.reserve(arity_);
  if (i < exhaustive_) {
    for (std::size_t k = 0; k < arity_; ++k) out.push_back(Vec::atom(basis_[digit(i, basis_.size(), k)], A_.field()(1)));
  } else {
    for (std::size_t k = 0; k < arity_; ++k) out.push_back(random_element(A_, rng));
  }
  return out;
}

}  // namespace mhopf
