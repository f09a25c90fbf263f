#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <thread>

#include "aritygap/analysis.hpp"
#include "aritygap/classify.hpp"
#include "aritygap/gap.hpp"
#include "aritygap/minors.hpp"
#include "aritygap/oddsupp.hpp"
#include "aritygap/oracle.hpp"

namespace aritygap {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

// Runs body(i) for i in [0, count) on `jobs` threads. Work is handed out in
// chunks; callers merge per-thread results order-independently.
template <class Body>
void parallel_for(std::uint64_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(0u, i);
    return;
  }
  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        while (true) {
          const std::uint64_t begin = next.fetch_add(kChunk);
          if (begin >= count) break;
          const std::uint64_t end = std::min(count, begin + kChunk);
          for (std::uint64_t i = begin; i < end; ++i) body(w, i);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

bool all_slots_essential(const FiniteFunction& f) { return essential_arity(f) == f.n(); }

std::vector<FiniteFunction> all_identification_minors(const FiniteFunction& f) {
  std::vector<FiniteFunction> minors;
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < f.n(); ++j) {
      if (i != j) minors.push_back(identification_minor(f, i, j));
    }
  }
  return minors;
}

bool is_some_projection(const FiniteFunction& f) {
  for (std::size_t t = 0; t < f.n(); ++t) {
    if (f == FiniteFunction::projection(f.k(), f.n(), t)) return true;
  }
  return false;
}

CheckOutcome verdict(bool ok) { return ok ? CheckOutcome::pass : CheckOutcome::fail; }

// gap = 2 iff qa = n - 2, or qa = n and the restriction factors through oddsupp.
bool strong_characterization_holds(const FiniteFunction& f) {
  const std::size_t n = f.n();
  const std::size_t qa = quasi_arity(f);
  const bool predicted =
      qa + 2 == n || (qa == n && restriction_determined_by_oddsupp(f).determined);
  return (arity_gap(f).gap == 2) == predicted;
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem ids

const char* to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::t3_5i: return "T3.5i";
    case TheoremId::t3_5ii: return "T3.5ii";
    case TheoremId::swier: return "SWIER";
    case TheoremId::l3_4: return "L3.4";
    case TheoremId::p4_2: return "P4.2";
    case TheoremId::t4_1: return "T4.1";
    case TheoremId::t4_3: return "T4.3";
    case TheoremId::t4_4: return "T4.4";
    case TheoremId::t5_1: return "T5.1";
    case TheoremId::l5_2: return "L5.2";
    case TheoremId::t6_1: return "T6.1";
    case TheoremId::t6_3: return "T6.3";
    case TheoremId::t6_4ii: return "T6.4ii";
    case TheoremId::t6_4iii: return "T6.4iii";
  }
  return "unknown";
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = {
      TheoremId::t3_5i, TheoremId::t3_5ii, TheoremId::swier,  TheoremId::l3_4,
      TheoremId::p4_2,  TheoremId::t4_1,   TheoremId::t4_3,   TheoremId::t4_4,
      TheoremId::t5_1,  TheoremId::l5_2,   TheoremId::t6_1,   TheoremId::t6_3,
      TheoremId::t6_4ii, TheoremId::t6_4iii};
  return ids;
}

TheoremId parse_theorem_id(std::string_view text) {
  for (const auto id : all_theorems()) {
    if (text == to_string(id)) return id;
  }
  throw Error(Errc::invalid_argument, "unknown theorem id '" + std::string(text) + "'");
}

void validate_theorem_shape(TheoremId id, std::uint32_t k, std::uint32_t n,
                            std::uint32_t b, std::uint64_t budget) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      throw Error(Errc::invalid_argument,
                  std::string(to_string(id)) + " needs " + what + " (got k=" +
                      std::to_string(k) + ", n=" + std::to_string(n) +
                      ", b=" + std::to_string(b) + ")");
    }
  };
  switch (id) {
    case TheoremId::t3_5i: require(n >= 2, "n >= 2"); break;
    case TheoremId::t3_5ii: require(n == 2 || n >= 4, "n = 2 or n >= 4"); break;
    case TheoremId::swier: require(b == k && n >= 4, "b = k and n >= 4"); break;
    case TheoremId::l3_4:
      if (support_count(k, n, b) > budget) {
        throw Error(Errc::oracle_infeasible,
                    "L3.4 needs " + std::to_string(support_count(k, n, b)) +
                        " supports per function, budget is " + std::to_string(budget));
      }
      break;
    case TheoremId::p4_2: require(2 <= n && n <= k, "2 <= n <= k"); break;
    case TheoremId::t4_1: require(n > k, "n > k"); break;
    case TheoremId::t4_3: require(n > 3, "n > 3"); break;
    case TheoremId::t4_4: require(n >= 3, "n >= 3"); break;
    case TheoremId::t5_1: require(k == 2 && n >= 2, "k = 2 and n >= 2"); break;
    case TheoremId::l5_2: require(n > std::max<std::uint32_t>(k, 3), "n > max(k, 3)"); break;
    case TheoremId::t6_1: require(n > 3, "n > 3"); break;
    case TheoremId::t6_3: require(n > 3, "n > 3"); break;
    case TheoremId::t6_4ii: require(n >= 2 && n != 3, "n >= 2 and n != 3"); break;
    case TheoremId::t6_4iii: require(n == 3, "n = 3"); break;
  }
}

CheckOutcome check_theorem(TheoremId id, const FiniteFunction& f, std::uint64_t budget) {
  const std::size_t n = f.n();
  const std::size_t k = f.k();
  try {
    validate_theorem_shape(id, f.k(), f.n(), f.b(), budget);
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument) return CheckOutcome::not_applicable;
    throw;
  }

  switch (id) {
    case TheoremId::t3_5i: {
      const auto minors = all_identification_minors(f);
      const bool all_constant = std::all_of(minors.begin(), minors.end(),
                                            [](const auto& g) { return g.is_constant(); });
      return verdict(all_constant == (quasi_arity(f) == 0));
    }
    case TheoremId::t3_5ii: {
      const auto minors = all_identification_minors(f);
      const bool all_unary = std::all_of(minors.begin(), minors.end(), [](const auto& g) {
        return essential_arity(g) == 1;
      });
      const std::size_t qa = quasi_arity(f);
      if (all_unary != (qa == 1)) return CheckOutcome::fail;
      if (n >= 4 && qa <= 1) {
        // Every minor is equivalent to the unique support of arity <= 1:
        // same essential arity and same diagonal.
        const auto support = unique_unary_support(f).candidates.front().support;
        const std::size_t e = essential_arity(support);
        const auto d = diagonal(support);
        for (const auto& g : minors) {
          if (essential_arity(g) != e || diagonal(g) != d) return CheckOutcome::fail;
        }
      }
      return CheckOutcome::pass;
    }
    case TheoremId::swier: {
      const auto minors = all_identification_minors(f);
      const bool all_projections =
          std::all_of(minors.begin(), minors.end(), is_some_projection);
      return verdict(semiprojection_slot(f).has_value() == all_projections);
    }
    case TheoremId::l3_4:
      return verdict(quasi_arity(f) == oracle_quasi_arity(f, budget));
    case TheoremId::p4_2: {
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      const std::size_t qa = quasi_arity(f);
      return verdict(qa == n || arity_gap(f).gap == n - qa);
    }
    case TheoremId::t4_1:
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      return verdict(arity_gap(f).gap <= 2);
    case TheoremId::t4_3:
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      return verdict(quasi_arity(f) != n || arity_gap(f).gap <= 2);
    case TheoremId::t4_4: {
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      const std::size_t qa = quasi_arity(f);
      const std::size_t gap = arity_gap(f).gap;
      for (std::size_t m = 0; m + 3 <= n; ++m) {
        if ((gap == n - m) != (qa == m)) return CheckOutcome::fail;
      }
      return CheckOutcome::pass;
    }
    case TheoremId::t5_1:
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      return verdict(classify_pseudo_boolean(f).gap == arity_gap(f).gap);
    case TheoremId::l5_2: {
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      const bool large_range = f.range_size() > (std::size_t{1} << (k - 1));
      return verdict(!large_range || arity_gap(f).gap == 1);
    }
    case TheoremId::t6_1: {
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      if (quasi_arity(f) != n || arity_gap(f).gap != 2) return CheckOutcome::pass;
      if (!restriction_totally_symmetric(f)) return CheckOutcome::fail;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const auto g = identification_minor(f, i, j);
          for (std::size_t s = 0; s < n; ++s) {
            if (is_essential(g, s) != (s != i && s != j)) return CheckOutcome::fail;
          }
        }
      }
      return CheckOutcome::pass;
    }
    case TheoremId::t6_3:
    case TheoremId::t6_4ii:
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      return verdict(strong_characterization_holds(f));
    case TheoremId::t6_4iii: {
      if (!all_slots_essential(f)) return CheckOutcome::not_applicable;
      const std::size_t gap = arity_gap(f).gap;
      return verdict((gap == 2) == ternary_pattern(f).has_value() &&
                     classify(f).gap == gap);
    }
  }
  return CheckOutcome::not_applicable;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t function_count(std::uint32_t k, std::uint32_t n, std::uint32_t b) {
  return checked_pow(b, checked_pow(k, n));
}

FiniteFunction function_at(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                           std::uint64_t index) {
  TupleCodec codec(k, n);
  std::vector<Value> table(codec.size());
  for (std::size_t x = table.size(); x-- > 0;) {
    table[x] = static_cast<Value>(index % b);
    index /= b;
  }
  if (index != 0) throw Error(Errc::invalid_argument, "function index out of range");
  return FiniteFunction(k, n, b, std::move(table));
}

Filter Filter::parse(std::string_view text) {
  if (text == "full") return Filter{Kind::full, 0};
  const auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    const auto key = text.substr(0, eq);
    const auto rest = text.substr(eq + 1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) {
      if (key == "gap") return Filter{Kind::gap, value};
      if (key == "qa") return Filter{Kind::qa, value};
      if (key == "ess") return Filter{Kind::ess, value};
    }
  }
  throw Error(Errc::invalid_argument,
              "unknown filter '" + std::string(text) + "' (use gap=G, qa=M, ess=E or full)");
}

bool Filter::accepts(const FiniteFunction& f) const {
  switch (kind) {
    case Kind::full: return essential_arity(f) == f.n();
    case Kind::ess: return essential_arity(f) == value;
    case Kind::qa: return quasi_arity(f) == value;
    case Kind::gap: return essential_arity(f) >= 2 && arity_gap(f).gap == value;
  }
  return false;
}

std::string Filter::render() const {
  switch (kind) {
    case Kind::full: return "full";
    case Kind::ess: return "ess=" + std::to_string(value);
    case Kind::qa: return "qa=" + std::to_string(value);
    case Kind::gap: return "gap=" + std::to_string(value);
  }
  return "";
}

Enumerator::Enumerator(std::uint32_t k, std::uint32_t n, std::uint32_t b,
                       std::vector<Filter> filters, unsigned jobs, std::uint64_t budget)
    : k_(k), n_(n), b_(b), filters_(std::move(filters)), jobs_(std::max(1u, jobs)) {
  TupleCodec codec(k, n);  // validates the shape
  total_ = function_count(k, n, b);
  if (total_ > budget) {
    throw Error(Errc::oracle_infeasible,
                "enumeration of " + std::to_string(k) + " " + std::to_string(n) + " " +
                    std::to_string(b) + " exceeds budget of " + std::to_string(budget) +
                    " tables");
  }
}

void Enumerator::refill() {
  constexpr std::uint64_t kBlock = 4096;
  buffer_.clear();
  buffer_pos_ = 0;
  while (buffer_.empty() && cursor_ < total_) {
    const std::uint64_t begin = cursor_;
    const std::uint64_t count = std::min(kBlock, total_ - begin);
    cursor_ += count;
    std::vector<char> keep(count, 0);
    parallel_for(count, jobs_, [&](unsigned, std::uint64_t i) {
      const auto f = function_at(k_, n_, b_, begin + i);
      keep[i] = std::all_of(filters_.begin(), filters_.end(),
                            [&](const Filter& flt) { return flt.accepts(f); });
    });
    for (std::uint64_t i = 0; i < count; ++i) {
      if (keep[i]) buffer_.push_back(function_at(k_, n_, b_, begin + i));
    }
  }
}

std::optional<FiniteFunction> Enumerator::next() {
  if (buffer_pos_ >= buffer_.size()) refill();
  if (buffer_pos_ >= buffer_.size()) return std::nullopt;
  return buffer_[buffer_pos_++];
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<WitnessGenerator> witness_generators(std::uint32_t k, std::uint32_t n,
                                                 std::uint32_t b) {
  std::vector<WitnessGenerator> gens;
  for (std::uint32_t m = 0; m <= n; ++m) {
    const bool feasible = (n == 1 ? m == 1 : true) && !(n == 2 && m == 2) &&
                          !(n > k && m < n);
    if (!feasible) continue;
    gens.push_back({"quasi m=" + std::to_string(m), [=](std::uint64_t seed) {
                      return gen_quasi_m_ary(k, n, b, m, seed);
                    }});
  }
  if (n >= 4 && k <= 20 && reachable_subsets(k, n, true).size() >= 2) {
    gens.push_back({"oddsupp", [=](std::uint64_t seed) {
                      return gen_oddsupp_determined(k, n, b, seed);
                    }});
  }
  if (b == k) {
    if (n == k) {
      gens.push_back({"salomaa", [=](std::uint64_t) { return gen_salomaa(k); }});
    }
    for (std::size_t t = 0; t < n; ++t) {
      gens.push_back({"semiprojection t=" + std::to_string(t + 1),
                      [=](std::uint64_t seed) { return gen_semiprojection(k, n, t, seed); }});
    }
  }
  if (n == 3) {
    for (unsigned bits = 0; bits < 8; ++bits) {
      const std::array<std::uint8_t, 3> pattern{
          static_cast<std::uint8_t>(bits >> 2 & 1), static_cast<std::uint8_t>(bits >> 1 & 1),
          static_cast<std::uint8_t>(bits & 1)};
      gens.push_back({"pattern", [=](std::uint64_t seed) {
                        return gen_ternary_pattern(k, b, pattern, std::nullopt, seed);
                      }});
    }
  }
  return gens;
}

std::uint64_t sweep_size(const SweepSpec& spec) {
  if (spec.mode == SweepMode::exhaustive) return function_count(spec.k, spec.n, spec.b);
  return spec.samples + spec.witnesses * witness_generators(spec.k, spec.n, spec.b).size();
}

VerificationReport run_sweep(const SweepSpec& spec, const Predicate& predicate,
                             std::string label) {
  const auto start = std::chrono::steady_clock::now();
  TupleCodec shape(spec.k, spec.n);
  if (spec.b < 2) throw Error(Errc::invalid_argument, "codomain size b must be >= 2");

  std::vector<WitnessGenerator> gens;
  std::uint64_t total = 0;
  if (spec.mode == SweepMode::exhaustive) {
    total = function_count(spec.k, spec.n, spec.b);
    if (total > spec.budget) {
      throw Error(Errc::oracle_infeasible,
                  "exhaustive sweep needs " +
                      (total == UINT64_MAX ? std::string("more than 2^64")
                                           : std::to_string(total)) +
                      " tables, budget is " + std::to_string(spec.budget));
    }
  } else {
    gens = witness_generators(spec.k, spec.n, spec.b);
    total = spec.samples + spec.witnesses * gens.size();
  }

  // Task i's function depends only on (spec, i): uniform samples first, then
  // `witnesses` tasks per generator.
  auto function_for = [&](std::uint64_t i) {
    if (spec.mode == SweepMode::exhaustive) return function_at(spec.k, spec.n, spec.b, i);
    if (i < spec.samples) {
      Rng rng(derive_seed(spec.seed, 0, i));
      return random_function(spec.k, spec.n, spec.b, rng);
    }
    const std::uint64_t w = i - spec.samples;
    const std::uint64_t g = w / spec.witnesses;
    return gens[g].make(derive_seed(spec.seed, g + 1, w % spec.witnesses));
  };

  const unsigned jobs = std::max(1u, spec.jobs);
  std::vector<std::uint64_t> checked(jobs, 0);
  std::vector<std::vector<FiniteFunction>> failures(jobs);
  parallel_for(total, jobs, [&](unsigned worker, std::uint64_t i) {
    const auto f = function_for(i);
    for (const auto& filter : spec.filters) {
      if (!filter.accepts(f)) return;
    }
    switch (predicate(f)) {
      case CheckOutcome::pass: ++checked[worker]; break;
      case CheckOutcome::fail:
        ++checked[worker];
        failures[worker].push_back(f);
        break;
      case CheckOutcome::not_applicable: break;
    }
  });

  VerificationReport report;
  report.theorem = std::move(label);
  report.seed = spec.seed;
  for (unsigned w = 0; w < jobs; ++w) {
    report.checked += checked[w];
    for (auto& f : failures[w]) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport verify(const SweepSpec& spec) {
  validate_theorem_shape(spec.theorem, spec.k, spec.n, spec.b, spec.budget);
  const auto id = spec.theorem;
  const auto budget = spec.budget;
  return run_sweep(
      spec, [id, budget](const FiniteFunction& f) { return check_theorem(id, f, budget); },
      to_string(id));
}

std::string render(const VerificationReport& report) {
  std::string out = "theorem=" + report.theorem +
                    " checked=" + std::to_string(report.checked) +
                    " failures=" + std::to_string(report.failures.size()) +
                    " seed=" + std::to_string(report.seed);
  for (const auto& f : report.failures) out += "\n" + render_single_line(f);
  return out;
}

}  // namespace aritygap
