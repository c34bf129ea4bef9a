#pragma once

// Rewriting plumbing shared by the λυ and Λ® engines: single-step results,
// fuel-bounded leftmost-outermost normalization and traces.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcalc/ltype.hpp"
#include "lcalc/result.hpp"
#include "lcalc/typing.hpp"

namespace lcalc {

template <class T>
struct Rewrite {
  T term;  // the whole term after the step
  std::string rule;
};

inline constexpr std::size_t kDefaultFuel = 10000;

struct NormalizeOptions {
  std::size_t fuel = kDefaultFuel;
  bool trace = false;
  // Re-infer the L-type after every step and stop at the first change.
  // Skipped when the start term has no L-type.
  bool verify = false;
};

template <class T>
struct TraceStep {
  std::size_t index;  // 1-based
  std::string rule;
  TermPath path;
  T term;  // whole term after the step
};

template <class T>
struct Normalized {
  T term;
  std::size_t steps = 0;
  std::vector<TraceStep<T>> trace;
  bool verified = false;  // verify was requested and the start term was typed
};

struct NormalizeFailure {
  enum class Kind {
    FuelExhausted,
    PreservationViolation,
    LinearityLost,
    ClosureRemains,
    NotClosedLinear,
  };
  Kind kind;
  std::size_t steps_taken = 0;
  std::string detail;
};

const char* to_string(NormalizeFailure::Kind kind);

// "step#  rule-name  path  term-after", one line per step.
template <class T, class Printer>
std::string render_trace(const std::vector<TraceStep<T>>& trace, Printer print) {
  std::string out;
  for (const auto& s : trace)
    out += std::to_string(s.index) + "  " + s.rule + "  " + path_to_string(s.path) + "  " +
           print(s.term) + "\n";
  return out;
}

// first_redex(t) -> optional<TermPath>; step(t, path) -> Result<Rewrite<T>, NoRedex>;
// type_of(t) -> Result<LType<Ix>, TypeFailure>.
template <class T, class FirstRedex, class Step, class TypeOf>
Result<Normalized<T>, NormalizeFailure> normalize_with(const T& start, const NormalizeOptions& opts,
                                                       FirstRedex first_redex, Step step,
                                                       TypeOf type_of) {
  using Type = std::decay_t<decltype(type_of(start).value())>;
  Normalized<T> out{start, 0, {}, false};
  std::optional<Type> expected;
  if (opts.verify) {
    auto ty = type_of(start);
    if (ty) expected = ty.value();
    out.verified = expected.has_value();
  }
  for (;;) {
    std::optional<TermPath> at = first_redex(out.term);
    if (!at) return out;
    if (out.steps >= opts.fuel)
      return NormalizeFailure{NormalizeFailure::Kind::FuelExhausted, out.steps,
                              "no normal form within " + std::to_string(opts.fuel) + " steps"};
    auto r = step(out.term, *at);
    if (!r) throw std::logic_error("redex search and step disagree");
    out.term = r.value().term;
    ++out.steps;
    if (opts.trace) out.trace.push_back(TraceStep<T>{out.steps, r.value().rule, *at, out.term});
    if (expected) {
      auto ty = type_of(out.term);
      if (!ty || !(ty.value() == *expected))
        return NormalizeFailure{NormalizeFailure::Kind::PreservationViolation, out.steps,
                                "rule " + r.value().rule + " at " + path_to_string(*at) +
                                    " changed type " + to_string(*expected) + " to " +
                                    (ty ? to_string(ty.value()) : ty.error().message())};
    }
  }
}

}  // namespace lcalc
