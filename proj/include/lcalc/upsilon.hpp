#pragma once

// λυ explicit substitutions, in two spellings.
//
//   raw:          t ::= n | λt | t t | t[s]      s ::= t/ | ⇑(s) | ↑
//   abbreviated:  t ::= n | λt | t t | t⇑i | t{u,i}
//
// with t⇑i = t[⇑^i(↑)] and t{u,i} = t[⇑^i(u/)]. Every raw substitution has
// one of those two shapes, so the spellings convert both ways without loss.
// The raw form runs the 8-rule λυ system, the abbreviated form the 12-rule
// linear system and L-type inference.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcalc/ltype.hpp"
#include "lcalc/rewrite.hpp"
#include "lcalc/term.hpp"
#include "lcalc/typing.hpp"

namespace lcalc {

class RawSubst;

class RawUpsilonTerm {
 public:
  enum class Kind : std::uint8_t { Index, Abs, App, Closure };

  static RawUpsilonTerm index(Nat n);
  static RawUpsilonTerm abs(RawUpsilonTerm body);
  static RawUpsilonTerm app(RawUpsilonTerm fun, RawUpsilonTerm arg);
  static RawUpsilonTerm closure(RawUpsilonTerm body, RawSubst subst);

  Kind kind() const noexcept;
  Nat value() const;
  const RawUpsilonTerm& body() const;  // Abs, Closure
  const RawUpsilonTerm& fun() const;
  const RawUpsilonTerm& arg() const;
  const RawSubst& subst() const;       // Closure

  friend bool operator==(const RawUpsilonTerm& a, const RawUpsilonTerm& b);

 private:
  struct Node;
  explicit RawUpsilonTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class RawSubst {
 public:
  enum class Kind : std::uint8_t { Slash, Lift, Shift };

  static RawSubst slash(RawUpsilonTerm t);
  static RawSubst lift(RawSubst s);
  static RawSubst shift();

  Kind kind() const noexcept;
  const RawUpsilonTerm& term() const;  // Slash
  const RawSubst& inner() const;       // Lift

  friend bool operator==(const RawSubst& a, const RawSubst& b);

 private:
  struct Node;
  explicit RawSubst(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class UpsilonTerm {
 public:
  enum class Kind : std::uint8_t { Index, Abs, App, Upd, Sub };

  static UpsilonTerm index(Nat n);
  static UpsilonTerm abs(UpsilonTerm body);
  static UpsilonTerm app(UpsilonTerm fun, UpsilonTerm arg);
  static UpsilonTerm upd(UpsilonTerm body, Nat level);             // body⇑level
  static UpsilonTerm sub(UpsilonTerm body, UpsilonTerm arg, Nat level);  // body{arg,level}

  Kind kind() const noexcept;
  Nat value() const;                 // Index
  Nat level() const;                 // Upd, Sub
  const UpsilonTerm& body() const;   // Abs, Upd, Sub
  const UpsilonTerm& fun() const;    // App
  const UpsilonTerm& arg() const;    // App, Sub (the substituted term)

  friend bool operator==(const UpsilonTerm& a, const UpsilonTerm& b);

 private:
  struct Node;
  explicit UpsilonTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Both parsers accept the whole grammar (postfix "^i", "{u,i}", "[u/]",
// "[^^ s]", "[!]") and convert to the requested spelling.
RawUpsilonTerm parse_raw_upsilon(std::string_view src);
UpsilonTerm parse_upsilon(std::string_view src);

std::string print_raw_upsilon(const RawUpsilonTerm& t);
std::string print_raw_subst(const RawSubst& s);
std::string print_upsilon(const UpsilonTerm& t);

UpsilonTerm to_abbreviated(const RawUpsilonTerm& t);
RawUpsilonTerm to_closures(const UpsilonTerm& t);

struct ClosureRemains {
  TermPath at;
};

RawUpsilonTerm to_raw(const PlainTerm& t);
Result<PlainTerm, ClosureRemains> from_raw(const RawUpsilonTerm& t);
UpsilonTerm embed_upsilon(const PlainTerm& t);
Result<PlainTerm, ClosureRemains> upsilon_to_plain(const UpsilonTerm& t);

// Rule names, in their conventional order.
const std::vector<std::string>& raw_rule_names();
const std::vector<std::string>& lin_upsilon_rule_names();


// Path components: Abs 0; App 0 1; Closure 0 (body) 1 (substitution);
// Slash 0; Lift 0; Upd 0; Sub 0 (body) 1 (argument).
Result<Rewrite<RawUpsilonTerm>, NoRedex> step_raw(const RawUpsilonTerm& t, const TermPath& at);
Result<Rewrite<UpsilonTerm>, NoRedex> step_in(const UpsilonTerm& t, const TermPath& at);

// Every redex position, in pre-order (leftmost-outermost first).
std::vector<TermPath> raw_redex_positions(const RawUpsilonTerm& t);
std::vector<TermPath> in_redex_positions(const UpsilonTerm& t);

using UpsilonTyping = Typing<Nat>;

Result<UpsilonTyping, TypeFailure> infer_upsilon(const UpsilonTerm& t);
Result<NatLType, TypeFailure> upsilon_type(const UpsilonTerm& t);

struct PreservationReport {
  std::string rule;
  UpsilonTerm after;
  NatLType before_type;
  NatLType after_type;
};

struct PreservationError {
  enum class Kind { NoRedex, IllTypedInput, Violation };
  Kind kind;
  std::string rule;
  std::string detail;
};

Result<PreservationReport, PreservationError> check_preservation_step(const UpsilonTerm& t,
                                                                     const TermPath& at);

Result<Normalized<RawUpsilonTerm>, NormalizeFailure> normalize_raw(const RawUpsilonTerm& t,
                                                                  const NormalizeOptions& opts = {});
// Direct normalization with the 12 linear rules. Best effort: the rules are
// only meant for terms typed by the linear system.
Result<Normalized<UpsilonTerm>, NormalizeFailure> normalize_in(const UpsilonTerm& t,
                                                              const NormalizeOptions& opts = {});

struct PipelineResult {
  PlainTerm result;
  Normalized<RawUpsilonTerm> run;
};

// Plain term → raw λυ → normal form → plain term. No linearity requirement.
Result<PipelineResult, NormalizeFailure> normalize_pipeline(const PlainTerm& t,
                                                            const NormalizeOptions& opts = {});
// As above for a closed linear input; the output is checked to be closed
// linear as well.
Result<PipelineResult, NormalizeFailure> normalize_lin_pipeline(const PlainTerm& t,
                                                                const NormalizeOptions& opts = {});


}  // namespace lcalc
