#pragma once

// Λ®: de Bruijn terms whose indices carry a duplication path, with explicit
// erasure ⊙ and duplication ▽. Typing makes every binder bind exactly one
// occurrence; the 12-rule system pushes ▽ inward and pulls ⊙ outward.
//
// Text syntax: an index is "n" or "n_bits" ((2,ε) is "2", (0,01) is
// "0_01"); "era IX t" and "dup IX t" extend as far right as a lambda does.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lcalc/ltype.hpp"
#include "lcalc/rewrite.hpp"
#include "lcalc/term.hpp"
#include "lcalc/typing.hpp"

namespace lcalc {

class RTerm {
 public:
  enum class Kind : std::uint8_t { Ind, Abs, App, Era, Dup };

  static RTerm ind(RIndex ix);
  static RTerm abs(RTerm body);
  static RTerm app(RTerm fun, RTerm arg);
  static RTerm era(RIndex ix, RTerm body);
  static RTerm dup(RIndex ix, RTerm body);

  Kind kind() const noexcept;
  const RIndex& index() const;  // Ind, Era, Dup
  const RTerm& body() const;    // Abs, Era, Dup
  const RTerm& fun() const;     // App
  const RTerm& arg() const;     // App
  std::size_t size() const noexcept;

  friend bool operator==(const RTerm& a, const RTerm& b);

 private:
  struct Node;
  explicit RTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

RTerm parse_rterm(std::string_view src);
std::string print_rterm(const RTerm& t);

using RTyping = Typing<RIndex>;

// Rules ind / abs / app / era / dup.
Result<RTyping, TypeFailure> infer_r(const RTerm& t);
Result<RLType, TypeFailure> r_type(const RTerm& t);

struct NotWellFormed {
  TypeFailure reason;
};

Result<RLType, NotWellFormed> free_r_indices(const RTerm& t);
bool is_linear_and_closed(const RTerm& t);

// Free ®-indices computed structurally, for any term, typed or not:
// binders drop depth 0 and lower the rest, ▽ trades its two children for
// its own index, ⊙ adds its index. Sorted, duplicates removed.
std::vector<RIndex> structural_free(const RTerm& t);

// Every index and ⊙/▽ annotation (n, α·γ) becomes (m, β·γ); under a
// binder both n and m go up by one.
RTerm replace(const RTerm& t, const RIndex& from, const RIndex& to);

// Puts bit b in front of the path of every index and annotation at depth i
// (i counted at the top, raised under binders).
RTerm rename_prepend(const RTerm& t, Nat i, bool b);

// In priority order.
const std::vector<std::string>& r_rule_names();

// Path components: Abs 0; App 0 1; Era 0; Dup 0.
Result<Rewrite<RTerm>, NoRedex> step_r(const RTerm& t, const TermPath& at);
std::vector<TermPath> r_redex_positions(const RTerm& t);

Result<Normalized<RTerm>, NormalizeFailure> normalize_dup_era(const RTerm& t,
                                                             const NormalizeOptions& opts = {});

PlainTerm readback(const RTerm& t);
RTerm read(const PlainTerm& t);
RTerm standardize(const RTerm& t);

struct BetaResult {
  RTerm result;
  PlainTerm plain_normal;
  std::size_t beta_steps = 0;      // λυ steps of the plain normalization
  std::size_t dup_era_steps = 0;   // ⊙/▽ steps after reading the result back in
};

// readback, normalize, read, then ⊙/▽ normalization. The input must be
// linear and closed; so is the output.
Result<BetaResult, NormalizeFailure> beta_r(const RTerm& t, const NormalizeOptions& opts = {});

struct BestiaryEntry {
  std::string name;
  RTerm term;
  PlainTerm plain;  // expected readback
};

// I, K, S, ff, tt, Y and four spellings of the Church numeral 5.
const std::vector<BestiaryEntry>& bestiary();

// All ®-terms with readback t obtained by placing, directly under each
// binder, a chain of duplicators shaped as a binary tree of height at most
// max_tree_height over the binder's occurrences (any assignment of leaves to
// occurrences), or an eraser for an unused binder. Only well-typed results
// are kept; no duplicates. Free indices occurring several times are
// duplicated at the root.
std::vector<RTerm> representatives(const PlainTerm& t, std::size_t max_tree_height = 2);

// Closed well-typed ®-terms of exactly `size` nodes whose index and
// annotation paths have length at most max_path.
std::vector<RTerm> typed_closed_rterms(std::size_t size, std::size_t max_path);

}  // namespace lcalc
