#pragma once

// Plain de Bruijn terms (indices start at 0) and the structural facts about
// them that the type systems are checked against.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lcalc {

using Nat = std::uint32_t;

class PlainTerm {
 public:
  enum class Kind : std::uint8_t { Index, Abs, App };

  static PlainTerm index(Nat n);
  static PlainTerm abs(PlainTerm body);
  static PlainTerm app(PlainTerm fun, PlainTerm arg);

  Kind kind() const noexcept;
  bool is_index() const noexcept { return kind() == Kind::Index; }
  bool is_abs() const noexcept { return kind() == Kind::Abs; }
  bool is_app() const noexcept { return kind() == Kind::App; }

  Nat value() const;                // Index
  const PlainTerm& body() const;    // Abs
  const PlainTerm& fun() const;     // App
  const PlainTerm& arg() const;     // App

  // Number of AST nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const PlainTerm& a, const PlainTerm& b);

 private:
  struct Node;
  explicit PlainTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct PlainTerm::Node {
  Kind kind;
  Nat value = 0;
  std::size_t size = 1;
  std::vector<PlainTerm> kids;
};

inline PlainTerm::Kind PlainTerm::kind() const noexcept { return node_->kind; }
inline std::size_t PlainTerm::size() const noexcept { return node_->size; }

// Grammar: term := atom+ ; atom := NAT | "\" term | "(" term ")".
// Application is left associative and a lambda extends as far right as
// possible. Throws ParseError.
PlainTerm parse_plain(std::string_view src);

// Canonical text: a lambda whose body is an application prints its body in
// parentheses, and a lambda in operand position is parenthesized.
std::string print_plain(const PlainTerm& t);

// Sorted multiset of free indices, shifted to top-level depth.
std::vector<Nat> free_indices(const PlainTerm& t);

struct OccurrenceProfile {
  // One entry per lambda, in pre-order: how many index occurrences it binds.
  std::vector<std::size_t> bound_counts;
  std::vector<Nat> free;
};

OccurrenceProfile occurrence_profile(const PlainTerm& t);

// Closed and every binder binds exactly one occurrence. Computed by direct
// counting, independently of any type system.
bool is_closed_linear_structural(const PlainTerm& t);

// True when plain index `n` (relative to the top of t) occurs free in t.
bool occurs_free(const PlainTerm& t, Nat n);

}  // namespace lcalc
