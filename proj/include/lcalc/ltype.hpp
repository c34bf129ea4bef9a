#pragma once

// L-types: strictly ascending lists over an ordered index domain, together
// with the partial list algebra the typing rules are written in.
//
// Two index domains are used: plain naturals (Λin, Λin_υ) and resource
// indices (n, α) with α a boolean string (Λ®). Every operation only looks
// at the natural component of an index, so both share one implementation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcalc/result.hpp"
#include "lcalc/term.hpp"

namespace lcalc {

using Bits = std::vector<bool>;

// Resource index (depth, path). Ordered lexicographically: first by depth,
// then by path, where paths compare bitwise with 0 < 1 and a proper prefix
// below its extensions.
struct RIndex {
  Nat depth = 0;
  Bits path;

  RIndex() = default;
  RIndex(Nat d, Bits p = {}) : depth(d), path(std::move(p)) {}

  // this with bit b appended to the path.
  RIndex child(bool b) const {
    RIndex out = *this;
    out.path.push_back(b);
    return out;
  }

  friend bool operator==(const RIndex&, const RIndex&) = default;
};

enum class Order { Less, Equal, Greater };

Order compare_bits(const Bits& a, const Bits& b);
Order compare_rindex(const RIndex& a, const RIndex& b);

inline bool operator<(const RIndex& a, const RIndex& b) {
  return compare_rindex(a, b) == Order::Less;
}

// "", "0", "01" …; the empty path prints as "e" in list form.
std::string bits_to_string(const Bits& bits);
Bits bits_from_string(std::string_view text);

// Term syntax: "2" for (2,ε), "0_01" for (0,01).
std::string rindex_to_string(const RIndex& ix);
// List syntax: "(0,01)", "(1,e)".
std::string rindex_to_pair_string(const RIndex& ix);

// Natural component access, overloaded per domain.
inline Nat natural(Nat n) { return n; }
inline Nat natural(const RIndex& ix) { return ix.depth; }
inline Nat with_natural(Nat, Nat n) { return n; }
inline RIndex with_natural(const RIndex& ix, Nat n) { return RIndex(n, ix.path); }

inline std::string index_to_string(Nat n) { return std::to_string(n); }
inline std::string index_to_string(const RIndex& ix) { return rindex_to_pair_string(ix); }

template <class Ix>
class LType {
 public:
  LType() = default;
  LType(std::initializer_list<Ix> elems) : LType(std::vector<Ix>(elems)) {}

  // Throws std::invalid_argument unless elems is strictly ascending.
  explicit LType(std::vector<Ix> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 1; i < elems_.size(); ++i)
      if (!(elems_[i - 1] < elems_[i]))
        throw std::invalid_argument("L-type must be strictly ascending");
  }

  static LType singleton(Ix ix) {
    LType out;
    out.elems_.push_back(std::move(ix));
    return out;
  }

  const std::vector<Ix>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const Ix& front() const { return elems_.front(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Ix& ix) const {
    return std::binary_search(elems_.begin(), elems_.end(), ix);
  }

  LType tail() const {
    LType out;
    if (!elems_.empty()) out.elems_.assign(elems_.begin() + 1, elems_.end());
    return out;
  }

  // Removes ix if present.
  LType without(const Ix& ix) const {
    LType out;
    out.elems_.reserve(elems_.size());
    for (const Ix& e : elems_)
      if (!(e == ix)) out.elems_.push_back(e);
    return out;
  }

  friend bool operator==(const LType&, const LType&) = default;

 private:
  template <class J>
  friend LType<J> unchecked_ltype(std::vector<J> elems);
  std::vector<Ix> elems_;
};

template <class Ix>
LType<Ix> unchecked_ltype(std::vector<Ix> elems) {
  LType<Ix> out;
  out.elems_ = std::move(elems);
  return out;
}

template <class Ix>
std::string to_string(const LType<Ix>& l) {
  std::string out = "[";
  bool first = true;
  for (const Ix& ix : l) {
    if (!first) out += ',';
    first = false;
    out += index_to_string(ix);
  }
  return out + "]";
}

template <class Ix>
struct MergeConflict {
  Ix index;  // smallest element present in both operands
};

struct DecrementZero {};

// Sorted union of two disjoint lists.
template <class Ix>
Result<LType<Ix>, MergeConflict<Ix>> merge(const LType<Ix>& l1, const LType<Ix>& l2) {
  std::vector<Ix> out;
  out.reserve(l1.size() + l2.size());
  auto a = l1.begin();
  auto b = l2.begin();
  while (a != l1.end() && b != l2.end()) {
    if (*a < *b) {
      out.push_back(*a++);
    } else if (*b < *a) {
      out.push_back(*b++);
    } else {
      return MergeConflict<Ix>{*a};
    }
  }
  out.insert(out.end(), a, l1.end());
  out.insert(out.end(), b, l2.end());
  return unchecked_ltype(std::move(out));
}

// Lowers every natural component by one; undefined if one of them is 0.
template <class Ix>
Result<LType<Ix>, DecrementZero> decrement(const LType<Ix>& l) {
  std::vector<Ix> out;
  out.reserve(l.size());
  for (const Ix& ix : l) {
    if (natural(ix) == 0) return DecrementZero{};
    out.push_back(with_natural(ix, natural(ix) - 1));
  }
  return unchecked_ltype(std::move(out));
}

template <class Ix>
LType<Ix> increment(const LType<Ix>& l, Nat times = 1) {
  std::vector<Ix> out;
  out.reserve(l.size());
  for (const Ix& ix : l) out.push_back(with_natural(ix, natural(ix) + times));
  return unchecked_ltype(std::move(out));
}

struct BasicPredicate {
  enum class Kind { LessThan, GreaterThan, AtLeast };
  Kind kind;
  Nat bound;

  static BasicPredicate less_than(Nat i) { return {Kind::LessThan, i}; }
  static BasicPredicate greater_than(Nat i) { return {Kind::GreaterThan, i}; }
  static BasicPredicate at_least(Nat i) { return {Kind::AtLeast, i}; }

  bool operator()(Nat k) const {
    switch (kind) {
      case Kind::LessThan: return k < bound;
      case Kind::GreaterThan: return k > bound;
      case Kind::AtLeast: return k >= bound;
    }
    return false;
  }

  // Same comparison against a threshold shifted by delta (may be negative).
  BasicPredicate shifted(long delta) const {
    return {kind, static_cast<Nat>(static_cast<long>(bound) + delta)};
  }

  friend bool operator==(const BasicPredicate&, const BasicPredicate&) = default;
};

std::string to_string(const BasicPredicate& p);

// (p | l): elements whose natural component satisfies p, order kept.
template <class Ix>
LType<Ix> filter(const BasicPredicate& p, const LType<Ix>& l) {
  std::vector<Ix> out;
  for (const Ix& ix : l)
    if (p(natural(ix))) out.push_back(ix);
  return unchecked_ltype(std::move(out));
}

using NatLType = LType<Nat>;
using RLType = LType<RIndex>;

// Parses "[0,2,5]".
NatLType parse_nat_ltype(std::string_view text);
// Parses "[(0,01),(1,e)]".
RLType parse_r_ltype(std::string_view text);

}  // namespace lcalc
