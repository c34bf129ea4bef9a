#pragma once

// Λin: plain terms typed by the free-index list. A term typed [] is closed
// and linear.

#include <cstddef>
#include <functional>
#include <vector>

#include "lcalc/ltype.hpp"
#include "lcalc/term.hpp"
#include "lcalc/typing.hpp"

namespace lcalc {

using LinTyping = Typing<Nat>;

// Rules ind / abs / app with a derivation tree.
Result<LinTyping, TypeFailure> infer_lin(const PlainTerm& t);

// Same inference without building the derivation.
Result<NatLType, TypeFailure> lin_type(const PlainTerm& t);

bool check_lin(const PlainTerm& t, const NatLType& l);

// Visits every plain term of exactly `size` nodes whose indices are all
// below (binder depth + slack). Order: Index < Abs < App, indices ascending,
// applications by ascending function size.
void for_each_plain_term(std::size_t size, Nat slack,
                         const std::function<void(const PlainTerm&)>& visit);

// All sizes 1..max_size in turn.
void for_each_plain_term_upto(std::size_t max_size, Nat slack,
                              const std::function<void(const PlainTerm&)>& visit);

std::vector<PlainTerm> plain_terms_upto(std::size_t max_size, Nat slack);

struct CapExceeded {
  std::size_t requested;
  std::size_t cap;
};

inline constexpr std::size_t kClosedLinearCap = 11;

Result<std::vector<PlainTerm>, CapExceeded> enumerate_closed_linear(
    std::size_t max_size, std::size_t cap = kClosedLinearCap);

}  // namespace lcalc
