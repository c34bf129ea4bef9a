#pragma once

// Pieces shared by the three L-type inference engines: failure reports and
// derivation trees.

#include <string>
#include <vector>

#include "lcalc/ltype.hpp"
#include "lcalc/result.hpp"

namespace lcalc {

enum class FailureKind {
  AbsHeadMissing,      // body type of an abstraction does not start with its binder
  MergeConflict,       // an index is free on both sides of a merge
  DecrementZero,       // a depth-0 index would be decremented
  ZeroDepthRemains,    // Λ® abs: another depth-0 index survives under the binder
  DupChildrenMissing,  // Λ® dup: (n,α0) or (n,α1) not free in the body
};

const char* to_string(FailureKind kind);

struct TypeFailure {
  FailureKind kind;
  std::string rule;     // typing rule that could not be applied
  TermPath path;        // subterm at which it happened
  std::string subject;  // offending index, rendered ("0", "(0,01)"), may be empty
  std::string detail;

  std::string message() const;
};

template <class Ix>
struct Derivation {
  std::string rule;
  std::string term;
  LType<Ix> ltype;
  std::vector<Derivation> premises;
};

// One judgement per line, "rule : term : ltype", premises indented by two
// spaces below their conclusion.
template <class Ix>
void render_derivation_into(const Derivation<Ix>& d, std::string& out, std::size_t indent = 0) {
  out.append(indent, ' ');
  out += d.rule + " : " + d.term + " : " + to_string(d.ltype) + "\n";
  for (const auto& p : d.premises) render_derivation_into(p, out, indent + 2);
}

template <class Ix>
std::string render_derivation(const Derivation<Ix>& d) {
  std::string out;
  render_derivation_into(d, out);
  return out;
}

template <class Ix>
struct Typing {
  LType<Ix> ltype;
  Derivation<Ix> derivation;
};

}  // namespace lcalc
