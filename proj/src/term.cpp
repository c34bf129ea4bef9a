#include "lcalc/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "lexer.hpp"

namespace lcalc {

PlainTerm PlainTerm::index(Nat n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Index;
  node->value = n;
  return PlainTerm(std::move(node));
}

PlainTerm PlainTerm::abs(PlainTerm body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Abs;
  node->size = 1 + body.size();
  node->kids.push_back(std::move(body));
  return PlainTerm(std::move(node));
}

PlainTerm PlainTerm::app(PlainTerm fun, PlainTerm arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = 1 + fun.size() + arg.size();
  node->kids.push_back(std::move(fun));
  node->kids.push_back(std::move(arg));
  return PlainTerm(std::move(node));
}

Nat PlainTerm::value() const {
  if (!is_index()) throw std::logic_error("PlainTerm::value on non-index");
  return node_->value;
}

const PlainTerm& PlainTerm::body() const {
  if (!is_abs()) throw std::logic_error("PlainTerm::body on non-abstraction");
  return node_->kids[0];
}

const PlainTerm& PlainTerm::fun() const {
  if (!is_app()) throw std::logic_error("PlainTerm::fun on non-application");
  return node_->kids[0];
}

const PlainTerm& PlainTerm::arg() const {
  if (!is_app()) throw std::logic_error("PlainTerm::arg on non-application");
  return node_->kids[1];
}

bool operator==(const PlainTerm& a, const PlainTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case PlainTerm::Kind::Index: return a.value() == b.value();
    case PlainTerm::Kind::Abs: return a.body() == b.body();
    case PlainTerm::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

namespace {

using detail::Lexer;
using detail::Tok;

bool starts_atom(const Lexer& lex) {
  return lex.at(Tok::Nat) || lex.at(Tok::Lambda) || lex.at(Tok::LParen);
}

PlainTerm parse_term(Lexer& lex);

PlainTerm parse_atom(Lexer& lex) {
  if (lex.at(Tok::Nat)) return PlainTerm::index(static_cast<Nat>(lex.next().nat));
  if (lex.at(Tok::Lambda)) {
    lex.next();
    return PlainTerm::abs(parse_term(lex));
  }
  if (lex.at(Tok::LParen)) {
    lex.next();
    PlainTerm inner = parse_term(lex);
    lex.expect(Tok::RParen);
    return inner;
  }
  lex.fail({"natural number", "'\\'", "'('"});
}

PlainTerm parse_term(Lexer& lex) {
  PlainTerm acc = parse_atom(lex);
  while (starts_atom(lex)) acc = PlainTerm::app(std::move(acc), parse_atom(lex));
  return acc;
}

void print_into(const PlainTerm& t, std::string& out);

void print_operand(const PlainTerm& t, std::string& out, bool is_fun) {
  const bool wrap = t.is_abs() || (!is_fun && t.is_app());
  if (wrap) out += '(';
  print_into(t, out);
  if (wrap) out += ')';
}

void print_into(const PlainTerm& t, std::string& out) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index:
      out += std::to_string(t.value());
      return;
    case PlainTerm::Kind::Abs:
      out += '\\';
      if (t.body().is_app()) {
        out += '(';
        print_into(t.body(), out);
        out += ')';
      } else {
        print_into(t.body(), out);
      }
      return;
    case PlainTerm::Kind::App:
      print_operand(t.fun(), out, true);
      out += ' ';
      print_operand(t.arg(), out, false);
      return;
  }
}

void collect_free(const PlainTerm& t, Nat depth, std::vector<Nat>& out) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index:
      if (t.value() >= depth) out.push_back(t.value() - depth);
      return;
    case PlainTerm::Kind::Abs:
      collect_free(t.body(), depth + 1, out);
      return;
    case PlainTerm::Kind::App:
      collect_free(t.fun(), depth, out);
      collect_free(t.arg(), depth, out);
      return;
  }
}

// Walks t with a stack of binder slots; slot k counts occurrences bound by
// the k-th enclosing lambda (innermost last).
void profile_walk(const PlainTerm& t, std::vector<std::size_t>& binder_slot,
                  std::vector<std::size_t>& counts, std::vector<Nat>& free) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: {
      const Nat n = t.value();
      if (n < binder_slot.size()) {
        ++counts[binder_slot[binder_slot.size() - 1 - n]];
      } else {
        free.push_back(n - static_cast<Nat>(binder_slot.size()));
      }
      return;
    }
    case PlainTerm::Kind::Abs:
      binder_slot.push_back(counts.size());
      counts.push_back(0);
      profile_walk(t.body(), binder_slot, counts, free);
      binder_slot.pop_back();
      return;
    case PlainTerm::Kind::App:
      profile_walk(t.fun(), binder_slot, counts, free);
      profile_walk(t.arg(), binder_slot, counts, free);
      return;
  }
}

}  // namespace

PlainTerm parse_plain(std::string_view src) {
  Lexer lex(src, false);
  PlainTerm t = parse_term(lex);
  if (!lex.at(Tok::End)) lex.fail({"natural number", "'\\'", "'('", "end of input"});
  return t;
}

std::string print_plain(const PlainTerm& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::vector<Nat> free_indices(const PlainTerm& t) {
  std::vector<Nat> out;
  collect_free(t, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

OccurrenceProfile occurrence_profile(const PlainTerm& t) {
  OccurrenceProfile profile;
  std::vector<std::size_t> slots;
  profile_walk(t, slots, profile.bound_counts, profile.free);
  std::sort(profile.free.begin(), profile.free.end());
  return profile;
}

bool is_closed_linear_structural(const PlainTerm& t) {
  const OccurrenceProfile p = occurrence_profile(t);
  return p.free.empty() &&
         std::all_of(p.bound_counts.begin(), p.bound_counts.end(),
                     [](std::size_t c) { return c == 1; });
}

bool occurs_free(const PlainTerm& t, Nat n) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: return t.value() == n;
    case PlainTerm::Kind::Abs: return occurs_free(t.body(), n + 1);
    case PlainTerm::Kind::App: return occurs_free(t.fun(), n) || occurs_free(t.arg(), n);
  }
  return false;
}

}  // namespace lcalc
