#include "lcalc/upsilon.hpp"

#include <stdexcept>

#include "lcalc/lin.hpp"
#include "lexer.hpp"

namespace lcalc {

// ---------------------------------------------------------------- nodes

struct RawUpsilonTerm::Node {
  Kind kind;
  Nat value = 0;
  std::vector<RawUpsilonTerm> kids;
  std::optional<RawSubst> subst;
};

struct RawSubst::Node {
  Kind kind;
  std::optional<RawUpsilonTerm> term;
  std::optional<RawSubst> inner;
};

struct UpsilonTerm::Node {
  Kind kind;
  Nat value = 0;  // index value, or level of Upd/Sub
  std::vector<UpsilonTerm> kids;
};

RawUpsilonTerm RawUpsilonTerm::index(Nat n) {
  return RawUpsilonTerm(std::make_shared<Node>(Node{Kind::Index, n, {}, std::nullopt}));
}
RawUpsilonTerm RawUpsilonTerm::abs(RawUpsilonTerm body) {
  return RawUpsilonTerm(std::make_shared<Node>(Node{Kind::Abs, 0, {std::move(body)}, std::nullopt}));
}
RawUpsilonTerm RawUpsilonTerm::app(RawUpsilonTerm fun, RawUpsilonTerm arg) {
  return RawUpsilonTerm(
      std::make_shared<Node>(Node{Kind::App, 0, {std::move(fun), std::move(arg)}, std::nullopt}));
}
RawUpsilonTerm RawUpsilonTerm::closure(RawUpsilonTerm body, RawSubst subst) {
  return RawUpsilonTerm(
      std::make_shared<Node>(Node{Kind::Closure, 0, {std::move(body)}, std::move(subst)}));
}

RawUpsilonTerm::Kind RawUpsilonTerm::kind() const noexcept { return node_->kind; }

Nat RawUpsilonTerm::value() const {
  if (kind() != Kind::Index) throw std::logic_error("RawUpsilonTerm::value on non-index");
  return node_->value;
}
const RawUpsilonTerm& RawUpsilonTerm::body() const {
  if (kind() != Kind::Abs && kind() != Kind::Closure)
    throw std::logic_error("RawUpsilonTerm::body on wrong kind");
  return node_->kids[0];
}
const RawUpsilonTerm& RawUpsilonTerm::fun() const {
  if (kind() != Kind::App) throw std::logic_error("RawUpsilonTerm::fun on non-application");
  return node_->kids[0];
}
const RawUpsilonTerm& RawUpsilonTerm::arg() const {
  if (kind() != Kind::App) throw std::logic_error("RawUpsilonTerm::arg on non-application");
  return node_->kids[1];
}
const RawSubst& RawUpsilonTerm::subst() const {
  if (kind() != Kind::Closure) throw std::logic_error("RawUpsilonTerm::subst on non-closure");
  return *node_->subst;
}

bool operator==(const RawUpsilonTerm& a, const RawUpsilonTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->value != b.node_->value) return false;
  if (a.node_->kids != b.node_->kids) return false;
  return a.kind() != RawUpsilonTerm::Kind::Closure || a.subst() == b.subst();
}

RawSubst RawSubst::slash(RawUpsilonTerm t) {
  return RawSubst(std::make_shared<Node>(Node{Kind::Slash, std::move(t), std::nullopt}));
}
RawSubst RawSubst::lift(RawSubst s) {
  return RawSubst(std::make_shared<Node>(Node{Kind::Lift, std::nullopt, std::move(s)}));
}
RawSubst RawSubst::shift() {
  static const RawSubst shared(std::make_shared<Node>(Node{Kind::Shift, std::nullopt, std::nullopt}));
  return shared;
}

RawSubst::Kind RawSubst::kind() const noexcept { return node_->kind; }

const RawUpsilonTerm& RawSubst::term() const {
  if (kind() != Kind::Slash) throw std::logic_error("RawSubst::term on non-slash");
  return *node_->term;
}
const RawSubst& RawSubst::inner() const {
  if (kind() != Kind::Lift) throw std::logic_error("RawSubst::inner on non-lift");
  return *node_->inner;
}

bool operator==(const RawSubst& a, const RawSubst& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RawSubst::Kind::Slash: return a.term() == b.term();
    case RawSubst::Kind::Lift: return a.inner() == b.inner();
    case RawSubst::Kind::Shift: return true;
  }
  return false;
}

UpsilonTerm UpsilonTerm::index(Nat n) {
  return UpsilonTerm(std::make_shared<Node>(Node{Kind::Index, n, {}}));
}
UpsilonTerm UpsilonTerm::abs(UpsilonTerm body) {
  return UpsilonTerm(std::make_shared<Node>(Node{Kind::Abs, 0, {std::move(body)}}));
}
UpsilonTerm UpsilonTerm::app(UpsilonTerm fun, UpsilonTerm arg) {
  return UpsilonTerm(std::make_shared<Node>(Node{Kind::App, 0, {std::move(fun), std::move(arg)}}));
}
UpsilonTerm UpsilonTerm::upd(UpsilonTerm body, Nat level) {
  return UpsilonTerm(std::make_shared<Node>(Node{Kind::Upd, level, {std::move(body)}}));
}
UpsilonTerm UpsilonTerm::sub(UpsilonTerm body, UpsilonTerm arg, Nat level) {
  return UpsilonTerm(
      std::make_shared<Node>(Node{Kind::Sub, level, {std::move(body), std::move(arg)}}));
}

UpsilonTerm::Kind UpsilonTerm::kind() const noexcept { return node_->kind; }

Nat UpsilonTerm::value() const {
  if (kind() != Kind::Index) throw std::logic_error("UpsilonTerm::value on non-index");
  return node_->value;
}
Nat UpsilonTerm::level() const {
  if (kind() != Kind::Upd && kind() != Kind::Sub)
    throw std::logic_error("UpsilonTerm::level on wrong kind");
  return node_->value;
}
const UpsilonTerm& UpsilonTerm::body() const {
  if (kind() != Kind::Abs && kind() != Kind::Upd && kind() != Kind::Sub)
    throw std::logic_error("UpsilonTerm::body on wrong kind");
  return node_->kids[0];
}
const UpsilonTerm& UpsilonTerm::fun() const {
  if (kind() != Kind::App) throw std::logic_error("UpsilonTerm::fun on non-application");
  return node_->kids[0];
}
const UpsilonTerm& UpsilonTerm::arg() const {
  if (kind() != Kind::App && kind() != Kind::Sub)
    throw std::logic_error("UpsilonTerm::arg on wrong kind");
  return node_->kids[1];
}

bool operator==(const UpsilonTerm& a, const UpsilonTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->value == b.node_->value && a.node_->kids == b.node_->kids;
}

// ---------------------------------------------------------------- syntax

namespace {

using detail::Lexer;
using detail::Tok;
using Raw = RawUpsilonTerm;
using U = UpsilonTerm;

bool starts_atom(const Lexer& lex) {
  return lex.at(Tok::Nat) || lex.at(Tok::Lambda) || lex.at(Tok::LParen);
}

Raw parse_term(Lexer& lex);

RawSubst lifts(RawSubst s, Nat times) {
  for (Nat k = 0; k < times; ++k) s = RawSubst::lift(std::move(s));
  return s;
}

Nat level_of(Lexer& lex) {
  return static_cast<Nat>(lex.expect(Tok::Nat).nat);
}

RawSubst parse_subst(Lexer& lex) {
  if (lex.at(Tok::Lift)) {
    lex.next();
    return RawSubst::lift(parse_subst(lex));
  }
  if (lex.at(Tok::Bang)) {
    lex.next();
    return RawSubst::shift();
  }
  if (!starts_atom(lex)) lex.fail({"'^^'", "'!'", "term"});
  Raw t = parse_term(lex);
  lex.expect(Tok::Slash);
  return RawSubst::slash(std::move(t));
}

Raw parse_postfixed(Lexer& lex) {
  Raw acc = [&]() -> Raw {
    if (lex.at(Tok::Nat)) return Raw::index(static_cast<Nat>(lex.next().nat));
    if (lex.at(Tok::Lambda)) {
      lex.next();
      return Raw::abs(parse_term(lex));
    }
    if (lex.at(Tok::LParen)) {
      lex.next();
      Raw inner = parse_term(lex);
      lex.expect(Tok::RParen);
      return inner;
    }
    lex.fail({"natural number", "'\\'", "'('"});
  }();
  for (;;) {
    if (lex.at(Tok::Caret)) {
      lex.next();
      acc = Raw::closure(std::move(acc), lifts(RawSubst::shift(), level_of(lex)));
    } else if (lex.at(Tok::LBrace)) {
      lex.next();
      Raw u = parse_term(lex);
      lex.expect(Tok::Comma);
      const Nat i = level_of(lex);
      lex.expect(Tok::RBrace);
      acc = Raw::closure(std::move(acc), lifts(RawSubst::slash(std::move(u)), i));
    } else if (lex.at(Tok::LBracket)) {
      lex.next();
      RawSubst s = parse_subst(lex);
      lex.expect(Tok::RBracket);
      acc = Raw::closure(std::move(acc), std::move(s));
    } else {
      return acc;
    }
  }
}

Raw parse_term(Lexer& lex) {
  Raw acc = parse_postfixed(lex);
  while (starts_atom(lex)) acc = Raw::app(std::move(acc), parse_postfixed(lex));
  return acc;
}

void print_raw_into(const Raw& t, std::string& out);

void print_raw_subst_into(const RawSubst& s, std::string& out) {
  switch (s.kind()) {
    case RawSubst::Kind::Slash:
      print_raw_into(s.term(), out);
      out += '/';
      return;
    case RawSubst::Kind::Lift:
      out += "^^ ";
      print_raw_subst_into(s.inner(), out);
      return;
    case RawSubst::Kind::Shift:
      out += '!';
      return;
  }
}

// Shared layout rules for both spellings: a lambda body that is an
// application is bracketed, lambdas in operand position are bracketed,
// applications in argument position are bracketed, and a postfix operator
// brackets an application or lambda it applies to.
template <class T, class PrintFn>
void print_wrapped(const T& t, bool wrap, std::string& out, PrintFn print) {
  if (wrap) out += '(';
  print(t, out);
  if (wrap) out += ')';
}

void print_raw_into(const Raw& t, std::string& out) {
  using K = Raw::Kind;
  switch (t.kind()) {
    case K::Index:
      out += std::to_string(t.value());
      return;
    case K::Abs:
      out += '\\';
      print_wrapped(t.body(), t.body().kind() == K::App, out, print_raw_into);
      return;
    case K::App:
      print_wrapped(t.fun(), t.fun().kind() == K::Abs, out, print_raw_into);
      out += ' ';
      print_wrapped(t.arg(), t.arg().kind() == K::Abs || t.arg().kind() == K::App, out,
                    print_raw_into);
      return;
    case K::Closure:
      print_wrapped(t.body(), t.body().kind() == K::Abs || t.body().kind() == K::App, out,
                    print_raw_into);
      out += '[';
      print_raw_subst_into(t.subst(), out);
      out += ']';
      return;
  }
}

void print_u_into(const U& t, std::string& out) {
  using K = U::Kind;
  auto bracket_body = [](const U& b) { return b.kind() == K::Abs || b.kind() == K::App; };
  switch (t.kind()) {
    case K::Index:
      out += std::to_string(t.value());
      return;
    case K::Abs:
      out += '\\';
      print_wrapped(t.body(), t.body().kind() == K::App, out, print_u_into);
      return;
    case K::App:
      print_wrapped(t.fun(), t.fun().kind() == K::Abs, out, print_u_into);
      out += ' ';
      print_wrapped(t.arg(), bracket_body(t.arg()), out, print_u_into);
      return;
    case K::Upd:
      print_wrapped(t.body(), bracket_body(t.body()), out, print_u_into);
      out += '^' + std::to_string(t.level());
      return;
    case K::Sub:
      print_wrapped(t.body(), bracket_body(t.body()), out, print_u_into);
      out += '{';
      print_u_into(t.arg(), out);
      out += ',' + std::to_string(t.level()) + '}';
      return;
  }
}

}  // namespace

RawUpsilonTerm parse_raw_upsilon(std::string_view src) {
  Lexer lex(src, false);
  Raw t = parse_term(lex);
  if (!lex.at(Tok::End)) lex.fail({"term", "'^'", "'{'", "'['", "end of input"});
  return t;
}

UpsilonTerm parse_upsilon(std::string_view src) { return to_abbreviated(parse_raw_upsilon(src)); }

std::string print_raw_upsilon(const RawUpsilonTerm& t) {
  std::string out;
  print_raw_into(t, out);
  return out;
}

std::string print_raw_subst(const RawSubst& s) {
  std::string out;
  print_raw_subst_into(s, out);
  return out;
}

std::string print_upsilon(const UpsilonTerm& t) {
  std::string out;
  print_u_into(t, out);
  return out;
}

// ---------------------------------------------------------------- conversions

UpsilonTerm to_abbreviated(const RawUpsilonTerm& t) {
  switch (t.kind()) {
    case Raw::Kind::Index: return U::index(t.value());
    case Raw::Kind::Abs: return U::abs(to_abbreviated(t.body()));
    case Raw::Kind::App: return U::app(to_abbreviated(t.fun()), to_abbreviated(t.arg()));
    case Raw::Kind::Closure: {
      Nat level = 0;
      const RawSubst* s = &t.subst();
      while (s->kind() == RawSubst::Kind::Lift) {
        ++level;
        s = &s->inner();
      }
      U body = to_abbreviated(t.body());
      if (s->kind() == RawSubst::Kind::Shift) return U::upd(std::move(body), level);
      return U::sub(std::move(body), to_abbreviated(s->term()), level);
    }
  }
  throw std::logic_error("unreachable");
}

RawUpsilonTerm to_closures(const UpsilonTerm& t) {
  switch (t.kind()) {
    case U::Kind::Index: return Raw::index(t.value());
    case U::Kind::Abs: return Raw::abs(to_closures(t.body()));
    case U::Kind::App: return Raw::app(to_closures(t.fun()), to_closures(t.arg()));
    case U::Kind::Upd: return Raw::closure(to_closures(t.body()), lifts(RawSubst::shift(), t.level()));
    case U::Kind::Sub:
      return Raw::closure(to_closures(t.body()),
                          lifts(RawSubst::slash(to_closures(t.arg())), t.level()));
  }
  throw std::logic_error("unreachable");
}

RawUpsilonTerm to_raw(const PlainTerm& t) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: return Raw::index(t.value());
    case PlainTerm::Kind::Abs: return Raw::abs(to_raw(t.body()));
    case PlainTerm::Kind::App: return Raw::app(to_raw(t.fun()), to_raw(t.arg()));
  }
  throw std::logic_error("unreachable");
}

UpsilonTerm embed_upsilon(const PlainTerm& t) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: return U::index(t.value());
    case PlainTerm::Kind::Abs: return U::abs(embed_upsilon(t.body()));
    case PlainTerm::Kind::App: return U::app(embed_upsilon(t.fun()), embed_upsilon(t.arg()));
  }
  throw std::logic_error("unreachable");
}

namespace {

std::optional<PlainTerm> raw_plain(const Raw& t, TermPath& path) {
  switch (t.kind()) {
    case Raw::Kind::Index: return PlainTerm::index(t.value());
    case Raw::Kind::Abs: {
      path.push_back(0);
      auto b = raw_plain(t.body(), path);
      if (!b) return b;
      path.pop_back();
      return PlainTerm::abs(*b);
    }
    case Raw::Kind::App: {
      path.push_back(0);
      auto f = raw_plain(t.fun(), path);
      if (!f) return f;
      path.back() = 1;
      auto a = raw_plain(t.arg(), path);
      if (!a) return a;
      path.pop_back();
      return PlainTerm::app(*f, *a);
    }
    case Raw::Kind::Closure: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<PlainTerm> u_plain(const U& t, TermPath& path) {
  switch (t.kind()) {
    case U::Kind::Index: return PlainTerm::index(t.value());
    case U::Kind::Abs: {
      path.push_back(0);
      auto b = u_plain(t.body(), path);
      if (!b) return b;
      path.pop_back();
      return PlainTerm::abs(*b);
    }
    case U::Kind::App: {
      path.push_back(0);
      auto f = u_plain(t.fun(), path);
      if (!f) return f;
      path.back() = 1;
      auto a = u_plain(t.arg(), path);
      if (!a) return a;
      path.pop_back();
      return PlainTerm::app(*f, *a);
    }
    case U::Kind::Upd:
    case U::Kind::Sub: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Result<PlainTerm, ClosureRemains> from_raw(const RawUpsilonTerm& t) {
  TermPath path;
  auto p = raw_plain(t, path);
  if (!p) return ClosureRemains{path};
  return *p;
}

Result<PlainTerm, ClosureRemains> upsilon_to_plain(const UpsilonTerm& t) {
  TermPath path;
  auto p = u_plain(t, path);
  if (!p) return ClosureRemains{path};
  return *p;
}

// ---------------------------------------------------------------- rewriting

const std::vector<std::string>& raw_rule_names() {
  static const std::vector<std::string> names = {"B",        "App",      "Lambda",   "FVar",
                                                 "RVar",     "FVarLift", "RVarLift", "VarShift"};
  return names;
}

const std::vector<std::string>& lin_upsilon_rule_names() {
  static const std::vector<std::string> names = {
      "B_in",         "App_upd",      "App_sub",      "Lambda_upd",
      "Lambda_sub",   "FVar_sub",     "RVar_sub",     "FVarLift_sub",
      "RVarLift_sub", "FVarLift_upd", "RVarLift_upd", "VarShift_upd"};
  return names;
}

namespace {

std::optional<Rewrite<Raw>> raw_root(const Raw& t) {
  using K = Raw::Kind;
  if (t.kind() == K::App) {
    if (t.fun().kind() == K::Abs)
      return Rewrite<Raw>{Raw::closure(t.fun().body(), RawSubst::slash(t.arg())), "B"};
    return std::nullopt;
  }
  if (t.kind() != K::Closure) return std::nullopt;
  const Raw& b = t.body();
  const RawSubst& s = t.subst();
  switch (b.kind()) {
    case K::App:
      return Rewrite<Raw>{Raw::app(Raw::closure(b.fun(), s), Raw::closure(b.arg(), s)), "App"};
    case K::Abs:
      return Rewrite<Raw>{Raw::abs(Raw::closure(b.body(), RawSubst::lift(s))), "Lambda"};
    case K::Closure: return std::nullopt;
    case K::Index: break;
  }
  const Nat n = b.value();
  switch (s.kind()) {
    case RawSubst::Kind::Slash:
      if (n == 0) return Rewrite<Raw>{s.term(), "FVar"};
      return Rewrite<Raw>{Raw::index(n - 1), "RVar"};
    case RawSubst::Kind::Lift:
      if (n == 0) return Rewrite<Raw>{Raw::index(0), "FVarLift"};
      return Rewrite<Raw>{
          Raw::closure(Raw::closure(Raw::index(n - 1), s.inner()), RawSubst::shift()), "RVarLift"};
    case RawSubst::Kind::Shift:
      return Rewrite<Raw>{Raw::index(n + 1), "VarShift"};
  }
  return std::nullopt;
}

std::optional<Rewrite<U>> u_root(const U& t) {
  using K = U::Kind;
  switch (t.kind()) {
    case K::Index:
    case K::Abs: return std::nullopt;
    case K::App:
      if (t.fun().kind() == K::Abs) return Rewrite<U>{U::sub(t.fun().body(), t.arg(), 0), "B_in"};
      return std::nullopt;
    case K::Upd: {
      const U& b = t.body();
      const Nat i = t.level();
      switch (b.kind()) {
        case K::App: return Rewrite<U>{U::app(U::upd(b.fun(), i), U::upd(b.arg(), i)), "App_upd"};
        case K::Abs: return Rewrite<U>{U::abs(U::upd(b.body(), i + 1)), "Lambda_upd"};
        case K::Index: {
          const Nat n = b.value();
          if (i == 0) return Rewrite<U>{U::index(n + 1), "VarShift_upd"};
          if (n == 0) return Rewrite<U>{U::index(0), "FVarLift_upd"};
          return Rewrite<U>{U::upd(U::upd(U::index(n - 1), i - 1), 0), "RVarLift_upd"};
        }
        default: return std::nullopt;
      }
    }
    case K::Sub: {
      const U& b = t.body();
      const U& u = t.arg();
      const Nat i = t.level();
      switch (b.kind()) {
        case K::App:
          return Rewrite<U>{U::app(U::sub(b.fun(), u, i), U::sub(b.arg(), u, i)), "App_sub"};
        case K::Abs: return Rewrite<U>{U::abs(U::sub(b.body(), u, i + 1)), "Lambda_sub"};
        case K::Index: {
          const Nat n = b.value();
          if (i == 0) {
            if (n == 0) return Rewrite<U>{u, "FVar_sub"};
            return Rewrite<U>{U::index(n - 1), "RVar_sub"};
          }
          if (n == 0) return Rewrite<U>{U::index(0), "FVarLift_sub"};
          return Rewrite<U>{U::upd(U::sub(U::index(n - 1), u, i - 1), 0), "RVarLift_sub"};
        }
        default: return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::optional<Rewrite<RawSubst>> raw_subst_at(const RawSubst& s, const TermPath& p, std::size_t k);

std::optional<Rewrite<Raw>> raw_at(const Raw& t, const TermPath& p, std::size_t k) {
  if (k == p.size()) return raw_root(t);
  const std::size_t c = p[k];
  switch (t.kind()) {
    case Raw::Kind::Index: return std::nullopt;
    case Raw::Kind::Abs: {
      if (c != 0) return std::nullopt;
      auto r = raw_at(t.body(), p, k + 1);
      if (r) r->term = Raw::abs(r->term);
      return r;
    }
    case Raw::Kind::App: {
      if (c > 1) return std::nullopt;
      auto r = raw_at(c == 0 ? t.fun() : t.arg(), p, k + 1);
      if (r) r->term = c == 0 ? Raw::app(r->term, t.arg()) : Raw::app(t.fun(), r->term);
      return r;
    }
    case Raw::Kind::Closure: {
      if (c == 0) {
        auto r = raw_at(t.body(), p, k + 1);
        if (r) r->term = Raw::closure(r->term, t.subst());
        return r;
      }
      if (c != 1) return std::nullopt;
      auto r = raw_subst_at(t.subst(), p, k + 1);
      if (!r) return std::nullopt;
      return Rewrite<Raw>{Raw::closure(t.body(), r->term), r->rule};
    }
  }
  return std::nullopt;
}

std::optional<Rewrite<RawSubst>> raw_subst_at(const RawSubst& s, const TermPath& p, std::size_t k) {
  if (k == p.size() || p[k] != 0) return std::nullopt;
  switch (s.kind()) {
    case RawSubst::Kind::Slash: {
      auto r = raw_at(s.term(), p, k + 1);
      if (!r) return std::nullopt;
      return Rewrite<RawSubst>{RawSubst::slash(r->term), r->rule};
    }
    case RawSubst::Kind::Lift: {
      auto r = raw_subst_at(s.inner(), p, k + 1);
      if (r) r->term = RawSubst::lift(r->term);
      return r;
    }
    case RawSubst::Kind::Shift: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Rewrite<U>> u_at(const U& t, const TermPath& p, std::size_t k) {
  if (k == p.size()) return u_root(t);
  const std::size_t c = p[k];
  switch (t.kind()) {
    case U::Kind::Index: return std::nullopt;
    case U::Kind::Abs:
    case U::Kind::Upd: {
      if (c != 0) return std::nullopt;
      auto r = u_at(t.body(), p, k + 1);
      if (r) r->term = t.kind() == U::Kind::Abs ? U::abs(r->term) : U::upd(r->term, t.level());
      return r;
    }
    case U::Kind::App: {
      if (c > 1) return std::nullopt;
      auto r = u_at(c == 0 ? t.fun() : t.arg(), p, k + 1);
      if (r) r->term = c == 0 ? U::app(r->term, t.arg()) : U::app(t.fun(), r->term);
      return r;
    }
    case U::Kind::Sub: {
      if (c > 1) return std::nullopt;
      auto r = u_at(c == 0 ? t.body() : t.arg(), p, k + 1);
      if (r)
        r->term = c == 0 ? U::sub(r->term, t.arg(), t.level()) : U::sub(t.body(), r->term, t.level());
      return r;
    }
  }
  return std::nullopt;
}

void raw_subst_positions(const RawSubst& s, TermPath& path, std::vector<TermPath>& out,
                         bool first_only);

// Returns true once a redex is found when first_only is set.
bool raw_positions(const Raw& t, TermPath& path, std::vector<TermPath>& out, bool first_only) {
  if (raw_root(t)) {
    out.push_back(path);
    if (first_only) return true;
  }
  auto visit = [&](std::size_t c, const Raw& kid) {
    path.push_back(c);
    const bool done = raw_positions(kid, path, out, first_only);
    path.pop_back();
    return done;
  };
  switch (t.kind()) {
    case Raw::Kind::Index: return false;
    case Raw::Kind::Abs: return visit(0, t.body());
    case Raw::Kind::App: return visit(0, t.fun()) || visit(1, t.arg());
    case Raw::Kind::Closure: {
      if (visit(0, t.body())) return true;
      path.push_back(1);
      raw_subst_positions(t.subst(), path, out, first_only);
      path.pop_back();
      return first_only && !out.empty();
    }
  }
  return false;
}

void raw_subst_positions(const RawSubst& s, TermPath& path, std::vector<TermPath>& out,
                         bool first_only) {
  path.push_back(0);
  if (s.kind() == RawSubst::Kind::Slash) raw_positions(s.term(), path, out, first_only);
  else if (s.kind() == RawSubst::Kind::Lift) raw_subst_positions(s.inner(), path, out, first_only);
  path.pop_back();
}

bool u_positions(const U& t, TermPath& path, std::vector<TermPath>& out, bool first_only) {
  if (u_root(t)) {
    out.push_back(path);
    if (first_only) return true;
  }
  auto visit = [&](std::size_t c, const U& kid) {
    path.push_back(c);
    const bool done = u_positions(kid, path, out, first_only);
    path.pop_back();
    return done;
  };
  switch (t.kind()) {
    case U::Kind::Index: return false;
    case U::Kind::Abs:
    case U::Kind::Upd: return visit(0, t.body());
    case U::Kind::App: return visit(0, t.fun()) || visit(1, t.arg());
    case U::Kind::Sub: return visit(0, t.body()) || visit(1, t.arg());
  }
  return false;
}

}  // namespace

Result<Rewrite<RawUpsilonTerm>, NoRedex> step_raw(const RawUpsilonTerm& t, const TermPath& at) {
  auto r = raw_at(t, at, 0);
  if (!r) return NoRedex{at};
  return *r;
}

Result<Rewrite<UpsilonTerm>, NoRedex> step_in(const UpsilonTerm& t, const TermPath& at) {
  auto r = u_at(t, at, 0);
  if (!r) return NoRedex{at};
  return *r;
}

std::vector<TermPath> raw_redex_positions(const RawUpsilonTerm& t) {
  std::vector<TermPath> out;
  TermPath path;
  raw_positions(t, path, out, false);
  return out;
}

std::vector<TermPath> in_redex_positions(const UpsilonTerm& t) {
  std::vector<TermPath> out;
  TermPath path;
  u_positions(t, path, out, false);
  return out;
}

// ---------------------------------------------------------------- typing

namespace {

using NatResult = Result<NatLType, TypeFailure>;

NatResult merge_or_fail(const NatLType& a, const NatLType& b, const char* rule,
                        const TermPath& path) {
  auto m = merge(a, b);
  if (!m)
    return TypeFailure{FailureKind::MergeConflict, rule, path, std::to_string(m.error().index),
                       to_string(a) + " and " + to_string(b) + " overlap"};
  return m.value();
}

NatResult infer_u(const U& t, TermPath& path, Derivation<Nat>* d) {
  auto conclude = [&](const char* rule, const NatLType& l) {
    if (d) {
      d->rule = rule;
      d->term = print_upsilon(t);
      d->ltype = l;
    }
    return NatResult(l);
  };
  auto premise = [&](std::size_t c, const U& kid) {
    Derivation<Nat>* sub = d ? &d->premises[c] : nullptr;
    path.push_back(c);
    NatResult r = infer_u(kid, path, sub);
    path.pop_back();
    return r;
  };
  if (d) {
    switch (t.kind()) {
      case U::Kind::Index: break;
      case U::Kind::Abs:
      case U::Kind::Upd: d->premises.resize(1); break;
      case U::Kind::App:
      case U::Kind::Sub: d->premises.resize(2); break;
    }
  }

  switch (t.kind()) {
    case U::Kind::Index: return conclude("ind", NatLType::singleton(t.value()));

    case U::Kind::Abs: {
      NatResult body = premise(0, t.body());
      if (!body) return body;
      const NatLType& l = body.value();
      if (l.empty() || l.front() != 0)
        return TypeFailure{FailureKind::AbsHeadMissing, "abs", path, "",
                           "body type " + to_string(l) + " does not start with 0"};
      auto lowered = decrement(l.tail());
      if (!lowered) return TypeFailure{FailureKind::DecrementZero, "abs", path, "0", ""};
      return conclude("abs", lowered.value());
    }

    case U::Kind::App: {
      NatResult f = premise(0, t.fun());
      if (!f) return f;
      NatResult a = premise(1, t.arg());
      if (!a) return a;
      NatResult m = merge_or_fail(f.value(), a.value(), "app", path);
      if (!m) return m;
      return conclude("app", m.value());
    }

    case U::Kind::Upd: {
      NatResult body = premise(0, t.body());
      if (!body) return body;
      const Nat i = t.level();
      const NatLType& l = body.value();
      NatResult m = merge_or_fail(filter(BasicPredicate::less_than(i), l),
                                  increment(filter(BasicPredicate::at_least(i), l)), "upd", path);
      if (!m) return m;
      return conclude("upd", m.value());
    }

    case U::Kind::Sub: {
      NatResult l1r = premise(0, t.body());
      if (!l1r) return l1r;
      NatResult l2r = premise(1, t.arg());
      if (!l2r) return l2r;
      const Nat i = t.level();
      const NatLType& l1 = l1r.value();
      const bool member = l1.contains(i);
      const char* rule = member ? "sub-in" : "sub-notin";
      auto above = decrement(filter(BasicPredicate::greater_than(i), l1));
      if (!above) return TypeFailure{FailureKind::DecrementZero, rule, path, "0", ""};
      NatResult kept = merge_or_fail(filter(BasicPredicate::less_than(i), l1), above.value(), rule, path);
      if (!kept) return kept;
      if (!member) return conclude(rule, kept.value());
      NatResult m = merge_or_fail(kept.value(), increment(l2r.value(), i), rule, path);
      if (!m) return m;
      return conclude(rule, m.value());
    }
  }
  return NatLType{};
}

}  // namespace

Result<UpsilonTyping, TypeFailure> infer_upsilon(const UpsilonTerm& t) {
  UpsilonTyping typing;
  TermPath path;
  NatResult r = infer_u(t, path, &typing.derivation);
  if (!r) return r.error();
  typing.ltype = r.value();
  return typing;
}

Result<NatLType, TypeFailure> upsilon_type(const UpsilonTerm& t) {
  TermPath path;
  return infer_u(t, path, nullptr);
}

Result<PreservationReport, PreservationError> check_preservation_step(const UpsilonTerm& t,
                                                                     const TermPath& at) {
  using E = PreservationError;
  auto before = upsilon_type(t);
  if (!before) return E{E::Kind::IllTypedInput, "", before.error().message()};
  auto step = step_in(t, at);
  if (!step) return E{E::Kind::NoRedex, "", "no rule applies at " + path_to_string(at)};
  auto after = upsilon_type(step.value().term);
  const std::string& rule = step.value().rule;
  if (!after)
    return E{E::Kind::Violation, rule,
             "type " + to_string(before.value()) + " became ill-typed: " + after.error().message()};
  if (!(after.value() == before.value()))
    return E{E::Kind::Violation, rule,
             "type " + to_string(before.value()) + " became " + to_string(after.value())};
  return PreservationReport{rule, step.value().term, before.value(), after.value()};
}

// ---------------------------------------------------------------- normalization

Result<Normalized<RawUpsilonTerm>, NormalizeFailure> normalize_raw(const RawUpsilonTerm& t,
                                                                  const NormalizeOptions& opts) {
  return normalize_with<Raw>(
      t, opts,
      [](const Raw& x) -> std::optional<TermPath> {
        std::vector<TermPath> found;
        TermPath path;
        raw_positions(x, path, found, true);
        if (found.empty()) return std::nullopt;
        return found.front();
      },
      step_raw, [](const Raw& x) { return upsilon_type(to_abbreviated(x)); });
}

Result<Normalized<UpsilonTerm>, NormalizeFailure> normalize_in(const UpsilonTerm& t,
                                                              const NormalizeOptions& opts) {
  return normalize_with<U>(
      t, opts,
      [](const U& x) -> std::optional<TermPath> {
        std::vector<TermPath> found;
        TermPath path;
        u_positions(x, path, found, true);
        if (found.empty()) return std::nullopt;
        return found.front();
      },
      step_in, upsilon_type);
}

Result<PipelineResult, NormalizeFailure> normalize_pipeline(const PlainTerm& t,
                                                            const NormalizeOptions& opts) {
  auto run = normalize_raw(to_raw(t), opts);
  if (!run) return run.error();
  auto back = from_raw(run.value().term);
  if (!back)
    return NormalizeFailure{NormalizeFailure::Kind::ClosureRemains, run.value().steps,
                            "closure left at " + path_to_string(back.error().at)};
  return PipelineResult{back.value(), run.value()};
}

Result<PipelineResult, NormalizeFailure> normalize_lin_pipeline(const PlainTerm& t,
                                                                const NormalizeOptions& opts) {
  auto ty = lin_type(t);
  if (!ty || !ty.value().empty())
    return NormalizeFailure{NormalizeFailure::Kind::NotClosedLinear, 0,
                            ty ? "input has L-type " + to_string(ty.value())
                               : "input is not L-typeable: " + ty.error().message()};
  auto r = normalize_pipeline(t, opts);
  if (!r) return r;
  if (!check_lin(r.value().result, NatLType{}))
    return NormalizeFailure{NormalizeFailure::Kind::LinearityLost, r.value().run.steps,
                            "result " + print_plain(r.value().result) + " is not closed linear"};
  return r;
}

}  // namespace lcalc
