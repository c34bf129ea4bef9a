#include "lcalc/resource.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lcalc/lin.hpp"
#include "lcalc/upsilon.hpp"
#include "lexer.hpp"

namespace lcalc {

struct RTerm::Node {
  Kind kind;
  RIndex ix;
  std::size_t size = 1;
  std::vector<RTerm> kids;
};

RTerm RTerm::ind(RIndex ix) {
  return RTerm(std::make_shared<Node>(Node{Kind::Ind, std::move(ix), 1, {}}));
}
RTerm RTerm::abs(RTerm body) {
  const std::size_t n = 1 + body.size();
  return RTerm(std::make_shared<Node>(Node{Kind::Abs, {}, n, {std::move(body)}}));
}
RTerm RTerm::app(RTerm fun, RTerm arg) {
  const std::size_t n = 1 + fun.size() + arg.size();
  return RTerm(std::make_shared<Node>(Node{Kind::App, {}, n, {std::move(fun), std::move(arg)}}));
}
RTerm RTerm::era(RIndex ix, RTerm body) {
  const std::size_t n = 1 + body.size();
  return RTerm(std::make_shared<Node>(Node{Kind::Era, std::move(ix), n, {std::move(body)}}));
}
RTerm RTerm::dup(RIndex ix, RTerm body) {
  const std::size_t n = 1 + body.size();
  return RTerm(std::make_shared<Node>(Node{Kind::Dup, std::move(ix), n, {std::move(body)}}));
}

RTerm::Kind RTerm::kind() const noexcept { return node_->kind; }
std::size_t RTerm::size() const noexcept { return node_->size; }

const RIndex& RTerm::index() const {
  if (kind() == Kind::Abs || kind() == Kind::App)
    throw std::logic_error("RTerm::index on abstraction or application");
  return node_->ix;
}
const RTerm& RTerm::body() const {
  if (kind() == Kind::Ind || kind() == Kind::App)
    throw std::logic_error("RTerm::body on index or application");
  return node_->kids[0];
}
const RTerm& RTerm::fun() const {
  if (kind() != Kind::App) throw std::logic_error("RTerm::fun on non-application");
  return node_->kids[0];
}
const RTerm& RTerm::arg() const {
  if (kind() != Kind::App) throw std::logic_error("RTerm::arg on non-application");
  return node_->kids[1];
}

bool operator==(const RTerm& a, const RTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.size() == b.size() && a.node_->ix == b.node_->ix &&
         a.node_->kids == b.node_->kids;
}

// ---------------------------------------------------------------- syntax

namespace {

using detail::Lexer;
using detail::Tok;
using K = RTerm::Kind;

bool starts_atom(const Lexer& lex) {
  return lex.at(Tok::Nat) || lex.at(Tok::RIndex) || lex.at(Tok::Lambda) || lex.at(Tok::LParen) ||
         lex.at_ident("era") || lex.at_ident("dup");
}

RIndex parse_index(Lexer& lex) {
  if (!lex.at(Tok::Nat) && !lex.at(Tok::RIndex)) lex.fail({"resource index"});
  detail::Token t = lex.next();
  return RIndex(static_cast<Nat>(t.nat), t.bits);
}

RTerm parse_term(Lexer& lex);

RTerm parse_atom(Lexer& lex) {
  if (lex.at(Tok::Nat) || lex.at(Tok::RIndex)) return RTerm::ind(parse_index(lex));
  if (lex.at(Tok::Lambda)) {
    lex.next();
    return RTerm::abs(parse_term(lex));
  }
  if (lex.at(Tok::LParen)) {
    lex.next();
    RTerm inner = parse_term(lex);
    lex.expect(Tok::RParen);
    return inner;
  }
  if (lex.at_ident("era") || lex.at_ident("dup")) {
    const bool is_era = lex.next().text == "era";
    RIndex ix = parse_index(lex);
    RTerm body = parse_term(lex);
    return is_era ? RTerm::era(std::move(ix), std::move(body))
                  : RTerm::dup(std::move(ix), std::move(body));
  }
  lex.fail({"resource index", "'\\'", "'('", "'era'", "'dup'"});
}

RTerm parse_term(Lexer& lex) {
  RTerm acc = parse_atom(lex);
  while (starts_atom(lex)) acc = RTerm::app(std::move(acc), parse_atom(lex));
  return acc;
}

bool is_prefix_form(const RTerm& t) {
  return t.kind() == K::Abs || t.kind() == K::Era || t.kind() == K::Dup;
}

void print_into(const RTerm& t, std::string& out);

void print_wrapped(const RTerm& t, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(t, out);
  if (wrap) out += ')';
}

void print_into(const RTerm& t, std::string& out) {
  switch (t.kind()) {
    case K::Ind:
      out += rindex_to_string(t.index());
      return;
    case K::Abs:
      out += '\\';
      print_wrapped(t.body(), t.body().kind() == K::App, out);
      return;
    case K::Era:
    case K::Dup:
      out += t.kind() == K::Era ? "era " : "dup ";
      out += rindex_to_string(t.index());
      out += ' ';
      print_wrapped(t.body(), t.body().kind() == K::App, out);
      return;
    case K::App:
      print_wrapped(t.fun(), is_prefix_form(t.fun()), out);
      out += ' ';
      print_wrapped(t.arg(), is_prefix_form(t.arg()) || t.arg().kind() == K::App, out);
      return;
  }
}

}  // namespace

RTerm parse_rterm(std::string_view src) {
  Lexer lex(src, true);
  RTerm t = parse_term(lex);
  if (!lex.at(Tok::End)) lex.fail({"term", "end of input"});
  return t;
}

std::string print_rterm(const RTerm& t) {
  std::string out;
  print_into(t, out);
  return out;
}

// ---------------------------------------------------------------- typing

namespace {

using RResult = Result<RLType, TypeFailure>;

RResult merge_or_fail(const RLType& a, const RLType& b, const char* rule, const TermPath& path) {
  auto m = merge(a, b);
  if (!m)
    return TypeFailure{FailureKind::MergeConflict, rule, path,
                       rindex_to_pair_string(m.error().index),
                       to_string(a) + " and " + to_string(b) + " overlap"};
  return m.value();
}

RResult infer(const RTerm& t, TermPath& path, Derivation<RIndex>* d) {
  auto conclude = [&](const char* rule, const RLType& l) {
    if (d) {
      d->rule = rule;
      d->term = print_rterm(t);
      d->ltype = l;
    }
    return RResult(l);
  };
  auto premise = [&](std::size_t c, const RTerm& kid) {
    Derivation<RIndex>* sub = d ? &d->premises[c] : nullptr;
    path.push_back(c);
    RResult r = infer(kid, path, sub);
    path.pop_back();
    return r;
  };
  if (d) d->premises.resize(t.kind() == K::Ind ? 0 : t.kind() == K::App ? 2 : 1);

  switch (t.kind()) {
    case K::Ind: return conclude("ind", RLType::singleton(t.index()));

    case K::Abs: {
      RResult body = premise(0, t.body());
      if (!body) return body;
      const RLType& l = body.value();
      if (l.empty() || !(l.front() == RIndex(0)))
        return TypeFailure{FailureKind::AbsHeadMissing, "abs", path, "",
                           "body type " + to_string(l) + " does not start with (0,e)"};
      RLType rest = l.tail();
      if (!rest.empty() && rest.front().depth == 0)
        return TypeFailure{FailureKind::ZeroDepthRemains, "abs", path,
                           rindex_to_pair_string(rest.front()),
                           "binder would capture more than one index"};
      auto lowered = decrement(rest);
      if (!lowered) return TypeFailure{FailureKind::DecrementZero, "abs", path, "", ""};
      return conclude("abs", lowered.value());
    }

    case K::App: {
      RResult f = premise(0, t.fun());
      if (!f) return f;
      RResult a = premise(1, t.arg());
      if (!a) return a;
      RResult m = merge_or_fail(f.value(), a.value(), "app", path);
      if (!m) return m;
      return conclude("app", m.value());
    }

    case K::Era: {
      RResult body = premise(0, t.body());
      if (!body) return body;
      RResult m = merge_or_fail(RLType::singleton(t.index()), body.value(), "era", path);
      if (!m) return m;
      return conclude("era", m.value());
    }

    case K::Dup: {
      RResult body = premise(0, t.body());
      if (!body) return body;
      const RIndex& ix = t.index();
      const RIndex left = ix.child(false);
      const RIndex right = ix.child(true);
      for (const RIndex& c : {left, right})
        if (!body.value().contains(c))
          return TypeFailure{FailureKind::DupChildrenMissing, "dup", path,
                             rindex_to_pair_string(c), "not free in the body"};
      RResult m = merge_or_fail(RLType::singleton(ix), body.value().without(left).without(right),
                                "dup", path);
      if (!m) return m;
      return conclude("dup", m.value());
    }
  }
  return RLType{};
}

}  // namespace

Result<RTyping, TypeFailure> infer_r(const RTerm& t) {
  RTyping typing;
  TermPath path;
  RResult r = infer(t, path, &typing.derivation);
  if (!r) return r.error();
  typing.ltype = r.value();
  return typing;
}

Result<RLType, TypeFailure> r_type(const RTerm& t) {
  TermPath path;
  return infer(t, path, nullptr);
}

Result<RLType, NotWellFormed> free_r_indices(const RTerm& t) {
  auto r = r_type(t);
  if (!r) return NotWellFormed{r.error()};
  return r.value();
}

bool is_linear_and_closed(const RTerm& t) {
  auto r = r_type(t);
  return r.ok() && r.value().empty();
}

// ---------------------------------------------------------------- structure

namespace {

void collect_free(const RTerm& t, std::set<RIndex>& out) {
  switch (t.kind()) {
    case K::Ind: out.insert(t.index()); return;
    case K::Abs: {
      std::set<RIndex> inner;
      collect_free(t.body(), inner);
      for (const RIndex& ix : inner)
        if (ix.depth > 0) out.insert(RIndex(ix.depth - 1, ix.path));
      return;
    }
    case K::App:
      collect_free(t.fun(), out);
      collect_free(t.arg(), out);
      return;
    case K::Era:
      collect_free(t.body(), out);
      out.insert(t.index());
      return;
    case K::Dup: {
      std::set<RIndex> inner;
      collect_free(t.body(), inner);
      inner.erase(t.index().child(false));
      inner.erase(t.index().child(true));
      inner.insert(t.index());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

bool is_path_prefix(const Bits& prefix, const Bits& path) {
  return prefix.size() <= path.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

RIndex replaced(const RIndex& ix, const RIndex& from, const RIndex& to) {
  if (ix.depth != from.depth || !is_path_prefix(from.path, ix.path)) return ix;
  Bits path = to.path;
  path.insert(path.end(), ix.path.begin() + static_cast<std::ptrdiff_t>(from.path.size()),
              ix.path.end());
  return RIndex(to.depth, std::move(path));
}

RIndex prepended(const RIndex& ix, Nat i, bool b) {
  if (ix.depth != i) return ix;
  Bits path;
  path.reserve(ix.path.size() + 1);
  path.push_back(b);
  path.insert(path.end(), ix.path.begin(), ix.path.end());
  return RIndex(ix.depth, std::move(path));
}

// Applies f(index, binder depth) to every index and annotation.
template <class F>
RTerm map_indices(const RTerm& t, Nat depth, const F& f) {
  switch (t.kind()) {
    case K::Ind: return RTerm::ind(f(t.index(), depth));
    case K::Abs: return RTerm::abs(map_indices(t.body(), depth + 1, f));
    case K::App: return RTerm::app(map_indices(t.fun(), depth, f), map_indices(t.arg(), depth, f));
    case K::Era: return RTerm::era(f(t.index(), depth), map_indices(t.body(), depth, f));
    case K::Dup: return RTerm::dup(f(t.index(), depth), map_indices(t.body(), depth, f));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<RIndex> structural_free(const RTerm& t) {
  std::set<RIndex> out;
  collect_free(t, out);
  return {out.begin(), out.end()};
}

RTerm replace(const RTerm& t, const RIndex& from, const RIndex& to) {
  return map_indices(t, 0, [&](const RIndex& ix, Nat depth) {
    return replaced(ix, RIndex(from.depth + depth, from.path), RIndex(to.depth + depth, to.path));
  });
}

RTerm rename_prepend(const RTerm& t, Nat i, bool b) {
  return map_indices(t, 0, [&](const RIndex& ix, Nat depth) { return prepended(ix, i + depth, b); });
}

// ---------------------------------------------------------------- rewriting

const std::vector<std::string>& r_rule_names() {
  static const std::vector<std::string> names = {
      "lambda-era", "dup-lambda", "AppL-era", "AppR-era", "AppL-dup", "AppR-dup",
      "era-era",    "era-dup1",   "era-dup0", "era-dup",  "dup-dup1", "dup-dup2"};
  return names;
}

namespace {

using RW = Rewrite<RTerm>;

bool free_in(const RTerm& t, const RIndex& ix) {
  const auto fv = structural_free(t);
  return std::binary_search(fv.begin(), fv.end(), ix);
}

std::optional<RW> root_rule(const RTerm& t) {
  switch (t.kind()) {
    case K::Ind: return std::nullopt;

    case K::Abs: {
      const RTerm& b = t.body();
      if (b.kind() == K::Era && b.index().depth >= 1)
        return RW{RTerm::era(RIndex(b.index().depth - 1, b.index().path), RTerm::abs(b.body())),
                  "lambda-era"};
      return std::nullopt;
    }

    case K::App:
      if (t.fun().kind() == K::Era)
        return RW{RTerm::era(t.fun().index(), RTerm::app(t.fun().body(), t.arg())), "AppL-era"};
      if (t.arg().kind() == K::Era)
        return RW{RTerm::era(t.arg().index(), RTerm::app(t.fun(), t.arg().body())), "AppR-era"};
      return std::nullopt;

    case K::Era: {
      const RTerm& b = t.body();
      if (b.kind() == K::Era && t.index().depth < b.index().depth)
        return RW{RTerm::era(b.index(), RTerm::era(t.index(), b.body())), "era-era"};
      return std::nullopt;
    }

    case K::Dup: {
      const RIndex& ix = t.index();
      const RIndex a0 = ix.child(false);
      const RIndex a1 = ix.child(true);
      const RTerm& b = t.body();
      switch (b.kind()) {
        case K::Ind: return std::nullopt;
        case K::Abs:
          return RW{RTerm::abs(RTerm::dup(RIndex(ix.depth + 1, ix.path), b.body())), "dup-lambda"};
        case K::App:
          if (free_in(b.fun(), a0) && free_in(b.fun(), a1))
            return RW{RTerm::app(RTerm::dup(ix, b.fun()), b.arg()), "AppL-dup"};
          if (free_in(b.arg(), a0) && free_in(b.arg(), a1))
            return RW{RTerm::app(b.fun(), RTerm::dup(ix, b.arg())), "AppR-dup"};
          return std::nullopt;
        case K::Era: {
          const RIndex& e = b.index();
          if (e == a1) return RW{replace(b.body(), a0, ix), "era-dup1"};
          if (e == a0) return RW{replace(b.body(), a1, ix), "era-dup0"};
          return RW{RTerm::era(e, RTerm::dup(ix, b.body())), "era-dup"};
        }
        case K::Dup: {
          const RIndex& e = b.index();
          if (e == a1) {
            RTerm inner = replace(b.body(), a0, a0.child(false));
            inner = replace(inner, a1.child(false), a0.child(true));
            inner = replace(inner, a1.child(true), a1);
            return RW{RTerm::dup(ix, RTerm::dup(a0, inner)), "dup-dup1"};
          }
          if (ix.depth < e.depth) return RW{RTerm::dup(e, RTerm::dup(ix, b.body())), "dup-dup2"};
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<RW> step_at(const RTerm& t, const TermPath& p, std::size_t k) {
  if (k == p.size()) return root_rule(t);
  const std::size_t c = p[k];
  switch (t.kind()) {
    case K::Ind: return std::nullopt;
    case K::App: {
      if (c > 1) return std::nullopt;
      auto r = step_at(c == 0 ? t.fun() : t.arg(), p, k + 1);
      if (r) r->term = c == 0 ? RTerm::app(r->term, t.arg()) : RTerm::app(t.fun(), r->term);
      return r;
    }
    case K::Abs:
    case K::Era:
    case K::Dup: {
      if (c != 0) return std::nullopt;
      auto r = step_at(t.body(), p, k + 1);
      if (!r) return r;
      if (t.kind() == K::Abs) r->term = RTerm::abs(r->term);
      else if (t.kind() == K::Era) r->term = RTerm::era(t.index(), r->term);
      else r->term = RTerm::dup(t.index(), r->term);
      return r;
    }
  }
  return std::nullopt;
}

bool positions(const RTerm& t, TermPath& path, std::vector<TermPath>& out, bool first_only) {
  if (root_rule(t)) {
    out.push_back(path);
    if (first_only) return true;
  }
  auto visit = [&](std::size_t c, const RTerm& kid) {
    path.push_back(c);
    const bool done = positions(kid, path, out, first_only);
    path.pop_back();
    return done;
  };
  switch (t.kind()) {
    case K::Ind: return false;
    case K::App: return visit(0, t.fun()) || visit(1, t.arg());
    default: return visit(0, t.body());
  }
}

}  // namespace

Result<Rewrite<RTerm>, NoRedex> step_r(const RTerm& t, const TermPath& at) {
  auto r = step_at(t, at, 0);
  if (!r) return NoRedex{at};
  return *r;
}

std::vector<TermPath> r_redex_positions(const RTerm& t) {
  std::vector<TermPath> out;
  TermPath path;
  positions(t, path, out, false);
  return out;
}

Result<Normalized<RTerm>, NormalizeFailure> normalize_dup_era(const RTerm& t,
                                                             const NormalizeOptions& opts) {
  return normalize_with<RTerm>(
      t, opts,
      [](const RTerm& x) -> std::optional<TermPath> {
        std::vector<TermPath> found;
        TermPath path;
        positions(x, path, found, true);
        if (found.empty()) return std::nullopt;
        return found.front();
      },
      step_r, r_type);
}

// ---------------------------------------------------------------- translations

PlainTerm readback(const RTerm& t) {
  switch (t.kind()) {
    case K::Ind: return PlainTerm::index(t.index().depth);
    case K::Abs: return PlainTerm::abs(readback(t.body()));
    case K::App: return PlainTerm::app(readback(t.fun()), readback(t.arg()));
    case K::Era:
    case K::Dup: return readback(t.body());
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<Nat> distinct_free(const PlainTerm& t) {
  std::vector<Nat> fv = free_indices(t);
  fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
  return fv;
}

// Splits off the leading duplicators of t whose depth is one of `common`.
RTerm strip_leading_dups(const RTerm& t, const std::vector<Nat>& common,
                         std::vector<RIndex>& chain) {
  const RTerm* cur = &t;
  while (cur->kind() == K::Dup &&
         std::binary_search(common.begin(), common.end(), cur->index().depth)) {
    chain.push_back(cur->index());
    cur = &cur->body();
  }
  return *cur;
}

}  // namespace

RTerm read(const PlainTerm& t) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: return RTerm::ind(RIndex(t.value()));
    case PlainTerm::Kind::Abs: {
      RTerm body = read(t.body());
      if (occurs_free(t.body(), 0)) return RTerm::abs(std::move(body));
      return RTerm::abs(RTerm::era(RIndex(0), std::move(body)));
    }
    case PlainTerm::Kind::App: {
      const std::vector<Nat> f1 = distinct_free(t.fun());
      const std::vector<Nat> f2 = distinct_free(t.arg());
      std::vector<Nat> common;
      std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(common));
      RTerm r1 = read(t.fun());
      RTerm r2 = read(t.arg());
      for (Nat i : common) {
        r1 = rename_prepend(r1, i, false);
        r2 = rename_prepend(r2, i, true);
      }
      // The operands' own duplicators of shared indices move up to sit
      // right under the new ones.
      std::vector<RIndex> chain;
      for (Nat i : common) chain.emplace_back(i);
      RTerm core1 = strip_leading_dups(r1, common, chain);
      RTerm core2 = strip_leading_dups(r2, common, chain);
      RTerm out = RTerm::app(std::move(core1), std::move(core2));
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) out = RTerm::dup(*it, std::move(out));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

RTerm standardize(const RTerm& t) { return read(readback(t)); }

Result<BetaResult, NormalizeFailure> beta_r(const RTerm& t, const NormalizeOptions& opts) {
  if (!is_linear_and_closed(t))
    return NormalizeFailure{NormalizeFailure::Kind::NotClosedLinear, 0,
                            "input is not linear and closed"};
  NormalizeOptions plain_opts = opts;
  plain_opts.verify = false;
  auto run = normalize_pipeline(readback(t), plain_opts);
  if (!run) return run.error();
  auto tidy = normalize_dup_era(read(run.value().result), opts);
  if (!tidy) return tidy.error();
  const std::size_t total = run.value().run.steps + tidy.value().steps;
  if (!is_linear_and_closed(tidy.value().term))
    return NormalizeFailure{NormalizeFailure::Kind::LinearityLost, total,
                            "result " + print_rterm(tidy.value().term) + " is not linear and closed"};
  return BetaResult{tidy.value().term, run.value().result, run.value().run.steps,
                    tidy.value().steps};
}

// ---------------------------------------------------------------- bestiary

const std::vector<BestiaryEntry>& bestiary() {
  static const std::vector<BestiaryEntry> entries = [] {
    auto entry = [](const char* name, const char* r, const char* plain) {
      return BestiaryEntry{name, parse_rterm(r), parse_plain(plain)};
    };
    const char* five = "\\\\(1 (1 (1 (1 (1 0)))))";
    return std::vector<BestiaryEntry>{
        entry("I", "\\0", "\\0"),
        entry("K", "\\\\era 0 1", "\\\\1"),
        entry("S", "\\\\\\dup 0 (2 0_0 (1 0_1))", "\\\\\\(2 0 (1 0))"),
        entry("ff", "\\era 0 \\0", "\\\\0"),
        entry("tt", "\\\\era 0 1", "\\\\1"),
        entry("Y", "\\dup 0 ((\\(1_0 dup 0 (0_0 0_1))) (\\(1_1 dup 0 (0_0 0_1))))",
              "\\((\\(1 (0 0))) (\\(1 (0 0))))"),
        entry("5", "\\\\dup 1 dup 1_0 dup 1_00 dup 1_000 (1_0000 (1_0001 (1_001 (1_01 (1_1 0)))))",
              five),
        entry("3+2", "\\\\dup 1 dup 1_0 dup 1_00 (1_000 (1_001 (1_01 dup 1_1 (1_10 (1_11 0)))))",
              five),
        entry("2+3", "\\\\dup 1 dup 1_0 (1_00 (1_01 dup 1_1 dup 1_10 (1_100 (1_101 (1_11 0)))))",
              five),
        entry("3+1+1",
              "\\\\dup 1 dup 1_0 dup 1_00 (1_000 dup 1_001 (1_0010 (1_0011 (1_01 (1_1 0)))))", five),
    };
  }();
  return entries;
}

// ---------------------------------------------------------------- enumerators

namespace {

// A binary tree over k leaves: internal node paths in pre-order and leaf
// paths left to right.
struct TreeShape {
  std::vector<Bits> internal;
  std::vector<Bits> leaves;
};

void tree_shapes(std::size_t leaves, std::size_t height, const Bits& at,
                 std::vector<TreeShape>& out) {
  if (leaves == 1) {
    out.push_back(TreeShape{{}, {at}});
    return;
  }
  if (height == 0) return;
  for (std::size_t left = 1; left < leaves; ++left) {
    std::vector<TreeShape> ls, rs;
    Bits l = at, r = at;
    l.push_back(false);
    r.push_back(true);
    tree_shapes(left, height - 1, l, ls);
    tree_shapes(leaves - left, height - 1, r, rs);
    for (const auto& a : ls)
      for (const auto& b : rs) {
        TreeShape s;
        s.internal.push_back(at);
        s.internal.insert(s.internal.end(), a.internal.begin(), a.internal.end());
        s.internal.insert(s.internal.end(), b.internal.begin(), b.internal.end());
        s.leaves = a.leaves;
        s.leaves.insert(s.leaves.end(), b.leaves.begin(), b.leaves.end());
        out.push_back(std::move(s));
      }
  }
}

// One way to resource a binder (or a repeated free index).
struct SiteChoice {
  bool erase = false;
  std::vector<Bits> dups;      // pre-order, outermost first
  std::vector<Bits> occ_path;  // path given to the site's j-th occurrence
};

std::vector<SiteChoice> site_choices(std::size_t occurrences, std::size_t height, bool binder) {
  std::vector<SiteChoice> out;
  if (occurrences == 0) {
    if (binder) out.push_back(SiteChoice{true, {}, {}});
    return out;
  }
  std::vector<TreeShape> shapes;
  tree_shapes(occurrences, height, Bits{}, shapes);
  for (const auto& s : shapes) {
    std::vector<std::size_t> perm(occurrences);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      SiteChoice c;
      c.dups = s.internal;
      for (std::size_t j = 0; j < occurrences; ++j) c.occ_path.push_back(s.leaves[perm[j]]);
      out.push_back(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

struct Sites {
  // Binders are numbered in pre-order; free index n is site binders + n.
  std::size_t binders = 0;
  std::vector<std::vector<std::size_t>> occurrences;  // site → occurrence ids
  std::size_t occ_count = 0;
};

void scan_sites(const PlainTerm& t, std::vector<std::size_t>& stack, Sites& s,
                std::map<Nat, std::vector<std::size_t>>& free_occ) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: {
      const Nat n = t.value();
      const std::size_t id = s.occ_count++;
      if (n < stack.size()) s.occurrences[stack[stack.size() - 1 - n]].push_back(id);
      else free_occ[n - static_cast<Nat>(stack.size())].push_back(id);
      return;
    }
    case PlainTerm::Kind::Abs:
      stack.push_back(s.occurrences.size());
      s.occurrences.emplace_back();
      ++s.binders;
      scan_sites(t.body(), stack, s, free_occ);
      stack.pop_back();
      return;
    case PlainTerm::Kind::App:
      scan_sites(t.fun(), stack, s, free_occ);
      scan_sites(t.arg(), stack, s, free_occ);
      return;
  }
}

struct Builder {
  std::vector<Bits> occ_path;                // occurrence id → path
  std::vector<const SiteChoice*> binder_choice;
  std::size_t next_occ = 0;
  std::size_t next_binder = 0;

  RTerm build(const PlainTerm& t) {
    switch (t.kind()) {
      case PlainTerm::Kind::Index: return RTerm::ind(RIndex(t.value(), occ_path[next_occ++]));
      case PlainTerm::Kind::Abs: {
        const SiteChoice* c = binder_choice[next_binder++];
        RTerm body = build(t.body());
        if (c->erase) return RTerm::abs(RTerm::era(RIndex(0), std::move(body)));
        return RTerm::abs(wrap(0, *c, std::move(body)));
      }
      case PlainTerm::Kind::App: {
        RTerm f = build(t.fun());
        RTerm a = build(t.arg());
        return RTerm::app(std::move(f), std::move(a));
      }
    }
    throw std::logic_error("unreachable");
  }

  static RTerm wrap(Nat depth, const SiteChoice& c, RTerm body) {
    for (auto it = c.dups.rbegin(); it != c.dups.rend(); ++it)
      body = RTerm::dup(RIndex(depth, *it), std::move(body));
    return body;
  }
};

}  // namespace

std::vector<RTerm> representatives(const PlainTerm& t, std::size_t max_tree_height) {
  Sites sites;
  std::map<Nat, std::vector<std::size_t>> free_occ;
  std::vector<std::size_t> stack;
  scan_sites(t, stack, sites, free_occ);

  std::vector<std::vector<std::size_t>> occ_of;  // site → occurrences
  std::vector<std::vector<SiteChoice>> choices;
  std::vector<Nat> free_depth;
  for (std::size_t b = 0; b < sites.binders; ++b) {
    occ_of.push_back(sites.occurrences[b]);
    choices.push_back(site_choices(sites.occurrences[b].size(), max_tree_height, true));
  }
  for (const auto& [n, occs] : free_occ) {
    occ_of.push_back(occs);
    choices.push_back(site_choices(occs.size(), max_tree_height, false));
    free_depth.push_back(n);
  }
  for (const auto& c : choices)
    if (c.empty()) return {};

  std::vector<RTerm> out;
  std::set<std::string> seen;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    Builder b;
    b.occ_path.assign(sites.occ_count, Bits{});
    for (std::size_t s = 0; s < choices.size(); ++s) {
      const SiteChoice& c = choices[s][pick[s]];
      for (std::size_t j = 0; j < occ_of[s].size(); ++j) b.occ_path[occ_of[s][j]] = c.occ_path[j];
      if (s < sites.binders) b.binder_choice.push_back(&c);
    }
    RTerm r = b.build(t);
    for (std::size_t f = free_depth.size(); f-- > 0;)
      r = Builder::wrap(free_depth[f], choices[sites.binders + f][pick[sites.binders + f]], r);
    if (r_type(r).ok() && seen.insert(print_rterm(r)).second) out.push_back(r);

    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == choices[s].size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return out;
}

namespace {

struct Typed {
  RTerm term;
  RLType type;
};

class TypedGenerator {
 public:
  TypedGenerator(std::size_t max_path, std::size_t total) : total_(total) {
    for (std::size_t len = 0; len <= max_path; ++len)
      for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
        Bits p;
        for (std::size_t k = len; k-- > 0;) p.push_back((bits >> k) & 1);
        paths_.push_back(p);
      }
    max_path_ = max_path;
  }

  // Typed terms of `size` nodes whose free indices all lie below `depth`.
  const std::vector<Typed>& get(std::size_t size, Nat depth) {
    auto key = std::make_pair(size, depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Typed> out;
    build(size, depth, out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Each binder above needs one node, and closing off k free indices at one
  // depth takes at least k-1 duplicators; drop terms that cannot fit.
  bool closable(const RLType& l, std::size_t size, Nat depth) const {
    if (size + depth > total_) return false;
    std::size_t needed = 0;
    for (std::size_t i = 1; i < l.size(); ++i)
      if (l.elems()[i].depth == l.elems()[i - 1].depth) ++needed;
    return needed <= total_ - size - depth;
  }

  void keep(RTerm t, Nat depth, std::vector<Typed>& out) {
    auto ty = r_type(t);
    if (ty && closable(ty.value(), t.size(), depth)) out.push_back(Typed{std::move(t), ty.value()});
  }

  void build(std::size_t size, Nat depth, std::vector<Typed>& out) {
    if (size == 0) return;
    if (size == 1) {
      for (Nat n = 0; n < depth; ++n)
        for (const Bits& p : paths_) keep(RTerm::ind(RIndex(n, p)), depth, out);
      return;
    }
    for (const Typed& b : get(size - 1, depth + 1)) keep(RTerm::abs(b.term), depth, out);
    for (Nat n = 0; n < depth; ++n)
      for (const Bits& p : paths_) {
        const RIndex ix(n, p);
        for (const Typed& b : get(size - 1, depth)) {
          if (!b.type.contains(ix)) keep(RTerm::era(ix, b.term), depth, out);
          if (p.size() < max_path_ && b.type.contains(ix.child(false)) &&
              b.type.contains(ix.child(true)))
            keep(RTerm::dup(ix, b.term), depth, out);
        }
      }
    for (std::size_t left = 1; left + 2 <= size; ++left) {
      const auto& fs = get(left, depth);
      const auto& as = get(size - 1 - left, depth);
      for (const Typed& f : fs)
        for (const Typed& a : as)
          if (merge(f.type, a.type)) keep(RTerm::app(f.term, a.term), depth, out);
    }
  }

  std::vector<Bits> paths_;
  std::size_t max_path_ = 0;
  std::size_t total_;
  std::map<std::pair<std::size_t, Nat>, std::vector<Typed>> memo_;
};

}  // namespace

std::vector<RTerm> typed_closed_rterms(std::size_t size, std::size_t max_path) {
  TypedGenerator gen(max_path, size);
  std::vector<RTerm> out;
  for (const Typed& t : gen.get(size, 0)) out.push_back(t.term);
  return out;
}

}  // namespace lcalc
