#include "lcalc/lin.hpp"

namespace lcalc {

namespace {

using LinResult = Result<NatLType, TypeFailure>;

TypeFailure failure(FailureKind kind, const char* rule, const TermPath& path,
                    std::string subject, std::string detail) {
  return TypeFailure{kind, rule, path, std::move(subject), std::move(detail)};
}

// `d` is null when no derivation is wanted.
LinResult infer(const PlainTerm& t, TermPath& path, Derivation<Nat>* d) {
  auto conclude = [&](const char* rule, const NatLType& l) {
    if (d) {
      d->rule = rule;
      d->term = print_plain(t);
      d->ltype = l;
    }
    return LinResult(l);
  };

  switch (t.kind()) {
    case PlainTerm::Kind::Index:
      return conclude("ind", NatLType::singleton(t.value()));

    case PlainTerm::Kind::Abs: {
      Derivation<Nat>* sub = nullptr;
      if (d) sub = &d->premises.emplace_back();
      path.push_back(0);
      LinResult body = infer(t.body(), path, sub);
      path.pop_back();
      if (!body) return body;
      const NatLType& l = body.value();
      if (l.empty() || l.front() != 0)
        return failure(FailureKind::AbsHeadMissing, "abs", path, "",
                       "body type " + to_string(l) + " does not start with 0");
      auto lowered = decrement(l.tail());
      if (!lowered)
        return failure(FailureKind::DecrementZero, "abs", path, "0", "");
      return conclude("abs", lowered.value());
    }

    case PlainTerm::Kind::App: {
      Derivation<Nat>* left = nullptr;
      Derivation<Nat>* right = nullptr;
      if (d) {
        d->premises.resize(2);
        left = &d->premises[0];
        right = &d->premises[1];
      }
      path.push_back(0);
      LinResult f = infer(t.fun(), path, left);
      path.back() = 1;
      LinResult a = f ? infer(t.arg(), path, right) : f;
      path.pop_back();
      if (!f) return f;
      if (!a) return a;
      auto merged = merge(f.value(), a.value());
      if (!merged)
        return failure(FailureKind::MergeConflict, "app", path,
                       std::to_string(merged.error().index),
                       to_string(f.value()) + " and " + to_string(a.value()) + " overlap");
      return conclude("app", merged.value());
    }
  }
  return NatLType{};
}

void generate(std::size_t size, Nat depth, Nat slack,
              const std::function<void(const PlainTerm&)>& visit) {
  if (size == 0) return;
  if (size == 1) {
    for (Nat n = 0; n < depth + slack; ++n) visit(PlainTerm::index(n));
    return;
  }
  generate(size - 1, depth + 1, slack,
           [&](const PlainTerm& body) { visit(PlainTerm::abs(body)); });
  for (std::size_t left = 1; left + 2 <= size; ++left) {
    const std::size_t right = size - 1 - left;
    generate(left, depth, slack, [&](const PlainTerm& f) {
      generate(right, depth, slack,
               [&](const PlainTerm& a) { visit(PlainTerm::app(f, a)); });
    });
  }
}

}  // namespace

Result<LinTyping, TypeFailure> infer_lin(const PlainTerm& t) {
  LinTyping typing;
  TermPath path;
  LinResult r = infer(t, path, &typing.derivation);
  if (!r) return r.error();
  typing.ltype = r.value();
  return typing;
}

Result<NatLType, TypeFailure> lin_type(const PlainTerm& t) {
  TermPath path;
  return infer(t, path, nullptr);
}

bool check_lin(const PlainTerm& t, const NatLType& l) {
  auto r = lin_type(t);
  return r.ok() && r.value() == l;
}

void for_each_plain_term(std::size_t size, Nat slack,
                         const std::function<void(const PlainTerm&)>& visit) {
  generate(size, 0, slack, visit);
}

void for_each_plain_term_upto(std::size_t max_size, Nat slack,
                              const std::function<void(const PlainTerm&)>& visit) {
  for (std::size_t s = 1; s <= max_size; ++s) generate(s, 0, slack, visit);
}

std::vector<PlainTerm> plain_terms_upto(std::size_t max_size, Nat slack) {
  std::vector<PlainTerm> out;
  for_each_plain_term_upto(max_size, slack, [&](const PlainTerm& t) { out.push_back(t); });
  return out;
}

Result<std::vector<PlainTerm>, CapExceeded> enumerate_closed_linear(std::size_t max_size,
                                                                    std::size_t cap) {
  if (max_size > cap) return CapExceeded{max_size, cap};
  std::vector<PlainTerm> out;
  for_each_plain_term_upto(max_size, 0, [&](const PlainTerm& t) {
    if (is_closed_linear_structural(t)) out.push_back(t);
  });
  return out;
}

}  // namespace lcalc
