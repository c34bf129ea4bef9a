#include "lcalc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <optional>
#include <random>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "lcalc/lin.hpp"
#include "lcalc/resource.hpp"
#include "lcalc/upsilon.hpp"

namespace lcalc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Case bookkeeping shared by all suites. Every potential case calls take()
// first, which both assigns its index and decides whether this shard runs it.
class Tally {
 public:
  Tally(std::string name, const SuiteOptions& opts) : opts_(opts), start_(Clock::now()) {
    report_.name = std::move(name);
    if (opts_.shards == 0) opts_.shards = 1;
  }

  bool take() {
    index_ = next_++;
    return index_ % opts_.shards == opts_.shard;
  }

  template <class IdFn>
  void ok(IdFn&& id) {
    ++report_.cases;
    if (opts_.records) report_.records.push_back({index_, id(), true, ""});
  }

  template <class IdFn>
  void bad(IdFn&& id, std::string detail, std::string counterexample = "") {
    ++report_.cases;
    ++report_.failed;
    std::string name = id();
    if (opts_.records) report_.records.push_back({index_, name, false, detail});
    if (report_.failures.size() < opts_.max_failures)
      report_.failures.push_back({index_, std::move(name), std::move(detail), std::move(counterexample)});
  }

  void skip() { ++report_.skipped; }
  void count(const std::string& key, std::size_t n = 1) { report_.counts[key] += n; }

  SuiteReport finish() {
    report_.seconds = since(start_);
    return std::move(report_);
  }

 private:
  SuiteOptions opts_;
  Clock::time_point start_;
  SuiteReport report_;
  std::size_t next_ = 0;
  std::size_t index_ = 0;
};

// ---------------------------------------------------------------- list laws

struct LawCase {
  char item;
  NatLType l1, l2, l3;
  BasicPredicate pred = BasicPredicate::less_than(0);
};

template <class T, class E>
std::optional<T> opt(const Result<T, E>& r) {
  if (!r) return std::nullopt;
  return r.value();
}

std::optional<NatLType> merge_opt(const std::optional<NatLType>& a,
                                  const std::optional<NatLType>& b) {
  if (!a || !b) return std::nullopt;
  return opt(merge(*a, *b));
}

std::optional<NatLType> dec_opt(const std::optional<NatLType>& a) {
  if (!a) return std::nullopt;
  return opt(decrement(*a));
}

bool ascending(const NatLType& l) {
  return std::adjacent_find(l.begin(), l.end(), [](Nat a, Nat b) { return a >= b; }) == l.end();
}

// Both sides of one equation; nullopt when either side is undefined.
std::optional<bool> eval(const LawCase& c) {
  auto same = [](const std::optional<NatLType>& a,
                 const std::optional<NatLType>& b) -> std::optional<bool> {
    if (!a || !b) return std::nullopt;
    return *a == *b;
  };
  const auto& [item, l1, l2, l3, p] = c;
  switch (item) {
    case 'a': {
      auto lhs = opt(merge(l1, l2));
      auto rhs = opt(merge(l2, l1));
      auto eq = same(lhs, rhs);
      if (eq && !ascending(*lhs)) return false;
      return eq;
    }
    case 'b':
      return same(merge_opt(opt(merge(l1, l2)), l3), merge_opt(l1, opt(merge(l2, l3))));
    case 'c':
      return same(opt(merge(filter(p, l1), filter(p, l2))), [&]() -> std::optional<NatLType> {
        auto m = opt(merge(l1, l2));
        if (!m) return std::nullopt;
        return filter(p, *m);
      }());
    case 'd':
      return same(opt(merge(increment(l1), increment(l2))), [&]() -> std::optional<NatLType> {
        auto m = opt(merge(l1, l2));
        if (!m) return std::nullopt;
        return increment(*m);
      }());
    case 'e':
      return same(merge_opt(opt(decrement(l1)), opt(decrement(l2))), dec_opt(opt(merge(l1, l2))));
    case 'f':
      return same(increment(filter(p, l1)), filter(p.shifted(1), increment(l1)));
    case 'g':
      return same(opt(decrement(filter(p.shifted(1), l1))), [&]() -> std::optional<NatLType> {
        auto d = opt(decrement(l1));
        if (!d) return std::nullopt;
        return filter(p, *d);
      }());
  }
  return std::nullopt;
}

std::string describe(const LawCase& c) {
  std::string out(1, c.item);
  out += ": " + to_string(c.l1);
  if (c.item == 'a' || c.item == 'b' || c.item == 'c' || c.item == 'd' || c.item == 'e')
    out += " " + to_string(c.l2);
  if (c.item == 'b') out += " " + to_string(c.l3);
  if (c.item == 'c' || c.item == 'f' || c.item == 'g') out += " " + to_string(c.pred);
  return out;
}

// Drops list elements, then lowers the threshold, while the case still fails.
LawCase shrink(LawCase c) {
  auto fails = [](const LawCase& x) {
    auto r = eval(x);
    return r && !*r;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (NatLType* l : {&c.l1, &c.l2, &c.l3}) {
      for (Nat e : l->elems()) {
        LawCase smaller = c;
        *(l == &c.l1 ? &smaller.l1 : l == &c.l2 ? &smaller.l2 : &smaller.l3) = l->without(e);
        if (fails(smaller)) {
          c = smaller;
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
    if (!progress && c.pred.bound > 0) {
      LawCase lower = c;
      lower.pred.bound -= 1;
      if (fails(lower)) {
        c = lower;
        progress = true;
      }
    }
  }
  return c;
}

std::vector<NatLType> all_lists(std::size_t max_len, std::size_t max_elem) {
  std::vector<NatLType> out;
  std::vector<Nat> cur;
  std::function<void(Nat)> go = [&](Nat from) {
    out.push_back(NatLType(cur));
    if (cur.size() == max_len) return;
    for (Nat e = from; e < max_elem; ++e) {
      cur.push_back(e);
      go(e + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<BasicPredicate> all_predicates(std::size_t max_elem) {
  std::vector<BasicPredicate> out;
  for (Nat i = 0; i <= max_elem; ++i) {
    out.push_back(BasicPredicate::less_than(i));
    out.push_back(BasicPredicate::greater_than(i));
    out.push_back(BasicPredicate::at_least(i));
  }
  return out;
}

void run_law(Tally& tally, const LawCase& c, bool minimize) {
  if (!tally.take()) return;
  auto r = eval(c);
  if (!r) {
    tally.skip();
    return;
  }
  std::string key(1, c.item);
  tally.count(key);
  if (*r) {
    tally.ok([&] { return describe(c); });
  } else {
    LawCase small = minimize ? shrink(c) : c;
    tally.bad([&] { return describe(c); }, "sides differ", describe(small));
  }
}

// -------------------------------------------------------------- β oracle

// Adds d to every index at or above cutoff.
PlainTerm shift(const PlainTerm& t, long d, Nat cutoff) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index:
      return t.value() >= cutoff ? PlainTerm::index(static_cast<Nat>(static_cast<long>(t.value()) + d))
                                 : t;
    case PlainTerm::Kind::Abs: return PlainTerm::abs(shift(t.body(), d, cutoff + 1));
    case PlainTerm::Kind::App:
      return PlainTerm::app(shift(t.fun(), d, cutoff), shift(t.arg(), d, cutoff));
  }
  return t;
}

// t with index j replaced by s.
PlainTerm subst(const PlainTerm& t, Nat j, const PlainTerm& s) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: return t.value() == j ? s : t;
    case PlainTerm::Kind::Abs: return PlainTerm::abs(subst(t.body(), j + 1, shift(s, 1, 0)));
    case PlainTerm::Kind::App: return PlainTerm::app(subst(t.fun(), j, s), subst(t.arg(), j, s));
  }
  return t;
}

std::optional<PlainTerm> beta_step(const PlainTerm& t) {
  switch (t.kind()) {
    case PlainTerm::Kind::Index: return std::nullopt;
    case PlainTerm::Kind::Abs: {
      auto b = beta_step(t.body());
      if (!b) return std::nullopt;
      return PlainTerm::abs(*b);
    }
    case PlainTerm::Kind::App: {
      if (t.fun().is_abs())
        return shift(subst(t.fun().body(), 0, shift(t.arg(), 1, 0)), -1, 0);
      if (auto f = beta_step(t.fun())) return PlainTerm::app(*f, t.arg());
      if (auto a = beta_step(t.arg())) return PlainTerm::app(t.fun(), *a);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- BFS closure

// Explores every term reachable from the seeds, checking each (term, redex)
// pair once. `visit` returns the successor terms of one pair.
template <class T, class Key, class Positions, class Visit>
void explore(const std::vector<T>& seeds, Key key, Positions positions, Visit visit,
             std::size_t state_cap, Tally& tally) {
  std::unordered_set<std::string> seen;
  std::deque<T> queue;
  for (const T& s : seeds)
    if (seen.insert(key(s)).second) queue.push_back(s);
  std::size_t truncated = 0;
  while (!queue.empty()) {
    T cur = std::move(queue.front());
    queue.pop_front();
    for (const TermPath& at : positions(cur)) {
      std::optional<T> next = visit(cur, at);
      if (!next) continue;
      if (seen.size() >= state_cap) {
        if (!seen.count(key(*next))) ++truncated;
        continue;
      }
      if (seen.insert(key(*next)).second) queue.push_back(std::move(*next));
    }
  }
  tally.count("states", seen.size());
  if (truncated) tally.count("states-truncated", truncated);
}

constexpr std::size_t kStateCap = 2000000;

std::vector<RIndex> as_epsilon_indices(const std::vector<Nat>& free) {
  std::vector<RIndex> out;
  for (Nat n : free)
    if (out.empty() || out.back().depth != n) out.emplace_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- reports

std::string SuiteReport::text() const {
  char head[160];
  std::snprintf(head, sizeof head, "suite %s: %s  cases=%zu skipped=%zu failed=%zu  (%.2fs)\n",
                name.c_str(), passed() ? "PASS" : "FAIL", cases, skipped, failed, seconds);
  std::string out = head;
  for (const auto& [key, n] : counts) out += "  " + key + ": " + std::to_string(n) + "\n";
  for (const auto& f : failures) {
    out += "  FAIL #" + std::to_string(f.index) + " " + f.id + ": " + f.detail + "\n";
    if (!f.counterexample.empty()) out += "    minimized: " + f.counterexample + "\n";
  }
  return out;
}

std::string SuiteReport::json_lines() const {
  using nlohmann::json;
  std::string out;
  auto line = [&](const std::size_t index, const std::string& id, bool ok,
                  const std::string& detail) {
    json j = {{"suite", name}, {"index", index}, {"case", id}, {"verdict", ok ? "pass" : "fail"}};
    if (!detail.empty()) j["detail"] = detail;
    out += j.dump() + "\n";
  };
  if (!records.empty()) {
    for (const auto& r : records) line(r.index, r.id, r.passed, r.detail);
  } else {
    for (const auto& f : failures) line(f.index, f.id, false, f.detail);
  }
  json summary = {{"suite", name},       {"summary", true},     {"passed", passed()},
                  {"cases", cases},      {"skipped", skipped},  {"failed", failed},
                  {"seconds", seconds},  {"counts", counts}};
  out += summary.dump() + "\n";
  return out;
}

SuiteReport merge_reports(const std::vector<SuiteReport>& parts) {
  SuiteReport out;
  if (parts.empty()) return out;
  out.name = parts.front().name;
  for (const auto& p : parts) {
    out.cases += p.cases;
    out.skipped += p.skipped;
    out.failed += p.failed;
    out.seconds = std::max(out.seconds, p.seconds);
    for (const auto& [k, n] : p.counts) out.counts[k] += n;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
    out.records.insert(out.records.end(), p.records.begin(), p.records.end());
  }
  auto by_index = [](const auto& a, const auto& b) { return a.index < b.index; };
  std::stable_sort(out.failures.begin(), out.failures.end(), by_index);
  std::stable_sort(out.records.begin(), out.records.end(), by_index);
  return out;
}

SuiteReport run_sharded(const std::function<SuiteReport(const SuiteOptions&)>& suite,
                        std::size_t shards, SuiteOptions base) {
  if (shards <= 1) {
    base.shard = 0;
    base.shards = 1;
    return suite(base);
  }
  std::vector<SuiteReport> parts(shards);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < shards; ++i) {
    SuiteOptions o = base;
    o.shard = i;
    o.shards = shards;
    workers.emplace_back([&, o, i] { parts[i] = suite(o); });
  }
  for (auto& w : workers) w.join();
  return merge_reports(parts);
}

// ------------------------------------------------------------------ suites

SuiteReport run_lemma_suite(std::size_t max_list_len, std::size_t max_elem, std::uint64_t seed,
                            std::size_t random_cases, const SuiteOptions& opts) {
  Tally tally("lemma", opts);
  const auto lists = all_lists(max_list_len, max_elem);
  const auto preds = all_predicates(max_elem);

  for (const auto& a : lists)
    for (const auto& b : lists) {
      run_law(tally, {'a', a, b, {}}, false);
      for (const auto& c : lists) run_law(tally, {'b', a, b, c}, false);
      for (const auto& p : preds) run_law(tally, {'c', a, b, {}, p}, false);
      run_law(tally, {'d', a, b, {}}, false);
      run_law(tally, {'e', a, b, {}}, false);
    }
  for (const auto& a : lists)
    for (const auto& p : preds) {
      run_law(tally, {'f', a, {}, {}, p}, false);
      run_law(tally, {'g', a, {}, {}, p}, false);
    }

  // Random part: larger disjoint lists, built by dealing every candidate
  // element to one of the lists or to none.
  constexpr Nat kRandomElems = 24;
  constexpr std::size_t kRandomLen = 8;
  std::mt19937_64 rng(seed);
  const char* items = "abcdefg";
  for (std::size_t k = 0; k < random_cases; ++k) {
    const char item = items[k % 7];
    const bool positive = item == 'e' || item == 'g';
    std::vector<Nat> parts[3];
    for (Nat e = positive ? 1 : 0; e < kRandomElems; ++e) {
      auto slot = rng() % 5;  // 0..2 one of the lists, otherwise unused
      if (slot < 3 && parts[slot].size() < kRandomLen) parts[slot].push_back(e);
    }
    const BasicPredicate::Kind kinds[] = {BasicPredicate::Kind::LessThan,
                                          BasicPredicate::Kind::GreaterThan,
                                          BasicPredicate::Kind::AtLeast};
    BasicPredicate p{kinds[rng() % 3], static_cast<Nat>(rng() % (kRandomElems + 1))};
    run_law(tally, {item, NatLType(parts[0]), NatLType(parts[1]), NatLType(parts[2]), p}, true);
  }
  return tally.finish();
}

SuiteReport run_characterization_suite(std::size_t max_size, const SuiteOptions& opts) {
  Tally tally("characterization", opts);
  for_each_plain_term_upto(max_size, 2, [&](const PlainTerm& t) {
    if (!tally.take()) return;
    auto id = [&] { return print_plain(t); };
    auto ty = lin_type(t);
    const bool closed_linear = is_closed_linear_structural(t);
    if ((ty && ty.value().empty()) != closed_linear) {
      tally.bad(id, std::string("typed [] ") + (ty && ty.value().empty() ? "yes" : "no") +
                        ", closed linear " + (closed_linear ? "yes" : "no"));
      return;
    }
    // Typed exactly when every binder binds one occurrence and no free
    // index repeats; the type is then the free-index set.
    auto prof = occurrence_profile(t);
    bool linear = std::all_of(prof.bound_counts.begin(), prof.bound_counts.end(),
                              [](std::size_t n) { return n == 1; }) &&
                  std::adjacent_find(prof.free.begin(), prof.free.end()) == prof.free.end();
    if (bool(ty) != linear) {
      tally.bad(id, std::string("typed ") + (ty ? "yes" : "no") + ", structurally linear " +
                        (linear ? "yes" : "no"));
      return;
    }
    if (ty && ty.value().elems() != prof.free) {
      tally.bad(id, "type " + to_string(ty.value()) + " differs from the free indices");
      return;
    }
    tally.count(closed_linear ? "closed-linear" : ty ? "open-linear" : "untyped");
    tally.ok(id);
  });
  return tally.finish();
}

SuiteReport run_upsilon_preservation_suite(std::size_t max_term_size, const SuiteOptions& opts) {
  Tally tally("upsilon-preservation", opts);
  auto seeds_plain = enumerate_closed_linear(max_term_size);
  if (!seeds_plain) {
    tally.take();
    tally.bad([&] { return "size " + std::to_string(max_term_size); },
              "above the enumeration cap " + std::to_string(seeds_plain.error().cap));
    return tally.finish();
  }
  std::vector<UpsilonTerm> seeds;
  for (const auto& t : seeds_plain.value()) seeds.push_back(embed_upsilon(t));
  tally.count("seeds", seeds.size());

  explore<UpsilonTerm>(
      seeds, [](const UpsilonTerm& t) { return print_upsilon(t); },
      [](const UpsilonTerm& t) { return in_redex_positions(t); },
      [&](const UpsilonTerm& t, const TermPath& at) -> std::optional<UpsilonTerm> {
        const bool mine = tally.take();
        auto id = [&] { return print_upsilon(t) + " @ " + path_to_string(at); };
        if (!mine) {
          auto r = step_in(t, at);
          if (!r) return std::nullopt;
          return r.value().term;
        }
        auto r = check_preservation_step(t, at);
        if (!r) {
          tally.bad(id, r.error().rule + ": " + r.error().detail);
          auto s = step_in(t, at);
          if (!s) return std::nullopt;
          return s.value().term;
        }
        tally.count("in:" + r.value().rule);
        tally.ok(id);
        return r.value().after;
      },
      kStateCap, tally);
  return tally.finish();
}

SuiteReport run_r_preservation_suite(std::size_t max_term_size, const SuiteOptions& opts) {
  Tally tally("r-preservation", opts);
  std::vector<RTerm> seeds;
  for_each_plain_term_upto(max_term_size, 1, [&](const PlainTerm& t) { seeds.push_back(read(t)); });
  tally.count("seeds:read", seeds.size());
  for (const auto& b : bestiary()) seeds.push_back(b.term);
  seeds.push_back(parse_rterm("\\dup 0 dup 0_1 (0_0 0_10 0_11)"));
  std::size_t generated = 0;
  for (std::size_t size = 1; size <= 7; ++size) {
    auto more = typed_closed_rterms(size, 2);
    generated += more.size();
    seeds.insert(seeds.end(), more.begin(), more.end());
  }
  tally.count("seeds:generated", generated);

  explore<RTerm>(
      seeds, [](const RTerm& t) { return print_rterm(t); },
      [](const RTerm& t) { return r_redex_positions(t); },
      [&](const RTerm& t, const TermPath& at) -> std::optional<RTerm> {
        const bool mine = tally.take();
        auto r = step_r(t, at);
        if (!r) return std::nullopt;
        if (!mine) return r.value().term;
        auto id = [&] { return print_rterm(t) + " @ " + path_to_string(at); };
        tally.count("r:" + r.value().rule);
        auto before = r_type(t);
        auto after = r_type(r.value().term);
        if (!before) {
          tally.bad(id, "ill-typed term in corpus: " + before.error().message());
        } else if (!after || !(after.value() == before.value())) {
          tally.bad(id, "rule " + r.value().rule + " changed " + to_string(before.value()) + " to " +
                            (after ? to_string(after.value()) : after.error().message()));
        } else {
          tally.ok(id);
        }
        return r.value().term;
      },
      kStateCap, tally);
  return tally.finish();
}

SuiteReport run_preservation_suite(std::size_t max_term_size, const SuiteOptions& opts) {
  SuiteReport u = run_upsilon_preservation_suite(max_term_size, opts);
  SuiteReport r = run_r_preservation_suite(max_term_size, opts);
  SuiteReport out;
  out.name = "preservation";
  out.cases = u.cases + r.cases;
  out.skipped = u.skipped + r.skipped;
  out.failed = u.failed + r.failed;
  out.seconds = u.seconds + r.seconds;
  for (const auto* part : {&u, &r}) {
    for (const auto& [k, n] : part->counts) out.counts[part->name + "/" + k] += n;
    out.failures.insert(out.failures.end(), part->failures.begin(), part->failures.end());
    out.records.insert(out.records.end(), part->records.begin(), part->records.end());
  }
  return out;
}

SuiteReport run_roundtrip_suite(std::size_t max_size, const SuiteOptions& opts) {
  Tally tally("roundtrip", opts);
  for_each_plain_term_upto(max_size, 2, [&](const PlainTerm& t) {
    if (!tally.take()) return;
    auto id = [&] { return print_plain(t); };
    RTerm r = read(t);
    PlainTerm back = readback(r);
    if (!(back == t)) {
      tally.bad(id, "readback gives " + print_plain(back));
      return;
    }
    auto ty = r_type(r);
    RLType expected(as_epsilon_indices(free_indices(t)));
    if (!ty || !(ty.value() == expected)) {
      tally.bad(id, "read " + print_rterm(r) + " typed " +
                        (ty ? to_string(ty.value()) : ty.error().message()) + ", expected " +
                        to_string(expected));
      return;
    }
    RTerm s = standardize(r);
    if (!(s == r) || !(standardize(s) == s)) {
      tally.bad(id, "standardize moved " + print_rterm(r) + " to " + print_rterm(s));
      return;
    }
    tally.ok(id);
  });
  return tally.finish();
}

SuiteReport run_pipeline_oracle_suite(std::size_t max_size, const SuiteOptions& opts) {
  Tally tally("pipeline", opts);
  NormalizeOptions traced;
  traced.trace = true;
  auto compare = [&](const PlainTerm& t, bool linear) {
    auto id = [&] { return print_plain(t); };
    auto oracle = oracle_beta_normalize(t);
    if (!oracle) {
      tally.skip();
      tally.count("oracle-diverges");
      return;
    }
    auto run = linear ? normalize_lin_pipeline(t, traced) : normalize_pipeline(t, traced);
    if (!run) {
      tally.bad(id, std::string(to_string(run.error().kind)) + ": " + run.error().detail);
      return;
    }
    for (const auto& s : run.value().run.trace) tally.count("raw:" + s.rule);
    if (!(run.value().result == oracle.value())) {
      tally.bad(id, "pipeline gives " + print_plain(run.value().result) + ", oracle " +
                        print_plain(oracle.value()));
      return;
    }
    tally.count(linear ? "closed-linear" : "closed-untyped");
    tally.ok(id);
  };

  auto linear = enumerate_closed_linear(max_size);
  if (!linear) {
    tally.take();
    tally.bad([&] { return "size " + std::to_string(max_size); },
              "above the enumeration cap " + std::to_string(linear.error().cap));
    return tally.finish();
  }
  for (const auto& t : linear.value())
    if (tally.take()) compare(t, true);

  // Untyped closed terms, small enough that the oracle settles quickly.
  if (tally.take()) compare(parse_plain("(\\\\\\(2 0 (1 0))) (\\\\1)"), false);
  for_each_plain_term_upto(std::min<std::size_t>(max_size, 7), 0, [&](const PlainTerm& t) {
    if (is_closed_linear_structural(t)) return;
    if (tally.take()) compare(t, false);
  });
  return tally.finish();
}

Result<PlainTerm, FuelExhausted> oracle_beta_normalize(const PlainTerm& t, std::size_t fuel) {
  PlainTerm cur = t;
  for (std::size_t steps = 0;; ++steps) {
    auto next = beta_step(cur);
    if (!next) return cur;
    if (steps >= fuel) return FuelExhausted{steps};
    cur = std::move(*next);
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lemma",         "characterization", "upsilon-preservation", "r-preservation",
      "preservation",  "roundtrip",        "pipeline"};
  return names;
}

SuiteReport run_suite_by_name(const std::string& name, std::size_t max_size, std::uint64_t seed,
                              const SuiteOptions& opts) {
  auto or_default = [&](std::size_t d) { return max_size ? max_size : d; };
  if (name == "lemma") return run_lemma_suite(or_default(4), 6, seed, 10000, opts);
  if (name == "characterization") return run_characterization_suite(or_default(9), opts);
  if (name == "upsilon-preservation") return run_upsilon_preservation_suite(or_default(9), opts);
  if (name == "r-preservation") return run_r_preservation_suite(or_default(9), opts);
  if (name == "preservation") return run_preservation_suite(or_default(9), opts);
  if (name == "roundtrip") return run_roundtrip_suite(or_default(12), opts);
  if (name == "pipeline") return run_pipeline_oracle_suite(or_default(9), opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lcalc
