// Command-line front end over the three calculi.
//
//   lcalc COMMAND [--calculus lin|upsilon|r] [flags] [INPUT | --file PATH]
//
// Exit status: 0 success, 1 domain failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcalc/harness.hpp"
#include "lcalc/lin.hpp"
#include "lcalc/resource.hpp"
#include "lcalc/upsilon.hpp"

using namespace lcalc;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

const std::vector<std::string> kCommands = {"parse",       "typecheck",   "step",    "normalize",
                                            "read",        "readback",    "standardize",
                                            "check-linear", "enumerate",  "suite"};

struct Flags {
  std::string command;
  std::string input;
  std::string file;
  std::string calculus = "lin";
  std::size_t fuel = kDefaultFuel;
  bool trace = false;
  bool verify = false;
  bool as_json = false;
  std::uint64_t seed = 1;
  std::size_t max_size = 0;
  bool pipeline = false;
  std::string path;
  bool raw = false;
  bool beta = false;
  std::size_t shards = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* grammar(const std::string& calculus) {
  if (calculus == "upsilon")
    return "term := atom post*   atom := NAT | \\ term | ( term )\n"
           "post := ^NAT | {term,NAT} | [subst]   subst := term/ | ^^ subst | !";
  if (calculus == "r")
    return "term := atom+   atom := IX | \\ term | era IX term | dup IX term | ( term )\n"
           "IX := NAT | NAT_BITS   (2 is (2,e), 0_01 is (0,01))";
  return "term := atom+   atom := NAT | \\ term | ( term )";
}

NormalizeOptions normalize_options(const Flags& f) {
  NormalizeOptions o;
  o.fuel = f.fuel;
  o.trace = f.trace;
  o.verify = f.verify;
  return o;
}

template <class Ix>
json derivation_json(const Derivation<Ix>& d) {
  json premises = json::array();
  for (const auto& p : d.premises) premises.push_back(derivation_json(p));
  return {{"rule", d.rule}, {"term", d.term}, {"ltype", to_string(d.ltype)}, {"premises", premises}};
}

json failure_json(const TypeFailure& e) {
  return {{"kind", to_string(e.kind)}, {"rule", e.rule}, {"path", path_to_string(e.path)},
          {"subject", e.subject},      {"detail", e.detail}, {"message", e.message()}};
}

template <class T, class Print>
json trace_json(const std::vector<TraceStep<T>>& trace, Print print) {
  json out = json::array();
  for (const auto& s : trace)
    out.push_back({{"index", s.index}, {"rule", s.rule}, {"path", path_to_string(s.path)},
                   {"term", print(s.term)}});
  return out;
}

class Runner {
 public:
  explicit Runner(Flags f) : f_(std::move(f)) {}

  int run() {
    const std::string& c = f_.command;
    if (c == "parse") return parse();
    if (c == "typecheck") return typecheck();
    if (c == "step") return step();
    if (c == "normalize") return normalize();
    if (c == "read") return translate_read();
    if (c == "readback") return translate_readback();
    if (c == "standardize") return standardize_cmd();
    if (c == "check-linear") return check_linear();
    if (c == "enumerate") return enumerate();
    return suite();
  }

 private:
  Flags f_;

  bool lin() const { return f_.calculus == "lin"; }
  bool ups() const { return f_.calculus == "upsilon"; }
  bool res() const { return f_.calculus == "r"; }

  const std::string& input() const {
    if (f_.input.empty()) throw UsageError("missing input term (positional argument or --file)");
    return f_.input;
  }

  void emit(const json& j, const std::string& text) const {
    if (f_.as_json)
      std::cout << j.dump() << "\n";
    else
      std::cout << text;
  }

  int domain_failure(const json& j, const std::string& message) const {
    if (f_.as_json) std::cout << json{{"error", j}}.dump() << "\n";
    std::cerr << message << "\n";
    return kDomainFailure;
  }

  int normalize_failure(const NormalizeFailure& e) const {
    return domain_failure({{"kind", to_string(e.kind)}, {"steps", e.steps_taken}, {"detail", e.detail}},
                          std::string(to_string(e.kind)) + ": " + e.detail);
  }

  template <class Ix>
  int typed(const Result<Typing<Ix>, TypeFailure>& r) const {
    if (!r) return domain_failure(failure_json(r.error()), r.error().message());
    const auto& t = r.value();
    std::string text = to_string(t.ltype) + "\n";
    if (f_.trace) text += render_derivation(t.derivation);
    emit({{"ltype", to_string(t.ltype)}, {"derivation", derivation_json(t.derivation)}}, text);
    return kOk;
  }

  int parse() {
    std::string out;
    if (lin()) out = print_plain(parse_plain(input()));
    else if (ups() && f_.raw) out = print_raw_upsilon(parse_raw_upsilon(input()));
    else if (ups()) out = print_upsilon(parse_upsilon(input()));
    else out = print_rterm(parse_rterm(input()));
    emit({{"calculus", f_.calculus}, {"term", out}}, out + "\n");
    return kOk;
  }

  int typecheck() {
    if (lin()) return typed(infer_lin(parse_plain(input())));
    if (ups()) return typed(infer_upsilon(parse_upsilon(input())));
    return typed(infer_r(parse_rterm(input())));
  }

  template <class T, class Positions, class Step, class Print>
  int step_with(const T& t, Positions positions, Step step_fn, Print print) {
    TermPath at;
    if (!f_.path.empty()) {
      try {
        at = path_from_string(f_.path);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else {
      auto all = positions(t);
      if (all.empty()) return domain_failure({{"kind", "NoRedex"}, {"path", "e"}}, "NoRedex: term is normal");
      at = all.front();
    }
    auto r = step_fn(t, at);
    if (!r)
      return domain_failure({{"kind", "NoRedex"}, {"path", path_to_string(at)}},
                            "NoRedex: no rule applies at " + path_to_string(at));
    const std::string term = print(r.value().term);
    emit({{"rule", r.value().rule}, {"path", path_to_string(at)}, {"term", term}},
         r.value().rule + "  " + path_to_string(at) + "  " + term + "\n");
    return kOk;
  }

  int step() {
    if (lin())
      throw UsageError("step needs --calculus upsilon or r; the linear calculus has no reduction "
                       "of its own (use normalize --pipeline)");
    if (ups() && f_.raw)
      return step_with(parse_raw_upsilon(input()), raw_redex_positions, step_raw,
                       [](const RawUpsilonTerm& t) { return print_raw_upsilon(t); });
    if (ups())
      return step_with(parse_upsilon(input()), in_redex_positions, step_in,
                       [](const UpsilonTerm& t) { return print_upsilon(t); });
    return step_with(parse_rterm(input()), r_redex_positions, step_r,
                     [](const RTerm& t) { return print_rterm(t); });
  }

  template <class T, class Print>
  int report_normalized(const Normalized<T>& n, Print print, const std::string& result) {
    std::string text;
    if (f_.trace) text = render_trace(n.trace, print);
    if (f_.trace || f_.verify)
      text += "steps: " + std::to_string(n.steps) + (n.verified ? ", type verified" : "") + "\n";
    text += result + "\n";
    json j = {{"result", result}, {"steps", n.steps}, {"verified", n.verified}};
    if (f_.trace) j["trace"] = trace_json(n.trace, print);
    emit(j, text);
    return kOk;
  }

  int normalize() {
    auto raw_print = [](const RawUpsilonTerm& t) { return print_raw_upsilon(t); };
    if (lin()) {
      PlainTerm t = parse_plain(input());
      auto ty = lin_type(t);
      const bool closed_linear = ty && ty.value().empty();
      if (!closed_linear)
        std::cerr << "note: input is not closed linear ("
                  << (ty ? "typed " + to_string(ty.value()) : ty.error().message())
                  << "); using the untyped pipeline\n";
      auto r = closed_linear ? normalize_lin_pipeline(t, normalize_options(f_))
                             : normalize_pipeline(t, normalize_options(f_));
      if (!r) return normalize_failure(r.error());
      return report_normalized(r.value().run, raw_print, print_plain(r.value().result));
    }
    if (ups() && f_.raw) {
      auto r = normalize_raw(parse_raw_upsilon(input()), normalize_options(f_));
      if (!r) return normalize_failure(r.error());
      return report_normalized(r.value(), raw_print, print_raw_upsilon(r.value().term));
    }
    if (ups()) {
      auto print = [](const UpsilonTerm& t) { return print_upsilon(t); };
      auto r = normalize_in(parse_upsilon(input()), normalize_options(f_));
      if (!r) return normalize_failure(r.error());
      return report_normalized(r.value(), print, print_upsilon(r.value().term));
    }
    auto print = [](const RTerm& t) { return print_rterm(t); };
    RTerm t = parse_rterm(input());
    if (f_.beta) {
      auto r = beta_r(t, normalize_options(f_));
      if (!r) return normalize_failure(r.error());
      const auto& b = r.value();
      std::string text = print_rterm(b.result) + "\n";
      json j = {{"result", print_rterm(b.result)},
                {"plain_normal", print_plain(b.plain_normal)},
                {"beta_steps", b.beta_steps},
                {"dup_era_steps", b.dup_era_steps}};
      if (f_.trace || f_.verify)
        text = "plain normal form " + print_plain(b.plain_normal) + " after " +
               std::to_string(b.beta_steps) + " steps, " + std::to_string(b.dup_era_steps) +
               " dup/era steps\n" + text;
      emit(j, text);
      return kOk;
    }
    auto r = normalize_dup_era(t, normalize_options(f_));
    if (!r) return normalize_failure(r.error());
    return report_normalized(r.value(), print, print_rterm(r.value().term));
  }

  int translate_read() {
    const std::string out = print_rterm(read(parse_plain(input())));
    emit({{"term", out}}, out + "\n");
    return kOk;
  }

  int translate_readback() {
    const std::string out = print_plain(readback(parse_rterm(input())));
    emit({{"term", out}}, out + "\n");
    return kOk;
  }

  int standardize_cmd() {
    const std::string out = print_rterm(standardize(parse_rterm(input())));
    emit({{"term", out}}, out + "\n");
    return kOk;
  }

  int check_linear() {
    bool yes = false;
    std::string why;
    auto explain = [&](const auto& ty) {
      if (!ty) why = ty.error().message();
      else if (!ty.value().empty()) why = "free indices " + to_string(ty.value());
      yes = ty && ty.value().empty();
    };
    if (lin()) explain(lin_type(parse_plain(input())));
    else if (ups()) explain(upsilon_type(parse_upsilon(input())));
    else explain(r_type(parse_rterm(input())));
    json j = {{"linear_and_closed", yes}};
    if (!yes) j["reason"] = why;
    emit(j, yes ? "true\n" : "false\n");
    if (!yes && !f_.as_json) std::cerr << why << "\n";
    return yes ? kOk : kDomainFailure;
  }

  int enumerate() {
    std::vector<std::string> out;
    if (res() && !f_.input.empty()) {
      for (const auto& t : representatives(parse_plain(f_.input))) out.push_back(print_rterm(t));
    } else if (res()) {
      const std::size_t max = f_.max_size ? f_.max_size : 5;
      if (max > 7)
        return domain_failure({{"kind", "CapExceeded"}, {"requested", max}, {"cap", 7}},
                              "CapExceeded: typed term generation is capped at size 7");
      for (std::size_t s = 1; s <= max; ++s)
        for (const auto& t : typed_closed_rterms(s, 2)) out.push_back(print_rterm(t));
    } else {
      const std::size_t max = f_.max_size ? f_.max_size : 5;
      auto ts = enumerate_closed_linear(max);
      if (!ts)
        return domain_failure(
            {{"kind", "CapExceeded"}, {"requested", ts.error().requested}, {"cap", ts.error().cap}},
            "CapExceeded: closed linear enumeration is capped at size " + std::to_string(ts.error().cap));
      for (const auto& t : ts.value())
        out.push_back(ups() ? print_upsilon(embed_upsilon(t)) : print_plain(t));
    }
    std::string text;
    for (const auto& s : out) text += s + "\n";
    emit({{"count", out.size()}, {"terms", out}}, text);
    return kOk;
  }

  int suite() {
    const std::string name = f_.input.empty() ? "all" : f_.input;
    std::vector<std::string> names;
    if (name == "all") {
      for (const auto& n : suite_names())
        if (n != "preservation") names.push_back(n);
    } else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) {
      names.push_back(name);
    } else {
      throw UsageError("unknown suite '" + name + "'");
    }
    bool all_passed = true;
    for (const auto& n : names) {
      SuiteOptions o;
      o.records = f_.as_json && f_.trace;
      auto report = run_sharded(
          [&](const SuiteOptions& so) { return run_suite_by_name(n, f_.max_size, f_.seed, so); },
          f_.shards, o);
      std::cout << (f_.as_json ? report.json_lines() : report.text());
      all_passed = all_passed && report.passed();
    }
    return all_passed ? kOk : kDomainFailure;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource-aware lambda calculi: typing, rewriting and translations"};
  Flags f;
  app.add_option("command", f.command, "parse, typecheck, step, normalize, read, readback,\n"
                                       "standardize, check-linear, enumerate or suite")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("input", f.input, "term text (suite: suite name or 'all')");
  app.add_option("--file", f.file, "read the input term from a file")->check(CLI::ExistingFile);
  app.add_option("--calculus", f.calculus, "lin, upsilon or r")
      ->check(CLI::IsMember({"lin", "upsilon", "r"}))
      ->capture_default_str();
  app.add_option("--fuel", f.fuel, "rewrite step budget")->capture_default_str();
  app.add_flag("--trace", f.trace, "print rewrite traces or derivation trees");
  app.add_flag("--verify", f.verify, "re-infer the L-type after every step");
  app.add_flag("--json", f.as_json, "structured output");
  app.add_option("--seed", f.seed, "random seed for suite")->capture_default_str();
  app.add_option("--max-size", f.max_size, "size bound for enumerate and suite");
  app.add_flag("--pipeline", f.pipeline, "normalize plain terms through explicit substitutions (default for lin)");
  app.add_option("--path", f.path, "redex position for step, e.g. e or 0.1");
  app.add_flag("--raw", f.raw, "upsilon: use the closure syntax and the 8-rule system");
  app.add_flag("--beta", f.beta, "r: beta-normalize through the plain pipeline");
  app.add_option("--shards", f.shards, "suite: worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!f.file.empty()) {
      if (!f.input.empty()) throw UsageError("give the input either inline or with --file, not both");
      f.input = read_file(f.file);
      while (!f.input.empty() && std::isspace(static_cast<unsigned char>(f.input.back()))) f.input.pop_back();
    }
    if (f.pipeline && !(f.command == "normalize" && f.calculus == "lin"))
      throw UsageError("--pipeline applies to normalize with --calculus lin");
    return Runner(f).run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\ngrammar (" << f.calculus << "):\n"
              << grammar(f.calculus) << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\ngrammar (" << f.calculus << "):\n"
              << grammar(f.calculus) << "\nRun with --help for more information.\n";
    return kUsage;
  }
}
