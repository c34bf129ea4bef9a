#include "lcalc/ltype.hpp"

#include <cctype>

namespace lcalc {

Order compare_bits(const Bits& a, const Bits& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] ? Order::Greater : Order::Less;
  }
  if (a.size() == b.size()) return Order::Equal;
  return a.size() < b.size() ? Order::Less : Order::Greater;
}

Order compare_rindex(const RIndex& a, const RIndex& b) {
  if (a.depth != b.depth) return a.depth < b.depth ? Order::Less : Order::Greater;
  return compare_bits(a.path, b.path);
}

std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out += b ? '1' : '0';
  return out;
}

Bits bits_from_string(std::string_view text) {
  Bits out;
  if (text == "e") return out;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1: " + std::string(text));
    out.push_back(c == '1');
  }
  return out;
}

std::string rindex_to_string(const RIndex& ix) {
  std::string out = std::to_string(ix.depth);
  if (!ix.path.empty()) out += "_" + bits_to_string(ix.path);
  return out;
}

std::string rindex_to_pair_string(const RIndex& ix) {
  return "(" + std::to_string(ix.depth) + "," + (ix.path.empty() ? "e" : bits_to_string(ix.path)) + ")";
}

std::string to_string(const BasicPredicate& p) {
  switch (p.kind) {
    case BasicPredicate::Kind::LessThan: return "<" + std::to_string(p.bound);
    case BasicPredicate::Kind::GreaterThan: return ">" + std::to_string(p.bound);
    case BasicPredicate::Kind::AtLeast: return ">=" + std::to_string(p.bound);
  }
  return "?";
}

namespace {

struct ListReader {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void want(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos, {what}, pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input");
  }
  Nat nat() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("natural number");
    return static_cast<Nat>(std::stoul(std::string(text.substr(start, pos - start))));
  }
  Bits bits() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'e') {
      ++pos;
      return {};
    }
    Bits out;
    const std::size_t start = pos;
    while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) out.push_back(text[pos++] == '1');
    if (start == pos) fail("bit string or 'e'");
    return out;
  }

  template <class Ix, class ReadOne>
  LType<Ix> list(ReadOne read_one) {
    std::vector<Ix> elems;
    want('[');
    if (!eat(']')) {
      do {
        elems.push_back(read_one());
      } while (eat(','));
      want(']');
    }
    skip_ws();
    if (pos != text.size()) fail("end of input");
    try {
      return LType<Ix>(std::move(elems));
    } catch (const std::invalid_argument&) {
      throw ParseError(0, {"strictly ascending list"}, std::string(text));
    }
  }
};

}  // namespace

NatLType parse_nat_ltype(std::string_view text) {
  ListReader r{text};
  return r.list<Nat>([&] { return r.nat(); });
}

RLType parse_r_ltype(std::string_view text) {
  ListReader r{text};
  return r.list<RIndex>([&] {
    r.want('(');
    const Nat n = r.nat();
    r.want(',');
    Bits b = r.bits();
    r.want(')');
    return RIndex(n, std::move(b));
  });
}

}  // namespace lcalc
