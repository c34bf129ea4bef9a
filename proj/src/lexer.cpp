#include "lexer.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace lcalc {

std::string path_to_string(const TermPath& path) {
  if (path.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

TermPath path_from_string(const std::string& text) {
  TermPath path;
  if (text.empty() || text == "e") return path;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::invalid_argument("malformed path: " + text);
    path.push_back(std::stoul(text.substr(i, j - i)));
    if (j == text.size()) break;
    if (text[j] != '.') throw std::invalid_argument("malformed path: " + text);
    i = j + 1;
  }
  return path;
}

namespace {

std::string parse_error_message(std::size_t offset, const std::vector<std::string>& expected,
                                const std::string& found) {
  std::ostringstream out;
  out << "parse error at byte " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  out << ", found " << found;
  return out.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error(parse_error_message(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace lcalc

namespace lcalc::detail {

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Nat: return "natural number";
    case Tok::RIndex: return "resource index";
    case Tok::Lambda: return "'\\'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Caret: return "'^'";
    case Tok::Lift: return "'^^'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Slash: return "'/'";
    case Tok::Bang: return "'!'";
    case Tok::Ident: return "keyword";
    case Tok::End: return "end of input";
  }
  return "?";
}

Lexer::Lexer(std::string_view src, bool resource_indices) {
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t at, std::string text) {
    Token t;
    t.kind = kind;
    t.offset = at;
    t.text = std::move(text);
    tokens_.push_back(std::move(t));
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      std::uint64_t value = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        const auto digit = static_cast<std::uint64_t>(src[i] - '0');
        if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10)
          throw ParseError(start, {"index below 2^32"}, std::string(src.substr(start, i - start + 1)));
        value = value * 10 + digit;
        ++i;
      }
      Token t;
      t.kind = Tok::Nat;
      t.offset = start;
      t.nat = value;
      if (resource_indices && i < src.size() && src[i] == '_') {
        ++i;
        t.kind = Tok::RIndex;
        while (i < src.size() && (src[i] == '0' || src[i] == '1')) {
          t.bits.push_back(src[i] == '1');
          ++i;
        }
        const bool digit_follows = i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]));
        if (t.bits.empty() || digit_follows)
          throw ParseError(i, {"path bit 0 or 1"},
                           i < src.size() ? "'" + std::string(1, src[i]) + "'" : "end of input");
      }
      t.text = std::string(src.substr(start, i - start));
      tokens_.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(c)) {
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      push(Tok::Ident, start, std::string(src.substr(start, i - start)));
      continue;
    }
    // UTF-8 lambda: U+03BB is 0xCE 0xBB.
    if (c == 0xCE && i + 1 < src.size() && static_cast<unsigned char>(src[i + 1]) == 0xBB) {
      i += 2;
      push(Tok::Lambda, start, "\\");
      continue;
    }
    ++i;
    switch (c) {
      case '\\': push(Tok::Lambda, start, "\\"); break;
      case '(': push(Tok::LParen, start, "("); break;
      case ')': push(Tok::RParen, start, ")"); break;
      case '{': push(Tok::LBrace, start, "{"); break;
      case '}': push(Tok::RBrace, start, "}"); break;
      case ',': push(Tok::Comma, start, ","); break;
      case '[': push(Tok::LBracket, start, "["); break;
      case ']': push(Tok::RBracket, start, "]"); break;
      case '/': push(Tok::Slash, start, "/"); break;
      case '!': push(Tok::Bang, start, "!"); break;
      case '^':
        if (i < src.size() && src[i] == '^') {
          ++i;
          push(Tok::Lift, start, "^^");
        } else {
          push(Tok::Caret, start, "^");
        }
        break;
      default:
        throw ParseError(start, {"token"}, "'" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  push(Tok::End, src.size(), "");
}

void Lexer::fail(std::vector<std::string> expected) const {
  const Token& t = peek();
  throw ParseError(t.offset, std::move(expected),
                   t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'");
}

Token Lexer::expect(Tok kind) {
  if (!at(kind)) fail({describe(kind)});
  return next();
}

}  // namespace lcalc::detail
