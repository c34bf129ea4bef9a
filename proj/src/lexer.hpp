#pragma once

// Shared tokenizer for the three term grammars. Private to the library.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcalc/result.hpp"

namespace lcalc::detail {

enum class Tok {
  Nat,        // 12
  RIndex,     // 3_010 (only produced when resource indices are enabled)
  Lambda,     // \ or UTF-8 λ
  LParen,
  RParen,
  Caret,      // ^
  Lift,       // ^^
  LBrace,
  RBrace,
  Comma,
  LBracket,
  RBracket,
  Slash,
  Bang,
  Ident,      // era, dup
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string text;
  std::uint64_t nat = 0;
  std::vector<bool> bits;
};

const char* describe(Tok kind);

class Lexer {
 public:
  Lexer(std::string_view src, bool resource_indices);

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const;
  Token expect(Tok kind);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace lcalc::detail
