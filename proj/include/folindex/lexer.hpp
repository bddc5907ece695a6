#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace folindex {

enum class TokenKind { Ident, Number, Punct, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  int col = 1;
};

/// Splits DSL text into identifiers, unsigned integer literals and
/// punctuation (":=" is a single token).  '#' starts a comment running to the
/// end of the line.  Throws SyntaxError on stray characters.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with error reporting by position.
class TokenStream {
public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool accept(std::string_view punct_or_word);
  const Token& expect(std::string_view punct_or_word);
  const Token& expect_ident();
  const Token& expect_number();
  bool is(std::string_view punct_or_word, std::size_t ahead = 0) const;

  [[noreturn]] void fail(const Token& at, const std::string& msg) const;

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace folindex
