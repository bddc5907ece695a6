#include "folindex/lexer.hpp"

#include <cctype>

#include "folindex/errors.hpp"

namespace folindex {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t{TokenKind::Punct, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = TokenKind::Ident;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = TokenKind::Number;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == ':' && i + 1 < text.size() && text[i + 1] == '=') {
      t.text = ":=";
      advance(2);
    } else if (std::string_view("+-*/^(),;").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                              ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
  return toks_[k];
}

const Token& TokenStream::next() {
  const Token& t = toks_[pos_];
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

bool TokenStream::is(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind != TokenKind::End && t.kind != TokenKind::Number && t.text == s;
}

bool TokenStream::accept(std::string_view s) {
  if (!is(s)) return false;
  next();
  return true;
}

const Token& TokenStream::expect(std::string_view s) {
  if (!is(s)) fail(peek(), "expected '" + std::string(s) + "'");
  return next();
}

const Token& TokenStream::expect_ident() {
  if (peek().kind != TokenKind::Ident) fail(peek(), "expected an identifier");
  return next();
}

const Token& TokenStream::expect_number() {
  if (peek().kind != TokenKind::Number) fail(peek(), "expected a number");
  return next();
}

void TokenStream::fail(const Token& at, const std::string& msg) const {
  std::string found = at.kind == TokenKind::End ? "end of input" : "'" + at.text + "'";
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " +
                                          msg + ", found " + found);
}

}  // namespace folindex
