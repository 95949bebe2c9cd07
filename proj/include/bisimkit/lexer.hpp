// bisimkit/lexer.hpp: tokens and diagnostics shared by all three grammars

#ifndef BISIMKIT_LEXER_HPP
#define BISIMKIT_LEXER_HPP

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bisimkit {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message, std::vector<std::string> expected = {})
      : std::runtime_error(render(span, message, expected)),
        span_(span),
        message_(message),
        expected_(std::move(expected)) {}

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string render(SourceSpan span, const std::string& message, const std::vector<std::string>& expected) {
    std::string out = "parse error at " + std::to_string(span.start) + ".." + std::to_string(span.end) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
      out += ")";
    }
    return out;
  }

  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

enum class Tok { Name, Var, Zero, Quote, Dot, Plus, Bar, LParen, RParen, Lt, Gt, Nu, End };

inline const char* tok_spelling(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Var: return "variable";
    case Tok::Zero: return "'0'";
    case Tok::Quote: return "\"'\"";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Nu: return "'nu'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

/// Splits the whole input up front. Identifiers are [A-Za-z][A-Za-z0-9_]*;
/// lowercase-initial ones are names, uppercase-initial ones variables.
/// `nu` is reserved.
inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](Tok k) {
      ++i;
      out.push_back({k, src.substr(start, 1), {start, i}});
    };
    switch (c) {
      case '0': single(Tok::Zero); continue;
      case '\'': single(Tok::Quote); continue;
      case '.': single(Tok::Dot); continue;
      case '+': single(Tok::Plus); continue;
      case '|': single(Tok::Bar); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '<': single(Tok::Lt); continue;
      case '>': single(Tok::Gt); continue;
      default: break;
    }
    if (std::isalpha(c)) {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      auto text = src.substr(start, i - start);
      Tok k = text == "nu" ? Tok::Nu : std::isupper(c) ? Tok::Var : Tok::Name;
      out.push_back({k, text, {start, i}});
      continue;
    }
    throw ParseError({start, start + 1}, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }
  out.push_back({Tok::End, {}, {src.size(), src.size()}});
  return out;
}

/// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::string_view src) : toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  const Token& expect(Tok k) {
    if (!at(k)) fail({tok_spelling(k)});
    return next();
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw ParseError(t.span, "unexpected " + found, std::move(expected));
  }
  [[noreturn]] void fail_at(SourceSpan span, const std::string& message) const { throw ParseError(span, message); }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace bisimkit

#endif  // BISIMKIT_LEXER_HPP
