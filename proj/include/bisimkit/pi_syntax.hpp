// bisimkit/pi_syntax.hpp: concrete syntax of the finite pi-calculus
//
//   par    ::= seq ('|' seq)*
//   seq    ::= prefix ('.' seq)? | '(' 'nu' name ')' seq | '0' | '(' par ')'
//   prefix ::= name '(' name ')' | name '<' name '>'
//
// The printer names binders p, q, r, ... (restrictions) and x, y, z, ...
// (inputs), skipping free names and binders already in scope.

#ifndef BISIMKIT_PI_SYNTAX_HPP
#define BISIMKIT_PI_SYNTAX_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "bisimkit/lexer.hpp"
#include "bisimkit/pi_term.hpp"

namespace bisimkit {

namespace detail {

class PiParser {
 public:
  explicit PiParser(std::string_view src) : ts_(src) {}

  PiTerm parse_all() {
    PiTerm t = par();
    if (ts_.at(Tok::Plus)) ts_.fail_at(ts_.peek().span, "sum is not part of the pi-calculus fragment");
    if (!ts_.at(Tok::End)) ts_.fail({"'|'", "end of input"});
    return t;
  }

 private:
  PiTerm par() {
    std::vector<PiTerm> parts{seq()};
    while (ts_.accept(Tok::Bar)) parts.push_back(seq());
    return parts.size() == 1 ? parts.front() : PiTerm::par(std::move(parts));
  }

  Name name() { return Name::intern(ts_.expect(Tok::Name).text); }

  PiTerm seq() {
    if (ts_.at(Tok::Name)) {
      Name ch = name();
      if (ts_.accept(Tok::LParen)) {
        Name x = name();
        ts_.expect(Tok::RParen);
        return PiTerm::input(ch, x, rest());
      }
      if (ts_.accept(Tok::Lt)) {
        Name b = name();
        ts_.expect(Tok::Gt);
        return PiTerm::output(ch, b, rest());
      }
      ts_.fail({"'('", "'<'"});
    }
    if (ts_.accept(Tok::Zero)) return PiTerm::nil();
    if (ts_.accept(Tok::LParen)) {
      if (ts_.accept(Tok::Nu)) {
        Name p = name();
        ts_.expect(Tok::RParen);
        return PiTerm::nu(p, seq());
      }
      PiTerm t = par();
      ts_.expect(Tok::RParen);
      return t;
    }
    if (ts_.at(Tok::Quote) || ts_.at(Tok::Var)) ts_.fail_at(ts_.peek().span, "not pi-calculus syntax");
    ts_.fail({"name", "'0'", "'('"});
  }

  PiTerm rest() { return ts_.accept(Tok::Dot) ? seq() : PiTerm::nil(); }

  TokenStream ts_;
};

class PiPrinter {
 public:
  explicit PiPrinter(const PiTerm& t) {
    auto fn = free_names(t);
    taken_.assign(fn.begin(), fn.end());
  }

  void print(const PiTerm& t, std::string& out, bool as_seq) {
    switch (t.kind()) {
      case PiKind::Nil:
        out += "0";
        return;
      case PiKind::Input: {
        out += show(t.channel()) + "(";
        Name shown = pick(input_names_);
        out += shown.str() + ").";
        with(t.object(), shown, [&] { print(t.continuation(), out, true); });
        return;
      }
      case PiKind::Output:
        out += show(t.channel()) + "<" + show(t.object()) + ">.";
        print(t.continuation(), out, true);
        return;
      case PiKind::Par: {
        if (as_seq) out += "(";
        bool first = true;
        for (const auto& k : t.children()) {
          if (!first) out += " | ";
          first = false;
          print(k, out, true);
        }
        if (as_seq) out += ")";
        return;
      }
      case PiKind::Nu: {
        Name shown = pick(restriction_names_);
        out += "(nu " + shown.str() + ")";
        with(t.channel(), shown, [&] { print(t.continuation(), out, true); });
        return;
      }
    }
  }

 private:
  template <class F>
  void with(Name raw, Name shown, F&& body) {
    scope_.emplace_back(raw, shown);
    taken_.push_back(shown);
    body();
    taken_.pop_back();
    scope_.pop_back();
  }

  Name show_name(Name n) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == n) return it->second;
    return n;
  }
  std::string show(Name n) const { return show_name(n).str(); }

  Name pick(const std::vector<const char*>& pool) const {
    for (std::size_t round = 0;; ++round)
      for (const char* base : pool) {
        Name n = Name::intern(round == 0 ? std::string(base) : base + std::to_string(round));
        if (std::find(taken_.begin(), taken_.end(), n) == taken_.end()) return n;
      }
  }

  std::vector<std::pair<Name, Name>> scope_;
  std::vector<Name> taken_;
  const std::vector<const char*> restriction_names_{"p", "q", "r", "s", "t"};
  const std::vector<const char*> input_names_{"x", "y", "z", "u", "v", "w"};
};

}  // namespace detail

inline PiTerm parse_pi(std::string_view text) { return canonicalize(detail::PiParser(text).parse_all()); }

/// Parses without canonicalizing, keeping binder names as written.
inline PiTerm parse_pi_raw(std::string_view text) { return detail::PiParser(text).parse_all(); }

inline std::string print_term(const PiTerm& t) {
  std::string out;
  detail::PiPrinter(t).print(t, out, false);
  return out;
}

}  // namespace bisimkit

#endif  // BISIMKIT_PI_SYNTAX_HPP
