// bisimkit/ccs_syntax.hpp: concrete syntax of microCCS and microCCS+
//
//   par    ::= sum ('|' sum)*
//   sum    ::= seq ('+' seq)*            (microCCS+ only)
//   seq    ::= prefix ('.' seq)? | atom  ("a" alone means a.0)
//   prefix ::= "'"? name
//   atom   ::= '0' | VAR | '(' par ')'

#ifndef BISIMKIT_CCS_SYNTAX_HPP
#define BISIMKIT_CCS_SYNTAX_HPP

#include <string>
#include <string_view>

#include "bisimkit/ccs_term.hpp"
#include "bisimkit/lexer.hpp"

namespace bisimkit {

namespace detail {

class CcsParser {
 public:
  CcsParser(std::string_view src, bool allow_sum) : ts_(src), allow_sum_(allow_sum) {}

  Term parse_all() {
    Term t = par();
    if (!ts_.at(Tok::End)) ts_.fail({"'|'", allow_sum_ ? "'+'" : "end of input", "end of input"});
    return t;
  }

 private:
  Term par() {
    std::vector<Term> parts{sum()};
    while (ts_.accept(Tok::Bar)) parts.push_back(sum());
    return parts.size() == 1 ? parts.front() : Term::par(std::move(parts));
  }

  Term sum() {
    SourceSpan first = ts_.peek().span;
    Term lhs = seq();
    if (!ts_.at(Tok::Plus)) return lhs;
    if (!allow_sum_) ts_.fail_at(ts_.peek().span, "sum is not part of microCCS (use the ccs+ calculus)");
    std::vector<std::pair<Term, SourceSpan>> parts{{lhs, first}};
    while (ts_.accept(Tok::Plus)) {
      SourceSpan at = ts_.peek().span;
      parts.push_back({seq(), at});
    }
    std::vector<Term> summands;
    for (auto& [t, at] : parts) {
      if (t.kind() == TermKind::Par || t.kind() == TermKind::Var) ts_.fail_at(at, "summands must be prefixed");
      summands.push_back(t);
    }
    return Term::sum(std::move(summands));
  }

  Term seq() {
    if (ts_.at(Tok::Quote) || ts_.at(Tok::Name)) {
      bool co = ts_.accept(Tok::Quote);
      const Token& n = ts_.expect(Tok::Name);
      Name name = Name::intern(n.text);
      Prefix eta = co ? Prefix::coaction(name) : Prefix::action(name);
      Term cont = ts_.accept(Tok::Dot) ? seq() : Term::nil();
      return Term::prefix(eta, cont);
    }
    return atom();
  }

  Term atom() {
    if (ts_.accept(Tok::Zero)) return Term::nil();
    if (ts_.at(Tok::Var)) return Term::var(Name::intern(ts_.next().text));
    if (ts_.accept(Tok::LParen)) {
      Term t = par();
      ts_.expect(Tok::RParen);
      return t;
    }
    ts_.fail({"'0'", "name", "\"'\"", "variable", "'('"});
  }

  TokenStream ts_;
  bool allow_sum_;
};

inline void print_ccs(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Nil:
      out += "0";
      return;
    case TermKind::Var:
      out += t.ident().str();
      return;
    case TermKind::Prefix: {
      out += t.head().str();
      out += ".";
      const Term& k = t.continuation();
      bool wrap = k.kind() == TermKind::Par || k.kind() == TermKind::Sum;
      if (wrap) out += "(";
      print_ccs(k, out);
      if (wrap) out += ")";
      return;
    }
    case TermKind::Sum:
    case TermKind::Par: {
      const char* sep = t.kind() == TermKind::Sum ? " + " : " | ";
      bool first = true;
      for (const auto& k : t.children()) {
        if (!first) out += sep;
        first = false;
        bool wrap = k.kind() == TermKind::Par;
        if (wrap) out += "(";
        print_ccs(k, out);
        if (wrap) out += ")";
      }
      return;
    }
  }
}

}  // namespace detail

/// Parses a (possibly open) microCCS term into canonical form.
inline Term parse_ccs(std::string_view text) { return detail::CcsParser(text, false).parse_all(); }

/// Parses a microCCS+ term; every summand must be Nil or prefixed.
inline Term parse_ccs_plus(std::string_view text) { return detail::CcsParser(text, true).parse_all(); }

inline std::string print_term(const Term& t) {
  std::string out;
  detail::print_ccs(t, out);
  return out;
}

}  // namespace bisimkit

#endif  // BISIMKIT_CCS_SYNTAX_HPP
