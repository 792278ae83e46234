#include "coarse/expr.hpp"

#include <cctype>
#include <charconv>

#include "coarse/classify.hpp"

namespace coarse {

namespace {

bool opens(char c) { return c == '(' || c == '[' || c == '<'; }
bool closes(char c) { return c == ')' || c == ']' || c == '>'; }

// Splits at depth-zero commas; empty input gives no pieces.
std::vector<std::pair<std::string, std::size_t>> split_top(std::string_view s, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::size_t a = start, b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    if (a == b) throw ParseError("empty element", base + a);
    out.emplace_back(std::string(s.substr(a, b - a)), base + a);
  };
  bool blank = true;
  for (char c : s) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (opens(s[i])) ++depth;
    if (closes(s[i])) --depth;
    if (s[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(s.size());
  return out;
}

class Parser {
 public:
  Parser(const GroupView& G, std::string_view text) : G_(G), s_(text) {}

  SubsetView parse() {
    auto v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string peek_word() {
    skip();
    std::size_t i = pos_;
    while (i < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i])) || s_[i] == '_')) ++i;
    return std::string(s_.substr(pos_, i - pos_));
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // Raw text up to the bracket matching the one just consumed.
  std::pair<std::string_view, std::size_t> bracketed(char close) {
    std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < s_.size(); ++pos_) {
      char c = s_[pos_];
      if (depth == 0 && c == close) {
        auto body = s_.substr(start, pos_ - start);
        ++pos_;
        return {body, start};
      }
      if (opens(c)) ++depth;
      if (closes(c)) --depth;
    }
    throw ParseError(std::string("missing '") + close + "'", start);
  }

  std::int64_t integer_arg() {
    expect('(');
    auto [body, at] = bracketed(')');
    return to_int(body, at);
  }

  std::int64_t to_int(std::string_view body, std::size_t at) {
    std::size_t a = 0, b = body.size();
    while (a < b && std::isspace(static_cast<unsigned char>(body[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(body[b - 1]))) --b;
    std::int64_t v = 0;
    auto r = std::from_chars(body.data() + a, body.data() + b, v);
    if (a == b || r.ec != std::errc{} || r.ptr != body.data() + b) throw ParseError("expected an integer", at + a);
    return v;
  }

  Element element(const std::string& text, std::size_t at) {
    try {
      return G_->parse(text);
    } catch (const Error& e) {
      throw ParseError(std::string("bad element: ") + e.what(), at);
    }
  }

  std::vector<Element> elements(std::string_view body, std::size_t at) {
    std::vector<Element> out;
    for (auto& [t, p] : split_top(body, at)) out.push_back(element(t, p));
    return out;
  }

  std::size_t letter_after_equals() {
    expect('=');
    skip();
    std::size_t at = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (at == pos_) throw ParseError("expected a letter", at);
    auto g = element(std::string(s_.substr(at, pos_ - at)), at);
    if (G_->kind() != GroupKind::free) throw ParseError("letter atoms need a free group", at);
    auto ls = as_free(*G_).letters(g);
    if (ls.size() != 1) throw ParseError("expected a single letter", at);
    return ls.front().index;
  }

  SubsetView expr() {
    auto v = term();
    for (;;) {
      auto w = peek_word();
      if (w == "union") {
        pos_ += w.size();
        v = subsets::set_union(v, term());
      } else if (w == "diff") {
        pos_ += w.size();
        v = subsets::set_diff(v, term());
      } else {
        return v;
      }
    }
  }

  SubsetView term() {
    auto v = unary();
    while (peek_word() == "inter") {
      pos_ += 5;
      v = subsets::set_inter(v, unary());
    }
    return v;
  }

  SubsetView unary() {
    auto w = peek_word();
    if (w == "inverse") {
      pos_ += w.size();
      return subsets::inverse(G_, unary());
    }
    if (w == "complement") {
      pos_ += w.size();
      return subsets::complement(G_, unary());
    }
    if (w == "translate") {
      pos_ += w.size();
      expect('(');
      auto [body, at] = bracketed(')');
      auto gs = elements(body, at);
      if (gs.size() != 1) throw ParseError("translate takes one element", at);
      return subsets::translate(G_, gs.front(), unary());
    }
    return primary();
  }

  SubsetView primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    if (s_[pos_] == '(') {
      ++pos_;
      auto v = expr();
      expect(')');
      return v;
    }
    std::size_t at = pos_;
    auto w = peek_word();
    if (w.empty()) throw ParseError("expected a set", at);
    pos_ += w.size();
    if (w == "evens") return subsets::evens(G_);
    if (w == "squares") return subsets::squares(G_);
    if (w == "naturals") return subsets::naturals(G_);
    if (w == "all") return subsets::all(G_);
    if (w == "empty") return subsets::none(G_);
    if (w == "multiples") return subsets::multiples(G_, integer_arg());
    if (w == "powers") return subsets::powers(G_, integer_arg());
    if (w == "weight") {
      expect('=');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto k = to_int(s_.substr(start, pos_ - start), start);
      return subsets::sphere(G_, static_cast<std::size_t>(k));
    }
    if (w == "lambda") return subsets::first_letter(G_, letter_after_equals());
    if (w == "rho") return subsets::last_letter(G_, letter_after_equals());
    if (w == "explicit") {
      expect('[');
      auto [body, p] = bracketed(']');
      return subsets::explicit_set(G_, elements(body, p));
    }
    if (w == "fp") {
      expect('(');
      auto [body, p] = bracketed(')');
      auto gs = elements(body, p);
      if (gs.empty()) throw ParseError("fp needs at least one element", p);
      try {
        return fp_set(G_, gs, gs.size());
      } catch (const Error& e) {
        throw ParseError(e.what(), p);
      }
    }
    throw ParseError("unknown set '" + w + "'", at);
  }

  GroupView G_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SubsetView parse_set_expression(const GroupView& G, std::string_view text) { return Parser(G, text).parse(); }

std::vector<Element> parse_element_list(const Group& G, std::string_view text) {
  std::vector<Element> out;
  for (auto& [t, p] : split_top(text, 0)) {
    try {
      out.push_back(G.parse(t));
    } catch (const Error& e) {
      throw ParseError(std::string("bad element: ") + e.what(), p);
    }
  }
  return out;
}

}  // namespace coarse
