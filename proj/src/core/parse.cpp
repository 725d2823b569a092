/* Copyright 2026 The albertkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Text forms of fields and elements.

#include <cctype>

#include "field.hpp"

namespace albertkit {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Elem from_decimal(const Field& f, const std::string& digits) {
  Elem r = f->zero();
  Elem chunk_base = f->from_int(1000000000LL);
  std::size_t i = 0;
  std::size_t first = digits.size() % 9;
  if (first == 0) first = 9;
  while (i < digits.size()) {
    std::size_t len = i == 0 ? first : 9;
    long long v = std::stoll(digits.substr(i, len));
    r = (i == 0 ? f->zero() : r * chunk_base) + f->from_int(v);
    i += len;
  }
  return r;
}

class ExprParser {
 public:
  ExprParser(Field f, std::string text) : f_(std::move(f)), s_(std::move(text)) {}

  Elem parse() {
    if (s_.empty()) fail("empty expression");
    Elem v = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse, "cannot parse '" + s_ + "' over " + f_->spec() + ": " + msg);
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool starts_primary() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '_';
  }

  Elem expr() {
    Elem v = term();
    while (true) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  Elem term() {
    Elem v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        Elem d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else if (starts_primary()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  Elem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Elem power() {
    Elem b = primary();
    if (accept('^')) {
      bool negative = accept('-');
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be an integer");
      std::uint64_t e = std::stoull(s_.substr(start, pos_ - start));
      if (negative) {
        if (b.is_zero()) fail("division by zero");
        b = b.inv();
      }
      return b.pow(e);
    }
    return b;
  }

  Elem primary() {
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (accept('(')) {
      Elem v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (accept('[')) {
      auto k = as_ext(f_);
      if (!k || !k->is_split()) fail("pairs are only valid in a split algebra");
      std::size_t depth = 0, start = pos_, comma = std::string::npos, end = std::string::npos;
      for (std::size_t i = pos_; i < s_.size(); ++i) {
        char ch = s_[i];
        if (ch == '(' || ch == '[') ++depth;
        else if ((ch == ')' || ch == ']') && depth > 0) --depth;
        else if (ch == ',' && depth == 0 && comma == std::string::npos) comma = i;
        else if (ch == ']' && depth == 0) { end = i; break; }
      }
      if (comma == std::string::npos || end == std::string::npos) fail("malformed pair");
      Elem a = ExprParser(k->base(), s_.substr(start, comma - start)).parse();
      Elem b = ExprParser(k->base(), s_.substr(comma + 1, end - comma - 1)).parse();
      pos_ = end + 1;
      return k->make(a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return from_decimal(f_, s_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto v = f_->symbol(name);
      if (!v) fail("unknown symbol '" + name + "'");
      return *v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Field f_;
  std::string s_;
  std::size_t pos_ = 0;
};

// Polynomial in `var` over `base`, coefficients low to high.
Vec parse_poly(const Field& base, const std::string& text, const std::string& var) {
  auto ring = rational_functions(base, var);
  Elem p = ExprParser(ring, text).parse();
  const auto& r = p.ratfn();
  if (r.den.size() != 1) throw Error(ErrorCode::kParse, "'" + text + "' is not a polynomial");
  return r.num;
}

std::string find_identifier(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      return s.substr(i, j - i);
    }
  }
  return "";
}

Field parse_base(const std::string& s) {
  std::size_t pos = 0;
  Field f;
  if (s.rfind("Q", 0) == 0) {
    f = rationals();
    pos = 1;
  } else if (s.rfind("F(", 0) == 0) {
    std::size_t close = s.find(')', 2);
    if (close == std::string::npos) throw Error(ErrorCode::kParse, "malformed field '" + s + "'");
    std::string q_text = s.substr(2, close - 2);
    if (q_text.empty() || q_text.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::kParse, "malformed field order in '" + s + "'");
    unsigned long q = std::stoul(q_text);
    pos = close + 1;
    if (pos < s.size() && s[pos] == ':') {
      std::size_t end = s.find('(', pos);
      std::string poly = s.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1);
      std::string sym = find_identifier(poly);
      if (sym.empty()) throw Error(ErrorCode::kParse, "modulus has no variable in '" + s + "'");
      Field prime = finite_field(static_cast<std::uint32_t>(q));
      auto pf = as_finite(prime);
      Field fp = finite_field(pf->prime());
      Vec coeffs = parse_poly(fp, poly, sym);
      std::vector<int> mod;
      for (auto& c : coeffs) mod.push_back(c.fq());
      f = finite_field(static_cast<std::uint32_t>(q), mod, sym);
      pos = end == std::string::npos ? s.size() : end;
    } else {
      f = finite_field(static_cast<std::uint32_t>(q));
    }
  } else {
    throw Error(ErrorCode::kParse, "unknown field '" + s + "'");
  }
  while (pos < s.size()) {
    if (s[pos] != '(') throw Error(ErrorCode::kParse, "malformed field '" + s + "'");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorCode::kParse, "malformed field '" + s + "'");
    std::string var = s.substr(pos + 1, close - pos - 1);
    if (var.empty() || find_identifier(var) != var)
      throw Error(ErrorCode::kParse, "bad variable name in '" + s + "'");
    f = rational_functions(f, var);
    pos = close + 1;
  }
  return f;
}

}  // namespace

Field parse_field(std::string_view spec) {
  std::string s = strip(spec);
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == '/' && depth == 0) { slash = i; break; }
  }
  if (slash == std::string::npos) return parse_base(s);
  Field base = parse_base(s.substr(0, slash));
  std::string ext = s.substr(slash + 1);
  if (ext == "split") return make_split(base);
  Vec p = parse_poly(base, ext, "x");
  if (p.size() != 3 || !p[2].is_one())
    throw Error(ErrorCode::kParse, "extension polynomial must be monic of degree 2: '" + ext + "'");
  return make_generated(base, -p[1], -p[0]);
}

Elem parse_elem(const Field& f, std::string_view text) {
  return ExprParser(f, strip(text)).parse();
}

Vec parse_vec(const Field& f, const std::vector<std::string>& texts) {
  Vec out;
  out.reserve(texts.size());
  for (auto& t : texts) out.push_back(parse_elem(f, t));
  return out;
}

std::vector<std::string> format_vec(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (auto& e : v) out.push_back(e.str());
  return out;
}

}  // namespace albertkit
