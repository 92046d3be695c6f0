// Copyright 2026 The expzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frontend/parser.hpp"

#include <cctype>
#include <map>
#include <memory>

#include "util/error.hpp"

namespace expzero::fe {
namespace {

using ec::ExpPoly;
using nf::FieldElement;
using nf::FieldPtr;
using nf::Integer;
using nf::IntPoly;
using nf::Rational;
using nf::Rectangle;

constexpr unsigned kMaxPower = 4096;

struct Node {
  enum class Kind { Num, X, Exp, Alg, Add, Mul, Pow, Neg } kind;
  Rational num;
  unsigned power = 0;
  std::size_t alg = 0;
  std::vector<Node> kids;
};

struct AlgLiteral {
  IntPoly minpoly;
  Rectangle box;
  std::size_t position;
};

class Parser {
 public:
  Parser(const std::string& text, std::vector<AlgLiteral>& algs) : s_(text), algs_(algs) {}

  Node parse() {
    Node n = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, "syntax error at offset " + std::to_string(i_) + ": " + msg, i_);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_word(const char* w) {
    skip();
    const std::size_t n = std::char_traits<char>::length(w);
    if (s_.compare(i_, n, w) != 0) return false;
    const std::size_t j = i_ + n;
    return j >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[j]));
  }

  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }

  Integer integer() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return Integer(s_.substr(start, i_ - start));
  }

  Integer posint() {
    const std::size_t at = (skip(), i_);
    Integer v = integer();
    if (sgn(v) == 0) {
      i_ = at;
      fail("division by zero");
    }
    return v;
  }

  unsigned natural() {
    const std::size_t at = (skip(), i_);
    Integer v = integer();
    if (v > kMaxPower) {
      i_ = at;
      throw Error(ErrorCode::DegreeCapExceeded, "exponent " + v.get_str() + " exceeds " + std::to_string(kMaxPower), at);
    }
    return static_cast<unsigned>(v.get_ui());
  }

  // integer ('/' posint)? or a decimal literal.
  Rational rational(bool allow_decimal) {
    Integer n = integer();
    if (allow_decimal && i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected digits after '.'");
      Integer den = 1;
      for (std::size_t k = start; k < i_; ++k) den *= 10;
      Rational q(n * den + Integer(s_.substr(start, i_ - start)), den);
      q.canonicalize();
      return q;
    }
    const std::size_t save = i_;
    if (accept('/')) {
      if (at_digit()) {
        Rational q(n, posint());
        q.canonicalize();
        return q;
      }
      i_ = save;
    }
    return Rational(n);
  }

  Node expr() {
    Node sum{Node::Kind::Add, 0, 0, 0, {}};
    const bool neg = accept('-');
    Node t = term();
    sum.kids.push_back(neg ? Node{Node::Kind::Neg, 0, 0, 0, {std::move(t)}} : std::move(t));
    while (true) {
      if (accept('+')) {
        sum.kids.push_back(term());
      } else if (accept('-')) {
        sum.kids.push_back(Node{Node::Kind::Neg, 0, 0, 0, {term()}});
      } else {
        break;
      }
    }
    return sum.kids.size() == 1 ? std::move(sum.kids[0]) : sum;
  }

  bool at_base_start() {
    skip();
    if (i_ >= s_.size()) return false;
    return s_[i_] == '(' || at_word("x") || at_word("exp") || at_word("alg");
  }

  Node term() {
    Node prod{Node::Kind::Mul, 0, 0, 0, {}};
    prod.kids.push_back(factor());
    while (true) {
      if (accept('*')) {
        prod.kids.push_back(factor());
      } else if (peek('/')) {
        ++i_;
        Rational inv(Integer(1), posint());
        inv.canonicalize();
        prod.kids.push_back(Node{Node::Kind::Num, inv, 0, 0, {}});
      } else if (at_base_start()) {
        prod.kids.push_back(factor());
      } else {
        break;
      }
    }
    return prod.kids.size() == 1 ? std::move(prod.kids[0]) : prod;
  }

  Node factor() {
    Node b = base();
    if (accept('^')) {
      return Node{Node::Kind::Pow, 0, natural(), 0, {std::move(b)}};
    }
    return b;
  }

  Node base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (at_digit()) {
      return Node{Node::Kind::Num, rational(false), 0, 0, {}};
    }
    if (accept('(')) {
      Node e = expr();
      expect(')');
      return e;
    }
    if (at_word("x")) {
      ++i_;
      return Node{Node::Kind::X, 0, 0, 0, {}};
    }
    if (at_word("exp")) {
      i_ += 3;
      expect('(');
      Node e = expr();
      expect(')');
      return Node{Node::Kind::Exp, 0, 0, 0, {std::move(e)}};
    }
    if (at_word("alg")) {
      const std::size_t at = i_;
      i_ += 3;
      expect('(');
      IntPoly m = intpoly();
      Rational v[4];
      for (auto& r : v) {
        expect(',');
        const bool neg = accept('-');
        r = rational(true);
        if (neg) r = -r;
      }
      expect(')');
      algs_.push_back({std::move(m), Rectangle{v[0], v[1], v[2], v[3]}, at});
      return Node{Node::Kind::Alg, 0, 0, algs_.size() - 1, {}};
    }
    if (s_[i_] == ')') fail("expected an expression");
    fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }

  IntPoly intpoly() {
    IntPoly p;
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!first && !accept('+')) {
        break;
      }
      first = false;
      Integer c = 1;
      bool any = false;
      if (at_digit()) {
        c = integer();
        any = true;
        accept('*');
      }
      unsigned k = 0;
      skip();
      if (i_ < s_.size() && s_[i_] == 't') {
        ++i_;
        k = 1;
        any = true;
        if (accept('^')) k = natural();
      }
      if (!any) fail("expected a term of a polynomial in t");
      if (p.size() <= k) p.resize(k + 1, Integer(0));
      p[k] += neg ? Integer(-c) : c;
    }
    nf::trim(p);
    if (p.empty()) fail("zero minimal polynomial");
    return p;
  }

  const std::string& s_;
  std::vector<AlgLiteral>& algs_;
  std::size_t i_ = 0;
};

ExpPoly evaluate(const Node& n, const FieldPtr& k, const std::vector<FieldElement>& alg) {
  switch (n.kind) {
    case Node::Kind::Num:
      return ExpPoly::rational(k, n.num);
    case Node::Kind::X:
      return ExpPoly::x(k);
    case Node::Kind::Exp:
      return ec::ep_exp(evaluate(n.kids[0], k, alg));
    case Node::Kind::Alg:
      return ExpPoly::constant(alg[n.alg]);
    case Node::Kind::Neg:
      return -evaluate(n.kids[0], k, alg);
    case Node::Kind::Pow:
      return ec::pow(evaluate(n.kids[0], k, alg), n.power);
    case Node::Kind::Add: {
      ExpPoly acc(k);
      for (const auto& c : n.kids) acc = acc + evaluate(c, k, alg);
      return acc;
    }
    case Node::Kind::Mul: {
      ExpPoly acc = ExpPoly::rational(k, 1);
      for (const auto& c : n.kids) acc = acc * evaluate(c, k, alg);
      return acc;
    }
  }
  throw Error(ErrorCode::InvariantViolation, "unknown syntax node");
}

}  // namespace

std::vector<ExpPoly> parse_all(const std::vector<std::string>& texts, const Config& cfg) {
  std::vector<std::vector<AlgLiteral>> algs(texts.size());
  std::vector<Node> trees;
  for (std::size_t t = 0; t < texts.size(); ++t) trees.push_back(Parser(texts[t], algs[t]).parse());

  FieldPtr k = nf::NumberField::rationals();
  std::vector<std::vector<FieldElement>> values(texts.size());
  for (std::size_t t = 0; t < texts.size(); ++t) {
    for (const auto& a : algs[t]) {
      nf::Extension ext{k, nf::Embedding::identity(k), FieldElement(k)};
      try {
        ext = nf::nf_extend(k, a.minpoly, a.box, cfg);
      } catch (const Error& e) {
        if (e.error_class() != ErrorClass::Input) throw;
        throw Error(ErrorCode::BadAlgebraicConstant,
                    "bad algebraic constant at offset " + std::to_string(a.position) + ": " +
                        error_code_name(e.code()) + ": " + e.what(),
                    a.position);
      }
      if (!ext.embedding.is_identity()) {
        for (auto& vs : values) {
          for (auto& v : vs) v = ext.embedding.apply(v);
        }
      }
      k = ext.field;
      values[t].push_back(ext.adjoined);
    }
  }
  std::vector<ExpPoly> out;
  for (std::size_t t = 0; t < texts.size(); ++t) {
    // Constants adjoined later may have enlarged the field.
    std::vector<FieldElement> vals;
    for (const auto& v : values[t]) vals.push_back(nf::FieldElement::rational(k, 0) + v);
    out.push_back(evaluate(trees[t], k, vals));
  }
  return out;
}

ExpPoly parse(const std::string& text, const Config& cfg) { return parse_all({text}, cfg).front(); }

}  // namespace expzero::fe
