#include "fplab/expr.hpp"

#include <cctype>
#include <optional>

namespace fplab {

SetExpr SetExpr::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::binary(Kind kind, SetExpr lhs, SetExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::make_shared<const SetExpr>(std::move(lhs));
  n->rhs = std::make_shared<const SetExpr>(std::move(rhs));
  return SetExpr(std::move(n));
}

SetExpr SetExpr::dilate(std::int64_t lambda, SetExpr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Dilate;
  n->scalar = lambda;
  n->lhs = std::make_shared<const SetExpr>(std::move(child));
  return SetExpr(std::move(n));
}

SetExpr SetExpr::fold(Kind kind, std::uint32_t k, SetExpr child) {
  if (kind != Kind::FoldSum && kind != Kind::FoldProd) throw Error(ErrorCode::BadParams, "fold kind");
  if (k == 0) throw Error(ErrorCode::BadParams, "fold count must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->scalar = k;
  n->lhs = std::make_shared<const SetExpr>(std::move(child));
  return SetExpr(std::move(n));
}

std::string SetExpr::str() const {
  switch (kind()) {
    case Kind::Var: return name();
    case Kind::Sum: return "(" + lhs().str() + "+" + rhs().str() + ")";
    case Kind::Diff: return "(" + lhs().str() + "-" + rhs().str() + ")";
    case Kind::Prod: return "(" + lhs().str() + "*" + rhs().str() + ")";
    case Kind::Quot: return "(" + lhs().str() + "/" + rhs().str() + ")";
    case Kind::Dilate: return "(" + std::to_string(scalar()) + "·" + lhs().str() + ")";
    case Kind::FoldSum: return "(" + std::to_string(scalar()) + lhs().str() + ")";
    case Kind::FoldProd: return "(" + lhs().str() + "^" + std::to_string(scalar()) + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  SetExpr run() {
    SetExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool eat_minus() { return eat("-") || eat("\xE2\x88\x92"); }
  bool eat_dot() { return eat("\xC2\xB7") || eat("."); }

  bool at_name_start() {
    skip();
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 12) fail("integer too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  SetExpr expr() {
    SetExpr e = term();
    while (true) {
      if (eat("+")) {
        e = SetExpr::binary(SetExpr::Kind::Sum, std::move(e), term());
      } else if (eat_minus()) {
        e = SetExpr::binary(SetExpr::Kind::Diff, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  SetExpr term() {
    SetExpr e = unary();
    while (true) {
      if (eat("*")) {
        e = SetExpr::binary(SetExpr::Kind::Prod, std::move(e), unary());
      } else if (eat("/")) {
        e = SetExpr::binary(SetExpr::Kind::Quot, std::move(e), unary());
      } else if (at('(') || at_name_start()) {
        e = SetExpr::binary(SetExpr::Kind::Prod, std::move(e), postfix());
      } else {
        return e;
      }
    }
  }

  SetExpr unary() {
    if (eat_minus()) return SetExpr::dilate(-1, unary());
    if (at_digit()) {
      const std::int64_t n = integer();
      if (eat_dot()) return SetExpr::dilate(n, unary());
      if (n < 1) fail("fold count must be >= 1");
      return SetExpr::fold(SetExpr::Kind::FoldSum, static_cast<std::uint32_t>(n), unary());
    }
    return postfix();
  }

  SetExpr postfix() {
    SetExpr e = primary();
    while (eat("^")) {
      const std::int64_t k = integer();
      if (k < 1) fail("power must be >= 1");
      e = SetExpr::fold(SetExpr::Kind::FoldProd, static_cast<std::uint32_t>(k), std::move(e));
    }
    return e;
  }

  SetExpr primary() {
    if (eat("(")) {
      SetExpr e = expr();
      if (!eat(")")) fail("expected ')'");
      return e;
    }
    if (at_name_start()) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) {
        ++pos_;
      }
      return SetExpr::var(std::string(s_.substr(start, pos_ - start)));
    }
    fail("expected set name or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SetExpr SetExpr::parse(std::string_view text) { return Parser(text).run(); }

FpSet eval_expr(const SetExpr& e, const SetEnv& env) {
  using K = SetExpr::Kind;
  switch (e.kind()) {
    case K::Var: {
      auto it = env.find(e.name());
      if (it == env.end()) throw Error(ErrorCode::UnboundVariable, e.name());
      return it->second;
    }
    case K::Sum: return sumset(eval_expr(e.lhs(), env), eval_expr(e.rhs(), env));
    case K::Diff: return difference_set(eval_expr(e.lhs(), env), eval_expr(e.rhs(), env));
    case K::Prod: return product_set(eval_expr(e.lhs(), env), eval_expr(e.rhs(), env));
    case K::Quot: return quotient_set(eval_expr(e.lhs(), env), eval_expr(e.rhs(), env));
    case K::Dilate: return dilate(eval_expr(e.lhs(), env), e.scalar());
    case K::FoldSum: return fold_sum(eval_expr(e.lhs(), env), static_cast<std::uint32_t>(e.scalar()));
    case K::FoldProd: return fold_product(eval_expr(e.lhs(), env), static_cast<std::uint32_t>(e.scalar()));
  }
  throw Error(ErrorCode::BadParams, "unknown expression node");
}

FpSet eval_expr(std::string_view text, const SetEnv& env) { return eval_expr(SetExpr::parse(text), env); }

}  // namespace fplab
