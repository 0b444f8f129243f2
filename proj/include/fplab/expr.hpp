#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "fplab/setalg.hpp"

namespace fplab {

/// Expression tree over named set variables.
///
/// Grammar accepted by SetExpr::parse (whitespace ignored):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary | postfix-starting-with-'(' or name)*
///   unary   := '-' unary | int '·' unary | int unary | postfix
///   postfix := primary ('^' int)*
///   primary := name | '(' expr ')'
///
/// `int unary` is the k-fold sum ("2A"), `int · unary` a dilate, `e^k` the
/// k-fold product and juxtaposition of two factors a product, so
/// "((A-A)/(A-A))^2(A-A)" parses as Q*Q*(A-A). The unicode minus "−" and
/// "·"/"." for dilation are accepted.
class SetExpr {
 public:
  enum class Kind { Var, Sum, Diff, Prod, Quot, Dilate, FoldSum, FoldProd };

  static SetExpr var(std::string name);
  static SetExpr binary(Kind kind, SetExpr lhs, SetExpr rhs);
  static SetExpr dilate(std::int64_t lambda, SetExpr child);
  static SetExpr fold(Kind kind, std::uint32_t k, SetExpr child);
  static SetExpr parse(std::string_view text);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::int64_t scalar() const { return node_->scalar; }
  const SetExpr& lhs() const { return *node_->lhs; }
  const SetExpr& rhs() const { return *node_->rhs; }

  /// Canonical fully-parenthesized rendering, parseable by parse().
  std::string str() const;

 private:
  struct Node {
    Kind kind = Kind::Var;
    std::string name;
    std::int64_t scalar = 0;  // dilation factor or fold count
    std::shared_ptr<const SetExpr> lhs;
    std::shared_ptr<const SetExpr> rhs;
  };

  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using SetEnv = std::map<std::string, FpSet, std::less<>>;

/// Set-wise evaluation; Quot skips zero denominators.
FpSet eval_expr(const SetExpr& expr, const SetEnv& env);
FpSet eval_expr(std::string_view text, const SetEnv& env);

}  // namespace fplab
