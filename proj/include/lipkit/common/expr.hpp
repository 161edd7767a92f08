#pragma once
#include <memory>
#include <stdexcept>
#include <string>

#include "lipkit/common/point.hpp"

namespace lipkit {

struct ExprError : std::runtime_error {
  int column;  // 1-based offset into the expression text
  ExprError(const std::string& msg, int col)
      : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

// Arithmetic expressions over coordinates: + - * /, unary minus, parentheses,
// sin cos log abs pow, constants pi and e. Variables x,y,z (aliases x1,x2,x3)
// map to coordinates 0,1,2. Evaluation is pure and thread-safe.
class Expr {
 public:
  static Expr parse(const std::string& text);  // throws ExprError
  double eval(const Point& p) const;
  const std::string& text() const { return text_; }

  Expr();
  Expr(const Expr&);
  Expr& operator=(const Expr&);
  Expr(Expr&&) noexcept;
  Expr& operator=(Expr&&) noexcept;
  ~Expr();

  struct Node;  // opaque

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace lipkit
