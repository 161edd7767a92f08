#include "lipkit/common/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace lipkit {

namespace {
enum class Op { add, sub, mul, div, neg, sin, cos, log, abs, pow, num, var };
}

struct Expr::Node {
  Op op;
  double value = 0.0;  // for num
  int axis = 0;        // for var
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_num(double v) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::num;
  n->value = v;
  return n;
}

NodePtr make_var(int axis) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::var;
  n->axis = axis;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ExprError(msg, int(pos_) + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (eat('+'))
        e = make(Op::add, e, term());
      else if (eat('-'))
        e = make(Op::sub, e, term());
      else
        return e;
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    for (;;) {
      if (eat('*'))
        e = make(Op::mul, e, unary());
      else if (eat('/'))
        e = make(Op::div, e, unary());
      else
        return e;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Op::neg, unary());
    if (eat('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("bad number");
    pos_ += size_t(end - begin);
    return make_num(v);
  }

  NodePtr ident() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "pi") return make_num(M_PI);
    if (name == "e") return make_num(M_E);
    if (name == "x" || name == "x1") return make_var(0);
    if (name == "y" || name == "x2") return make_var(1);
    if (name == "z" || name == "x3") return make_var(2);
    Op op;
    if (name == "sin")
      op = Op::sin;
    else if (name == "cos")
      op = Op::cos;
    else if (name == "log")
      op = Op::log;
    else if (name == "abs")
      op = Op::abs;
    else if (name == "pow")
      op = Op::pow;
    else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    if (!eat('(')) fail("expected '(' after function name");
    NodePtr a = expr();
    NodePtr b;
    if (op == Op::pow) {
      if (!eat(',')) fail("pow takes two arguments");
      b = expr();
    }
    if (!eat(')')) fail("expected ')'");
    return make(op, a, b);
  }
};

double eval_node(const Expr::Node* n, const Point& p) {
  switch (n->op) {
    case Op::num: return n->value;
    case Op::var: return p[n->axis];
    case Op::add: return eval_node(n->a.get(), p) + eval_node(n->b.get(), p);
    case Op::sub: return eval_node(n->a.get(), p) - eval_node(n->b.get(), p);
    case Op::mul: return eval_node(n->a.get(), p) * eval_node(n->b.get(), p);
    case Op::div: return eval_node(n->a.get(), p) / eval_node(n->b.get(), p);
    case Op::neg: return -eval_node(n->a.get(), p);
    case Op::sin: return std::sin(eval_node(n->a.get(), p));
    case Op::cos: return std::cos(eval_node(n->a.get(), p));
    case Op::log: return std::log(eval_node(n->a.get(), p));
    case Op::abs: return std::fabs(eval_node(n->a.get(), p));
    case Op::pow: return std::pow(eval_node(n->a.get(), p), eval_node(n->b.get(), p));
  }
  return 0.0;
}

}  // namespace

Expr::Expr() = default;
Expr::Expr(const Expr&) = default;
Expr& Expr::operator=(const Expr&) = default;
Expr::Expr(Expr&&) noexcept = default;
Expr& Expr::operator=(Expr&&) noexcept = default;
Expr::~Expr() = default;

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.root_ = Parser(text).run();
  e.text_ = text;
  return e;
}

double Expr::eval(const Point& p) const {
  if (!root_) throw std::logic_error("evaluating empty expression");
  return eval_node(root_.get(), p);
}

}  // namespace lipkit
