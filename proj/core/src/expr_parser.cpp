#include "chow/expr_parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>

#include "chow/derivations.hpp"
#include "chow/errors.hpp"
#include "chow/rewrite.hpp"

namespace chow {

namespace {

struct Token {
  enum class Type { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, equals, end };
  Type type;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Type::number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Token::Type::ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Token::Type type;
    switch (c) {
      case '+': type = Token::Type::plus; break;
      case '-': type = Token::Type::minus; break;
      case '*': type = Token::Type::star; break;
      case '/': type = Token::Type::slash; break;
      case '^': type = Token::Type::caret; break;
      case '(': type = Token::Type::lparen; break;
      case ')': type = Token::Type::rparen; break;
      case ',': type = Token::Type::comma; break;
      case '=': type = Token::Type::equals; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({type, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::Type::end, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprAst parse() {
    ExprAst e = expr();
    if (peek().type != Token::Type::end) unexpected(peek());
    return e;
  }

 private:
  using T = Token::Type;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] static void unexpected(const Token& t) {
    if (t.type == T::end) throw ParseError("unexpected end of input", t.position);
    if (t.type == T::ident || t.type == T::number || t.type == T::lparen) {
      throw ParseError("implicit multiplication is not allowed before '" + t.text + "'", t.position);
    }
    throw ParseError("unexpected '" + t.text + "'", t.position);
  }

  ExprAst expr() {
    ExprAst left;
    const Token& lead = peek();
    if (lead.type == T::minus || lead.type == T::plus) {
      take();
      ExprAst operand = term();
      if (lead.type == T::minus) {
        left.kind = ExprAst::Kind::negate;
        left.position = lead.position;
        left.children.push_back(std::move(operand));
      } else {
        left = std::move(operand);
      }
    } else {
      left = term();
    }
    while (peek().type == T::plus || peek().type == T::minus) {
      const Token& op = take();
      ExprAst node;
      node.kind = op.type == T::plus ? ExprAst::Kind::sum : ExprAst::Kind::difference;
      node.position = op.position;
      node.children.push_back(std::move(left));
      node.children.push_back(term());
      left = std::move(node);
    }
    return left;
  }

  ExprAst term() {
    ExprAst left = factor();
    while (peek().type == T::star) {
      const Token& op = take();
      ExprAst node;
      node.kind = ExprAst::Kind::product;
      node.position = op.position;
      node.children.push_back(std::move(left));
      node.children.push_back(factor());
      left = std::move(node);
    }
    return left;
  }

  ExprAst factor() {
    ExprAst base = atom();
    if (peek().type != T::caret) return base;
    const Token& op = take();
    const Token& exp = peek();
    if (exp.type != T::number) {
      throw ParseError("exponent must be a non-negative integer literal", exp.position);
    }
    take();
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(exp.text.data(), exp.text.data() + exp.text.size(), value);
    if (ec != std::errc() || ptr != exp.text.data() + exp.text.size()) {
      throw ParseError("exponent '" + exp.text + "' is out of range", exp.position);
    }
    if (peek().type == T::slash) {
      throw ParseError("exponent must be a non-negative integer literal", peek().position);
    }
    ExprAst node;
    node.kind = ExprAst::Kind::power;
    node.position = op.position;
    node.exponent = value;
    node.children.push_back(std::move(base));
    return node;
  }

  ExprAst atom() {
    const Token& t = peek();
    ExprAst node;
    node.position = t.position;
    switch (t.type) {
      case T::number: {
        take();
        std::string literal = t.text;
        if (peek().type == T::slash) {
          take();
          const Token& den = peek();
          if (den.type != T::number) throw ParseError("expected a positive denominator", den.position);
          take();
          if (den.text.find_first_not_of('0') == std::string::npos) {
            throw ParseError("zero denominator", den.position);
          }
          literal += "/" + den.text;
        }
        node.kind = ExprAst::Kind::rational;
        node.value = Rational::parse(literal);
        return node;
      }
      case T::ident:
        take();
        node.kind = ExprAst::Kind::identifier;
        node.name = t.text;
        return node;
      case T::lparen: {
        take();
        ExprAst inner = expr();
        if (peek().type != T::rparen) {
          if (peek().type == T::end) throw ParseError("missing ')'", peek().position);
          unexpected(peek());
        }
        take();
        return inner;
      }
      case T::slash:
        throw ParseError("'/' is only allowed inside rational literals", t.position);
      default:
        unexpected(t);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Lowering {
 public:
  Lowering(const RingModel& model, LowerMode mode) : model_(model), mode_(mode) {}

  ClassExpr run(const ExprAst& node) {
    using K = ExprAst::Kind;
    switch (node.kind) {
      case K::sum:
        return run(node.children[0]) + run(node.children[1]);
      case K::difference:
        return run(node.children[0]) - run(node.children[1]);
      case K::negate:
        return -run(node.children[0]);
      case K::product: {
        ClassExpr a = run(node.children[0]);
        ClassExpr b = run(node.children[1]);
        return mode_ == LowerMode::reduced ? reduced_mul(a, b, model_.system()) : a * b;
      }
      case K::power: {
        ClassExpr base = run(node.children[0]);
        return mode_ == LowerMode::reduced ? model_.pow(base, node.exponent) : pow(base, node.exponent);
      }
      case K::rational:
        return ClassExpr(node.value);
      case K::identifier:
        return resolve(node);
    }
    return ClassExpr();
  }

 private:
  ClassExpr resolve(const ExprAst& node) {
    if (auto id = model_.generators().find(node.name)) return ClassExpr::generator(*id);
    const std::string& name = node.name;
    const bool poincare = model_.kind() == ModelKind::poincare;
    if (poincare && name == "D") return theta(0);
    if (poincare && name == "P0") return section_class(model_, Section::zero);
    if (poincare && name == "Pinf") return section_class(model_, Section::infinity);
    if (model_.kind() == ModelKind::level && name.size() > 2 && name.starts_with("D_")) {
      int component = -1;
      const char* first = name.data() + 2;
      const char* last = name.data() + name.size();
      const auto [ptr, ec] = std::from_chars(first, last, component);
      const bool canonical = ptr == last && ec == std::errc() && (name.size() == 3 || name[2] != '0');
      if (canonical && component >= 0 && component < model_.m()) return theta(component);
    }
    throw ParseError("unknown identifier '" + name + "' for model " + model_.descriptor(), node.position);
  }

  ClassExpr theta(int component) {
    auto it = theta_.find(component);
    if (it == theta_.end()) it = theta_.emplace(component, theta_class(model_, component)).first;
    return it->second;
  }

  const RingModel& model_;
  LowerMode mode_;
  std::map<int, ClassExpr> theta_;
};

}  // namespace

ExprAst parse_ast(std::string_view src) { return Parser(src).parse(); }

ClassExpr lower(const ExprAst& ast, const RingModel& model, LowerMode mode) {
  ClassExpr out = Lowering(model, mode).run(ast);
  return mode == LowerMode::reduced ? model.normal_form(out) : out;
}

ClassExpr parse_expr(std::string_view src, const RingModel& model, LowerMode mode) {
  return lower(parse_ast(src), model, mode);
}

RingModel parse_model_descriptor(std::string_view src) {
  const auto tokens = tokenize(src);
  using T = Token::Type;
  std::size_t pos = 0;
  auto expect = [&](T type, const char* what) -> const Token& {
    const Token& t = tokens[pos];
    if (t.type != type) throw ParseError(std::string("expected ") + what + " in model descriptor", t.position);
    ++pos;
    return t;
  };

  const Token& kind = expect(T::ident, "model kind");
  if (kind.text != "base" && kind.text != "poincare" && kind.text != "level") {
    throw ParseError("unknown model kind '" + kind.text + "'", kind.position);
  }
  expect(T::lparen, "'('");
  std::map<std::string, int> params;
  while (true) {
    const Token& key = expect(T::ident, "parameter name");
    if (key.text != "g" && key.text != "n" && key.text != "m") {
      throw ParseError("unknown parameter '" + key.text + "'", key.position);
    }
    expect(T::equals, "'='");
    bool negative = false;
    if (tokens[pos].type == T::minus) {
      negative = true;
      ++pos;
    }
    const Token& value = expect(T::number, "integer value");
    int v = 0;
    const auto [ptr, ec] = std::from_chars(value.text.data(), value.text.data() + value.text.size(), v);
    if (ec != std::errc()) throw ParseError("parameter value out of range", value.position);
    if (!params.emplace(key.text, negative ? -v : v).second) {
      throw ParseError("duplicate parameter '" + key.text + "'", key.position);
    }
    if (tokens[pos].type == T::comma) {
      ++pos;
      continue;
    }
    expect(T::rparen, "')' or ','");
    break;
  }
  expect(T::end, "end of descriptor");

  const bool level = kind.text == "level";
  if (!params.count("g") || !params.count("n") || (level && !params.count("m"))) {
    throw ParseError(level ? "level models need g, n and m" : "models need g and n", kind.position);
  }
  if (!level && params.count("m")) throw ParseError("parameter m is only valid for level models", kind.position);

  if (kind.text == "base") return make_base_ring(params["g"], params["n"]);
  if (kind.text == "poincare") return make_poincare_ring(params["g"], params["n"]);
  return make_level_ring(params["g"], params["n"], params["m"]);
}

}  // namespace chow
