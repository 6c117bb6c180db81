#include "ohno/expression.hpp"

#include <cctype>
#include <climits>

#include "ohno/ohno.hpp"

namespace ohno::expr {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse_all() {
    skip_space();
    Expression e = parse_expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;

  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0'; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_.line, pos_.column); }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      fail(at_end() ? "expected '" + std::string(1, c) + "' but input ended"
                    : "expected '" + std::string(1, c) + "' but found '" + std::string(1, peek()) + "'");
    }
    advance();
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  int parse_int() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(at_end() ? "expected an integer but input ended" : "expected an integer");
    }
    const Position start = pos_;
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > INT_MAX) throw ParseError("integer literal out of range", start.line, start.column);
      advance();
    }
    return static_cast<int>(value);
  }

  bool keyword(std::string_view word) {
    skip_space();
    if (text_.substr(i_, word.size()) != word) return false;
    std::size_t j = i_ + word.size();
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    if (j >= text_.size() || text_[j] != '(') return false;
    for (std::size_t k = 0; k < word.size(); ++k) advance();
    return true;
  }

  static Expression make(Node::Kind kind, Position pos) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->pos = pos;
    return n;
  }

  Expression parse_expr() {
    skip_space();
    const Position start = pos_;
    if (peek() == '0' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      // A bare 0 denotes the zero combination (the serialized form of an
      // empty combination); 0 as a coefficient is handled by parse_term.
      std::size_t j = i_ + 1;
      while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
      if (j >= text_.size() || text_[j] == ')' || text_[j] == ',') {
        advance();
        return make(Node::Kind::Zero, start);
      }
    }
    auto sum = make(Node::Kind::Sum, start);
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    sum->signs.push_back(sign);
    sum->children.push_back(parse_term());
    for (;;) {
      skip_space();
      if (accept('+')) {
        sum->signs.push_back(1);
      } else if (accept('-')) {
        sum->signs.push_back(-1);
      } else {
        break;
      }
      sum->children.push_back(parse_term());
    }
    if (sum->children.size() == 1 && sum->signs[0] == 1) return std::move(sum->children[0]);
    return sum;
  }

  Expression parse_term() {
    skip_space();
    const Position start = pos_;
    Expression scale;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int num = parse_int();
      int den = 1;
      if (accept('/')) {
        den = parse_int();
        if (den == 0) fail("zero denominator");
      }
      expect('*');
      scale = make(Node::Kind::Scale, start);
      scale->scale = Coefficient(num, den);
      scale->scale.canonicalize();
    }
    Expression chain = parse_factor();
    skip_space();
    if (peek() == '#') {
      auto sha = make(Node::Kind::Sha, chain->pos);
      sha->children.push_back(std::move(chain));
      while (accept('#')) sha->children.push_back(parse_factor());
      chain = std::move(sha);
    }
    if (scale) {
      scale->children.push_back(std::move(chain));
      return scale;
    }
    return chain;
  }

  bool literal_ahead() const {
    // At '('. Literal when "()" or "(" int followed by "," or ")".
    std::size_t j = i_ + 1;
    const auto space = [&] {
      while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    };
    space();
    if (j < text_.size() && text_[j] == ')') return true;
    if (j >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[j]))) return false;
    while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
    space();
    return j < text_.size() && (text_[j] == ',' || text_[j] == ')');
  }

  Expression parse_factor() {
    skip_space();
    const Position start = pos_;
    if (keyword("rep")) {
      auto n = make(Node::Kind::Rep, start);
      expect('(');
      n->ints.push_back(parse_int());
      expect(',');
      n->ints.push_back(parse_int());
      expect(')');
      return n;
    }
    if (keyword("dual")) {
      auto n = make(Node::Kind::Dual, start);
      expect('(');
      n->children.push_back(parse_expr());
      expect(')');
      return n;
    }
    for (auto [word, kind] : {std::pair{std::string_view("hast"), Node::Kind::Hast},
                              std::pair{std::string_view("ohno"), Node::Kind::Ohno}}) {
      if (keyword(word)) {
        auto n = make(kind, start);
        expect('(');
        n->ints.push_back(parse_int());
        expect(',');
        n->children.push_back(parse_expr());
        expect(')');
        return n;
      }
    }
    if (peek() != '(') {
      if (at_end()) fail("expected an index, rep(, dual(, hast(, ohno( or '(' but input ended");
      fail("expected an index, rep(, dual(, hast(, ohno( or '('");
    }
    if (literal_ahead()) {
      auto n = make(Node::Kind::Literal, start);
      advance();
      if (accept(')')) return n;
      n->ints.push_back(parse_int());
      while (accept(',')) n->ints.push_back(parse_int());
      expect(')');
      return n;
    }
    advance();
    Expression inner = parse_expr();
    expect(')');
    return inner;
  }
};

std::string where(const Position& p) {
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": ";
}

IndexCombination expand_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Zero:
      return {};
    case Node::Kind::Literal:
      for (int v : n.ints) {
        if (v < 1) throw DomainError("index entries must be positive, got " + std::to_string(v));
      }
      return IndexCombination(Index(n.ints));
    case Node::Kind::Rep:
      if (n.ints[0] < 1) throw DomainError("rep needs a positive entry, got " + std::to_string(n.ints[0]));
      return IndexCombination(repeat(n.ints[0], n.ints[1]));
    case Node::Kind::Dual:
      return dual_linear(expand(*n.children[0]));
    case Node::Kind::Hast:
      return hast(n.ints[0], expand(*n.children[0]));
    case Node::Kind::Ohno:
      return ohno_m_symbolic(expand(*n.children[0]), n.ints[0]);
    case Node::Kind::Sha: {
      IndexCombination acc = expand(*n.children[0]);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = sha(acc, expand(*n.children[i]));
      return acc;
    }
    case Node::Kind::Sum: {
      IndexCombination acc;
      for (std::size_t i = 0; i < n.children.size(); ++i) acc.add(expand(*n.children[i]), n.signs[i]);
      return acc;
    }
    case Node::Kind::Scale:
      return n.scale * expand(*n.children[0]);
  }
  return {};
}

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

IndexCombination expand(const Node& node) {
  try {
    return expand_node(node);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    throw DomainError(where(node.pos) + msg);
  }
}

IndexCombination expand(std::string_view text) { return expand(*parse(text)); }

std::string_view grammar_help() {
  return "Expression grammar:\n"
         "  expr    := [\"+\"|\"-\"] term ((\"+\"|\"-\") term)*  |  \"0\"\n"
         "  term    := [rational \"*\"] factor (\"#\" factor)*\n"
         "  factor  := literal | rep(a,l) | dual(expr) | hast(k,expr) | ohno(m,expr) | \"(\" expr \")\"\n"
         "  literal := \"(\" int (\",\" int)* \")\"  |  \"()\"\n"
         "  rational:= int [\"/\" int]\n"
         "  \"#\" is the shuffle product. \"(\" starts a literal when an integer directly\n"
         "  followed by \",\" or \")\" comes next (or for \"()\"), and groups otherwise.\n"
         "  Example: 2*(1,2) # rep(2,2) - dual((3))\n";
}

}  // namespace ohno::expr
