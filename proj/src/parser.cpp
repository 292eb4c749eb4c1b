#include "prodint/parser.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace prodint {

namespace {

enum class tok_kind {
  ident,
  number,
  assign, // :=
  plus,
  minus,
  bang,
  lt,
  le,
  gt,
  ge,
  eq,
  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  comma,
  semicolon,
  dot,
  end
};

struct token {
  tok_kind kind;
  std::string text;
  std::int64_t number = 0;
  int line = 1;
  int col = 1;
};

const std::set<std::string> kKeywords = {"input", "in",  "if",  "else",
                                         "while", "for", "new", "assert",
                                         "true",  "false"};

class lexer {
public:
  explicit lexer(const std::string &text) : m_text(text) {}

  std::vector<token> run() {
    std::vector<token> out;
    while (true) {
      skip_ws_and_comments();
      token t = next();
      out.push_back(t);
      if (t.kind == tok_kind::end)
        break;
    }
    return out;
  }

private:
  void skip_ws_and_comments() {
    while (m_pos < m_text.size()) {
      const char c = m_text[m_pos];
      if (c == '\n') {
        ++m_line;
        m_col = 1;
        ++m_pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++m_col;
        ++m_pos;
      } else if (c == '/' && m_pos + 1 < m_text.size() &&
                 m_text[m_pos + 1] == '/') {
        while (m_pos < m_text.size() && m_text[m_pos] != '\n')
          ++m_pos;
      } else {
        break;
      }
    }
  }

  token next() {
    if (m_pos >= m_text.size())
      return make(tok_kind::end, "");
    const char c = m_text[m_pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return ident();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return number();
    return symbol();
  }

  token ident() {
    token t = make(tok_kind::ident, "");
    std::size_t start = m_pos;
    while (m_pos < m_text.size() &&
           (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) ||
            m_text[m_pos] == '_'))
      advance();
    t.text = m_text.substr(start, m_pos - start);
    return t;
  }

  token number() {
    token t = make(tok_kind::number, "");
    std::size_t start = m_pos;
    while (m_pos < m_text.size() &&
           std::isdigit(static_cast<unsigned char>(m_text[m_pos])))
      advance();
    t.text = m_text.substr(start, m_pos - start);
    t.number = std::stoll(t.text);
    return t;
  }

  token symbol() {
    const char c = m_text[m_pos];
    auto two = [&](char second) {
      return m_pos + 1 < m_text.size() && m_text[m_pos + 1] == second;
    };
    switch (c) {
    case ':':
      if (two('=')) {
        token t = make(tok_kind::assign, ":=");
        advance();
        advance();
        return t;
      }
      break;
    case '<':
      if (two('=')) {
        token t = make(tok_kind::le, "<=");
        advance();
        advance();
        return t;
      } else {
        token t = make(tok_kind::lt, "<");
        advance();
        return t;
      }
    case '>':
      if (two('=')) {
        token t = make(tok_kind::ge, ">=");
        advance();
        advance();
        return t;
      } else {
        token t = make(tok_kind::gt, ">");
        advance();
        return t;
      }
    case '=': {
      token t = make(tok_kind::eq, "=");
      advance();
      return t;
    }
    case '+': {
      token t = make(tok_kind::plus, "+");
      advance();
      return t;
    }
    case '-': {
      token t = make(tok_kind::minus, "-");
      advance();
      return t;
    }
    case '!': {
      token t = make(tok_kind::bang, "!");
      advance();
      return t;
    }
    case '(': {
      token t = make(tok_kind::lparen, "(");
      advance();
      return t;
    }
    case ')': {
      token t = make(tok_kind::rparen, ")");
      advance();
      return t;
    }
    case '[': {
      token t = make(tok_kind::lbracket, "[");
      advance();
      return t;
    }
    case ']': {
      token t = make(tok_kind::rbracket, "]");
      advance();
      return t;
    }
    case '{': {
      token t = make(tok_kind::lbrace, "{");
      advance();
      return t;
    }
    case '}': {
      token t = make(tok_kind::rbrace, "}");
      advance();
      return t;
    }
    case ',': {
      token t = make(tok_kind::comma, ",");
      advance();
      return t;
    }
    case ';': {
      token t = make(tok_kind::semicolon, ";");
      advance();
      return t;
    }
    case '.': {
      token t = make(tok_kind::dot, ".");
      advance();
      return t;
    }
    default:
      break;
    }
    throw parse_error(m_line, m_col,
                      std::string("unexpected character '") + c + "'");
  }

  token make(tok_kind k, std::string text) {
    token t;
    t.kind = k;
    t.text = std::move(text);
    t.line = m_line;
    t.col = m_col;
    return t;
  }

  void advance() {
    ++m_pos;
    ++m_col;
  }

  const std::string &m_text;
  std::size_t m_pos = 0;
  int m_line = 1;
  int m_col = 1;
};

class parser {
public:
  explicit parser(std::vector<token> toks) : m_toks(std::move(toks)) {}

  program run() {
    program p;
    while (at_keyword("input"))
      p.decls.push_back(parse_decl());
    while (!at(tok_kind::end))
      p.body.push_back(parse_stmt());
    return p;
  }

private:
  const token &peek(int ahead = 0) const {
    const std::size_t i = m_i + static_cast<std::size_t>(ahead);
    return i < m_toks.size() ? m_toks[i] : m_toks.back();
  }
  bool at(tok_kind k) const { return peek().kind == k; }
  bool at_keyword(const char *kw) const {
    return at(tok_kind::ident) && peek().text == kw;
  }
  token eat() { return m_toks[m_i < m_toks.size() - 1 ? m_i++ : m_i]; }
  token expect(tok_kind k, const char *what) {
    if (!at(k))
      fail(std::string("expected ") + what);
    return eat();
  }
  [[noreturn]] void fail(const std::string &msg) const {
    const token &t = peek();
    const std::string got =
        t.kind == tok_kind::end ? "end of input" : "'" + t.text + "'";
    throw parse_error(t.line, t.col, msg + ", got " + got);
  }
  source_pos pos() const { return {peek().line, peek().col}; }

  std::string expect_ident() {
    if (!at(tok_kind::ident) || kKeywords.count(peek().text))
      fail("expected identifier");
    return eat().text;
  }

  std::int64_t expect_int() {
    bool negative = false;
    if (at(tok_kind::minus)) {
      eat();
      negative = true;
    }
    if (!at(tok_kind::number))
      fail("expected integer");
    const std::int64_t v = eat().number;
    return negative ? -v : v;
  }

  input_decl parse_decl() {
    input_decl d;
    d.pos = pos();
    eat(); // input
    d.name = expect_ident();
    if (!at_keyword("in"))
      fail("expected 'in'");
    eat();
    expect(tok_kind::lbracket, "'['");
    d.lo = expect_int();
    expect(tok_kind::comma, "','");
    d.hi = expect_int();
    expect(tok_kind::rbracket, "']'");
    expect(tok_kind::semicolon, "';'");
    if (d.lo > d.hi)
      throw parse_error(d.pos.line, d.pos.col,
                        "empty input range for " + d.name);
    return d;
  }

  expr parse_primary() {
    const source_pos p = pos();
    if (at(tok_kind::minus) && peek(1).kind == tok_kind::number) {
      eat();
      return expr::constant(-eat().number, p);
    }
    if (at(tok_kind::number))
      return expr::constant(eat().number, p);
    if (at(tok_kind::ident) && !kKeywords.count(peek().text)) {
      std::string name = eat().text;
      if (at(tok_kind::dot)) {
        eat();
        const token field = expect(tok_kind::ident, "'length'");
        if (field.text != "length")
          throw parse_error(field.line, field.col,
                            "expected 'length', got '" + field.text + "'");
        return expr::variable(length_var(name), p);
      }
      return expr::variable(std::move(name), p);
    }
    fail("expected expression");
  }

  expr parse_expr() {
    expr e = parse_primary();
    while (at(tok_kind::plus) || at(tok_kind::minus)) {
      const source_pos p = pos();
      const bool add = eat().kind == tok_kind::plus;
      expr r = parse_primary();
      e = add ? expr::add(std::move(e), std::move(r), p)
              : expr::sub(std::move(e), std::move(r), p);
    }
    return e;
  }

  cond parse_cond() {
    const source_pos p = pos();
    if (at(tok_kind::bang)) {
      eat();
      return parse_cond().negate();
    }
    expr lhs = parse_expr();
    cond::rel_op op;
    switch (peek().kind) {
    case tok_kind::lt:
      op = cond::rel_op::lt;
      break;
    case tok_kind::le:
      op = cond::rel_op::le;
      break;
    case tok_kind::gt:
      op = cond::rel_op::gt;
      break;
    case tok_kind::ge:
      op = cond::rel_op::ge;
      break;
    case tok_kind::eq:
      op = cond::rel_op::eq;
      break;
    default:
      if (lhs.is_variable())
        return cond::bool_var(lhs.var(), false, p);
      fail("expected comparison operator");
    }
    eat();
    expr rhs = parse_expr();
    return cond::relation(op, std::move(lhs), std::move(rhs), p);
  }

  block parse_block() {
    block b;
    if (at(tok_kind::lbrace)) {
      eat();
      while (!at(tok_kind::rbrace))
        b.push_back(parse_stmt());
      eat();
    } else {
      b.push_back(parse_stmt());
    }
    return b;
  }

  stmt parse_assign_like() {
    const source_pos p = pos();
    std::string name = expect_ident();
    if (at(tok_kind::lbracket)) {
      eat();
      expr index = parse_expr();
      expect(tok_kind::rbracket, "']'");
      expect(tok_kind::assign, "':='");
      expr value = parse_expr();
      expect(tok_kind::semicolon, "';'");
      return stmt::array_store(std::move(name), std::move(index),
                               std::move(value), p);
    }
    expect(tok_kind::assign, "':='");
    stmt s = parse_rhs(std::move(name), p);
    expect(tok_kind::semicolon, "';'");
    return s;
  }

  stmt parse_rhs(std::string target, source_pos p) {
    if (at_keyword("new")) {
      eat();
      const token t = expect(tok_kind::ident, "'Int'");
      if (t.text != "Int")
        throw parse_error(t.line, t.col, "expected 'Int' after 'new'");
      expect(tok_kind::lbracket, "'['");
      expr len = parse_expr();
      expect(tok_kind::rbracket, "']'");
      return stmt::array_alloc(std::move(target), std::move(len), p);
    }
    if (at_keyword("true") || at_keyword("false")) {
      const bool v = eat().text == "true";
      return stmt::bool_assign(std::move(target), cond::truth(v, p), p);
    }
    if (at(tok_kind::lparen)) {
      eat();
      cond c = parse_cond();
      expect(tok_kind::rparen, "')'");
      return stmt::bool_assign(std::move(target), std::move(c), p);
    }
    return stmt::assign(std::move(target), parse_expr(), p);
  }

  stmt parse_stmt() {
    const source_pos p = pos();
    if (at_keyword("if")) {
      eat();
      expect(tok_kind::lparen, "'('");
      cond c = parse_cond();
      expect(tok_kind::rparen, "')'");
      block then_b = parse_block();
      block else_b;
      if (at_keyword("else")) {
        eat();
        else_b = parse_block();
      }
      return stmt::if_else(std::move(c), std::move(then_b), std::move(else_b),
                           p);
    }
    if (at_keyword("while")) {
      eat();
      expect(tok_kind::lparen, "'('");
      cond c = parse_cond();
      expect(tok_kind::rparen, "')'");
      block body = parse_block();
      return stmt::while_loop(std::move(c), std::move(body), p);
    }
    if (at_keyword("for")) {
      eat();
      expect(tok_kind::lparen, "'('");
      const source_pos ip = pos();
      std::string iv = expect_ident();
      expect(tok_kind::assign, "':='");
      stmt init = stmt::assign(iv, parse_expr(), ip);
      expect(tok_kind::semicolon, "';'");
      cond c = parse_cond();
      expect(tok_kind::semicolon, "';'");
      const source_pos sp = pos();
      std::string sv = expect_ident();
      expect(tok_kind::assign, "':='");
      stmt step = stmt::assign(sv, parse_expr(), sp);
      expect(tok_kind::rparen, "')'");
      block body = parse_block();
      return stmt::for_loop(std::move(init), std::move(c), std::move(step),
                            std::move(body), p);
    }
    if (at_keyword("assert")) {
      eat();
      expect(tok_kind::lparen, "'('");
      cond c = parse_cond();
      expect(tok_kind::rparen, "')'");
      expect(tok_kind::semicolon, "';'");
      return stmt::assert_check(std::move(c), p);
    }
    if (at(tok_kind::ident) && !kKeywords.count(peek().text))
      return parse_assign_like();
    fail("expected statement");
  }

  std::vector<token> m_toks;
  std::size_t m_i = 0;
};

// ----------------------------------------------------- well-formedness

struct check_ctx {
  std::set<std::string> defined; // scalars and length vars, textual order
  std::set<std::string> arrays;
};

void check_expr_reads(const expr &e, const check_ctx &ctx) {
  std::vector<std::string> vs;
  e.collect_vars(vs);
  for (const std::string &v : vs) {
    if (!ctx.defined.count(v))
      throw parse_error(e.pos().line, e.pos().col,
                        "variable '" + v + "' read before definition");
    if (ctx.arrays.count(v))
      throw parse_error(e.pos().line, e.pos().col,
                        "array '" + v + "' used as a scalar");
  }
}

void check_cond_reads(const cond &c, const check_ctx &ctx) {
  std::vector<std::string> vs;
  c.collect_vars(vs);
  for (const std::string &v : vs) {
    if (!ctx.defined.count(v))
      throw parse_error(c.pos().line, c.pos().col,
                        "variable '" + v + "' read before definition");
    if (ctx.arrays.count(v))
      throw parse_error(c.pos().line, c.pos().col,
                        "array '" + v + "' used as a scalar");
  }
}

void check_block(const block &b, check_ctx &ctx);

void check_stmt(const stmt &s, check_ctx &ctx) {
  switch (s.k) {
  case stmt::kind::assign:
    check_expr_reads(s.e0(), ctx);
    if (ctx.arrays.count(s.target))
      throw parse_error(s.pos.line, s.pos.col,
                        "array '" + s.target + "' reassigned as a scalar");
    ctx.defined.insert(s.target);
    break;
  case stmt::kind::bool_assign:
    check_cond_reads(s.c0(), ctx);
    if (ctx.arrays.count(s.target))
      throw parse_error(s.pos.line, s.pos.col,
                        "array '" + s.target + "' reassigned as a Boolean");
    ctx.defined.insert(s.target);
    break;
  case stmt::kind::array_alloc:
    check_expr_reads(s.e0(), ctx);
    if (ctx.defined.count(s.target) && !ctx.arrays.count(s.target))
      throw parse_error(s.pos.line, s.pos.col,
                        "scalar '" + s.target + "' reallocated as an array");
    ctx.arrays.insert(s.target);
    ctx.defined.insert(length_var(s.target));
    break;
  case stmt::kind::array_store:
    if (!ctx.arrays.count(s.target))
      throw parse_error(s.pos.line, s.pos.col,
                        "store into unallocated array '" + s.target + "'");
    check_expr_reads(s.e0(), ctx);
    check_expr_reads(s.e1(), ctx);
    break;
  case stmt::kind::if_else:
    check_cond_reads(s.c0(), ctx);
    check_block(s.then_block, ctx);
    check_block(s.else_block, ctx);
    break;
  case stmt::kind::while_loop:
    check_cond_reads(s.c0(), ctx);
    check_block(s.then_block, ctx);
    break;
  case stmt::kind::for_loop: {
    check_stmt(s.aux.at(0), ctx);
    check_cond_reads(s.c0(), ctx);
    check_block(s.then_block, ctx);
    check_stmt(s.aux.at(1), ctx);
    break;
  }
  case stmt::kind::assert_check:
    check_cond_reads(s.c0(), ctx);
    break;
  }
}

void check_block(const block &b, check_ctx &ctx) {
  for (const stmt &s : b)
    check_stmt(s, ctx);
}

block desugar_block(const block &b) {
  block out;
  for (const stmt &s : b) {
    switch (s.k) {
    case stmt::kind::for_loop: {
      out.push_back(s.aux.at(0)); // init
      block body = desugar_block(s.then_block);
      body.push_back(s.aux.at(1)); // step
      out.push_back(stmt::while_loop(s.c0(), std::move(body), s.pos));
      break;
    }
    case stmt::kind::if_else: {
      stmt t = s;
      t.then_block = desugar_block(s.then_block);
      t.else_block = desugar_block(s.else_block);
      out.push_back(std::move(t));
      break;
    }
    case stmt::kind::while_loop: {
      stmt t = s;
      t.then_block = desugar_block(s.then_block);
      out.push_back(std::move(t));
      break;
    }
    default:
      out.push_back(s);
    }
  }
  return out;
}

} // namespace

program parse(const std::string &text) {
  lexer lex(text);
  parser ps(lex.run());
  program p = ps.run();

  check_ctx ctx;
  for (const input_decl &d : p.decls) {
    if (ctx.defined.count(d.name))
      throw parse_error(d.pos.line, d.pos.col,
                        "duplicate input '" + d.name + "'");
    ctx.defined.insert(d.name);
  }
  check_block(p.body, ctx);
  return p;
}

program desugar(const program &p) {
  program out;
  out.decls = p.decls;
  out.body = desugar_block(p.body);
  return out;
}

} // namespace prodint
