#include "kucheck/formula.hpp"

#include <cctype>

#include "kucheck/model.hpp"

namespace kuc::formula {

namespace {

enum class Tok {
  Ident,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Tilde,
  Amp,
  Pipe,
  Backslash,
  Eq,
  Le,
  Lt,
  End,
};

struct Token {
  Tok type;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      // K' and U' are single tokens.
      if ((word == "K" || word == "U") && i < text.size() && text[i] == '\'') {
        word += '\'';
        advance(1);
      }
      out.push_back({Tok::Ident, std::move(word), tl, tc});
      continue;
    }
    switch (c) {
      case '{': out.push_back({Tok::LBrace, "{", tl, tc}); break;
      case '}': out.push_back({Tok::RBrace, "}", tl, tc}); break;
      case '(': out.push_back({Tok::LParen, "(", tl, tc}); break;
      case ')': out.push_back({Tok::RParen, ")", tl, tc}); break;
      case ',': out.push_back({Tok::Comma, ",", tl, tc}); break;
      case '~': out.push_back({Tok::Tilde, "~", tl, tc}); break;
      case '&': out.push_back({Tok::Amp, "&", tl, tc}); break;
      case '|': out.push_back({Tok::Pipe, "|", tl, tc}); break;
      case '\\': out.push_back({Tok::Backslash, "\\", tl, tc}); break;
      case '=': out.push_back({Tok::Eq, "=", tl, tc}); break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back({Tok::Le, "<=", tl, tc});
          advance(1);
        } else {
          out.push_back({Tok::Lt, "<", tl, tc});
        }
        break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const char* app_name(AppOp op) {
  switch (op) {
    case AppOp::K: return "K";
    case AppOp::KPrime: return "K'";
    case AppOp::U: return "U";
    case AppOp::UPrime: return "U'";
    case AppOp::A: return "A";
    case AppOp::UIter: return "Uiter";
  }
  return "?";
}

std::optional<AppOp> app_from_word(std::string_view w) {
  if (w == "K") return AppOp::K;
  if (w == "K'") return AppOp::KPrime;
  if (w == "U") return AppOp::U;
  if (w == "U'") return AppOp::UPrime;
  if (w == "A") return AppOp::A;
  if (w == "Uiter") return AppOp::UIter;
  return std::nullopt;
}

AstPtr mk(Ast ast) { return std::make_shared<const Ast>(std::move(ast)); }

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    std::string msg = what;
    if (t.type == Tok::End)
      msg += ", unexpected end of input";
    else
      msg += ", got '" + t.text + "'";
    throw ParseError(t.line, t.col, msg);
  }

  void expect(Tok type, const char* what) {
    if (peek().type != type) fail(peek(), std::string("expected ") + what);
    take();
  }

  AstPtr parse_pred() {
    AstPtr lhs = parse_expr();
    std::optional<PredOp> op;
    switch (peek().type) {
      case Tok::Eq: op = PredOp::Equal; break;
      case Tok::Le: op = PredOp::SubsetEq; break;
      case Tok::Lt: op = PredOp::ProperSubset; break;
      default: break;
    }
    if (op) {
      take();
      AstPtr rhs = parse_expr();
      lhs = mk({Predicate{*op, std::move(lhs), std::move(rhs)}});
    }
    if (peek().type != Tok::End) fail(peek(), "expected end of formula");
    return lhs;
  }

  AstPtr parse_expr() {
    AstPtr lhs = parse_term();
    while (peek().type == Tok::Pipe) {
      take();
      lhs = mk({Binary{SetOp::Union, std::move(lhs), parse_term()}});
    }
    return lhs;
  }

  AstPtr parse_term() {
    AstPtr lhs = parse_factor();
    while (peek().type == Tok::Amp || peek().type == Tok::Backslash) {
      SetOp op = take().type == Tok::Amp ? SetOp::Intersect : SetOp::Difference;
      lhs = mk({Binary{op, std::move(lhs), parse_factor()}});
    }
    return lhs;
  }

  AstPtr parse_factor() {
    if (peek().type == Tok::Tilde) {
      take();
      return mk({Complement{parse_factor()}});
    }
    return parse_atom();
  }

  AstPtr parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Ident: {
        Token word = take();
        if (auto op = app_from_word(word.text)) {
          expect(Tok::LParen, "'(' after operator");
          AstPtr child = parse_expr();
          expect(Tok::RParen, "')'");
          return mk({Apply{*op, std::move(child)}});
        }
        if (word.text == "omega") return mk({OmegaLit{}});
        if (word.text == "empty") return mk({EmptyLit{}});
        // Bare identifiers parse as variable references (reserved; the
        // evaluator rejects them).
        if (!valid_label(word.text))
          throw ParseError(word.line, word.col, "invalid identifier '" + word.text + "'");
        return mk({VarRef{word.text}});
      }
      case Tok::LBrace: return parse_setlit();
      case Tok::LParen: {
        take();
        AstPtr inner = parse_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail(t, "expected a set expression");
    }
  }

  AstPtr parse_setlit() {
    expect(Tok::LBrace, "'{'");
    SetLit lit;
    auto take_label = [&] {
      if (peek().type != Tok::Ident) fail(peek(), "expected a state label");
      Token lab = take();
      if (!valid_label(lab.text))
        throw ParseError(lab.line, lab.col, "invalid state label '" + lab.text + "'");
      lit.labels.push_back(lab.text);
    };
    if (peek().type != Tok::RBrace) {
      take_label();
      while (peek().type == Tok::Comma || peek().type == Tok::Ident) {
        if (peek().type == Tok::Comma) take();
        take_label();
      }
    }
    expect(Tok::RBrace, "'}'");
    return mk({std::move(lit)});
  }
};

// Precedence for minimal-parenthesis printing: predicate 0, union 1,
// intersection/difference 2, complement 3, atoms and applications 4.
int prec(const Ast& ast) {
  if (std::holds_alternative<Predicate>(ast.node)) return 0;
  if (const auto* b = std::get_if<Binary>(&ast.node))
    return b->op == SetOp::Union ? 1 : 2;
  if (std::holds_alternative<Complement>(ast.node)) return 3;
  return 4;
}

void print(const Ast& ast, std::string& out);

void print_child(const Ast& child, int parent_prec, bool right, std::string& out) {
  int p = prec(child);
  bool wrap = right ? p <= parent_prec : p < parent_prec;
  if (wrap) out += '(';
  print(child, out);
  if (wrap) out += ')';
}

void print(const Ast& ast, std::string& out) {
  if (const auto* lit = std::get_if<SetLit>(&ast.node)) {
    out += '{';
    for (std::size_t i = 0; i < lit->labels.size(); ++i) {
      if (i) out += ", ";
      out += lit->labels[i];
    }
    out += '}';
  } else if (std::holds_alternative<OmegaLit>(ast.node)) {
    out += "omega";
  } else if (std::holds_alternative<EmptyLit>(ast.node)) {
    out += "empty";
  } else if (const auto* var = std::get_if<VarRef>(&ast.node)) {
    out += var->name;
  } else if (const auto* app = std::get_if<Apply>(&ast.node)) {
    out += app_name(app->op);
    out += '(';
    print(*app->child, out);
    out += ')';
  } else if (const auto* comp = std::get_if<Complement>(&ast.node)) {
    out += '~';
    print_child(*comp->child, 3, false, out);  // prefix chains need no parens
  } else if (const auto* bin = std::get_if<Binary>(&ast.node)) {
    int p = prec(ast);
    print_child(*bin->lhs, p, false, out);
    out += bin->op == SetOp::Union ? " | " : bin->op == SetOp::Intersect ? " & " : " \\ ";
    print_child(*bin->rhs, p, true, out);
  } else if (const auto* pr = std::get_if<Predicate>(&ast.node)) {
    print(*pr->lhs, out);
    out += pr->op == PredOp::Equal ? " = " : pr->op == PredOp::SubsetEq ? " <= " : " < ";
    print(*pr->rhs, out);
  }
}

struct Evaluator {
  const Model& m;
  const Caps& caps;

  Event set(const Ast& ast) const {
    if (const auto* lit = std::get_if<SetLit>(&ast.node)) {
      Event e = Event::empty_set(m.size());
      for (const auto& lab : lit->labels) e = e | Event::singleton(m.state(lab), m.size());
      return e;
    }
    if (std::holds_alternative<OmegaLit>(ast.node)) return m.universe();
    if (std::holds_alternative<EmptyLit>(ast.node)) return Event::empty_set(m.size());
    if (const auto* var = std::get_if<VarRef>(&ast.node))
      throw UsageError("unknown variable '" + var->name + "' (state labels go in braces)");
    if (const auto* app = std::get_if<Apply>(&ast.node)) {
      Event v = set(*app->child);
      switch (app->op) {
        case AppOp::K: return knowledge(m, OperatorKind::StandardK, v);
        case AppOp::KPrime: return knowledge(m, OperatorKind::GeneralisedKPrime, v, caps);
        // U of the full space resolves to the union form; Uiter stays literal.
        case AppOp::U: return v.full() ? global_unawareness(m, caps) : unawareness(m, v);
        case AppOp::UPrime:
          return induced_unawareness(m, OperatorKind::GeneralisedKPrime, v, caps);
        case AppOp::A: return awareness(m, v);
        case AppOp::UIter: return unawareness(m, v);
      }
      throw UsageError("unknown operator");
    }
    if (const auto* comp = std::get_if<Complement>(&ast.node)) return ~set(*comp->child);
    if (const auto* bin = std::get_if<Binary>(&ast.node)) {
      Event l = set(*bin->lhs);
      Event r = set(*bin->rhs);
      switch (bin->op) {
        case SetOp::Intersect: return l & r;
        case SetOp::Union: return l | r;
        case SetOp::Difference: return l - r;
      }
    }
    throw UsageError("predicate in set position");
  }
};

}  // namespace

bool is_predicate(const Ast& ast) { return std::holds_alternative<Predicate>(ast.node); }

bool ast_equal(const Ast& a, const Ast& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* la = std::get_if<SetLit>(&a.node))
    return la->labels == std::get<SetLit>(b.node).labels;
  if (std::holds_alternative<OmegaLit>(a.node) || std::holds_alternative<EmptyLit>(a.node))
    return true;
  if (const auto* va = std::get_if<VarRef>(&a.node))
    return va->name == std::get<VarRef>(b.node).name;
  if (const auto* pa = std::get_if<Apply>(&a.node)) {
    const auto& pb = std::get<Apply>(b.node);
    return pa->op == pb.op && ast_equal(*pa->child, *pb.child);
  }
  if (const auto* ca = std::get_if<Complement>(&a.node))
    return ast_equal(*ca->child, *std::get<Complement>(b.node).child);
  if (const auto* ba = std::get_if<Binary>(&a.node)) {
    const auto& bb = std::get<Binary>(b.node);
    return ba->op == bb.op && ast_equal(*ba->lhs, *bb.lhs) && ast_equal(*ba->rhs, *bb.rhs);
  }
  if (const auto* pa = std::get_if<Predicate>(&a.node)) {
    const auto& pb = std::get<Predicate>(b.node);
    return pa->op == pb.op && ast_equal(*pa->lhs, *pb.lhs) && ast_equal(*pa->rhs, *pb.rhs);
  }
  return false;
}

AstPtr parse_formula(std::string_view text) {
  Parser parser{lex(text)};
  return parser.parse_pred();
}

std::string print_formula(const Ast& ast) {
  std::string out;
  print(ast, out);
  return out;
}

std::variant<Event, bool> eval_formula(const Model& m, const Ast& ast, const Caps& caps) {
  Evaluator ev{m, caps};
  if (const auto* pr = std::get_if<Predicate>(&ast.node)) {
    Event l = ev.set(*pr->lhs);
    Event r = ev.set(*pr->rhs);
    switch (pr->op) {
      case PredOp::Equal: return l.equals(r);
      case PredOp::SubsetEq: return l.subset_of(r);
      case PredOp::ProperSubset: return l.proper_subset_of(r);
    }
    throw UsageError("unknown predicate");
  }
  return ev.set(ast);
}

}  // namespace kuc::formula
