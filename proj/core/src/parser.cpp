#include "ruleprune/parser.hpp"

#include "ruleprune/errors.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ruleprune {

namespace {

enum class Tok {
    Id,
    Number,
    DateLit,
    Colon,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    Minus,
    Star,
    Slash,
    Relop,
    End,
};

struct Token {
    Tok type = Tok::End;
    std::string text;
    RelOp relop = RelOp::Eq;
    int line = 1;
    int col = 1;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
    Lexer(std::string_view text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(int col, const std::string& expected, const std::string& got) {
        throw SyntaxError(line_, col, expected, got);
    }

    bool date_at(size_t p) const {
        if (p + 10 > text_.size()) return false;
        static const int digit_at[] = {0, 1, 2, 3, 5, 6, 8, 9};
        for (int i : digit_at)
            if (!is_digit(text_[p + i])) return false;
        if (text_[p + 4] != '-' || text_[p + 7] != '-') return false;
        if (p + 10 < text_.size() && is_digit(text_[p + 10])) return false;
        return true;
    }

    void advance() {
        while (pos_ < text_.size()
               && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_.type = Tok::End;
            tok_.text = "end of line";
            return;
        }
        char c = text_[pos_];
        if (date_at(pos_)) {
            tok_.type = Tok::DateLit;
            tok_.text = std::string(text_.substr(pos_, 10));
            pos_ += 10;
            return;
        }
        if (is_digit(c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                if (pos_ >= text_.size() || !is_digit(text_[pos_]))
                    fail(static_cast<int>(pos_) + 1, "digit after decimal point",
                         pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'"
                                             : "end of line");
                while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
            }
            tok_.type = Tok::Number;
            tok_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (is_ident_start(c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            tok_.type = Tok::Id;
            tok_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
        };
        if (two('<', '=')) {
            tok_.type = Tok::Relop;
            tok_.relop = RelOp::Le;
            tok_.text = "<=";
            pos_ += 2;
            return;
        }
        if (two('>', '=')) {
            tok_.type = Tok::Relop;
            tok_.relop = RelOp::Ge;
            tok_.text = ">=";
            pos_ += 2;
            return;
        }
        if (two('!', '=')) {
            tok_.type = Tok::Relop;
            tok_.relop = RelOp::Ne;
            tok_.text = "!=";
            pos_ += 2;
            return;
        }
        ++pos_;
        switch (c) {
            case '=': tok_.type = Tok::Relop; tok_.relop = RelOp::Eq; tok_.text = "="; return;
            case '<': tok_.type = Tok::Relop; tok_.relop = RelOp::Lt; tok_.text = "<"; return;
            case '>': tok_.type = Tok::Relop; tok_.relop = RelOp::Gt; tok_.text = ">"; return;
            case ':': tok_.type = Tok::Colon; tok_.text = ":"; return;
            case ',': tok_.type = Tok::Comma; tok_.text = ","; return;
            case '(': tok_.type = Tok::LParen; tok_.text = "("; return;
            case ')': tok_.type = Tok::RParen; tok_.text = ")"; return;
            case '[': tok_.type = Tok::LBracket; tok_.text = "["; return;
            case ']': tok_.type = Tok::RBracket; tok_.text = "]"; return;
            case '+': tok_.type = Tok::Plus; tok_.text = "+"; return;
            case '-': tok_.type = Tok::Minus; tok_.text = "-"; return;
            case '*': tok_.type = Tok::Star; tok_.text = "*"; return;
            case '/': tok_.type = Tok::Slash; tok_.text = "/"; return;
        }
        fail(tok_.col, "a valid token", "'" + std::string(1, c) + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_;
    Token tok_;
};

bool is_param_name(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!(std::islower(static_cast<unsigned char>(c)) || is_digit(c) || c == '_'))
            return false;
    return true;
}

bool is_iso_ccy(const std::string& s) {
    if (s.size() != 3) return false;
    for (char c : s)
        if (!std::isupper(static_cast<unsigned char>(c))) return false;
    return true;
}

class Parser {
public:
    // Generous for human-written rules, small enough that recursion over the
    // parsed tree (canonicalization, printing, destruction) stays bounded.
    static constexpr int kMaxNestingDepth = 256;
    static constexpr int kMaxFactors = 4096;

    explicit Parser(Lexer& lex) : lex_(lex) {}

    Rule parse_rule() {
        Token id = expect(Tok::Id, "rule identifier");
        if (is_keyword(id.text)) fail(id, "rule identifier");
        Rule rule;
        rule.id = id.text;
        expect(Tok::Colon, "':'");
        expect_keyword("IF");
        rule.body = parse_expr();
        Token rel = expect(Tok::Relop, "relational operator");
        rule.predicate.relop = rel.relop;
        rule.predicate.threshold = parse_signed_number();
        expect_keyword("THEN");
        Token act = expect(Tok::Id, "'FAIL' or 'WARN'");
        if (act.text == "FAIL")
            rule.action = Action::Fail;
        else if (act.text == "WARN")
            rule.action = Action::Warn;
        else
            fail(act, "'FAIL' or 'WARN'");
        if (lex_.peek().type == Tok::Id && lex_.peek().text == "CONTEXT") {
            lex_.next();
            rule.context = parse_context_atoms();
        }
        expect_end();
        return rule;
    }

    ExprPtr parse_whole_expression() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    Context parse_whole_context() {
        Context c = parse_context_atoms();
        expect_end();
        return c;
    }

private:
    static bool is_keyword(const std::string& s) {
        return s == "IF" || s == "THEN" || s == "CONTEXT" || s == "AND" || s == "FAIL"
            || s == "WARN";
    }

    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        throw SyntaxError(t.line, t.col, expected, "'" + t.text + "'");
    }

    Token expect(Tok type, const std::string& expected) {
        if (lex_.peek().type != type) fail(lex_.peek(), expected);
        return lex_.next();
    }

    void expect_keyword(const std::string& kw) {
        Token t = lex_.peek();
        if (t.type != Tok::Id || t.text != kw) fail(t, "'" + kw + "'");
        lex_.next();
    }

    void expect_end() {
        if (lex_.peek().type != Tok::End) fail(lex_.peek(), "end of rule");
    }

    Decimal parse_number_token(const Token& t) {
        auto d = Decimal::parse(t.text);
        if (!d) fail(t, "decimal number");
        return *d;
    }

    Decimal parse_signed_number() {
        bool neg = false;
        if (lex_.peek().type == Tok::Minus) {
            lex_.next();
            neg = true;
        }
        Token t = expect(Tok::Number, "decimal number");
        Decimal d = parse_number_token(t);
        if (neg) d = Decimal::from_int(0) - d;
        return d;
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
            Token op = lex_.next();
            ExprPtr right = parse_term();
            left = Expr::op(op.type == Tok::Plus ? OpKind::Add : OpKind::Sub, {left, right});
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (lex_.peek().type == Tok::Star || lex_.peek().type == Tok::Slash) {
            Token op = lex_.next();
            ExprPtr right = parse_factor();
            left = Expr::op(op.type == Tok::Star ? OpKind::Mul : OpKind::Div, {left, right});
        }
        return left;
    }

    ExprPtr parse_factor() {
        const Token& t = lex_.peek();
        if (++factors_ > kMaxFactors) fail(t, "a smaller rule (expression too large)");
        switch (t.type) {
            case Tok::Id: {
                Token id = lex_.next();
                if (id.text == "sum") {
                    expect(Tok::LParen, "'(' after sum");
                    ExprPtr inner = parse_nested_expr(id);
                    expect(Tok::RParen, "')'");
                    return Expr::op(OpKind::Sum, {inner});
                }
                if (!is_param_name(id.text))
                    fail(id, "parameter name ([a-z][a-z0-9_]*)");
                return Expr::param(id.text);
            }
            case Tok::Number: {
                Token num = lex_.next();
                return Expr::value(parse_number_token(num));
            }
            case Tok::Minus: {
                lex_.next();
                Token num = expect(Tok::Number, "decimal number");
                return Expr::value(Decimal::from_int(0) - parse_number_token(num));
            }
            case Tok::LParen: {
                Token open = lex_.next();
                ExprPtr inner = parse_nested_expr(open);
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                fail(t, "parameter, number, 'sum(' or '('");
        }
    }

    ExprPtr parse_nested_expr(const Token& at) {
        if (++depth_ > kMaxNestingDepth) fail(at, "shallower nesting (limit 256)");
        ExprPtr e = parse_expr();
        --depth_;
        return e;
    }

    Date parse_date() {
        Token t = expect(Tok::DateLit, "date (YYYY-MM-DD)");
        auto d = Date::parse(t.text);
        if (!d) fail(t, "a valid calendar date");
        return *d;
    }

    void expect_equals() {
        Token t = lex_.peek();
        if (t.type != Tok::Relop || t.relop != RelOp::Eq) fail(t, "'='");
        lex_.next();
    }

    Context parse_context_atoms() {
        Context ctx;
        bool seen_class = false, seen_ccy = false, seen_period = false;
        while (true) {
            Token key = expect(Tok::Id, "context atom ('class', 'ccy' or 'period')");
            if (key.text == "class") {
                if (seen_class) fail(key, "at most one 'class' clause");
                seen_class = true;
                expect_equals();
                std::set<std::string> classes;
                classes.insert(expect(Tok::Id, "asset class name").text);
                while (lex_.peek().type == Tok::Comma) {
                    lex_.next();
                    classes.insert(expect(Tok::Id, "asset class name").text);
                }
                ctx.classes = std::move(classes);
            } else if (key.text == "ccy") {
                if (seen_ccy) fail(key, "at most one 'ccy' clause");
                seen_ccy = true;
                expect_equals();
                Token v = expect(Tok::Id, "'local', 'base' or ISO-4217 code");
                if (v.text == "local")
                    ctx.ccy = CcyScope::Local;
                else if (v.text == "base")
                    ctx.ccy = CcyScope::Base;
                else if (is_iso_ccy(v.text)) {
                    ctx.ccy = CcyScope::Iso;
                    ctx.ccy_code = v.text;
                } else
                    fail(v, "'local', 'base' or ISO-4217 code");
            } else if (key.text == "period") {
                if (seen_period) fail(key, "at most one 'period' clause");
                seen_period = true;
                expect_equals();
                expect(Tok::LBracket, "'['");
                Date start = parse_date();
                expect(Tok::Comma, "','");
                Date end = parse_date();
                expect(Tok::RBracket, "']'");
                if (end < start) throw InvalidPeriodError(start.str(), end.str());
                ctx.window = DateRange{start, end};
            } else {
                throw UnknownContextKeywordError(key.line, key.col, key.text);
            }
            if (lex_.peek().type == Tok::Id && lex_.peek().text == "AND")
                lex_.next();
            else
                break;
        }
        return ctx;
    }

    Lexer& lex_;
    int depth_ = 0;
    int factors_ = 0;
};

// Strips a trailing `#` comment; the DSL has no string literals so '#'
// always starts a comment.
std::string_view strip_comment(std::string_view line) {
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

bool blank(std::string_view line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

}  // namespace

RuleSet parse_rules(std::string_view source) {
    RuleSet set;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= source.size()) {
        size_t nl = source.find('\n', pos);
        std::string_view line = source.substr(pos, nl == std::string_view::npos ? source.size() - pos
                                                                                : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
        line = strip_comment(line);
        if (blank(line)) continue;
        Lexer lex(line, line_no);
        Parser parser(lex);
        set.add(parser.parse_rule());
    }
    return set;
}

ExprPtr parse_expression(std::string_view text) {
    Lexer lex(strip_comment(text), 1);
    Parser parser(lex);
    return parser.parse_whole_expression();
}

Context parse_context(std::string_view text) {
    Lexer lex(strip_comment(text), 1);
    Parser parser(lex);
    return parser.parse_whole_context();
}

namespace {

int precedence(const Expr& e) {
    const auto* op = e.as_op();
    if (!op) return 3;
    switch (op->kind) {
        case OpKind::Add:
        case OpKind::Sub: return 1;
        case OpKind::Mul:
        case OpKind::Div: return 2;
        case OpKind::Sum: return 3;
    }
    return 3;
}

void format_infix(const Expr& e, std::string& out) {
    if (const auto* p = e.as_param()) {
        out += p->name;
        return;
    }
    if (const auto* v = e.as_value()) {
        out += v->value.str();
        return;
    }
    const auto& op = *e.as_op();
    if (op.kind == OpKind::Sum) {
        out += "sum(";
        format_infix(*op.children[0], out);
        out += ')';
        return;
    }
    const char* sep = op.kind == OpKind::Add ? " + "
        : op.kind == OpKind::Sub             ? " - "
        : op.kind == OpKind::Mul             ? " * "
                                             : " / ";
    int prec = precedence(e);
    for (size_t i = 0; i < op.children.size(); ++i) {
        if (i) out += sep;
        const Expr& child = *op.children[i];
        // Parenthesize lower precedence anywhere, and equal precedence in
        // non-leading position, so the left-associative reparse rebuilds
        // the same shape.
        bool parens = precedence(child) < prec || (i > 0 && precedence(child) == prec);
        if (parens) out += '(';
        format_infix(child, out);
        if (parens) out += ')';
    }
}

}  // namespace

std::string format_expression(const ExprPtr& e) {
    std::string out;
    format_infix(*e, out);
    return out;
}

std::string format_rule(const Rule& rule) {
    std::string out = rule.id;
    out += ": IF ";
    format_infix(*rule.body, out);
    out += ' ';
    out += relop_symbol(rule.predicate.relop);
    out += ' ';
    out += rule.predicate.threshold.str();
    out += " THEN ";
    out += action_name(rule.action);
    if (!rule.context.is_universal()) {
        out += " CONTEXT ";
        out += rule.context.str();
    }
    return out;
}

}  // namespace ruleprune
