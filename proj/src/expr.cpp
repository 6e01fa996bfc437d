#include "lpa/expr.hpp"

#include <cctype>

#include "lpa/rational.hpp"

namespace lpa {

namespace {

class ExprParser {
public:
    ExprParser(const Graph& g, const std::string& text) : g_(g), text_(text) {}

    Element run() {
        Element x = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) +
                             "' at offset " + std::to_string(pos_));
        return x;
    }

private:
    const Graph& g_;
    const std::string& text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Element parse_expr() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Element x = parse_term();
        if (negate) x = -x;
        for (;;) {
            if (eat('+'))
                x = x + parse_term();
            else if (eat('-'))
                x = x - parse_term();
            else
                return x;
        }
    }

    Element parse_term() {
        Element x = parse_atom();
        while (eat('*')) x = x * parse_atom();
        return x;
    }

    Element parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element x = parse_expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        throw ParseError("unexpected '" + std::string(1, c) + "' at offset " +
                         std::to_string(pos_));
    }

    // All-digit tokens are rationals, so a purely numeric vertex or edge
    // name is not addressable in expressions.
    Element parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart) throw ParseError("missing denominator");
            num += "/" + text_.substr(dstart, pos_ - dstart);
        }
        return identity_element(g_).scaled(parse_rational(num));
    }

    Element parse_name() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        bool ghost = (pos_ < text_.size() && text_[pos_] == '^');
        if (ghost) ++pos_;

        auto v = g_.find_vertex(name);
        auto e = g_.find_edge(name);
        if (ghost) {
            if (!e) {
                if (v) throw ParseError("'" + name + "^': only edges have ghosts");
                throw ParseError("unknown edge '" + name + "'");
            }
            return Element::ghost_edge(g_, *e);
        }
        if (v && e)
            throw ParseError("'" + name + "' names both a vertex and an edge; ambiguous");
        if (v) return Element::vertex(g_, *v);
        if (e) return Element::edge(g_, *e);
        throw ParseError("unknown name '" + name + "'");
    }
};

}  // namespace

Element eval_expression(const Graph& g, const std::string& text) {
    return ExprParser(g, text).run();
}

}  // namespace lpa
