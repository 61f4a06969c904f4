#include "ga/expr.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace ga::expr {

namespace {

Expr node(Kind k, std::vector<Expr> args = {}) { return std::make_shared<Node>(Node{k, std::move(args), 0, 0}); }

class Parser {
public:
    Parser(const std::string& text, int dim) : s_(text), dim_(dim) {}

    Expr run() {
        auto e = sum();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    int dim_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(p_ + 1));
    }
    void skip() {
        while (p_ < s_.size() && std::isspace((unsigned char)s_[p_])) ++p_;
    }
    bool at(const std::string& tok) {
        skip();
        return s_.compare(p_, tok.size(), tok) == 0;
    }
    bool eat(const std::string& tok) {
        if (!at(tok)) return false;
        p_ += tok.size();
        return true;
    }
    void expect(const std::string& tok) {
        if (!eat(tok)) fail("expected '" + tok + "'");
    }

    Expr sum() {
        auto lhs = product();
        while (true) {
            if (eat("+")) lhs = node(Kind::add, {lhs, product()});
            else if (eat("-")) lhs = node(Kind::sub, {lhs, product()});
            else return lhs;
        }
    }

    // Product operators; `_|` and `|_` are checked before anything shorter.
    bool product_op(Kind& k) {
        skip();
        static const std::vector<std::pair<std::string, Kind>> ops{
            {"_|", Kind::left_inner}, {"|_", Kind::right_inner}, {"*", Kind::geometric},
            {"^", Kind::wedge},       {"&", Kind::meet},         {".", Kind::scalar_product}};
        for (const auto& [tok, kind] : ops) {
            if (tok == "." && p_ + 1 < s_.size() && std::isdigit((unsigned char)s_[p_ + 1])) continue;
            if (at(tok)) {
                p_ += tok.size();
                k = kind;
                return true;
            }
        }
        return false;
    }

    Expr product() {
        auto lhs = unary();
        bool have = false;
        Kind tier{};
        Kind k;
        while (product_op(k)) {
            if (have && k != tier) fail("mixing product operators needs parentheses");
            have = true;
            tier = k;
            lhs = node(k, {lhs, unary()});
        }
        return lhs;
    }

    Expr unary() {
        if (eat("-")) return node(Kind::neg, {unary()});
        return postfix();
    }

    Expr postfix() {
        auto e = primary();
        while (true) {
            if (eat("~")) e = node(Kind::reverse, {e});
            else if (eat("'")) e = node(Kind::grade_involution, {e});
            else if (eat("!")) e = node(Kind::dual, {e});
            else return e;
        }
    }

    std::size_t digits() {
        std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit((unsigned char)s_[p_])) ++p_;
        return p_ - start;
    }

    Expr number() {
        std::size_t start = p_;
        digits();
        bool decimal = false;
        if (p_ < s_.size() && s_[p_] == '.' && p_ + 1 < s_.size() && std::isdigit((unsigned char)s_[p_ + 1])) {
            ++p_;
            digits();
            decimal = true;
        }
        if (p_ < s_.size() && (s_[p_] == 'e' || s_[p_] == 'E')) {
            std::size_t q = p_ + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            // "2e1" is read as an exponent only when a sign follows or the literal already has a point
            bool signed_exp = q > p_ + 1;
            if ((signed_exp || decimal) && q < s_.size() && std::isdigit((unsigned char)s_[q])) {
                p_ = q;
                digits();
            }
        }
        if (!decimal && p_ < s_.size() && s_[p_] == '/' ) {
            ++p_;
            if (digits() == 0) fail("expected denominator");
        }
        auto n = std::make_shared<Node>(Node{Kind::literal, {}, 0, 0});
        try {
            n->value = parse_rational(s_.substr(start, p_ - start));
        } catch (const std::exception& ex) {
            fail(ex.what());
        }
        return n;
    }

    Expr call(Kind k) {
        expect("(");
        auto e = sum();
        expect(")");
        return node(k, {e});
    }

    Expr primary() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[p_];
        if (std::isdigit((unsigned char)c) || (c == '.' && p_ + 1 < s_.size() && std::isdigit((unsigned char)s_[p_ + 1])))
            return number();
        if (eat("(")) {
            auto e = sum();
            expect(")");
            return e;
        }
        if (eat("<")) {
            auto e = sum();
            expect(">");
            skip();
            std::size_t start = p_;
            if (digits() == 0) fail("expected grade after '>'");
            auto n = std::make_shared<Node>(Node{Kind::grade_project, {e}, 0, std::stoi(s_.substr(start, p_ - start))});
            return n;
        }
        if (std::isalpha((unsigned char)c)) {
            std::size_t start = p_;
            while (p_ < s_.size() && std::isalnum((unsigned char)s_[p_])) ++p_;
            std::string word = s_.substr(start, p_ - start);
            if (word == "exp") return call(Kind::exp);
            if (word == "inv") return call(Kind::inverse);
            if (word == "conj") return call(Kind::conjugate);
            if (word == "I") return node(Kind::pseudoscalar);
            if (word.size() > 1 && word[0] == 'e' && std::all_of(word.begin() + 1, word.end(), ::isdigit) && word[1] != '0') {
                int i = word.size() < 6 ? std::stoi(word.substr(1)) : 0;
                if (i < 1 || i > dim_) {
                    p_ = start;
                    fail("unknown generator '" + word + "'");
                }
                auto n = std::make_shared<Node>(Node{Kind::generator, {}, 0, i - 1});
                return n;
            }
            p_ = start;
            fail("unknown name '" + word + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

const std::map<Kind, std::string>& infix() {
    static const std::map<Kind, std::string> m{
        {Kind::add, "+"},         {Kind::sub, "-"},          {Kind::geometric, "*"}, {Kind::wedge, "^"},
        {Kind::left_inner, "_|"}, {Kind::right_inner, "|_"}, {Kind::scalar_product, "."}, {Kind::meet, "&"}};
    return m;
}

}  // namespace

std::vector<int> parse_signature(const std::string& text_in) {
    std::string text;
    for (char c : text_in)
        if (!std::isspace((unsigned char)c)) text += c;
    auto bad = [&]() { return ParseError("bad signature '" + text_in + "'"); };
    std::vector<int> out;
    if (text.rfind("R(", 0) == 0 && text.back() == ')') {
        std::vector<int> nums;
        std::stringstream in(text.substr(2, text.size() - 3));
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 3) throw bad();
            nums.push_back(std::stoi(item));
        }
        if (nums.size() < 2 || nums.size() > 3) throw bad();
        if (nums.size() == 2) nums.push_back(0);
        if (nums[0] + nums[1] + nums[2] > 62) throw ParseError("signature too large");
        out.insert(out.end(), nums[0], 1);
        out.insert(out.end(), nums[1], -1);
        out.insert(out.end(), nums[2], 0);
        return out;
    }
    if (text.rfind("sig[", 0) == 0 && text.back() == ']') {
        std::stringstream in(text.substr(4, text.size() - 5));
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item == "+" || item == "+1" || item == "1") out.push_back(1);
            else if (item == "-" || item == "-1") out.push_back(-1);
            else if (item == "0") out.push_back(0);
            else throw bad();
        }
        if (out.size() > 62) throw ParseError("signature too large");
        return out;
    }
    throw bad();
}

Expr parse(const std::string& text, int dim) { return Parser(text, dim).run(); }

std::string print(const Expr& e) {
    switch (e->kind) {
    case Kind::literal: return e->value.get_str();
    case Kind::generator: return "e" + std::to_string(e->index + 1);
    case Kind::pseudoscalar: return "I";
    case Kind::neg: return "-(" + print(e->args[0]) + ")";
    case Kind::grade_project: return "<" + print(e->args[0]) + ">" + std::to_string(e->index);
    case Kind::reverse: return "(" + print(e->args[0]) + ")~";
    case Kind::grade_involution: return "(" + print(e->args[0]) + ")'";
    case Kind::dual: return "(" + print(e->args[0]) + ")!";
    case Kind::conjugate: return "conj(" + print(e->args[0]) + ")";
    case Kind::exp: return "exp(" + print(e->args[0]) + ")";
    case Kind::inverse: return "inv(" + print(e->args[0]) + ")";
    default: break;
    }
    return "(" + print(e->args[0]) + " " + infix().at(e->kind) + " " + print(e->args[1]) + ")";
}

bool uses_exp(const Expr& e) {
    if (e->kind == Kind::exp) return true;
    for (const auto& a : e->args)
        if (uses_exp(a)) return true;
    return false;
}

}  // namespace ga::expr
