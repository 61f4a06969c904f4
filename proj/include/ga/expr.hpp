// Expression language over a fixed signature: parsing, printing and evaluation.
#pragma once

#include "ga/products.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ga::expr {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind {
    literal,
    generator,
    pseudoscalar,
    add,
    sub,
    neg,
    geometric,
    wedge,
    left_inner,
    right_inner,
    scalar_product,
    meet,
    grade_project,
    reverse,
    grade_involution,
    conjugate,
    dual,
    exp,
    inverse,
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    std::vector<Expr> args;
    mpq_class value;   // literal
    int index = 0;     // generator (0-based) or projected grade
};

// Signature text: "R(s,t)", "R(s,t,u)" or "sig[+,-,0,...]"; entries are +1, -1, 0.
std::vector<int> parse_signature(const std::string& text);

// Generators are e1..en with n the dimension.
Expr parse(const std::string& text, int dim);

// Canonical text; parsing it back gives an equal expression.
std::string print(const Expr& e);

bool uses_exp(const Expr& e);

template <class T>
SigPtr<T> make_signature(const std::vector<int>& values) {
    std::vector<T> r;
    for (int v : values) r.push_back(Ring<T>::from_int(v));
    return Signature<T>::make(std::move(r));
}

template <class T>
T from_rational(const mpq_class& q) {
    if constexpr (std::is_same_v<T, mpq_class>) return q;
    else if constexpr (std::is_same_v<T, double>) return q.get_d();
    else {
        if (q.get_den() != 1) throw std::domain_error("fractional literal in an integer ring");
        return T(q.get_num());
    }
}

template <class T>
Multivector<T> evaluate(const Expr& e, const SigPtr<T>& sig) {
    auto ev = [&](int i) { return evaluate<T>(e->args[i], sig); };
    switch (e->kind) {
    case Kind::literal: return Multivector<T>::scalar(sig, from_rational<T>(e->value));
    case Kind::generator:
        if (e->index >= sig->dim()) throw ParseError("unknown generator e" + std::to_string(e->index + 1));
        return Multivector<T>::gen(sig, e->index);
    case Kind::pseudoscalar: return pseudoscalar(sig);
    case Kind::add: return ev(0) + ev(1);
    case Kind::sub: return ev(0) - ev(1);
    case Kind::neg: return -ev(0);
    case Kind::geometric: return ev(0) * ev(1);
    case Kind::wedge: return outer(ev(0), ev(1));
    case Kind::left_inner: return left_inner(ev(0), ev(1));
    case Kind::right_inner: return right_inner(ev(0), ev(1));
    case Kind::scalar_product: return Multivector<T>::scalar(sig, scalar_product(ev(0), ev(1)));
    case Kind::meet: return meet(ev(0), ev(1));
    case Kind::grade_project: return ev(0).grade_part(e->index);
    case Kind::reverse: return ev(0).reverse();
    case Kind::grade_involution: return ev(0).grade_involution();
    case Kind::conjugate: return ev(0).conjugate();
    case Kind::dual: return dual(ev(0));
    case Kind::exp: return ga::exp(ev(0));
    case Kind::inverse: return inverse(ev(0));
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace ga::expr
