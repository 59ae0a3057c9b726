#include "cuspidal/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cusp {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

DomainError::DomainError(std::size_t position, const std::string& message)
    : std::runtime_error("domain error at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

struct FunctionInfo {
    const char* name;
    Function fn;
    int arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"sin", Function::Sin, 1},   {"cos", Function::Cos, 1},   {"tan", Function::Tan, 1},
    {"sqrt", Function::Sqrt, 1}, {"exp", Function::Exp, 1},   {"log", Function::Log, 1},
    {"abs", Function::Abs, 1},   {"atan", Function::Atan, 1}, {"pow", Function::Pow, 2},
};

const FunctionInfo* find_function(std::string_view name) {
    for (const auto& f : kFunctions)
        if (name == f.name) return &f;
    return nullptr;
}

const char* function_name(Function fn) {
    for (const auto& f : kFunctions)
        if (f.fn == fn) return f.name;
    return "?";
}

ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "expected expression, found end of input");
        ExprPtr e = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(pos_, std::string("expected operator or end of input, found '") + s_[pos_] + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Accepts ASCII '-' and U+2212 MINUS SIGN.
    bool at_minus() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') return true;
        return s_.substr(pos_, 3) == "\xE2\x88\x92";
    }
    void take_minus() { pos_ += (s_[pos_] == '-') ? 1 : 3; }

    bool at(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    std::string describe_here() {
        if (pos_ >= s_.size()) return "end of input";
        return std::string("'") + s_[pos_] + "'";
    }

    ExprPtr binary(BinaryOp op, ExprPtr a, ExprPtr b, std::size_t at_pos) {
        ExprNode n;
        n.kind = NodeKind::Binary;
        n.op = op;
        n.args = {std::move(a), std::move(b)};
        n.position = at_pos;
        return node(std::move(n));
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (at('+')) {
                const std::size_t p = pos_++;
                lhs = binary(BinaryOp::Add, lhs, term(), p);
            } else if (at_minus()) {
                const std::size_t p = pos_;
                take_minus();
                lhs = binary(BinaryOp::Sub, lhs, term(), p);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        for (;;) {
            if (at('*')) {
                const std::size_t p = pos_++;
                lhs = binary(BinaryOp::Mul, lhs, unary(), p);
            } else if (at('/')) {
                const std::size_t p = pos_++;
                lhs = binary(BinaryOp::Div, lhs, unary(), p);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        if (at_minus()) {
            const std::size_t p = pos_;
            take_minus();
            ExprNode n;
            n.kind = NodeKind::Negate;
            n.args = {unary()};
            n.position = p;
            return node(std::move(n));
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (at('^')) {
            const std::size_t p = pos_++;
            return binary(BinaryOp::Pow, base, unary(), p);
        }
        return base;
    }

    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "expected number, identifier or '(', found end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!at(')')) throw ParseError(pos_, "expected ')', found " + describe_here());
            ++pos_;
            return e;
        }
        throw ParseError(pos_, "expected number, identifier or '(', found " + describe_here());
    }

    ExprPtr number() {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p, ++n;
            return n;
        };
        std::size_t nd = digits();
        if (p < s_.size() && s_[p] == '.') {
            ++p;
            nd += digits();
        }
        if (nd == 0) throw ParseError(start, "malformed number");
        if (p < s_.size() && (s_[p] == 'e' || s_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                p = q;
                digits();
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(s_.data() + start, s_.data() + p, value);
        if (res.ec != std::errc() || res.ptr != s_.data() + p) throw ParseError(start, "malformed number");
        pos_ = p;
        ExprNode n;
        n.kind = NodeKind::Number;
        n.number = value;
        n.position = start;
        return node(std::move(n));
    }

    ExprPtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        ExprNode n;
        n.position = start;
        if (at('(')) {
            const FunctionInfo* info = find_function(name);
            if (!info) throw ParseError(start, "unknown function '" + name + "'");
            ++pos_;
            n.kind = NodeKind::Call;
            n.function = info->fn;
            n.name = name;
            n.args.push_back(expr());
            while (at(',')) {
                ++pos_;
                n.args.push_back(expr());
            }
            if (!at(')')) throw ParseError(pos_, "expected ',' or ')', found " + describe_here());
            ++pos_;
            if (static_cast<int>(n.args.size()) != info->arity) {
                throw ParseError(start, "function '" + name + "' expects " + std::to_string(info->arity) +
                                            " argument(s), got " + std::to_string(n.args.size()));
            }
            return node(std::move(n));
        }
        if (name == "u" || name == "v") {
            n.kind = NodeKind::Variable;
            n.variable = name[0];
        } else if (name == "pi") {
            n.kind = NodeKind::Constant;
            n.name = name;
            n.number = std::numbers::pi;
        } else if (name == "e") {
            n.kind = NodeKind::Constant;
            n.name = name;
            n.number = std::numbers::e;
        } else if (find_function(name)) {
            throw ParseError(pos_, "expected '(' after function '" + name + "'");
        } else {
            throw ParseError(start, "unknown identifier '" + name + "'");
        }
        return node(std::move(n));
    }
};

// Integer-valued literal exponent (optionally negated), used for exact powers.
bool integer_exponent(const ExprNode& n, long& k) {
    if (n.kind == NodeKind::Negate) {
        if (!integer_exponent(*n.args[0], k)) return false;
        k = -k;
        return true;
    }
    if (n.kind != NodeKind::Number) return false;
    if (n.number != std::floor(n.number) || std::abs(n.number) > 64) return false;
    k = static_cast<long>(n.number);
    return true;
}

// Scalar primitives, mirroring the jet primitives' constant terms exactly.
double checked_sqrt(double x, const ExprNode& n) {
    if (x < 0.0) throw DomainError(n.position, "sqrt of negative value");
    return std::sqrt(x);
}
Jet2 checked_sqrt(const Jet2& x, const ExprNode& n) {
    if (!(x.value() > 0.0)) throw DomainError(n.position, "sqrt of non-positive value in jet evaluation");
    return cusp::sqrt(x);
}
Jet1 checked_sqrt(const Jet1& x, const ExprNode& n) {
    if (!(x.value() > 0.0)) throw DomainError(n.position, "sqrt of non-positive value in jet evaluation");
    return cusp::sqrt(x);
}

template <class T>
T checked_log(const T& x, const ExprNode& n) {
    if (!(constant_term(x) > 0.0)) throw DomainError(n.position, "log of non-positive value");
    if constexpr (std::is_same_v<T, double>) {
        return std::log(x);
    } else {
        return cusp::log(x);
    }
}

template <class T>
T apply_function(Function fn, const std::vector<T>& a, const ExprNode& n);

template <class T>
T real_power(const T& base, const T& exponent, const ExprNode& n) {
    if (!(constant_term(base) > 0.0)) throw DomainError(n.position, "non-integer power of non-positive base");
    if constexpr (std::is_same_v<T, double>) {
        return std::exp(exponent * std::log(base));
    } else {
        return cusp::exp(exponent * cusp::log(base));
    }
}

template <class T>
T lift(double c, const T& like) {
    if constexpr (std::is_same_v<T, double>) {
        return c;
    } else {
        return like * 0.0 + c;
    }
}

template <class T>
T evaluate(const ExprNode& n, const T& u, const T& v) {
    switch (n.kind) {
        case NodeKind::Number:
        case NodeKind::Constant:
            return lift(n.number, u);
        case NodeKind::Variable:
            return n.variable == 'u' ? u : v;
        case NodeKind::Negate:
            return -evaluate(*n.args[0], u, v);
        case NodeKind::Binary: {
            if (n.op == BinaryOp::Pow) {
                long k = 0;
                const T base = evaluate(*n.args[0], u, v);
                if (integer_exponent(*n.args[1], k)) {
                    if (k < 0 && constant_term(base) == 0.0) throw DomainError(n.position, "negative power of zero");
                    if constexpr (std::is_same_v<T, double>) {
                        if (k == 0) return 1.0;
                        double r = base;
                        for (long i = 1; i < std::abs(k); ++i) r = r * base;
                        return k < 0 ? 1.0 / r : r;
                    } else {
                        return pow_int(base, k);
                    }
                }
                return real_power(base, evaluate(*n.args[1], u, v), n);
            }
            const T a = evaluate(*n.args[0], u, v);
            const T b = evaluate(*n.args[1], u, v);
            switch (n.op) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (constant_term(b) == 0.0) throw DomainError(n.position, "division by zero");
                    return a / b;
                case BinaryOp::Pow: break;
            }
            break;
        }
        case NodeKind::Call: {
            if (n.function == Function::Pow) {
                long k = 0;
                const T base = evaluate(*n.args[0], u, v);
                if (integer_exponent(*n.args[1], k)) {
                    if (k < 0 && constant_term(base) == 0.0) throw DomainError(n.position, "negative power of zero");
                    if constexpr (std::is_same_v<T, double>) {
                        if (k == 0) return 1.0;
                        double r = base;
                        for (long i = 1; i < std::abs(k); ++i) r = r * base;
                        return k < 0 ? 1.0 / r : r;
                    } else {
                        return pow_int(base, k);
                    }
                }
                return real_power(base, evaluate(*n.args[1], u, v), n);
            }
            std::vector<T> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(evaluate(*a, u, v));
            return apply_function(n.function, args, n);
        }
    }
    throw DomainError(n.position, "malformed expression node");
}

template <class T>
T apply_function(Function fn, const std::vector<T>& a, const ExprNode& n) {
    const T& x = a[0];
    if constexpr (std::is_same_v<T, double>) {
        switch (fn) {
            case Function::Sin: return std::sin(x);
            case Function::Cos: return std::cos(x);
            case Function::Tan: return std::tan(x);
            case Function::Sqrt: return checked_sqrt(x, n);
            case Function::Exp: return std::exp(x);
            case Function::Log: return checked_log(x, n);
            case Function::Abs: return std::abs(x);
            case Function::Atan: return std::atan(x);
            case Function::Pow: break;
        }
    } else {
        try {
            switch (fn) {
                case Function::Sin: return cusp::sin(x);
                case Function::Cos: return cusp::cos(x);
                case Function::Tan: return cusp::tan(x);
                case Function::Sqrt: return checked_sqrt(x, n);
                case Function::Exp: return cusp::exp(x);
                case Function::Log: return checked_log(x, n);
                case Function::Abs: return cusp::abs(x);
                case Function::Atan: return cusp::atan(x);
                case Function::Pow: break;
            }
        } catch (const JetError& err) {
            throw DomainError(n.position, err.what());
        }
    }
    throw DomainError(n.position, "unsupported function");
}

void print(const ExprNode& n, std::ostringstream& os) {
    switch (n.kind) {
        case NodeKind::Number: {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, n.number);
            os << '(' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << ')';
            return;
        }
        case NodeKind::Constant: os << n.name; return;
        case NodeKind::Variable: os << n.variable; return;
        case NodeKind::Negate:
            os << "(-";
            print(*n.args[0], os);
            os << ')';
            return;
        case NodeKind::Binary: {
            static constexpr char ops[] = {'+', '-', '*', '/', '^'};
            os << '(';
            print(*n.args[0], os);
            os << ops[static_cast<int>(n.op)];
            print(*n.args[1], os);
            os << ')';
            return;
        }
        case NodeKind::Call:
            os << function_name(n.function) << '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) os << ',';
                print(*n.args[i], os);
            }
            os << ')';
            return;
    }
}

ExprPtr substitute_node(const ExprPtr& n, const ExprPtr& ur, const ExprPtr& vr) {
    if (n->kind == NodeKind::Variable) return n->variable == 'u' ? ur : vr;
    if (n->args.empty()) return n;
    ExprNode copy = *n;
    for (auto& a : copy.args) a = substitute_node(a, ur, vr);
    return node(std::move(copy));
}

}  // namespace

Expr parse_expression(std::string_view text) { return Expr(Parser(text).parse(), std::string(text)); }

double eval_scalar(const Expr& e, double u, double v) { return evaluate<double>(e.root(), u, v); }

Jet2 eval_jet(const Expr& e, double u, double v, int order) {
    if (order < 0) throw JetError("negative jet order");
    const std::array<double, 2> base{u, v};
    return eval_jet(e, Jet2::variable_u(order, base), Jet2::variable_v(order, base));
}

Jet2 eval_jet(const Expr& e, const Jet2& U, const Jet2& V) { return evaluate<Jet2>(e.root(), U, V); }
Jet1 eval_jet(const Expr& e, const Jet1& U, const Jet1& V) { return evaluate<Jet1>(e.root(), U, V); }

std::string to_string(const Expr& e) {
    std::ostringstream os;
    print(e.root(), os);
    return os.str();
}

Expr substitute(const Expr& e, const Expr& ur, const Expr& vr) {
    Expr out(substitute_node(e.ptr(), ur.ptr(), vr.ptr()));
    return Expr(out.ptr(), to_string(out));
}

Expr make_number(double x) {
    ExprNode n;
    n.kind = NodeKind::Number;
    n.number = x;
    if (x < 0.0) {
        n.number = -x;
        ExprNode neg;
        neg.kind = NodeKind::Negate;
        neg.args = {node(std::move(n))};
        return Expr(node(std::move(neg)));
    }
    return Expr(node(std::move(n)));
}

Expr make_binary(BinaryOp op, const Expr& a, const Expr& b) {
    ExprNode n;
    n.kind = NodeKind::Binary;
    n.op = op;
    n.args = {a.ptr(), b.ptr()};
    return Expr(node(std::move(n)));
}

Expr operator+(const Expr& a, const Expr& b) { return make_binary(BinaryOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return make_binary(BinaryOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return make_binary(BinaryOp::Mul, a, b); }

}  // namespace cusp
