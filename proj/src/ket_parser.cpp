#include "qent/ket_parser.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <map>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "qent/errors.hpp"

namespace qent {

namespace {

using i128 = __int128;

long long checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw NumericError("exact coefficient arithmetic overflowed");
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational integer(long long n) { return {n, 1}; }
    static Rational make(i128 n, i128 d) {
        if (d == 0) throw NumericError("division by zero in coefficient");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {checked(n), checked(d)};
    }

    bool is_zero() const { return num == 0; }
    Rational operator+(const Rational& o) const {
        return make(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                    static_cast<i128>(den) * o.den);
    }
    Rational operator*(const Rational& o) const {
        return make(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den);
    }
    Rational operator-() const { return {-num, den}; }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational inverse() const { return make(den, num); }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct CRational {
    Rational re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CRational operator+(const CRational& o) const { return {re + o.re, im + o.im}; }
    CRational operator*(const CRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRational operator-() const { return {-re, -im}; }
    CRational conj() const { return {re, -im}; }
};

// Pull square factors out of n: n = mult^2 * squarefree.
std::pair<long long, long long> square_free(long long n) {
    if (n > 1'000'000'000'000LL)
        throw NumericError("sqrt argument too large for exact arithmetic");
    long long mult = 1;
    for (long long p = 2; p * p <= n; ++p)
        while (n % (p * p) == 0) {
            n /= p * p;
            mult *= p;
        }
    return {n, mult};
}

/// Exact value in Q(i) extended by square roots: a sum over square-free
/// radicands r of (a + b i) * sqrt(r).
struct RadicalScalar {
    std::map<long long, CRational> terms;

    static RadicalScalar one() { return from_crational({Rational::integer(1), Rational{}}); }
    static RadicalScalar from_crational(CRational c) {
        RadicalScalar s;
        if (!c.is_zero()) s.terms[1] = c;
        return s;
    }
    static RadicalScalar from_rational(Rational r) { return from_crational({r, Rational{}}); }
    static RadicalScalar imaginary_unit() {
        return from_crational({Rational{}, Rational::integer(1)});
    }

    // sqrt(p/q) = sqrt(p q) / q, exact for nonnegative rationals.
    static RadicalScalar sqrt_of(Rational x) {
        if (x.num < 0) throw NumericError("square root of a negative coefficient");
        if (x.is_zero()) return {};
        const long long radicand = checked(static_cast<i128>(x.num) * x.den);
        auto [sf, mult] = square_free(radicand);
        RadicalScalar s;
        s.terms[sf] = {Rational::make(mult, x.den), Rational{}};
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(long long radicand, CRational c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(radicand, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    RadicalScalar operator+(const RadicalScalar& o) const {
        RadicalScalar out = *this;
        for (const auto& [r, c] : o.terms) out.add_term(r, c);
        return out;
    }
    RadicalScalar operator*(const RadicalScalar& o) const {
        RadicalScalar out;
        for (const auto& [r1, c1] : terms)
            for (const auto& [r2, c2] : o.terms) {
                const long long g = std::gcd(r1, r2);
                const long long rad = checked(static_cast<i128>(r1 / g) * (r2 / g));
                out.add_term(rad, c1 * c2 * CRational{Rational::integer(g), Rational{}});
            }
        return out;
    }
    RadicalScalar operator-() const {
        RadicalScalar out;
        for (const auto& [r, c] : terms) out.terms[r] = -c;
        return out;
    }

    // 1 / (c sqrt(r)) = (conj(c) / |c|^2) sqrt(r) / r. The grammar only ever
    // divides by single-term scalars.
    RadicalScalar reciprocal() const {
        if (terms.size() != 1) throw NumericError("cannot divide by a compound coefficient");
        const auto& [r, c] = *terms.begin();
        const Rational mag = c.re * c.re + c.im * c.im;
        const Rational inv_scale = Rational::make(mag.den, static_cast<i128>(mag.num) * r);
        RadicalScalar out;
        out.terms[r] = c.conj() * CRational{inv_scale, Rational{}};
        return out;
    }

    std::complex<double> value() const {
        std::complex<double> v = 0.0;
        for (const auto& [r, c] : terms)
            v += std::complex<double>(c.re.value(), c.im.value()) *
                 std::sqrt(static_cast<double>(r));
        return v;
    }
};

struct Node;
using NodePtr = std::unique_ptr<Node>;
struct KetNode {
    std::size_t index;  // flat basis index
};
struct SumNode {
    std::vector<std::pair<int, NodePtr>> terms;  // (sign, term)
};
struct ScaledNode {
    RadicalScalar scale;
    NodePtr child;
};
struct Node {
    std::variant<SumNode, ScaledNode, KetNode> v;
};

using Amplitudes = std::map<std::size_t, RadicalScalar>;

void accumulate(const Node& node, const RadicalScalar& scale, Amplitudes& out) {
    if (const auto* ket = std::get_if<KetNode>(&node.v)) {
        auto [it, inserted] = out.emplace(ket->index, scale);
        if (!inserted) it->second = it->second + scale;
        return;
    }
    if (const auto* scaled = std::get_if<ScaledNode>(&node.v)) {
        accumulate(*scaled->child, scale * scaled->scale, out);
        return;
    }
    for (const auto& [sign, term] : std::get<SumNode>(node.v).terms)
        accumulate(*term, sign < 0 ? -scale : scale, out);
}

class Parser {
public:
    Parser(const std::string& text, const QuditRegister& reg) : text_(text), reg_(reg) {}

    NodePtr run() {
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return root;
    }

private:
    const std::string& text_;
    const QuditRegister& reg_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool lookahead_word(const char* w) {
        skip_ws();
        return text_.compare(pos_, std::strlen(w), w) == 0;
    }

    NodePtr parse_expr() {
        SumNode sum;
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        sum.terms.emplace_back(sign, parse_term());
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            sum.terms.emplace_back(c == '-' ? -1 : 1, parse_term());
        }
        if (sum.terms.size() == 1 && sum.terms[0].first > 0) return std::move(sum.terms[0].second);
        return std::make_unique<Node>(Node{std::move(sum)});
    }

    NodePtr parse_term() {
        RadicalScalar scale = RadicalScalar::one();
        bool scaled = false;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || lookahead_word("sqrt")) {
            scale = parse_coeff();
            scaled = true;
            consume('*');
        }
        NodePtr atom = parse_atom();
        while (consume('/')) {
            scale = scale * parse_scalar().reciprocal();
            scaled = true;
        }
        if (!scaled) return atom;
        return std::make_unique<Node>(Node{ScaledNode{std::move(scale), std::move(atom)}});
    }

    NodePtr parse_atom() {
        if (consume('(')) {
            NodePtr inner = parse_expr();
            if (!consume(')')) fail("expected \")\"");
            return inner;
        }
        if (peek() == '|') return parse_ket();
        fail("expected a ket or \"(\"");
    }

    NodePtr parse_ket() {
        consume('|');
        const std::size_t digits_start = pos_;
        std::vector<int> digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_] - '0');
            ++pos_;
        }
        if (digits.empty()) fail("expected digits inside |...>");
        if (pos_ >= text_.size() || text_[pos_] != '>') fail("expected \">\"");
        ++pos_;
        if (static_cast<int>(digits.size()) != reg_.sites()) {
            pos_ = digits_start;
            fail("ket literal has " + std::to_string(digits.size()) +
                 " digits but the register has " + std::to_string(reg_.sites()) + " sites");
        }
        for (std::size_t k = 0; k < digits.size(); ++k)
            if (digits[k] >= reg_.dim(static_cast<int>(k) + 1)) {
                pos_ = digits_start + k;
                fail("digit " + std::to_string(digits[k]) + " out of range for site " +
                     std::to_string(k + 1) + " of dimension " +
                     std::to_string(reg_.dim(static_cast<int>(k) + 1)));
            }
        return std::make_unique<Node>(Node{KetNode{reg_.index_of(digits)}});
    }

    // coeff := scalar | "i" | scalar "i"
    RadicalScalar parse_coeff() {
        if (peek() == 'i') {
            ++pos_;
            return RadicalScalar::imaginary_unit();
        }
        RadicalScalar s = parse_scalar();
        if (peek() == 'i') {
            ++pos_;
            s = s * RadicalScalar::imaginary_unit();
        }
        return s;
    }

    // scalar := number | number "/" number | "sqrt(" number ")" | number "/sqrt(" number ")"
    // (also the natural sqrt(number)/... forms)
    RadicalScalar parse_scalar() {
        RadicalScalar value;
        if (lookahead_word("sqrt"))
            value = RadicalScalar::sqrt_of(parse_sqrt_argument());
        else if (std::isdigit(static_cast<unsigned char>(peek())))
            value = RadicalScalar::from_rational(parse_number());
        else
            fail("expected a number or sqrt(...)");
        // "/number" or "/sqrt(number)" belongs to this scalar; a "/" followed by
        // anything else belongs to the enclosing term.
        const std::size_t save = pos_;
        if (consume('/')) {
            if (lookahead_word("sqrt"))
                return value * RadicalScalar::sqrt_of(parse_sqrt_argument()).reciprocal();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const Rational d = parse_number();
                if (d.is_zero()) fail("division by zero");
                return value * RadicalScalar::from_rational(d.inverse());
            }
            pos_ = save;
        }
        return value;
    }

    Rational parse_sqrt_argument() {
        skip_ws();
        pos_ += 4;  // "sqrt", verified by the caller's lookahead
        if (!consume('(')) fail("expected \"(\" after sqrt");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        const Rational arg = parse_number();
        if (!consume(')')) fail("expected \")\"");
        return arg;
    }

    // number := digit+ ("." digit*)?
    Rational parse_number() {
        skip_ws();
        i128 intpart = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            intpart = intpart * 10 + (text_[pos_] - '0');
            checked(intpart);
            ++pos_;
        }
        Rational r = Rational::integer(checked(intpart));
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            i128 frac = 0, denom = 1;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                frac = frac * 10 + (text_[pos_] - '0');
                denom *= 10;
                checked(denom);
                ++pos_;
            }
            r = r + Rational::make(frac, denom);
        }
        return r;
    }
};

}  // namespace

struct KetExpression::Impl {
    QuditRegister reg;
    NodePtr root;
};

KetExpression::KetExpression(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
KetExpression::KetExpression(KetExpression&&) noexcept = default;
KetExpression& KetExpression::operator=(KetExpression&&) noexcept = default;
KetExpression::~KetExpression() = default;

KetExpression KetExpression::parse(const std::string& text, const QuditRegister& reg) {
    Parser parser(text, reg);
    return KetExpression(std::make_unique<Impl>(Impl{reg, parser.run()}));
}

PureState KetExpression::evaluate() const {
    Amplitudes amps;
    accumulate(*impl_->root, RadicalScalar::one(), amps);
    Eigen::VectorXcd v =
        Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(impl_->reg.total_dimension()));
    for (const auto& [index, scalar] : amps) v(static_cast<Eigen::Index>(index)) = scalar.value();
    if (v.norm() <= 1e-150) throw ParseError("expression evaluates to the zero vector");
    return PureState(impl_->reg, std::move(v));
}

PureState parse_ket_expression(const std::string& text, const QuditRegister& reg) {
    return KetExpression::parse(text, reg).evaluate();
}

}  // namespace qent
