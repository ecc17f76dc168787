#pragma once

#include <memory>
#include <string>

#include "qent/pure_state.hpp"
#include "qent/register.hpp"

namespace qent {

/// Parsed bra-ket expression: an AST of sums, scalar multiples, and basis
/// kets. Coefficients are kept exact over rationals extended by square roots
/// and i; they become floating point only in evaluate().
///
/// Grammar (whitespace insignificant, digits base-10, one digit per site):
///   expr   := term (("+" | "-") term)* ;
///   term   := coeff? "*"? atom ("/" scalar)? ;
///   atom   := ket | "(" expr ")" ;
///   ket    := "|" digit+ ">" ;
///   coeff  := scalar | "i" | scalar "i" ;
///   scalar := number | number "/" number | "sqrt(" number ")" | number "/sqrt(" number ")" ;
class KetExpression {
public:
    static KetExpression parse(const std::string& text, const QuditRegister& reg);

    KetExpression(KetExpression&&) noexcept;
    KetExpression& operator=(KetExpression&&) noexcept;
    ~KetExpression();

    /// Evaluates coefficients, normalizes, rejects the zero vector.
    PureState evaluate() const;

private:
    struct Impl;
    explicit KetExpression(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;
};

/// parse + evaluate in one step.
PureState parse_ket_expression(const std::string& text, const QuditRegister& reg);

}  // namespace qent
