#ifndef SCSI_FIELD_HPP
#define SCSI_FIELD_HPP

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "scsi/errors.hpp"

namespace scsi {

// A field element is a plain integer in [0, q): the coordinates of the
// element in the polynomial basis, packed as a bit mask. Elements carry no
// field tag; mixing elements of different fields is a contract violation
// (range-asserted in debug builds only).
using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

// GF(2^m) for 2 <= m <= 16 with exp/log table arithmetic.
//
// The modulus must be a primitive polynomial of degree m over GF(2),
// encoded as an integer bit mask (x^8+x^4+x^3+x^2+1 -> 0x11D). Primitivity
// is verified at construction: the element x must have multiplicative
// order exactly q-1, otherwise NonPrimitiveModulus is thrown.
class Field {
public:
    Field(unsigned m, std::uint32_t modulus);

    // Shared instance with the published default modulus for this m.
    static const Field& of(unsigned m);
    static std::uint32_t default_modulus(unsigned m);

    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }

    // x itself; a primitive element by construction.
    Symbol generator() const { return exp_[1]; }

    static Symbol add(Symbol a, Symbol b) { return a ^ b; }
    static Symbol sub(Symbol a, Symbol b) { return a ^ b; }
    // Characteristic 2: every element is its own additive inverse.
    static Symbol neg(Symbol a) { return a; }

    Symbol mul(Symbol a, Symbol b) const {
        assert(a < q_ && b < q_);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Symbol inv(Symbol a) const {
        assert(a < q_);
        if (a == 0) throw DivisionByZero("inv(0) is undefined");
        return exp_[(q_ - 1) - log_[a]];
    }

    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    Symbol pow(Symbol a, long long e) const;

    // alpha^i for the generator alpha = x; i may be any nonnegative index.
    Symbol exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

    unsigned log(Symbol a) const {
        assert(a != 0 && a < q_);
        return log_[a];
    }

    // Horner evaluation; coeffs[i] is the coefficient of degree i.
    Symbol poly_eval(std::span<const Symbol> coeffs, Symbol at) const;

private:
    unsigned m_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<Symbol> exp_;      // exp_[i] = x^i, doubled so mul skips the mod
    std::vector<unsigned> log_;    // log_[0] unused
};

}  // namespace scsi

#endif
