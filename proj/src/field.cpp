#include "scsi/field.hpp"

#include <array>
#include <map>
#include <mutex>

namespace scsi {

Field::Field(unsigned m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 2 || m > 16) throw DomainError("extension degree m must be in [2, 16]");
    if ((modulus >> m) != 1u)
        throw DomainError("modulus must have degree exactly m");
    q_ = 1u << m;

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);

    std::vector<bool> seen(q_, false);
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        if (b == 0 || seen[b])
            throw NonPrimitiveModulus("generator order below q-1; modulus is not primitive");
        seen[b] = true;
        exp_[i] = static_cast<Symbol>(b);
        log_[b] = i;
        b <<= 1;
        if (b & q_) b ^= modulus;
    }
    if (b != 1)
        throw NonPrimitiveModulus("generator does not return to 1 after q-1 steps");
    for (std::uint32_t i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

std::uint32_t Field::default_modulus(unsigned m) {
    // One published primitive polynomial per degree.
    static constexpr std::array<std::uint32_t, 17> table = {
        0,       0,      0x7,    0xB,    0x13,   0x25,  0x43,  0x89, 0x11D,
        0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
    };
    if (m < 2 || m > 16) throw DomainError("extension degree m must be in [2, 16]");
    return table[m];
}

const Field& Field::of(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, Field(m, default_modulus(m))).first;
    return it->second;
}

Symbol Field::pow(Symbol a, long long e) const {
    assert(a < q_);
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return 0;
    }
    long long ord = q_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    return exp_[static_cast<std::uint64_t>(log_[a]) * r % ord];
}

Symbol Field::poly_eval(std::span<const Symbol> coeffs, Symbol at) const {
    Symbol acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, at), coeffs[i]);
    return acc;
}

}  // namespace scsi
