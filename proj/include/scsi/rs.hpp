#ifndef SCSI_RS_HPP
#define SCSI_RS_HPP

#include <span>
#include <vector>

#include "scsi/field.hpp"

namespace scsi {

// Coset index of a word under the code: n-k field symbols.
struct Syndrome {
    std::vector<Symbol> values;

    bool is_zero() const {
        for (Symbol v : values)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const Syndrome&) const = default;
};

// An (n, k) Reed-Solomon code over GF(q), n < q, held in both its
// parity-check form (rows alpha^{i(b+j)}, j = 0..n-k-1) and its evaluation
// form (codeword c_i = u(alpha^i) for message polynomials u of degree < k).
// With b = 1 and evaluation points (1, alpha, ..., alpha^{n-1}) the two
// forms describe the same code; this correspondence is test-asserted.
//
// Immutable after construction. The referenced Field must outlive the code.
class RsCode {
public:
    RsCode(const Field& field, unsigned n, unsigned k, unsigned b = 1);

    const Field& field() const { return *field_; }
    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    unsigned b() const { return b_; }
    unsigned d_min() const { return n_ - k_ + 1; }
    Symbol alpha() const { return alpha_; }
    Symbol eval_point(unsigned i) const { return eval_points_[i]; }
    const std::vector<Symbol>& eval_points() const { return eval_points_; }

    // c = (u(alpha_1), ..., u(alpha_n)) for the degree-<k polynomial u.
    Word encode(std::span<const Symbol> message) const;

    // s_j = sum_i x_i alpha^{i(b+j)} = x(alpha^{b+j}).
    Syndrome syndrome(std::span<const Symbol> word) const;

    bool is_codeword(std::span<const Symbol> word) const {
        return syndrome(word).is_zero();
    }

    // Any word a with syndrome(a) = s, solved by Gaussian elimination with
    // leftmost-pivot tie-breaking; deterministic, and the zero syndrome maps
    // to the zero word. H has full row rank (any n-k columns of an MDS
    // parity-check matrix are independent), so a solution always exists.
    Word coset_representative(const Syndrome& s) const;

    // Parity-check entry H[j][i] = alpha^{i(b+j)}.
    Symbol h_entry(unsigned j, unsigned i) const {
        return alpha_pow(static_cast<std::uint64_t>(i) * (b_ + j));
    }

    // alpha^e via the generator's log table.
    Symbol alpha_pow(std::uint64_t e) const {
        return field_->exp(log_alpha_ * (e % n_));
    }

private:
    const Field* field_;
    unsigned n_, k_, b_;
    Symbol alpha_;
    std::uint64_t log_alpha_;  // alpha = generator^log_alpha
    std::vector<Symbol> eval_points_;
};

static inline unsigned hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

static inline unsigned hamming_weight(std::span<const Symbol> a) {
    unsigned w = 0;
    for (Symbol v : a) w += (v != 0);
    return w;
}

}  // namespace scsi

#endif
