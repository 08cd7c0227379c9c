#include "scsi/rs.hpp"

#include <string>

namespace scsi {

RsCode::RsCode(const Field& field, unsigned n, unsigned k, unsigned b)
    : field_(&field), n_(n), k_(k), b_(b) {
    if (n == 0 || n >= field.q())
        throw DomainError("RS block length requires 1 <= n < q");
    if (k < 1 || k > n) throw DomainError("RS dimension requires 1 <= k <= n");
    if ((field.q() - 1) % n != 0)
        throw NoOrderNElement("no element of order n: n does not divide q-1 (n=" +
                              std::to_string(n) + ", q=" + std::to_string(field.q()) + ")");
    log_alpha_ = (field.q() - 1) / n;
    alpha_ = field.exp(log_alpha_);
    eval_points_.resize(n);
    Symbol p = 1;
    for (unsigned i = 0; i < n; ++i) {
        eval_points_[i] = p;
        p = field.mul(p, alpha_);
    }

    // order of alpha is exactly n: the walk above returns to 1 only at step n
    for (unsigned i = 1; i < n; ++i)
        if (eval_points_[i] == 1) throw NoOrderNElement("alpha order below n");
    if (p != 1) throw NoOrderNElement("alpha order above n");
}

Word RsCode::encode(std::span<const Symbol> message) const {
    if (message.size() != k_)
        throw LengthMismatch("message length " + std::to_string(message.size()) +
                             " != k = " + std::to_string(k_));
    Word c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = field_->poly_eval(message, eval_points_[i]);
    return c;
}

Syndrome RsCode::syndrome(std::span<const Symbol> word) const {
    if (word.size() != n_)
        throw LengthMismatch("word length " + std::to_string(word.size()) +
                             " != n = " + std::to_string(n_));
    Syndrome s;
    s.values.resize(n_ - k_);
    for (unsigned j = 0; j < n_ - k_; ++j)
        s.values[j] = field_->poly_eval(word, alpha_pow(b_ + j));
    return s;
}

Word RsCode::coset_representative(const Syndrome& s) const {
    const unsigned rows = n_ - k_;
    if (s.values.size() != rows)
        throw LengthMismatch("syndrome length " + std::to_string(s.values.size()) +
                             " != n-k = " + std::to_string(rows));
    Word a(n_, 0);
    if (rows == 0) return a;

    // Augmented [H | s], eliminated with leftmost pivots top-down.
    std::vector<Word> mat(rows, Word(n_ + 1));
    for (unsigned j = 0; j < rows; ++j) {
        for (unsigned i = 0; i < n_; ++i) mat[j][i] = h_entry(j, i);
        mat[j][n_] = s.values[j];
    }

    std::vector<unsigned> pivot_col(rows);
    unsigned rank = 0;
    for (unsigned col = 0; col < n_ && rank < rows; ++col) {
        unsigned sel = rank;
        while (sel < rows && mat[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(mat[rank], mat[sel]);
        Symbol invp = field_->inv(mat[rank][col]);
        for (unsigned i = col; i <= n_; ++i) mat[rank][i] = field_->mul(mat[rank][i], invp);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            Symbol f = mat[r][col];
            for (unsigned i = col; i <= n_; ++i)
                mat[r][i] = Field::add(mat[r][i], field_->mul(f, mat[rank][i]));
        }
        pivot_col[rank] = col;
        ++rank;
    }
    // Full row rank is a structural property of the RS parity-check matrix.
    if (rank != rows) throw InterpolationFailure("RS parity-check matrix lost rank");

    // Free variables stay zero.
    for (unsigned r = 0; r < rows; ++r) a[pivot_col[r]] = mat[r][n_];
    return a;
}

}  // namespace scsi
