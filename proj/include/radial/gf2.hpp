#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace radial {

// Bit-packed vector over GF(2).
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;

    BinaryVector& operator^=(const BinaryVector& other);
    friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }
    bool operator==(const BinaryVector& other) const;

    // Parity of the overlap <a, b> mod 2.
    static bool dot(const BinaryVector& a, const BinaryVector& b);

    std::vector<uint32_t> support() const;
    static BinaryVector from_support(std::size_t len, const std::vector<uint32_t>& support);

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

// Dense bit-packed matrix over GF(2), row-major.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_words_((cols + 63) / 64), bits_(rows * row_words_, 0) {}

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(const std::vector<BinaryVector>& rows, std::size_t cols);
    static BinaryMatrix from_row_support(std::size_t rows, std::size_t cols,
                                         const std::vector<std::vector<uint32_t>>& support);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * row_words_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t mask = uint64_t{1} << (j & 63);
        if (v)
            bits_[i * row_words_ + (j >> 6)] |= mask;
        else
            bits_[i * row_words_ + (j >> 6)] &= ~mask;
    }

    BinaryVector row(std::size_t i) const;
    void xor_row_into(std::size_t i, BinaryVector& acc) const;
    std::size_t row_weight(std::size_t i) const;
    std::size_t col_weight(std::size_t j) const;

    BinaryMatrix transpose() const;
    bool operator==(const BinaryMatrix& other) const;

    // Explicit sparse view: set column indices per row, ascending.
    std::vector<std::vector<uint32_t>> row_support() const;

    // Stacks other below this matrix (column counts must agree).
    BinaryMatrix vstack(const BinaryMatrix& other) const;

    const uint64_t* row_ptr(std::size_t i) const { return bits_.data() + i * row_words_; }
    uint64_t* row_ptr(std::size_t i) { return bits_.data() + i * row_words_; }
    std::size_t row_words() const { return row_words_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t row_words_ = 0;
    std::vector<uint64_t> bits_;
};

struct RrefResult {
    BinaryMatrix reduced;
    std::vector<uint32_t> pivot_cols;   // strictly increasing
    BinaryMatrix transform;             // reduced = transform * input
};

std::size_t rank(const BinaryMatrix& m);

// Reduced row echelon form with deterministic tie-breaking:
// leftmost pivot column first, lowest-index row chosen as pivot.
RrefResult rref(const BinaryMatrix& m);

// cols - rank(m) independent vectors v with m * v = 0.
std::vector<BinaryVector> nullspace_basis(const BinaryMatrix& m);

BinaryMatrix matmul(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryVector matvec(const BinaryMatrix& m, const BinaryVector& v);

bool in_rowspace(const BinaryMatrix& m, const BinaryVector& v);

// Row-echelon basis of the rowspace, reusable for repeated membership tests.
class RowspaceTester {
public:
    explicit RowspaceTester(const BinaryMatrix& m);
    bool contains(const BinaryVector& v) const;
    // Reduces v in place against the basis; result is zero iff v was in the rowspace.
    void reduce(BinaryVector& v) const;
    std::size_t rank() const { return pivots_.size(); }

private:
    std::vector<BinaryVector> basis_;
    std::vector<uint32_t> pivots_;
};

// Plain-text "alist-like" format: first line "rows cols", then one line of
// set-column indices per row, ascending.
std::string to_alist(const BinaryMatrix& m);
BinaryMatrix from_alist(const std::string& text);

// JSON form {"rows": r, "cols": c, "row_support": [[...], ...]}.
std::string to_json(const BinaryMatrix& m);
BinaryMatrix matrix_from_json(const std::string& text);

}  // namespace radial
