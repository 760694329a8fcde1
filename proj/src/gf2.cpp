#include "radial/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace radial {

namespace {

void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
}

}  // namespace

std::size_t BinaryVector::weight() const {
    std::size_t w = 0;
    for (uint64_t word : words_) w += std::popcount(word);
    return w;
}

bool BinaryVector::is_zero() const {
    for (uint64_t word : words_)
        if (word) return false;
    return true;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BinaryVector xor: length mismatch");
    xor_words(words_.data(), other.words_.data(), words_.size());
    return *this;
}

bool BinaryVector::operator==(const BinaryVector& other) const {
    return len_ == other.len_ && words_ == other.words_;
}

bool BinaryVector::dot(const BinaryVector& a, const BinaryVector& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("BinaryVector dot: length mismatch");
    uint64_t acc = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) acc ^= a.words_[k] & b.words_[k];
    return std::popcount(acc) & 1;
}

std::vector<uint32_t> BinaryVector::support() const {
    std::vector<uint32_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        uint64_t word = words_[k];
        while (word) {
            out.push_back(static_cast<uint32_t>(k * 64 + std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

BinaryVector BinaryVector::from_support(std::size_t len, const std::vector<uint32_t>& support) {
    BinaryVector v(len);
    for (uint32_t idx : support) {
        if (idx >= len) throw std::out_of_range("BinaryVector::from_support: index out of range");
        v.set(idx, true);
    }
    return v;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BinaryVector>& rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
        std::copy(rows[i].words().begin(), rows[i].words().end(), m.row_ptr(i));
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_row_support(std::size_t rows, std::size_t cols,
                                            const std::vector<std::vector<uint32_t>>& support) {
    if (support.size() != rows) throw std::invalid_argument("from_row_support: row count mismatch");
    BinaryMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (uint32_t j : support[i]) {
            if (j >= cols) throw std::out_of_range("from_row_support: column index out of range");
            m.set(i, j, true);
        }
    return m;
}

BinaryVector BinaryMatrix::row(std::size_t i) const {
    BinaryVector v(cols_);
    std::copy(row_ptr(i), row_ptr(i) + row_words_, v.words().begin());
    return v;
}

void BinaryMatrix::xor_row_into(std::size_t i, BinaryVector& acc) const {
    xor_words(acc.words().data(), row_ptr(i), row_words_);
}

std::size_t BinaryMatrix::row_weight(std::size_t i) const {
    std::size_t w = 0;
    const uint64_t* p = row_ptr(i);
    for (std::size_t k = 0; k < row_words_; ++k) w += std::popcount(p[k]);
    return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t j) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < rows_; ++i) w += get(i, j);
    return w;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const uint64_t* p = row_ptr(i);
        for (std::size_t k = 0; k < row_words_; ++k) {
            uint64_t word = p[k];
            while (word) {
                std::size_t j = k * 64 + std::countr_zero(word);
                t.set(j, i, true);
                word &= word - 1;
            }
        }
    }
    return t;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

std::vector<std::vector<uint32_t>> BinaryMatrix::row_support() const {
    std::vector<std::vector<uint32_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i).support();
    return out;
}

BinaryMatrix BinaryMatrix::vstack(const BinaryMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("vstack: column count mismatch");
    BinaryMatrix m(rows_ + other.rows_, cols_);
    std::copy(bits_.begin(), bits_.end(), m.bits_.begin());
    std::copy(other.bits_.begin(), other.bits_.end(), m.bits_.begin() + bits_.size());
    return m;
}

std::size_t rank(const BinaryMatrix& m) {
    // Elimination without the transform bookkeeping.
    BinaryMatrix work = m;
    const std::size_t words = work.row_words();
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.get(pivot, col)) ++pivot;
        if (pivot == work.rows()) continue;
        if (pivot != r)
            for (std::size_t k = 0; k < words; ++k)
                std::swap(work.row_ptr(r)[k], work.row_ptr(pivot)[k]);
        for (std::size_t i = r + 1; i < work.rows(); ++i)
            if (work.get(i, col)) xor_words(work.row_ptr(i), work.row_ptr(r), words);
        ++r;
    }
    return r;
}

RrefResult rref(const BinaryMatrix& m) {
    RrefResult res;
    res.reduced = m;
    res.transform = BinaryMatrix::identity(m.rows());
    BinaryMatrix& work = res.reduced;
    BinaryMatrix& tf = res.transform;
    const std::size_t words = work.row_words();
    const std::size_t twords = tf.row_words();
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.get(pivot, col)) ++pivot;
        if (pivot == work.rows()) continue;
        if (pivot != r) {
            for (std::size_t k = 0; k < words; ++k)
                std::swap(work.row_ptr(r)[k], work.row_ptr(pivot)[k]);
            for (std::size_t k = 0; k < twords; ++k)
                std::swap(tf.row_ptr(r)[k], tf.row_ptr(pivot)[k]);
        }
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i != r && work.get(i, col)) {
                xor_words(work.row_ptr(i), work.row_ptr(r), words);
                xor_words(tf.row_ptr(i), tf.row_ptr(r), twords);
            }
        }
        res.pivot_cols.push_back(static_cast<uint32_t>(col));
        ++r;
    }
    return res;
}

std::vector<BinaryVector> nullspace_basis(const BinaryMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (uint32_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<BinaryVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        BinaryVector v(m.cols());
        v.set(free_col, true);
        // Pivot row k constrains pivot column k: x_pivot = sum of free entries in that row.
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            if (rr.reduced.get(k, free_col)) v.set(rr.pivot_cols[k], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

BinaryMatrix matmul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    BinaryMatrix out(a.rows(), b.cols());
    const std::size_t words = b.row_words();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* dst = out.row_ptr(i);
        const uint64_t* ap = a.row_ptr(i);
        for (std::size_t k = 0; k < a.row_words(); ++k) {
            uint64_t word = ap[k];
            while (word) {
                std::size_t j = k * 64 + std::countr_zero(word);
                xor_words(dst, b.row_ptr(j), words);
                word &= word - 1;
            }
        }
    }
    return out;
}

BinaryVector matvec(const BinaryMatrix& m, const BinaryVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
    BinaryVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        uint64_t acc = 0;
        const uint64_t* p = m.row_ptr(i);
        for (std::size_t k = 0; k < m.row_words(); ++k) acc ^= p[k] & v.words()[k];
        if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
}

bool in_rowspace(const BinaryMatrix& m, const BinaryVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_rowspace: dimension mismatch");
    return RowspaceTester(m).contains(v);
}

RowspaceTester::RowspaceTester(const BinaryMatrix& m) {
    RrefResult rr = rref(m);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        basis_.push_back(rr.reduced.row(k));
        pivots_.push_back(rr.pivot_cols[k]);
    }
}

void RowspaceTester::reduce(BinaryVector& v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v.get(pivots_[k])) v ^= basis_[k];
}

bool RowspaceTester::contains(const BinaryVector& v) const {
    BinaryVector w = v;
    reduce(w);
    return w.is_zero();
}

std::string to_alist(const BinaryMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto support = m.row(i).support();
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (k) out << ' ';
            out << support[k];
        }
        out << '\n';
    }
    return out.str();
}

BinaryMatrix from_alist(const std::string& text) {
    std::istringstream in(text);
    std::size_t rows = 0, cols = 0;
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("alist: missing header");
    {
        std::istringstream hs(header);
        if (!(hs >> rows >> cols)) throw std::invalid_argument("alist: bad header");
    }
    BinaryMatrix m(rows, cols);
    std::string line;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("alist: missing row line");
        std::istringstream ls(line);
        long long j;
        long long prev = -1;
        while (ls >> j) {
            if (j < 0 || static_cast<std::size_t>(j) >= cols)
                throw std::out_of_range("alist: column index out of range");
            if (j <= prev) throw std::invalid_argument("alist: indices not strictly ascending");
            prev = j;
            m.set(i, static_cast<std::size_t>(j), true);
        }
    }
    return m;
}

std::string to_json(const BinaryMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["row_support"] = m.row_support();
    return j.dump();
}

BinaryMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return BinaryMatrix::from_row_support(j.at("rows").get<std::size_t>(),
                                          j.at("cols").get<std::size_t>(),
                                          j.at("row_support").get<std::vector<std::vector<uint32_t>>>());
}

}  // namespace radial
