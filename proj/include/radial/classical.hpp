#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radial/gf2.hpp"
#include "radial/rng.hpp"

namespace radial {

// (ring, spoke) coordinate of a bit or check; linear index is u*s + v.
struct RadialCoordinate {
    int u = 0;
    int v = 0;
};

// Exponent matrix of a classical radial code: r rings, s spokes,
// entries a[i][j] in [0, s) giving the circulant shift between the checks
// of ring i and the bits of ring j.
struct AMatrix {
    int r = 0;
    int s = 0;
    std::vector<std::vector<int>> a;

    AMatrix() = default;
    AMatrix(int r_, int s_, std::vector<std::vector<int>> a_);

    std::string to_json() const;
    static AMatrix from_json(const std::string& text);
};

struct ValidityReport {
    bool square_condition = false;
    bool s_prime = false;
    bool r_le_s = false;
    bool rows_independent = false;     // over GF(s)
    bool dependency_count = false;     // rank(binary pcm) == rs - (r-1)
    bool valid() const {
        return square_condition && s_prime && r_le_s && rows_independent && dependency_count;
    }
};

struct ClassicalRadialCode {
    AMatrix a;
    BinaryMatrix h;                    // rs x rs
    ValidityReport report;

    int r() const { return a.r; }
    int s() const { return a.s; }
    std::size_t n() const { return static_cast<std::size_t>(a.r) * a.s; }
    std::size_t bit_index(int u, int v) const { return static_cast<std::size_t>(u) * a.s + v; }
    RadialCoordinate coordinate(std::size_t i) const {
        return {static_cast<int>(i / a.s), static_cast<int>(i % a.s)};
    }
};

// s x s permutation matrix with entry (i, (i+shift) mod s) = 1.
BinaryMatrix circulant_block(int s, int shift);

// Binary expansion of the exponent matrix: block (i, j) = circulant_block(s, a[i][j]).
BinaryMatrix binary_pcm(const AMatrix& a);

// True iff a(u1,u1') - a(u1,u2') - a(u2,u1') + a(u2,u2') != 0 mod s for all
// u1 != u2, u1' != u2'; forbids 4-cycles in the Tanner graph.
bool square_condition(const AMatrix& a);

bool is_prime(int n);

ValidityReport validate(const AMatrix& a);

ClassicalRadialCode make_classical_code(const AMatrix& a);

// r-1 codewords: basis vector i sets every bit in ring i and ring r-1.
std::vector<BinaryVector> codeword_basis(const ClassicalRadialCode& code);

struct SamplingBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection-samples entries i.i.d. uniform on [0, s) until validate() passes.
AMatrix random_a_matrix(int r, int s, Rng& rng, int max_attempts = 100000);

}  // namespace radial
