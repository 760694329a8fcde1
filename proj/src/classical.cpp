#include "radial/classical.hpp"

#include <stdexcept>

#include "json.hpp"

namespace radial {

AMatrix::AMatrix(int r_, int s_, std::vector<std::vector<int>> a_) : r(r_), s(s_), a(std::move(a_)) {
    if (r < 1) throw std::invalid_argument("AMatrix: r must be >= 1");
    if (s < 2) throw std::invalid_argument("AMatrix: s must be >= 2");
    if (a.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("AMatrix: wrong row count");
    for (const auto& row : a) {
        if (row.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("AMatrix: wrong column count");
        for (int e : row)
            if (e < 0 || e >= s) throw std::invalid_argument("AMatrix: entry outside [0, s)");
    }
}

std::string AMatrix::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["s"] = s;
    j["a"] = a;
    return j.dump();
}

AMatrix AMatrix::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return AMatrix(j.at("r").get<int>(), j.at("s").get<int>(),
                   j.at("a").get<std::vector<std::vector<int>>>());
}

BinaryMatrix circulant_block(int s, int shift) {
    if (shift < 0 || shift >= s) throw std::invalid_argument("circulant_block: shift outside [0, s)");
    BinaryMatrix m(s, s);
    for (int i = 0; i < s; ++i) m.set(i, (i + shift) % s, true);
    return m;
}

BinaryMatrix binary_pcm(const AMatrix& a) {
    const int r = a.r, s = a.s;
    const std::size_t n = static_cast<std::size_t>(r) * s;
    BinaryMatrix m(n, n);
    for (int bi = 0; bi < r; ++bi)
        for (int bj = 0; bj < r; ++bj) {
            const int shift = a.a[bi][bj];
            for (int i = 0; i < s; ++i)
                m.set(static_cast<std::size_t>(bi) * s + i,
                      static_cast<std::size_t>(bj) * s + (i + shift) % s, true);
        }
    return m;
}

bool square_condition(const AMatrix& a) {
    const int r = a.r, s = a.s;
    for (int u1 = 0; u1 < r; ++u1)
        for (int u2 = u1 + 1; u2 < r; ++u2)
            for (int c1 = 0; c1 < r; ++c1)
                for (int c2 = c1 + 1; c2 < r; ++c2) {
                    int val = a.a[u1][c1] - a.a[u1][c2] - a.a[u2][c1] + a.a[u2][c2];
                    if (((val % s) + s) % s == 0) return false;
                }
    return true;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Rank of the exponent matrix over GF(s); s must be prime for this to be a field.
int rank_mod_s(const AMatrix& a) {
    const int r = a.r, s = a.s;
    std::vector<std::vector<int>> m = a.a;
    int rk = 0;
    for (int col = 0; col < r && rk < r; ++col) {
        int pivot = -1;
        for (int i = rk; i < r; ++i)
            if (m[i][col] % s != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rk], m[pivot]);
        // Scale pivot row to 1 via modular inverse (Fermat).
        long long inv = 1, base = m[rk][col] % s, e = s - 2;
        while (e) {
            if (e & 1) inv = inv * base % s;
            base = base * base % s;
            e >>= 1;
        }
        for (int j = 0; j < r; ++j) m[rk][j] = static_cast<int>(m[rk][j] * inv % s);
        for (int i = 0; i < r; ++i) {
            if (i == rk || m[i][col] == 0) continue;
            int factor = m[i][col];
            for (int j = 0; j < r; ++j) m[i][j] = ((m[i][j] - factor * m[rk][j]) % s + s) % s;
        }
        ++rk;
    }
    return rk;
}

}  // namespace

ValidityReport validate(const AMatrix& a) {
    ValidityReport rep;
    rep.square_condition = square_condition(a);
    rep.s_prime = is_prime(a.s);
    rep.r_le_s = a.r <= a.s;
    rep.rows_independent = rep.s_prime && rank_mod_s(a) == a.r;
    if (rep.square_condition && rep.s_prime && rep.r_le_s && rep.rows_independent) {
        const std::size_t n = static_cast<std::size_t>(a.r) * a.s;
        rep.dependency_count = rank(binary_pcm(a)) == n - (a.r - 1);
    } else {
        rep.dependency_count = false;
    }
    return rep;
}

ClassicalRadialCode make_classical_code(const AMatrix& a) {
    ClassicalRadialCode code;
    code.a = a;
    code.h = binary_pcm(a);
    code.report = validate(a);
    return code;
}

std::vector<BinaryVector> codeword_basis(const ClassicalRadialCode& code) {
    const int r = code.r(), s = code.s();
    std::vector<BinaryVector> basis;
    for (int i = 0; i + 1 < r; ++i) {
        BinaryVector v(code.n());
        for (int v_idx = 0; v_idx < s; ++v_idx) {
            v.set(code.bit_index(i, v_idx), true);
            v.set(code.bit_index(r - 1, v_idx), true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

AMatrix random_a_matrix(int r, int s, Rng& rng, int max_attempts) {
    if (r > s) throw std::invalid_argument("random_a_matrix: requires r <= s");
    if (!is_prime(s)) throw std::invalid_argument("random_a_matrix: requires s prime");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::vector<int>> entries(r, std::vector<int>(r));
        for (auto& row : entries)
            for (int& e : row) e = static_cast<int>(rng.next_below(static_cast<uint64_t>(s)));
        AMatrix a(r, s, std::move(entries));
        if (validate(a).valid()) return a;
    }
    throw SamplingBudgetError("random_a_matrix: sampling budget exceeded");
}

}  // namespace radial
