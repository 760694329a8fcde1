#include "radial/quantum.hpp"

#include <stdexcept>

namespace radial {

AMatrix conjugate_transpose(const AMatrix& a) {
    std::vector<std::vector<int>> out(a.r, std::vector<int>(a.r));
    for (int i = 0; i < a.r; ++i)
        for (int j = 0; j < a.r; ++j) out[i][j] = (a.s - a.a[j][i]) % a.s;
    return AMatrix(a.r, a.s, std::move(out));
}

namespace {

void check_logicals(const RadialCssCode& code, const std::vector<BinaryVector>& logicals,
                    const BinaryMatrix& same_checks, const BinaryMatrix& opposite_checks) {
    const std::size_t expected = code.k();
    if (logicals.size() != expected) throw ConstructionError("logical basis has wrong size");
    for (const auto& l : logicals) {
        if (l.weight() != code.d_upper()) throw ConstructionError("logical weight != 2s");
        if (!matvec(opposite_checks, l).is_zero())
            throw ConstructionError("logical does not commute with opposite checks");
    }
    BinaryMatrix stacked = same_checks.vstack(BinaryMatrix::from_rows(logicals, code.n()));
    if (rank(stacked) != rank(same_checks) + expected)
        throw ConstructionError("logicals dependent modulo stabilisers");
}

}  // namespace

std::pair<std::vector<BinaryVector>, std::vector<BinaryVector>> logical_basis(
    const RadialCssCode& code) {
    const int r = code.r, s = code.s;
    std::vector<BinaryVector> lx, lz;
    // Type 1 X: all qubits in rings (u, u+1) of Z code z.
    for (int z = 0; z + 1 < r; ++z)
        for (int u = 0; u + 1 < r; ++u) {
            BinaryVector v(code.n());
            for (int spoke = 0; spoke < s; ++spoke) {
                v.set(code.z_qubit_index(z, u, spoke), true);
                v.set(code.z_qubit_index(z, u + 1, spoke), true);
            }
            lx.push_back(std::move(v));
        }
    // Type 2 X: all ring-u qubits of X codes (x, x+1).
    for (int x = 0; x + 1 < r; ++x)
        for (int u = 0; u + 1 < r; ++u) {
            BinaryVector v(code.n());
            for (int spoke = 0; spoke < s; ++spoke) {
                v.set(code.x_qubit_index(x, u, spoke), true);
                v.set(code.x_qubit_index(x + 1, u, spoke), true);
            }
            lx.push_back(std::move(v));
        }
    // Type 1 Z: all qubits in rings (u, u+1) of X code x.
    for (int x = 0; x + 1 < r; ++x)
        for (int u = 0; u + 1 < r; ++u) {
            BinaryVector v(code.n());
            for (int spoke = 0; spoke < s; ++spoke) {
                v.set(code.x_qubit_index(x, u, spoke), true);
                v.set(code.x_qubit_index(x, u + 1, spoke), true);
            }
            lz.push_back(std::move(v));
        }
    // Type 2 Z: all ring-u qubits of Z codes (z, z+1).
    for (int z = 0; z + 1 < r; ++z)
        for (int u = 0; u + 1 < r; ++u) {
            BinaryVector v(code.n());
            for (int spoke = 0; spoke < s; ++spoke) {
                v.set(code.z_qubit_index(z, u, spoke), true);
                v.set(code.z_qubit_index(z + 1, u, spoke), true);
            }
            lz.push_back(std::move(v));
        }
    check_logicals(code, lx, code.h_x, code.h_z);
    check_logicals(code, lz, code.h_z, code.h_x);
    return {std::move(lx), std::move(lz)};
}

RadialCssCode lifted_product(const AMatrix& a1, const AMatrix& a2) {
    if (a1.r != a2.r || a1.s != a2.s)
        throw ConstructionError("lifted_product: mismatched (r, s)");
    if (!validate(a1).valid() || !validate(a2).valid())
        throw ConstructionError("lifted_product: input matrix fails validity conditions");

    RadialCssCode code;
    code.r = a1.r;
    code.s = a1.s;
    code.a1 = a1;
    code.a2 = a2;
    const int r = code.r, s = code.s;
    const std::size_t half = code.stabs_per_sector();
    const AMatrix a1c = conjugate_transpose(a1);
    const AMatrix a2c = conjugate_transpose(a2);

    code.h_x = BinaryMatrix(half, 2 * half);
    code.h_z = BinaryMatrix(half, 2 * half);
    for (int c = 0; c < r; ++c)
        for (int u = 0; u < r; ++u)
            for (int v = 0; v < s; ++v) {
                const std::size_t row = code.stab_index(c, u, v);
                // X stabiliser (x=c, u, v): one ring-u qubit in each Z code,
                // one qubit in each ring of X code c.
                for (int z = 0; z < r; ++z)
                    code.h_x.set(row, code.z_qubit_index(z, u, (v + a1.a[c][z]) % s), true);
                for (int u2 = 0; u2 < r; ++u2)
                    code.h_x.set(row, code.x_qubit_index(c, u2, (v + a2.a[u][u2]) % s), true);
                // Z stabiliser (z=c, u, v): mirrored with conjugate transposes.
                for (int u2 = 0; u2 < r; ++u2)
                    code.h_z.set(row, code.z_qubit_index(c, u2, (v + a2c.a[u][u2]) % s), true);
                for (int x = 0; x < r; ++x)
                    code.h_z.set(row, code.x_qubit_index(x, u, (v + a1c.a[c][x]) % s), true);
            }

    code.qubit_coords.resize(code.n());
    code.x_stab_coords.resize(half);
    code.z_stab_coords.resize(half);
    for (int c = 0; c < r; ++c)
        for (int u = 0; u < r; ++u)
            for (int v = 0; v < s; ++v) {
                code.qubit_coords[code.z_qubit_index(c, u, v)] = {Sector::ZCode, c, u, v};
                code.qubit_coords[code.x_qubit_index(c, u, v)] = {Sector::XCode, c, u, v};
                code.x_stab_coords[code.stab_index(c, u, v)] = {c, u, v};
                code.z_stab_coords[code.stab_index(c, u, v)] = {c, u, v};
            }

    const BinaryMatrix product = matmul(code.h_x, code.h_z.transpose());
    for (std::size_t i = 0; i < product.rows(); ++i)
        if (product.row_weight(i) != 0) throw ConstructionError("lifted_product: CSS condition violated");
    const std::size_t rank_x = rank(code.h_x);
    const std::size_t rank_z = rank(code.h_z);
    if (code.n() - rank_x - rank_z != code.k())
        throw ConstructionError("lifted_product: rank count does not give k = 2(r-1)^2");

    auto [lx, lz] = logical_basis(code);
    code.logical_x = std::move(lx);
    code.logical_z = std::move(lz);
    return code;
}

RadialCssCode preset(const std::string& name) {
    if (name == "toy_2_3") {
        AMatrix a(2, 3, {{0, 0}, {1, 0}});
        return lifted_product(a, a);
    }
    if (name == "qr_90_8_10") {
        AMatrix a1(3, 5, {{3, 2, 1}, {4, 1, 4}, {1, 2, 3}});
        AMatrix a2(3, 5, {{3, 3, 0}, {1, 0, 1}, {4, 2, 0}});
        return lifted_product(a1, a2);
    }
    if (name == "qr_352_18_20") {
        AMatrix a1(4, 11, {{10, 10, 1, 6}, {4, 7, 5, 2}, {8, 10, 6, 9}, {1, 6, 0, 6}});
        AMatrix a2(4, 11, {{9, 5, 8, 3}, {5, 4, 1, 0}, {0, 4, 6, 10}, {2, 8, 4, 2}});
        return lifted_product(a1, a2);
    }
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() { return {"toy_2_3", "qr_90_8_10", "qr_352_18_20"}; }

WeightReductionFixture weight_reduction_fixture() {
    RadialCssCode code = preset("toy_2_3");
    WeightReductionFixture fx;
    // Products of the two spoke-0 X stabilisers of each X code.
    fx.step1 = code.h_x.row(code.stab_index(0, 0, 0));
    fx.step1 ^= code.h_x.row(code.stab_index(0, 1, 0));
    fx.step2 = code.h_x.row(code.stab_index(1, 0, 0));
    fx.step2 ^= code.h_x.row(code.stab_index(1, 1, 0));
    fx.step3 = fx.step1 ^ fx.step2;
    // Type-1 logical on all red qubits plus type-2 logical on ring 0 of the
    // X codes, composed with the stabiliser above.
    fx.step4 = fx.step3 ^ code.logical_x[0] ^ code.logical_x[1];
    return fx;
}

}  // namespace radial
