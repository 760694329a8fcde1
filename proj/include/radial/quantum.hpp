#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "radial/classical.hpp"
#include "radial/gf2.hpp"

namespace radial {

enum class Sector : uint8_t { ZCode = 0, XCode = 1 };

// Qubits carry (sector, code, ring, spoke); Z-code qubits occupy the left
// column block of H_X/H_Z and X-code qubits the right block.
struct QubitCoordinate {
    Sector kind = Sector::ZCode;
    int c = 0;
    int u = 0;
    int v = 0;
};

struct StabCoordinate {
    int c = 0;  // X code index for X stabilisers, Z code index for Z stabilisers
    int u = 0;
    int v = 0;
};

struct RadialCssCode {
    int r = 0;
    int s = 0;
    AMatrix a1, a2;
    BinaryMatrix h_x;  // r^2 s x 2 r^2 s
    BinaryMatrix h_z;
    std::vector<QubitCoordinate> qubit_coords;
    std::vector<StabCoordinate> x_stab_coords;
    std::vector<StabCoordinate> z_stab_coords;
    std::vector<BinaryVector> logical_x;
    std::vector<BinaryVector> logical_z;

    std::size_t n() const { return 2 * static_cast<std::size_t>(r) * r * s; }
    std::size_t k() const { return 2 * static_cast<std::size_t>(r - 1) * (r - 1); }
    std::size_t stabs_per_sector() const { return static_cast<std::size_t>(r) * r * s; }
    std::size_t d_upper() const { return 2 * static_cast<std::size_t>(s); }

    std::size_t z_qubit_index(int z, int u, int v) const {
        return (static_cast<std::size_t>(z) * r + u) * s + v;
    }
    std::size_t x_qubit_index(int x, int u, int v) const {
        return stabs_per_sector() + (static_cast<std::size_t>(x) * r + u) * s + v;
    }
    std::size_t stab_index(int c, int u, int v) const {
        return (static_cast<std::size_t>(c) * r + u) * s + v;
    }
};

// (A*)_(i,j) = (s - A_(j,i)) mod s: transpose with element-wise inverse.
AMatrix conjugate_transpose(const AMatrix& a);

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lifted product of two valid classical radial codes with the same (r, s).
// Verifies the CSS condition, k = 2(r-1)^2 by rank counting, and the
// canonical logical basis; rejects pathological instances.
RadialCssCode lifted_product(const AMatrix& a1, const AMatrix& a2);

// Canonical weight-2s logical bases, recomputed from an existing code.
// type-1 X logicals live on ring pairs of one Z code; type-2 X logicals on
// one ring of two adjacent X codes; Z logicals mirrored.
std::pair<std::vector<BinaryVector>, std::vector<BinaryVector>> logical_basis(
    const RadialCssCode& code);

RadialCssCode preset(const std::string& name);
std::vector<std::string> preset_names();

// The four intermediate vectors of the toy-code weight-reduction walk:
// two spoke-0 stabiliser products, their sum, and the weight-4 logical.
struct WeightReductionFixture {
    BinaryVector step1;
    BinaryVector step2;
    BinaryVector step3;
    BinaryVector step4;
};
WeightReductionFixture weight_reduction_fixture();

}  // namespace radial
