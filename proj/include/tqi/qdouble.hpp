#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tqi {

// Finite group given by an explicit multiplication table.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> mul;  // row-major: mul[a * order + b] = ab
    int identity = 0;

    int at(int a, int b) const { return mul[size_t(a) * size_t(order) + size_t(b)]; }
    int inverse(int a) const;
};

// Throws std::invalid_argument unless the table is a group.
void validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric3();
FiniteGroup dihedral4();
FiniteGroup quaternion8();

// Z2, Z3, Z4, Z2xZ2, S3, D4, Q8 (case-insensitive); throws on unknown names.
FiniteGroup group_by_name(const std::string& name);

struct ConjugacyClass {
    int rep = 0;
    std::vector<int> elements;
};

// Conjugacy classes with the identity class first.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

// The subgroup commuting with the given element, re-indexed as a group of
// its own.
FiniteGroup centralizer_subgroup(const FiniteGroup& g, int element);

// Degrees of the complex irreducible representations, ascending. Computed
// from the class algebra; every returned set satisfies the exact sum rule
// sum d^2 = |G|.
std::vector<int> irrep_dimensions(const FiniteGroup& g);

// One excitation type of the double model: a conjugacy class paired with an
// irreducible representation of the centralizer of its representative.
struct Anyon {
    int class_index = 0;
    std::int64_t class_size = 0;
    int irrep_dim = 0;
    std::int64_t quantum_dim = 0;  // class_size * irrep_dim
};

struct AnyonTable {
    std::vector<Anyon> anyons;
    std::int64_t total_dim_sq = 0;      // sum of quantum_dim^2, equals |G|^2
    double invariant_bits = 0.0;        // log2(total_dim_sq)
    std::vector<double> probabilities;  // quantum_dim^2 / total_dim_sq
};

AnyonTable double_model_anyons(const FiniteGroup& g);

using u128 = unsigned __int128;
std::string u128_str(u128 v);

// Sector dimensions of the double model on a thin annulus with n_inner and
// n_outer boundary sites: the full space has dimension |G|^(n_inner+n_outer),
// the vacuum block |G|^(n_inner+n_outer-2), and each sector scales the
// vacuum block by the squared quantum dimension. Throws std::overflow_error
// when a dimension exceeds 128 bits.
struct ThinAnnulusDims {
    u128 total = 0;
    u128 vacuum = 0;
    std::vector<u128> sectors;
};

ThinAnnulusDims thin_annulus_dims(const FiniteGroup& g, int n_inner, int n_outer);

}  // namespace tqi
