#pragma once

#include "ddt/cyclotomic.hpp"
#include "ddt/rootsystem.hpp"

#include <string>
#include <vector>

namespace ddt {

// Irreducible (or formal reducible tau_0, tau_ell) representation of the
// even dihedral group D_{2l} of order 4l.
struct DihedralIrrep {
    enum class Family { rho, tau };
    Family family = Family::rho;
    int k = 0;

    static DihedralIrrep rho(int k) { return {Family::rho, k}; }
    static DihedralIrrep tau(int k) { return {Family::tau, k}; }
    bool operator==(const DihedralIrrep& o) const { return family == o.family && k == o.k; }
    bool operator<(const DihedralIrrep& o) const {
        if (family != o.family) return family < o.family;
        return k < o.k;
    }
    std::string name() const;
};

struct McKayArrow {
    enum class Color { blue, black };
    int src = 0;
    int dst = 0;
    Color color = Color::black;
    int mult = 0;
};

struct McKayQuiver {
    int ell = 0;
    std::vector<DihedralIrrep> vertices;   // rho0, rho1, tau_1..tau_{l-1}, rho2, rho3
    std::vector<McKayArrow> arrows;
};

// Exact character theory of D_{2l} over Q(z), z = e^{i pi / l}.
class DihedralCharacters {
public:
    explicit DihedralCharacters(int ell);

    int ell() const { return ell_; }
    int class_count() const { return ell_ + 3; }
    int irrep_count() const { return ell_ + 3; }

    const std::vector<DihedralIrrep>& irreps() const { return irreps_; }
    long class_size(int c) const { return class_sizes_.at(static_cast<std::size_t>(c)); }

    // Character value of an irrep (or formal tau_0 / tau_ell) on class c.
    Cyclotomic character(const DihedralIrrep& rep, int c) const;
    int dimension(const DihedralIrrep& rep) const;

    // <chi, psi> = (1/|G|) sum over classes of size * chi * conj(psi);
    // must come out rational, and integral for genuine characters.
    Rat inner_product_of_values(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;
    Rat inner_product(const DihedralIrrep& a, const DihedralIrrep& b) const;

    // Decomposition of rep (x) V, V = rho1 + tau1, as a sorted multiset.
    std::vector<DihedralIrrep> tensor_with_v(const DihedralIrrep& rep) const;

private:
    std::vector<Cyclotomic> char_values(const DihedralIrrep& rep) const;

    int ell_;
    std::vector<DihedralIrrep> irreps_;
    std::vector<long> class_sizes_;
    // class representatives: rotation exponent for rotation classes,
    // reflection parity for the two reflection classes
    std::vector<int> rot_exponent_;   // -1 for reflection classes
    std::vector<int> refl_parity_;    // -1 for rotation classes
};

// The McKay quiver of (D_{2l}, V = rho1 + tau1); blue arrows from the rho1
// summand, black from tau1.
McKayQuiver mckay_quiver(int ell);

// Rejects odd dihedral groups D_n (n odd): no second cut exists there.
// Returns ell with n = 2*ell otherwise.
int dihedral_index_for_group(int n);

struct CutReport {
    int cycle_count = 0;             // oriented 3-cycles up to cyclic shift
    int potential_triangle_count = 0;   // those with one blue and two black arrows
    // Any other 3-cycle must be a cube of a blue loop (zero potential term).
    bool shape_ok = false;
    bool i_cut_ok = false;       // I = black arrows going right to left
    bool iprime_cut_ok = false;  // I' = blue arrows
    bool ok() const { return shape_ok && i_cut_ok && iprime_cut_ok; }
};

struct Reduction {
    QuiverD quiver;                  // Q'' = Q \ (I u I')
    std::vector<int> vertex_index;   // McKay vertex -> Q'' vertex 0..r
    std::vector<int> sigma;          // blue-arrow involution on Q'' vertices
    CutReport cut;
};

// Removes the double cut; verifies the cut condition on every potential
// triangle and throws if it fails.
Reduction extract_reduction(const McKayQuiver& m);

} // namespace ddt
