#pragma once

#include "ddt/dimvec.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ddt {

// The quiver Q'' of type D^_r with the fixed orientation
//   r >= 4:  0 -> 2, 1 -> 2, 2 -> 3, ..., (r-3) -> (r-2), (r-2) -> r-1, (r-2) -> r
//   r  = 3:  0 -> 2, 0 -> 3, 1 -> 2, 1 -> 3     (D^_3 = A^_3)
struct QuiverD {
    int r = 0;
    std::vector<std::pair<int, int>> arrows;

    explicit QuiverD(int r);
    int vertex_count() const { return r + 1; }
};

using IntMatrix = std::vector<std::vector<long>>;

struct RootClass {
    enum class Kind { real_root, imaginary_root, sigma_pair_sum, none };
    Kind kind = Kind::none;
    int parity = 0;      // p(d) for real roots
    int level = 0;       // n for d = n*delta
    DimVector witness;   // d' for d = d' + Sigma d'

    static RootClass none() { return RootClass{}; }
    bool is_none() const { return kind == Kind::none; }
    std::string name() const;
};

// Root-theoretic data of D^_r: Euler form, Sigma involution, delta, rho and
// the Coxeter matrix T acting as the AR translation on K-theory.
class RootSystemD {
public:
    explicit RootSystemD(int r);

    int r() const { return quiver_.r; }
    const QuiverD& quiver() const { return quiver_; }
    const IntMatrix& euler_matrix() const { return euler_; }
    const IntMatrix& coxeter_matrix() const { return coxeter_; }
    const DimVector& delta() const { return delta_; }
    const DimVector& rho() const { return rho_; }
    const std::vector<int>& sigma() const { return sigma_perm_; }

    long euler_form(const DimVector& d, const DimVector& e) const;
    // s(d,e) = chi(d,e) - chi(d, Sigma e), the double-cut twist form.
    long s_form(const DimVector& d, const DimVector& e) const;

    int p_parity(const DimVector& d) const;

    DimVector apply_sigma(const DimVector& d) const;
    DimVector apply_coxeter(const DimVector& d) const;        // tau
    DimVector apply_coxeter_inv(const DimVector& d) const;    // tau^{-1}

    // Dimension vectors of the indecomposable projective / injective at i.
    DimVector projective(int i) const;
    DimVector injective(int i) const;

    RootClass classify(const DimVector& d) const;

    // All d with 0 < total(d) <= max_total and classify(d) != none, by box
    // scan, in lexicographic order.
    std::vector<std::pair<DimVector, RootClass>> positive_roots(int max_total) const;

    // Dimension vectors of tau^{-k} P_i and tau^k I_i, i in {0,1,r-1,r},
    // within the degree bound.
    std::set<DimVector> exceptional_orbits(int max_total) const;

    // Quasi-simple dimension vectors of the three non-homogeneous tubes.
    // At r = 3 the third tube degenerates to the single class rho (= delta).
    std::array<std::vector<DimVector>, 3> tube_quasisimples() const;

private:
    void check_dimvec(const DimVector& d) const;

    QuiverD quiver_;
    IntMatrix euler_;
    IntMatrix coxeter_, coxeter_inv_;
    std::vector<int> sigma_perm_;
    DimVector delta_, rho_;
    std::vector<DimVector> proj_, inj_;
};

DimVector apply_matrix(const IntMatrix& m, const DimVector& d);

} // namespace ddt
