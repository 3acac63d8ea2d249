#include "ddt/mckay.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace ddt {

std::string DihedralIrrep::name() const {
    return (family == Family::rho ? "rho" : "tau") + std::to_string(k);
}

DihedralCharacters::DihedralCharacters(int ell) : ell_(ell) {
    if (ell < 1) throw std::invalid_argument("DihedralCharacters: ell >= 1 required");
    irreps_ = {DihedralIrrep::rho(0), DihedralIrrep::rho(1)};
    for (int k = 1; k < ell; ++k) irreps_.push_back(DihedralIrrep::tau(k));
    irreps_.push_back(DihedralIrrep::rho(2));
    irreps_.push_back(DihedralIrrep::rho(3));

    // Conjugacy classes of Z_2 |x Z_{2l}: {1}, {d^l}, {d^k, d^-k} for
    // 0 < k < l, even reflections, odd reflections.
    class_sizes_.push_back(1);
    rot_exponent_.push_back(0);
    refl_parity_.push_back(-1);
    class_sizes_.push_back(1);
    rot_exponent_.push_back(ell);
    refl_parity_.push_back(-1);
    for (int k = 1; k < ell; ++k) {
        class_sizes_.push_back(2);
        rot_exponent_.push_back(k);
        refl_parity_.push_back(-1);
    }
    class_sizes_.push_back(ell);
    rot_exponent_.push_back(-1);
    refl_parity_.push_back(0);
    class_sizes_.push_back(ell);
    rot_exponent_.push_back(-1);
    refl_parity_.push_back(1);

    long order_sum = 0;
    for (long s : class_sizes_) order_sum += s;
    if (order_sum != 4L * ell) throw std::logic_error("DihedralCharacters: class sizes do not sum to |G|");
}

int DihedralCharacters::dimension(const DihedralIrrep& rep) const {
    return rep.family == DihedralIrrep::Family::rho ? 1 : 2;
}

Cyclotomic DihedralCharacters::character(const DihedralIrrep& rep, int c) const {
    int n = 2 * ell_;
    int rot = rot_exponent_.at(static_cast<std::size_t>(c));
    int par = refl_parity_.at(static_cast<std::size_t>(c));
    if (rep.family == DihedralIrrep::Family::rho) {
        // rho_k(d) = +1 for k in {0,1}, -1 for {2,3}; rho_k(s) = +1 for
        // k in {0,2}, -1 for {1,3}.
        int dsign = (rep.k >= 2) ? -1 : 1;
        int ssign = (rep.k % 2 == 1) ? -1 : 1;
        if (rot >= 0) return Cyclotomic(n, Rat(rot % 2 ? dsign : 1));
        // reflection s d^m with m of the class parity
        int v = ssign * (par % 2 ? dsign : 1);
        return Cyclotomic(n, Rat(v));
    }
    // tau_k: d^j -> z^{kj} + z^{-kj}, reflections -> 0.
    if (rot >= 0) {
        long kj = static_cast<long>(rep.k) * rot;
        return Cyclotomic::zeta_power(n, kj) + Cyclotomic::zeta_power(n, -kj);
    }
    return Cyclotomic(n, Rat(0));
}

std::vector<Cyclotomic> DihedralCharacters::char_values(const DihedralIrrep& rep) const {
    std::vector<Cyclotomic> out;
    out.reserve(static_cast<std::size_t>(class_count()));
    for (int c = 0; c < class_count(); ++c) out.push_back(character(rep, c));
    return out;
}

Rat DihedralCharacters::inner_product_of_values(const std::vector<Cyclotomic>& a,
                                                const std::vector<Cyclotomic>& b) const {
    Cyclotomic acc(2 * ell_, Rat(0));
    for (int c = 0; c < class_count(); ++c)
        acc += (a[static_cast<std::size_t>(c)] * b[static_cast<std::size_t>(c)].conj())
                   .scaled(Rat(class_size(c)));
    Cyclotomic avg = acc.scaled(Rat(1, 4 * ell_));
    return avg.rational_value();
}

Rat DihedralCharacters::inner_product(const DihedralIrrep& a, const DihedralIrrep& b) const {
    return inner_product_of_values(char_values(a), char_values(b));
}

std::vector<DihedralIrrep> DihedralCharacters::tensor_with_v(const DihedralIrrep& rep) const {
    // chi_V = chi_{rho1} + chi_{tau1}, pointwise product, then decompose by
    // orthogonality. The closed tensor rules of the representation theory
    // are an independent test oracle for this computation.
    std::vector<Cyclotomic> prod;
    for (int c = 0; c < class_count(); ++c) {
        Cyclotomic v = character(DihedralIrrep::rho(1), c) + character(DihedralIrrep::tau(1), c);
        prod.push_back(character(rep, c) * v);
    }
    std::vector<DihedralIrrep> out;
    long dim_check = 0;
    for (const auto& irr : irreps_) {
        Rat m = inner_product_of_values(prod, char_values(irr));
        if (!is_integer(m) || m < 0)
            throw std::logic_error("tensor_with_v: non-integral multiplicity");
        long mult = static_cast<long>(m.get_num().get_si());
        for (long i = 0; i < mult; ++i) out.push_back(irr);
        dim_check += mult * dimension(irr);
    }
    if (dim_check != 3L * dimension(rep))
        throw std::logic_error("tensor_with_v: dimension mismatch in decomposition");
    std::sort(out.begin(), out.end());
    return out;
}

McKayQuiver mckay_quiver(int ell) {
    DihedralCharacters ch(ell);
    McKayQuiver q;
    q.ell = ell;
    q.vertices = ch.irreps();
    int n = ch.irrep_count();

    // Precompute character value tables once.
    std::vector<std::vector<Cyclotomic>> table;
    for (int i = 0; i < n; ++i) {
        std::vector<Cyclotomic> row;
        for (int c = 0; c < ch.class_count(); ++c) row.push_back(ch.character(q.vertices[static_cast<std::size_t>(i)], c));
        table.push_back(std::move(row));
    }
    auto tensor_mult = [&](int i, int j, const DihedralIrrep& w) {
        // dim Hom(L_i, L_j (x) W) = <chi_i, chi_j * chi_W>
        std::vector<Cyclotomic> prod;
        for (int c = 0; c < ch.class_count(); ++c)
            prod.push_back(table[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] * ch.character(w, c));
        Rat m = ch.inner_product_of_values(table[static_cast<std::size_t>(i)], prod);
        if (!is_integer(m) || m < 0) throw std::logic_error("mckay_quiver: non-integral arrow multiplicity");
        return static_cast<int>(m.get_num().get_si());
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int blue = tensor_mult(i, j, DihedralIrrep::rho(1));
            int black = tensor_mult(i, j, DihedralIrrep::tau(1));
            if (blue) q.arrows.push_back({i, j, McKayArrow::Color::blue, blue});
            if (black) q.arrows.push_back({i, j, McKayArrow::Color::black, black});
        }
    return q;
}

int dihedral_index_for_group(int n) {
    if (n < 2) throw std::invalid_argument("dihedral_index_for_group: n >= 2 required");
    if (n % 2)
        throw std::invalid_argument(
            "dihedral_index_for_group: D_" + std::to_string(n) +
            " is an odd dihedral group; its McKay quiver admits no second cut, so the "
            "double dimensional reduction does not apply. Only even n = 2*ell is supported.");
    return n / 2;
}

namespace {

// Horizontal position of a McKay vertex: rho0, rho1 at 0; tau_k at k;
// rho2, rho3 at ell. "Right to left" black arrows decrease position.
int position(const McKayQuiver& m, int v) {
    const DihedralIrrep& ir = m.vertices[static_cast<std::size_t>(v)];
    if (ir.family == DihedralIrrep::Family::tau) return ir.k;
    return ir.k < 2 ? 0 : m.ell;
}

} // namespace

Reduction extract_reduction(const McKayQuiver& m) {
    int n = static_cast<int>(m.vertices.size());
    int r = m.ell + 2;

    // Vertex indexing rho0 -> 0, rho1 -> 1, tau_k -> k+1, rho2 -> r-1, rho3 -> r.
    std::vector<int> vmap(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const DihedralIrrep& ir = m.vertices[static_cast<std::size_t>(v)];
        if (ir.family == DihedralIrrep::Family::tau)
            vmap[static_cast<std::size_t>(v)] = ir.k + 1;
        else if (ir.k <= 1)
            vmap[static_cast<std::size_t>(v)] = ir.k;
        else
            vmap[static_cast<std::size_t>(v)] = r - 3 + ir.k;   // rho2 -> r-1, rho3 -> r
    }

    // Cut membership per arrow.
    auto in_i = [&](const McKayArrow& a) {
        return a.color == McKayArrow::Color::black && position(m, a.src) > position(m, a.dst);
    };
    auto in_iprime = [&](const McKayArrow& a) { return a.color == McKayArrow::Color::blue; };

    // Surviving black left-to-right arrows form Q''.
    std::set<std::pair<int, int>> kept;
    for (const auto& a : m.arrows) {
        if (in_i(a) || in_iprime(a)) continue;
        for (int c = 0; c < a.mult; ++c)
            if (!kept.insert({vmap[static_cast<std::size_t>(a.src)], vmap[static_cast<std::size_t>(a.dst)]}).second)
                throw std::logic_error("extract_reduction: unexpected parallel arrows in Q''");
    }
    QuiverD expected(r);
    std::set<std::pair<int, int>> expected_set(expected.arrows.begin(), expected.arrows.end());
    if (kept != expected_set)
        throw std::logic_error("extract_reduction: Q'' does not match the D^_r orientation");

    // Sigma from blue arrows between distinct vertices; blue loops fix.
    std::vector<int> sigma(static_cast<std::size_t>(r + 1));
    for (int i = 0; i <= r; ++i) sigma[static_cast<std::size_t>(i)] = i;
    for (const auto& a : m.arrows) {
        if (a.color != McKayArrow::Color::blue || a.src == a.dst) continue;
        sigma[static_cast<std::size_t>(vmap[static_cast<std::size_t>(a.src)])] = vmap[static_cast<std::size_t>(a.dst)];
    }

    // Enumerate oriented 3-cycles up to cyclic shift. The potential is
    // supported on triangles with one blue and two black arrows; each of
    // those must meet I and I' exactly once. The only other 3-cycles are
    // cubes of blue loops, which carry no potential term.
    CutReport rep;
    rep.shape_ok = true;
    rep.i_cut_ok = true;
    rep.iprime_cut_ok = true;
    int na = static_cast<int>(m.arrows.size());
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (int z = 0; z < na; ++z) {
                const auto &ax = m.arrows[static_cast<std::size_t>(x)], &ay = m.arrows[static_cast<std::size_t>(y)],
                           &az = m.arrows[static_cast<std::size_t>(z)];
                if (ax.dst != ay.src || ay.dst != az.src || az.dst != ax.src) continue;
                // keep the lexicographically smallest cyclic shift only
                auto key = std::array<int, 3>{x, y, z};
                if (std::min({key, std::array<int, 3>{y, z, x}, std::array<int, 3>{z, x, y}}) != key) continue;
                ++rep.cycle_count;
                int blue = (ax.color == McKayArrow::Color::blue) + (ay.color == McKayArrow::Color::blue) +
                           (az.color == McKayArrow::Color::blue);
                if (blue == 1) {
                    ++rep.potential_triangle_count;
                    if (in_i(ax) + in_i(ay) + in_i(az) != 1) rep.i_cut_ok = false;
                    if (in_iprime(ax) + in_iprime(ay) + in_iprime(az) != 1) rep.iprime_cut_ok = false;
                } else if (!(blue == 3 && x == y && y == z && ax.src == ax.dst)) {
                    rep.shape_ok = false;
                }
            }
    if (!rep.ok()) throw std::logic_error("extract_reduction: cut condition violated on a potential triangle");

    return Reduction{QuiverD(r), vmap, sigma, rep};
}

} // namespace ddt
