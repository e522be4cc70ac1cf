#include "k3calc/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace k3calc {

IntLattice::IntLattice(IntMat g, std::vector<std::string> names) : gram(std::move(g)), labels(std::move(names)) {
    if (!gram.square()) throw Error("lattice gram matrix must be square");
    if (!gram.is_symmetric()) throw Error("lattice gram matrix must be symmetric");
    if (labels.empty()) {
        for (int i = 0; i < gram.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != gram.rows())
        throw Error("lattice labels length must equal rank");
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) throw Error("duplicate basis label '" + labels[i] + "'");
}

SublatticeSpan::SublatticeSpan(IntLattice amb, std::vector<Vec> gens)
    : ambient(std::move(amb)), generators(std::move(gens)) {
    for (const Vec& g : generators)
        if (static_cast<int>(g.size()) != ambient.rank()) throw Error("vector/lattice rank mismatch");
}

std::string Signature::str() const {
    std::ostringstream os;
    os << "(" << pos << ", " << neg << ", " << null << ")";
    return os.str();
}

Int pairing(const IntLattice& l, const Vec& u, const Vec& v) {
    int n = l.rank();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw Error("vector/lattice rank mismatch");
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n; ++j) acc += u[i] * l.gram.at(i, j) * v[j];
    }
    return acc;
}

Int determinant(const IntLattice& l) { return bareiss_determinant(l.gram); }

Signature signature(const IntLattice& l) {
    // Descartes' sign-variation count on the characteristic polynomial is
    // exact here: symmetric integer matrices have only real eigenvalues.
    std::vector<Int> p = characteristic_polynomial(l.gram);
    int n = l.rank();
    int null = 0;
    while (null < n && p[n - null] == 0) ++null;
    int variations = 0;
    int last_sign = 0;
    for (int k = 0; k <= n - null; ++k) {
        if (p[k] == 0) continue;
        int s = p[k] > 0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++variations;
        last_sign = s;
    }
    Signature sig;
    sig.null = null;
    sig.pos = variations;
    sig.neg = n - null - variations;
    return sig;
}

namespace {

IntMat generators_as_columns(const SublatticeSpan& s) {
    int n = s.ambient.rank();
    int k = static_cast<int>(s.generators.size());
    IntMat m(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = s.generators[j][i];
    return m;
}

}  // namespace

SublatticeSpan orthogonal_complement(const SublatticeSpan& s) {
    if (determinant(s.ambient) == 0) throw Error("ambient lattice degenerate");
    int n = s.ambient.rank();
    int k = static_cast<int>(s.generators.size());
    // Row j of the constraint matrix is (gram * g_j)^T, so the kernel is
    // exactly {v : (v, g_j) = 0 for all j}.
    IntMat constraints(k, n);
    for (int j = 0; j < k; ++j) {
        std::vector<Int> gg = s.ambient.gram * s.generators[j];
        for (int i = 0; i < n; ++i) constraints.at(j, i) = gg[i];
    }
    return SublatticeSpan(s.ambient, integer_kernel_basis(constraints));
}

SublatticeSpan saturate(const SublatticeSpan& s) {
    // u*m*v = snf: the Q-span of the generators is spanned by the first
    // `rank` columns of u^{-1}; those columns are a saturated basis.
    IntMat m = generators_as_columns(s);
    SmithResult snf = smith_normal_form(m);
    int rank = static_cast<int>(snf.invariant_factors().size());
    IntMat uinv = unimodular_inverse(snf.u);
    std::vector<Vec> basis;
    for (int j = 0; j < rank; ++j) basis.push_back(uinv.col(j));
    return SublatticeSpan(s.ambient, basis);
}

bool is_primitive(const SublatticeSpan& s) {
    SmithResult snf = smith_normal_form(generators_as_columns(s));
    for (const Int& d : snf.invariant_factors())
        if (d != 1) return false;
    return true;
}

Int saturation_index(const SublatticeSpan& s) {
    SmithResult snf = smith_normal_form(generators_as_columns(s));
    Int idx = 1;
    for (const Int& d : snf.invariant_factors()) idx *= d;
    return idx;
}

int span_rank(const SublatticeSpan& s) {
    return static_cast<int>(smith_normal_form(generators_as_columns(s)).invariant_factors().size());
}

bool member_of_span(const SublatticeSpan& s, const Vec& v) {
    if (static_cast<int>(v.size()) != s.ambient.rank()) throw Error("vector/lattice rank mismatch");
    // m*x = v iff snf*(v^{-1}x) = u*v; solvable over Z iff (u*v)_i is
    // divisible by d_i on the rank rows and zero below.
    IntMat m = generators_as_columns(s);
    SmithResult snf = smith_normal_form(m);
    std::vector<Int> rhs = snf.u * v;
    int rank = static_cast<int>(snf.invariant_factors().size());
    for (int i = 0; i < static_cast<int>(rhs.size()); ++i) {
        if (i < rank) {
            if (rhs[i] % snf.s.at(i, i) != 0) return false;
        } else if (rhs[i] != 0) {
            return false;
        }
    }
    return true;
}

bool spans_equal(const SublatticeSpan& a, const SublatticeSpan& b) {
    if (!(a.ambient == b.ambient)) return false;
    for (const Vec& g : a.generators)
        if (!member_of_span(b, g)) return false;
    for (const Vec& g : b.generators)
        if (!member_of_span(a, g)) return false;
    return true;
}

IntLattice gram_of_span(const SublatticeSpan& s, std::vector<std::string> labels) {
    int k = static_cast<int>(s.generators.size());
    IntMat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.at(i, j) = pairing(s.ambient, s.generators[i], s.generators[j]);
    return IntLattice(std::move(g), std::move(labels));
}

IntLattice change_of_basis(const IntLattice& l, const IntMat& b, std::vector<std::string> labels) {
    if (!b.square() || b.rows() != l.rank()) throw Error("change of basis matrix dimension mismatch");
    IntMat g = b.transposed() * l.gram * b;
    if (labels.empty())
        for (int i = 0; i < l.rank(); ++i) labels.push_back("f" + std::to_string(i + 1));
    return IntLattice(std::move(g), std::move(labels));
}

Vec primitive_part(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0 || g == 1) return v;
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

std::pair<Vec, Vec> dual_cone_rank2(const IntLattice& l, const Vec& g0, const Vec& g1) {
    if (l.rank() != 2) throw Error("dual cone requires a rank-2 lattice");
    if (static_cast<int>(g0.size()) != 2 || static_cast<int>(g1.size()) != 2)
        throw Error("vector/lattice rank mismatch");
    if (g0[0] * g1[1] - g0[1] * g1[0] == 0) throw Error("dual cone generators must be independent");

    // The boundary ray against g is the primitive solution of (w, g) = 0,
    // i.e. w perpendicular to the functional gram*g, oriented to pair >= 0
    // with the other generator.
    auto boundary_ray = [&](const Vec& zero_against, const Vec& nonneg_against) -> Vec {
        std::vector<Int> f = l.gram * zero_against;
        if (f[0] == 0 && f[1] == 0) throw Error("dual cone undefined: generators pair degenerately");
        Vec w = primitive_part({f[1], -f[0]});
        Int p = pairing(l, w, nonneg_against);
        if (p == 0) throw Error("dual cone undefined: generators pair degenerately");
        if (p < 0) {
            w[0] = -w[0];
            w[1] = -w[1];
        }
        return w;
    };
    return {boundary_ray(g1, g0), boundary_ray(g0, g1)};
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

std::string format_vec_list(const std::vector<Vec>& vs) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ", ";
        os << format_vec(vs[i]);
    }
    os << "}";
    return os.str();
}

}  // namespace k3calc
