#include "k3calc/isometry.hpp"

#include <sstream>

namespace k3calc {

MukaiIsometry::MukaiIsometry(K3Model model_, IntMat matrix_, int sign_)
    : model(std::move(model_)), matrix(std::move(matrix_)), transcendental_sign(sign_) {
    int n = model.rho() + 2;
    if (matrix.rows() != n || matrix.cols() != n)
        throw Error("isometry matrix dimension mismatch");
    if (sign_ != 1 && sign_ != -1) throw Error("transcendental sign must be +1 or -1");
    const IntMat g = algebraic_mukai_lattice(model).gram;
    if (matrix.transposed() * g * matrix != g)
        throw Error("matrix does not preserve the Mukai pairing");
    Int det = bareiss_determinant(matrix);
    if (det != 1 && det != -1) throw Error("isometry matrix is not invertible over the integers");
}

MukaiIsometry identity_isometry(const K3Model& m) {
    return MukaiIsometry(m, IntMat::identity(m.rho() + 2), +1);
}

MukaiIsometry spherical_twist(const K3Model& m, const MukaiVector& v_sph) {
    if (mukai_pairing(m, v_sph, v_sph) != -2) throw Error("(v,v) != -2: twist class is not spherical");
    int n = m.rho() + 2;
    const IntMat g = algebraic_mukai_lattice(m).gram;
    Vec vc = mukai_coords(m, v_sph);
    std::vector<Int> functional = g * vc;  // (v_sph, e_j) as j varies
    IntMat mat = IntMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat.at(i, j) += vc[i] * functional[j];
    return MukaiIsometry(m, std::move(mat), +1);
}

MukaiIsometry tensor_line_bundle(const K3Model& m, const Vec& c1) {
    int rho = m.rho();
    Int c1sq = pairing(m.picard, c1, c1);
    IntMat mat = IntMat::identity(rho + 2);
    // Column of the H^0-unit: (1, c1, c1^2/2).
    for (int i = 0; i < rho; ++i) mat.at(1 + i, 0) = c1[i];
    mat.at(rho + 1, 0) = c1sq / 2;
    // Column of the i-th Picard basis vector b_i: picks up (b_i . c1) in s.
    for (int i = 0; i < rho; ++i) {
        Int dot = 0;
        for (int j = 0; j < rho; ++j) dot += m.picard.gram.at(i, j) * c1[j];
        mat.at(rho + 1, 1 + i) = dot;
    }
    return MukaiIsometry(m, std::move(mat), +1);
}

MukaiIsometry shift(const K3Model& m) {
    return MukaiIsometry(m, IntMat::identity(m.rho() + 2).negated(), -1);
}

MukaiIsometry compose(const MukaiIsometry& f, const MukaiIsometry& g) {
    if (!(f.model == g.model)) throw Error("model mismatch in composition");
    return MukaiIsometry(f.model, f.matrix * g.matrix,
                         f.transcendental_sign * g.transcendental_sign);
}

MukaiIsometry inverse(const MukaiIsometry& f) {
    return MukaiIsometry(f.model, unimodular_inverse(f.matrix), f.transcendental_sign);
}

MukaiIsometry conjugate(const MukaiIsometry& f, const MukaiIsometry& by) {
    return compose(compose(inverse(by), f), by);
}

bool equals(const MukaiIsometry& f, const MukaiIsometry& g) {
    return f.model == g.model && f.matrix == g.matrix &&
           f.transcendental_sign == g.transcendental_sign;
}

bool is_involution(const MukaiIsometry& f) {
    return f.matrix * f.matrix == IntMat::identity(f.matrix.rows());
}

MukaiVector apply(const MukaiIsometry& f, const MukaiVector& v) {
    return mukai_from_coords(f.model, f.matrix * mukai_coords(f.model, v));
}

namespace {

SublatticeSpan eigenlattice(const MukaiIsometry& f, int eigensign) {
    if (!is_involution(f)) throw Error("eigenlattice requires an involution");
    int n = f.matrix.rows();
    IntMat shifted = f.matrix;
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= eigensign;
    return SublatticeSpan(algebraic_mukai_lattice(f.model), integer_kernel_basis(shifted));
}

}  // namespace

SublatticeSpan invariant_sublattice(const MukaiIsometry& f) { return eigenlattice(f, +1); }
SublatticeSpan anti_invariant_sublattice(const MukaiIsometry& f) { return eigenlattice(f, -1); }

std::vector<std::string> tokenize_word(const std::string& word) {
    std::vector<std::string> tokens;
    std::istringstream is(word);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

MukaiIsometry build_named(const K3Model& m, const std::vector<std::string>& tokens) {
    MukaiIsometry acc = identity_isometry(m);
    auto generator = [&](const std::string& tok) -> MukaiIsometry {
        if (tok == "shift") return shift(m);
        if (tok.rfind("tw:", 0) == 0) {
            std::string arg = tok.substr(3);
            if (arg == "O") return spherical_twist(m, MukaiVector{1, Vec(m.rho(), 0), 1});
            if (arg == "U") {
                if (!m.spherical_u)
                    throw Error("model '" + m.name + "' has no registered spherical class U");
                return spherical_twist(m, *m.spherical_u);
            }
            if (!arg.empty() && arg.front() == '(')
                return spherical_twist(m, parse_mukai_vector_expr(m, arg));
            throw Error("unknown twist class '" + arg + "' in token '" + tok + "'");
        }
        if (tok.rfind("lb:", 0) == 0)
            return tensor_line_bundle(m, parse_class_expr(m.picard, tok.substr(3)));
        throw Error("unknown word token '" + tok + "'");
    };
    // Tokens are listed left-to-right but act right-to-left, so a left fold
    // of compose() applies the rightmost generator first.
    for (const std::string& tok : tokens) acc = compose(acc, generator(tok));
    return acc;
}

}  // namespace k3calc
