#include "k3calc/mukai.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace k3calc {

MukaiVector MukaiVector::negated() const {
    MukaiVector n{-r, c1, -s};
    for (Int& x : n.c1) x = -x;
    return n;
}

K3Model::K3Model(std::string name_, IntLattice picard_, Vec polarization_,
                 std::optional<MukaiVector> spherical_u_)
    : name(std::move(name_)),
      picard(std::move(picard_)),
      polarization(std::move(polarization_)),
      spherical_u(std::move(spherical_u_)) {
    for (int i = 0; i < picard.rank(); ++i)
        if (picard.gram.at(i, i) % 2 != 0)
            throw Error("K3 Picard lattice must be even: diagonal entry " + std::to_string(i + 1) +
                        " is odd");
    if (pairing(picard, polarization, polarization) <= 0)
        throw Error("polarization must have positive self-pairing");
    if (spherical_u && static_cast<int>(spherical_u->c1.size()) != picard.rank())
        throw Error("vector/lattice rank mismatch");
}

bool K3Model::operator==(const K3Model& o) const {
    return name == o.name && picard == o.picard && polarization == o.polarization &&
           spherical_u == o.spherical_u;
}

namespace {

void check_model_vector(const K3Model& m, const MukaiVector& v) {
    if (static_cast<int>(v.c1.size()) != m.rho()) throw Error("model mismatch: wrong Picard rank for Mukai vector");
}

}  // namespace

Int mukai_pairing(const K3Model& m, const MukaiVector& v, const MukaiVector& w) {
    check_model_vector(m, v);
    check_model_vector(m, w);
    return pairing(m.picard, v.c1, w.c1) - v.r * w.s - w.r * v.s;
}

Int euler_characteristic(const K3Model& m, const MukaiVector& v, const MukaiVector& w) {
    return -mukai_pairing(m, v, w);
}

MukaiVector line_bundle_vector(const K3Model& m, const Vec& c1) {
    Int sq = pairing(m.picard, c1, c1);
    if (sq % 2 != 0) throw Error("internal invariant violation: odd self-pairing on an even lattice");
    return MukaiVector{1, c1, sq / 2 + 1};
}

Rat slope(const K3Model& m, const Vec& a, const MukaiVector& v) {
    check_model_vector(m, v);
    Int a2 = pairing(m.picard, a, a);
    if (v.r == 0 || a2 == 0) throw Error("slope undefined");
    return Rat(pairing(m.picard, a, v.c1)) / Rat(a2 * v.r);
}

IntLattice algebraic_mukai_lattice(const K3Model& m) {
    int rho = m.rho();
    IntMat g(rho + 2, rho + 2);
    g.at(0, rho + 1) = -1;
    g.at(rho + 1, 0) = -1;
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j) g.at(1 + i, 1 + j) = m.picard.gram.at(i, j);
    std::vector<std::string> labels;
    labels.push_back("1");
    for (const std::string& l : m.picard.labels) labels.push_back(l);
    labels.push_back("pt");
    return IntLattice(std::move(g), std::move(labels));
}

Vec mukai_coords(const K3Model& m, const MukaiVector& v) {
    check_model_vector(m, v);
    Vec c;
    c.push_back(v.r);
    for (const Int& x : v.c1) c.push_back(x);
    c.push_back(v.s);
    return c;
}

MukaiVector mukai_from_coords(const K3Model& m, const Vec& coords) {
    if (static_cast<int>(coords.size()) != m.rho() + 2)
        throw Error("model mismatch: wrong coordinate length for Mukai vector");
    MukaiVector v;
    v.r = coords.front();
    v.c1.assign(coords.begin() + 1, coords.end() - 1);
    v.s = coords.back();
    return v;
}

namespace {

std::map<std::string, K3Model> make_bundled_models() {
    std::map<std::string, K3Model> models;
    {
        IntLattice pic(IntMat::from_rows({{4}}), {"A"});
        models.emplace("quartic_branch", K3Model("quartic_branch", pic, Vec{1}));
    }
    {
        IntLattice pic(IntMat::from_rows({{10}}), {"B"});
        MukaiVector u{2, Vec{-1}, 3};
        models.emplace("gm_surface", K3Model("gm_surface", pic, Vec{1}, u));
    }
    {
        IntLattice pic(IntMat::from_rows({{4, 3}, {3, 0}}), {"D", "E"});
        MukaiVector u{2, Vec{-1, -1}, 3};
        models.emplace("quartic_with_line", K3Model("quartic_with_line", pic, Vec{1, 0}, u));
    }
    return models;
}

const std::map<std::string, K3Model>& bundled_models() {
    static const std::map<std::string, K3Model> models = make_bundled_models();
    return models;
}

}  // namespace

const K3Model& bundled_model(const std::string& name) {
    auto it = bundled_models().find(name);
    if (it == bundled_models().end()) throw Error("unknown bundled model '" + name + "'");
    return it->second;
}

std::vector<std::string> bundled_model_names() {
    std::vector<std::string> names;
    for (const auto& [name, model] : bundled_models()) names.push_back(name);
    return names;
}

bool is_bundled_model(const std::string& name) { return bundled_models().count(name) > 0; }

namespace {

// Recursive-descent parser for class expressions:
//   expr  := term (('+'|'-') term)*
//   term  := integer? label | integer | '(' expr ')'
// A leading '-' negates the first term; "-(D+2E)" negates the whole group.
struct ClassParser {
    const IntLattice& picard;
    const std::string& src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error("bad class expression '" + src + "': " + why);
    }

    Vec zero() const { return Vec(picard.rank(), 0); }

    Vec parse_expr() {
        Vec acc = zero();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = src[pos] == '-' ? -1 : 1;
            ++pos;
        }
        add_term(acc, sign);
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            add_term(acc, c == '-' ? -1 : 1);
        }
        return acc;
    }

    void add_term(Vec& acc, int sign) {
        skip_ws();
        if (pos >= src.size()) fail("expected a term");
        Int coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(src[pos]))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            coeff = Int(src.substr(start, pos - start));
            saw_coeff = true;
        }
        skip_ws();
        if (pos < src.size() && src[pos] == '(') {
            ++pos;
            Vec inner = parse_expr();
            if (peek() != ')') fail("missing ')'");
            ++pos;
            for (int i = 0; i < picard.rank(); ++i) acc[i] += sign * coeff * inner[i];
            return;
        }
        if (pos < src.size() &&
            (std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            size_t start = pos;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                        src[pos] == '_' || src[pos] == '\''))
                ++pos;
            std::string label = src.substr(start, pos - start);
            for (int i = 0; i < picard.rank(); ++i)
                if (picard.labels[i] == label) {
                    acc[i] += sign * coeff;
                    return;
                }
            fail("unknown label '" + label + "'");
        }
        if (saw_coeff) {
            if (coeff != 0) fail("bare integer term must be 0");
            return;  // "0" contributes nothing
        }
        fail("expected a label, integer, or '('");
    }
};

}  // namespace

Vec parse_class_expr(const IntLattice& picard, const std::string& expr) {
    ClassParser p{picard, expr};
    Vec v = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return v;
}

std::string format_class(const IntLattice& picard, const Vec& c) {
    if (static_cast<int>(c.size()) != picard.rank()) throw Error("vector/lattice rank mismatch");
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < picard.rank(); ++i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? "-" : "+");
        }
        Int mag = abs(a);
        if (mag != 1) os << mag.str();
        os << picard.labels[i];
        first = false;
    }
    if (first) return "0";
    return os.str();
}

MukaiVector parse_mukai_vector_expr(const K3Model& m, const std::string& expr) {
    std::string s = expr;
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("bad Mukai vector '" + expr + "': empty");
    s = s.substr(b, e - b + 1);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error("bad Mukai vector '" + expr + "': expected \"(r, c1, s)\"");
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() != 3) throw Error("bad Mukai vector '" + expr + "': expected three components");
    auto parse_int = [&](const std::string& t) -> Int {
        std::string w;
        for (char ch : t)
            if (!std::isspace(static_cast<unsigned char>(ch))) w += ch;
        if (w.empty()) throw Error("bad Mukai vector '" + expr + "': empty integer component");
        try {
            return Int(w);
        } catch (const std::exception&) {
            throw Error("bad Mukai vector '" + expr + "': '" + t + "' is not an integer");
        }
    };
    MukaiVector v;
    v.r = parse_int(parts[0]);
    v.c1 = parse_class_expr(m.picard, parts[1]);
    v.s = parse_int(parts[2]);
    return v;
}

std::string format_mukai_vector(const K3Model& m, const MukaiVector& v) {
    std::ostringstream os;
    os << "(" << v.r.str() << ", " << format_class(m.picard, v.c1) << ", " << v.s.str() << ")";
    return os.str();
}

}  // namespace k3calc
