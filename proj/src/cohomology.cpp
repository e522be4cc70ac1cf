#include "k3calc/cohomology.hpp"

#include <cctype>
#include <sstream>

#include "k3calc/intmat.hpp"

namespace k3calc {

AbelianGroupModel AbelianGroupModel::from_parts(Int free_rank, std::vector<Int> cyclic_orders,
                                                bool divisible_units) {
    if (free_rank < 0) throw Error("free rank must be nonnegative");
    std::vector<Int> orders;
    for (const Int& d : cyclic_orders) {
        if (d <= 0) throw Error("cyclic order must be positive");
        if (d >= 2) orders.push_back(d);
    }
    AbelianGroupModel g;
    g.free_rank = free_rank;
    g.divisible_units = divisible_units;
    if (!orders.empty()) {
        // SNF of diag(orders) yields the invariant-factor chain.
        int k = static_cast<int>(orders.size());
        IntMat diag(k, k);
        for (int i = 0; i < k; ++i) diag.at(i, i) = orders[i];
        g.torsion = smith_normal_form(diag).invariant_factors();
        std::erase_if(g.torsion, [](const Int& d) { return d == 1; });
    }
    return g;
}

AbelianGroupModel m_torsion(const AbelianGroupModel& a, const Int& m) {
    if (m <= 0) throw Error("m-torsion requires m >= 1");
    std::vector<Int> orders;
    for (const Int& d : a.torsion) orders.push_back(gcd(d, m));
    if (a.divisible_units) orders.push_back(m);
    return AbelianGroupModel::from_parts(0, orders, false);
}

AbelianGroupModel mod_m_quotient(const AbelianGroupModel& a, const Int& m) {
    if (m <= 0) throw Error("mod-m quotient requires m >= 1");
    std::vector<Int> orders;
    for (const Int& d : a.torsion) orders.push_back(gcd(d, m));
    if (m >= 2) {
        if (a.free_rank > 1000000) throw Error("free rank too large to expand");
        for (Int i = 0; i < a.free_rank; ++i) orders.push_back(m);
    }
    return AbelianGroupModel::from_parts(0, orders, false);
}

AbelianGroupModel cyclic_cohomology(const Int& m, const Int& n, const AbelianGroupModel& a) {
    if (m < 2) throw Error("cyclic cohomology requires group order m >= 2");
    if (n < 0) throw Error("cohomological degree must be nonnegative");
    if (n == 0) return a;
    if (n % 2 != 0) return m_torsion(a, m);
    return mod_m_quotient(a, m);
}

AbelianGroupModel direct_sum(const AbelianGroupModel& a, const AbelianGroupModel& b) {
    if (a.divisible_units && b.divisible_units)
        throw Error("direct sum of two divisible-units summands is not representable");
    std::vector<Int> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    AbelianGroupModel g = AbelianGroupModel::from_parts(a.free_rank + b.free_rank, orders,
                                                        a.divisible_units || b.divisible_units);
    return g;
}

AbelianGroupModel parse_group_expr(const std::string& expr) {
    Int free_rank = 0;
    std::vector<Int> orders;
    bool divisible = false;

    auto parse_int = [&](const std::string& t, const std::string& what) -> Int {
        if (t.empty()) throw Error("bad coefficient group '" + expr + "': empty " + what);
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error("bad coefficient group '" + expr + "': '" + t + "' is not a positive integer");
        return Int(t);
    };

    size_t start = 0;
    std::string s = expr;
    s.push_back('+');  // sentinel
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '+') continue;
        std::string term = s.substr(start, i - start);
        start = i + 1;
        std::string t;
        for (char c : term)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw Error("bad coefficient group '" + expr + "': empty term");
        if (t == "0") continue;
        if (t == "Cx") {
            if (divisible)
                throw Error("bad coefficient group '" + expr + "': more than one Cx term");
            divisible = true;
        } else if (t == "Z") {
            free_rank += 1;
        } else if (t.rfind("Z^", 0) == 0) {
            free_rank += parse_int(t.substr(2), "free rank");
        } else if (t.rfind("Z/", 0) == 0) {
            Int d = parse_int(t.substr(2), "torsion order");
            if (d < 1) throw Error("bad coefficient group '" + expr + "': torsion order must be >= 1");
            orders.push_back(d);
        } else {
            throw Error("bad coefficient group '" + expr + "': unknown term '" + t + "'");
        }
    }
    return AbelianGroupModel::from_parts(free_rank, orders, divisible);
}

std::string format_group(const AbelianGroupModel& a) {
    if (a.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (a.divisible_units) {
        sep();
        os << "Cx";
    }
    if (a.free_rank == 1) {
        sep();
        os << "Z";
    } else if (a.free_rank > 1) {
        sep();
        os << "Z^" << a.free_rank.str();
    }
    for (const Int& d : a.torsion) {
        sep();
        os << "Z/" << d.str();
    }
    return os.str();
}

}  // namespace k3calc
