#include "hopfkit/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfkit {

size_t GroupSpec::identity() const {
    for (size_t e = 0; e < order(); ++e) {
        bool ok = true;
        for (size_t i = 0; i < order(); ++i)
            if (table[e][i] != i || table[i][e] != i) {
                ok = false;
                break;
            }
        if (ok) return e;
    }
    throw InvalidGroupTable("no identity element");
}

size_t GroupSpec::inverse(size_t i) const {
    size_t e = identity();
    for (size_t j = 0; j < order(); ++j)
        if (table[i][j] == e && table[j][i] == e) return j;
    throw InvalidGroupTable("element without inverse: " + labels[i]);
}

void GroupSpec::validate() const {
    size_t n = order();
    if (table.size() != n) throw InvalidGroupTable("table size != label count");
    for (const auto& row : table) {
        if (row.size() != n) throw InvalidGroupTable("ragged table");
        for (size_t v : row)
            if (v >= n) throw InvalidGroupTable("index out of range");
    }
    identity();
    for (size_t i = 0; i < n; ++i) inverse(i);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw InvalidGroupTable("not associative");
}

GroupSpec GroupSpec::cyclic(size_t order) {
    if (order == 0) throw InvalidGroupTable("cyclic group of order 0");
    GroupSpec g;
    for (size_t i = 0; i < order; ++i) g.labels.push_back("g" + std::to_string(i));
    g.table.assign(order, std::vector<size_t>(order));
    for (size_t i = 0; i < order; ++i)
        for (size_t j = 0; j < order; ++j) g.table[i][j] = (i + j) % order;
    g.labels[0] = "e";
    if (order > 1) g.aliases["g"] = 1;
    return g;
}

namespace {

std::string perm_label(const std::vector<size_t>& p) {
    // Cycle notation; identity is "e".
    std::vector<bool> seen(p.size(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == s) continue;
        os << "(";
        size_t c = s;
        while (!seen[c]) {
            seen[c] = true;
            os << (c + 1);
            c = p[c];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "e";
}

}  // namespace

GroupSpec GroupSpec::symmetric(size_t degree) {
    if (degree < 1 || degree > 4) throw InvalidGroupTable("symmetric(n) supports 1 <= n <= 4");
    std::vector<size_t> base(degree);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<size_t>> perms;
    std::vector<size_t> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    GroupSpec g;
    for (const auto& q : perms) g.labels.push_back(perm_label(q));
    size_t n = perms.size();
    g.table.assign(n, std::vector<size_t>(n));
    auto index_of = [&](const std::vector<size_t>& q) {
        return static_cast<size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> comp(degree);  // (p_i ∘ p_j)(x) = p_i(p_j(x))
            for (size_t x = 0; x < degree; ++x) comp[x] = perms[i][perms[j][x]];
            g.table[i][j] = index_of(comp);
        }
    if (degree >= 2) g.aliases["s1"] = index_of([&] {
        auto q = base;
        std::swap(q[0], q[1]);
        return q;
    }());
    if (degree >= 3) g.aliases["s2"] = index_of([&] {
        auto q = base;
        std::swap(q[1], q[2]);
        return q;
    }());
    return g;
}

GroupSpec GroupSpec::product(const GroupSpec& a, const GroupSpec& b) {
    GroupSpec g;
    size_t n = a.order() * b.order();
    for (size_t i = 0; i < a.order(); ++i)
        for (size_t j = 0; j < b.order(); ++j) g.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    g.table.assign(n, std::vector<size_t>(n));
    for (size_t i1 = 0; i1 < a.order(); ++i1)
        for (size_t j1 = 0; j1 < b.order(); ++j1)
            for (size_t i2 = 0; i2 < a.order(); ++i2)
                for (size_t j2 = 0; j2 < b.order(); ++j2)
                    g.table[i1 * b.order() + j1][i2 * b.order() + j2] =
                        a.table[i1][i2] * b.order() + b.table[j1][j2];
    return g;
}

GroupSpec GroupSpec::from_table(std::vector<std::string> labels, std::vector<std::vector<size_t>> table) {
    GroupSpec g;
    g.labels = std::move(labels);
    g.table = std::move(table);
    g.validate();
    return g;
}

size_t GroupSpec::element(const std::string& label) const {
    auto it = aliases.find(label);
    if (it != aliases.end()) return it->second;
    auto pos = std::find(labels.begin(), labels.end(), label);
    if (pos == labels.end()) throw ValidationError("unknown group element '" + label + "'");
    return static_cast<size_t>(pos - labels.begin());
}

std::vector<std::vector<size_t>> symmetric_permutations(size_t degree) {
    if (degree < 1 || degree > 4) throw InvalidGroupTable("symmetric(n) supports 1 <= n <= 4");
    std::vector<size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<size_t>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

std::vector<size_t> klein_four_in_s4(const GroupSpec& s4) {
    // (x,y) -> e, (13)(24), (12)(34), (14)(23): a homomorphic image of Z2+Z2.
    return {s4.element("e"), s4.element("(13)(24)"), s4.element("(12)(34)"), s4.element("(14)(23)")};
}

HopfAlgebra group_algebra(const GroupSpec& g, const FieldPtr& f) {
    g.validate();
    size_t n = g.order();
    HopfAlgebra K;
    K.field = f;
    K.n = n;
    K.labels = g.labels;
    K.mult = Matrix(f, n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) K.mult.at(g.table[i][j], i * n + j) = Cyc::one(f);
    K.unit = unit_vec(f, n, g.identity());
    K.comult = Matrix(f, n * n, n);
    for (size_t i = 0; i < n; ++i) K.comult.at(i * n + i, i) = Cyc::one(f);
    K.counit = Vec(n, Cyc::one(f));
    K.antipode = Matrix(f, n, n);
    for (size_t i = 0; i < n; ++i) K.antipode.at(g.inverse(i), i) = Cyc::one(f);
    return K;
}

HopfAlgebra dual_group_algebra(const GroupSpec& g, const FieldPtr& f) {
    HopfAlgebra D = dual_hopf(group_algebra(g, f));
    for (size_t i = 0; i < D.n; ++i) D.labels[i] = "d_" + g.labels[i];
    return D;
}

HopfAlgebra sweedler(const FieldPtr& f) {
    // Basis {1, g, x, gx} with g^2 = 1, x^2 = 0, xg = -gx.
    HopfAlgebra K;
    K.field = f;
    K.n = 4;
    K.labels = {"1", "g", "x", "gx"};
    const size_t ONE = 0, G = 1, X = 2, GX = 3;
    K.mult = Matrix(f, 4, 16);
    auto set = [&](size_t i, size_t j, size_t target, long coeff) {
        K.mult.at(target, i * 4 + j) = Cyc::from_int(f, coeff);
    };
    // 1 is the unit.
    for (size_t i = 0; i < 4; ++i) {
        set(ONE, i, i, 1);
        if (i != ONE) set(i, ONE, i, 1);
    }
    set(G, G, ONE, 1);
    set(G, X, GX, 1);
    set(G, GX, X, 1);
    set(X, G, GX, -1);
    set(X, GX, 0, 0);  // x·gx = 0
    set(GX, G, X, -1);
    set(GX, X, 0, 0);   // gx·x = 0
    set(GX, GX, 0, 0);  // gx·gx = 0
    set(X, X, 0, 0);    // x^2 = 0
    K.unit = unit_vec(f, 4, ONE);
    K.comult = Matrix(f, 16, 4);
    auto dset = [&](size_t i, size_t a, size_t b, long coeff) {
        K.comult.at(a * 4 + b, i) = Cyc::from_int(f, coeff);
    };
    dset(ONE, ONE, ONE, 1);
    dset(G, G, G, 1);
    dset(X, G, X, 1);  // Delta(x) = g⊗x + x⊗1
    dset(X, X, ONE, 1);
    dset(GX, ONE, GX, 1);  // Delta(gx) = 1⊗gx + gx⊗g
    dset(GX, GX, G, 1);
    K.counit = {Cyc::one(f), Cyc::one(f), Cyc::zero(f), Cyc::zero(f)};
    K.antipode = Matrix(f, 4, 4);
    K.antipode.at(ONE, ONE) = Cyc::one(f);
    K.antipode.at(G, G) = Cyc::one(f);
    K.antipode.at(GX, X) = Cyc::from_int(f, -1);  // S(x) = -gx
    K.antipode.at(X, GX) = Cyc::one(f);           // S(gx) = x
    return K;
}

}  // namespace hopfkit
