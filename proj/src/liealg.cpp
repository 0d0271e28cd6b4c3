#include "gsp4kit/liealg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gsp4kit {

LieMatrix bracket(const LieMatrix& a, const LieMatrix& b) { return a * b - b * a; }

LieMatrix elementary(int n, int i, int j, GaussRational c) {
    LieMatrix m(n, n);
    m(i, j) = std::move(c);
    return m;
}

int rank_of(const LieMatrix& m) {
    bool real = std::all_of(m.data().begin(), m.data().end(), [](const GaussRational& z) { return sgn(z.im) == 0; });
    if (!real) return m.rank();
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
    }
    return r.rank();
}

std::string to_string(const LieMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < m.rows(); ++i) {
        out << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    }
    out << "]";
    return out.str();
}

std::vector<GaussRational> solve_in_span(const std::vector<LieMatrix>& basis, const LieMatrix& x, bool* ok) {
    // Augmented system: columns are flattened basis elements, right-hand side is x.
    const int n = static_cast<int>(basis.size());
    const int len = static_cast<int>(x.data().size());
    LieMatrix a(len, n + 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < len; ++i) a(i, j) = basis[static_cast<std::size_t>(j)].data()[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < len; ++i) a(i, n) = x.data()[static_cast<std::size_t>(i)];

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < len; ++c) {
        int p = -1;
        for (int i = r; i < len; ++i) {
            if (!a(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        for (int j = 0; j <= n; ++j) std::swap(a(p, j), a(r, j));
        GaussRational inv = GaussRational(1) / a(r, c);
        for (int j = 0; j <= n; ++j) a(r, j) *= inv;
        for (int i = 0; i < len; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            GaussRational f = a(i, c);
            for (int j = 0; j <= n; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < len; ++i) {
        if (!a(i, n).is_zero()) {
            if (ok != nullptr) *ok = false;
            return {};
        }
    }
    std::vector<GaussRational> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) coords[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = a(i, n);
    if (ok != nullptr) *ok = true;
    return coords;
}

// ------------------------------------------------------- compact-torus data

namespace {

const GaussRational I_UNIT = GaussRational::i();
const GaussRational HALF = GaussRational(make_rational(1, 2));

LieMatrix from_rows(const std::vector<std::vector<GaussRational>>& rows) {
    LieMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

// J_n without its scalar factor, and its inverse up to a scalar.
LieMatrix cayley(int n, bool inverse) {
    GaussRational s = inverse ? -I_UNIT : I_UNIT;
    LieMatrix j = LieMatrix::identity(n);
    const int h = n / 2;
    for (int a = 0; a < h; ++a) {
        j(a, a + h) = s;
        j(a + h, a) = s;
    }
    return j;
}

GSpWeight diagonal_weight(int n, int idx) {
    if (n == 2) return idx == 0 ? GSpWeight{1, 0, 0} : GSpWeight{-1, 0, 1};
    switch (idx) {
        case 0: return {1, 0, 0};
        case 1: return {0, 1, 0};
        case 2: return {-1, 0, 1};
        default: return {0, -1, 1};
    }
}

}  // namespace

LieMatrix v_plus() { return from_rows({{1, I_UNIT}, {I_UNIT, -1}}) * HALF; }
LieMatrix v_minus() { return from_rows({{1, -I_UNIT}, {-I_UNIT, -1}}) * HALF; }
LieMatrix compact_cartan2() { return from_rows({{0, 1}, {-1, 0}}); }

LieMatrix del() {
    return from_rows({{0, 1, 0, I_UNIT}, {-1, 0, I_UNIT, 0}, {0, -I_UNIT, 0, 1}, {-I_UNIT, 0, -1, 0}}) * HALF;
}

LieMatrix del_bar() {
    return from_rows({{0, 1, 0, -I_UNIT}, {-1, 0, -I_UNIT, 0}, {0, I_UNIT, 0, 1}, {I_UNIT, 0, -1, 0}}) * HALF;
}

std::vector<LieMatrix> p4_basis(int sign) {
    const GaussRational s = sign > 0 ? I_UNIT : -I_UNIT;
    std::vector<LieMatrix> out;
    const int zs[3][2][2] = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    for (const auto& z : zs) {
        LieMatrix m(4, 4);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                GaussRational v(z[i][j]);
                m(i, j) = v;
                m(i, j + 2) = s * v;
                m(i + 2, j) = s * v;
                m(i + 2, j + 2) = -v;
            }
        }
        out.push_back(m);
    }
    return out;
}

std::vector<LieMatrix> k4_basis() {
    std::vector<LieMatrix> out;
    // [[A, B], [-B, A]] with A antisymmetric, B symmetric, plus the centre.
    LieMatrix a(4, 4);
    a(0, 1) = 1;
    a(1, 0) = -1;
    a(2, 3) = 1;
    a(3, 2) = -1;
    out.push_back(a);
    const int bs[3][2][2] = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    for (const auto& b : bs) {
        LieMatrix m(4, 4);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                m(i, j + 2) = b[i][j];
                m(i + 2, j) = -b[i][j];
            }
        }
        out.push_back(m);
    }
    out.push_back(LieMatrix::identity(4));
    return out;
}

CompactWeight weight_under_torus(const LieMatrix& x, CompactTorus torus) {
    const int n = torus == CompactTorus::Compact2 ? 2 : 4;
    if (x.rows() != n || x.cols() != n) throw PreconditionError("matrix size does not match the torus");
    const LieMatrix y = cayley(n, true) * x * cayley(n, false);
    bool found = false;
    GSpWeight w;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (y(i, j).is_zero()) continue;
            GSpWeight wij = diagonal_weight(n, i) - diagonal_weight(n, j);
            if (!found) {
                w = wij;
                found = true;
            } else if (w != wij) {
                throw WeightMixing("not a torus eigenvector: entries of weights " + w.to_string() + " and " +
                                   wij.to_string() + " after conjugation " + to_string(y));
            }
        }
    }
    if (!found) throw WeightMixing("zero matrix has no weight");
    CompactWeight c;
    if (n == 2) {
        // lambda(k, s) on T2 is lambda'(k, 2s + k).
        c.rank_one = true;
        c.n = w.k;
        c.c = 2 * w.t + w.k;
    } else {
        c.n = w.k;
        c.np = w.kp;
        c.c = 2 * w.t + w.k + w.kp;
    }
    return c;
}

// ------------------------------------------------------------ gsp4 basis

std::vector<NamedElement> gsp4_basis() {
    auto E = [](int i, int j) { return elementary(4, i, j); };
    std::vector<NamedElement> b;
    LieMatrix h1(4, 4), h2(4, 4);
    h1(0, 0) = 1;
    h1(2, 2) = -1;
    h2(1, 1) = 1;
    h2(3, 3) = -1;
    b.emplace_back("h1", h1);
    b.emplace_back("h2", h2);
    b.emplace_back("z", LieMatrix::identity(4));
    b.emplace_back("e1", E(0, 1) - E(3, 2));
    b.emplace_back("f1", E(1, 0) - E(2, 3));
    b.emplace_back("e2", E(1, 3));
    b.emplace_back("f2", E(3, 1));
    b.emplace_back("e12", E(0, 3) + E(1, 2));
    b.emplace_back("f12", E(3, 0) + E(2, 1));
    b.emplace_back("e112", E(0, 2));
    b.emplace_back("f112", E(2, 0));
    return b;
}

GSpWeight gsp4_root_weight(const std::string& name) {
    static const std::map<std::string, GSpWeight> table = {
        {"h1", {0, 0, 0}},    {"h2", {0, 0, 0}},    {"z", {0, 0, 0}},
        {"e1", {1, -1, 0}},   {"f1", {-1, 1, 0}},   {"e2", {0, 2, -1}},  {"f2", {0, -2, 1}},
        {"e12", {1, 1, -1}},  {"f12", {-1, -1, 1}}, {"e112", {2, 0, -1}}, {"f112", {-2, 0, 1}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw PreconditionError("unknown gsp4 basis element " + name);
    return it->second;
}

std::vector<NamedElement> nilradical_basis(ParabolicKind p) {
    auto pick = [](std::initializer_list<const char*> names) {
        std::vector<NamedElement> out;
        for (const auto& [n, m] : gsp4_basis()) {
            for (const char* want : names) {
                if (n == want) out.emplace_back(n, m);
            }
        }
        return out;
    };
    switch (p) {
        case ParabolicKind::SiegelQ0: return pick({"e2", "e12", "e112"});
        case ParabolicKind::KlingenQ1: return pick({"e1", "e12", "e112"});
        case ParabolicKind::Borel2: return {{"e", elementary(2, 0, 1)}};
        default: throw PreconditionError("no nilradical realization for " + to_string(p));
    }
}

// ------------------------------------------------------------ modules

ModuleRealization sym_module(int m) {
    if (m < 0) throw PreconditionError("sym_module needs m >= 0");
    ModuleRealization mod;
    mod.dimension = m + 1;
    LieMatrix vp(m + 1, m + 1), vm(m + 1, m + 1), hk(m + 1, m + 1), z(m + 1, m + 1);
    for (int j = 0; j <= m; ++j) {
        mod.labels.push_back("a" + std::to_string(j) + "^" + std::to_string(m));
        mod.compact_weights.push_back({m - 2 * j, 0, -m, true});
        // Column j holds the image of a_j.
        if (j >= 1) vp(j - 1, j) = -j;
        if (j <= m - 1) vm(j + 1, j) = -(m - j);
        hk(j, j) = GaussRational(Rational(0), Rational(m - 2 * j));
        z(j, j) = -m;
    }
    mod.action["v+"] = vp;
    mod.action["v-"] = vm;
    mod.action["hK"] = hk;
    mod.action["z"] = z;
    return mod;
}

ModuleRealization gl2_sym_module(int k, int t) {
    if (k < 0) throw PreconditionError("gl2_sym_module needs k >= 0");
    ModuleRealization mod;
    mod.dimension = k + 1;
    LieMatrix e(k + 1, k + 1), f(k + 1, k + 1), h(k + 1, k + 1), z(k + 1, k + 1);
    // Basis X^(k-j) Y^j; e sends Y to X, f sends X to Y, h = diag(1, 0).
    for (int j = 0; j <= k; ++j) {
        mod.labels.push_back("X^" + std::to_string(k - j) + " Y^" + std::to_string(j));
        mod.gl2_weights.push_back({k - 2 * j, j + t});
        if (j >= 1) e(j - 1, j) = j;
        if (j <= k - 1) f(j + 1, j) = k - j;
        h(j, j) = k - j;
        z(j, j) = k + 2 * t;
    }
    mod.action["e"] = e;
    mod.action["f"] = f;
    mod.action["h"] = h;
    mod.action["z"] = z;
    return mod;
}

namespace {

using DenseVec = std::vector<Rational>;

int ipow4(int r) {
    int n = 1;
    for (int i = 0; i < r; ++i) n *= 4;
    return n;
}

// Applies a 4x4 rational matrix to V4^(r) as a derivation.
DenseVec apply_tensor(const RatMatrix& a, const DenseVec& v, int r) {
    DenseVec out(v.size());
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (sgn(v[idx]) == 0) continue;
        int stride = 1;
        for (int pos = 0; pos < r; ++pos) {
            const int digit = static_cast<int>(idx / static_cast<std::size_t>(stride)) % 4;
            for (int i = 0; i < 4; ++i) {
                if (sgn(a(i, digit)) == 0) continue;
                const std::size_t target = idx + static_cast<std::size_t>((i - digit) * stride);
                out[target] += a(i, digit) * v[idx];
            }
            stride *= 4;
        }
    }
    return out;
}

GSpWeight tensor_weight(std::size_t idx, int r) {
    GSpWeight w;
    for (int pos = 0; pos < r; ++pos) {
        w = w + diagonal_weight(4, static_cast<int>(idx % 4));
        idx /= 4;
    }
    return w;
}

RatMatrix real_part(const LieMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
    }
    return r;
}

bool is_zero_vec(const DenseVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Reduced echelon basis of one weight space.
struct WeightSpace {
    std::vector<DenseVec> vecs;
    std::vector<std::size_t> pivots;
    std::vector<int> global;  // index of each vector in the module basis

    void reduce(DenseVec& v) const {
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            const Rational c = v[pivots[i]];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (sgn(vecs[i][j]) != 0) v[j] -= c * vecs[i][j];
            }
        }
    }

    // Returns false when v is already in the span.
    bool insert(DenseVec v, int global_index) {
        reduce(v);
        std::size_t p = 0;
        while (p < v.size() && sgn(v[p]) == 0) ++p;
        if (p == v.size()) return false;
        const Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (auto& w : vecs) {
            const Rational c = w[p];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (sgn(v[j]) != 0) w[j] -= c * v[j];
            }
        }
        vecs.push_back(std::move(v));
        pivots.push_back(p);
        global.push_back(global_index);
        return true;
    }
};

}  // namespace

ModuleRealization irrep_construct(const GSpWeight& lambda, int cap) {
    if (!lambda.dominant()) throw PreconditionError("irrep_construct needs a dominant weight");
    const int r = lambda.k + lambda.kp;
    if (r > cap) throw PreconditionError("tensor power exceeds the cap");
    const int n = ipow4(r);
    const auto basis = gsp4_basis();
    std::map<std::string, RatMatrix> ops;
    for (const auto& [name, m] : basis) ops.emplace(name, real_part(m));

    // Highest-weight vector: common kernel of e1 and e2 on the lambda(k, k', 0) weight space.
    const GSpWeight top{lambda.k, lambda.kp, 0};
    std::vector<std::size_t> support;
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(n); ++idx) {
        if (tensor_weight(idx, r) == top) support.push_back(idx);
    }
    // Linear conditions on coefficients over `support`: e1 v = 0 and e2 v = 0.
    const int s = static_cast<int>(support.size());
    std::vector<DenseVec> images;
    for (std::size_t idx : support) {
        DenseVec unit(static_cast<std::size_t>(n));
        unit[idx] = 1;
        DenseVec img = apply_tensor(ops.at("e1"), unit, r);
        DenseVec img2 = apply_tensor(ops.at("e2"), unit, r);
        img.insert(img.end(), img2.begin(), img2.end());
        images.push_back(std::move(img));
    }
    // Null space of the (2n x s) matrix whose columns are `images`.
    RatMatrix cond(2 * n, s);
    for (int j = 0; j < s; ++j) {
        for (int i = 0; i < 2 * n; ++i) cond(i, j) = images[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    // Row reduce to find pivot columns; the first free column gives the first reduced-echelon kernel vector.
    std::vector<int> pivot_of_row;
    {
        int row = 0;
        for (int c = 0; c < s && row < 2 * n; ++c) {
            int p = -1;
            for (int i = row; i < 2 * n; ++i) {
                if (sgn(cond(i, c)) != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) continue;
            for (int j = 0; j < s; ++j) std::swap(cond(p, j), cond(row, j));
            const Rational inv = 1 / cond(row, c);
            for (int j = 0; j < s; ++j) cond(row, j) *= inv;
            for (int i = 0; i < 2 * n; ++i) {
                if (i == row || sgn(cond(i, c)) == 0) continue;
                const Rational f = cond(i, c);
                for (int j = 0; j < s; ++j) cond(i, j) -= f * cond(row, j);
            }
            pivot_of_row.push_back(c);
            ++row;
        }
    }
    int free_col = -1;
    for (int c = 0; c < s; ++c) {
        if (std::find(pivot_of_row.begin(), pivot_of_row.end(), c) == pivot_of_row.end()) {
            free_col = c;
            break;
        }
    }
    if (free_col < 0) throw Error("highest-weight vector not found for " + lambda.to_string());
    DenseVec hw(static_cast<std::size_t>(n));
    hw[support[static_cast<std::size_t>(free_col)]] = 1;
    for (std::size_t row = 0; row < pivot_of_row.size(); ++row) {
        hw[support[static_cast<std::size_t>(pivot_of_row[row])]] = -cond(static_cast<int>(row), free_col);
    }

    // Span under the lowering operators, organised by weight.
    const char* lowering[] = {"f1", "f2", "f12", "f112"};
    std::map<GSpWeight, WeightSpace> spaces;
    std::vector<GSpWeight> basis_weight;
    std::deque<std::pair<GSpWeight, DenseVec>> queue;
    spaces[top].insert(hw, 0);
    basis_weight.push_back(top);
    queue.emplace_back(top, hw);
    while (!queue.empty()) {
        auto [w, v] = queue.front();
        queue.pop_front();
        for (const char* f : lowering) {
            DenseVec img = apply_tensor(ops.at(f), v, r);
            if (is_zero_vec(img)) continue;
            const GSpWeight wi = w + gsp4_root_weight(f);
            const int index = static_cast<int>(basis_weight.size());
            if (spaces[wi].insert(img, index)) {
                basis_weight.push_back(wi);
                queue.emplace_back(wi, img);
                if (static_cast<int>(basis_weight.size()) > weyl_dimension(lambda)) {
                    throw Error("generated submodule exceeds the Weyl dimension");
                }
            }
        }
    }

    const int dim = static_cast<int>(basis_weight.size());
    // Current reduced vectors in module-basis order.
    std::vector<const DenseVec*> vec_of(static_cast<std::size_t>(dim));
    for (const auto& [w, sp] : spaces) {
        for (std::size_t i = 0; i < sp.vecs.size(); ++i) vec_of[static_cast<std::size_t>(sp.global[i])] = &sp.vecs[i];
    }

    ModuleRealization mod;
    mod.dimension = dim;
    const GSpWeight twist{0, 0, lambda.t};
    for (int i = 0; i < dim; ++i) {
        mod.weights.push_back(basis_weight[static_cast<std::size_t>(i)] + twist);
        mod.labels.push_back("v" + std::to_string(i));
    }
    for (const auto& [name, op] : ops) {
        LieMatrix act(dim, dim);
        const GSpWeight shift = gsp4_root_weight(name);
        for (int j = 0; j < dim; ++j) {
            DenseVec img = apply_tensor(op, *vec_of[static_cast<std::size_t>(j)], r);
            if (is_zero_vec(img)) continue;
            auto it = spaces.find(basis_weight[static_cast<std::size_t>(j)] + shift);
            if (it == spaces.end()) throw Error("module not closed under " + name);
            const WeightSpace& sp = it->second;
            DenseVec residual = img;
            for (std::size_t i = 0; i < sp.vecs.size(); ++i) {
                const Rational c = img[sp.pivots[i]];
                if (sgn(c) == 0) continue;
                act(sp.global[i], j) = c;
                for (std::size_t q = 0; q < residual.size(); ++q) {
                    if (sgn(sp.vecs[i][q]) != 0) residual[q] -= c * sp.vecs[i][q];
                }
            }
            if (!is_zero_vec(residual)) throw Error("module not closed under " + name);
        }
        if (name == "z") {
            for (int j = 0; j < dim; ++j) act(j, j) += GaussRational(2 * lambda.t);
        }
        mod.action.emplace(name, std::move(act));
    }
    return mod;
}

bool check_module_brackets(const ModuleRealization& m, const std::vector<NamedElement>& gens, std::string* failure) {
    std::vector<LieMatrix> mats;
    for (const auto& g : gens) mats.push_back(g.second);
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            bool ok = false;
            auto coords = solve_in_span(mats, bracket(mats[a], mats[b]), &ok);
            if (!ok) continue;
            const LieMatrix& ra = m.action.at(gens[a].first);
            const LieMatrix& rb = m.action.at(gens[b].first);
            LieMatrix lhs(m.dimension, m.dimension);
            for (std::size_t e = 0; e < coords.size(); ++e) {
                if (!coords[e].is_zero()) lhs += m.action.at(gens[e].first) * coords[e];
            }
            if (!(lhs == bracket(ra, rb))) {
                if (failure != nullptr) *failure = "[" + gens[a].first + ", " + gens[b].first + "]";
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<unsigned> subsets_of_size(int d, int p) {
    std::vector<unsigned> out;
    for (unsigned s = 0; s < (1U << d); ++s) {
        if (__builtin_popcount(s) == p) out.push_back(s);
    }
    return out;
}

std::vector<int> members(unsigned s, int d) {
    std::vector<int> out;
    for (int i = 0; i < d; ++i) {
        if (s & (1U << i)) out.push_back(i);
    }
    return out;
}

// d_p : Hom(Lambda^p u, M) -> Hom(Lambda^(p+1) u, M).
LieMatrix koszul_differential(int p, const std::vector<NamedElement>& u, const ModuleRealization& m,
                              const std::vector<std::vector<std::vector<GaussRational>>>& structure) {
    const int d = static_cast<int>(u.size());
    const int n = m.dimension;
    const auto rows = subsets_of_size(d, p + 1);
    const auto cols = subsets_of_size(d, p);
    std::map<unsigned, int> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = static_cast<int>(i);
    LieMatrix D(static_cast<int>(rows.size()) * n, static_cast<int>(cols.size()) * n);
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const auto idx = members(rows[ri], d);
        const int row0 = static_cast<int>(ri) * n;
        for (int j = 0; j <= p; ++j) {
            const int c0 = col_index.at(rows[ri] & ~(1U << idx[static_cast<std::size_t>(j)])) * n;
            const LieMatrix& rho = m.action.at(u[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])].first);
            const GaussRational sign(j % 2 == 0 ? 1 : -1);
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (!rho(a, b).is_zero()) D(row0 + a, c0 + b) += sign * rho(a, b);
                }
            }
        }
        for (int j = 0; j <= p; ++j) {
            for (int l = j + 1; l <= p; ++l) {
                const int xj = idx[static_cast<std::size_t>(j)];
                const int xl = idx[static_cast<std::size_t>(l)];
                const unsigned rest = rows[ri] & ~(1U << xj) & ~(1U << xl);
                const auto& coeffs = structure[static_cast<std::size_t>(xj)][static_cast<std::size_t>(xl)];
                for (int e = 0; e < d; ++e) {
                    if (coeffs[static_cast<std::size_t>(e)].is_zero() || (rest & (1U << e))) continue;
                    const unsigned target = rest | (1U << e);
                    int pos = 0;
                    for (int q = 0; q < e; ++q) {
                        if (target & (1U << q)) ++pos;
                    }
                    const int sgn_total = ((j + l) % 2 == 0 ? 1 : -1) * (pos % 2 == 0 ? 1 : -1);
                    const GaussRational c = coeffs[static_cast<std::size_t>(e)] * GaussRational(sgn_total);
                    const int c0 = col_index.at(target) * n;
                    for (int a = 0; a < n; ++a) D(row0 + a, c0 + a) += c;
                }
            }
        }
    }
    return D;
}

}  // namespace

std::vector<int> chevalley_eilenberg_dims(const std::vector<NamedElement>& u, const ModuleRealization& m,
                                          bool check_square_zero) {
    const int d = static_cast<int>(u.size());
    std::vector<LieMatrix> mats;
    for (const auto& x : u) mats.push_back(x.second);
    std::vector<std::vector<std::vector<GaussRational>>> structure(
        static_cast<std::size_t>(d), std::vector<std::vector<GaussRational>>(static_cast<std::size_t>(d)));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            bool ok = false;
            structure[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                solve_in_span(mats, bracket(mats[static_cast<std::size_t>(a)], mats[static_cast<std::size_t>(b)]), &ok);
            if (!ok) throw PreconditionError("nilradical basis is not closed under the bracket");
        }
    }
    std::vector<LieMatrix> diffs;
    std::vector<int> ranks;
    for (int p = 0; p < d; ++p) {
        diffs.push_back(koszul_differential(p, u, m, structure));
        ranks.push_back(rank_of(diffs.back()));
    }
    if (check_square_zero) {
        for (int p = 0; p + 1 < d; ++p) {
            if (!(diffs[static_cast<std::size_t>(p + 1)] * diffs[static_cast<std::size_t>(p)]).is_zero()) {
                throw Error("Koszul differential does not square to zero");
            }
        }
    }
    std::vector<int> dims;
    long binom = 1;
    for (int p = 0; p <= d; ++p) {
        const int cp = static_cast<int>(binom) * m.dimension;
        const int out_rank = p < d ? ranks[static_cast<std::size_t>(p)] : 0;
        const int in_rank = p > 0 ? ranks[static_cast<std::size_t>(p - 1)] : 0;
        dims.push_back(cp - out_rank - in_rank);
        binom = binom * (d - p) / (p + 1);
    }
    return dims;
}

std::vector<int> chevalley_eilenberg_dims(ParabolicKind p, const ModuleRealization& m) {
    return chevalley_eilenberg_dims(nilradical_basis(p), m);
}

}  // namespace gsp4kit
