#include "gsp4kit/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace gsp4kit {

std::string GSpWeight::to_string() const {
    std::ostringstream out;
    out << "lambda(" << k << "," << kp << "," << t << ")";
    return out.str();
}

std::string GL2Weight::to_string() const {
    std::ostringstream out;
    out << "lambda(" << k << "," << t << ")";
    return out.str();
}

bool CompactWeight::parity_ok() const {
    int s = rank_one ? n : n + np;
    return ((c - s) % 2 + 2) % 2 == 0;
}

std::string CompactWeight::to_string() const {
    std::ostringstream out;
    if (rank_one) {
        out << "lambda'(" << n << "," << c << ")";
    } else {
        out << "lambda'(" << n << "," << np << "," << c << ")";
    }
    return out.str();
}

std::string WeylElement::word_string() const {
    if (word.empty()) return "id";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) s += " ";
        s += "s" + std::to_string(word[i]);
    }
    return s;
}

GSpWeight WeylElement::apply(const GSpWeight& w) const {
    return {matrix[0][0] * w.k + matrix[0][1] * w.kp, matrix[1][0] * w.k + matrix[1][1] * w.kp, w.t};
}

GSpWeight WeylElement::apply_full(const GSpWeight& w) const {
    std::array<int, 3> v{w.k, w.kp, w.t};
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r[i] += full[i][j] * v[j];
    }
    return {r[0], r[1], r[2]};
}

WeylElement weyl_identity() {
    WeylElement e;
    e.matrix = {{{1, 0}, {0, 1}}};
    e.full = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    return e;
}

WeylElement weyl_generator(int which) {
    WeylElement g;
    g.length = 1;
    g.word = {which};
    if (which == 1) {
        g.matrix = {{{0, 1}, {1, 0}}};
        g.full = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
        g.xi_perm = {0, 2, 1, 3};
    } else if (which == 2) {
        g.matrix = {{{1, 0}, {0, -1}}};
        g.full = {{{1, 0, 0}, {0, -1, 0}, {0, 1, 1}}};
        g.xi_perm = {1, 0, 3, 2};
    } else {
        throw PreconditionError("Weyl generator must be 1 or 2");
    }
    return g;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            c.matrix[i][j] = a.matrix[i][0] * b.matrix[0][j] + a.matrix[i][1] * b.matrix[1][j];
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            c.full[i][j] = 0;
            for (int l = 0; l < 3; ++l) c.full[i][j] += a.full[i][l] * b.full[l][j];
        }
    }
    for (int i = 0; i < 4; ++i) c.xi_perm[i] = a.xi_perm[b.xi_perm[i]];
    c.word = a.word;
    c.word.insert(c.word.end(), b.word.begin(), b.word.end());
    c.length = static_cast<int>(c.word.size());
    return c;
}

std::vector<WeylElement> weyl_enumerate() {
    // Breadth-first search over words; first visit gives a reduced word.
    std::vector<WeylElement> out;
    std::map<IntMatrix3, bool> seen;
    std::deque<WeylElement> queue{weyl_identity()};
    seen[queue.front().full] = true;
    const WeylElement gens[2] = {weyl_generator(1), weyl_generator(2)};
    while (!queue.empty()) {
        WeylElement e = queue.front();
        queue.pop_front();
        out.push_back(e);
        for (const auto& g : gens) {
            WeylElement n = compose(g, e);
            if (seen.emplace(n.full, true).second) queue.push_back(n);
        }
    }
    return out;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement inv = weyl_identity();
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) inv = compose(inv, weyl_generator(*it));
    // The reversed word is reduced because w's word is.
    return inv;
}

std::string to_string(ParabolicKind p) {
    switch (p) {
        case ParabolicKind::SiegelQ0: return "siegel";
        case ParabolicKind::KlingenQ1: return "klingen";
        case ParabolicKind::Borel4: return "borel4";
        case ParabolicKind::Borel2: return "borel2";
        case ParabolicKind::ProductBorel: return "product-borel";
    }
    return "?";
}

int nilradical_dimension(ParabolicKind p) {
    switch (p) {
        case ParabolicKind::SiegelQ0:
        case ParabolicKind::KlingenQ1: return 3;
        case ParabolicKind::Borel4: return 4;
        case ParabolicKind::Borel2: return 1;
        case ParabolicKind::ProductBorel: return 2;
    }
    return 0;
}

std::vector<GSpWeight> positive_roots() { return {{1, -1, 0}, {0, 2, 0}, {1, 1, 0}, {2, 0, 0}}; }

GSpWeight rho() {
    GSpWeight sum;
    for (const auto& a : positive_roots()) sum = sum + a;
    return {sum.k / 2, sum.kp / 2, sum.t / 2};
}

bool is_positive_root(int k, int kp) {
    for (const auto& a : positive_roots()) {
        if (a.k == k && a.kp == kp) return true;
    }
    return false;
}

GSpWeight dot_action(const WeylElement& w, const GSpWeight& lambda) {
    const GSpWeight r = rho();
    GSpWeight shifted = w.apply({lambda.k + r.k, lambda.kp + r.kp, lambda.t});
    return {shifted.k - r.k, shifted.kp - r.kp, lambda.t};
}

std::vector<GSpWeight> nilradical_roots(ParabolicKind p) {
    auto all = positive_roots();
    switch (p) {
        case ParabolicKind::SiegelQ0: return {all[1], all[2], all[3]};
        case ParabolicKind::KlingenQ1: return {all[0], all[2], all[3]};
        case ParabolicKind::Borel4: return all;
        default: throw PreconditionError("no GSp4 nilradical roots for parabolic " + to_string(p));
    }
}

namespace {

bool contains_root(const std::vector<GSpWeight>& roots, int k, int kp) {
    return std::any_of(roots.begin(), roots.end(), [&](const GSpWeight& a) { return a.k == k && a.kp == kp; });
}

std::vector<WeylElement> gl2_weyl_group() {
    WeylElement id;
    id.matrix = {{{1, 0}, {0, 1}}};
    id.full = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    WeylElement s = id;
    s.matrix = {{{-1, 0}, {1, 1}}};
    s.full = {{{-1, 0, 0}, {0, 1, 0}, {1, 0, 1}}};
    s.length = 1;
    s.word = {1};
    return {id, s};
}

}  // namespace

std::vector<WeylElement> kostant_set(ParabolicKind p) {
    std::vector<WeylElement> out;
    if (p == ParabolicKind::Borel2) {
        // GL2 has one positive root and it spans the nilradical, so Delta+(w) always lies in u.
        return gl2_weyl_group();
    }
    if (p != ParabolicKind::SiegelQ0 && p != ParabolicKind::KlingenQ1) {
        throw PreconditionError("kostant_set supports siegel, klingen and borel2");
    }
    const auto u_roots = nilradical_roots(p);
    for (const auto& w : weyl_enumerate()) {
        const WeylElement winv = inverse(w);
        bool ok = true;
        for (const auto& a : positive_roots()) {
            GSpWeight b = winv.apply(a);
            bool negative = !is_positive_root(b.k, b.kp);
            if (negative && !contains_root(u_roots, a.k, a.kp)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(w);
    }
    std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
    return out;
}

std::array<int, 4> mono(const GSpWeight& l) { return {l.k + l.kp + l.t, l.k + l.t, l.kp + l.t, l.t}; }

Exponent mono_exponent(const GSpWeight& lambda) {
    Exponent e(SATAKE_ARITY, 0);
    auto m = mono(lambda);
    for (int i = 0; i < 4; ++i) e[i] = m[i];
    return e;
}

Exponent permute_xi(const XiPerm& p, const Exponent& e) {
    Exponent r = e;
    for (int i = 0; i < 4; ++i) r[p[i]] = e[i];
    return r;
}

GL2Weight gl2_reflect(const GL2Weight& w) { return {-w.k, w.k + w.t}; }

GL2Weight gl2_dot_action(const WeylElement& w, const GL2Weight& l) {
    GL2Weight r{w.matrix[0][0] * l.k + w.matrix[0][1] * l.t, w.matrix[1][0] * l.k + w.matrix[1][1] * l.t};
    if (w.length == 1) {
        // w(lambda) minus the sum of Delta+(w) = {lambda(2,-1)}.
        r.k -= 2;
        r.t += 1;
    }
    return r;
}

int gl2_dimension(const GL2Weight& w) { return w.k >= 0 ? w.k + 1 : 0; }

std::string LeviLabel::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::GL2: out << "Sym^" << gl2.k << " V2(" << gl2.t << ")"; break;
        case Kind::G0xGL2: out << "1(" << g0_exponent << ") x Sym^" << gl2.k << " V2(" << gl2.t << ")"; break;
        case Kind::G0: out << "1(" << g0_exponent << ")"; break;
    }
    return out.str();
}

int LeviLabel::dimension() const { return kind == Kind::G0 ? 1 : gl2_dimension(gl2); }

int LeviLabel::hodge_weight() const {
    if (kind == Kind::GL2) return -gl2.k - 2 * gl2.t;
    return -2 * g0_exponent;
}

LeviLabel restrict_to_levi(ParabolicKind p, const GSpWeight& l) {
    LeviLabel label;
    switch (p) {
        case ParabolicKind::KlingenQ1:
            label.kind = LeviLabel::Kind::GL2;
            label.gl2 = {l.kp, l.t};
            return label;
        case ParabolicKind::SiegelQ0:
            label.kind = LeviLabel::Kind::G0xGL2;
            label.g0_exponent = l.k + l.kp + l.t;
            label.gl2 = {l.k - l.kp, l.kp};
            return label;
        default: throw PreconditionError("restrict_to_levi supports siegel and klingen");
    }
}

LeviLabel restrict_to_levi_gl2(const GL2Weight& l) {
    LeviLabel label;
    label.kind = LeviLabel::Kind::G0;
    label.g0_exponent = l.k + l.t;
    return label;
}

int weyl_dimension(const GSpWeight& l) {
    if (!l.dominant()) throw PreconditionError("Weyl dimension needs a dominant weight");
    long d = static_cast<long>(l.k - l.kp + 1) * (l.kp + 1) * (l.k + l.kp + 3) * (l.k + 2);
    return static_cast<int>(d / 6);
}

}  // namespace gsp4kit
