#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsp4kit/exact.hpp"
#include "gsp4kit/rootdata.hpp"

namespace gsp4kit {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const std::vector<T>& data() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_) {
            if (!is_zero_entry(x)) return false;
        }
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const T& c) {
        for (auto& x : a_) x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int l = 0; l < a.cols_; ++l) {
                const T& x = a(i, l);
                if (is_zero_entry(x)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (!is_zero_entry(b(l, j))) r(i, j) += x * b(l, j);
                }
            }
        }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    // Exact rank by Gaussian elimination over the coefficient field.
    int rank() const {
        Matrix m = *this;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pivot = -1;
            for (int i = r; i < rows_; ++i) {
                if (!is_zero_entry(m(i, c))) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) continue;
            if (pivot != r) {
                for (int j = c; j < cols_; ++j) std::swap(m(pivot, j), m(r, j));
            }
            for (int i = r + 1; i < rows_; ++i) {
                if (is_zero_entry(m(i, c))) continue;
                T f = m(i, c) / m(r, c);
                for (int j = c; j < cols_; ++j) {
                    if (!is_zero_entry(m(r, j))) m(i, j) -= f * m(r, j);
                }
            }
            ++r;
        }
        return r;
    }

    static bool is_zero_entry(const Rational& x) { return sgn(x) == 0; }
    static bool is_zero_entry(const GaussRational& x) { return x.is_zero(); }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using LieMatrix = Matrix<GaussRational>;
using RatMatrix = Matrix<Rational>;

LieMatrix bracket(const LieMatrix& a, const LieMatrix& b);
LieMatrix elementary(int n, int i, int j, GaussRational c = GaussRational(1));
int rank_of(const LieMatrix& m);  // uses rational arithmetic when every entry is real
std::string to_string(const LieMatrix& m);

// Coordinates of x in the span of `basis`, or empty when x lies outside it.
std::vector<GaussRational> solve_in_span(const std::vector<LieMatrix>& basis, const LieMatrix& x, bool* ok);

using NamedElement = std::pair<std::string, LieMatrix>;

// Lie algebra data for the compact-torus weight computations.
LieMatrix v_plus();
LieMatrix v_minus();
LieMatrix compact_cartan2();
LieMatrix del();
LieMatrix del_bar();
std::vector<LieMatrix> p4_basis(int sign);  // sign +1 or -1
std::vector<LieMatrix> k4_basis();

enum class CompactTorus { Compact2, Compact4 };

struct WeightMixing : Error {
    using Error::Error;
};

CompactWeight weight_under_torus(const LieMatrix& x, CompactTorus torus);

// Rational basis of gsp4: h1, h2, z and the eight root vectors e*/f*.
std::vector<NamedElement> gsp4_basis();
GSpWeight gsp4_root_weight(const std::string& name);  // weight including the similitude component
std::vector<NamedElement> nilradical_basis(ParabolicKind p);

struct ModuleRealization {
    int dimension = 0;
    std::vector<std::string> labels;
    std::map<std::string, LieMatrix> action;
    std::vector<GSpWeight> weights;               // GSp4 modules
    std::vector<GL2Weight> gl2_weights;           // GL2 modules
    std::vector<CompactWeight> compact_weights;   // compact realizations
};

// Sym^m of the dual standard GL2 module in the basis (a_j), with generators v+, v-, hK, z.
ModuleRealization sym_module(int m);
// Sym^k V2(t) as polynomials in X, Y, generators e, f, h, z of gl2.
ModuleRealization gl2_sym_module(int k, int t);
// Irreducible GSp4 module of highest weight lambda inside V4^(k+k') twisted by nu^t.
ModuleRealization irrep_construct(const GSpWeight& lambda, int cap = 5);

// Checks rho([x, y]) = [rho(x), rho(y)] for all pairs of named generators whose bracket lies in their span.
bool check_module_brackets(const ModuleRealization& m, const std::vector<NamedElement>& generators, std::string* failure);

std::vector<int> chevalley_eilenberg_dims(ParabolicKind p, const ModuleRealization& m);
// Same complex with explicitly supplied nilradical; exposed for tests.
std::vector<int> chevalley_eilenberg_dims(const std::vector<NamedElement>& u, const ModuleRealization& m,
                                          bool check_square_zero = false);

}  // namespace gsp4kit
