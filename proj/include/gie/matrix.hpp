#ifndef GIE_MATRIX_HPP
#define GIE_MATRIX_HPP

#include <gie/scalar.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace gie {

// Dense exact-rational matrix, row-major, 0-based.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<Scalar>& entries);
    static RatMatrix scalar(const Scalar& value) { return identity(1) * value; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Scalar& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix transpose() const;

    RatMatrix& operator+=(const RatMatrix& other);
    RatMatrix& operator-=(const RatMatrix& other);
    RatMatrix& operator*=(const Scalar& factor);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator-(RatMatrix a) { return a *= Scalar(-1); }
    friend RatMatrix operator*(RatMatrix a, const Scalar& s) { return a *= s; }
    friend RatMatrix operator*(const Scalar& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

Scalar trace(const RatMatrix& m);
// Fraction-free elimination. Throws NotSquare.
Scalar determinant(const RatMatrix& m);
// Throws NotSquare, Singular.
RatMatrix inverse(const RatMatrix& m);
// Classical adjugate (transpose of the cofactor matrix). Throws NotSquare.
RatMatrix adjugate(const RatMatrix& m);

long binomial(int n, int k);

// All k-subsets of {0..n-1} in lexicographic order, each strictly increasing.
// The reference stays valid for the life of the program.
const std::vector<std::vector<int>>& subsets(int n, int k);
// Position of a strictly increasing subset in that order, or -1.
int subset_index(int n, const std::vector<int>& subset);
// Sign of the permutation taking `sequence` (distinct entries) to ascending
// order; 0 if an entry repeats.
int permutation_sign(const std::vector<int>& sequence);

// Order-k minors, rows and columns indexed by lexicographic k-subsets.
// Throws NotSquare, BadOrder.
RatMatrix compound(const RatMatrix& m, int k);

// E^(k): rows indexed by (n-k)-subsets L, columns by k-subsets M, entry
// eps_{L M} (sign of the concatenated index string).
RatMatrix e_matrix(int n, int k);

// E^(k) B^T E^(k)^T for a C(n,k) x C(n,k) matrix B; the result is indexed by
// (n-k)-subsets. Throws SizeMismatch, BadOrder.
RatMatrix star(const RatMatrix& b, int k, int n);

// C^{n-k}(B) = C_{n-k}(B)*, indexed by k-subsets; equals adj B at k = 1.
// Throws NotSquare, BadOrder.
RatMatrix supplementary_compound(const RatMatrix& m, int k);

} // namespace gie

#endif
