#include <gie/error.hpp>
#include <gie/matrix.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gie {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error(Errc::BadShape, "negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Scalar(0));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw Error(Errc::BadShape, "ragged matrix literal");
        for (const auto& v : row) data_.push_back(v);
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Scalar>& entries) {
    int n = static_cast<int>(entries.size());
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[i];
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!gie::is_zero(v)) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(Errc::SizeMismatch, "matrix sum shapes differ");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(Errc::SizeMismatch, "matrix difference shapes differ");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Scalar& factor) {
    for (auto& v : data_) v *= factor;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::SizeMismatch, "matrix product shapes differ");
    RatMatrix c(a.rows_, b.cols_);
    Scalar t;
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (is_zero(bkj)) continue;
                t = aik * bkj;
                c(i, j) += t;
            }
        }
    return c;
}

std::string RatMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << gie::to_string((*this)(i, j));
        out << ']';
    }
    out << ']';
    return out.str();
}

Scalar trace(const RatMatrix& m) {
    if (!m.is_square()) throw Error(Errc::NotSquare, "trace of non-square matrix");
    Scalar t = 0;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

namespace {

// Bareiss on integer-scaled rows: clearing denominators row by row keeps the
// division exact and the intermediate sizes bounded.
Scalar bareiss_det(const RatMatrix& m) {
    int n = m.rows();
    if (n == 0) return Scalar(1);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Scalar scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        scale /= Scalar(l);
    }
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Scalar(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Scalar d(a[n - 1][n - 1]);
    if (sign < 0) d = -d;
    return d * scale;
}

} // namespace

Scalar determinant(const RatMatrix& m) {
    if (!m.is_square()) throw Error(Errc::NotSquare, "determinant of non-square matrix");
    return bareiss_det(m);
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw Error(Errc::NotSquare, "inverse of non-square matrix");
    int n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && is_zero(a(p, k))) ++p;
        if (p == n) throw Error(Errc::Singular, "matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Scalar pivot_inv = 1 / a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) *= pivot_inv;
            inv(k, j) *= pivot_inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || is_zero(a(i, k))) continue;
            Scalar f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

namespace {

RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    RatMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
    return s;
}

} // namespace

RatMatrix adjugate(const RatMatrix& m) {
    if (!m.is_square()) throw Error(Errc::NotSquare, "adjugate of non-square matrix");
    int n = m.rows();
    RatMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> r, c;
            for (int t = 0; t < n; ++t) {
                if (t != j) r.push_back(t);
                if (t != i) c.push_back(t);
            }
            Scalar minor = determinant(submatrix(m, r, c));
            adj(i, j) = ((i + j) % 2 == 0) ? minor : Scalar(-minor);
        }
    return adj;
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<std::vector<int>>& subsets(int n, int k) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::vector<int>>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot) {
        slot = std::make_unique<std::vector<std::vector<int>>>();
        if (k >= 0 && k <= n) {
            std::vector<int> cur(k);
            for (int i = 0; i < k; ++i) cur[i] = i;
            while (true) {
                slot->push_back(cur);
                int i = k - 1;
                while (i >= 0 && cur[i] == n - k + i) --i;
                if (i < 0) break;
                ++cur[i];
                for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
            }
        }
    }
    return *slot;
}

int subset_index(int n, const std::vector<int>& subset) {
    const auto& all = subsets(n, static_cast<int>(subset.size()));
    // Combinatorial rank in lexicographic order.
    int k = static_cast<int>(subset.size());
    long rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        if (subset[i] <= prev || subset[i] >= n) return -1;
        for (int v = prev + 1; v < subset[i]; ++v) rank += binomial(n - v - 1, k - i - 1);
        prev = subset[i];
    }
    (void)all;
    return static_cast<int>(rank);
}

int permutation_sign(const std::vector<int>& sequence) {
    int inversions = 0;
    for (size_t i = 0; i < sequence.size(); ++i)
        for (size_t j = i + 1; j < sequence.size(); ++j) {
            if (sequence[i] == sequence[j]) return 0;
            if (sequence[i] > sequence[j]) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

RatMatrix compound(const RatMatrix& m, int k) {
    if (!m.is_square()) throw Error(Errc::NotSquare, "compound of non-square matrix");
    int n = m.rows();
    if (k < 0 || k > n) throw Error(Errc::BadOrder, "compound order out of range");
    const auto& sets = subsets(n, k);
    int size = static_cast<int>(sets.size());
    RatMatrix c(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) c(i, j) = determinant(submatrix(m, sets[i], sets[j]));
    return c;
}

RatMatrix e_matrix(int n, int k) {
    if (k < 0 || k > n) throw Error(Errc::BadOrder, "E-matrix order out of range");
    const auto& rows = subsets(n, n - k);
    const auto& cols = subsets(n, k);
    RatMatrix e(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            std::vector<int> seq = rows[i];
            seq.insert(seq.end(), cols[j].begin(), cols[j].end());
            e(static_cast<int>(i), static_cast<int>(j)) = permutation_sign(seq);
        }
    return e;
}

RatMatrix star(const RatMatrix& b, int k, int n) {
    if (k < 0 || k > n) throw Error(Errc::BadOrder, "star order out of range");
    long size = binomial(n, k);
    if (b.rows() != size || b.cols() != size)
        throw Error(Errc::SizeMismatch, "star expects a C(n,k) x C(n,k) matrix");
    RatMatrix e = e_matrix(n, k);
    return e * b.transpose() * e.transpose();
}

RatMatrix supplementary_compound(const RatMatrix& m, int k) {
    if (!m.is_square()) throw Error(Errc::NotSquare, "supplementary compound of non-square matrix");
    int n = m.rows();
    if (k < 0 || k > n) throw Error(Errc::BadOrder, "supplementary compound order out of range");
    return star(compound(m, n - k), n - k, n);
}

} // namespace gie
