#include <gie/closed_form.hpp>
#include <gie/error.hpp>
#include <gie/random.hpp>

namespace gie {

long RationalStream::next_int(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
}

Scalar RationalStream::next() {
    long p = next_int(-3, 3);
    long q = next_int(1, 3);
    Scalar v(p, q);
    v.canonicalize();
    return v;
}

RatMatrix RationalStream::matrix(int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = next();
    return m;
}

RatMatrix RationalStream::invertible(int n) {
    while (true) {
        RatMatrix m = matrix(n, n);
        if (!is_zero(determinant(m))) return m;
    }
}

ActionSpec random_spec(RationalStream& rng, int n) {
    ActionSpec s = ActionSpec::zero(n);
    for (int k = 1; k <= n; ++k) s.block(k) = rng.matrix(s.block(k).rows(), s.block(k).cols());
    return s;
}

namespace {

bool regular(const ActionSpec& s) {
    try {
        if (is_zero(determinant(s.a2()))) return false;
        if (s.n >= 2 && s.n <= 4) {
            ClosedFormResult r = closed_form(s);
            if (is_zero(determinant(r.action.a2()))) return false;
            if (s.n <= 3) inverse_map(r.action);
        } else {
            PartitionTower t = partition_tower(s);
            if (is_zero(t.partition()) || is_zero(determinant(t.starred(s.n - 1)))) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

ActionSpec random_regular_spec(RationalStream& rng, int n) {
    while (true) {
        ActionSpec s = random_spec(rng, n);
        if (regular(s)) return s;
    }
}

ActionSpec random_reducible_spec(RationalStream& rng, int n) {
    while (true) {
        ActionSpec s = random_spec(rng, n);
        int last = n - 1;
        for (int k = 1; k <= n; ++k) {
            const auto& sets = subsets(n, k);
            for (size_t i = 0; i < sets.size(); ++i)
                for (size_t j = 0; j < sets.size(); ++j)
                    if (sets[i].back() == last || sets[j].back() == last)
                        s.block(k)(static_cast<int>(i), static_cast<int>(j)) = 0;
        }
        s.block(1)(last, last) = 1;
        if (regular(s) && regular(reduce_dimension(s))) return s;
    }
}

} // namespace gie
