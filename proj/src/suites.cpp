#include <gie/closed_form.hpp>
#include <gie/error.hpp>
#include <gie/random.hpp>
#include <gie/suites.hpp>

#include <functional>

namespace gie {

namespace {

CheckResult run(const std::string& name, int trials, const std::function<bool(int)>& body) {
    CheckResult r{name, 0, trials, {}};
    for (int t = 0; t < trials; ++t) {
        bool ok = false;
        try {
            ok = body(t);
        } catch (const Error& e) {
            if (r.detail.empty()) r.detail = e.what();
        }
        if (ok)
            ++r.passed;
        else if (r.detail.empty())
            r.detail = "trial " + std::to_string(t) + " failed";
    }
    return r;
}

} // namespace

std::vector<CheckResult> matrix_identity_suite(std::uint64_t seed, int trials) {
    std::vector<CheckResult> out;
    for (int n : {3, 4}) {
        RationalStream rng(seed * 1000 + static_cast<std::uint64_t>(n));
        std::string tag = " " + std::to_string(n) + "x" + std::to_string(n);
        out.push_back(run("binet-cauchy" + tag, trials, [&](int) {
            RatMatrix b = rng.matrix(n, n), d = rng.matrix(n, n);
            for (int k = 0; k <= n; ++k)
                if (!(compound(b, k) * compound(d, k) == compound(b * d, k))) return false;
            return true;
        }));
        out.push_back(run("laplace expansion" + tag, trials, [&](int) {
            RatMatrix b = rng.matrix(n, n);
            Scalar det = determinant(b);
            for (int k = 0; k <= n; ++k) {
                RatMatrix c = compound(b, k), s = supplementary_compound(b, k);
                RatMatrix want = RatMatrix::identity(c.rows()) * det;
                if (!(c * s == want) || !(s * c == want)) return false;
            }
            return true;
        }));
        out.push_back(run("jacobi" + tag, trials, [&](int) {
            RatMatrix b = rng.invertible(n);
            RatMatrix binv = inverse(b);
            Scalar det = determinant(b);
            for (int k = 0; k <= n; ++k)
                if (!(compound(binv, k) == supplementary_compound(b, k) * (1 / det))) return false;
            return true;
        }));
        out.push_back(run("sylvester-franke" + tag, trials, [&](int) {
            RatMatrix b = rng.matrix(n, n);
            Scalar det = determinant(b);
            for (int k = 1; k <= n; ++k)
                if (determinant(compound(b, k)) != pow(det, binomial(n - 1, k - 1))) return false;
            return true;
        }));
        out.push_back(run("star involution" + tag, trials, [&](int) {
            for (int k = 0; k <= n; ++k) {
                int size = static_cast<int>(binomial(n, k));
                RatMatrix b = rng.matrix(size, size);
                if (!(star(star(b, k, n), n - k, n) == b)) return false;
            }
            return true;
        }));
    }
    out.push_back(run("e-matrix orthogonality n<=5", 1, [](int) {
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                RatMatrix e = e_matrix(n, k);
                RatMatrix one = RatMatrix::identity(e.rows());
                if (!(e * e.transpose() == one) || !(e.transpose() * e == one)) return false;
                Scalar sign = ((n - k) * k) % 2 == 0 ? Scalar(1) : Scalar(-1);
                if (!(e.transpose() == e_matrix(n, n - k) * sign)) return false;
            }
        return true;
    }));
    RationalStream rng(seed * 1000 + 33);
    out.push_back(run("cayley-hamilton adjugate 3x3", trials, [&](int) {
        RatMatrix b = rng.matrix(3, 3);
        Scalar tr = trace(b), tr2 = trace(b * b);
        RatMatrix rhs = b * b - b * tr + RatMatrix::identity(3) * (tr * tr / 2 - tr2 / 2);
        return adjugate(b) == rhs;
    }));
    out.push_back(run("cayley-hamilton adjugate trace 3x3", trials, [&](int) {
        RatMatrix b = rng.matrix(3, 3);
        Scalar tr = trace(b), tr2 = trace(b * b);
        return trace(adjugate(b)) == tr * tr / 2 - tr2 / 2;
    }));
    return out;
}

std::vector<CheckResult> tower_suite(std::uint64_t seed, int trials) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= 4; ++n) {
        RationalStream rng(seed * 1000 + 100 + static_cast<std::uint64_t>(n));
        std::vector<ActionSpec> specs;
        for (int t = 0; t < trials; ++t) specs.push_back(ActionSpec::gaussian(rng.matrix(n, n)));
        std::vector<PartitionTower> towers;
        for (const auto& s : specs) towers.push_back(partition_tower(s));
        std::string tag = " n=" + std::to_string(n);
        out.push_back(run("gaussian tower = supplementary compound" + tag, trials, [&](int t) {
            for (int k = 0; k <= n; ++k)
                if (!(towers[t].levels[k] == supplementary_compound(specs[t].a2(), k))) return false;
            return true;
        }));
        out.push_back(run("gaussian tower product = det" + tag, trials, [&](int t) {
            Scalar det = determinant(specs[t].a2());
            for (int k = 0; k <= n; ++k) {
                RatMatrix unstarred = star(towers[t].levels[n - k], n - k, n);
                RatMatrix prod = towers[t].levels[k] * unstarred;
                if (!(prod == RatMatrix::identity(prod.rows()) * det)) return false;
            }
            return true;
        }));
    }
    return out;
}

CheckResult oracle_equivalence(int n, int trials, std::uint64_t seed) {
    RationalStream rng(seed * 1000 + 200 + static_cast<std::uint64_t>(n));
    return run("closed form = brute force n=" + std::to_string(n), trials, [&](int) {
        ActionSpec spec = random_regular_spec(rng, n);
        EffectiveAction closed = closed_form(spec).action;
        EffectiveAction brute = effective_action_bruteforce(spec);
        return closed == brute;
    });
}

} // namespace gie
