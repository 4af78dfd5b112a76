#include <gie/error.hpp>
#include <gie/grand_constant.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace gie {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::LayoutMismatch: return "LayoutMismatch";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::DuplicateSlot: return "DuplicateSlot";
    case Errc::OddOrConstantPart: return "OddOrConstantPart";
    case Errc::NonOddImage: return "NonOddImage";
    case Errc::DomainOverlap: return "DomainOverlap";
    case Errc::SingularQuadraticBlock: return "SingularQuadraticBlock";
    case Errc::FormalLogProduct: return "FormalLogProduct";
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadOrder: return "BadOrder";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::BadShape: return "BadShape";
    case Errc::UnbalancedTerm: return "UnbalancedTerm";
    case Errc::SingularPartition: return "SingularPartition";
    case Errc::SingularInput: return "SingularInput";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SingularA2: return "SingularA2";
    case Errc::NonPositiveMu: return "NonPositiveMu";
    case Errc::InsufficientDegree: return "InsufficientDegree";
    case Errc::ParseError: return "ParseError";
    case Errc::Unsupported: return "Unsupported";
    }
    return "Error";
}

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty())
        throw Error(Errc::ParseError, "empty rational");
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+'))
            ++i;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error(Errc::ParseError, "malformed rational '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    Integer d(den);
    if (d == 0)
        throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    Scalar q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar pow(const Scalar& base, long exponent) {
    Scalar result(1);
    Scalar b = exponent < 0 ? Scalar(1) / base : base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1U)
            result *= b;
        b *= b;
        e >>= 1U;
    }
    return result;
}

namespace {

constexpr unsigned long kTrialBound = 100000;
constexpr int kRhoIterations = 200000;

// Brent's variant of Pollard rho; returns 0 when no factor is found in budget.
Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (n % 2 == 0)
        return 2;
    Integer y = seed % n, c = (seed * 7 + 1) % n, m = 128, g = 1, r = 1, q = 1, x, ys;
    int budget = kRhoIterations;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1 && budget > 0) {
        x = y;
        for (Integer i = 0; i < r; ++i)
            y = f(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (Integer i = 0; i < m && i < r - k; ++i) {
                y = f(y);
                Integer diff = abs(x - y);
                q = (q * diff) % n;
                --budget;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            Integer diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n || g == 1)
        return 0;
    return g;
}

void split_cofactor(const Integer& n, std::vector<Integer>& out) {
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out.push_back(n);
        return;
    }
    for (unsigned long seed = 2; seed < 12; ++seed) {
        Integer f = pollard_brent(n, seed);
        if (f != 0) {
            split_cofactor(f, out);
            split_cofactor(n / f, out);
            return;
        }
    }
    // Gave up: keep the composite as an opaque atom.
    out.push_back(n);
}

} // namespace

std::vector<std::pair<Integer, unsigned long>> factor_atoms(const Integer& value) {
    Integer n = abs(value);
    std::map<Integer, unsigned long> counts;
    for (unsigned long p = 2; p <= kTrialBound && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++counts[Integer(p)];
            n /= p;
        }
    }
    std::vector<Integer> rest;
    split_cofactor(n, rest);
    for (const auto& f : rest)
        ++counts[f];
    return {counts.begin(), counts.end()};
}

GrandConstant GrandConstant::log(const Scalar& argument, const Scalar& coeff) {
    if (gie::is_zero(argument))
        throw Error(Errc::SingularInput, "logarithm of zero");
    GrandConstant out;
    if (gie::is_zero(coeff))
        return out;
    if (sgn(argument) < 0)
        out.add_log_of_integer(Integer(-1), coeff);
    out.add_log_of_integer(abs(argument.get_num()), coeff);
    out.add_log_of_integer(argument.get_den(), -coeff);
    return out;
}

void GrandConstant::add_log_of_integer(const Integer& value, const Scalar& coeff) {
    auto bump = [this](const Integer& atom, const Scalar& c) {
        auto [it, inserted] = logs_.try_emplace(atom, c);
        if (!inserted)
            it->second += c;
        if (gie::is_zero(it->second))
            logs_.erase(it);
    };
    if (value == -1) {
        bump(Integer(-1), coeff);
        return;
    }
    if (value == 1)
        return;
    for (const auto& [atom, mult] : factor_atoms(value))
        bump(atom, coeff * Scalar(static_cast<long>(mult)));
}

std::vector<std::pair<Scalar, Scalar>> GrandConstant::log_terms() const {
    std::vector<std::pair<Scalar, Scalar>> out;
    out.reserve(logs_.size());
    for (const auto& [atom, c] : logs_)
        out.emplace_back(c, Scalar(atom));
    return out;
}

GrandConstant& GrandConstant::operator+=(const GrandConstant& other) {
    rational_ += other.rational_;
    for (const auto& [atom, c] : other.logs_) {
        auto [it, inserted] = logs_.try_emplace(atom, c);
        if (!inserted) {
            it->second += c;
            if (gie::is_zero(it->second))
                logs_.erase(it);
        }
    }
    return *this;
}

GrandConstant& GrandConstant::operator-=(const GrandConstant& other) { return *this += -other; }

GrandConstant& GrandConstant::operator*=(const Scalar& factor) {
    if (gie::is_zero(factor)) {
        rational_ = 0;
        logs_.clear();
        return *this;
    }
    rational_ *= factor;
    for (auto& [atom, c] : logs_)
        c *= factor;
    return *this;
}

double GrandConstant::approximate() const {
    double value = rational_.get_d();
    for (const auto& [atom, c] : logs_) {
        if (atom == -1)
            return std::nan("");
        value += c.get_d() * std::log(atom.get_d());
    }
    return value;
}

std::string GrandConstant::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (!gie::is_zero(rational_) || logs_.empty()) {
        os << rational_.get_str();
        first = false;
    }
    for (const auto& [atom, c] : logs_) {
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        Scalar mag = abs(c);
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "ln(" << atom.get_str() << ")";
    }
    return os.str();
}

} // namespace gie
