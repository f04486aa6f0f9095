#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wigner {

// Exact arbitrary-precision integer; c_36 already exceeds the signed 64-bit
// range, so all table entries live here.
using BigInt = boost::multiprecision::cpp_int;

// k-th Catalan number c_k = binom(2k, k) / (k + 1).
inline BigInt catalan(int k) {
    if (k < 0)
        throw std::domain_error("catalan: k must be >= 0");
    BigInt binom = 1;
    for (int i = 1; i <= k; ++i) {
        binom *= (k + i);
        binom /= i;  // prefix is binom(k+i, i); division stays exact
    }
    return binom / (k + 1);
}

// Dense integer polynomial, coefficient index = power of x, no trailing
// zero coefficients (the zero polynomial has an empty coefficient vector).
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;

    explicit IntegerPolynomial(std::vector<BigInt> coefficients)
        : c_(std::move(coefficients)) {
        trim();
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(int i) const {
        static const BigInt zero = 0;
        if (i < 0 || i > degree()) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + it->convert_to<double>();
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// "x^4 - 3x^2 + 1" style rendering, highest power first.
inline std::string to_string(const IntegerPolynomial& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coeff(i);
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) {
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// f_k(x) = U_k(x/2), the Chebyshev polynomial of the second kind rescaled to
// the semicircle support, built from f_0 = 1, f_1 = x,
// f_n = x f_{n-1} - f_{n-2}.
inline IntegerPolynomial chebyshev_u(int k) {
    if (k < 0)
        throw std::domain_error("chebyshev_u: k must be >= 0");
    std::vector<BigInt> prev{1};
    if (k == 0) return IntegerPolynomial(std::move(prev));
    std::vector<BigInt> cur{0, 1};
    for (int n = 2; n <= k; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return IntegerPolynomial(std::move(cur));
}

// k-th moment of the semicircle law: c_{k/2} for even k, zero for odd k.
inline BigInt semicircle_moment_exact(int k) {
    if (k < 0)
        throw std::domain_error("semicircle_moment_exact: k must be >= 0");
    if (k % 2 != 0) return 0;
    return catalan(k / 2);
}

// Exact linear functional int x^m poly(x) dmu_sc, computed termwise from the
// exact semicircle moments (x^{2k} -> c_k, odd powers -> 0). No floating
// point is involved.
inline BigInt moment_functional_exact(const IntegerPolynomial& poly, int m) {
    if (m < 0)
        throw std::domain_error("moment_functional_exact: m must be >= 0");
    BigInt acc = 0;
    for (int i = 0; i <= poly.degree(); ++i) {
        const BigInt& c = poly.coeff(i);
        if (c == 0) continue;
        acc += c * semicircle_moment_exact(m + i);
    }
    return acc;
}

// I[m][n]: number of nonnegative lattice paths made of n unit h-steps at
// level zero and Dyck excursions of total semi-length m (2m up/down steps).
// The n h-steps split the path into n+1 Dyck slots, giving the convolution
//   I[m][0] = c_m,   I[m][n] = sum_{k=0}^{m} c_k * I[m-k][n-1].
class PathCountTable {
public:
    PathCountTable(int max_m, int max_n)
        : max_m_(max_m), max_n_(max_n),
          t_(static_cast<std::size_t>(max_m + 1) * static_cast<std::size_t>(max_n + 1)) {
        if (max_m < 0 || max_n < 0)
            throw std::domain_error("PathCountTable: orders must be >= 0");
    }

    int max_m() const { return max_m_; }
    int max_n() const { return max_n_; }

    const BigInt& at(int m, int n) const {
        check(m, n);
        return t_[index(m, n)];
    }

    BigInt& at(int m, int n) {
        check(m, n);
        return t_[index(m, n)];
    }

private:
    void check(int m, int n) const {
        if (m < 0 || m > max_m_ || n < 0 || n > max_n_)
            throw std::out_of_range("PathCountTable: index out of range");
    }
    std::size_t index(int m, int n) const {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(max_n_ + 1) +
               static_cast<std::size_t>(n);
    }

    int max_m_, max_n_;
    std::vector<BigInt> t_;
};

inline PathCountTable path_counts(int max_m, int max_n) {
    PathCountTable table(max_m, max_n);
    std::vector<BigInt> cat(static_cast<std::size_t>(max_m) + 1);
    for (int k = 0; k <= max_m; ++k) cat[static_cast<std::size_t>(k)] = catalan(k);
    for (int m = 0; m <= max_m; ++m) table.at(m, 0) = cat[static_cast<std::size_t>(m)];
    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
            BigInt acc = 0;
            for (int k = 0; k <= m; ++k)
                acc += cat[static_cast<std::size_t>(k)] * table.at(m - k, n - 1);
            table.at(m, n) = acc;
        }
    }
    return table;
}

// H(m, n): coefficient of theta^n in the limit of u^T (A + theta u u^T)^m u.
// Words of n theta-marks and m-n A's contribute only when every maximal
// A-run has even length, which maps them onto the h-step paths:
//   H(m, n) = I[(m-n)/2][n]  when m - n is even and >= 0, else 0.
inline BigInt h_coefficient(const PathCountTable& table, int m, int n) {
    if (m < 0 || n < 0)
        throw std::domain_error("h_coefficient: m, n must be >= 0");
    if (n > m || (m - n) % 2 != 0) return 0;
    return table.at((m - n) / 2, n);
}

inline BigInt h_coefficient(int m, int n) {
    if (m < 0 || n < 0)
        throw std::domain_error("h_coefficient: m, n must be >= 0");
    if (n > m || (m - n) % 2 != 0) return 0;
    const int mm = (m - n) / 2;
    return path_counts(mm, n).at(mm, n);
}

// Independent oracle for H(m, n): enumerate all binom(m, n) placements of n
// theta-marks in a word of length m; a word contributes the product of
// c_{r/2} over its maximal A-run lengths r if all runs are even, else zero.
// Capped at m <= 24 (about 2.7M placements at the worst n).
inline BigInt h_coefficient_bruteforce(int m, int n) {
    if (m < 0 || n < 0)
        throw std::domain_error("h_coefficient_bruteforce: m, n must be >= 0");
    if (m > 24)
        throw std::domain_error("h_coefficient_bruteforce: enumeration capped at m <= 24");
    if (n > m) return 0;

    std::vector<std::uint64_t> cat(static_cast<std::size_t>(m / 2) + 1);
    {
        BigInt c = 1;
        for (int k = 0; k <= m / 2; ++k) {
            cat[static_cast<std::size_t>(k)] = catalan(k).convert_to<std::uint64_t>();
        }
    }

    const std::uint32_t limit = (m >= 32) ? 0 : (1u << m);
    std::uint32_t mask = (n == 0) ? 0u : ((1u << n) - 1u);
    BigInt total = 0;
    for (;;) {
        // bits set = theta positions; zero runs between them must be even
        std::uint64_t word = 1;
        int run = 0;
        bool ok = true;
        for (int pos = 0; pos < m; ++pos) {
            if ((mask >> pos) & 1u) {
                if (run % 2 != 0) {
                    ok = false;
                    break;
                }
                word *= cat[static_cast<std::size_t>(run / 2)];
                run = 0;
            } else {
                ++run;
            }
        }
        if (ok) {
            if (run % 2 == 0)
                total += word * cat[static_cast<std::size_t>(run / 2)];
        }
        if (n == 0) break;
        // Gosper's hack: next mask with the same popcount
        const std::uint32_t c = mask & (0u - mask);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (mask >= limit) break;
    }
    return total;
}

// Truncated bivariate power series with exact coefficients, w[m][n] paired
// with x^m y^n.
class PowerSeries2D {
public:
    PowerSeries2D(int max_m, int max_n)
        : max_m_(max_m), max_n_(max_n),
          w_(static_cast<std::size_t>(max_m + 1) * static_cast<std::size_t>(max_n + 1)) {
        if (max_m < 0 || max_n < 0)
            throw std::domain_error("PowerSeries2D: orders must be >= 0");
    }

    int max_m() const { return max_m_; }
    int max_n() const { return max_n_; }

    const BigInt& at(int m, int n) const {
        check(m, n);
        return w_[index(m, n)];
    }

    BigInt& at(int m, int n) {
        check(m, n);
        return w_[index(m, n)];
    }

private:
    void check(int m, int n) const {
        if (m < 0 || m > max_m_ || n < 0 || n > max_n_)
            throw std::out_of_range("PowerSeries2D: index out of range");
    }
    std::size_t index(int m, int n) const {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(max_n_ + 1) +
               static_cast<std::size_t>(n);
    }

    int max_m_, max_n_;
    std::vector<BigInt> w_;
};

// Coefficients of W(x, y) = 1 / (1 - y - T(x)) where T(x) = x C(x) is the
// planar-tree generating function built from the Catalan series C(x).
// The geometric expansion W = 1 + (y + T) W is solved coefficientwise:
//   w[m][n] = [m=0][n=0] + w[m][n-1] + sum_{j=1}^{m} c_{j-1} w[m-j][n].
inline PowerSeries2D series_w(int max_m, int max_n) {
    PowerSeries2D w(max_m, max_n);
    std::vector<BigInt> cat(static_cast<std::size_t>(max_m) + 1);
    for (int k = 0; k <= max_m; ++k) cat[static_cast<std::size_t>(k)] = catalan(k);
    for (int m = 0; m <= max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            BigInt acc = (m == 0 && n == 0) ? 1 : 0;
            if (n >= 1) acc += w.at(m, n - 1);
            for (int j = 1; j <= m; ++j)
                acc += cat[static_cast<std::size_t>(j - 1)] * w.at(m - j, n);
            w.at(m, n) = acc;
        }
    }
    return w;
}

// Exact verification report for the table and series identities.
struct IdentityCheck {
    std::string name;
    bool passed = true;
    std::string counterexample;  // first failure, empty when passed
};

struct RecurrenceReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline void record_failure(IdentityCheck& check, const std::string& where,
                           const BigInt& lhs, const BigInt& rhs) {
    if (!check.passed) return;
    check.passed = false;
    check.counterexample = where + ": " + lhs.str() + " != " + rhs.str();
}

}  // namespace detail

// Exact-arithmetic verification of the four identities tying the objects
// together:
//   (a) I[m][n] = I[m+1][n-1] - I[m+1][n-2]            (path recurrence)
//   (b) H(m,n)  = H(m+1,n-1) - H(m,n-2)                (word recurrence)
//   (c) int x^m f_n dmu = int x^{m+1} f_{n-1} dmu - int x^m f_{n-2} dmu
//   (d) W - W(x,0) = (y/x)(W - W(0,y)) - (y^2/x)(W - W(0,y)), coefficientwise
inline RecurrenceReport verify_recurrences(int max_m, int max_n) {
    if (max_m < 2 || max_n < 2)
        throw std::domain_error("verify_recurrences: requires max_m >= 2 and max_n >= 2");

    RecurrenceReport report;
    const PathCountTable table = path_counts(max_m, max_n);

    {
        IdentityCheck check{"I-recurrence", true, ""};
        for (int m = 0; m + 1 <= max_m; ++m) {
            for (int n = 2; n <= max_n; ++n) {
                const BigInt rhs = table.at(m + 1, n - 1) - table.at(m + 1, n - 2);
                if (table.at(m, n) != rhs)
                    detail::record_failure(check,
                                           "I[" + std::to_string(m) + "][" + std::to_string(n) + "]",
                                           table.at(m, n), rhs);
            }
        }
        report.checks.push_back(std::move(check));
    }

    {
        // H(m+1, n-1) needs I[(m-n)/2 + 1][.], so m ranges over words whose
        // shifted index still fits the table.
        IdentityCheck check{"H-recurrence", true, ""};
        for (int n = 2; n <= max_n; ++n) {
            for (int m = n; (m - n) / 2 + 1 <= max_m; ++m) {
                const BigInt lhs = h_coefficient(table, m, n);
                const BigInt rhs =
                    h_coefficient(table, m + 1, n - 1) - h_coefficient(table, m, n - 2);
                if (lhs != rhs)
                    detail::record_failure(check,
                                           "H(" + std::to_string(m) + "," + std::to_string(n) + ")",
                                           lhs, rhs);
            }
        }
        report.checks.push_back(std::move(check));
    }

    {
        IdentityCheck check{"moment-functional recurrence", true, ""};
        std::vector<IntegerPolynomial> f(static_cast<std::size_t>(max_n) + 1);
        for (int n = 0; n <= max_n; ++n) f[static_cast<std::size_t>(n)] = chebyshev_u(n);
        for (int n = 2; n <= max_n; ++n) {
            for (int m = 0; m <= max_m; ++m) {
                const BigInt lhs = moment_functional_exact(f[static_cast<std::size_t>(n)], m);
                const BigInt rhs =
                    moment_functional_exact(f[static_cast<std::size_t>(n - 1)], m + 1) -
                    moment_functional_exact(f[static_cast<std::size_t>(n - 2)], m);
                if (lhs != rhs)
                    detail::record_failure(check,
                                           "moment(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")",
                                           lhs, rhs);
            }
        }
        report.checks.push_back(std::move(check));
    }

    {
        // The printed series identity extends (a) down to n = 1 with
        // I[.][-1] = 0; at n = 1 it reduces to the Catalan convolution.
        IdentityCheck check{"W-series identity", true, ""};
        const PowerSeries2D w = series_w(max_m, max_n);
        for (int m = 0; m + 1 <= max_m; ++m) {
            for (int n = 1; n <= max_n; ++n) {
                BigInt rhs = w.at(m + 1, n - 1);
                if (n >= 2) rhs -= w.at(m + 1, n - 2);
                if (w.at(m, n) != rhs)
                    detail::record_failure(check,
                                           "w[" + std::to_string(m) + "][" + std::to_string(n) + "]",
                                           w.at(m, n), rhs);
            }
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

// Cross-implementation checks: the DP table against the series coefficients
// and against the brute-force word oracle (and the Catalan convolution that
// seeds everything).
inline RecurrenceReport cross_check_tables(int max_m, int max_n) {
    RecurrenceReport report;
    const PathCountTable table = path_counts(max_m, max_n);

    {
        IdentityCheck check{"series coefficients == path counts", true, ""};
        const PowerSeries2D w = series_w(max_m, max_n);
        for (int m = 0; m <= max_m; ++m)
            for (int n = 0; n <= max_n; ++n)
                if (w.at(m, n) != table.at(m, n))
                    detail::record_failure(check,
                                           "w[" + std::to_string(m) + "][" + std::to_string(n) + "]",
                                           w.at(m, n), table.at(m, n));
        report.checks.push_back(std::move(check));
    }

    {
        IdentityCheck check{"H == brute-force word oracle (m <= 14)", true, ""};
        for (int m = 0; m <= 14; ++m) {
            for (int n = 0; n <= m; ++n) {
                const BigInt dp = h_coefficient(m, n);
                const BigInt brute = h_coefficient_bruteforce(m, n);
                if (dp != brute)
                    detail::record_failure(check,
                                           "H(" + std::to_string(m) + "," + std::to_string(n) + ")",
                                           dp, brute);
            }
        }
        report.checks.push_back(std::move(check));
    }

    {
        IdentityCheck check{"Catalan convolution (k <= 40)", true, ""};
        std::vector<BigInt> cat(42);
        for (int k = 0; k <= 41; ++k) cat[static_cast<std::size_t>(k)] = catalan(k);
        for (int k = 0; k <= 40; ++k) {
            BigInt conv = 0;
            for (int j = 0; j <= k; ++j)
                conv += cat[static_cast<std::size_t>(j)] * cat[static_cast<std::size_t>(k - j)];
            if (conv != cat[static_cast<std::size_t>(k + 1)])
                detail::record_failure(check, "c_" + std::to_string(k + 1),
                                       cat[static_cast<std::size_t>(k + 1)], conv);
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace wigner
