#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookswap {

/// Power series in q truncated after q^N, with exact 64-bit coefficients.
/// Arithmetic that would overflow throws std::overflow_error instead of
/// wrapping.
class QSeries {
public:
    using Coeff = std::int64_t;

    explicit QSeries(int max_degree);
    QSeries(int max_degree, std::vector<Coeff> coeffs);

    static QSeries zero(int max_degree) { return QSeries(max_degree); }
    static QSeries one(int max_degree);
    /// c * q^degree (zero if degree > max_degree).
    static QSeries monomial(int degree, int max_degree, Coeff c = 1);

    [[nodiscard]] int max_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Coeff operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    [[nodiscard]] bool is_zero() const noexcept;

    /// Multiplies by q^k, dropping terms past the truncation degree.
    [[nodiscard]] QSeries shifted(int k) const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);

    friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
    friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
    friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
    friend bool operator==(const QSeries&, const QSeries&) = default;

    /// "c0 + c1*q + c2*q^2 - ..." with zero terms omitted; "0" for the zero series.
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Coeff> coeffs_;
};

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Aliases matching the operation names used in the CLI and tests.
[[nodiscard]] inline QSeries series_one(int max_degree) { return QSeries::one(max_degree); }
[[nodiscard]] inline QSeries series_add(const QSeries& x, const QSeries& y) { return x + y; }
[[nodiscard]] inline QSeries series_mul(const QSeries& x, const QSeries& y) { return x * y; }

/// Gaussian binomial [n choose k]_q via the Pascal recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k]. Throws std::invalid_argument unless 0 <= k <= n.
[[nodiscard]] QSeries q_binomial(int n, int k, int max_degree);

/// 1 / (q^s; q)_inf = prod_{i>=0} 1/(1 - q^{s+i}); the coefficient of q^n
/// counts partitions of n with every part >= s. Requires s >= 1.
[[nodiscard]] QSeries q_pochhammer_inv(int s, int max_degree);

/// 1 / (q; q)_m = prod_{j=1..m} 1/(1 - q^j).
[[nodiscard]] QSeries q_factorial_inv(int m, int max_degree);

/// Generating function of pointed partitions with arm a, leg l, coarm m:
/// q^{(m+1)(l+1)+a} [m+a, a] [l+a, a] / (q^{a+1}; q)_inf.
[[nodiscard]] QSeries gf_f(int a, int l, int m, int max_degree);

/// 1/(q;q)_m - [m+a, a] * sum_{t>=0} q^{t(a+1)} [m-1+t, t], which must
/// vanish. For m = 0 the inner binomial is taken as 1 at t = 0 and 0 after.
[[nodiscard]] QSeries remark_identity_gap(int a, int m, int max_degree);

} // namespace hookswap
