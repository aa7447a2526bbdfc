#include "hookswap/qseries.hpp"

#include <algorithm>

namespace hookswap {

namespace {

QSeries::Coeff checked_add(QSeries::Coeff x, QSeries::Coeff y)
{
    QSeries::Coeff out = 0;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("q-series coefficient overflow in addition");
    return out;
}

QSeries::Coeff checked_mul(QSeries::Coeff x, QSeries::Coeff y)
{
    QSeries::Coeff out = 0;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("q-series coefficient overflow in multiplication");
    return out;
}

void require_same_degree(const QSeries& x, const QSeries& y)
{
    if (x.max_degree() != y.max_degree())
        throw DegreeMismatch("q-series truncation degrees differ: " + std::to_string(x.max_degree()) + " vs "
                             + std::to_string(y.max_degree()));
}

void require_degree(int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("q-series truncation degree must be >= 0, got " + std::to_string(max_degree));
}

// In-place division by (1 - q^j).
void divide_by_one_minus(std::vector<QSeries::Coeff>& c, int j)
{
    for (std::size_t d = static_cast<std::size_t>(j); d < c.size(); ++d)
        c[d] = checked_add(c[d], c[d - static_cast<std::size_t>(j)]);
}

} // namespace

QSeries::QSeries(int max_degree)
{
    require_degree(max_degree);
    coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

QSeries::QSeries(int max_degree, std::vector<Coeff> coeffs)
    : QSeries(max_degree)
{
    if (coeffs.size() > coeffs_.size())
        coeffs.resize(coeffs_.size());
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

QSeries QSeries::one(int max_degree) { return monomial(0, max_degree); }

QSeries QSeries::monomial(int degree, int max_degree, Coeff c)
{
    QSeries s(max_degree);
    if (degree >= 0 && degree <= max_degree)
        s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

bool QSeries::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

QSeries QSeries::shifted(int k) const
{
    QSeries out(max_degree());
    for (int d = 0; d + k <= max_degree(); ++d)
        if (d + k >= 0)
            out.coeffs_[static_cast<std::size_t>(d + k)] = coeffs_[static_cast<std::size_t>(d)];
    return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs)
{
    require_same_degree(*this, rhs);
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        coeffs_[d] = checked_add(coeffs_[d], rhs.coeffs_[d]);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs)
{
    require_same_degree(*this, rhs);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (__builtin_sub_overflow(coeffs_[d], rhs.coeffs_[d], &coeffs_[d]))
            throw std::overflow_error("q-series coefficient overflow in subtraction");
    }
    return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs)
{
    require_same_degree(lhs, rhs);
    const std::size_t n = lhs.coeffs_.size();
    QSeries out(lhs.max_degree());
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(lhs.coeffs_[i], rhs.coeffs_[j]));
    }
    return out;
}

std::string QSeries::to_string() const
{
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Coeff c = coeffs_[d];
        if (c == 0)
            continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        // magnitude without negating INT64_MIN
        out += c < 0 ? std::to_string(-static_cast<unsigned long long>(c)) : std::to_string(c);
        if (d == 1)
            out += "*q";
        else if (d > 1)
            out += "*q^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

QSeries q_binomial(int n, int k, int max_degree)
{
    if (k < 0 || k > n)
        throw std::invalid_argument("q_binomial requires 0 <= k <= n, got n=" + std::to_string(n)
                                    + " k=" + std::to_string(k));
    // row[j] holds [i, j] while sweeping i = 0..n
    std::vector<QSeries> row;
    row.reserve(static_cast<std::size_t>(k) + 1);
    row.push_back(QSeries::one(max_degree));
    for (int i = 1; i <= n; ++i) {
        if (i <= k)
            row.push_back(QSeries::one(max_degree)); // [i, i]
        const int top = std::min(i - 1, k);
        for (int j = top; j >= 1; --j)
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
    return row[static_cast<std::size_t>(k)];
}

QSeries q_pochhammer_inv(int s, int max_degree)
{
    if (s < 1)
        throw std::invalid_argument("q_pochhammer_inv requires s >= 1, got " + std::to_string(s));
    std::vector<QSeries::Coeff> c(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
    c[0] = 1;
    // factors with lowest term above the truncation degree contribute nothing
    for (int j = s; j <= max_degree; ++j)
        divide_by_one_minus(c, j);
    return QSeries(max_degree, std::move(c));
}

QSeries q_factorial_inv(int m, int max_degree)
{
    std::vector<QSeries::Coeff> c(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
    c[0] = 1;
    for (int j = 1; j <= std::min(m, max_degree); ++j)
        divide_by_one_minus(c, j);
    return QSeries(max_degree, std::move(c));
}

QSeries gf_f(int a, int l, int m, int max_degree)
{
    if (a < 0 || l < 0 || m < 0)
        throw std::invalid_argument("gf_f requires a, l, m >= 0");
    const long long lowest = static_cast<long long>(m + 1) * (l + 1) + a;
    if (lowest > max_degree)
        return QSeries::zero(max_degree);
    const QSeries product = q_pochhammer_inv(a + 1, max_degree) * q_binomial(m + a, a, max_degree)
                            * q_binomial(l + a, a, max_degree);
    return product.shifted(static_cast<int>(lowest));
}

QSeries remark_identity_gap(int a, int m, int max_degree)
{
    if (a < 0 || m < 0)
        throw std::invalid_argument("remark_identity_gap requires a, m >= 0");
    QSeries sum = QSeries::zero(max_degree);
    for (int t = 0; static_cast<long long>(t) * (a + 1) <= max_degree; ++t) {
        if (m == 0) {
            if (t == 0)
                sum += QSeries::one(max_degree);
            continue;
        }
        sum += q_binomial(m - 1 + t, t, max_degree).shifted(t * (a + 1));
    }
    return q_factorial_inv(m, max_degree) - q_binomial(m + a, a, max_degree) * sum;
}

} // namespace hookswap
