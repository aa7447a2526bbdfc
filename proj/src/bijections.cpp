#include "hookswap/bijections.hpp"

#include "hookswap/rimhook.hpp"

#include <algorithm>
#include <string>

namespace hookswap {

namespace {

std::string ctx_string(const Context& c)
{
    return "(a,l,m)=(" + std::to_string(c.a) + "," + std::to_string(c.l) + "," + std::to_string(c.m) + ")";
}

void check(bool ok, const std::string& what, const Context& c)
{
    if (!ok)
        throw ValidationError(what + " for context " + ctx_string(c));
}

void check_common(const Partition& B, const Partition& D, const Partition& E, const Context& c)
{
    check(c.a >= 0 && c.l >= 0 && c.m >= 0, "context entries must be nonnegative", c);
    check(B.length() <= static_cast<std::size_t>(c.l) && B.largest() <= c.a,
          "B must fit inside an l x a rectangle, got (" + to_string(B) + ")", c);
    check(D == rectangle(c.l + 1, c.m + 1), "D must be an (l+1) x (m+1) rectangle, got (" + to_string(D) + ")", c);
    check(E == rectangle(c.a > 0 ? 1 : 0, c.a), "E must be a single part equal to a (empty if a=0), got ("
                                                    + to_string(E) + ")",
          c);
}

} // namespace

Partition rectangle(int rows, int width)
{
    if (rows <= 0 || width <= 0)
        return {};
    return Partition::trusted(std::vector<int>(static_cast<std::size_t>(rows), width));
}

std::int64_t Quintuple::weight() const noexcept
{
    return A.weight() + B.weight() + C.weight() + D.weight() + E.weight();
}

void Quintuple::validate() const
{
    check_common(B, D, E, ctx);
    check(A.largest() <= ctx.m, "A must have largest part <= m, got (" + to_string(A) + ")", ctx);
    check(C.empty() || C.smallest() >= ctx.m + ctx.a + 1, "C must have every part >= m+a+1, got (" + to_string(C) + ")",
          ctx);
}

std::int64_t TildeQuintuple::weight() const noexcept
{
    return At.weight() + B.weight() + Ct.weight() + D.weight() + E.weight();
}

void TildeQuintuple::validate() const
{
    check_common(B, D, E, ctx);
    check(At.length() <= static_cast<std::size_t>(ctx.a) && At.largest() <= ctx.m,
          "At must fit inside an a x m rectangle, got (" + to_string(At) + ")", ctx);
    check(Ct.empty() || Ct.smallest() >= ctx.a + 1, "Ct must have every part >= a+1, got (" + to_string(Ct) + ")", ctx);
}

Quintuple decompose(const PointedPartition& pp)
{
    const Partition& p = pp.partition();
    const auto [x, y] = pp.cell();
    const StatTuple s = stats(p, pp.cell());
    const auto& rows = p.vec();
    const auto row_y = static_cast<std::size_t>(y); // 1-based row of the cell
    const auto leg = static_cast<std::size_t>(s.leg);

    Quintuple q;
    q.ctx = {s.arm, s.leg, s.coarm};
    q.C = Partition::trusted({rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(row_y - 1)});
    q.D = rectangle(s.leg + 1, x);
    q.E = rectangle(s.arm > 0 ? 1 : 0, s.arm);
    std::vector<int> b;
    for (std::size_t r = row_y + 1; r <= row_y + leg; ++r)
        if (rows[r - 1] > x)
            b.push_back(rows[r - 1] - x);
    q.B = Partition::trusted(std::move(b));
    q.A = Partition::trusted({rows.begin() + static_cast<std::ptrdiff_t>(row_y + leg), rows.end()});
    return q;
}

PointedPartition recompose(const Quintuple& q)
{
    q.validate();
    const auto& [a, l, m] = q.ctx;
    std::vector<int> rows = q.C.vec();
    rows.push_back(m + 1 + a);
    for (int i = 1; i <= l; ++i)
        rows.push_back(m + 1 + q.B.part(static_cast<std::size_t>(i)));
    rows.insert(rows.end(), q.A.vec().begin(), q.A.vec().end());
    return PointedPartition(Partition::trusted(std::move(rows)), Cell{m + 1, static_cast<int>(q.C.length()) + 1});
}

TildeQuintuple to_tilde(const Quintuple& q)
{
    q.validate();
    PealingResult pealed = peal(q.A, q.ctx.a, q.ctx.m);
    std::vector<int> ct = q.C.vec();
    ct.insert(ct.end(), pealed.hook_lengths.rbegin(), pealed.hook_lengths.rend());
    return TildeQuintuple{std::move(pealed.reduced), q.B, Partition::trusted(std::move(ct)), q.D, q.E, q.ctx};
}

Quintuple from_tilde(const TildeQuintuple& tq)
{
    tq.validate();
    const int threshold = tq.ctx.a + tq.ctx.m;
    const auto& ct = tq.Ct.vec();
    const auto split = std::find_if(ct.begin(), ct.end(), [threshold](int part) { return part <= threshold; });
    std::vector<int> hook_lengths(std::make_reverse_iterator(ct.end()), std::make_reverse_iterator(split));
    Partition A = unpeal(tq.At, hook_lengths, tq.ctx.a, tq.ctx.m);
    return Quintuple{std::move(A), tq.B, Partition::trusted({ct.begin(), split}), tq.D, tq.E, tq.ctx};
}

TildeQuintuple rho(const TildeQuintuple& tq)
{
    tq.validate();
    return TildeQuintuple{conjugate(tq.B), conjugate(tq.At), tq.Ct, conjugate(tq.D), tq.E,
                          Context{tq.ctx.a, tq.ctx.m, tq.ctx.l}};
}

PhiTrace phi_trace(const PointedPartition& pp)
{
    Quintuple q = decompose(pp);
    TildeQuintuple tq = to_tilde(q);
    TildeQuintuple flipped = rho(tq);
    Quintuple back = from_tilde(flipped);
    PointedPartition result = recompose(back);
    return PhiTrace{std::move(q), std::move(tq), std::move(flipped), std::move(back), std::move(result)};
}

PointedPartition phi(const PointedPartition& pp)
{
    return recompose(from_tilde(rho(to_tilde(decompose(pp)))));
}

PointedPartition tau(const PointedPartition& pp, int arm2, int coarm2)
{
    const StatTuple s = stats(pp);
    if (arm2 < 0 || coarm2 < 0 || s.arm + s.coarm != arm2 + coarm2) {
        throw ValidationError("tau requires arm + coarm == arm' + coarm' with nonnegative targets: (" +
                              std::to_string(s.arm) + "," + std::to_string(s.coarm) + ") -> (" + std::to_string(arm2)
                              + "," + std::to_string(coarm2) + ")");
    }
    return PointedPartition(pp.partition(), Cell{coarm2 + 1, pp.cell().y});
}

PointedPartition zeta(const PointedPartition& pp, int arm2, int leg2)
{
    const StatTuple s = stats(pp);
    if (arm2 < 0 || leg2 < 0 || s.arm + s.leg != arm2 + leg2) {
        throw ValidationError("zeta requires arm + leg == arm' + leg' with nonnegative targets: (" +
                              std::to_string(s.arm) + "," + std::to_string(s.leg) + ") -> (" + std::to_string(arm2)
                              + "," + std::to_string(leg2) + ")");
    }
    return phi(tau(phi(pp), arm2, leg2));
}

} // namespace hookswap
